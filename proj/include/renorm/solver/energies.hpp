#ifndef RENORM_SOLVER_ENERGIES_HPP
#define RENORM_SOLVER_ENERGIES_HPP

#include <memory>

#include "renorm/solver/field.hpp"

namespace renorm::solver {

// One constrained minimisation problem: Dirichlet data `outerLoop` on the
// outer boundary and charge loops on the excised circles around the listed
// positions.  The domain is simply connected; the excised disks provide the
// inner boundary components.
struct ProblemSpec {
    Domain domain;
    TargetModel target = TargetModel::circle();
    LoopSpec outerLoop;
    std::vector<std::array<double, 2>> positions;
    std::vector<LoopSpec> charges;
    double h = 1.0 / 64.0;
};

struct SolveConfig {
    RelaxConfig relax;
    int restarts = 3;
    unsigned seed = 12345;
    double perturbAmplitude = 0.3;
};

struct SolveOutcome {
    double energy = 0.0;
    int sweeps = 0;
    std::shared_ptr<Grid> grid;
    std::shared_ptr<GridField> field;
};

// Rejects trivial charges and charge lists that are not a topological
// resolution of the outer trace (via the topology module where the target's
// manifold is catalogued).
void checkCompatibility(const ProblemSpec& spec);

// Converged discrete energy with the geometric (fixed-trace) constraint;
// multi-start over perturbed initialisations, best kept, holonomy verified.
SolveOutcome solveGeometric(const ProblemSpec& spec, double rho, const SolveConfig& cfg,
                            const GridField* warmStart = nullptr);
double geometricEnergyAt(const ProblemSpec& spec, double rho, const SolveConfig& cfg);

// Minimum of the geometric energy over the finite family of minimising
// geodesics homotopic to each charge: conjugated deck directions (quotients)
// and a rotation-offset grid of `phases` samples refined once.
double topologicalEnergyAt(const ProblemSpec& spec, double rho, const SolveConfig& cfg,
                           int phases = 32);

enum class EnergyMode { Geometric, Topological };

struct EnergySample {
    double rho = 0.0;
    double energy = 0.0;
};

struct EnergyReport {
    std::vector<EnergySample> samples;
    double fittedSlope = 0.0;       // A in E = A log(1/rho) + W
    double renormalised = 0.0;      // W
    double fitResidual = 0.0;
    double expectedSlope = 0.0;     // sum of lambda^2 / (4 pi)
    bool slopeWarning = false;      // |A - expected| > 5 % relative
    std::vector<std::array<double, 2>> fluxes;   // stress-energy flux per singularity
    std::shared_ptr<GridField> finestField;
    std::shared_ptr<Grid> finestGrid;
};

// Solves along the rho schedule (entries below 3h or above rhoBar are
// dropped), fits E = A log(1/rho) + W and evaluates the stress-energy flux on
// the finest field.
EnergyReport renormalisedEnergy(const ProblemSpec& spec, std::vector<double> rhoSchedule,
                                EnergyMode mode, const SolveConfig& cfg);

std::vector<double> defaultRhoSchedule();

// Flux of the stress-energy tensor through the circle (cx, cy, radius),
// integrated over 256 quadrature points with central-difference gradients of
// the bilinear interpolant.
std::array<double, 2> stressFlux(const GridField& field, double cx, double cy, double radius);

} // namespace renorm::solver

#endif
