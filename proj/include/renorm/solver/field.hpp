#ifndef RENORM_SOLVER_FIELD_HPP
#define RENORM_SOLVER_FIELD_HPP

#include <functional>
#include <memory>
#include <vector>

#include "renorm/solver/grid.hpp"
#include "renorm/solver/loops.hpp"
#include "renorm/solver/target.hpp"

namespace renorm::solver {

struct RelaxConfig {
    double tol = 1e-10;       // relative energy decrease per sweep
    int maxSweeps = 60000;
    double omega = 1.9;       // over-relaxation trial step; 1 disables
    int threads = 1;          // >1 switches to red-black sweeps
};

enum class EnergyMetric {
    Chordal,     // embedded squared distances (the grid functional)
    Intrinsic,   // geodesic squared distances (the cylinder functional)
};

// Discrete manifold-valued map on an arbitrary weighted vertex graph with a
// Dirichlet mask.  Nonlinear Gauss-Seidel with an over-relaxed trial step;
// every vertex update and every gauge refresh is locally non-increasing, so
// the sweep energy never goes up.
class FieldState {
public:
    FieldState(const TargetModel& target, int nVertices, std::vector<GridEdge> edges,
               std::vector<char> fixed, EnergyMetric metric = EnergyMetric::Chordal);

    const TargetModel& target() const { return target_; }
    int vertexCount() const { return nVertices_; }
    double* value(int v) { return values_.data() + static_cast<size_t>(v) * dim_; }
    const double* value(int v) const { return values_.data() + static_cast<size_t>(v) * dim_; }
    const std::vector<GridEdge>& edges() const { return edges_; }
    int gauge(int edgeIdx) const { return gauges_[static_cast<size_t>(edgeIdx)]; }

    double energy() const;
    void refreshGauges();
    // Runs sweeps until the relative energy decrease drops below cfg.tol;
    // returns the sweep count.  Throws NonConvergence when the budget is
    // exhausted with the decrease still above 100 * tol.
    int relax(const RelaxConfig& cfg);

    double maxDistToManifold() const;
    const std::vector<double>& energyHistory() const { return energyHistory_; }
    // Colouring of the free vertices for the threaded sweep path: 0 and 1 are
    // the independent red-black groups, 2 is swept sequentially afterwards.
    void setColors(const std::vector<char>& colors);
    // Marks edges that relax with intrinsic distances regardless of the field
    // metric (anti-pinning guard for free traces); chordalEnergy() always
    // reports the plain embedded functional with refreshed gauges.
    void setIntrinsicEdges(std::vector<char> mask);
    double chordalEnergy();

private:
    void sweepRange(const std::vector<int>& order, double omega);
    double localEnergy(int v, const double* candidate) const;
    bool edgeIntrinsic(size_t e) const {
        return metric_ == EnergyMetric::Intrinsic ||
               (!intrinsicEdge_.empty() && intrinsicEdge_[e]);
    }

    TargetModel target_;
    EnergyMetric metric_;
    int dim_;
    int nVertices_;
    std::vector<double> values_;
    std::vector<GridEdge> edges_;
    std::vector<int> gauges_;
    std::vector<char> fixed_;
    std::vector<char> intrinsicEdge_;
    // CSR adjacency over all vertices: edge index plus orientation flag.
    std::vector<int> adjStart_;
    std::vector<int> adjEdge_;
    std::vector<int> adjOther_;
    std::vector<char> adjForward_;
    std::vector<int> freeOrder_;
    std::vector<int> colorOrder_[3];   // red-black split plus a sequential group
    std::vector<double> energyHistory_;
};

// Grid-backed field with Dirichlet data from parametric loops: `outer` on the
// outer boundary and charges[i] evaluated in the angle around singularity i.
class GridField {
public:
    // freeInnerTraces leaves the values on the excised circles free (the
    // topological-energy constraint); the loops still seed their initial
    // values and fix the intended homotopy classes.
    GridField(std::shared_ptr<const Grid> grid, const TargetModel& target, const LoopSpec& outer,
              const std::vector<LoopSpec>& charges, bool freeInnerTraces = false);

    const Grid& grid() const { return *grid_; }
    FieldState& state() { return state_; }
    const FieldState& state() const { return state_; }

    void setBoundaryValues();
    // Product of the per-singularity loop fields in the angle around each
    // singularity: matches every excised circle exactly and the right
    // homotopy classes everywhere.
    void initAngular();
    void perturb(unsigned seed, double amplitude);

    // Holonomy of the current field around the circle (center, radius): deck
    // class index for quotients, winding number for the circle, first-factor
    // winding for the torus, orientation class for RP2.
    int holonomyAround(double cx, double cy, double radius) const;

private:
    std::shared_ptr<const Grid> grid_;
    TargetModel target_;
    LoopSpec outer_;
    std::vector<LoopSpec> charges_;
    FieldState state_;
};

} // namespace renorm::solver

#endif
