#include "doctest.h"

#include <cmath>

#include "renorm/errors.hpp"
#include "renorm/solver/energies.hpp"
#include "renorm/solver/synharmony.hpp"

using namespace renorm;
using namespace renorm::solver;

namespace {

const double kPi = std::acos(-1.0);

LoopSpec circleDegree(int d, double phase = 0.0) {
    LoopSpec l;
    l.degree = d;
    l.phase = phase;
    return l;
}

ProblemSpec diskProblem(const TargetModel& target, const LoopSpec& outer, const LoopSpec& charge,
                        double h, double ax = 0.0) {
    ProblemSpec spec;
    spec.domain = Domain::disk(1.0);
    spec.target = target;
    spec.outerLoop = outer;
    spec.positions = {{ax, 0.0}};
    spec.charges = {charge};
    spec.h = h;
    return spec;
}

SolveConfig fastConfig() {
    SolveConfig cfg;
    cfg.restarts = 1;
    cfg.relax.omega = 1.9;
    return cfg;
}

} // namespace

TEST_CASE("incompatible charges are rejected") {
    // Outer degree 1 against a single degree-2 singularity.
    const auto spec =
        diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(2), 1.0 / 32);
    CHECK_THROWS_AS(geometricEnergyAt(spec, 0.15, fastConfig()), IncompatibleTopology);
}

TEST_CASE("trivial charges are rejected") {
    const auto spec =
        diskProblem(TargetModel::circle(), circleDegree(0), circleDegree(0), 1.0 / 32);
    CHECK_THROWS_AS(geometricEnergyAt(spec, 0.15, fastConfig()), TrivialClass);
}

TEST_CASE("renormalised energy of the centered disk vortex (coarse)") {
    const auto spec =
        diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1), 1.0 / 32);
    const auto report =
        renormalisedEnergy(spec, {0.2, 0.1}, EnergyMode::Geometric, fastConfig());
    REQUIRE(report.samples.size() == 2);
    CHECK(report.expectedSlope == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(std::abs(report.fittedSlope - kPi) <= 0.35);
    CHECK(std::abs(report.renormalised) <= 0.3);
    CHECK(report.fluxes.size() == 1);
}

TEST_CASE("rho schedule entries below 3h are dropped") {
    const auto spec =
        diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1), 1.0 / 32);
    CHECK_THROWS_AS(
        renormalisedEnergy(spec, {0.2, 0.05}, EnergyMode::Geometric, fastConfig()),
        ConfigInvalid);
    const auto report =
        renormalisedEnergy(spec, {0.2, 0.1, 0.05}, EnergyMode::Geometric, fastConfig());
    CHECK(report.samples.size() == 2);   // 0.05 < 3h filtered out
}

TEST_CASE("topological energy never exceeds the geometric one") {
    for (double ax : {0.0, 0.3}) {
        const auto spec =
            diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1), 1.0 / 32, ax);
        for (double rho : {0.2, 0.12}) {
            const double eg = geometricEnergyAt(spec, rho, fastConfig());
            const double et = topologicalEnergyAt(spec, rho, fastConfig(), 8);
            CHECK(et <= eg + 1e-9);
        }
    }
}

TEST_CASE("quotient target: orthorhombic x-rotation vortex slope") {
    const TargetModel target = TargetModel::quotient("q8");
    LoopSpec loop;
    loop.deckElement = target.deckGroup()->indexOf(algebra::Quaternion::i());
    const auto spec = diskProblem(target, loop, loop, 1.0 / 32);
    const auto report =
        renormalisedEnergy(spec, {0.2, 0.1}, EnergyMode::Geometric, fastConfig());
    // lambda(class of i) = pi, so the slope is pi/4.
    CHECK(report.expectedSlope == doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(std::abs(report.fittedSlope - kPi / 4) <= 0.12);
}

TEST_CASE("flat torus vortex slope") {
    LoopSpec loop;
    loop.degree = 1;
    loop.degree2 = 0;
    const auto spec = diskProblem(TargetModel::flatTorus(), loop, loop, 1.0 / 32);
    const auto report =
        renormalisedEnergy(spec, {0.2, 0.1}, EnergyMode::Geometric, fastConfig());
    CHECK(report.expectedSlope == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(std::abs(report.fittedSlope - kPi) <= 0.35);
}

TEST_CASE("rp2 sigma-composed data scales the circle energy by exactly 1/4") {
    const auto circle =
        diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1), 1.0 / 32, 0.2);
    LoopSpec sigma;
    sigma.degree = 1;
    const auto rp2 = diskProblem(TargetModel::rp2(), sigma, sigma, 1.0 / 32, 0.2);
    for (double rho : {0.2, 0.1}) {
        const double ec = geometricEnergyAt(circle, rho, fastConfig());
        const double er = geometricEnergyAt(rp2, rho, fastConfig());
        CHECK(er / ec == doctest::Approx(0.25).epsilon(1e-6));
    }
}

TEST_CASE("rp2: fixed geodesic data against the trace-optimised energy") {
    // The minimising geodesics homotopic to sigma are all synharmonic, so the
    // fixed-trace and optimised-trace energies agree up to discretisation.
    LoopSpec sigma;
    sigma.degree = 1;
    const auto base = diskProblem(TargetModel::rp2(), sigma, sigma, 1.0 / 32);
    const double fixedTrace = geometricEnergyAt(base, 0.15, fastConfig());
    const double optimised = topologicalEnergyAt(base, 0.15, fastConfig(), 8);
    CHECK(optimised <= fixedTrace + 1e-9);
    CHECK(std::abs(fixedTrace - optimised) <= 0.05 * std::abs(fixedTrace));
}

TEST_CASE("stress flux vanishes for the centered vortex") {
    const auto spec =
        diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1), 1.0 / 32);
    const SolveOutcome out = solveGeometric(spec, 0.15, fastConfig());
    const auto flux = stressFlux(*out.field, 0.0, 0.0, 0.4);
    CHECK(std::hypot(flux[0], flux[1]) <= 0.1 * kPi);
    CHECK_THROWS_AS(stressFlux(*out.field, 0.0, 0.0, 0.05), CircleOutOfDomain);
}

TEST_CASE("stress flux points along the renormalised-energy gradient") {
    auto at = [&](double ax) {
        const auto spec =
            diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1), 1.0 / 48, ax);
        return renormalisedEnergy(spec, {0.2, 0.1}, EnergyMode::Geometric, fastConfig());
    };
    const auto mid = at(0.3);
    const double dWda = (at(0.36).renormalised - at(0.24).renormalised) / 0.12;
    const double tau = -mid.fluxes[0][0];
    CHECK(dWda > 0.0);
    CHECK(tau > 0.0);
    CHECK(std::abs(tau - dWda) <= 0.4 * std::abs(dWda));
}

TEST_CASE("renormalised energy is empirically Lipschitz in the position") {
    auto wAt = [&](double ax, double h) {
        const auto spec =
            diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1), h, ax);
        return renormalisedEnergy(spec, {0.2, 0.1}, EnergyMode::Geometric, fastConfig())
            .renormalised;
    };
    // Difference quotients stay bounded and stable under h-refinement for
    // positions at distance >= 0.2 from the boundary.
    const double coarse = std::abs(wAt(0.3, 1.0 / 48) - wAt(0.0, 1.0 / 48)) / 0.3;
    const double fine = std::abs(wAt(0.3, 1.0 / 64) - wAt(0.0, 1.0 / 64)) / 0.3;
    CHECK(coarse <= 5.0);
    CHECK(std::abs(fine - coarse) <= 0.5 * std::max(coarse, 0.5));
}

TEST_CASE("renormalised energy grows towards the boundary") {
    auto wAt = [&](double ax) {
        const auto spec = diskProblem(TargetModel::circle(), circleDegree(1), circleDegree(1),
                                      1.0 / 32, ax);
        return renormalisedEnergy(spec, {0.15, 0.1}, EnergyMode::Geometric, fastConfig())
            .renormalised;
    };
    const double w0 = wAt(0.0), w1 = wAt(0.3), w2 = wAt(0.6);
    CHECK(w1 > w0);
    CHECK(w2 > w1);
}

TEST_CASE("synharmony: identical traces cost nothing") {
    const auto result = synharmonyEstimate(TargetModel::circle(), circleDegree(1),
                                           circleDegree(1), {0.5, 1, 2}, 64);
    CHECK(result.estimate <= 1e-2);
    CHECK(result.estimate >= -1e-9);
}

TEST_CASE("synharmony: rotated circle geodesic follows the pi^3/(4T) law") {
    const auto result = synharmonyEstimate(TargetModel::circle(), circleDegree(1),
                                           circleDegree(1, kPi / 2), {8.0}, 96);
    const double analytic = kPi * kPi * kPi / (4 * 8.0);
    CHECK(result.estimate == doctest::Approx(analytic).epsilon(0.05));
    CHECK(result.estimate >= -1e-9);
}

TEST_CASE("synharmony: estimates decay with T and reject non-homotopic loops") {
    const auto slow = synharmonyEstimate(TargetModel::circle(), circleDegree(1),
                                         circleDegree(1, kPi / 2), {2.0}, 64);
    const auto fast = synharmonyEstimate(TargetModel::circle(), circleDegree(1),
                                         circleDegree(1, kPi / 2), {2.0, 8.0}, 64);
    CHECK(fast.estimate < slow.estimate);
    CHECK_THROWS_AS(synharmonyEstimate(TargetModel::circle(), circleDegree(1), circleDegree(2),
                                       {1.0}, 64),
                    NonHomotopicLoops);
}

TEST_CASE("synharmony: conjugated quotient geodesics approach synharmony") {
    const TargetModel target = TargetModel::quotient("q8");
    LoopSpec gamma;
    gamma.deckElement = target.deckGroup()->indexOf(algebra::Quaternion::i());
    const LoopSpec beta = conjugatedLoop(
        target, gamma, target.deckGroup()->indexOf(algebra::Quaternion::j()));
    REQUIRE(loopClassId(target, gamma) == loopClassId(target, beta));
    const auto near = synharmonyEstimate(target, gamma, beta, {4.0}, 64);
    const auto far = synharmonyEstimate(target, gamma, beta, {4.0, 16.0}, 64);
    CHECK(near.estimate >= -1e-9);
    CHECK(far.estimate < near.estimate);
}
