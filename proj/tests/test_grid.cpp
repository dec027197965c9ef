#include "doctest.h"

#include <cmath>
#include <memory>

#include "renorm/errors.hpp"
#include "renorm/solver/field.hpp"

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

} // namespace

TEST_CASE("grid geometry: punctured disk") {
    DomainSpec spec{Domain::disk(1.0), {{0.0, 0.0}}, 0.1, 1.0 / 64};
    const Grid grid = buildGrid(spec);
    REQUIRE(grid.vertexCount() > 0);
    for (const GridVertex& v : grid.vertices) {
        const double r = std::hypot(v.x, v.y);
        CHECK(r >= 0.1 - 1e-9);
        CHECK(r <= 1.0 + 1e-9);
        if (v.curve == 0) CHECK(r == doctest::Approx(1.0).epsilon(1e-12));
        if (v.curve == 1) CHECK(r == doctest::Approx(0.1).epsilon(1e-12));
    }
    CHECK(grid.innerBoundaryCount[0] >= 16);
    for (const GridEdge& e : grid.edges) CHECK(e.w >= 0.0);
}

TEST_CASE("grid rejects rho above rhoBar and under-resolved circles") {
    CHECK_THROWS_AS(buildGrid({Domain::disk(1.0), {{0.5, 0.0}}, 0.6, 1.0 / 64}), ConfigInvalid);
    CHECK_THROWS_AS(buildGrid({Domain::disk(1.0), {{0.0, 0.0}}, 0.02, 1.0 / 64}),
                    ResolutionTooCoarse);
}

TEST_CASE("grid with two disjoint excised circles") {
    DomainSpec spec{Domain::disk(1.0), {{-0.3, 0.0}, {0.3, 0.0}}, 0.1, 1.0 / 64};
    const Grid grid = buildGrid(spec);
    CHECK(grid.innerBoundaryCount.size() == 2);
    CHECK(grid.innerBoundaryCount[0] >= 16);
    CHECK(grid.innerBoundaryCount[1] >= 16);
    for (const GridVertex& v : grid.vertices) {
        CHECK(std::hypot(v.x + 0.3, v.y) >= 0.1 - 1e-9);
        CHECK(std::hypot(v.x - 0.3, v.y) >= 0.1 - 1e-9);
    }
}

TEST_CASE("grid on a polygon domain") {
    const Domain square = Domain::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    DomainSpec spec{square, {{0.0, 0.0}}, 0.15, 1.0 / 32};
    const Grid grid = buildGrid(spec);
    for (const GridVertex& v : grid.vertices) {
        CHECK(v.x >= -1.0 - 1e-9);
        CHECK(v.x <= 1.0 + 1e-9);
        CHECK(std::abs(v.y) <= 1.0 + 1e-9);
    }
    CHECK(grid.innerBoundaryCount[0] >= 16);
}

TEST_CASE("constant boundary data relaxes to zero energy") {
    auto grid = std::make_shared<Grid>(
        buildGrid({Domain::disk(1.0), {{0.0, 0.0}}, 0.15, 1.0 / 32}));
    GridField field(grid, TargetModel::circle(), circleDegree(0), {circleDegree(0)});
    CHECK(field.state().energy() == doctest::Approx(0.0).epsilon(1e-14));
    RelaxConfig cfg;
    field.state().relax(cfg);
    CHECK(field.state().energy() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("sampled degree-1 vortex energy matches pi log(1/rho) within 1%") {
    for (double h : {1.0 / 64, 1.0 / 128}) {
        auto grid =
            std::make_shared<Grid>(buildGrid({Domain::disk(1.0), {{0.0, 0.0}}, 0.2, h}));
        GridField field(grid, TargetModel::circle(), circleDegree(1), {circleDegree(1)});
        const double exact = kPi * std::log(1.0 / 0.2);
        CHECK(std::abs(field.state().energy() - exact) / exact <= 0.01);
    }
}

TEST_CASE("relaxed annulus vortex: energy, monotone sweeps, manifold distance") {
    auto grid = std::make_shared<Grid>(
        buildGrid({Domain::disk(1.0), {{0.0, 0.0}}, 0.2, 1.0 / 64}));
    GridField field(grid, TargetModel::circle(), circleDegree(1), {circleDegree(1)});
    RelaxConfig cfg;
    cfg.omega = 1.9;
    field.state().relax(cfg);

    const double exact = kPi * std::log(1.0 / 0.2);
    CHECK(std::abs(field.state().energy() - exact) / exact <= 0.01);
    const auto& history = field.state().energyHistory();
    for (size_t s = 1; s < history.size(); ++s)
        CHECK(history[s] <= history[s - 1] + 1e-9 * (1 + std::abs(history[s - 1])));
    CHECK(field.state().maxDistToManifold() <= 1e-12);
    CHECK(field.holonomyAround(0.0, 0.0, 0.3) == 1);
}

TEST_CASE("halving h improves the converged energy") {
    const double exact = kPi * std::log(1.0 / 0.2);
    double errCoarse = 0.0, errFine = 0.0;
    for (double h : {1.0 / 32, 1.0 / 64}) {
        auto grid =
            std::make_shared<Grid>(buildGrid({Domain::disk(1.0), {{0.0, 0.0}}, 0.2, h}));
        GridField field(grid, TargetModel::circle(), circleDegree(1), {circleDegree(1)});
        RelaxConfig cfg;
        field.state().relax(cfg);
        const double err = std::abs(field.state().energy() - exact);
        (h == 1.0 / 32 ? errCoarse : errFine) = err;
    }
    CHECK(errFine <= errCoarse);
}

TEST_CASE("threaded red-black sweeps reach the same minimum") {
    auto grid = std::make_shared<Grid>(
        buildGrid({Domain::disk(1.0), {{0.0, 0.0}}, 0.2, 1.0 / 32}));
    GridField sequential(grid, TargetModel::circle(), circleDegree(1), {circleDegree(1)});
    GridField threaded(grid, TargetModel::circle(), circleDegree(1), {circleDegree(1)});
    RelaxConfig cfg;
    sequential.state().relax(cfg);
    RelaxConfig cfg2 = cfg;
    cfg2.threads = 2;
    threaded.state().relax(cfg2);
    CHECK(threaded.state().energy() ==
          doctest::Approx(sequential.state().energy()).epsilon(1e-7));
}

TEST_CASE("quotient holonomy of an initial gauge field") {
    auto grid = std::make_shared<Grid>(
        buildGrid({Domain::disk(1.0), {{0.0, 0.0}}, 0.15, 1.0 / 32}));
    const TargetModel target = TargetModel::quotient("q8");
    // Charge class of i: the quaternion group's x-rotation.
    LoopSpec loop;
    loop.deckElement = target.deckGroup()->indexOf(algebra::Quaternion::i());
    REQUIRE(loop.deckElement >= 0);
    GridField field(grid, target, loop, {loop});
    CHECK(field.holonomyAround(0.0, 0.0, 0.4) == loopClassId(target, loop));
}
