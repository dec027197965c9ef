#include "doctest.h"

#include <cmath>
#include <random>

#include "renorm/balls/balls.hpp"
#include "renorm/errors.hpp"

using namespace renorm;
using namespace renorm::balls;

namespace {

const double kPi = std::acos(-1.0);

bool contained(const Ball& inner, const Ball& outer, double tol = 1e-9) {
    return std::hypot(inner.cx - outer.cx, inner.cy - outer.cy) + inner.r <= outer.r + tol;
}

BallFamily randomFamily(std::mt19937& rng, int maxBalls) {
    std::uniform_int_distribution<int> count(1, maxBalls);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    std::uniform_real_distribution<double> rad(0.01, 1.2);
    BallFamily f;
    const int n = count(rng);
    for (int b = 0; b < n; ++b) f.balls.push_back({pos(rng), pos(rng), rad(rng)});
    return f;
}

} // namespace

TEST_CASE("merge formula on a single overlapping pair") {
    BallFamily f{{{0, 0, 1}, {1.5, 0, 1}}};
    const BallFamily merged = mergeBalls(f);
    REQUIRE(merged.balls.size() == 1);
    CHECK(merged.balls[0].cx == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(merged.balls[0].cy == doctest::Approx(0.0));
    CHECK(merged.balls[0].r == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("disjoint families are unchanged") {
    BallFamily f{{{0, 0, 1}, {5, 0, 1}}};
    const BallFamily merged = mergeBalls(f);
    REQUIRE(merged.balls.size() == 2);
    CHECK(merged.totalDiameter() == doctest::Approx(4.0));
}

TEST_CASE("chain of three overlapping unit balls merges to one") {
    BallFamily f{{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}};
    const BallFamily merged = mergeBalls(f);
    REQUIRE(merged.balls.size() == 1);
    CHECK(merged.balls[0].r == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(merged.totalDiameter() == doctest::Approx(6.0).epsilon(1e-14));
    for (const Ball& b : f.balls) CHECK(contained(b, merged.balls[0]));
}

TEST_CASE("merge conserves diameter and contains every input (randomised)") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const BallFamily f = randomFamily(rng, 12);
        const BallFamily merged = mergeBalls(f);
        CHECK(merged.pairwiseDisjoint());
        CHECK(merged.totalDiameter() ==
              doctest::Approx(f.totalDiameter()).epsilon(1e-12));
        for (const Ball& b : f.balls) {
            bool covered = false;
            for (const Ball& big : merged.balls) covered = covered || contained(b, big);
            CHECK(covered);
        }
        CHECK(merged.balls.size() <= f.balls.size());
    }
}

TEST_CASE("growth: single ball grows exponentially") {
    BallFamily f{{{0, 0, 0.5}}};
    const GrowthTrace trace = growthProcess(f, 1.0);
    REQUIRE(trace.intervals.size() == 1);
    CHECK(trace.mergeTimes.empty());
    const BallFamily at = trace.familyAt(0.7);
    CHECK(at.balls[0].r == doctest::Approx(0.5 * std::exp(0.7)).epsilon(1e-14));
}

TEST_CASE("growth: two unit balls at distance 4 collide at log 2") {
    BallFamily f{{{0, 0, 1}, {4, 0, 1}}};
    const GrowthTrace trace = growthProcess(f, 3.0);
    REQUIRE(trace.mergeTimes.size() == 1);
    CHECK(trace.mergeTimes[0] == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    REQUIRE(trace.intervals.size() == 2);
    CHECK(trace.intervals[1].family.balls.size() == 1);
}

TEST_CASE("growth trace invariants on random families") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const BallFamily f = randomFamily(rng, 12);
        const double tMax = 2.5;
        const GrowthTrace trace = growthProcess(f, tMax);
        CHECK(trace.mergeTimes.size() <= f.balls.size() - 1);
        const double initialDiameter = f.totalDiameter();

        for (const GrowthInterval& iv : trace.intervals) {
            for (int s = 0; s < 32; ++s) {
                const double t = iv.tStart + (iv.tEnd - iv.tStart) * (s + 0.25) / 32.5;
                if (t >= tMax) break;
                const BallFamily at = trace.familyAt(t);
                CHECK(at.pairwiseDisjoint());
                CHECK(at.totalDiameter() ==
                      doctest::Approx(std::exp(t) * initialDiameter).epsilon(1e-12));
            }
        }

        // Nesting: sampled balls from earlier times sit inside exactly one
        // later ball; arbitrary pairs are nested or disjoint (tree structure).
        const BallFamily early = trace.familyAt(0.3);
        const BallFamily late = trace.familyAt(2.2);
        for (const Ball& b : early.balls) {
            int hosts = 0;
            for (const Ball& big : late.balls)
                if (contained(b, big, 1e-7)) ++hosts;
            CHECK(hosts == 1);
        }
        for (const Ball& b : early.balls) {
            for (const Ball& big : late.balls) {
                const double d = std::hypot(b.cx - big.cx, b.cy - big.cy);
                const bool disjoint = d >= b.r + big.r - 1e-7;
                const bool nested = contained(b, big, 1e-7) || contained(big, b, 1e-7);
                CHECK((disjoint || nested));
            }
        }
    }
}

TEST_CASE("content upper bound") {
    CHECK(contentUpperBound(BallFamily{{{0, 0, 0.7}}}) == doctest::Approx(1.4));
    CHECK(contentUpperBound(BallFamily{{{0, 0, 1}, {1, 0, 1}}}) == doctest::Approx(4.0));
    CHECK(contentUpperBound(BallFamily{{{0, 0, 0.3}, {9, 0, 0.5}}}) ==
          doctest::Approx(1.6));
}

TEST_CASE("dirichlet lower bound values and guards") {
    const double rho = 0.01;
    CHECK(dirichletLowerBound(kPi, 1 - rho, 2 * rho) ==
          doctest::Approx(kPi * std::log(0.99 / 0.04)).epsilon(1e-12));
    CHECK(dirichletLowerBound(0.0, 0.5, 0.1) == doctest::Approx(0.0));
    // Vacuous case: content >= dist/2 makes the bound nonpositive.
    CHECK(dirichletLowerBound(kPi, 1.0, 0.5) <= 0.0);
    CHECK_THROWS_AS(dirichletLowerBound(kPi, 0.0, 0.1), NonpositiveGeometry);
    CHECK_THROWS_AS(dirichletLowerBound(kPi, 1.0, 0.0), NonpositiveGeometry);
    CHECK_THROWS_AS(dirichletLowerBound(-1.0, 1.0, 0.1), NonpositiveGeometry);
}

TEST_CASE("empty families are rejected") {
    CHECK_THROWS_AS(mergeBalls(BallFamily{}), EmptyFamily);
    CHECK_THROWS_AS(growthProcess(BallFamily{}, 1.0), EmptyFamily);
    CHECK_THROWS_AS(contentUpperBound(BallFamily{}), EmptyFamily);
}
