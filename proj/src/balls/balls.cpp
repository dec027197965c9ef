#include "renorm/balls/balls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renorm/errors.hpp"

namespace renorm::balls {

namespace {

double centerDistance(const Ball& a, const Ball& b) {
    return std::hypot(a.cx - b.cx, a.cy - b.cy);
}

bool overlap(const Ball& a, const Ball& b) {
    return centerDistance(a, b) <= a.r + b.r + 1e-15 * (1.0 + a.r + b.r);
}

Ball mergePair(const Ball& a, const Ball& b) {
    const double rsum = a.r + b.r;
    if (rsum <= 0.0) return Ball{a.cx, a.cy, 0.0};   // coincident zero-radius balls
    return Ball{(a.r * a.cx + b.r * b.cx) / rsum, (a.r * a.cy + b.r * b.cy) / rsum, rsum};
}

} // namespace

double BallFamily::totalDiameter() const {
    double sum = 0.0;
    for (const Ball& b : balls) sum += 2.0 * b.r;
    return sum;
}

bool BallFamily::pairwiseDisjoint() const {
    for (size_t i = 0; i < balls.size(); ++i)
        for (size_t j = i + 1; j < balls.size(); ++j)
            if (centerDistance(balls[i], balls[j]) < balls[i].r + balls[j].r - 1e-12)
                return false;
    return true;
}

BallFamily GrowthTrace::familyAt(double t) const {
    if (intervals.empty()) throw EmptyFamily("growth trace is empty");
    const GrowthInterval* seg = &intervals.back();
    for (const GrowthInterval& iv : intervals)
        if (t >= iv.tStart && t < iv.tEnd) { seg = &iv; break; }
    BallFamily out = seg->family;
    const double scale = std::exp(t - seg->tStart);
    for (Ball& b : out.balls) b.r *= scale;
    return out;
}

BallFamily mergeBalls(const BallFamily& family) {
    if (family.balls.empty()) throw EmptyFamily("mergeBalls: empty family");
    std::vector<Ball> balls = family.balls;
    for (;;) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0, bj = 0;
        bool found = false;
        for (size_t i = 0; i < balls.size(); ++i) {
            for (size_t j = i + 1; j < balls.size(); ++j) {
                if (!overlap(balls[i], balls[j])) continue;
                const double d = centerDistance(balls[i], balls[j]);
                if (d < best) { best = d; bi = i; bj = j; found = true; }
            }
        }
        if (!found) break;
        balls[bi] = mergePair(balls[bi], balls[bj]);
        balls.erase(balls.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return BallFamily{std::move(balls)};
}

GrowthTrace growthProcess(const BallFamily& family, double tMax) {
    if (family.balls.empty()) throw EmptyFamily("growthProcess: empty family");
    if (tMax < 0) throw NonpositiveGeometry("growthProcess: tMax must be >= 0");

    GrowthTrace trace;
    BallFamily current = mergeBalls(family);
    double t = 0.0;
    while (true) {
        // First collision: |a - a'| = (r + r') e^dt for every disjoint pair.
        double dtMin = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < current.balls.size(); ++i) {
            for (size_t j = i + 1; j < current.balls.size(); ++j) {
                const double rsum = current.balls[i].r + current.balls[j].r;
                if (rsum <= 0.0) continue;
                const double d = centerDistance(current.balls[i], current.balls[j]);
                const double dt = std::log(d / rsum);
                dtMin = std::min(dtMin, std::max(dt, 0.0));
            }
        }
        if (t + dtMin >= tMax || !std::isfinite(dtMin)) {
            trace.intervals.push_back({t, tMax, current});
            break;
        }
        trace.intervals.push_back({t, t + dtMin, current});
        t += dtMin;
        const double scale = std::exp(dtMin);
        for (Ball& b : current.balls) b.r *= scale;
        current = mergeBalls(current);
        trace.mergeTimes.push_back(t);
    }
    return trace;
}

double contentUpperBound(const BallFamily& family) {
    if (family.balls.empty()) throw EmptyFamily("contentUpperBound: empty family");
    return mergeBalls(family).totalDiameter();
}

double dirichletLowerBound(double esg, double distToBoundary, double content) {
    if (esg < 0) throw NonpositiveGeometry("dirichletLowerBound: negative singular energy");
    if (distToBoundary <= 0 || content <= 0)
        throw NonpositiveGeometry("dirichletLowerBound: distance and content must be positive");
    if (esg == 0) return 0.0;
    return esg * std::log(distToBoundary / (2.0 * content));
}

} // namespace renorm::balls
