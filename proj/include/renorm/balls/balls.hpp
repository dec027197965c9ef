#ifndef RENORM_BALLS_BALLS_HPP
#define RENORM_BALLS_BALLS_HPP

#include <vector>

namespace renorm::balls {

struct Ball {
    double cx = 0.0;
    double cy = 0.0;
    double r = 0.0;
};

struct BallFamily {
    std::vector<Ball> balls;

    double totalDiameter() const;
    bool pairwiseDisjoint() const;   // closed balls: touching counts as intersecting
};

// Piecewise-exponential growth history.  Within interval j the family is
// intervals[j].family with every radius scaled by exp(t - tStart); merge
// events separate the intervals.
struct GrowthInterval {
    double tStart = 0.0;
    double tEnd = 0.0;
    BallFamily family;   // state at tStart (pairwise disjoint)
};

struct GrowthTrace {
    std::vector<GrowthInterval> intervals;
    std::vector<double> mergeTimes;

    BallFamily familyAt(double t) const;
};

// Repeatedly replaces the closest overlapping pair B(a1,r1), B(a2,r2) by
// B((r1 a1 + r2 a2)/(r1 + r2), r1 + r2) until the family is disjoint.  Total
// diameter is conserved exactly and every input ball ends up inside some
// output ball.
BallFamily mergeBalls(const BallFamily& family);

// Grows radii by e^t from the merged initial family, merging at analytically
// computed collision times, up to tMax.
GrowthTrace growthProcess(const BallFamily& family, double tMax);

// Total diameter after merging: an upper bound for the one-dimensional
// Hausdorff content of the union.
double contentUpperBound(const BallFamily& family);

// esg * log(dist / (2 * content)); may be negative (vacuous bound).
double dirichletLowerBound(double esg, double distToBoundary, double content);

} // namespace renorm::balls

#endif
