#include "renorm/solver/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renorm/errors.hpp"

namespace renorm::solver {

namespace {

const double kPi = std::acos(-1.0);

double segmentDistance(double px, double py, const std::array<double, 2>& a,
                       const std::array<double, 2>& b) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - a[0]) * dx + (py - a[1]) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(px - (a[0] + t * dx), py - (a[1] + t * dy));
}

} // namespace

Domain Domain::disk(double radius) {
    Domain d;
    d.type = Type::Disk;
    d.radius = radius;
    return d;
}

Domain Domain::polygon(std::vector<std::array<double, 2>> vertices) {
    if (vertices.size() < 3) throw ConfigInvalid("polygon needs at least 3 vertices");
    // Enforce anticlockwise orientation (shoelace).
    double area = 0.0;
    for (size_t v = 0; v < vertices.size(); ++v) {
        const auto& a = vertices[v];
        const auto& b = vertices[(v + 1) % vertices.size()];
        area += a[0] * b[1] - b[0] * a[1];
    }
    if (area < 0) std::reverse(vertices.begin(), vertices.end());
    Domain d;
    d.type = Type::Polygon;
    d.vertices = std::move(vertices);
    return d;
}

bool Domain::inside(double x, double y) const {
    if (type == Type::Disk) return x * x + y * y < radius * radius;
    // Crossing-number test.
    bool in = false;
    const size_t n = vertices.size();
    for (size_t v = 0; v < n; ++v) {
        const auto& a = vertices[v];
        const auto& b = vertices[(v + 1) % n];
        if ((a[1] > y) != (b[1] > y)) {
            const double xc = a[0] + (y - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
            if (x < xc) in = !in;
        }
    }
    return in;
}

double Domain::distToBoundary(double x, double y) const {
    if (type == Type::Disk) return radius - std::hypot(x, y);
    double best = std::numeric_limits<double>::infinity();
    const size_t n = vertices.size();
    for (size_t v = 0; v < n; ++v)
        best = std::min(best, segmentDistance(x, y, vertices[v], vertices[(v + 1) % n]));
    return best;
}

std::array<double, 2> Domain::bboxMin() const {
    if (type == Type::Disk) return {-radius, -radius};
    std::array<double, 2> lo = vertices[0];
    for (const auto& v : vertices) { lo[0] = std::min(lo[0], v[0]); lo[1] = std::min(lo[1], v[1]); }
    return lo;
}

std::array<double, 2> Domain::bboxMax() const {
    if (type == Type::Disk) return {radius, radius};
    std::array<double, 2> hi = vertices[0];
    for (const auto& v : vertices) { hi[0] = std::max(hi[0], v[0]); hi[1] = std::max(hi[1], v[1]); }
    return hi;
}

double Domain::perimeter() const {
    if (type == Type::Disk) return 2 * kPi * radius;
    double sum = 0.0;
    const size_t n = vertices.size();
    for (size_t v = 0; v < n; ++v) {
        const auto& a = vertices[v];
        const auto& b = vertices[(v + 1) % n];
        sum += std::hypot(b[0] - a[0], b[1] - a[1]);
    }
    return sum;
}

double Domain::boundaryParam(double x, double y) const {
    if (type == Type::Disk) {
        double a = std::atan2(y, x);
        if (a < 0) a += 2 * kPi;
        return a / (2 * kPi);
    }
    // Nearest point on the polygon, measured as normalised arclength.
    const size_t n = vertices.size();
    double best = std::numeric_limits<double>::infinity();
    double bestArc = 0.0;
    double arc = 0.0;
    for (size_t v = 0; v < n; ++v) {
        const auto& a = vertices[v];
        const auto& b = vertices[(v + 1) % n];
        const double dx = b[0] - a[0], dy = b[1] - a[1];
        const double len = std::hypot(dx, dy);
        const double len2 = len * len;
        double t = len2 > 0 ? ((x - a[0]) * dx + (y - a[1]) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double d = std::hypot(x - (a[0] + t * dx), y - (a[1] + t * dy));
        if (d < best) { best = d; bestArc = arc + t * len; }
        arc += len;
    }
    return bestArc / perimeter();
}

double rhoBar(const Domain& domain, const std::vector<std::array<double, 2>>& points) {
    double bound = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < points.size(); ++i) {
        bound = std::min(bound, domain.distToBoundary(points[i][0], points[i][1]));
        for (size_t j = i + 1; j < points.size(); ++j)
            bound = std::min(bound, 0.5 * std::hypot(points[i][0] - points[j][0],
                                                     points[i][1] - points[j][1]));
    }
    return bound;
}

} // namespace renorm::solver
