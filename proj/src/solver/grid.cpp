#include "renorm/solver/grid.hpp"

#include <algorithm>
#include <cmath>

#include "renorm/errors.hpp"

namespace renorm::solver {

namespace {

const double kPi = std::acos(-1.0);
const double kMinCut = 1e-6;   // shortest admitted cut fraction of an edge

// Exact area of the disk (cx, cy, r) intersected with [x0,x1] x [y0,y1].
// One-dimensional integration of the clipped vertical extent, split at the
// abscissae where the circle crosses the horizontal strip edges, with
// Gauss-Legendre quadrature on each smooth piece.
double circleRectArea(double cx, double cy, double r, double x0, double x1, double y0,
                      double y1) {
    const double lo = std::max(x0, cx - r);
    const double hi = std::min(x1, cx + r);
    if (lo >= hi) return 0.0;

    std::vector<double> splits{lo, hi};
    for (const double yEdge : {y0, y1}) {
        const double dy = yEdge - cy;
        if (std::abs(dy) < r) {
            const double dx = std::sqrt(r * r - dy * dy);
            for (const double x : {cx - dx, cx + dx})
                if (x > lo && x < hi) splits.push_back(x);
        }
    }
    std::sort(splits.begin(), splits.end());

    static const double gx[8] = {-0.9602898564975363, -0.7966664774136267,
                                 -0.5255324099163290, -0.1834346424956498,
                                 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
    static const double gw[8] = {0.1012285362903763, 0.2223810344533745,
                                 0.3137066458778873, 0.3626837833783620,
                                 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    double area = 0.0;
    for (size_t s = 0; s + 1 < splits.size(); ++s) {
        const double a = splits[s], b = splits[s + 1];
        if (b - a < 1e-15) continue;
        double piece = 0.0;
        for (int g = 0; g < 8; ++g) {
            const double x = 0.5 * (a + b) + 0.5 * (b - a) * gx[g];
            const double dx = x - cx;
            const double half = std::sqrt(std::max(0.0, r * r - dx * dx));
            const double yLo = std::max(y0, cy - half);
            const double yHi = std::min(y1, cy + half);
            piece += gw[g] * std::max(0.0, yHi - yLo);
        }
        area += 0.5 * (b - a) * piece;
    }
    return area;
}

struct Crossing {
    double t = 0.0;   // parameter along the lattice segment
    int curve = 0;    // 0 outer, 1 + i inner circle i
};

// Intersections of the segment p0 + t (p1 - p0), t in (0,1), with a circle.
void circleCrossings(const double* p0, const double* p1, double cx, double cy, double r,
                     int curve, std::vector<Crossing>& out) {
    const double dx = p1[0] - p0[0], dy = p1[1] - p0[1];
    const double fx = p0[0] - cx, fy = p0[1] - cy;
    const double a = dx * dx + dy * dy;
    const double b = 2 * (fx * dx + fy * dy);
    const double c = fx * fx + fy * fy - r * r;
    const double disc = b * b - 4 * a * c;
    if (disc <= 0 || a == 0) return;
    const double s = std::sqrt(disc);
    for (const double t : {(-b - s) / (2 * a), (-b + s) / (2 * a)})
        if (t > 1e-12 && t < 1.0 - 1e-12) out.push_back({t, curve});
}

void polygonCrossings(const double* p0, const double* p1,
                      const std::vector<std::array<double, 2>>& poly,
                      std::vector<Crossing>& out) {
    const size_t n = poly.size();
    for (size_t v = 0; v < n; ++v) {
        const auto& a = poly[v];
        const auto& b = poly[(v + 1) % n];
        const double rX = p1[0] - p0[0], rY = p1[1] - p0[1];
        const double sX = b[0] - a[0], sY = b[1] - a[1];
        const double denom = rX * sY - rY * sX;
        if (std::abs(denom) < 1e-16) continue;
        const double qpX = a[0] - p0[0], qpY = a[1] - p0[1];
        const double t = (qpX * sY - qpY * sX) / denom;
        const double u = (qpX * rY - qpY * rX) / denom;
        if (t > 1e-12 && t < 1.0 - 1e-12 && u >= 0.0 && u <= 1.0)
            out.push_back({t, 0});
    }
}

} // namespace

Grid buildGrid(const DomainSpec& spec) {
    if (spec.h <= 0) throw ConfigInvalid("buildGrid: h must be positive");
    const double rb = rhoBar(spec.domain, spec.singularities);
    if (!spec.singularities.empty() && spec.rho >= rb)
        throw ConfigInvalid("buildGrid: rho must be below rhoBar of the configuration");
    if (!spec.singularities.empty() && spec.rho < 3 * spec.h)
        throw ResolutionTooCoarse("buildGrid: rho < 3h leaves the excised circles unresolved");

    Grid grid;
    grid.spec = spec;
    const double h = spec.h;

    const auto lo = spec.domain.bboxMin();
    const auto hi = spec.domain.bboxMax();
    grid.i0 = static_cast<int>(std::floor(lo[0] / h)) - 1;
    grid.j0 = static_cast<int>(std::floor(lo[1] / h)) - 1;
    const int i1 = static_cast<int>(std::ceil(hi[0] / h)) + 1;
    const int j1 = static_cast<int>(std::ceil(hi[1] / h)) + 1;
    grid.nx = i1 - grid.i0 + 1;
    grid.ny = j1 - grid.j0 + 1;
    grid.lattice.assign(static_cast<size_t>(grid.nx) * grid.ny, -1);
    grid.innerBoundaryCount.assign(spec.singularities.size(), 0);

    auto interior = [&](double x, double y) {
        if (!spec.domain.inside(x, y)) return false;
        for (const auto& a : spec.singularities)
            if (std::hypot(x - a[0], y - a[1]) <= spec.rho) return false;
        return true;
    };

    for (int j = grid.j0; j < grid.j0 + grid.ny; ++j) {
        for (int i = grid.i0; i < grid.i0 + grid.nx; ++i) {
            const double x = i * h, y = j * h;
            if (!interior(x, y)) continue;
            grid.lattice[static_cast<size_t>((i - grid.i0) + (j - grid.j0) * grid.nx)] =
                grid.vertexCount();
            grid.vertices.push_back({x, y, -1, 0.0});
        }
    }

    auto makeBoundaryVertex = [&](double x, double y, int curve) {
        double param = 0.0;
        if (curve == 0) {
            param = spec.domain.boundaryParam(x, y) * 2 * kPi;
        } else {
            const auto& a = spec.singularities[static_cast<size_t>(curve - 1)];
            param = std::atan2(y - a[1], x - a[0]);
            if (param < 0) param += 2 * kPi;
            grid.innerBoundaryCount[static_cast<size_t>(curve - 1)] += 1;
        }
        grid.vertices.push_back({x, y, curve, param});
        return grid.vertexCount() - 1;
    };

    // Lattice segments (right and up from every lattice node in range); each
    // segment is clipped against all boundary curves and contributes one edge
    // per kept sub-interval with weight 1 / (length fraction).
    for (int j = grid.j0; j < grid.j0 + grid.ny; ++j) {
        for (int i = grid.i0; i < grid.i0 + grid.nx; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                const int i2 = i + (dir == 0 ? 1 : 0);
                const int j2 = j + (dir == 0 ? 0 : 1);
                if (i2 >= grid.i0 + grid.nx || j2 >= grid.j0 + grid.ny) continue;
                const double p0[2] = {i * h, j * h};
                const double p1[2] = {i2 * h, j2 * h};

                std::vector<Crossing> crossings;
                if (spec.domain.type == Domain::Type::Disk)
                    circleCrossings(p0, p1, 0.0, 0.0, spec.domain.radius, 0, crossings);
                else
                    polygonCrossings(p0, p1, spec.domain.vertices, crossings);
                for (size_t s = 0; s < spec.singularities.size(); ++s)
                    circleCrossings(p0, p1, spec.singularities[s][0], spec.singularities[s][1],
                                    spec.rho, static_cast<int>(s) + 1, crossings);

                const int vp = grid.latticeAt(i, j);
                const int vq = grid.latticeAt(i2, j2);
                if (crossings.empty()) {
                    if (vp >= 0 && vq >= 0) grid.edges.push_back({vp, vq, 1.0});
                    continue;
                }
                std::sort(crossings.begin(), crossings.end(),
                          [](const Crossing& a, const Crossing& b) { return a.t < b.t; });

                double tPrev = 0.0;
                int prevVertex = vp;   // -1 when the sub-interval starts on a curve
                int prevCurve = -1;
                for (size_t c = 0; c <= crossings.size(); ++c) {
                    const double tNext = c < crossings.size() ? crossings[c].t : 1.0;
                    const int nextLattice = c < crossings.size() ? -2 : vq;
                    const double tm = 0.5 * (tPrev + tNext);
                    const bool kept = tNext - tPrev > kMinCut &&
                                      interior(p0[0] + tm * (p1[0] - p0[0]),
                                               p0[1] + tm * (p1[1] - p0[1]));
                    if (kept) {
                        int a = prevVertex;
                        if (a < 0) {
                            a = makeBoundaryVertex(p0[0] + tPrev * (p1[0] - p0[0]),
                                                   p0[1] + tPrev * (p1[1] - p0[1]), prevCurve);
                        }
                        int b;
                        if (c < crossings.size()) {
                            b = makeBoundaryVertex(p0[0] + tNext * (p1[0] - p0[0]),
                                                   p0[1] + tNext * (p1[1] - p0[1]),
                                                   crossings[c].curve);
                        } else {
                            b = nextLattice;
                        }
                        if (a >= 0 && b >= 0)
                            grid.edges.push_back({a, b, 1.0 / std::max(tNext - tPrev, kMinCut)});
                    }
                    if (c < crossings.size()) {
                        tPrev = crossings[c].t;
                        prevVertex = -1;
                        prevCurve = crossings[c].curve;
                    }
                }
            }
        }
    }

    for (size_t s = 0; s < spec.singularities.size(); ++s)
        if (grid.innerBoundaryCount[s] < 16)
            throw ResolutionTooCoarse("buildGrid: an excised circle has fewer than 16 vertices");

    // FEM-consistent weights: each edge carries the area of its dual
    // rectangle (width h across the edge) clipped to the domain minus the
    // excised disks, divided by the squared edge length.  Away from the
    // curves this is 1; at a straight cut it reduces to Shortley-Weller
    // 1/theta; near circular arcs it removes the area-mismeasurement noise
    // of plain cut fractions.
    for (GridEdge& e : grid.edges) {
        const GridVertex& A = grid.vertices[static_cast<size_t>(e.p)];
        const GridVertex& B = grid.vertices[static_cast<size_t>(e.q)];
        const double len = std::hypot(B.x - A.x, B.y - A.y);
        if (len < kMinCut * h) { e.w = 0.0; continue; }
        const double mx = 0.5 * (A.x + B.x), my = 0.5 * (A.y + B.y);

        bool nearCurve = false;
        if (spec.domain.type == Domain::Type::Disk) {
            if (std::abs(std::hypot(mx, my) - spec.domain.radius) < 1.5 * h) nearCurve = true;
        }
        for (const auto& a : spec.singularities)
            if (std::abs(std::hypot(mx - a[0], my - a[1]) - spec.rho) < 1.5 * h)
                nearCurve = true;
        if (!nearCurve) continue;   // keep the cut-fraction weight
        if (!A.free() || !B.free()) continue;   // cut edges keep 1/theta

        const bool horizontal = std::abs(B.y - A.y) < std::abs(B.x - A.x);
        const double x0 = std::min(A.x, B.x) - (horizontal ? 0.0 : 0.5 * h);
        const double x1 = std::max(A.x, B.x) + (horizontal ? 0.0 : 0.5 * h);
        const double y0 = std::min(A.y, B.y) - (horizontal ? 0.5 * h : 0.0);
        const double y1 = std::max(A.y, B.y) + (horizontal ? 0.5 * h : 0.0);

        double kept;
        if (spec.domain.type == Domain::Type::Disk)
            kept = circleRectArea(0.0, 0.0, spec.domain.radius, x0, x1, y0, y1);
        else
            kept = (x1 - x0) * (y1 - y0);
        for (const auto& a : spec.singularities)
            kept -= circleRectArea(a[0], a[1], spec.rho, x0, x1, y0, y1);
        e.w = std::max(kept, 0.0) / (len * len);
    }
    return grid;
}

} // namespace renorm::solver
