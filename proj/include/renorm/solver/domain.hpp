#ifndef RENORM_SOLVER_DOMAIN_HPP
#define RENORM_SOLVER_DOMAIN_HPP

#include <array>
#include <vector>

namespace renorm::solver {

// Outer boundary of the computational domain: the unit-style disk or a simple
// polygon with anticlockwise vertex order.
struct Domain {
    enum class Type { Disk, Polygon };

    Type type = Type::Disk;
    double radius = 1.0;
    std::vector<std::array<double, 2>> vertices;

    static Domain disk(double radius = 1.0);
    static Domain polygon(std::vector<std::array<double, 2>> vertices);

    bool inside(double x, double y) const;
    double distToBoundary(double x, double y) const;
    std::array<double, 2> bboxMin() const;
    std::array<double, 2> bboxMax() const;
    // Normalised anticlockwise boundary parameter in [0,1) of a boundary
    // point (used to evaluate the trace datum).
    double boundaryParam(double x, double y) const;
    double perimeter() const;
};

struct DomainSpec {
    Domain domain;
    std::vector<std::array<double, 2>> singularities;
    double rho = 0.1;
    double h = 1.0 / 64.0;
};

// min( |a_i - a_j| / 2, dist(a_i, boundary) ): excised disks of any radius
// below this are disjoint and interior.
double rhoBar(const Domain& domain, const std::vector<std::array<double, 2>>& points);

} // namespace renorm::solver

#endif
