#ifndef RENORM_SOLVER_GRID_HPP
#define RENORM_SOLVER_GRID_HPP

#include <vector>

#include "renorm/solver/domain.hpp"

namespace renorm::solver {

// curve = -1: interior lattice vertex; 0: point on the outer boundary;
// 1 + i: point on the excised circle around singularity i.  `param` is the
// anticlockwise angle (circles) or the normalised arclength (polygon).
struct GridVertex {
    double x = 0.0;
    double y = 0.0;
    int curve = -1;
    double param = 0.0;

    bool free() const { return curve < 0; }
};

struct GridEdge {
    int p = 0;
    int q = 0;
    double w = 1.0;   // inverse length fraction; 1 for full interior edges
};

// Uniform square grid clipped to the domain minus the excised disks, with
// boundary vertices snapped onto the curves (Shortley-Weller cut cells).
class Grid {
public:
    DomainSpec spec;
    std::vector<GridVertex> vertices;
    std::vector<GridEdge> edges;
    std::vector<int> innerBoundaryCount;   // snapped vertices per excised circle

    int i0 = 0, j0 = 0, nx = 0, ny = 0;
    std::vector<int> lattice;   // (i - i0) + (j - j0) * nx -> vertex index or -1

    int latticeAt(int i, int j) const {
        if (i < i0 || j < j0 || i >= i0 + nx || j >= j0 + ny) return -1;
        return lattice[static_cast<size_t>((i - i0) + (j - j0) * nx)];
    }
    int vertexCount() const { return static_cast<int>(vertices.size()); }
};

Grid buildGrid(const DomainSpec& spec);

} // namespace renorm::solver

#endif
