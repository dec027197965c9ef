#ifndef RENORM_TOPOLOGY_RESOLUTION_HPP
#define RENORM_TOPOLOGY_RESOLUTION_HPP

#include <vector>

#include "renorm/topology/manifold.hpp"

namespace renorm::topo {

// Boundary data of a (possibly multiply connected) planar domain: the class
// of the outer trace and one class per inner boundary component, all oriented
// anticlockwise.
struct BoundaryTopology {
    HomotopyClass outerClass;
    std::vector<HomotopyClass> innerBoundaryClasses;
};

// Multiset of nontrivial classes, canonically sorted, with its singular
// energy sum(lambda^2) / (4 pi).
struct Decomposition {
    std::vector<HomotopyClass> parts;
    double energy = 0.0;
};

struct SingularEnergyResult {
    double energy = 0.0;
    std::vector<Decomposition> minimalDecompositions;
};

// Compatibility of singularity classes with the boundary data: true iff some
// choice of representatives h_i, g_j multiplies to a representative of the
// outer class.  Abelian models reduce to an exact sum identity.
bool isTopologicalResolution(const BoundaryTopology& boundary,
                             const std::vector<HomotopyClass>& singularities);

// Infimum of sum(lambda_i^2)/(4 pi) over multisets of nontrivial classes
// whose polygroup product contains c, together with every minimal multiset.
// normBound (lattice models only) limits the class window; the default is
// 4 * |c| in lattice norm.
SingularEnergyResult singularEnergy(const HomotopyClass& c, double normBound = -1.0);

// Minimal singular energy over all topological resolutions of the boundary
// data (zero when the data is compatible with no singularity at all).
double singularEnergyOfBoundary(const BoundaryTopology& boundary, double normBound = -1.0);

// A nontrivial class is atomic when its singleton resolution is minimal.
bool isAtomic(const HomotopyClass& c);

} // namespace renorm::topo

#endif
