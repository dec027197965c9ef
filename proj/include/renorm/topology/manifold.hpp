#ifndef RENORM_TOPOLOGY_MANIFOLD_HPP
#define RENORM_TOPOLOGY_MANIFOLD_HPP

#include <memory>
#include <string>
#include <vector>

#include "renorm/algebra/group.hpp"

namespace renorm::topo {

enum class ManifoldKind {
    Circle,
    FlatTorus,
    EquilateralTorus,
    ProjectiveSpace,
    Orthorhombic,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    Helium3,
};

enum class ClassModel {
    FiniteGroupClasses,
    LatticeZ,
    LatticeZ2,
    LatticeEisenstein,
    CyclicWithLengths,
};

// Catalog data for a manifold whose free homotopy classes are the conjugacy
// classes of a finite quaternion group.  Catalog order is the table order
// (constant first, then rotations as usually listed), which differs from the
// ascending-length order used by algebra::conjugacyClasses.
struct FiniteModelData {
    algebra::FiniteGroup group;
    std::vector<algebra::ConjugacyClass> algClasses;
    std::vector<int> catalogToAlg;
    std::vector<int> algToCatalog;
    std::vector<std::string> names;         // display names, catalog order
    std::vector<std::string> aliases;       // plain-ascii spellings for the CLI
    std::vector<std::string> descriptions;
};

class ManifoldDescriptor {
public:
    static ManifoldDescriptor circle();
    static ManifoldDescriptor flatTorus();
    static ManifoldDescriptor equilateralTorus();
    static ManifoldDescriptor projectiveSpace(int n);
    static ManifoldDescriptor orthorhombic();
    static ManifoldDescriptor tetrahedral();
    static ManifoldDescriptor octahedral();
    static ManifoldDescriptor icosahedral();
    static ManifoldDescriptor helium3();
    // Lookup by lower-case name ("circle", "rp2", "octahedral", ...).
    static ManifoldDescriptor byName(const std::string& name);

    ManifoldKind kind() const;
    ClassModel model() const;
    int projectiveDim() const;
    std::string name() const;
    // Length of the shortest non-contractible closed geodesic.
    double systole() const;
    const FiniteModelData* finiteData() const;
    const std::vector<double>& cyclicLengths() const;

    bool operator==(const ManifoldDescriptor& o) const;
    bool operator!=(const ManifoldDescriptor& o) const { return !(*this == o); }

    struct Impl;

private:
    explicit ManifoldDescriptor(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// One free homotopy class of loops in a manifold.  `id` is the catalog index
// for finite models and the Z4 value for Helium-3; lattice models use the
// vector (n, m) with m unused for the circle.
struct HomotopyClass {
    ManifoldDescriptor manifold;
    int id = 0;
    int n = 0;
    int m = 0;
    std::string name;
    double lambda = 0.0;

    bool trivial() const;
    // Deterministic order used to canonicalise multisets of classes.
    bool operator<(const HomotopyClass& o) const;
    bool operator==(const HomotopyClass& o) const;
};

// Complete class list for finite and cyclic models, in catalog (table) order.
// Lattice models enumerate all classes with lattice norm <= normBound
// (default 3), sorted by length then lexicographically.
std::vector<HomotopyClass> classCatalog(const ManifoldDescriptor& m, double normBound = 3.0);

HomotopyClass finiteClass(const ManifoldDescriptor& m, int catalogIndex);
HomotopyClass latticeClass(const ManifoldDescriptor& m, int n, int mm = 0);
HomotopyClass cyclicClass(const ManifoldDescriptor& m, int value);
// Class lookup by display name or ascii alias; lattice models accept "3" or
// "1,-2".  Throws InvalidClassIndex for unknown names.
HomotopyClass classByName(const ManifoldDescriptor& m, const std::string& name);

HomotopyClass classInverse(const HomotopyClass& c);
// Euclidean norm of the lattice vector (lambda up to the model's scale
// factor); only meaningful for lattice models.
double latticeNorm(const HomotopyClass& c);

// Exact rational multiple of pi when lambda matches p/q*pi with q <= 12
// within 1e-12; returns false otherwise.
bool lambdaAsPiFraction(double lambda, int& p, int& q);

} // namespace renorm::topo

#endif
