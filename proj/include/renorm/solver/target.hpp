#ifndef RENORM_SOLVER_TARGET_HPP
#define RENORM_SOLVER_TARGET_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "renorm/topology/manifold.hpp"

namespace renorm::solver {

// Embedded target manifolds for the discrete Dirichlet solver.
//
//   Circle      unit circle in R^2
//   FlatTorus   product of unit circles in R^4
//   RP2         stored as a unit vector v in S^2, embedded as the projector
//               v v^T / sqrt(2) (isometric to the round quotient metric, so
//               the nontrivial geodesic has length pi)
//   Quotient    SU(2)/Gamma stored as a unit quaternion representative with
//               per-edge deck gauges; the bi-invariant metric doubles the
//               unit-sphere distance, which enters as an energy factor 4
class TargetModel {
public:
    enum class Kind { Circle, FlatTorus, RP2, Quotient };

    static TargetModel circle();
    static TargetModel flatTorus();
    static TargetModel rp2();
    // groupName in {"pm1", "q8", "2t", "2o", "2i"}
    static TargetModel quotient(const std::string& groupName);
    static TargetModel byName(const std::string& name);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    int dim() const { return dim_; }             // stored components per vertex
    int embedDim() const { return embedDim_; }   // components of the embedded value
    double metricScale() const { return metricScale_; }
    int deckOrder() const { return static_cast<int>(deck_.size()); }
    bool hasGauges() const { return deck_.size() > 1; }

    // Chordal machinery (solver energy): squared embedded distance with the
    // optimal gauge, and the gauge-aligned neighbour value.
    double edgeDist2(const double* up, const double* uq, int* gaugeOut = nullptr) const;
    double edgeDist2Gauged(const double* up, const double* uq, int gauge) const;
    void alignedValue(const double* uq, int gauge, double* out) const;
    int gaugeInverse(int g) const;
    int gaugeCompose(int a, int b) const;

    // Intrinsic (geodesic) squared distance; used by the cylinder functional.
    double geodesicDist2(const double* up, const double* uq) const;

    // Projection to the manifold; `hint` breaks ties (RP2 eigenvector).
    void project(double* u, const double* hint) const;
    double distToManifold(const double* u) const;

    void embed(const double* u, double* out) const;

    // Deck group data (Quotient only).
    const std::vector<std::array<double, 4>>& deckElements() const { return deck_; }
    int deckClassOf(int gaugeIdx) const;        // algebra conjugacy-class index
    int deckClassCount() const;
    double deckClassLength(int classIdx) const;
    // Catalog manifold for the topology module; null for Gamma = {+-1}.
    const topo::ManifoldDescriptor* catalogManifold() const;
    const algebra::FiniteGroup* deckGroup() const;
    const std::vector<algebra::ConjugacyClass>* deckClasses() const;

private:
    TargetModel() = default;

    Kind kind_ = Kind::Circle;
    std::string name_;
    int dim_ = 2;
    int embedDim_ = 2;
    double metricScale_ = 1.0;
    std::vector<std::array<double, 4>> deck_;   // identity first
    std::vector<std::vector<std::uint16_t>> deckMult_;
    std::vector<std::uint16_t> deckInv_;
    std::vector<int> deckClass_;
    std::vector<double> deckClassLength_;
    std::shared_ptr<const algebra::FiniteGroup> group_;
    std::shared_ptr<const std::vector<algebra::ConjugacyClass>> classes_;
    std::shared_ptr<const topo::ManifoldDescriptor> manifold_;
};

} // namespace renorm::solver

#endif
