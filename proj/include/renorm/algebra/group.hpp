#ifndef RENORM_ALGEBRA_GROUP_HPP
#define RENORM_ALGEBRA_GROUP_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "renorm/algebra/quaternion.hpp"

namespace renorm::algebra {

// Finite subgroup of the unit quaternions.  Element 0 is the identity; the
// element order is the breadth-first closure order from the identity with
// exact lexicographic tie-breaks, so it is reproducible across runs.
class FiniteGroup {
public:
    FiniteGroup(std::vector<Quaternion> elements,
                std::vector<std::vector<std::uint16_t>> multiplication,
                std::vector<std::uint16_t> inverses);

    int order() const { return static_cast<int>(elements_.size()); }
    const Quaternion& element(int idx) const { return elements_.at(static_cast<size_t>(idx)); }
    const std::vector<Quaternion>& elements() const { return elements_; }

    int multiply(int lhs, int rhs) const {
        return multiplication_[static_cast<size_t>(lhs)][static_cast<size_t>(rhs)];
    }
    int inverse(int idx) const { return inverses_[static_cast<size_t>(idx)]; }
    int identity() const { return 0; }

    // Index of an element, or -1 when absent.
    int indexOf(const Quaternion& q) const;

private:
    std::vector<Quaternion> elements_;
    std::vector<std::vector<std::uint16_t>> multiplication_;
    std::vector<std::uint16_t> inverses_;
};

struct ConjugacyClass {
    std::set<int> memberIndices;
    int representativeIndex = 0;   // minimal BFS index in the class
    double length = 0.0;           // lambda of the associated free homotopy class

    bool contains(int idx) const { return memberIndices.count(idx) > 0; }
    int size() const { return static_cast<int>(memberIndices.size()); }
};

// Closure of the generators under multiplication.  Throws ClosureExceedsCap
// when more than `cap` distinct elements appear.
FiniteGroup generateGroup(const std::vector<Quaternion>& generators, int cap = 1024);

// Partition of the group into conjugacy classes, ordered by ascending length,
// then ascending class size, then minimal representative index.
std::vector<ConjugacyClass> conjugacyClasses(const FiniteGroup& group);

// Polygroup product: the set of classes contained in {x*x' : x in c1, x' in c2},
// returned as indices into `classes`.  Only one representative of c1 needs to
// be expanded because the product set is stable under conjugation.
std::set<int> classProduct(const FiniteGroup& group,
                           const std::vector<ConjugacyClass>& classes,
                           int c1, int c2);

int classIndexOfElement(const std::vector<ConjugacyClass>& classes, int elementIndex);

// Index of the class containing the inverses of the members of `c`.
int inverseClass(const FiniteGroup& group, const std::vector<ConjugacyClass>& classes, int c);

// Canonical exact generators of the catalog groups.
std::vector<Quaternion> generatorsQ8();
std::vector<Quaternion> generators2T();
std::vector<Quaternion> generators2O();
std::vector<Quaternion> generators2I();

} // namespace renorm::algebra

#endif
