#include "renorm/algebra/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "renorm/errors.hpp"

namespace renorm::algebra {

FiniteGroup::FiniteGroup(std::vector<Quaternion> elements,
                         std::vector<std::vector<std::uint16_t>> multiplication,
                         std::vector<std::uint16_t> inverses)
    : elements_(std::move(elements)),
      multiplication_(std::move(multiplication)),
      inverses_(std::move(inverses)) {}

int FiniteGroup::indexOf(const Quaternion& q) const {
    for (size_t m = 0; m < elements_.size(); ++m)
        if (elements_[m] == q) return static_cast<int>(m);
    return -1;
}

FiniteGroup generateGroup(const std::vector<Quaternion>& generators, int cap) {
    std::map<Quaternion, int> index;
    std::vector<Quaternion> elements;
    elements.push_back(Quaternion::one());
    index.emplace(elements[0], 0);

    std::vector<Quaternion> frontier = elements;
    while (!frontier.empty()) {
        std::vector<Quaternion> next;
        for (const Quaternion& e : frontier) {
            for (const Quaternion& g : generators) {
                Quaternion p = e * g;
                if (index.count(p)) continue;
                index.emplace(p, -1);   // reserve; final indices assigned after sorting
                next.push_back(p);
            }
        }
        std::sort(next.begin(), next.end());
        for (const Quaternion& p : next) {
            if (static_cast<int>(elements.size()) >= cap) {
                std::ostringstream os;
                os << "generateGroup: closure exceeds cap " << cap;
                throw ClosureExceedsCap(os.str());
            }
            index[p] = static_cast<int>(elements.size());
            elements.push_back(p);
        }
        frontier = std::move(next);
    }

    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<std::uint16_t>> mult(
        static_cast<size_t>(n), std::vector<std::uint16_t>(static_cast<size_t>(n), 0));
    std::vector<std::uint16_t> inv(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Quaternion p = elements[static_cast<size_t>(a)] * elements[static_cast<size_t>(b)];
            auto it = index.find(p);
            if (it == index.end())
                throw ClosureExceedsCap("generateGroup: product escaped the closure");
            mult[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                static_cast<std::uint16_t>(it->second);
            if (it->second == 0) inv[static_cast<size_t>(a)] = static_cast<std::uint16_t>(b);
        }
    }
    return FiniteGroup(std::move(elements), std::move(mult), std::move(inv));
}

std::vector<ConjugacyClass> conjugacyClasses(const FiniteGroup& group) {
    const int n = group.order();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<ConjugacyClass> classes;
    for (int e = 0; e < n; ++e) {
        if (seen[static_cast<size_t>(e)]) continue;
        ConjugacyClass cls;
        for (int g = 0; g < n; ++g) {
            const int conj = group.multiply(group.multiply(g, e), group.inverse(g));
            cls.memberIndices.insert(conj);
            seen[static_cast<size_t>(conj)] = true;
        }
        cls.representativeIndex = *cls.memberIndices.begin();
        cls.length = geodesicLength(group.element(cls.representativeIndex));
        classes.push_back(std::move(cls));
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [](const ConjugacyClass& lhs, const ConjugacyClass& rhs) {
                         if (lhs.length != rhs.length) return lhs.length < rhs.length;
                         if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
                         return lhs.representativeIndex < rhs.representativeIndex;
                     });
    return classes;
}

std::set<int> classProduct(const FiniteGroup& group,
                           const std::vector<ConjugacyClass>& classes,
                           int c1, int c2) {
    const ConjugacyClass& lhs = classes.at(static_cast<size_t>(c1));
    const ConjugacyClass& rhs = classes.at(static_cast<size_t>(c2));
    std::set<int> result;
    const int rep = lhs.representativeIndex;
    for (int x : rhs.memberIndices)
        result.insert(classIndexOfElement(classes, group.multiply(rep, x)));
    return result;
}

int classIndexOfElement(const std::vector<ConjugacyClass>& classes, int elementIndex) {
    for (size_t c = 0; c < classes.size(); ++c)
        if (classes[c].contains(elementIndex)) return static_cast<int>(c);
    throw InvalidClassIndex("classIndexOfElement: element not covered by the partition");
}

int inverseClass(const FiniteGroup& group, const std::vector<ConjugacyClass>& classes, int c) {
    const int rep = classes.at(static_cast<size_t>(c)).representativeIndex;
    return classIndexOfElement(classes, group.inverse(rep));
}

std::vector<Quaternion> generatorsQ8() { return {Quaternion::i(), Quaternion::j()}; }

namespace {

const Rational kHalf{1, 2};

Quaternion half(int s0, int s1, int s2, int s3) {
    auto coef = [](int s) { return FieldScalar::rational(Rational(s, 2)); };
    return Quaternion(coef(s0), coef(s1), coef(s2), coef(s3));
}

} // namespace

std::vector<Quaternion> generators2T() {
    // (1 + i + j + k)/2 and (1 + i + j - k)/2
    return {half(1, 1, 1, 1), half(1, 1, 1, -1)};
}

std::vector<Quaternion> generators2O() {
    // (1 + i + j + k)/2 and (1 + i)/sqrt2
    const FieldScalar invSqrt2 = FieldScalar::sqrt2(kHalf);   // sqrt2/2 = 1/sqrt2
    return {half(1, 1, 1, 1),
            Quaternion(invSqrt2, invSqrt2, FieldScalar::zero(), FieldScalar::zero())};
}

std::vector<Quaternion> generators2I() {
    // (1 + i + j + k)/2 and (phi + phi^{-1} i + j)/2 with phi the golden ratio:
    // phi/2 = (sqrt5 + 1)/4, phi^{-1}/2 = (sqrt5 - 1)/4.
    const FieldScalar phiHalf =
        FieldScalar(Rational(1, 4), Rational(), Rational(1, 4), Rational());
    const FieldScalar phiInvHalf =
        FieldScalar(Rational(-1, 4), Rational(), Rational(1, 4), Rational());
    return {half(1, 1, 1, 1),
            Quaternion(phiHalf, phiInvHalf, FieldScalar::rational(kHalf), FieldScalar::zero())};
}

} // namespace renorm::algebra
