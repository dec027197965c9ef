#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "renorm/algebra/field_scalar.hpp"
#include "renorm/algebra/group.hpp"
#include "renorm/algebra/helium3.hpp"
#include "renorm/algebra/quaternion.hpp"
#include "renorm/errors.hpp"

using namespace renorm;
using namespace renorm::algebra;

namespace {

const double kPi = std::acos(-1.0);

FieldScalar randomScalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    auto r = [&]() { return Rational(num(rng), den(rng)); };
    return FieldScalar(r(), r(), r(), r());
}

} // namespace

TEST_CASE("rational arithmetic reduces and normalises") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2, 1));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("field scalar arithmetic is exact and closed") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const FieldScalar x = randomScalar(rng);
        const FieldScalar y = randomScalar(rng);
        const double fx = x.toDouble();
        const double fy = y.toDouble();
        CHECK((x + y).toDouble() == doctest::Approx(fx + fy).epsilon(1e-12));
        CHECK((x * y).toDouble() == doctest::Approx(fx * fy).epsilon(1e-12));
        CHECK((x - y).toDouble() == doctest::Approx(fx - fy).epsilon(1e-12));
        if (!x.isZero()) {
            CHECK((x * x.inverse()) == FieldScalar::one());
        }
    }
}

TEST_CASE("exact sign agrees with the floating embedding") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const FieldScalar x = randomScalar(rng);
        const double f = x.toDouble();
        if (std::abs(f) > 1e-9) {
            CHECK(x.sign() == (f > 0 ? 1 : -1));
        } else if (x.isZero()) {
            CHECK(x.sign() == 0);
        }
    }
    // A nearly-cancelling combination still gets its sign right:
    // sqrt10 - sqrt2*sqrt5 = 0 exactly.
    const FieldScalar t = FieldScalar::sqrt2(Rational(1, 1)) * FieldScalar::sqrt5(Rational(1, 1))
        - FieldScalar(Rational(), Rational(), Rational(), Rational(1, 1));
    CHECK(t.isZero());
    CHECK(t.sign() == 0);
}

TEST_CASE("quaternion relations i2=j2=k2=-1 and ijk=-1") {
    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();
    const Quaternion minus = Quaternion::minusOne();
    CHECK(i * i == minus);
    CHECK(j * j == minus);
    CHECK(k * k == minus);
    CHECK(i * j * k == minus);
    CHECK(i * j == k);
    CHECK(j * i == -k);
}

TEST_CASE("geodesic lengths of sample rotations") {
    CHECK(geodesicLength(Quaternion::minusOne()) == doctest::Approx(2 * kPi).epsilon(1e-14));
    CHECK(geodesicLength(generators2T()[0]) == doctest::Approx(2 * kPi / 3).epsilon(1e-14));
    CHECK(geodesicLength(generators2O()[1]) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(geodesicLength(Quaternion::one()) == doctest::Approx(0.0));
}

TEST_CASE("group generation: catalog orders") {
    CHECK(generateGroup(generatorsQ8()).order() == 8);
    CHECK(generateGroup(generators2T()).order() == 24);
    CHECK(generateGroup(generators2O()).order() == 48);
    // |2I| = 2 |I| = 120 for the binary icosahedral group.
    CHECK(generateGroup(generators2I()).order() == 120);
}

TEST_CASE("group generation: cap violation reported") {
    CHECK_THROWS_AS(generateGroup(generators2I(), 100), ClosureExceedsCap);
}

TEST_CASE("every generated element has exact unit norm") {
    for (const auto& gens : {generatorsQ8(), generators2T(), generators2O(), generators2I()}) {
        const FiniteGroup g = generateGroup(gens);
        for (const Quaternion& q : g.elements()) {
            CHECK(q.normSquared() == FieldScalar::one());
            // The floating embedding is sign-consistent on catalog coordinates.
            for (int comp = 0; comp < 4; ++comp) {
                const double f = q[comp].toDouble();
                const int s = q[comp].sign();
                CHECK((s == 0 ? f == 0.0 : (s > 0) == (f > 0)));
            }
        }
        // Elements are duplicate-free under exact equality.
        std::set<int> dup;
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                if (g.element(a) == g.element(b)) dup.insert(a);
        CHECK(dup.empty());
    }
}

TEST_CASE("regenerating from the full element list reproduces the group") {
    const FiniteGroup g = generateGroup(generators2O());
    const FiniteGroup h = generateGroup(g.elements(), 2 * g.order());
    REQUIRE(h.order() == g.order());
    std::vector<Quaternion> a = g.elements();
    std::vector<Quaternion> b = h.elements();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
}

TEST_CASE("conjugacy classes of Q8") {
    const FiniteGroup g = generateGroup(generatorsQ8());
    const auto classes = conjugacyClasses(g);
    REQUIRE(classes.size() == 5);
    std::vector<int> sizes;
    for (const auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 2, 2, 2});
}

TEST_CASE("trivial group has one class") {
    const FiniteGroup g = generateGroup({Quaternion::one()});
    CHECK(g.order() == 1);
    CHECK(conjugacyClasses(g).size() == 1);
}

TEST_CASE("conjugacy classes of 2O: member counts match the rotation table") {
    const FiniteGroup g = generateGroup(generators2O());
    const auto classes = conjugacyClasses(g);
    REQUIRE(classes.size() == 8);
    // Counts listed by ascending length: 1, 6, 8, 6, 12, 8, 6, 1.
    std::vector<int> counts;
    for (const auto& c : classes) counts.push_back(c.size());
    std::multiset<int> expected{1, 6, 8, 6, 12, 6, 8, 1};
    CHECK(std::multiset<int>(counts.begin(), counts.end()) == expected);
}

TEST_CASE("classes are closed under conjugation and share their length") {
    for (const auto& gens : {generatorsQ8(), generators2T(), generators2O(), generators2I()}) {
        const FiniteGroup g = generateGroup(gens);
        const auto classes = conjugacyClasses(g);
        // Partition check.
        int total = 0;
        for (const auto& c : classes) total += c.size();
        CHECK(total == g.order());
        for (const auto& c : classes) {
            for (int e : c.memberIndices) {
                CHECK(geodesicLength(g.element(e)) ==
                      doctest::Approx(c.length).epsilon(1e-14));
                for (int conj = 0; conj < g.order(); ++conj) {
                    const int image = g.multiply(g.multiply(conj, e), g.inverse(conj));
                    CHECK(c.contains(image));
                }
            }
        }
    }
}

namespace {

// Brute-force polygroup product expanding both classes completely.
std::set<int> classProductOracle(const FiniteGroup& g,
                                 const std::vector<ConjugacyClass>& classes,
                                 int c1, int c2) {
    std::set<int> out;
    for (int x : classes[size_t(c1)].memberIndices)
        for (int y : classes[size_t(c2)].memberIndices)
            out.insert(classIndexOfElement(classes, g.multiply(x, y)));
    return out;
}

std::set<int> productOfSet(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes,
                           int lhs, const std::set<int>& rhs) {
    std::set<int> out;
    for (int c : rhs) {
        const auto p = classProduct(g, classes, lhs, c);
        out.insert(p.begin(), p.end());
    }
    return out;
}

} // namespace

TEST_CASE("class product in Q8 against brute force") {
    const FiniteGroup g = generateGroup(generatorsQ8());
    const auto classes = conjugacyClasses(g);
    const int e = classIndexOfElement(classes, g.identity());
    const int w = classIndexOfElement(classes, g.indexOf(Quaternion::minusOne()));
    const int ci = classIndexOfElement(classes, g.indexOf(Quaternion::i()));
    const int cj = classIndexOfElement(classes, g.indexOf(Quaternion::j()));
    const int ck = classIndexOfElement(classes, g.indexOf(Quaternion::k()));

    CHECK(classProduct(g, classes, ci, ci) == std::set<int>{e, w});
    CHECK(classProduct(g, classes, ci, cj) == std::set<int>{ck});
    for (size_t c = 0; c < classes.size(); ++c) {
        CHECK(classProduct(g, classes, int(c), e) == std::set<int>{int(c)});
        for (size_t d = 0; d < classes.size(); ++d) {
            CHECK(classProduct(g, classes, int(c), int(d)) ==
                  classProductOracle(g, classes, int(c), int(d)));
        }
    }
}

TEST_CASE("polygroup symmetry and associativity on all catalog groups") {
    for (const auto& gens : {generatorsQ8(), generators2T(), generators2O(), generators2I()}) {
        const FiniteGroup g = generateGroup(gens);
        const auto classes = conjugacyClasses(g);
        const int e = classIndexOfElement(classes, g.identity());
        const int n = static_cast<int>(classes.size());
        for (int c = 0; c < n; ++c) {
            const auto prod = classProduct(g, classes, c, inverseClass(g, classes, c));
            CHECK(prod.count(e) == 1);
        }
        for (int c1 = 0; c1 < n; ++c1) {
            for (int c2 = 0; c2 < n; ++c2) {
                const auto p12 = classProduct(g, classes, c1, c2);
                for (int c3 = 0; c3 < n; ++c3) {
                    const auto p23 = classProduct(g, classes, c2, c3);
                    std::set<int> left;   // (c1*c2)*c3
                    for (int c : p12) {
                        const auto t = classProduct(g, classes, c, c3);
                        left.insert(t.begin(), t.end());
                    }
                    const std::set<int> right = productOfSet(g, classes, c1, p23);
                    CHECK(left == right);
                }
            }
        }
    }
}

TEST_CASE("helium-3 component distances") {
    CHECK(componentDistanceHelium3(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(componentDistanceHelium3(1) == doctest::Approx(std::sqrt(2.0) * kPi).epsilon(1e-10));
    CHECK(componentDistanceHelium3(2) == doctest::Approx(2 * kPi).epsilon(1e-10));
    CHECK(componentDistanceHelium3(3) == doctest::Approx(std::sqrt(2.0) * kPi).epsilon(1e-10));
    CHECK_THROWS_AS(componentDistanceHelium3(4), InvalidClassIndex);
    CHECK_THROWS_AS(componentDistanceHelium3(1, 8), InvalidClassIndex);
}
