#ifndef RENORM_ALGEBRA_FIELD_SCALAR_HPP
#define RENORM_ALGEBRA_FIELD_SCALAR_HPP

#include <cstdint>
#include <string>

namespace renorm::algebra {

// Reduced fraction of 64-bit integers, denominator > 0.  The values handled
// here (coordinates of finite rotation groups) keep numerators tiny, so no
// arbitrary-precision backing is needed; operations assert against overflow
// in debug builds via the checked helpers.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t numerator, std::int64_t denominator);
    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool isZero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

private:
    std::int64_t num_;
    std::int64_t den_;
};

// Element of the real field Q(sqrt2, sqrt5), stored as
//   a + b*sqrt(2) + c*sqrt(5) + d*sqrt(10)
// with rational coefficients.  Equality is exact coefficient equality and the
// sign is decided exactly, so group closure never depends on rounding.
class FieldScalar {
public:
    FieldScalar() = default;
    FieldScalar(Rational a, Rational b, Rational c, Rational d)
        : a_(a), b_(b), c_(c), d_(d) {}

    static FieldScalar zero() { return FieldScalar(); }
    static FieldScalar one() { return rational(Rational::integer(1)); }
    static FieldScalar rational(Rational r) {
        return FieldScalar(r, Rational(), Rational(), Rational());
    }
    static FieldScalar integer(std::int64_t n) { return rational(Rational::integer(n)); }
    // r * sqrt(2) and r * sqrt(5)
    static FieldScalar sqrt2(Rational r) {
        return FieldScalar(Rational(), r, Rational(), Rational());
    }
    static FieldScalar sqrt5(Rational r) {
        return FieldScalar(Rational(), Rational(), r, Rational());
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    bool isZero() const;
    // Exact sign of the real number, computed by eliminating the radicals
    // (never by floating evaluation).
    int sign() const;
    // Galois conjugates sqrt2 -> -sqrt2 and sqrt5 -> -sqrt5.
    FieldScalar conj2() const;
    FieldScalar conj5() const;
    // Multiplicative inverse of a nonzero element.
    FieldScalar inverse() const;

    double toDouble() const;
    std::string str() const;

    // Total order compatible with the real embedding (exact).
    bool operator<(const FieldScalar& o) const { return (*this - o).sign() < 0; }

private:
    Rational a_, b_, c_, d_;
};

} // namespace renorm::algebra

#endif
