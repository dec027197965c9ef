#include "renorm/algebra/field_scalar.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace renorm::algebra {

namespace {

std::int64_t checkedMul(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("Rational: product overflow");
    return r;
}

std::int64_t checkedAdd(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("Rational: sum overflow");
    return r;
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(std::llabs(numerator), denominator);
    num_ = g ? numerator / g : numerator;
    den_ = g ? denominator / g : denominator;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t lhs = checkedMul(num_, o.den_ / g);
    const std::int64_t rhs = checkedMul(o.num_, den_ / g);
    return Rational(checkedAdd(lhs, rhs), checkedMul(den_, o.den_ / g));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const std::int64_t g1 = std::gcd(std::llabs(num_), o.den_);
    const std::int64_t g2 = std::gcd(std::llabs(o.num_), den_);
    return Rational(checkedMul(num_ / g1, o.num_ / g2),
                    checkedMul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw std::invalid_argument("Rational: division by zero");
    return *this * Rational(o.den_, o.num_);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
}

FieldScalar FieldScalar::operator-() const { return FieldScalar(-a_, -b_, -c_, -d_); }

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    return FieldScalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
    return FieldScalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    // Basis products: sqrt2*sqrt2=2, sqrt5*sqrt5=5, sqrt10*sqrt10=10,
    // sqrt2*sqrt5=sqrt10, sqrt2*sqrt10=2*sqrt5, sqrt5*sqrt10=5*sqrt2.
    const Rational two = Rational::integer(2);
    const Rational five = Rational::integer(5);
    const Rational ten = Rational::integer(10);
    Rational a = a_ * o.a_ + two * (b_ * o.b_) + five * (c_ * o.c_) + ten * (d_ * o.d_);
    Rational b = a_ * o.b_ + b_ * o.a_ + five * (c_ * o.d_ + d_ * o.c_);
    Rational c = a_ * o.c_ + c_ * o.a_ + two * (b_ * o.d_ + d_ * o.b_);
    Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
    return FieldScalar(a, b, c, d);
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

bool FieldScalar::isZero() const {
    return a_.isZero() && b_.isZero() && c_.isZero() && d_.isZero();
}

namespace {

// Exact sign of p + q*sqrt(2) with rational p, q.
int signQSqrt2(const Rational& p, const Rational& q) {
    const int sp = p.sign();
    const int sq = q.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 against 2 q^2.
    const Rational lhs = p * p;
    const Rational rhs = Rational::integer(2) * (q * q);
    const int cmp = (lhs - rhs).sign();
    if (cmp == 0) return 0;    // cannot happen for rational p,q != 0, kept for safety
    return cmp > 0 ? sp : sq;
}

} // namespace

int FieldScalar::sign() const {
    // Write the value as u + sqrt(5)*w with u = a + b*sqrt2, w = c + d*sqrt2,
    // then eliminate sqrt(5) by comparing u^2 with 5 w^2 inside Q(sqrt2).
    const int su = signQSqrt2(a_, b_);
    const Rational five = Rational::integer(5);
    const int sw = signQSqrt2(c_, d_);
    if (sw == 0) return su;
    if (su == 0) return sw;
    if (su == sw) return su;
    // u^2 - 5 w^2 lives in Q(sqrt2): (a+b*s2)^2 = a^2+2b^2 + 2ab*s2.
    const Rational p = a_ * a_ + Rational::integer(2) * (b_ * b_)
        - five * (c_ * c_ + Rational::integer(2) * (d_ * d_));
    const Rational q = Rational::integer(2) * (a_ * b_ - five * (c_ * d_));
    const int cmp = signQSqrt2(p, q);
    if (cmp == 0) return 0;
    return cmp > 0 ? su : sw;
}

FieldScalar FieldScalar::conj2() const { return FieldScalar(a_, -b_, c_, -d_); }

FieldScalar FieldScalar::conj5() const { return FieldScalar(a_, b_, -c_, -d_); }

FieldScalar FieldScalar::inverse() const {
    if (isZero())
        throw std::invalid_argument("FieldScalar: inverse of zero");
    // x * conj2(x) * conj5(x) * conj2(conj5(x)) is the rational field norm.
    const FieldScalar prod = conj2() * conj5() * conj2().conj5();
    const FieldScalar norm = *this * prod;
    assert(norm.b().isZero() && norm.c().isZero() && norm.d().isZero());
    const Rational inv = Rational::integer(1) / norm.a();
    return prod * FieldScalar::rational(inv);
}

double FieldScalar::toDouble() const {
    static const double s2 = std::sqrt(2.0);
    static const double s5 = std::sqrt(5.0);
    static const double s10 = std::sqrt(10.0);
    return a_.toDouble() + b_.toDouble() * s2 + c_.toDouble() * s5 + d_.toDouble() * s10;
}

std::string FieldScalar::str() const {
    std::ostringstream os;
    bool first = true;
    auto item = [&](const Rational& r, const char* radical) {
        if (r.isZero()) return;
        if (!first) os << (r.sign() > 0 ? " + " : " - ");
        else if (r.sign() < 0) os << '-';
        const Rational mag = r.sign() < 0 ? -r : r;
        os << mag.str() << radical;
        first = false;
    };
    item(a_, "");
    item(b_, "*sqrt2");
    item(c_, "*sqrt5");
    item(d_, "*sqrt10");
    if (first) os << '0';
    return os.str();
}

} // namespace renorm::algebra
