#ifndef RENORM_ALGEBRA_QUATERNION_HPP
#define RENORM_ALGEBRA_QUATERNION_HPP

#include <array>
#include <string>

#include "renorm/algebra/field_scalar.hpp"

namespace renorm::algebra {

// Quaternion x0 + x1*i + x2*j + x3*k over Q(sqrt2, sqrt5), with the usual
// relations i^2 = j^2 = k^2 = -1 and ijk = -1.  Group elements are unit
// quaternions; unitNormSquared() lets callers assert that exactly.
class Quaternion {
public:
    Quaternion() : x_{FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero(),
                      FieldScalar::zero()} {}
    Quaternion(FieldScalar x0, FieldScalar x1, FieldScalar x2, FieldScalar x3)
        : x_{x0, x1, x2, x3} {}

    static Quaternion one();
    static Quaternion i();
    static Quaternion j();
    static Quaternion k();
    static Quaternion minusOne();

    const FieldScalar& operator[](int idx) const { return x_[static_cast<size_t>(idx)]; }
    const FieldScalar& re() const { return x_[0]; }

    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator-() const;
    Quaternion conjugate() const;
    // For unit quaternions the conjugate is the inverse.
    Quaternion inverse() const;
    FieldScalar normSquared() const;
    bool isUnit() const;

    bool operator==(const Quaternion& o) const;
    bool operator!=(const Quaternion& o) const { return !(*this == o); }
    // Exact lexicographic order on (x0, x1, x2, x3); used for deterministic
    // element ordering and for map keys.
    bool operator<(const Quaternion& o) const;

    std::array<double, 4> toDouble() const;
    std::string str() const;

private:
    std::array<FieldScalar, 4> x_;
};

// Length of the minimising geodesic from the identity to q in SU(2) with the
// bi-invariant metric that doubles the unit-sphere distance:
//   2 * arccos(clamp(Re q, -1, 1)).
double geodesicLength(const Quaternion& q);

} // namespace renorm::algebra

#endif
