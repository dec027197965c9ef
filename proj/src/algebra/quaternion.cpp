#include "renorm/algebra/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace renorm::algebra {

Quaternion Quaternion::one() {
    return Quaternion(FieldScalar::one(), FieldScalar::zero(), FieldScalar::zero(),
                      FieldScalar::zero());
}

Quaternion Quaternion::i() {
    return Quaternion(FieldScalar::zero(), FieldScalar::one(), FieldScalar::zero(),
                      FieldScalar::zero());
}

Quaternion Quaternion::j() {
    return Quaternion(FieldScalar::zero(), FieldScalar::zero(), FieldScalar::one(),
                      FieldScalar::zero());
}

Quaternion Quaternion::k() {
    return Quaternion(FieldScalar::zero(), FieldScalar::zero(), FieldScalar::zero(),
                      FieldScalar::one());
}

Quaternion Quaternion::minusOne() {
    return Quaternion(-FieldScalar::one(), FieldScalar::zero(), FieldScalar::zero(),
                      FieldScalar::zero());
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    const FieldScalar& a0 = x_[0]; const FieldScalar& a1 = x_[1];
    const FieldScalar& a2 = x_[2]; const FieldScalar& a3 = x_[3];
    const FieldScalar& b0 = o.x_[0]; const FieldScalar& b1 = o.x_[1];
    const FieldScalar& b2 = o.x_[2]; const FieldScalar& b3 = o.x_[3];
    return Quaternion(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                      a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                      a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                      a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0);
}

Quaternion Quaternion::operator-() const {
    return Quaternion(-x_[0], -x_[1], -x_[2], -x_[3]);
}

Quaternion Quaternion::conjugate() const {
    return Quaternion(x_[0], -x_[1], -x_[2], -x_[3]);
}

Quaternion Quaternion::inverse() const { return conjugate(); }

FieldScalar Quaternion::normSquared() const {
    return x_[0] * x_[0] + x_[1] * x_[1] + x_[2] * x_[2] + x_[3] * x_[3];
}

bool Quaternion::isUnit() const { return normSquared() == FieldScalar::one(); }

bool Quaternion::operator==(const Quaternion& o) const {
    return x_[0] == o.x_[0] && x_[1] == o.x_[1] && x_[2] == o.x_[2] && x_[3] == o.x_[3];
}

bool Quaternion::operator<(const Quaternion& o) const {
    for (int m = 0; m < 4; ++m) {
        const int s = (x_[static_cast<size_t>(m)] - o.x_[static_cast<size_t>(m)]).sign();
        if (s != 0) return s < 0;
    }
    return false;
}

std::array<double, 4> Quaternion::toDouble() const {
    return {x_[0].toDouble(), x_[1].toDouble(), x_[2].toDouble(), x_[3].toDouble()};
}

std::string Quaternion::str() const {
    std::ostringstream os;
    os << '(' << x_[0].str() << ", " << x_[1].str() << ", " << x_[2].str() << ", "
       << x_[3].str() << ')';
    return os.str();
}

double geodesicLength(const Quaternion& q) {
    const double re = std::clamp(q.re().toDouble(), -1.0, 1.0);
    return 2.0 * std::acos(re);
}

} // namespace renorm::algebra
