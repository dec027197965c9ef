#include "renorm/algebra/helium3.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "renorm/errors.hpp"

namespace renorm::algebra {

namespace {

using Quat = std::array<double, 4>;

Quat mul(const Quat& a, const Quat& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

double su2Distance(double re) {
    return 2.0 * std::acos(std::clamp(re, -1.0, 1.0));
}

Quat power(Quat q, int m) {
    Quat r{1.0, 0.0, 0.0, 0.0};
    for (int s = 0; s < m; ++s) r = mul(r, q);
    return r;
}

} // namespace

double componentDistanceHelium3(int m, int thetaSamples) {
    if (m < 0 || m > 3)
        throw InvalidClassIndex("componentDistanceHelium3: class index must be in {0,1,2,3}");
    if (thetaSamples < 16)
        throw InvalidClassIndex("componentDistanceHelium3: need at least 16 theta samples");

    const Quat kq{0.0, 0.0, 0.0, 1.0};
    const Quat iq{0.0, 1.0, 0.0, 0.0};
    const Quat km = power(kq, m);
    const Quat im = power(iq, m);
    const double d2 = su2Distance(im[0]);

    auto value = [&](double theta) {
        const Quat h0{std::cos(theta), std::sin(theta), 0.0, 0.0};
        const double d1 = su2Distance(mul(km, h0)[0]);
        return std::sqrt(d1 * d1 + d2 * d2);
    };

    const double twoPi = 2.0 * std::acos(-1.0);
    const double step = twoPi / thetaSamples;
    double bestTheta = 0.0;
    double best = value(0.0);
    for (int s = 1; s < thetaSamples; ++s) {
        const double v = value(s * step);
        if (v < best) {
            best = v;
            bestTheta = s * step;
        }
    }

    // Golden-section refinement on the bracket around the best grid sample.
    double lo = bestTheta - step;
    double hi = bestTheta + step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = value(c);
    double fd = value(d);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        if (fc < fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo);
            fc = value(c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo);
            fd = value(d);
        }
    }
    return std::min(best, std::min(fc, fd));
}

} // namespace renorm::algebra
