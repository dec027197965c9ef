#include "renorm/solver/target.hpp"

#include <algorithm>
#include <cmath>

#include "renorm/errors.hpp"

namespace renorm::solver {

namespace {

double dot(const double* a, const double* b, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void normalize(double* u, int n, const double* fallback) {
    const double norm = std::sqrt(dot(u, u, n));
    if (norm < 1e-14) {
        for (int i = 0; i < n; ++i) u[i] = fallback[i];
        return;
    }
    for (int i = 0; i < n; ++i) u[i] /= norm;
}

std::array<double, 4> quatMul(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

double clampUnit(double x) { return std::clamp(x, -1.0, 1.0); }

} // namespace

TargetModel TargetModel::circle() {
    TargetModel t;
    t.kind_ = Kind::Circle;
    t.name_ = "circle";
    t.dim_ = 2;
    t.embedDim_ = 2;
    t.deck_ = {{1, 0, 0, 0}};
    return t;
}

TargetModel TargetModel::flatTorus() {
    TargetModel t;
    t.kind_ = Kind::FlatTorus;
    t.name_ = "flat_torus";
    t.dim_ = 4;
    t.embedDim_ = 4;
    t.deck_ = {{1, 0, 0, 0}};
    return t;
}

TargetModel TargetModel::rp2() {
    TargetModel t;
    t.kind_ = Kind::RP2;
    t.name_ = "rp2";
    t.dim_ = 3;
    t.embedDim_ = 9;
    t.deck_ = {{1, 0, 0, 0}};
    return t;
}

TargetModel TargetModel::quotient(const std::string& groupName) {
    TargetModel t;
    t.kind_ = Kind::Quotient;
    t.name_ = "s3_mod_" + groupName;
    t.dim_ = 4;
    t.embedDim_ = 4;
    t.metricScale_ = 4.0;

    std::vector<algebra::Quaternion> gens;
    if (groupName == "pm1") {
        gens = {algebra::Quaternion::minusOne()};
    } else if (groupName == "q8") {
        gens = algebra::generatorsQ8();
        t.manifold_ = std::make_shared<topo::ManifoldDescriptor>(
            topo::ManifoldDescriptor::orthorhombic());
    } else if (groupName == "2t") {
        gens = algebra::generators2T();
        t.manifold_ = std::make_shared<topo::ManifoldDescriptor>(
            topo::ManifoldDescriptor::tetrahedral());
    } else if (groupName == "2o") {
        gens = algebra::generators2O();
        t.manifold_ = std::make_shared<topo::ManifoldDescriptor>(
            topo::ManifoldDescriptor::octahedral());
    } else if (groupName == "2i") {
        gens = algebra::generators2I();
        t.manifold_ = std::make_shared<topo::ManifoldDescriptor>(
            topo::ManifoldDescriptor::icosahedral());
    } else {
        throw ConfigInvalid("unknown deck group: " + groupName);
    }

    t.group_ = std::make_shared<const algebra::FiniteGroup>(algebra::generateGroup(gens));
    t.classes_ = std::make_shared<const std::vector<algebra::ConjugacyClass>>(
        algebra::conjugacyClasses(*t.group_));
    const int n = t.group_->order();
    t.deck_.resize(static_cast<size_t>(n));
    t.deckClass_.resize(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) {
        t.deck_[static_cast<size_t>(e)] = t.group_->element(e).toDouble();
        t.deckClass_[static_cast<size_t>(e)] = algebra::classIndexOfElement(*t.classes_, e);
    }
    t.deckMult_.assign(static_cast<size_t>(n), std::vector<std::uint16_t>(static_cast<size_t>(n)));
    t.deckInv_.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        t.deckInv_[static_cast<size_t>(a)] = static_cast<std::uint16_t>(t.group_->inverse(a));
        for (int b = 0; b < n; ++b)
            t.deckMult_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                static_cast<std::uint16_t>(t.group_->multiply(a, b));
    }
    t.deckClassLength_.resize(t.classes_->size());
    for (size_t c = 0; c < t.classes_->size(); ++c)
        t.deckClassLength_[c] = (*t.classes_)[c].length;
    return t;
}

TargetModel TargetModel::byName(const std::string& name) {
    if (name == "circle") return circle();
    if (name == "flat_torus" || name == "torus") return flatTorus();
    if (name == "rp2") return rp2();
    const std::string prefix = "s3_mod_";
    if (name.rfind(prefix, 0) == 0) return quotient(name.substr(prefix.size()));
    for (const char* g : {"pm1", "q8", "2t", "2o", "2i"})
        if (name == g) return quotient(g);
    throw ConfigInvalid("unknown target: " + name);
}

double TargetModel::edgeDist2(const double* up, const double* uq, int* gaugeOut) const {
    switch (kind_) {
    case Kind::Circle: {
        const double d0 = up[0] - uq[0], d1 = up[1] - uq[1];
        if (gaugeOut) *gaugeOut = 0;
        return d0 * d0 + d1 * d1;
    }
    case Kind::FlatTorus: {
        double s = 0.0;
        for (int i = 0; i < 4; ++i) { const double d = up[i] - uq[i]; s += d * d; }
        if (gaugeOut) *gaugeOut = 0;
        return s;
    }
    case Kind::RP2: {
        const double c = dot(up, uq, 3);
        if (gaugeOut) *gaugeOut = 0;
        return 1.0 - c * c;   // |P - Q|_F^2 for P = vv^T/sqrt2
    }
    case Kind::Quotient: {
        // <u_p, u_q g> = <conj(u_q) u_p, g>; one multiply, then dots.
        const std::array<double, 4> w = quatMul({uq[0], -uq[1], -uq[2], -uq[3]},
                                                {up[0], up[1], up[2], up[3]});
        int best = 0;
        double bestDot = -2.0;
        for (int g = 0; g < deckOrder(); ++g) {
            const double d = w[0] * deck_[size_t(g)][0] + w[1] * deck_[size_t(g)][1] +
                             w[2] * deck_[size_t(g)][2] + w[3] * deck_[size_t(g)][3];
            if (d > bestDot) { bestDot = d; best = g; }
        }
        if (gaugeOut) *gaugeOut = best;
        return metricScale_ * (2.0 - 2.0 * clampUnit(bestDot));
    }
    }
    return 0.0;
}

double TargetModel::edgeDist2Gauged(const double* up, const double* uq, int gauge) const {
    if (kind_ != Kind::Quotient) return edgeDist2(up, uq);
    std::array<double, 4> v;
    alignedValue(uq, gauge, v.data());
    double s = 0.0;
    for (int i = 0; i < 4; ++i) { const double d = up[i] - v[i]; s += d * d; }
    return metricScale_ * s;
}

void TargetModel::alignedValue(const double* uq, int gauge, double* out) const {
    if (kind_ != Kind::Quotient || gauge == 0) {
        for (int i = 0; i < dim_; ++i) out[i] = uq[i];
        return;
    }
    const std::array<double, 4> r =
        quatMul({uq[0], uq[1], uq[2], uq[3]}, deck_[static_cast<size_t>(gauge)]);
    for (int i = 0; i < 4; ++i) out[i] = r[i];
}

int TargetModel::gaugeInverse(int g) const {
    if (kind_ != Kind::Quotient) return 0;
    return deckInv_[static_cast<size_t>(g)];
}

int TargetModel::gaugeCompose(int a, int b) const {
    if (kind_ != Kind::Quotient) return 0;
    return deckMult_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

double TargetModel::geodesicDist2(const double* up, const double* uq) const {
    switch (kind_) {
    case Kind::Circle: {
        const double a = std::atan2(up[0] * uq[1] - up[1] * uq[0],
                                    up[0] * uq[0] + up[1] * uq[1]);
        return a * a;
    }
    case Kind::FlatTorus: {
        const double a = std::atan2(up[0] * uq[1] - up[1] * uq[0],
                                    up[0] * uq[0] + up[1] * uq[1]);
        const double b = std::atan2(up[2] * uq[3] - up[3] * uq[2],
                                    up[2] * uq[2] + up[3] * uq[3]);
        return a * a + b * b;
    }
    case Kind::RP2: {
        const double c = std::abs(clampUnit(dot(up, uq, 3)));
        const double a = std::acos(c);
        return a * a;
    }
    case Kind::Quotient: {
        const std::array<double, 4> w = quatMul({uq[0], -uq[1], -uq[2], -uq[3]},
                                                {up[0], up[1], up[2], up[3]});
        double bestDot = -2.0;
        for (int g = 0; g < deckOrder(); ++g) {
            const double d = w[0] * deck_[size_t(g)][0] + w[1] * deck_[size_t(g)][1] +
                             w[2] * deck_[size_t(g)][2] + w[3] * deck_[size_t(g)][3];
            bestDot = std::max(bestDot, d);
        }
        const double a = 2.0 * std::acos(clampUnit(bestDot));   // doubled sphere metric
        return a * a;
    }
    }
    return 0.0;
}

void TargetModel::project(double* u, const double* hint) const {
    switch (kind_) {
    case Kind::Circle:
        normalize(u, 2, hint);
        break;
    case Kind::FlatTorus:
        normalize(u, 2, hint);
        normalize(u + 2, 2, hint + 2);
        break;
    case Kind::RP2: {
        // Maximise v^T M v for M built by the caller as a sum of outer
        // products; here u holds an unnormalised direction accumulated the
        // same way, so plain normalisation suffices.
        normalize(u, 3, hint);
        break;
    }
    case Kind::Quotient:
        normalize(u, 4, hint);
        break;
    }
}

double TargetModel::distToManifold(const double* u) const {
    switch (kind_) {
    case Kind::Circle:
        return std::abs(std::hypot(u[0], u[1]) - 1.0);
    case Kind::FlatTorus:
        return std::max(std::abs(std::hypot(u[0], u[1]) - 1.0),
                        std::abs(std::hypot(u[2], u[3]) - 1.0));
    case Kind::RP2:
        return std::abs(std::sqrt(dot(u, u, 3)) - 1.0);
    case Kind::Quotient:
        return std::abs(std::sqrt(dot(u, u, 4)) - 1.0);
    }
    return 0.0;
}

void TargetModel::embed(const double* u, double* out) const {
    if (kind_ == Kind::RP2) {
        const double s = 1.0 / std::sqrt(2.0);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) out[3 * r + c] = s * u[r] * u[c];
        return;
    }
    for (int i = 0; i < dim_; ++i) out[i] = u[i];
}

int TargetModel::deckClassOf(int gaugeIdx) const {
    return deckClass_.at(static_cast<size_t>(gaugeIdx));
}

int TargetModel::deckClassCount() const { return static_cast<int>(deckClassLength_.size()); }

double TargetModel::deckClassLength(int classIdx) const {
    return deckClassLength_.at(static_cast<size_t>(classIdx));
}

const topo::ManifoldDescriptor* TargetModel::catalogManifold() const { return manifold_.get(); }
const algebra::FiniteGroup* TargetModel::deckGroup() const { return group_.get(); }
const std::vector<algebra::ConjugacyClass>* TargetModel::deckClasses() const {
    return classes_.get();
}

} // namespace renorm::solver
