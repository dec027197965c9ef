#include "renorm/solver/loops.hpp"

#include <cmath>

#include "renorm/errors.hpp"

namespace renorm::solver {

namespace {

const double kPi = std::acos(-1.0);

std::array<double, 4> quatMul(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

// Axis-angle data of the deck element: h = cos(alpha) + sin(alpha) n.
struct AxisAngle {
    double alpha = 0.0;
    std::array<double, 3> axis{0, 0, 1};
};

AxisAngle axisAngleOf(const TargetModel& target, int deckElement) {
    const auto& h = target.deckElements().at(static_cast<size_t>(deckElement));
    AxisAngle aa;
    aa.alpha = std::acos(std::clamp(h[0], -1.0, 1.0));
    const double s = std::sqrt(std::max(0.0, 1.0 - h[0] * h[0]));
    if (s > 1e-14) {
        aa.axis = {h[1] / s, h[2] / s, h[3] / s};
    }
    return aa;
}

} // namespace

LoopSpec LoopSpec::rotated(double offset) const {
    LoopSpec out = *this;
    out.phase += offset;
    out.phase2 += offset;
    return out;
}

void loopValue(const TargetModel& target, const LoopSpec& loop, double theta, double* out) {
    switch (target.kind()) {
    case TargetModel::Kind::Circle: {
        const double a = loop.degree * theta + loop.phase;
        out[0] = std::cos(a);
        out[1] = std::sin(a);
        return;
    }
    case TargetModel::Kind::FlatTorus: {
        const double a = loop.degree * theta + loop.phase;
        const double b = loop.degree2 * theta + loop.phase2;
        out[0] = std::cos(a);
        out[1] = std::sin(a);
        out[2] = std::cos(b);
        out[3] = std::sin(b);
        return;
    }
    case TargetModel::Kind::RP2: {
        const double a = 0.5 * loop.degree * theta + loop.phase;
        out[0] = std::cos(a);
        out[1] = std::sin(a);
        out[2] = 0.0;
        return;
    }
    case TargetModel::Kind::Quotient: {
        // base * exp((theta + phase) * alpha * n / (2 pi))
        const AxisAngle aa = axisAngleOf(target, loop.deckElement);
        const double t = (theta + loop.phase) * aa.alpha / (2 * kPi);
        const std::array<double, 4> step{std::cos(t), std::sin(t) * aa.axis[0],
                                         std::sin(t) * aa.axis[1], std::sin(t) * aa.axis[2]};
        const std::array<double, 4> v = quatMul(loop.base, step);
        for (int i = 0; i < 4; ++i) out[i] = v[i];
        return;
    }
    }
}

double loopClassLambda(const TargetModel& target, const LoopSpec& loop) {
    switch (target.kind()) {
    case TargetModel::Kind::Circle:
        return 2 * kPi * std::abs(loop.degree);
    case TargetModel::Kind::FlatTorus:
        return 2 * kPi *
               std::sqrt(double(loop.degree) * loop.degree + double(loop.degree2) * loop.degree2);
    case TargetModel::Kind::RP2:
        return (loop.degree % 2 == 0) ? 0.0 : kPi;
    case TargetModel::Kind::Quotient:
        return target.deckClassLength(target.deckClassOf(loop.deckElement));
    }
    return 0.0;
}

bool loopIsTrivial(const TargetModel& target, const LoopSpec& loop) {
    switch (target.kind()) {
    case TargetModel::Kind::Circle:
        return loop.degree == 0;
    case TargetModel::Kind::FlatTorus:
        return loop.degree == 0 && loop.degree2 == 0;
    case TargetModel::Kind::RP2:
        return loop.degree % 2 == 0;
    case TargetModel::Kind::Quotient:
        return loop.deckElement == 0;
    }
    return true;
}

int loopClassId(const TargetModel& target, const LoopSpec& loop) {
    switch (target.kind()) {
    case TargetModel::Kind::Circle:
        return loop.degree;
    case TargetModel::Kind::FlatTorus:
        return loop.degree * 4096 + loop.degree2;
    case TargetModel::Kind::RP2:
        return ((loop.degree % 2) + 2) % 2;
    case TargetModel::Kind::Quotient:
        return target.deckClassOf(loop.deckElement);
    }
    return 0;
}

std::optional<topo::HomotopyClass> loopCatalogClass(const TargetModel& target,
                                                    const LoopSpec& loop) {
    switch (target.kind()) {
    case TargetModel::Kind::Circle:
        return topo::latticeClass(topo::ManifoldDescriptor::circle(), loop.degree);
    case TargetModel::Kind::FlatTorus:
        return topo::latticeClass(topo::ManifoldDescriptor::flatTorus(), loop.degree,
                                  loop.degree2);
    case TargetModel::Kind::RP2:
        return topo::cyclicClass(topo::ManifoldDescriptor::projectiveSpace(2),
                                 ((loop.degree % 2) + 2) % 2);
    case TargetModel::Kind::Quotient: {
        const topo::ManifoldDescriptor* man = target.catalogManifold();
        if (!man) return std::nullopt;
        const topo::FiniteModelData* data = man->finiteData();
        const int algClass = target.deckClassOf(loop.deckElement);
        return topo::finiteClass(*man, data->algToCatalog[static_cast<size_t>(algClass)]);
    }
    }
    return std::nullopt;
}

LoopSpec conjugatedLoop(const TargetModel& target, const LoopSpec& loop, int conjugator) {
    if (target.kind() != TargetModel::Kind::Quotient)
        throw ConfigInvalid("conjugatedLoop: quotient targets only");
    const algebra::FiniteGroup* g = target.deckGroup();
    LoopSpec out = loop;
    out.deckElement =
        g->multiply(g->multiply(conjugator, loop.deckElement), g->inverse(conjugator));
    return out;
}

} // namespace renorm::solver
