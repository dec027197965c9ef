#include "renorm/solver/field.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "renorm/errors.hpp"

namespace renorm::solver {

namespace {

const double kPi = std::acos(-1.0);

void powerIterate(const double M[6], const double* start, double* out) {
    // M packed as (xx, yy, zz, xy, xz, yz); positive semidefinite, so the
    // Rayleigh quotient is non-decreasing along plain power iteration.
    double v[3] = {start[0], start[1], start[2]};
    for (int it = 0; it < 16; ++it) {
        double w[3] = {M[0] * v[0] + M[3] * v[1] + M[4] * v[2],
                       M[3] * v[0] + M[1] * v[1] + M[5] * v[2],
                       M[4] * v[0] + M[5] * v[1] + M[2] * v[2]};
        const double n = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
        if (n < 1e-30) break;   // degenerate neighbourhood; keep the hint
        v[0] = w[0] / n; v[1] = w[1] / n; v[2] = w[2] / n;
    }
    out[0] = v[0]; out[1] = v[1]; out[2] = v[2];
}

} // namespace

FieldState::FieldState(const TargetModel& target, int nVertices, std::vector<GridEdge> edges,
                       std::vector<char> fixed, EnergyMetric metric)
    : target_(target),
      metric_(metric),
      dim_(target.dim()),
      nVertices_(nVertices),
      values_(static_cast<size_t>(nVertices) * target.dim(), 0.0),
      edges_(std::move(edges)),
      gauges_(edges_.size(), 0),
      fixed_(std::move(fixed)) {
    // CSR adjacency.
    std::vector<int> degree(static_cast<size_t>(nVertices_), 0);
    for (const GridEdge& e : edges_) {
        degree[static_cast<size_t>(e.p)]++;
        degree[static_cast<size_t>(e.q)]++;
    }
    adjStart_.assign(static_cast<size_t>(nVertices_) + 1, 0);
    for (int v = 0; v < nVertices_; ++v)
        adjStart_[static_cast<size_t>(v) + 1] =
            adjStart_[static_cast<size_t>(v)] + degree[static_cast<size_t>(v)];
    adjEdge_.resize(adjStart_.back());
    adjOther_.resize(adjStart_.back());
    adjForward_.resize(adjStart_.back());
    std::vector<int> cursor(adjStart_.begin(), adjStart_.end() - 1);
    for (size_t e = 0; e < edges_.size(); ++e) {
        const GridEdge& ed = edges_[e];
        adjEdge_[static_cast<size_t>(cursor[static_cast<size_t>(ed.p)])] = static_cast<int>(e);
        adjOther_[static_cast<size_t>(cursor[static_cast<size_t>(ed.p)])] = ed.q;
        adjForward_[static_cast<size_t>(cursor[static_cast<size_t>(ed.p)])] = 1;
        cursor[static_cast<size_t>(ed.p)]++;
        adjEdge_[static_cast<size_t>(cursor[static_cast<size_t>(ed.q)])] = static_cast<int>(e);
        adjOther_[static_cast<size_t>(cursor[static_cast<size_t>(ed.q)])] = ed.p;
        adjForward_[static_cast<size_t>(cursor[static_cast<size_t>(ed.q)])] = 0;
        cursor[static_cast<size_t>(ed.q)]++;
    }
    for (int v = 0; v < nVertices_; ++v)
        if (!fixed_[static_cast<size_t>(v)]) freeOrder_.push_back(v);
}

void FieldState::setColors(const std::vector<char>& colors) {
    for (auto& group : colorOrder_) group.clear();
    for (int v : freeOrder_) {
        const int c = std::min<int>(colors[static_cast<size_t>(v)], 2);
        colorOrder_[static_cast<size_t>(c)].push_back(v);
    }
}

double FieldState::energy() const {
    double sum = 0.0;
    for (size_t e = 0; e < edges_.size(); ++e) {
        const GridEdge& ed = edges_[e];
        const double d2 = edgeIntrinsic(e)
                              ? target_.geodesicDist2(value(ed.p), value(ed.q))
                              : target_.edgeDist2Gauged(value(ed.p), value(ed.q), gauges_[e]);
        sum += 0.5 * ed.w * d2;
    }
    return sum;
}

void FieldState::setIntrinsicEdges(std::vector<char> mask) {
    intrinsicEdge_ = std::move(mask);
}

double FieldState::chordalEnergy() {
    refreshGauges();
    double sum = 0.0;
    for (size_t e = 0; e < edges_.size(); ++e)
        sum += 0.5 * edges_[e].w *
               target_.edgeDist2Gauged(value(edges_[e].p), value(edges_[e].q), gauges_[e]);
    return sum;
}

void FieldState::refreshGauges() {
    if (!target_.hasGauges()) return;
    for (size_t e = 0; e < edges_.size(); ++e) {
        int g = 0;
        target_.edgeDist2(value(edges_[e].p), value(edges_[e].q), &g);
        gauges_[e] = g;
    }
}

double FieldState::localEnergy(int v, const double* candidate) const {
    double sum = 0.0;
    for (int s = adjStart_[static_cast<size_t>(v)]; s < adjStart_[static_cast<size_t>(v) + 1];
         ++s) {
        const int e = adjEdge_[static_cast<size_t>(s)];
        const int q = adjOther_[static_cast<size_t>(s)];
        const double w = edges_[static_cast<size_t>(e)].w;
        if (edgeIntrinsic(static_cast<size_t>(e))) {
            sum += 0.5 * w * target_.geodesicDist2(candidate, value(q));
            continue;
        }
        if (target_.hasGauges()) {
            const int g = adjForward_[static_cast<size_t>(s)]
                              ? gauges_[static_cast<size_t>(e)]
                              : target_.gaugeInverse(gauges_[static_cast<size_t>(e)]);
            sum += 0.5 * w * target_.edgeDist2Gauged(candidate, value(q), g);
        } else {
            sum += 0.5 * w * target_.edgeDist2(candidate, value(q));
        }
    }
    return sum;
}

void FieldState::sweepRange(const std::vector<int>& order, double omega) {
    const bool rp2 = target_.kind() == TargetModel::Kind::RP2;
    double acc[9];
    double aligned[9];
    double cand[9];
    double trial[9];
    for (int v : order) {
        const double* cur = value(v);
        if (rp2) {
            double M[6] = {0, 0, 0, 0, 0, 0};
            for (int s = adjStart_[static_cast<size_t>(v)];
                 s < adjStart_[static_cast<size_t>(v) + 1]; ++s) {
                const double w = edges_[static_cast<size_t>(adjEdge_[static_cast<size_t>(s)])].w;
                const double* q = value(adjOther_[static_cast<size_t>(s)]);
                M[0] += w * q[0] * q[0];
                M[1] += w * q[1] * q[1];
                M[2] += w * q[2] * q[2];
                M[3] += w * q[0] * q[1];
                M[4] += w * q[0] * q[2];
                M[5] += w * q[1] * q[2];
            }
            powerIterate(M, cur, cand);
        } else {
            for (int c = 0; c < dim_; ++c) acc[c] = 0.0;
            for (int s = adjStart_[static_cast<size_t>(v)];
                 s < adjStart_[static_cast<size_t>(v) + 1]; ++s) {
                const int e = adjEdge_[static_cast<size_t>(s)];
                const int q = adjOther_[static_cast<size_t>(s)];
                const double w = edges_[static_cast<size_t>(e)].w;
                if (target_.hasGauges()) {
                    const int g = adjForward_[static_cast<size_t>(s)]
                                      ? gauges_[static_cast<size_t>(e)]
                                      : target_.gaugeInverse(gauges_[static_cast<size_t>(e)]);
                    target_.alignedValue(value(q), g, aligned);
                } else {
                    const double* qv = value(q);
                    for (int c = 0; c < dim_; ++c) aligned[c] = qv[c];
                }
                for (int c = 0; c < dim_; ++c) acc[c] += w * aligned[c];
            }
            for (int c = 0; c < dim_; ++c) cand[c] = acc[c];
            target_.project(cand, cur);
        }

        // Accept the over-relaxed trial whenever it does not lose to the
        // current value; the exact local minimiser is the monotone fallback.
        // In the intrinsic metric the projected average is only a surrogate
        // minimiser, so it gets the same guard.
        const double* chosen = cand;
        const bool surrogate =
            metric_ == EnergyMetric::Intrinsic || !intrinsicEdge_.empty();
        if (omega != 1.0) {
            for (int c = 0; c < dim_; ++c) trial[c] = cur[c] + omega * (cand[c] - cur[c]);
            target_.project(trial, cur);
            const double eCur = localEnergy(v, cur);
            if (localEnergy(v, trial) <= eCur)
                chosen = trial;
            else if (surrogate && localEnergy(v, cand) > eCur)
                chosen = cur;
        } else if (surrogate) {
            if (localEnergy(v, cand) > localEnergy(v, cur)) chosen = cur;
        }
        double* dst = value(v);
        if (chosen != dst)
            for (int c = 0; c < dim_; ++c) dst[c] = chosen[c];
    }
}

int FieldState::relax(const RelaxConfig& cfg) {
    energyHistory_.clear();
    double prev = energy();
    energyHistory_.push_back(prev);
    double lastDecrease = 0.0;
    for (int sweep = 1; sweep <= cfg.maxSweeps; ++sweep) {
        if (cfg.threads > 1 && !colorOrder_[0].empty()) {
            for (int color = 0; color < 2; ++color) {
                const std::vector<int>& order = colorOrder_[color];
                if (order.empty()) continue;
                const int nThreads = cfg.threads;
                std::vector<std::thread> pool;
                const size_t chunk = (order.size() + nThreads - 1) / nThreads;
                for (int t = 0; t < nThreads; ++t) {
                    const size_t lo = t * chunk;
                    const size_t hi = std::min(order.size(), lo + chunk);
                    if (lo >= hi) break;
                    pool.emplace_back([this, &order, lo, hi, &cfg]() {
                        std::vector<int> slice(order.begin() + lo, order.begin() + hi);
                        sweepRange(slice, cfg.omega);
                    });
                }
                for (auto& th : pool) th.join();
            }
            sweepRange(colorOrder_[2], cfg.omega);
        } else {
            sweepRange(freeOrder_, cfg.omega);
        }
        if (metric_ == EnergyMetric::Chordal) refreshGauges();
        const double cur = energy();
        energyHistory_.push_back(cur);
        lastDecrease = prev - cur;
        if (!(cur <= prev + 1e-9 * (1.0 + std::abs(prev))))
            throw NonConvergence("relax: energy increased across a sweep");
        if (lastDecrease < cfg.tol * std::max(1.0, std::abs(cur))) return sweep;
        prev = cur;
    }
    if (lastDecrease > 100.0 * cfg.tol * std::max(1.0, std::abs(prev)))
        throw NonConvergence("relax: sweep budget exhausted before convergence");
    return cfg.maxSweeps;
}

double FieldState::maxDistToManifold() const {
    double worst = 0.0;
    for (int v = 0; v < nVertices_; ++v)
        worst = std::max(worst, target_.distToManifold(value(v)));
    return worst;
}

GridField::GridField(std::shared_ptr<const Grid> grid, const TargetModel& target,
                     const LoopSpec& outer, const std::vector<LoopSpec>& charges,
                     bool freeInnerTraces)
    : grid_(std::move(grid)),
      target_(target),
      outer_(outer),
      charges_(charges),
      state_(target, grid_->vertexCount(),
             grid_->edges,
             [this, freeInnerTraces]() {
                 std::vector<char> fixed(static_cast<size_t>(grid_->vertexCount()), 0);
                 for (int v = 0; v < grid_->vertexCount(); ++v) {
                     const int curve = grid_->vertices[static_cast<size_t>(v)].curve;
                     if (curve == 0 || (curve > 0 && !freeInnerTraces))
                         fixed[static_cast<size_t>(v)] = 1;
                 }
                 return fixed;
             }()) {
    if (charges_.size() != grid_->spec.singularities.size())
        throw ConfigInvalid("GridField: one charge per singularity required");
    std::vector<char> colors(static_cast<size_t>(grid_->vertexCount()), 0);
    for (int v = 0; v < grid_->vertexCount(); ++v) {
        const GridVertex& gv = grid_->vertices[static_cast<size_t>(v)];
        if (gv.curve >= 0) {
            colors[static_cast<size_t>(v)] = 2;   // boundary vertices sweep sequentially
            continue;
        }
        const long i = std::lround(gv.x / grid_->spec.h);
        const long j = std::lround(gv.y / grid_->spec.h);
        colors[static_cast<size_t>(v)] = static_cast<char>(((i + j) % 2 + 2) % 2);
    }
    state_.setColors(colors);
    setBoundaryValues();
    initAngular();
}

void GridField::setBoundaryValues() {
    for (int v = 0; v < grid_->vertexCount(); ++v) {
        const GridVertex& gv = grid_->vertices[static_cast<size_t>(v)];
        if (gv.free()) continue;
        if (gv.curve == 0)
            loopValue(target_, outer_, gv.param, state_.value(v));
        else
            loopValue(target_, charges_[static_cast<size_t>(gv.curve - 1)], gv.param,
                      state_.value(v));
    }
}

void GridField::initAngular() {
    const auto& sing = grid_->spec.singularities;
    double tmp[9];
    for (int v = 0; v < grid_->vertexCount(); ++v) {
        const GridVertex& gv = grid_->vertices[static_cast<size_t>(v)];
        if (!gv.free()) continue;
        double* dst = state_.value(v);
        switch (target_.kind()) {
        case TargetModel::Kind::Circle: {
            double a = 0.0;
            for (size_t s = 0; s < sing.size(); ++s)
                a += charges_[s].degree * std::atan2(gv.y - sing[s][1], gv.x - sing[s][0]) +
                     charges_[s].phase;
            if (sing.empty()) a = outer_.phase;
            dst[0] = std::cos(a);
            dst[1] = std::sin(a);
            break;
        }
        case TargetModel::Kind::FlatTorus: {
            double a = 0.0, b = 0.0;
            for (size_t s = 0; s < sing.size(); ++s) {
                const double th = std::atan2(gv.y - sing[s][1], gv.x - sing[s][0]);
                a += charges_[s].degree * th + charges_[s].phase;
                b += charges_[s].degree2 * th + charges_[s].phase2;
            }
            dst[0] = std::cos(a); dst[1] = std::sin(a);
            dst[2] = std::cos(b); dst[3] = std::sin(b);
            break;
        }
        case TargetModel::Kind::RP2: {
            double a = 0.0;
            for (size_t s = 0; s < sing.size(); ++s)
                a += 0.5 * charges_[s].degree *
                         std::atan2(gv.y - sing[s][1], gv.x - sing[s][0]) +
                     charges_[s].phase;
            dst[0] = std::cos(a); dst[1] = std::sin(a); dst[2] = 0.0;
            break;
        }
        case TargetModel::Kind::Quotient: {
            double q[4] = {1, 0, 0, 0};
            for (size_t s = 0; s < sing.size(); ++s) {
                double th = std::atan2(gv.y - sing[s][1], gv.x - sing[s][0]);
                if (th < 0) th += 2 * kPi;
                loopValue(target_, charges_[s], th, tmp);
                const double r[4] = {q[0] * tmp[0] - q[1] * tmp[1] - q[2] * tmp[2] - q[3] * tmp[3],
                                     q[0] * tmp[1] + q[1] * tmp[0] + q[2] * tmp[3] - q[3] * tmp[2],
                                     q[0] * tmp[2] - q[1] * tmp[3] + q[2] * tmp[0] + q[3] * tmp[1],
                                     q[0] * tmp[3] + q[1] * tmp[2] - q[2] * tmp[1] + q[3] * tmp[0]};
                for (int c = 0; c < 4; ++c) q[c] = r[c];
            }
            for (int c = 0; c < 4; ++c) dst[c] = q[c];
            break;
        }
        }
    }
    state_.refreshGauges();
}

void GridField::perturb(unsigned seed, double amplitude) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> noise(-amplitude, amplitude);
    for (int v = 0; v < grid_->vertexCount(); ++v) {
        const GridVertex& gv = grid_->vertices[static_cast<size_t>(v)];
        if (!gv.free()) continue;
        double* dst = state_.value(v);
        double prev[9];
        for (int c = 0; c < target_.dim(); ++c) prev[c] = dst[c];
        for (int c = 0; c < target_.dim(); ++c) dst[c] += noise(rng);
        target_.project(dst, prev);
    }
    state_.refreshGauges();
}

int GridField::holonomyAround(double cx, double cy, double radius) const {
    const int samples = 128;
    const double h = grid_->spec.h;
    std::vector<int> loopVertices;
    for (int m = 0; m <= samples; ++m) {
        const double th = 2 * kPi * m / samples;
        const double x = cx + radius * std::cos(th);
        const double y = cy + radius * std::sin(th);
        const int ci = static_cast<int>(std::lround(x / h));
        const int cj = static_cast<int>(std::lround(y / h));
        int found = -1;
        for (int ring = 0; ring <= 2 && found < 0; ++ring)
            for (int dj = -ring; dj <= ring && found < 0; ++dj)
                for (int di = -ring; di <= ring && found < 0; ++di)
                    found = grid_->latticeAt(ci + di, cj + dj);
        if (found < 0) throw CircleOutOfDomain("holonomy circle leaves the grid");
        if (loopVertices.empty() || loopVertices.back() != found)
            loopVertices.push_back(found);
    }
    if (loopVertices.front() != loopVertices.back()) loopVertices.push_back(loopVertices.front());

    switch (target_.kind()) {
    case TargetModel::Kind::Circle: {
        double total = 0.0;
        for (size_t m = 1; m < loopVertices.size(); ++m) {
            const double* a = state_.value(loopVertices[m - 1]);
            const double* b = state_.value(loopVertices[m]);
            total += std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
        }
        return static_cast<int>(std::lround(total / (2 * kPi)));
    }
    case TargetModel::Kind::FlatTorus: {
        double t1 = 0.0, t2 = 0.0;
        for (size_t m = 1; m < loopVertices.size(); ++m) {
            const double* a = state_.value(loopVertices[m - 1]);
            const double* b = state_.value(loopVertices[m]);
            t1 += std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
            t2 += std::atan2(a[2] * b[3] - a[3] * b[2], a[2] * b[2] + a[3] * b[3]);
        }
        return static_cast<int>(std::lround(t1 / (2 * kPi))) * 4096 +
               static_cast<int>(std::lround(t2 / (2 * kPi)));
    }
    case TargetModel::Kind::RP2: {
        int sign = 1;
        for (size_t m = 1; m < loopVertices.size(); ++m) {
            const double* a = state_.value(loopVertices[m - 1]);
            const double* b = state_.value(loopVertices[m]);
            const double d = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
            if (d < 0) sign = -sign;
        }
        return sign < 0 ? 1 : 0;
    }
    case TargetModel::Kind::Quotient: {
        int gauge = 0;   // lifted sample m equals u_m * deck[gauge]
        double lift[4];
        const double* first = state_.value(loopVertices[0]);
        for (int c = 0; c < 4; ++c) lift[c] = first[c];
        for (size_t m = 1; m < loopVertices.size(); ++m) {
            const double* u = state_.value(loopVertices[m]);
            int g = 0;
            target_.edgeDist2(lift, u, &g);
            target_.alignedValue(u, g, lift);
            gauge = g;
        }
        return target_.deckClassOf(gauge);
    }
    }
    return 0;
}

} // namespace renorm::solver
