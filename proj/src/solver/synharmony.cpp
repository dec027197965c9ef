#include "renorm/solver/synharmony.hpp"

#include <algorithm>
#include <cmath>

#include "renorm/errors.hpp"

namespace renorm::solver {

namespace {

const double kPi = std::acos(-1.0);

double cylinderExcess(const TargetModel& target, const LoopSpec& gamma, const LoopSpec& beta,
                      double T, int nTheta, const RelaxConfig& relax) {
    const double hTheta = 2 * kPi / nTheta;
    const int nT = std::max(2, static_cast<int>(std::lround(T / hTheta)));
    const double hT = T / nT;
    const int rows = nT + 1;
    const int nVertices = rows * nTheta;

    std::vector<GridEdge> edges;
    edges.reserve(static_cast<size_t>(nVertices) * 2);
    auto id = [nTheta](int row, int col) { return row * nTheta + ((col % nTheta + nTheta) % nTheta); };
    for (int r = 0; r < rows; ++r) {
        // End rows own half a t-slab, so their circumferential edges carry
        // half the dual width.
        const double wTheta = (r == 0 || r == rows - 1) ? 0.5 * hT / hTheta : hT / hTheta;
        for (int c = 0; c < nTheta; ++c) {
            edges.push_back({id(r, c), id(r, c + 1), wTheta});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), hTheta / hT});
        }
    }

    std::vector<char> fixed(static_cast<size_t>(nVertices), 0);
    for (int c = 0; c < nTheta; ++c) {
        fixed[static_cast<size_t>(id(0, c))] = 1;
        fixed[static_cast<size_t>(id(rows - 1, c))] = 1;
    }

    FieldState field(target, nVertices, std::move(edges), std::move(fixed),
                     EnergyMetric::Intrinsic);
    std::vector<char> colors(static_cast<size_t>(nVertices), 0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < nTheta; ++c)
            colors[static_cast<size_t>(id(r, c))] = static_cast<char>((r + c) % 2);
    field.setColors(colors);

    // Linear blend of the end traces, projected back to the manifold.
    double a[9], b[9];
    for (int r = 0; r < rows; ++r) {
        const double s = static_cast<double>(r) / (rows - 1);
        for (int c = 0; c < nTheta; ++c) {
            const double theta = c * hTheta;
            loopValue(target, gamma, theta, a);
            loopValue(target, beta, theta, b);
            double* dst = field.value(id(r, c));
            for (int d = 0; d < target.dim(); ++d) dst[d] = (1 - s) * a[d] + s * b[d];
            target.project(dst, a);
        }
    }

    field.relax(relax);
    const double lambda = loopClassLambda(target, gamma);
    return field.energy() - T * lambda * lambda / (4 * kPi);
}

} // namespace

SynharmonyResult synharmonyEstimate(const TargetModel& target, const LoopSpec& gamma,
                                    const LoopSpec& beta, std::vector<double> tList, int nTheta,
                                    RelaxConfig relax) {
    if (loopClassId(target, gamma) != loopClassId(target, beta))
        throw NonHomotopicLoops("synharmonyEstimate: end traces are not homotopic");
    if (tList.empty()) throw ConfigInvalid("synharmonyEstimate: empty T list");
    std::sort(tList.begin(), tList.end());

    SynharmonyResult result;
    result.estimate = 0.0;
    bool first = true;
    for (double T : tList) {
        const double excess = cylinderExcess(target, gamma, beta, T, nTheta, relax);
        result.perT.emplace_back(T, excess);
        if (first || excess < result.estimate) {
            result.estimate = excess;
            first = false;
        }
    }
    return result;
}

} // namespace renorm::solver
