#ifndef RENORM_SOLVER_SYNHARMONY_HPP
#define RENORM_SOLVER_SYNHARMONY_HPP

#include <vector>

#include "renorm/solver/field.hpp"

namespace renorm::solver {

struct SynharmonyResult {
    std::vector<std::pair<double, double>> perT;   // (T, excess energy)
    double estimate = 0.0;                         // min over the T list
};

// Minimal discrete cylinder energy on S^1 x [0,T] with end traces gamma and
// beta, minus T * lambda(gamma)^2 / (4 pi), minimised over the T list.  The
// cylinder functional uses intrinsic (geodesic) edge distances, so the
// uniformly sampled geodesic has excess exactly zero and the estimate stays
// nonnegative up to solver tolerance.
SynharmonyResult synharmonyEstimate(const TargetModel& target, const LoopSpec& gamma,
                                    const LoopSpec& beta,
                                    std::vector<double> tList = {0.5, 1, 2, 4, 8},
                                    int nTheta = 128, RelaxConfig relax = {});

} // namespace renorm::solver

#endif
