#ifndef RENORM_SOLVER_LOOPS_HPP
#define RENORM_SOLVER_LOOPS_HPP

#include <array>
#include <optional>
#include <string>

#include "renorm/solver/target.hpp"

namespace renorm::solver {

// Parametric boundary loop on a target manifold, evaluated at anticlockwise
// angle theta.  Every loop here is a closed geodesic (or a sigma-composed
// cover of one), which is what the energy definitions prescribe on the
// excised circles.
//
//   Circle     theta -> e^{i (degree * theta + phase)}
//   FlatTorus  theta -> (e^{i (n theta + phase)}, e^{i (m theta + phase2)})
//   RP2        theta -> projector of v(degree * theta / 2 + phase); degree 1
//              is the minimising geodesic sigma, higher degree the cover
//              sigma o z^degree
//   Quotient   theta -> base * exp(theta * log(h) / 2 pi), h = deckElement
struct LoopSpec {
    int degree = 0;
    int degree2 = 0;
    double phase = 0.0;
    double phase2 = 0.0;
    int deckElement = 0;                      // group element index of h
    std::array<double, 4> base{1, 0, 0, 0};   // left offset for quotient loops

    // Loop precomposed with the domain rotation R(offset).
    LoopSpec rotated(double offset) const;
};

void loopValue(const TargetModel& target, const LoopSpec& loop, double theta, double* out);

// Minimal length of the loop's free homotopy class.
double loopClassLambda(const TargetModel& target, const LoopSpec& loop);
bool loopIsTrivial(const TargetModel& target, const LoopSpec& loop);

// Class id in the target's own bookkeeping: degree (circle), packed degrees
// (torus), parity (RP2), deck conjugacy-class index (quotient).
int loopClassId(const TargetModel& target, const LoopSpec& loop);

// Catalog homotopy class for targets whose manifold the topology module
// knows; nullopt for Gamma = {+-1} quotients and torus targets are mapped to
// their lattice classes.
std::optional<topo::HomotopyClass> loopCatalogClass(const TargetModel& target,
                                                    const LoopSpec& loop);

// Loop with the deck element conjugated by group element c (same free
// homotopy class, different minimising geodesic).  Quotient targets only.
LoopSpec conjugatedLoop(const TargetModel& target, const LoopSpec& loop, int conjugator);

} // namespace renorm::solver

#endif
