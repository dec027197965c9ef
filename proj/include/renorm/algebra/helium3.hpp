#ifndef RENORM_ALGEBRA_HELIUM3_HPP
#define RENORM_ALGEBRA_HELIUM3_HPP

namespace renorm::algebra {

// Minimal length of the homotopy class m in Z4 for the dipole-free A-phase
// manifold (SU(2) x SU(2)) / H, where H = union_k (k,i)^k H0 and H0 is the
// circle {(cos t + sin t * i, 1)}.  The length is the product-metric distance
// from the identity to the coset component (k,i)^m H0, minimised over the H0
// angle on a theta grid and refined by golden-section search around the best
// sample.
double componentDistanceHelium3(int m, int thetaSamples = 256);

} // namespace renorm::algebra

#endif
