#pragma once

#include "relstate/half_int.hpp"
#include "relstate/rational.hpp"
#include "relstate/signed_sqrt.hpp"

namespace relstate {

/// Exact Clebsch-Gordan coefficient <J,M|j1,m1;j2,m2> in the
/// Condon-Shortley convention, computed by the Racah closed-form sum over
/// exact factorials. Returns zero when m1+m2 != M or the triangle
/// inequality |j1-j2| <= J <= j1+j2 fails. Throws std::domain_error for
/// labels that are not legal (j,m) pairs.
SignedSqrtRational cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// |cg|^2 as an exact rational.
BigRational cg_squared(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// Dimension of the symmetric subspace of N qudits of local dimension d:
/// binomial(N+d-1, N).
BigInt sym_dim(int d, int N);

/// binomial(2j, j+m) * x^(j+m) * (1-x)^(j-m): the |j,m> probability weight
/// of a spin-coherent state whose overlap with the quantization axis is x.
double coherent_weight(HalfInt j, HalfInt m, double x);
BigRational coherent_weight_exact(HalfInt j, HalfInt m, const BigRational& x);

}  // namespace relstate
