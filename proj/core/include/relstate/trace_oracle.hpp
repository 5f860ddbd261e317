#pragma once

#include "relstate/parallel.hpp"
#include "relstate/rat_matrix.hpp"

namespace relstate::oracle {

/// Brute-force evaluation of the moment integrals as explicit operator
/// traces on dense (N+M+2)-qubit spaces, in exact rational arithmetic.
/// Deliberately independent of the Clebsch-Gordan path: block projectors
/// come from Lagrange interpolation in the total-spin operator J^2 (itself
/// assembled from SWAPs), and symmetric-subspace projectors from averaged
/// permutations. Capped at M <= 3 to keep dimensions at 256.
parallel::MomentMap parallel_trace_moments(int N, int M);

/// The spin-k/2 block projector of the N-copy x M-copy space, embedded in
/// the full (C^2)^(N+M). Exposed for tests.
RatMat block_projector(int N, int M, int k);

}  // namespace relstate::oracle
