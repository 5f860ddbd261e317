#pragma once

#include "relstate/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace relstate::parallel {

/// Blocks of the N+M qubit decomposition are labelled by the integer k
/// (twice the block spin), running over {M-N, M-N+2, ..., M+N}.
struct MomentTriple {
    BigRational i0, i1, i2;
};

using MomentMap = std::map<int, MomentTriple>;

/// Optimal diagonal POVM: one guess value per irreducible block.
struct PovmSpec {
    std::vector<std::pair<int, BigRational>> entries;  // (k, guess), ascending k
};

struct Variance {
    BigRational exact;
    double value = 0.0;
};

/// Exact moment integrals (I_k^0, I_k^1, I_k^2) for every admissible block
/// of the (N, M) problem. Requires 1 <= N <= M.
MomentMap moments(int N, int M);

/// Per-block guesses x_k = clamp(I_k^1 / I_k^0, 0, 1).
PovmSpec optimal_povm(int N, int M);

/// Minimal mean variance: sum over blocks of the per-block quadratic
/// evaluated at the (clamped) optimal guess; equals
/// sum_k (I_k^2 - (I_k^1)^2 / I_k^0) whenever no clamping occurs.
Variance optimal_variance(int N, int M);

/// Probability of landing in block k when the true overlap is x.
std::map<int, double> outcome_distribution(int N, int M, double x);

/// Exact coefficients of the block probability p_k(x) as a polynomial in
/// x (index = power). Degree is at most M.
std::vector<BigRational> block_probability_polynomial(int N, int M, int k);

/// Integral over [0,1] of p(x) * x^alpha for a polynomial p given by
/// coefficients; exact.
BigRational integrate_polynomial_moment(const std::vector<BigRational>& poly, int alpha);

/// Admissible block labels for (N, M), ascending.
std::vector<int> block_labels(int N, int M);

}  // namespace relstate::parallel
