#pragma once

#include "relstate/antiparallel.hpp"
#include "relstate/rng.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace relstate::sim {

struct SimConfig {
    int N = 1;
    int M = 1;
    std::uint64_t shots = 1;
    std::uint64_t seed = 0;
};

struct SimResult {
    double empirical_mse = 0.0;
    double std_error = 0.0;
    double analytic_mse = 0.0;
    std::uint64_t shots_used = 0;
    /// run_simulation keys by block label k; simulate_antiparallel keys by
    /// outcome index, with the spin-3/2 outcome last.
    std::map<int, std::uint64_t> per_outcome_counts;
    std::string rng_algorithm;
};

/// Overlap |<psi1|psi2>|^2 of an independent Haar pair of qubits, reduced
/// to its distribution law: uniform on [0,1].
double sample_overlap(CounterRng& rng);

/// Same for qudits of dimension d: Beta(1, d-1), i.e. 1 - u^(1/(d-1)).
double sample_overlap_qudit(CounterRng& rng, int d);

/// Reference samplers that construct the states explicitly (normalized
/// complex Gaussian vectors); used to validate the reductions above.
double sample_overlap_explicit(CounterRng& rng, int d);

/// Simulates the optimal parallel-case measurement: per shot draws the
/// overlap, samples a block from the outcome distribution, guesses that
/// block's optimal value and accumulates the squared error. Results are
/// bit-identical for a fixed seed regardless of `threads` (shots are
/// sharded on fixed 65536-shot boundaries with per-shot RNG streams, and
/// shard partials are reduced in index order). threads = 0 picks the
/// hardware concurrency.
SimResult run_simulation(const SimConfig& cfg, int threads = 0);

struct MomentEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of I_k^alpha = E_x[p_k(x) x^alpha] with x uniform;
/// statistical cross-check of the exact moments beyond the dense-oracle
/// range.
MomentEstimate moment_oracle(int N, int M, int k, int alpha, std::uint64_t samples,
                             std::uint64_t seed);

/// Full-state simulation of the antiparallel-pair measurement: builds the
/// three-qubit state pi(g1)x2 |01> (x) pi(g2)|0> for Haar g1, g2,
/// materializes the POVM from the isotypic operators and samples outcomes.
/// Throws std::invalid_argument if any shot's probabilities fail to sum to
/// 1 within 1e-10 before normalization.
SimResult simulate_antiparallel(const antiparallel::AntiparallelPovm& povm, std::uint64_t shots,
                                std::uint64_t seed, int threads = 0);

}  // namespace relstate::sim
