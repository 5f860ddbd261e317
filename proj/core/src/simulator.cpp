#include "relstate/simulator.hpp"

#include "relstate/cg.hpp"
#include "relstate/half_int.hpp"
#include "relstate/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace relstate::sim {

namespace {

constexpr std::uint64_t kShardSize = 1u << 16;

struct ShardAccum {
    double sum_err = 0.0;
    double sum_err2 = 0.0;
    std::vector<std::uint64_t> counts;
};

// Runs fn(shot, accum) over every shot, sharded on fixed boundaries so the
// reduction is independent of the number of worker threads.
template <typename PerShot>
ShardAccum sharded_loop(std::uint64_t shots, std::size_t outcome_slots, int threads,
                        const PerShot& fn) {
    const std::uint64_t num_shards = (shots + kShardSize - 1) / kShardSize;
    std::vector<ShardAccum> shards(num_shards);
    for (auto& s : shards) s.counts.assign(outcome_slots, 0);

    const auto run_shard = [&](std::uint64_t si) {
        ShardAccum& acc = shards[si];
        const std::uint64_t begin = si * kShardSize;
        const std::uint64_t end = std::min(shots, begin + kShardSize);
        for (std::uint64_t shot = begin; shot < end; ++shot) fn(shot, acc);
    };

    unsigned want = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
    want = std::max(1u, std::min<unsigned>(want, static_cast<unsigned>(num_shards)));
    if (want == 1) {
        for (std::uint64_t si = 0; si < num_shards; ++si) run_shard(si);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (unsigned t = 0; t < want; ++t) {
            pool.emplace_back([&] {
                for (std::uint64_t si = next.fetch_add(1); si < num_shards; si = next.fetch_add(1)) {
                    run_shard(si);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    ShardAccum total;
    total.counts.assign(outcome_slots, 0);
    for (const auto& s : shards) {
        total.sum_err += s.sum_err;
        total.sum_err2 += s.sum_err2;
        for (std::size_t i = 0; i < outcome_slots; ++i) total.counts[i] += s.counts[i];
    }
    return total;
}

void finish_stats(const ShardAccum& acc, std::uint64_t shots, SimResult& out) {
    out.shots_used = shots;
    out.empirical_mse = acc.sum_err / static_cast<double>(shots);
    const double var =
        std::max(0.0, (acc.sum_err2 - static_cast<double>(shots) * out.empirical_mse * out.empirical_mse) /
                          static_cast<double>(shots > 1 ? shots - 1 : 1));
    out.std_error = std::sqrt(var / static_cast<double>(shots));
    out.rng_algorithm = kRngAlgorithm;
}

// One term of a block probability: coeff * x^up * (1-x)^down.
struct WeightTerm {
    double coeff;
    int up;
    int down;
};

struct BlockTable {
    int label;
    double guess;
    std::vector<WeightTerm> terms;
};

std::vector<BlockTable> build_block_tables(int N, int M) {
    const auto mom = parallel::moments(N, M);
    std::vector<BlockTable> tables;
    const HalfInt jN = HalfInt::from_twice(N);
    const HalfInt jM = HalfInt::from_twice(M);
    for (const auto& [k, t] : mom) {
        BlockTable bt;
        bt.label = k;
        BigRational g = t.i1 / t.i0;
        if (g < 0) g = 0;
        if (g > 1) g = 1;
        bt.guess = to_double(g);
        const HalfInt jk = HalfInt::from_twice(k);
        for (int tm = -k; tm <= k; tm += 2) {
            const HalfInt m = HalfInt::from_twice(tm);
            const HalfInt m2 = m - HalfInt::from_twice(N);
            if (m2.abs().twice > M) continue;
            const BigRational c = cg_squared(jN, jN, jM, m2, jk, m);
            if (c == 0) continue;
            const int up = (M + m2.twice) / 2;
            const int down = (M - m2.twice) / 2;
            const double coeff =
                to_double(c * BigRational(binomial(static_cast<unsigned>(M), static_cast<unsigned>(up)), 1));
            bt.terms.push_back({coeff, up, down});
        }
        tables.push_back(std::move(bt));
    }
    return tables;
}

double eval_block(const BlockTable& bt, const std::vector<double>& xpow,
                  const std::vector<double>& ypow) {
    double p = 0.0;
    for (const auto& term : bt.terms) {
        p += term.coeff * xpow[static_cast<std::size_t>(term.up)] * ypow[static_cast<std::size_t>(term.down)];
    }
    return p;
}

}  // namespace

double sample_overlap(CounterRng& rng) { return rng.next_double(); }

double sample_overlap_qudit(CounterRng& rng, int d) {
    if (d < 2) throw std::invalid_argument("sample_overlap_qudit: d must be >= 2");
    if (d == 2) return rng.next_double();
    return 1.0 - std::pow(rng.next_double_open(), 1.0 / (d - 1));
}

double sample_overlap_explicit(CounterRng& rng, int d) {
    if (d < 2) throw std::invalid_argument("sample_overlap_explicit: d must be >= 2");
    std::vector<std::complex<double>> a(static_cast<std::size_t>(d)), b(static_cast<std::size_t>(d));
    double na = 0.0, nb = 0.0;
    for (int i = 0; i < d; ++i) {
        a[static_cast<std::size_t>(i)] = {rng.next_gaussian(), rng.next_gaussian()};
        b[static_cast<std::size_t>(i)] = {rng.next_gaussian(), rng.next_gaussian()};
        na += std::norm(a[static_cast<std::size_t>(i)]);
        nb += std::norm(b[static_cast<std::size_t>(i)]);
    }
    std::complex<double> ip = 0.0;
    for (int i = 0; i < d; ++i) {
        ip += std::conj(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
    }
    return std::norm(ip) / (na * nb);
}

SimResult run_simulation(const SimConfig& cfg, int threads) {
    if (cfg.shots < 1) throw std::invalid_argument("run_simulation: shots must be >= 1");
    const auto tables = build_block_tables(cfg.N, cfg.M);  // validates N, M
    const std::size_t nblocks = tables.size();
    const int M = cfg.M;

    SimResult result;
    result.analytic_mse = parallel::optimal_variance(cfg.N, cfg.M).value;

    const auto per_shot = [&](std::uint64_t shot, ShardAccum& acc) {
        CounterRng rng(cfg.seed, shot);
        const double x = sample_overlap(rng);
        // powers of x and 1-x up to M, shared across blocks
        thread_local std::vector<double> xpow, ypow;
        xpow.assign(static_cast<std::size_t>(M) + 1, 1.0);
        ypow.assign(static_cast<std::size_t>(M) + 1, 1.0);
        for (std::size_t i = 1; i <= static_cast<std::size_t>(M); ++i) {
            xpow[i] = xpow[i - 1] * x;
            ypow[i] = ypow[i - 1] * (1.0 - x);
        }
        const double u = rng.next_double();
        double cum = 0.0;
        std::size_t chosen = nblocks - 1;
        for (std::size_t i = 0; i < nblocks; ++i) {
            cum += eval_block(tables[i], xpow, ypow);
            if (u < cum) {
                chosen = i;
                break;
            }
        }
        const double err = tables[chosen].guess - x;
        acc.sum_err += err * err;
        acc.sum_err2 += err * err * err * err;
        ++acc.counts[chosen];
    };

    const ShardAccum total = sharded_loop(cfg.shots, nblocks, threads, per_shot);
    finish_stats(total, cfg.shots, result);
    for (std::size_t i = 0; i < nblocks; ++i) {
        result.per_outcome_counts[tables[i].label] = total.counts[i];
    }
    return result;
}

MomentEstimate moment_oracle(int N, int M, int k, int alpha, std::uint64_t samples,
                             std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("moment_oracle: samples must be >= 1");
    if (alpha < 0 || alpha > 2) throw std::invalid_argument("moment_oracle: alpha must be 0, 1 or 2");
    const auto tables = build_block_tables(N, M);
    const BlockTable* bt = nullptr;
    for (const auto& t : tables) {
        if (t.label == k) bt = &t;
    }
    if (bt == nullptr) throw std::invalid_argument("moment_oracle: invalid block label");

    double sum = 0.0, sum2 = 0.0;
    std::vector<double> xpow(static_cast<std::size_t>(M) + 1), ypow(static_cast<std::size_t>(M) + 1);
    for (std::uint64_t i = 0; i < samples; ++i) {
        CounterRng rng(seed, i);
        const double x = sample_overlap(rng);
        xpow[0] = ypow[0] = 1.0;
        for (std::size_t p = 1; p <= static_cast<std::size_t>(M); ++p) {
            xpow[p] = xpow[p - 1] * x;
            ypow[p] = ypow[p - 1] * (1.0 - x);
        }
        double f = eval_block(*bt, xpow, ypow);
        for (int a = 0; a < alpha; ++a) f *= x;
        sum += f;
        sum2 += f * f;
    }
    MomentEstimate est;
    est.estimate = sum / static_cast<double>(samples);
    const double var = std::max(
        0.0, (sum2 - static_cast<double>(samples) * est.estimate * est.estimate) /
                 static_cast<double>(samples > 1 ? samples - 1 : 1));
    est.std_error = std::sqrt(var / static_cast<double>(samples));
    return est;
}

SimResult simulate_antiparallel(const antiparallel::AntiparallelPovm& povm, std::uint64_t shots,
                                std::uint64_t seed, int threads) {
    if (shots < 1) throw std::invalid_argument("simulate_antiparallel: shots must be >= 1");
    const double analytic = antiparallel::cost(povm);  // validates the POVM
    const auto ops = antiparallel::isotypic_operators();

    using C = std::complex<double>;
    using Mat8 = std::array<std::array<C, 8>, 8>;
    const std::size_t nu = povm.outcomes.size();
    std::vector<Mat8> elements(nu + 1);
    std::vector<double> guesses(nu + 1);
    for (std::size_t i = 0; i < nu; ++i) {
        const auto& o = povm.outcomes[i];
        const double w = o.weight / 2.0;
        const C c01(o.bloch[0], -o.bloch[1]);
        const C c10(o.bloch[0], o.bloch[1]);
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                elements[i][r][c] = w * ((1 + o.bloch[2]) * ops.one00[r][c] +
                                         (1 - o.bloch[2]) * ops.one11[r][c] + c01 * ops.one01[r][c] +
                                         c10 * ops.one10[r][c]);
            }
        }
        guesses[i] = o.guess;
    }
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) elements[nu][r][c] = ops.one33[r][c];
    }
    guesses[nu] = povm.q33_guess;

    std::atomic<bool> probability_fault{false};

    const auto per_shot = [&](std::uint64_t shot, ShardAccum& acc) {
        CounterRng rng(seed, shot);
        const auto g1 = haar_su2(rng);
        const auto g2 = haar_su2(rng);
        // state (g1 x g1)|01> (x) g2|0>; column j of g is its action on |j>
        std::array<C, 8> psi;
        for (int b0 = 0; b0 < 2; ++b0) {
            for (int b1 = 0; b1 < 2; ++b1) {
                for (int b2 = 0; b2 < 2; ++b2) {
                    psi[static_cast<std::size_t>(b0 * 4 + b1 * 2 + b2)] =
                        g1[static_cast<std::size_t>(2 * b0)] * g1[static_cast<std::size_t>(2 * b1 + 1)] *
                        g2[static_cast<std::size_t>(2 * b2)];
                }
            }
        }
        // true overlap |<0| g1^dag g2 |0>|^2
        const C amp = std::conj(g1[0]) * g2[0] + std::conj(g1[2]) * g2[2];
        const double x = std::norm(amp);

        thread_local std::vector<double> probs;
        probs.assign(nu + 1, 0.0);
        double psum = 0.0;
        for (std::size_t e = 0; e <= nu; ++e) {
            C val = 0.0;
            for (std::size_t r = 0; r < 8; ++r) {
                C row = 0.0;
                for (std::size_t c = 0; c < 8; ++c) row += elements[e][r][c] * psi[c];
                val += std::conj(psi[r]) * row;
            }
            double p = val.real();
            if (p < 0.0) {
                if (p < -1e-10) probability_fault.store(true, std::memory_order_relaxed);
                p = 0.0;  // clamp eigen-dust from rounding
            }
            probs[e] = p;
            psum += p;
        }
        if (std::abs(psum - 1.0) > 1e-10) probability_fault.store(true, std::memory_order_relaxed);

        const double u = rng.next_double() * psum;
        double cum = 0.0;
        std::size_t chosen = nu;
        for (std::size_t e = 0; e <= nu; ++e) {
            cum += probs[e];
            if (u < cum) {
                chosen = e;
                break;
            }
        }
        const double err = guesses[chosen] - x;
        acc.sum_err += err * err;
        acc.sum_err2 += err * err * err * err;
        ++acc.counts[chosen];
    };

    const ShardAccum total = sharded_loop(shots, nu + 1, threads, per_shot);
    if (probability_fault.load()) {
        throw std::invalid_argument("simulate_antiparallel: outcome probabilities failed the 1e-10 sanity bound");
    }
    SimResult result;
    result.analytic_mse = analytic;
    finish_stats(total, shots, result);
    for (std::size_t i = 0; i <= nu; ++i) {
        result.per_outcome_counts[static_cast<int>(i)] = total.counts[i];
    }
    return result;
}

}  // namespace relstate::sim
