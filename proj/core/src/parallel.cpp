#include "relstate/parallel.hpp"

#include "relstate/cg.hpp"
#include "relstate/half_int.hpp"

#include <cmath>
#include <stdexcept>

namespace relstate::parallel {

namespace {

void require_args(int N, int M) {
    if (N < 1) throw std::invalid_argument("parallel: N must be >= 1");
    if (M < N) throw std::invalid_argument("parallel: require M >= N (order the inputs)");
}

}  // namespace

std::vector<int> block_labels(int N, int M) {
    require_args(N, M);
    std::vector<int> ks;
    for (int k = M - N; k <= M + N; k += 2) ks.push_back(k);
    return ks;
}

MomentMap moments(int N, int M) {
    require_args(N, M);
    const HalfInt jN = HalfInt::from_twice(N);
    const HalfInt jM = HalfInt::from_twice(M);
    const HalfInt jM1 = HalfInt::from_twice(M + 1);
    const HalfInt jM2 = HalfInt::from_twice(M + 2);
    const HalfInt one = HalfInt::whole(1);
    const HalfInt half = HalfInt::half();

    MomentMap out;
    for (int k : block_labels(N, M)) {
        const HalfInt jk = HalfInt::from_twice(k);
        MomentTriple t;
        t.i0 = BigRational(k + 1, static_cast<long long>(N + 1) * (M + 1));
        // Sums over the magnetic label m of the block; the second factor
        // couples the M copies with the one (resp. two) extra reference
        // qubits living in the symmetric subspace.
        BigRational s1(0), s2(0);
        for (int tm = -k; tm <= k; tm += 2) {
            const HalfInt m = HalfInt::from_twice(tm);
            const HalfInt m2 = m - HalfInt::from_twice(N);  // magnetic label of the M-copy factor
            if (m2.abs().twice > M) continue;
            const BigRational base = cg_squared(jN, jN, jM, m2, jk, m);
            if (base == 0) continue;
            s1 += base * cg_squared(jM, m2, half, half, jM1, m2 + half);
            s2 += base * cg_squared(jM, m2, one, one, jM2, m2 + one);
        }
        t.i1 = s1 / (M + 2);
        t.i2 = s2 / (M + 3);
        out.emplace(k, std::move(t));
    }
    return out;
}

PovmSpec optimal_povm(int N, int M) {
    PovmSpec spec;
    for (const auto& [k, t] : moments(N, M)) {
        BigRational x = t.i1 / t.i0;
        if (x < 0) x = 0;
        if (x > 1) x = 1;
        spec.entries.emplace_back(k, std::move(x));
    }
    return spec;
}

Variance optimal_variance(int N, int M) {
    BigRational total(0);
    for (const auto& [k, t] : moments(N, M)) {
        BigRational x = t.i1 / t.i0;
        if (x < 0) x = 0;
        if (x > 1) x = 1;
        total += t.i2 - 2 * x * t.i1 + x * x * t.i0;
    }
    return Variance{total, to_double(total)};
}

std::map<int, double> outcome_distribution(int N, int M, double x) {
    require_args(N, M);
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("outcome_distribution: x outside [0,1]");
    const HalfInt jN = HalfInt::from_twice(N);
    const HalfInt jM = HalfInt::from_twice(M);
    std::map<int, double> out;
    for (int k : block_labels(N, M)) {
        const HalfInt jk = HalfInt::from_twice(k);
        double p = 0.0;
        for (int tm = -k; tm <= k; tm += 2) {
            const HalfInt m = HalfInt::from_twice(tm);
            const HalfInt m2 = m - HalfInt::from_twice(N);
            if (m2.abs().twice > M) continue;
            const BigRational c = cg_squared(jN, jN, jM, m2, jk, m);
            if (c == 0) continue;
            p += to_double(c) * coherent_weight(jM, m2, x);
        }
        out.emplace(k, p);
    }
    return out;
}

std::vector<BigRational> block_probability_polynomial(int N, int M, int k) {
    require_args(N, M);
    if (k < M - N || k > M + N || (k - (M - N)) % 2 != 0) {
        throw std::invalid_argument("block_probability_polynomial: invalid block label");
    }
    const HalfInt jN = HalfInt::from_twice(N);
    const HalfInt jM = HalfInt::from_twice(M);
    const HalfInt jk = HalfInt::from_twice(k);
    std::vector<BigRational> poly(static_cast<std::size_t>(M) + 1, BigRational(0));
    for (int tm = -k; tm <= k; tm += 2) {
        const HalfInt m = HalfInt::from_twice(tm);
        const HalfInt m2 = m - HalfInt::from_twice(N);
        if (m2.abs().twice > M) continue;
        const BigRational c = cg_squared(jN, jN, jM, m2, jk, m);
        if (c == 0) continue;
        const int up = (M + m2.twice) / 2;
        const int down = (M - m2.twice) / 2;
        const BigRational lead = c * BigRational(binomial(static_cast<unsigned>(M), static_cast<unsigned>(up)), 1);
        // c * binom * x^up * (1-x)^down, expanded binomially
        for (int t = 0; t <= down; ++t) {
            BigRational term = lead * BigRational(binomial(static_cast<unsigned>(down), static_cast<unsigned>(t)), 1);
            if (t % 2 != 0) term = -term;
            poly[static_cast<std::size_t>(up + t)] += term;
        }
    }
    return poly;
}

BigRational integrate_polynomial_moment(const std::vector<BigRational>& poly, int alpha) {
    if (alpha < 0) throw std::invalid_argument("integrate_polynomial_moment: alpha must be >= 0");
    BigRational acc(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        acc += poly[i] / BigRational(static_cast<long long>(i) + alpha + 1, 1);
    }
    return acc;
}

}  // namespace relstate::parallel
