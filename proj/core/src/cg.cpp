#include "relstate/cg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relstate {

namespace {

void require_valid_jm(HalfInt j, HalfInt m, const char* who) {
    if (!valid_jm(j, m)) {
        throw std::domain_error(std::string(who) + ": invalid (j,m) pair j=" + relstate::to_string(j) +
                                " m=" + relstate::to_string(m));
    }
}

}  // namespace

SignedSqrtRational cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    require_valid_jm(j1, m1, "cg");
    require_valid_jm(j2, m2, "cg");
    require_valid_jm(J, M, "cg");

    if (m1.twice + m2.twice != M.twice) return {};
    if (J.twice < std::abs(j1.twice - j2.twice) || J.twice > j1.twice + j2.twice) return {};
    // j1 + j2 + J must be an integer for the coupling to exist at all
    if ((j1.twice + j2.twice + J.twice) % 2 != 0) return {};

    // All factorial arguments below, as twice-values; each is even by the
    // parity checks above.
    const int t_j1j2J = j1.twice + j2.twice - J.twice;    // j1+j2-J
    const int t_j1Jj2 = j1.twice - j2.twice + J.twice;    // j1-j2+J
    const int t_j2Jj1 = -j1.twice + j2.twice + J.twice;   // -j1+j2+J
    const int t_sum1 = j1.twice + j2.twice + J.twice + 2; // j1+j2+J+1

    const auto f = [](int twice_value) -> const BigInt& {
        return factorial(static_cast<unsigned>(twice_value / 2));
    };

    // Racah prefactor: (2J+1) * triangle coefficient * m-factorials.
    BigRational pre(BigInt(J.twice + 1) * f(t_j1j2J) * f(t_j1Jj2) * f(t_j2Jj1), f(t_sum1));
    pre *= BigRational(f(J.twice + M.twice) * f(J.twice - M.twice), 1);
    pre *= BigRational(f(j1.twice - m1.twice) * f(j1.twice + m1.twice), 1);
    pre *= BigRational(f(j2.twice - m2.twice) * f(j2.twice + m2.twice), 1);

    // Alternating sum over k; bounds keep every factorial argument >= 0.
    // All the twice-value bounds are even, so stepping by 2 visits every k.
    const int t_a = j1.twice - m1.twice;            // j1-m1
    const int t_b = j2.twice + m2.twice;            // j2+m2
    const int t_c = J.twice - j2.twice + m1.twice;  // J-j2+m1
    const int t_d = J.twice - j1.twice - m2.twice;  // J-j1-m2
    const int k_min = std::max({0, -t_c, -t_d});
    const int k_max = std::min({t_j1j2J, t_a, t_b});

    BigRational s(0);
    for (int tk = k_min; tk <= k_max; tk += 2) {
        BigInt den = f(tk) * f(t_j1j2J - tk) * f(t_a - tk) * f(t_b - tk) * f(t_c + tk) * f(t_d + tk);
        if ((tk / 2) % 2 == 0) {
            s += BigRational(1, den);
        } else {
            s -= BigRational(1, den);
        }
    }

    if (s == 0) return {};
    return SignedSqrtRational(s > 0 ? 1 : -1, s * s * pre);
}

BigRational cg_squared(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    return cg(j1, m1, j2, m2, J, M).square;
}

BigInt sym_dim(int d, int N) {
    if (d < 1) throw std::invalid_argument("sym_dim: d must be >= 1");
    if (N < 0) throw std::invalid_argument("sym_dim: N must be >= 0");
    return binomial(static_cast<unsigned>(N + d - 1), static_cast<unsigned>(N));
}

double coherent_weight(HalfInt j, HalfInt m, double x) {
    if (!valid_jm(j, m)) throw std::domain_error("coherent_weight: invalid (j,m)");
    if (x < 0.0 || x > 1.0) throw std::domain_error("coherent_weight: x outside [0,1]");
    const int up = (j.twice + m.twice) / 2;
    const int down = (j.twice - m.twice) / 2;
    // log-space keeps large-M weights from overflowing before they cancel
    if (x == 0.0) return up == 0 ? 1.0 : 0.0;
    if (x == 1.0) return down == 0 ? 1.0 : 0.0;
    const double lb = std::lgamma(j.twice + 1.0) - std::lgamma(up + 1.0) - std::lgamma(down + 1.0);
    return std::exp(lb + up * std::log(x) + down * std::log1p(-x));
}

BigRational coherent_weight_exact(HalfInt j, HalfInt m, const BigRational& x) {
    if (!valid_jm(j, m)) throw std::domain_error("coherent_weight_exact: invalid (j,m)");
    if (x < 0 || x > 1) throw std::domain_error("coherent_weight_exact: x outside [0,1]");
    const unsigned up = static_cast<unsigned>((j.twice + m.twice) / 2);
    const unsigned down = static_cast<unsigned>((j.twice - m.twice) / 2);
    return BigRational(binomial(static_cast<unsigned>(j.twice), up), 1) * pow_rational(x, up) *
           pow_rational(1 - x, down);
}

}  // namespace relstate
