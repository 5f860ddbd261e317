#include "relstate/antiparallel.hpp"

#include "relstate/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace relstate::antiparallel {

namespace {

constexpr double kConstraintTol = 1e-12;
constexpr double kSqrt3 = 1.7320508075688772935;

double f00(double x) { return 1.0 / 6 - x / 2 + x * x / 2; }
double f11(double x) { return 1.0 / 18 - x / 6 + x * x / 6; }
double f01(double x) { return -x / (6 * kSqrt3); }

// per-unit-weight cost of one outcome at guess x
double outcome_quadratic(double x, double n1, double n3) {
    return f00(x) + f11(x) + n1 * 2 * f01(x) + n3 * (f00(x) - f11(x));
}

// closed-form minimizer of outcome_quadratic over x in [0,1]
double best_guess(double n1, double n3) {
    const double a = 2.0 / 3 + n3 / 3;                      // quadratic coefficient, >= 1/3
    const double b = -2.0 / 3 - n1 / (3 * kSqrt3) - n3 / 3;  // linear coefficient
    return std::clamp(-b / (2 * a), 0.0, 1.0);
}

}  // namespace

double q33_cost(double guess) {
    if (guess < -kConstraintTol || guess > 1 + kConstraintTol) {
        throw std::invalid_argument("q33_cost: guess outside [0,1]");
    }
    return 1.0 / 9 - guess / 3 + guess * guess / 3;
}

double cost(const AntiparallelPovm& p) {
    double wsum = 0.0;
    std::array<double, 3> mean{0, 0, 0};
    for (const auto& o : p.outcomes) {
        if (o.weight < -kConstraintTol) throw std::invalid_argument("antiparallel::cost: negative weight");
        if (o.guess < -kConstraintTol || o.guess > 1 + kConstraintTol) {
            throw std::invalid_argument("antiparallel::cost: guess outside [0,1]");
        }
        const double n2 = o.bloch[0] * o.bloch[0] + o.bloch[1] * o.bloch[1] + o.bloch[2] * o.bloch[2];
        if (n2 > 1 + 8 * kConstraintTol) {
            throw std::invalid_argument("antiparallel::cost: Bloch vector outside the unit ball");
        }
        wsum += o.weight;
        for (int j = 0; j < 3; ++j) mean[j] += o.weight * o.bloch[j];
    }
    if (std::abs(wsum - 2.0) > kConstraintTol) {
        throw std::invalid_argument("antiparallel::cost: weights must sum to 2");
    }
    for (double m : mean) {
        if (std::abs(m) > kConstraintTol) {
            throw std::invalid_argument("antiparallel::cost: weighted Bloch mean must vanish");
        }
    }
    double delta1 = 0.0;
    for (const auto& o : p.outcomes) {
        delta1 += 0.5 * o.weight * outcome_quadratic(o.guess, o.bloch[0], o.bloch[2]);
    }
    return delta1 + q33_cost(p.q33_guess);
}

AntiparallelPovm reference_optimum() {
    const double t = 1.0 / (4 * kSqrt3);
    AntiparallelPovm p;
    p.outcomes = {
        {1.0, 0.5 + t, {1, 0, 0}},
        {1.0, 0.5 - t, {-1, 0, 0}},
    };
    p.q33_guess = 0.5;
    return p;
}

namespace {

struct Candidate {
    std::vector<double> weights;                 // w^2 per outcome, summing to 2
    std::vector<std::array<double, 3>> bloch;    // feasible Bloch vectors
    std::vector<double> guesses;
    double value = std::numeric_limits<double>::infinity();
};

// Alternating projection onto {sum w n = 0} and the product of unit balls.
// Both sets are convex with 0 in the intersection, so this converges; we
// stop when the mean constraint holds to well below the cost tolerance.
void project_bloch(const std::vector<double>& w, std::vector<std::array<double, 3>>& n) {
    const std::size_t count = n.size();
    for (int iter = 0; iter < 256; ++iter) {
        std::array<double, 3> mean{0, 0, 0};
        for (std::size_t i = 0; i < count; ++i) {
            for (int j = 0; j < 3; ++j) mean[j] += w[i] * n[i][j];
        }
        double viol = std::max({std::abs(mean[0]), std::abs(mean[1]), std::abs(mean[2])});
        if (viol < 1e-15) break;
        for (int j = 0; j < 3; ++j) mean[j] /= 2.0;  // weights sum to 2
        for (std::size_t i = 0; i < count; ++i) {
            for (int j = 0; j < 3; ++j) n[i][j] -= mean[j];
            const double r2 = n[i][0] * n[i][0] + n[i][1] * n[i][1] + n[i][2] * n[i][2];
            if (r2 > 1.0) {
                const double inv = 1.0 / std::sqrt(r2);
                for (double& c : n[i]) c *= inv;
            }
        }
    }
}

// Decode the unconstrained parameter vector (4 reals per outcome) into a
// feasible candidate and evaluate it; guesses are optimized in closed form.
Candidate decode(const std::vector<double>& theta, int nu) {
    Candidate c;
    c.weights.resize(static_cast<std::size_t>(nu));
    c.bloch.resize(static_cast<std::size_t>(nu));
    c.guesses.resize(static_cast<std::size_t>(nu));
    double norm = 0.0;
    for (int i = 0; i < nu; ++i) norm += theta[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(i)];
    for (int i = 0; i < nu; ++i) {
        const double y = theta[static_cast<std::size_t>(i)];
        c.weights[static_cast<std::size_t>(i)] = norm > 0 ? 2 * y * y / norm : 2.0 / nu;
    }
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < 3; ++j) {
            c.bloch[static_cast<std::size_t>(i)][j] = theta[static_cast<std::size_t>(nu + 3 * i + j)];
        }
        const auto& b = c.bloch[static_cast<std::size_t>(i)];
        const double r2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
        if (r2 > 1.0) {
            const double inv = 1.0 / std::sqrt(r2);
            for (double& x : c.bloch[static_cast<std::size_t>(i)]) x *= inv;
        }
    }
    project_bloch(c.weights, c.bloch);
    double delta1 = 0.0;
    for (int i = 0; i < nu; ++i) {
        const auto& b = c.bloch[static_cast<std::size_t>(i)];
        const double x = best_guess(b[0], b[2]);
        c.guesses[static_cast<std::size_t>(i)] = x;
        delta1 += 0.5 * c.weights[static_cast<std::size_t>(i)] * outcome_quadratic(x, b[0], b[2]);
    }
    c.value = delta1 + 1.0 / 36;  // q33 block optimized in closed form at 1/2
    return c;
}

// Plain Nelder-Mead; returns the best vertex. Deterministic given start.
std::vector<double> nelder_mead(std::function<double(const std::vector<double>&)> f,
                                std::vector<double> start, double step, int max_iter) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

    std::vector<std::size_t> order(n + 1);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        if (vals[order[n]] - vals[order[0]] < 1e-14) break;

        const std::size_t worst = order[n];
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += pts[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d) p[d] = centroid[d] + t * (pts[worst][d] - centroid[d]);
            return p;
        };

        const std::vector<double> reflected = blend(-1.0);
        const double fr = f(reflected);
        if (fr < vals[order[0]]) {
            const std::vector<double> expanded = blend(-2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                pts[worst] = expanded;
                vals[worst] = fe;
            } else {
                pts[worst] = reflected;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[order[n - 1]]) {
            pts[worst] = reflected;
            vals[worst] = fr;
            continue;
        }
        const std::vector<double> contracted = blend(fr < vals[worst] ? -0.5 : 0.5);
        const double fc = f(contracted);
        if (fc < std::min(fr, vals[worst])) {
            pts[worst] = contracted;
            vals[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == order[0]) continue;
            for (std::size_t d = 0; d < n; ++d) {
                pts[i][d] = pts[order[0]][d] + 0.5 * (pts[i][d] - pts[order[0]][d]);
            }
            vals[i] = f(pts[i]);
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (vals[i] < vals[best]) best = i;
    }
    return pts[best];
}

AntiparallelPovm candidate_to_povm(const Candidate& c) {
    AntiparallelPovm p;
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
        p.outcomes.push_back({c.weights[i], c.guesses[i], c.bloch[i]});
    }
    p.q33_guess = 0.5;
    return p;
}

// Reporting gauge: drop near-zero weights, order by descending guess, and
// rotate the (X1, X2) components of every outcome by the common rotation
// taking the leading outcome's Bloch vector into the (+X1, X3) plane. The
// n2 direction never enters the cost, so at an optimum this is a
// within-tolerance no-op that just zeroes cosmetic residue.
AntiparallelPovm canonicalize(AntiparallelPovm p) {
    std::erase_if(p.outcomes, [](const BlockOutcome& o) { return o.weight < 1e-8; });
    double wsum = 0.0;
    for (const auto& o : p.outcomes) wsum += o.weight;
    if (wsum > 0) {
        for (auto& o : p.outcomes) o.weight *= 2.0 / wsum;
    }
    std::sort(p.outcomes.begin(), p.outcomes.end(),
              [](const BlockOutcome& a, const BlockOutcome& b) { return a.guess > b.guess; });
    if (!p.outcomes.empty()) {
        const double r = std::hypot(p.outcomes[0].bloch[0], p.outcomes[0].bloch[1]);
        if (r > 1e-15) {
            const double cs = p.outcomes[0].bloch[0] / r;
            const double sn = p.outcomes[0].bloch[1] / r;
            for (auto& o : p.outcomes) {
                const double n1 = cs * o.bloch[0] + sn * o.bloch[1];
                const double n2 = -sn * o.bloch[0] + cs * o.bloch[1];
                o.bloch[0] = n1;
                o.bloch[1] = n2;
            }
        }
    }
    // re-balance the weighted mean after pruning/rotation
    std::vector<double> w;
    std::vector<std::array<double, 3>> n;
    for (const auto& o : p.outcomes) {
        w.push_back(o.weight);
        n.push_back(o.bloch);
    }
    project_bloch(w, n);
    for (std::size_t i = 0; i < n.size(); ++i) p.outcomes[i].bloch = n[i];
    return p;
}

}  // namespace

OptimizeResult optimize(int num_outcomes, std::uint64_t seed, double tol) {
    if (num_outcomes < 1) throw std::invalid_argument("optimize: num_outcomes must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("optimize: tol must be positive");

    OptimizeResult result;
    if (num_outcomes == 1) {
        // the mean constraint forces n = 0; both remaining quadratics have
        // closed-form vertices at 1/2
        result.povm.outcomes = {{2.0, 0.5, {0, 0, 0}}};
        result.povm.q33_guess = 0.5;
        result.value = cost(result.povm);
        result.converged = true;
        result.restarts = 0;
        return result;
    }

    const int nu = num_outcomes;
    const std::size_t dim = static_cast<std::size_t>(4 * nu);
    const int restarts = 32;
    const auto objective = [nu](const std::vector<double>& theta) { return decode(theta, nu).value; };

    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_theta;
    int near_best = 0;
    std::vector<double> final_values;
    for (int r = 0; r < restarts; ++r) {
        CounterRng rng(seed, static_cast<std::uint64_t>(r));
        std::vector<double> start(dim);
        for (int i = 0; i < nu; ++i) start[static_cast<std::size_t>(i)] = 0.5 + rng.next_double();
        for (std::size_t i = static_cast<std::size_t>(nu); i < dim; ++i) {
            start[i] = 2 * rng.next_double() - 1;
        }
        const std::vector<double> sol = nelder_mead(objective, start, 0.25, 400 * static_cast<int>(dim));
        const double val = objective(sol);
        final_values.push_back(val);
        if (val < best_value - 1e-15) {
            best_value = val;
            best_theta = sol;
        }
    }
    for (double v : final_values) {
        if (v <= best_value + tol) ++near_best;
    }

    Candidate best = decode(best_theta, nu);
    result.povm = canonicalize(candidate_to_povm(best));
    result.value = cost(result.povm);
    result.converged = near_best >= 2;
    result.restarts = restarts;
    return result;
}

}  // namespace relstate::antiparallel
