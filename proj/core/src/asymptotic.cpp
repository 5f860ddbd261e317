#include "relstate/asymptotic.hpp"

#include <stdexcept>

namespace relstate::asymptotic {

double cost(const DiagonalGuessPair& g) {
    if (g.x0 < 0.0 || g.x0 > 1.0 || g.x1 < 0.0 || g.x1 > 1.0) {
        throw std::invalid_argument("asymptotic::cost: guesses must lie in [0,1]");
    }
    return (g.x0 * g.x0 / 2 - 2 * g.x0 / 3 + 0.25) + (g.x1 * g.x1 / 2 - g.x1 / 3 + 1.0 / 12);
}

BigRational cost_exact(const BigRational& x0, const BigRational& x1) {
    if (x0 < 0 || x0 > 1 || x1 < 0 || x1 > 1) {
        throw std::invalid_argument("asymptotic::cost_exact: guesses must lie in [0,1]");
    }
    return (x0 * x0 / 2 - 2 * x0 / 3 + BigRational(1, 4)) +
           (x1 * x1 / 2 - x1 / 3 + BigRational(1, 12));
}

Optimum optimum() {
    // vertices of the two per-outcome quadratics
    Optimum o;
    o.x0 = BigRational(2, 3);
    o.x1 = BigRational(1, 3);
    o.value = cost_exact(o.x0, o.x1);
    return o;
}

}  // namespace relstate::asymptotic
