#pragma once

#include "relstate/rational.hpp"

namespace relstate::asymptotic {

/// Guesses attached to the two z-basis outcomes when one qubit is measured
/// against an infinitely-well-known reference axis.
struct DiagonalGuessPair {
    double x0 = 0.0;  // guess on the |0> outcome
    double x1 = 0.0;  // guess on the |1> outcome
};

/// Mean variance of the delta-concentrated diagonal POVM:
/// (x0^2/2 - 2 x0/3 + 1/4) + (x1^2/2 - x1/3 + 1/12).
double cost(const DiagonalGuessPair& g);
BigRational cost_exact(const BigRational& x0, const BigRational& x1);

struct Optimum {
    BigRational x0, x1;  // (2/3, 1/3)
    BigRational value;   // 1/18
};

/// Closed-form vertex minimization of the two quadratics.
Optimum optimum();

}  // namespace relstate::asymptotic
