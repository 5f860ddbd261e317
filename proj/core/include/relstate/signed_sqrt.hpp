#pragma once

#include "relstate/rational.hpp"

#include <map>
#include <string>

namespace relstate {

/// A real number of the form sign * sqrt(square), with square a
/// non-negative rational. Closed under multiplication, which is all the
/// Clebsch-Gordan identities in this project need; exact sums go through
/// SqrtRationalSum below.
struct SignedSqrtRational {
    int sign = 0;           // -1, 0 or +1
    BigRational square = 0; // >= 0; zero iff sign == 0

    SignedSqrtRational() = default;
    SignedSqrtRational(int s, BigRational sq);

    /// Embeds an ordinary rational r as sign(r) * sqrt(r^2).
    static SignedSqrtRational from_rational(const BigRational& r);

    bool is_zero() const { return sign == 0; }
    double to_double() const;
    std::string to_string() const;  // e.g. "-sqrt(1/2)", "sqrt(1)", "0"

    friend SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b);
    friend bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) = default;
};

/// sqrt(square) written canonically as coeff * sqrt(radicand) with the
/// radicand a squarefree non-negative integer. Canonical forms of distinct
/// radicands are linearly independent over Q, which makes exact sums of
/// square roots decidable.
struct CanonicalSqrt {
    BigRational coeff = 0;  // carries the sign
    BigInt radicand = 1;    // squarefree, >= 1
};

/// Squarefree decomposition n = radicand * square_part^2. Trial division
/// up to 10^5 plus a perfect-square check on the remainder; throws
/// std::overflow_error if the remainder is too large to certify squarefree
/// (never reached for the label ranges this project uses).
CanonicalSqrt canonicalize(const SignedSqrtRational& v);

/// Exact linear combination sum_i c_i * sqrt(s_i) over distinct squarefree
/// radicands s_i. Supports the orthogonality proofs and the Appendix-style
/// block-coefficient traces, where individual terms are irrational but the
/// totals collapse.
class SqrtRationalSum {
public:
    SqrtRationalSum() = default;

    void add(const SignedSqrtRational& term);
    void add_product(const SignedSqrtRational& a, const SignedSqrtRational& b);

    bool is_zero() const;
    /// True when the sum equals the single term v exactly.
    bool equals(const SignedSqrtRational& v) const;
    /// Collapses to a single sqrt term; throws std::logic_error when the sum
    /// has more than one surviving radicand class.
    SignedSqrtRational to_signed_sqrt() const;
    /// The sum as a plain rational; throws std::logic_error if an
    /// irrational class survives.
    BigRational to_rational() const;

    double to_double() const;
    std::string to_string() const;

private:
    std::map<BigInt, BigRational> terms_;  // radicand -> coefficient
};

}  // namespace relstate
