#include "relstate/signed_sqrt.hpp"

#include <cmath>
#include <stdexcept>

namespace relstate {

SignedSqrtRational::SignedSqrtRational(int s, BigRational sq) : sign(s), square(std::move(sq)) {
    if (square < 0) throw std::invalid_argument("SignedSqrtRational: negative square");
    if ((sign == 0) != (square == 0)) {
        throw std::invalid_argument("SignedSqrtRational: sign/square zero mismatch");
    }
    if (sign < -1 || sign > 1) throw std::invalid_argument("SignedSqrtRational: sign out of range");
}

SignedSqrtRational SignedSqrtRational::from_rational(const BigRational& r) {
    if (r == 0) return {};
    return SignedSqrtRational(r > 0 ? 1 : -1, r * r);
}

double SignedSqrtRational::to_double() const {
    return sign * std::sqrt(relstate::to_double(square));
}

std::string SignedSqrtRational::to_string() const {
    if (sign == 0) return "0";
    std::string s = "sqrt(" + to_fraction_string(square) + ")";
    return sign < 0 ? "-" + s : s;
}

SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return SignedSqrtRational(a.sign * b.sign, a.square * b.square);
}

namespace {

// n = sf * sq^2 with sf squarefree.
void squarefree_split(BigInt n, BigInt& sf, BigInt& sq) {
    sf = 1;
    sq = 1;
    for (BigInt p = 2; p <= 100000; p == 2 ? p = 3 : p += 2) {
        if (p * p > n) break;
        while (n % (p * p) == 0) {
            n /= p * p;
            sq *= p;
        }
        if (n % p == 0) {
            n /= p;
            sf *= p;
        }
    }
    if (n > 1) {
        const BigInt root = boost::multiprecision::sqrt(n);
        if (root * root == n) {
            sq *= root;
        } else if (n < BigInt("10000000000")) {
            // no square factor can survive below (10^5)^2
            sf *= n;
        } else {
            throw std::overflow_error("squarefree_split: remainder too large to certify");
        }
    }
}

}  // namespace

CanonicalSqrt canonicalize(const SignedSqrtRational& v) {
    CanonicalSqrt out;
    if (v.sign == 0) {
        out.coeff = 0;
        return out;
    }
    // sqrt(a/b) = sqrt(a*b)/b
    const BigInt a = boost::multiprecision::numerator(v.square);
    const BigInt b = boost::multiprecision::denominator(v.square);
    BigInt sf, sq;
    squarefree_split(a * b, sf, sq);
    out.radicand = sf;
    out.coeff = BigRational(sq, b);
    if (v.sign < 0) out.coeff = -out.coeff;
    return out;
}

void SqrtRationalSum::add(const SignedSqrtRational& term) {
    if (term.is_zero()) return;
    const CanonicalSqrt c = canonicalize(term);
    auto [it, inserted] = terms_.try_emplace(c.radicand, c.coeff);
    if (!inserted) {
        it->second += c.coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void SqrtRationalSum::add_product(const SignedSqrtRational& a, const SignedSqrtRational& b) {
    add(a * b);
}

bool SqrtRationalSum::is_zero() const { return terms_.empty(); }

bool SqrtRationalSum::equals(const SignedSqrtRational& v) const {
    SqrtRationalSum diff = *this;
    diff.add(SignedSqrtRational(-v.sign, v.square));
    return diff.is_zero();
}

SignedSqrtRational SqrtRationalSum::to_signed_sqrt() const {
    if (terms_.empty()) return {};
    if (terms_.size() > 1) {
        throw std::logic_error("SqrtRationalSum: sum does not collapse to a single radical");
    }
    const auto& [radicand, coeff] = *terms_.begin();
    return SignedSqrtRational(coeff > 0 ? 1 : -1, coeff * coeff * radicand);
}

BigRational SqrtRationalSum::to_rational() const {
    if (terms_.empty()) return BigRational(0);
    if (terms_.size() > 1 || terms_.begin()->first != 1) {
        throw std::logic_error("SqrtRationalSum: value is irrational");
    }
    return terms_.begin()->second;
}

double SqrtRationalSum::to_double() const {
    double acc = 0;
    for (const auto& [radicand, coeff] : terms_) {
        acc += relstate::to_double(coeff) * std::sqrt(radicand.convert_to<double>());
    }
    return acc;
}

std::string SqrtRationalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [radicand, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += to_fraction_string(coeff);
        if (radicand != 1) out += "*sqrt(" + radicand.str() + ")";
    }
    return out;
}

}  // namespace relstate
