#pragma once

#include "relstate/rational.hpp"

#include <cstddef>
#include <vector>

namespace relstate {

/// Dense matrix over exact rationals. Just enough linear algebra for the
/// brute-force trace oracles: products, Kronecker products, traces. Not a
/// general-purpose class; sizes stay at or below 256x256.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMat operator*(const RatMat& rhs) const;
    RatMat& operator+=(const RatMat& rhs);
    RatMat& operator-=(const RatMat& rhs);
    RatMat& operator*=(const BigRational& s);

    BigRational trace() const;
    /// tr(*this * rhs) without forming the product.
    BigRational trace_product(const RatMat& rhs) const;

    bool operator==(const RatMat& rhs) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigRational> a_;
};

RatMat kron(const RatMat& a, const RatMat& b);

/// Permutation operator on n sites of local dimension q: site i of the
/// output carries the state of site perm[i] of the input.
RatMat site_permutation(int n, int q, const std::vector<int>& perm);

/// Projector onto the symmetric subspace of n sites: (1/n!) sum of all
/// site permutations.
RatMat symmetrizer(int n, int q);

/// Projector onto the antisymmetric subspace of 2 sites: (1 - SWAP)/2.
RatMat antisymmetrizer2(int q);

/// Total-spin-squared operator on n qubits, assembled from SWAPs:
/// J^2 = sum_{i<j} SWAP_ij + n(3-(n-1))/4 * I. Exact rational entries.
RatMat total_spin_squared(int n);

/// |0...0><0...0| on n sites of local dimension q.
RatMat ground_projector(int n, int q);

}  // namespace relstate
