#include "relstate/rat_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace relstate {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
    RatMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigRational& aik = (*this)(i, k);
            if (aik == 0) continue;  // oracle matrices are sparse in practice
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const BigRational& bkj = rhs(k, j);
                if (bkj == 0) continue;
                out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

RatMat& RatMat::operator+=(const RatMat& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

RatMat& RatMat::operator-=(const RatMat& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RatMat: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

RatMat& RatMat::operator*=(const BigRational& s) {
    for (auto& v : a_) v *= s;
    return *this;
}

BigRational RatMat::trace() const {
    BigRational t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

BigRational RatMat::trace_product(const RatMat& rhs) const {
    if (cols_ != rhs.rows_ || rows_ != rhs.cols_) {
        throw std::invalid_argument("RatMat: shape mismatch in trace_product");
    }
    BigRational t(0);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const BigRational& aij = (*this)(i, j);
            if (aij == 0) continue;
            const BigRational& bji = rhs(j, i);
            if (bji == 0) continue;
            t += aij * bji;
        }
    }
    return t;
}

RatMat kron(const RatMat& a, const RatMat& b) {
    RatMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const BigRational& aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const BigRational& bkl = b(k, l);
                    if (bkl == 0) continue;
                    out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
            }
        }
    }
    return out;
}

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

RatMat site_permutation(int n, int q, const std::vector<int>& perm) {
    const std::size_t dim = ipow(static_cast<std::size_t>(q), n);
    RatMat m(dim, dim);
    std::vector<int> digits(n);
    for (std::size_t b = 0; b < dim; ++b) {
        std::size_t rem = b;
        for (int i = n - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(rem % q);
            rem /= q;
        }
        std::size_t target = 0;
        for (int i = 0; i < n; ++i) target = target * q + digits[perm[i]];
        m(target, b) = 1;
    }
    return m;
}

RatMat symmetrizer(int n, int q) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t dim = ipow(static_cast<std::size_t>(q), n);
    RatMat acc(dim, dim);
    std::size_t count = 0;
    do {
        acc += site_permutation(n, q, perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc *= BigRational(1, count);
    return acc;
}

RatMat antisymmetrizer2(int q) {
    RatMat m = RatMat::identity(static_cast<std::size_t>(q) * q);
    m -= site_permutation(2, q, {1, 0});
    m *= BigRational(1, 2);
    return m;
}

RatMat total_spin_squared(int n) {
    const std::size_t dim = ipow(2, n);
    RatMat acc(dim, dim);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[j]);
            acc += site_permutation(n, 2, perm);
        }
    }
    RatMat id = RatMat::identity(dim);
    id *= BigRational(3 * n - n * (n - 1), 4);
    acc += id;
    return acc;
}

RatMat ground_projector(int n, int q) {
    RatMat m(ipow(static_cast<std::size_t>(q), n), ipow(static_cast<std::size_t>(q), n));
    m(0, 0) = 1;
    return m;
}

}  // namespace relstate
