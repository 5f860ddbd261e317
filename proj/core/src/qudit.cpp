#include "relstate/qudit.hpp"

#include "relstate/cg.hpp"
#include "relstate/rat_matrix.hpp"

#include <stdexcept>

namespace relstate::qudit {

namespace {

void require_d(int d) {
    if (d < 2) throw std::invalid_argument("qudit: d must be >= 2");
}

}  // namespace

QuditMoments qudit_moments(int d) {
    require_d(d);
    const long long dd = d;
    QuditMoments qm;
    qm.d = d;
    qm.antisym.i0 = BigRational(dd - 1, 2 * dd);
    qm.sym.i0 = BigRational(dd + 1, 2 * dd);
    qm.antisym.i1 = BigRational(dd - 1, 2 * dd * (dd + 1));
    qm.sym.i1 = BigRational(dd + 3, 2 * dd * (dd + 1));
    qm.antisym.i2 = BigRational(dd - 1, dd * (dd + 1) * (dd + 2));
    qm.sym.i2 = BigRational(dd + 5, dd * (dd + 1) * (dd + 2));
    return qm;
}

QuditVariance qudit_variance(int d) {
    require_d(d);
    const QuditMoments qm = qudit_moments(d);
    QuditVariance v;
    v.derived = (qm.antisym.i2 - qm.antisym.i1 * qm.antisym.i1 / qm.antisym.i0) +
                (qm.sym.i2 - qm.sym.i1 * qm.sym.i1 / qm.sym.i0);
    const BigRational dr(d);
    v.paper_formula = 2 / (dr * dr + dr) -
                      (dr - 2) * (dr - 2) / (2 * dr * (dr + 1) * (dr + 1) * (dr - 1)) -
                      (dr + 3) * (dr + 3) / (2 * dr * (dr + 1) * (dr + 1) * (dr + 1));
    return v;
}

QuditMoments permutation_trace_oracle(int d) {
    require_d(d);
    if (d > 4) throw std::invalid_argument("permutation_trace_oracle: capped at d <= 4 (memory guard)");

    const RatMat p0_1 = ground_projector(1, d);
    const RatMat sym2 = symmetrizer(2, d);
    const RatMat sym3 = symmetrizer(3, d);
    const BigRational dim2(sym_dim(d, 2), 1);
    const BigRational dim3(sym_dim(d, 3), 1);

    const auto block_moments = [&](const RatMat& block) {
        parallel::MomentTriple t;
        t.i0 = block.trace_product(kron(p0_1, RatMat::identity(static_cast<std::size_t>(d)))) / d;
        t.i1 = kron(block, p0_1).trace_product(kron(p0_1, sym2)) / dim2;
        t.i2 = kron(block, kron(p0_1, p0_1)).trace_product(kron(p0_1, sym3)) / dim3;
        return t;
    };

    QuditMoments qm;
    qm.d = d;
    qm.antisym = block_moments(antisymmetrizer2(d));
    qm.sym = block_moments(sym2);
    return qm;
}

QuditGuesses optimal_guesses(int d) {
    require_d(d);
    const long long dd = d;
    return QuditGuesses{BigRational(1, dd + 1), BigRational(dd + 3, (dd + 1) * (dd + 1))};
}

}  // namespace relstate::qudit
