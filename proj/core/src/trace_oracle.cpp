#include "relstate/trace_oracle.hpp"

#include <stdexcept>

namespace relstate::oracle {

namespace {

void require_range(int N, int M) {
    if (N < 1 || M < N) throw std::invalid_argument("parallel_trace_moments: require 1 <= N <= M");
    if (M > 3) throw std::invalid_argument("parallel_trace_moments: capped at M <= 3 (memory guard)");
}

}  // namespace

RatMat block_projector(int N, int M, int k) {
    const int n = N + M;
    const RatMat j2 = total_spin_squared(n);
    // Lagrange interpolation over the spins present in H_N^+ (x) H_M^+;
    // eigenvalues are j(j+1) with 2j = k', as exact quarters.
    const auto eigen = [](int kk) { return BigRational(kk * (kk + 2), 4); };
    RatMat proj = RatMat::identity(j2.rows());
    for (int kp = M - N; kp <= M + N; kp += 2) {
        if (kp == k) continue;
        RatMat factor = j2;
        RatMat shift = RatMat::identity(j2.rows());
        shift *= eigen(kp);
        factor -= shift;
        factor *= 1 / (eigen(k) - eigen(kp));
        proj = proj * factor;
    }
    return proj * kron(symmetrizer(N, 2), symmetrizer(M, 2));
}

parallel::MomentMap parallel_trace_moments(int N, int M) {
    require_range(N, M);
    parallel::MomentMap out;
    for (int k = M - N; k <= M + N; k += 2) {
        const RatMat ones_k = block_projector(N, M, k);
        parallel::MomentTriple t;
        // I^0 on N+M qubits, I^1 on N+M+1, I^2 on N+M+2; each trace is
        // normalized by the symmetric-subspace dimension of the reference
        // factor (M, M+1, M+2 qubits respectively).
        t.i0 = ones_k.trace_product(kron(ground_projector(N, 2), symmetrizer(M, 2))) / (M + 1);
        t.i1 = kron(ones_k, ground_projector(1, 2))
                   .trace_product(kron(ground_projector(N, 2), symmetrizer(M + 1, 2))) /
               (M + 2);
        t.i2 = kron(ones_k, ground_projector(2, 2))
                   .trace_product(kron(ground_projector(N, 2), symmetrizer(M + 2, 2))) /
               (M + 3);
        out.emplace(k, std::move(t));
    }
    return out;
}

}  // namespace relstate::oracle
