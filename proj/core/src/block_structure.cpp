#include "relstate/antiparallel.hpp"

#include "relstate/cg.hpp"
#include "relstate/half_int.hpp"

#include <array>

namespace relstate::antiparallel {

namespace {

// Exact 8-component vectors of the coupled three-qubit basis. Components
// are single CG products (the intermediate m12 label is fixed by the bits),
// so each entry is one SignedSqrtRational.
using Vec8 = std::array<SignedSqrtRational, 8>;

HalfInt bit_m(int bit) { return HalfInt::from_twice(bit == 0 ? 1 : -1); }

Vec8 coupled_state(HalfInt j12, HalfInt J, HalfInt MJ) {
    const HalfInt half = HalfInt::half();
    Vec8 v{};
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            for (int b2 = 0; b2 < 2; ++b2) {
                const HalfInt m12 = bit_m(b0) + bit_m(b1);
                if (m12.abs().twice > j12.twice) continue;
                const SignedSqrtRational inner = cg(half, bit_m(b0), half, bit_m(b1), j12, m12);
                if (inner.is_zero()) continue;
                const SignedSqrtRational outer = cg(j12, m12, half, bit_m(b2), J, MJ);
                if (outer.is_zero()) continue;
                v[static_cast<std::size_t>(b0 * 4 + b1 * 2 + b2)] = inner * outer;
            }
        }
    }
    return v;
}

struct CoupledBases {
    std::vector<Vec8> v0;  // spin-1/2 copy through the singlet, mu = +1/2, -1/2
    std::vector<Vec8> v1;  // spin-1/2 copy through the triplet
    std::vector<Vec8> w;   // spin-3/2 multiplet
};

CoupledBases coupled_bases() {
    const HalfInt zero = HalfInt::whole(0);
    const HalfInt one = HalfInt::whole(1);
    const HalfInt half = HalfInt::half();
    const HalfInt threehalf = HalfInt::from_twice(3);
    CoupledBases b;
    for (int tmu : {1, -1}) {
        b.v0.push_back(coupled_state(zero, half, HalfInt::from_twice(tmu)));
        b.v1.push_back(coupled_state(one, half, HalfInt::from_twice(tmu)));
    }
    for (int tm : {3, 1, -1, -3}) {
        b.w.push_back(coupled_state(one, threehalf, HalfInt::from_twice(tm)));
    }
    return b;
}

// Coefficient of the q-block built from bra family `bra` and ket family
// `ket` in the moment functional I_i. The fiducial three-qubit state is
// |0 1 0...>, so only components with (b0, b1) = (0, 1) contribute; the
// reference-register overlaps reduce the symmetrizers to the scalar
// weights below.
SignedSqrtRational moment_coefficient(const std::vector<Vec8>& bra, const std::vector<Vec8>& ket,
                                      int moment_index) {
    // weight(b2, moment): diagonal matrix elements <b2 0..|S|b2 0..> of the
    // identity/2, S2/3 and S3/4 reference operators
    static const BigRational weights[3][2] = {
        {BigRational(1, 2), BigRational(1, 2)},   // I0: 1/2 per z value
        {BigRational(1, 3), BigRational(1, 6)},   // I1: (1/3) * {1, 1/2}
        {BigRational(1, 4), BigRational(1, 12)},  // I2: (1/4) * {1, 1/3}
    };
    SqrtRationalSum acc;
    for (std::size_t mu = 0; mu < bra.size(); ++mu) {
        for (int b2 = 0; b2 < 2; ++b2) {
            const std::size_t idx = static_cast<std::size_t>(0 * 4 + 1 * 2 + b2);  // |0 1 b2>
            SignedSqrtRational term = bra[mu][idx] * ket[mu][idx];
            if (term.is_zero()) continue;
            term = term * SignedSqrtRational::from_rational(weights[moment_index][b2]);
            acc.add(term);
        }
    }
    return acc.to_signed_sqrt();
}

SignedSqrtRational ssr(int sign, long long num, long long den) {
    if (sign == 0) return {};
    return SignedSqrtRational(sign, BigRational(num, den));
}

}  // namespace

bool BlockStructureReport::all_match() const {
    if (!completeness_ok || trace33 != 4) return false;
    for (const auto& e : coefficients) {
        if (!e.match) return false;
    }
    return true;
}

BlockStructureReport block_structure_check() {
    const CoupledBases bases = coupled_bases();
    BlockStructureReport report;

    // completeness of the isotypic projectors: entries of
    // 1_00 + 1_11 + 1_33 must reproduce the identity exactly
    report.completeness_ok = true;
    for (std::size_t i = 0; i < 8 && report.completeness_ok; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            SqrtRationalSum entry;
            for (const auto* family : {&bases.v0, &bases.v1, &bases.w}) {
                for (const auto& vec : *family) entry.add(vec[i] * vec[j]);
            }
            const bool ok = (i == j) ? entry.equals(SignedSqrtRational::from_rational(1))
                                     : entry.is_zero();
            if (!ok) {
                report.completeness_ok = false;
                break;
            }
        }
    }

    {
        SqrtRationalSum tr;
        for (const auto& vec : bases.w) {
            for (std::size_t i = 0; i < 8; ++i) tr.add(vec[i] * vec[i]);
        }
        report.trace33 = tr.to_rational();
    }

    // printed coefficient lists: (I0; I1; I2) per block, with the q01/q10
    // cross entries carrying -1/(12 sqrt 3), i.e. -sqrt(1/432)
    struct Expected {
        const char* name;
        const std::vector<Vec8>* bra;
        const std::vector<Vec8>* ket;
        std::array<SignedSqrtRational, 3> printed;
    };
    const std::vector<Expected> table = {
        {"q00", &bases.v0, &bases.v0, {ssr(1, 1, 4), ssr(1, 1, 16), ssr(1, 1, 36)}},
        {"q11", &bases.v1, &bases.v1, {ssr(1, 1, 36), ssr(1, 1, 144), ssr(1, 1, 324)}},
        {"q01", &bases.v1, &bases.v0, {ssr(0, 0, 1), ssr(-1, 1, 432), ssr(-1, 1, 432)}},
        {"q10", &bases.v0, &bases.v1, {ssr(0, 0, 1), ssr(-1, 1, 432), ssr(-1, 1, 432)}},
        {"q33", &bases.w, &bases.w, {ssr(1, 1, 9), ssr(1, 1, 36), ssr(1, 1, 81)}},
    };
    for (const auto& row : table) {
        for (int i = 0; i < 3; ++i) {
            CoefficientEntry entry;
            entry.block = row.name;
            entry.moment_index = i;
            entry.computed = moment_coefficient(*row.bra, *row.ket, i);
            entry.printed = row.printed[static_cast<std::size_t>(i)];
            entry.match = entry.computed == entry.printed;
            report.coefficients.push_back(std::move(entry));
        }
    }
    return report;
}

IsotypicOperators isotypic_operators() {
    const CoupledBases bases = coupled_bases();
    IsotypicOperators ops{};
    const auto fill = [](Op8& op, const std::vector<Vec8>& bra, const std::vector<Vec8>& ket) {
        for (std::size_t mu = 0; mu < bra.size(); ++mu) {
            for (std::size_t i = 0; i < 8; ++i) {
                const double ki = ket[mu][i].to_double();
                if (ki == 0.0) continue;
                for (std::size_t j = 0; j < 8; ++j) {
                    op[i][j] += ki * bra[mu][j].to_double();
                }
            }
        }
    };
    fill(ops.one00, bases.v0, bases.v0);
    fill(ops.one11, bases.v1, bases.v1);
    fill(ops.one01, bases.v1, bases.v0);  // |v0><v1|
    fill(ops.one10, bases.v0, bases.v1);
    fill(ops.one33, bases.w, bases.w);
    return ops;
}

}  // namespace relstate::antiparallel
