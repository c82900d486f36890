// lax.hpp — constant R-matrices on the auxiliary superspace and two-part
// L-operators over a Fock space.
//
// The auxiliary space is the K-dimensional graded vector space of the
// grading profile (basis vector i has parity p(i)).  An R-matrix is stored
// as two constant parts, combined by its kind:
//   Trig:      R(z) = part0 - z * part1           (z = x y^{-1})
//   Rational:  R(z) = part0 + z * part1           (z = u - v, part1 = 1⊗1)
// Likewise a LaxOperator holds two matrices of Fock operators:
//   Trig:      entry(i,j)(x) = L[i][j] - x^{-1} * Lbar[i][j]
//   Rational:  entry(i,j)(u) = L[i][j] + u      * Lbar[i][j]
// so that the spectral parameter always enters through a single scalar
// coefficient supplied at evaluation time.
#pragma once

#include "qgl/realizations.hpp"

namespace qgl {

// One summand of an aux⊗aux matrix: coeff * E_ab ⊗ E_cd (indices 1-based).
struct AuxTerm {
    int a, b, c, d;
    Scalar coeff;
};

enum class RKind { Trig, Rational };

struct RMatrix {
    GradingProfile grading;
    RKind kind;
    std::vector<AuxTerm> part0;
    std::vector<AuxTerm> part1;
};

// R evaluated at the spectral argument z (kind-specific combination).
std::vector<AuxTerm> r_at(const RMatrix& r, const Scalar& z);

// Trigonometric R-matrix of the vector⊗vector representation:
//   part0 = sum_i q^{p_i} E_ii⊗E_ii + sum_{i≠j} E_ii⊗E_jj
//           + (q-q^-1) sum_{i<j} p_j E_ij⊗E_ji,
//   part1 = sum_i q^{-p_i} E_ii⊗E_ii + sum_{i≠j} E_ii⊗E_jj
//           - (q-q^-1) sum_{i>j} p_j E_ij⊗E_ji.
RMatrix ps_r(RegistryPtr reg, const GradingProfile& g);

// Rational R-matrix R(u) = u * 1⊗1 + sum_{i,j} p_i E_ji⊗E_ij.
RMatrix rational_r(RegistryPtr reg, const GradingProfile& g);

struct LaxOperator {
    GradingProfile grading;
    SpacePtr space;
    RKind kind = RKind::Trig;
    Mat L;     // constant part, (K+1)x(K+1), 1-based
    Mat Lbar;  // spectral part (see the kind-specific combination above)

    LaxOperator(GradingProfile g, SpacePtr sp, RKind k);
    int K() const { return grading.K(); }
};

// Entry (i,j) evaluated at a spectral coefficient: pass x^{-1} for the
// trigonometric kind and u for the rational kind.
FockOperator lax_entry(const LaxOperator& lax, int i, int j, const Scalar& spectral_coeff);

// L-operator of a generator family:
//   L[i][i]    = q^{+p_i e_ii},            Lbar[i][i] = barred diagonal,
//   L[i][j]    = p_i (q-q^-1) e_ji q^{p_j e_jj}          for i > j,
//   Lbar[i][j] = -p_i (q-q^-1) q^{-p_i e_ii} e_ji        for i < j.
LaxOperator frt_from_family(const GeneratorFamily& fam);

// 𝓛 ↦ (1 ⊗ H_L) 𝓛 (1 ⊗ H_R) for constant diagonal matrices H_L, H_R
// (vectors of scalars, 1-based, entry 0 unused).
LaxOperator transform_diagonal(LaxOperator lax, const std::vector<Scalar>& hl,
                               const std::vector<Scalar>& hr);

// 𝐋(x) ↦ 𝐋(c x) for a constant c: scales the x^{-1} part by c^{-1}
// (the caller supplies the inverse).  Trigonometric kind only.
LaxOperator rescale_spectral(LaxOperator lax, const Scalar& c_inv);

// One asserted entry of a partially displayed L-operator.
struct LaxEntry {
    int i, j;
    bool bar;  // true: entry of the x^{-1} part
    FockOperator op;
};

// Closed-form L-operator entries of the contracted family at split a on the
// tail mode set (weights lambda[i] used for i > a): diagonals, the first
// subdiagonal of L, the first superdiagonal of the x^{-1} part, its first
// row on the far block, and the vanishing pattern inside the near block.
std::vector<LaxEntry> contracted_L_entries_tail(const OscAlgebra& osc, const GradingProfile& g,
                                                int a, const std::vector<Weight>& lambda);

// Same list for the degenerate contracted family (all far weights p_i*mu)
// on the crossing mode set.
std::vector<LaxEntry> contracted_L_entries_crossing(const OscAlgebra& osc,
                                                    const GradingProfile& g, int a, Weight mu);

// Closed-form L-operator of the single-index family, complete in all
// entries.  Generic carries the symbolic weight; the two limit kinds are
// the renormalized small-weight (q^w -> 0) and large-weight (q^w -> inf)
// degenerations.
enum class SingleIndexLKind { Generic, SmallWeightLimit, LargeWeightLimit };
LaxOperator single_index_L(SingleIndexLKind kind, const OscAlgebra& osc, const GradingProfile& g,
                           int i0, Weight w);

// Rational L-operator of a gl-family: entry(i,j)(u) = u δ_ij θ_i + p_i e_ji
// with θ_i = 1 on every row for a plain family and θ_i = [i > split] for a
// contracted one.
LaxOperator rational_lax(const GeneratorFamily& fam);

}  // namespace qgl
