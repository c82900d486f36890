// realizations.hpp — oscillator realizations of the quantum superalgebra and
// its contractions: the four Verma-module presentations, their reductions,
// the contracted families obtained in the large-weight limit, the explicit
// closed-form families at the extreme splits, and the single-index family.
//
// A GeneratorFamily holds the full matrix of generators e_ij as operators on
// a truncated Fock space, together with the diagonal group-like elements
//   qcart[i]     = q^{+p_i e_ii}
//   qcart_inv[i] = q^{-p_i e_ii}
//   qcart_bar[i] = the barred diagonal (inverse of qcart for uncontracted
//                  families; the zero operator on the non-invertible range
//                  of a contracted family).
// All public index conventions are 1-based; vectors are padded so that
// element 0 is unused.
#pragma once

#include "qgl/grading.hpp"
#include "qgl/oscalg.hpp"

namespace qgl {

using Mat = std::vector<std::vector<FockOperator>>;

// The four equivalent Verma presentations, named by the corner of the
// generator matrix whose entries take a one-term closed form:
//   ColumnOne  — e_{i,1} simple;   RowOne  — e_{1,j} simple;
//   ColumnLast — e_{j,K} simple;   RowLast — e_{K,j} simple.
enum class VermaKind { ColumnOne, RowOne, ColumnLast, RowLast };

struct GeneratorFamily {
    GeneratorFamily(GradingProfile g, OscAlgebra o);

    GradingProfile grading;
    OscAlgebra osc;
    std::vector<Weight> lambda;  // weights used by the builder (1-based)
    SubsetI iset;                // contraction split; a == 0 for plain families
    bool contracted = false;     // barred diagonal vanishes for i <= iset.a

    Mat e;                                // e[i][j]
    std::vector<FockOperator> qcart;      // q^{+p_i e_ii}
    std::vector<FockOperator> qcart_inv;  // q^{-p_i e_ii}
    std::vector<FockOperator> qcart_bar;  // barred diagonal

    int K() const { return grading.K(); }
    SpacePtr space() const { return osc.space(); }
};

// --- mode sets ---------------------------------------------------------------
// All pairs i < j.
SpacePtr full_space(RegistryPtr reg, const GradingProfile& g, int cutoff);
// Pairs with column index beyond the split: {(i,j) : i < j, j > a}.
SpacePtr tail_space(RegistryPtr reg, const GradingProfile& g, int a, int cutoff);
// Pairs with row index within the band: {(i,j) : i < j, i <= a}.
SpacePtr band_space(RegistryPtr reg, const GradingProfile& g, int a, int cutoff);
// Pairs crossing the split: {(i,j) : i <= a < j}.
SpacePtr crossing_space(RegistryPtr reg, const GradingProfile& g, int a, int cutoff);
// Pairs carrying one fixed index: {(i0,b) : b != i0}, ordered by b.
SpacePtr single_index_space(RegistryPtr reg, const GradingProfile& g, int i0, int cutoff);

// --- builders ----------------------------------------------------------------
// Verma presentation over the given oscillator algebra.  Formulas skip
// modes the algebra's space does not carry, so the same builder serves the
// reduced families on band/tail mode sets (with the matching weights).
GeneratorFamily build_verma(const OscAlgebra& osc, const GradingProfile& g, VermaKind kind,
                            std::vector<Weight> lambda);

// The closed-form corner entry of each presentation: e_{idx,1}, e_{1,idx},
// e_{idx,K} or e_{K,idx} according to the kind.
FockOperator verma_corner(const OscAlgebra& osc, const GradingProfile& g, VermaKind kind, int idx);

// Replace lambda_i by p_i*mu on the square that the reduction of `kind`
// zeroes out (columns beyond a for ColumnOne/RowOne, rows up to a for
// ColumnLast/RowLast).
std::vector<Weight> reduced_lambda(const GradingProfile& g, VermaKind kind, int a, Weight mu,
                                   std::vector<Weight> lambda);

// Contracted family at split a (1 <= a <= K-1) on the tail mode set;
// weights lambda[i] are used for i > a only.
GeneratorFamily build_contracted(const OscAlgebra& osc, const GradingProfile& g, int a,
                                 std::vector<Weight> lambda);

// Degenerate contracted family (all tail weights equal to p_i*mu) on the
// crossing mode set.
GeneratorFamily build_contracted_mu(const OscAlgebra& osc, const GradingProfile& g, int a,
                                    Weight mu);

// Fully explicit families (no recursion): the reduced ColumnOne presentation
// at split 1, and the degenerate contracted families at the extreme splits.
GeneratorFamily closed_reduced_split_one(const OscAlgebra& osc, const GradingProfile& g,
                                         Weight lambda1, Weight mu);
GeneratorFamily closed_contracted_split_one(const OscAlgebra& osc, const GradingProfile& g,
                                            Weight mu);
GeneratorFamily closed_contracted_split_last(const OscAlgebra& osc, const GradingProfile& g,
                                             Weight mu);

// Single-index family: all generators written through the ladder pairs of
// one row/column index i0, on single_index_space(i0).  Realizes the full
// algebra with highest weight p_i0 * m concentrated on index i0.
GeneratorFamily build_single_index(const OscAlgebra& osc, const GradingProfile& g, int i0,
                                   Weight m);

// Assemble a plain family from explicit diagonal/adjacent data and complete
// the remaining entries by the standard recursion.  All vectors 1-based.
GeneratorFamily assemble_family(const OscAlgebra& osc, const GradingProfile& g,
                                std::vector<Weight> lambda, std::vector<FockOperator> diag,
                                std::vector<FockOperator> qcart,
                                std::vector<FockOperator> qcart_inv,
                                std::vector<FockOperator> raising,
                                std::vector<FockOperator> lowering);

// Nested ladder recursion used to complete a family: fills every e[i][j]
// with |i-j| >= 2 from the adjacent generators.  For contracted = false:
//   e_ij = [e_ik, e_kj]_{q^{-p_k}} (i<k<j),  e_ij = [e_ik, e_kj]_{q^{+p_k}} (i>k>j).
// For contracted = true the lower triangle instead uses the vanishing of
// rows within the split band, the first-column entries, and the dressed
// bracket e_ic = q^{-p_1 e_11 + p_c e_cc} [e_i1, e_1c].
void complete_family(GeneratorFamily& f);

}  // namespace qgl
