// verify.hpp — mechanical checkers.  Relation sweeps over generator families,
// Chevalley-presentation checks, highest-weight conditions, and the graded
// Yang-Baxter equation for L-operators against a fixed auxiliary R-matrix.
//
// Every checker returns a VerificationReport: a flat list of named checks,
// each passing or carrying a counterexample string.  Checkers never throw on
// mathematical failure — only on structural misuse (wrong kinds, mismatched
// spaces).  When the Fock cutoff is too small to certify anything the report
// is marked infeasible and carries a sizing hint instead of silently passing.
#pragma once

#include <string>
#include <vector>

#include "qgl/chevalley.hpp"
#include "qgl/lax.hpp"
#include "qgl/realizations.hpp"

namespace qgl {

// One named check with a counterexample description on failure.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // non-empty when pass is false
};

// Result of one verification routine on one instance.
struct VerificationReport {
    std::string suite;                // stable suite key
    std::string instance;             // instance descriptor
    std::vector<CheckResult> checks;
    bool infeasible = false;          // cutoff too small to certify anything

    void add(const std::string& name, bool pass, const std::string& detail = "");
    bool ok() const;
    int failed() const;
    std::string first_failure() const;
};

// Sparse matrix on (Fock space) ⊗ aux ⊗ aux with the Koszul signs of the
// graded tensor product baked into the stored entries, so that plain matrix
// multiplication realizes graded operator composition.  Aux indices are
// 1-based; the composite column index runs Fock-major.
class TripleOp {
public:
    TripleOp(SpacePtr fock, GradingProfile g);

    int dim() const { return dim_; }

    // += F ⊗ E_ij ⊗ 1
    void add_left(const FockOperator& F, int i, int j);
    // += F ⊗ 1 ⊗ E_kl
    void add_right(const FockOperator& F, int k, int l);
    // += coeff · (1 ⊗ E_ab ⊗ E_cd)
    void add_aux(const AuxTerm& t);
    // Sort, merge and drop zero entries; call once after assembly.
    void compress();

    Scalar at(int row, int col) const;
    friend TripleOp operator*(const TripleOp& x, const TripleOp& y);

    // Columns of x and y agree for every aux pair over the listed Fock
    // columns; on mismatch fills `where` (if non-null) with the first
    // offending entry.
    static bool equal_on(const TripleOp& x, const TripleOp& y,
                         const std::vector<int>& fock_cols, std::string* where = nullptr);

private:
    SpacePtr fock_;
    GradingProfile g_;
    int K_;
    int dim_;
    std::vector<std::vector<std::pair<int, Scalar>>> cols_;  // per column, (row, value)

    int index(int f, int u, int v) const { return (f * K_ + (u - 1)) * K_ + (v - 1); }
    void put(int row, int col, const Scalar& val);
};

// Checks  R23(z) · L13(c13) · L12(c12)  =  L12(c12) · L13(c13) · R23(z)
// on the block of Fock columns whose headroom certificate survives both
// triple products.  Spectral data is fixed by the operator kind: the
// multiplicative kind pairs inverse spectral variables with the ratio
// argument, the additive kind pairs plain variables with the difference.
// `headroom` overrides the computed certificate when non-negative.
VerificationReport check_ybe(const LaxOperator& lax, const RMatrix& r, int headroom = -1);

// Full relation sweep for a generator family: diagonal commutativity and
// inversion, ladder recursions, pairings of opposite off-diagonal generators,
// mixed brackets over all index patterns, and square/vanishing relations.
// Contracted families get the contraction-modified diagonal relations plus
// the extra vanishing constraints below the split.
VerificationReport check_generator_relations(const GeneratorFamily& fam);

// Chevalley-presentation checks: Cartan commutativity, Cartan-ladder
// weights, raising/lowering pairings (which degenerate correctly for
// contracted families), and vanishing brackets for disconnected node pairs.
// `borel_only` skips every check that involves the lowering generators.
VerificationReport check_chevalley(const ChevalleyFamily& ch, bool borel_only = false);

// The Fock vacuum is an eigenvector of the diagonal generators with the
// advertised weights and is annihilated by every raising generator.
VerificationReport check_highest_weight(const GeneratorFamily& fam);

// Vacuum action of a multiplicative-kind L-operator: strictly-lower entries
// kill the vacuum; diagonal entries act by q^{p_i λ_i} − x^{-1} q^{-p_i λ_i}
// (by 1 below the split of a contracted family).
VerificationReport check_lax_vacuum(const LaxOperator& lax, const GeneratorFamily& fam);

// Vacuum structure of the one-index family around an interior index: the
// diagonal eigenvalues are concentrated on the distinguished index, and the
// vacuum is killed by the generators strictly inside the two diagonal blocks
// and by the whole lower crossing block.  (For i0 = 1 this reduces to the
// full highest-weight condition.)
VerificationReport check_single_index_vacuum(const GeneratorFamily& fam, int i0);

}  // namespace qgl
