// chains.hpp — transformation chains connecting the four one-sided
// presentations of the quantum superalgebra.
//
// Each of the three chains composes a sequence of oscillator-algebra twists
// (per-mode sign rescalings, the occupation-reversal automorphism), a weight
// substitution, and a generator-level automorphism, and carries one
// presentation kind onto another:
//
//   chain_to_row_one      : ColumnOne  presentation data  ->  RowOne
//   chain_to_column_last  : RowOne     presentation data  ->  ColumnLast
//   chain_to_row_last     : ColumnLast presentation data  ->  RowLast
//
// The second chain passes through the index-reversed algebra with the
// complementary grading; it is realized here by building the source family
// over a mode list arranged so the index reversal becomes the identity on
// matrix entries (FockOperator::reinterpreted carries them over).
#pragma once

#include "qgl/realizations.hpp"

namespace qgl {

// Per-mode sign twists (values in {+1,-1}), indexed by 1-based pair labels i<j.

// (-1)^{ sum_{k=i+1}^{j-1} p(k) + sum_{k=i}^{j-1} p(k)p(k+1) + p(i)p(j) }
long mode_sign_braid(const GradingProfile& g, int i, int j);
// (-1)^{ j-i-1 }
long mode_sign_alternating(int i, int j);
// (-1)^{ 1 + sum_{k=i}^{j} p(k) + sum_{k=i}^{j-1} p(k)p(k+1) + p(i)p(j) }
long mode_sign_braid_closed(const GradingProfile& g, int i, int j);

// Weight substitution lambda_i -> -lambda_i + p_i (p_[1,i-1] - p_[i+1,K])
// that accompanies the occupation-reversal automorphism.
std::vector<Weight> conjugate_lambda(const GradingProfile& g, std::vector<Weight> lambda);

// Grading with parities p'(i) = 1 - p(K+1-i) (reverse the index order and
// complement every parity).  Swaps the two blocks of the superalgebra.
GradingProfile reversed_grading(const GradingProfile& g);

// Space over the reversed grading whose position-P mode is the index
// reversal (i,a) -> (K+1-a, K+1-i) of the position-P mode of the full
// lexicographic space of g.  Operators built over it re-wrap verbatim onto
// full_space(reg, g, cutoff).
SpacePtr reversed_space(RegistryPtr reg, const GradingProfile& g, int cutoff);

// The three chains.  Each takes the *target* grading and weights together
// with the plain oscillator algebra over full_space(reg, g, cutoff), builds
// the source presentation over the appropriately twisted algebra, applies
// the generator-level automorphism, and returns the re-assembled family.
// The result is asserted (by tests) to equal build_verma(osc, g, <kind>, lambda).
GeneratorFamily chain_to_row_one(const OscAlgebra& osc, const GradingProfile& g,
                                 const std::vector<Weight>& lambda);
GeneratorFamily chain_to_column_last(const OscAlgebra& osc, const GradingProfile& g,
                                     const std::vector<Weight>& lambda);
GeneratorFamily chain_to_row_last(const OscAlgebra& osc, const GradingProfile& g,
                                  const std::vector<Weight>& lambda);

}  // namespace qgl
