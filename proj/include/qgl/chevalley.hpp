// chevalley.hpp — Chevalley-type generator systems e_i, f_i, k_i of the
// affine quantum superalgebra, realized on truncated Fock spaces.
//
// Index i runs over 1..K with node K the affine one; adjacency and the
// Cartan matrix wrap modulo K (k_{K+1} = k_1, p_{K+1} = p_1).  The affine
// raising/lowering generators carry a spectral monomial x (variable slot
// kX), kept formal so identities can be checked coefficient-wise in x.
#pragma once

#include "qgl/realizations.hpp"

namespace qgl {

struct ChevalleyFamily {
    GradingProfile grading;
    SubsetI iset;            // a = 0 for uncontracted families
    bool contracted = false;
    std::vector<FockOperator> e, f, k;     // 1-based, indices 1..K
    std::vector<FockOperator> qk, qk_bar;  // q^{+p_i k_i} and q^{-p_i k_i};
                                           // the barred one is the contracted
                                           // (possibly zero) version
    std::vector<long> shift;               // Cartan shift constants c_i

    explicit ChevalleyFamily(GradingProfile g);
    int K() const { return grading.K(); }
};

// Evaluation map from a generator family (plain or contracted):
//   e_i = e_{i,i+1},   f_i = p_i e_{i+1,i},   k_i = e_ii          (i < K)
//   e_K = x  q^{-p_1 e_11} e_{K,1} q^{-p_K e_KK}
//   f_K = p_K x^{-1} q^{p_K e_KK} e_{1,K} q^{p_1 e_11}
// The inverse diagonal powers q^{-p_i e_ii} exist for contracted families
// too (contraction kills only the *barred* diagonals), so the same formulas
// apply; x and x_inv are the spectral monomials (e.g. var_power(kX, +/-1)).
ChevalleyFamily evaluation_chevalley(const GeneratorFamily& fam, const Scalar& x,
                                     const Scalar& x_inv);

// The contracted affine family written from its displayed closed form over
// the crossing modes (split a, 1 <= a <= K-1, parameter mu):
//   k_i = -n_{i,I} (i <= a),   k_i = p_i mu + n_{Ibar,i} (i > a)
//   e_i: three band branches; e_K = x c+_{1,K} q^{p_1 - mu + p_1 n_{1K} - p_K n_{Ibar,K}}
//   f_i: zero below the band, adjacent forms at and above it;
//   f_K = p_K x^{-1} q^{p_K k_K} [e_1,[e_2,...,[e_{K-2},e_{K-1}]_{q^{-p_{K-1}}}...]_{q^{-p_2}}] q^{p_1 k_1}.
ChevalleyFamily contracted_chevalley(const OscAlgebra& osc, const GradingProfile& g, int a,
                                     Weight mu, const Scalar& x, const Scalar& x_inv);

// Cartan shift k_i -> k_i + p_i c_i, an automorphism of either Borel half
// (it preserves every defining relation not mixing e with f).
ChevalleyFamily shifted(ChevalleyFamily ch, const std::vector<long>& c);

}  // namespace qgl
