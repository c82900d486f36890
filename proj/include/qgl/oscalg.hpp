// oscalg.hpp — the q-oscillator (super)algebra presented over a truncated
// Fock space, together with the twists (rescalings, flips, zeroings and
// generator replacements) used to move between presentations.
//
// An OscAlgebra owns one ladder pair (c, c†) per mode of its Fock space plus
// an affine bookkeeping transform n' = alpha*n + beta of the occupation
// numbers.  Diagonal operators are built from ExponentForm, a formal integer
// combination of occupation numbers plus a symbolic weight:
//
//     form  =  sum_m coeff_m * n'_m  +  w,        w = c0 + mcoeff * m.
//
// qpow(form), qbracket(form) and linear(form) evaluate q^form, [form]_q and
// form itself as diagonal matrices.  Twisted copies reinterpret the same
// Fock space through transformed generators; all certificates (headroom)
// ride on the underlying FockOperator values.
#pragma once

#include <functional>
#include <vector>

#include "qgl/fock.hpp"

namespace qgl {

// Formal exponent: integer coefficients per mode plus a symbolic weight.
// Adding a coefficient for a mode the space does not carry is a no-op; on
// reduced mode sets the dropped occupation numbers are identically zero.
class ExponentForm {
public:
    explicit ExponentForm(SpacePtr sp);

    ExponentForm& add(int i, int a, long c);
    // sum_{j=b}^{cto} n_{i,j} * c   (row-index fixed)
    ExponentForm& add_row_range(int i, int b, int cto, long c);
    // sum_{j=b}^{cto} n_{j,a} * c   (column-index fixed)
    ExponentForm& add_col_range(int b, int cto, int a, long c);
    ExponentForm& add_weight(Weight dw);

    SpacePtr space() const { return sp_; }
    const std::vector<long>& coeffs() const { return coeff_; }
    Weight weight() const { return w_; }

private:
    SpacePtr sp_;
    std::vector<long> coeff_;
    Weight w_{0, 0};
};

class OscAlgebra {
public:
    // The untwisted algebra on a Fock space: c annihilates with q-bracket
    // amplitudes when `deformed`, with linear amplitudes otherwise (the
    // undeformed oscillator used by the rational sector).
    static OscAlgebra base(SpacePtr sp, bool deformed = true);

    SpacePtr space() const { return sp_; }
    RegistryPtr registry() const { return sp_->registry(); }
    bool deformed() const { return deformed_; }

    // Ladder operators for mode (i,a); the zero operator when the space does
    // not carry the mode or it has been zeroed out.
    const FockOperator& c(int i, int a) const;
    const FockOperator& cdag(int i, int a) const;
    bool has_mode(int i, int a) const { return sp_->mode_index(i, a) >= 0; }

    // Diagonal matrices of the transformed occupations.
    FockOperator qpow(const ExponentForm& f) const;      // q^{f}
    FockOperator qbracket(const ExponentForm& f) const;  // [f]_q
    FockOperator linear(const ExponentForm& f) const;    // f itself
    ExponentForm form() const { return ExponentForm(sp_); }

    // --- twisted copies ------------------------------------------------------
    // c_ia -> cf(i,a) * c_ia,  c†_ia -> cdf(i,a) * c†_ia  (scalar rescaling).
    OscAlgebra rescaled(const std::function<Scalar(int, int)>& cf,
                        const std::function<Scalar(int, int)>& cdf) const;
    // c, c†, n -> 0 on the selected modes.
    OscAlgebra zeroed(const std::function<bool(int, int)>& pred) const;
    // Particle-hole flip on the selected modes:
    //   c -> c†,  c† -> -(p_i p_a) c,  n -> -n - p_i p_a.
    OscAlgebra flipped(const std::function<bool(int, int)>& pred) const;
    // Replace the ladder pair of one mode (operator-valued dressings).
    OscAlgebra with_ops(int i, int a, FockOperator c_new, FockOperator cd_new) const;

private:
    OscAlgebra() = default;
    int midx(int i, int a) const;

    SpacePtr sp_;
    bool deformed_ = true;
    std::vector<FockOperator> c_, cd_;
    std::vector<long> alpha_, beta_;
    FockOperator zero_;  // shared zero operator for absent modes
};

}  // namespace qgl
