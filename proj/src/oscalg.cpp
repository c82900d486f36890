// oscalg.cpp — oscillator-algebra presentations over a truncated Fock space.
#include "qgl/oscalg.hpp"

namespace qgl {

// --- ExponentForm ------------------------------------------------------------

ExponentForm::ExponentForm(SpacePtr sp) : sp_(std::move(sp)) {
    if (!sp_) throw error("ExponentForm: null space");
    coeff_.assign(static_cast<size_t>(sp_->nmodes()), 0);
}

ExponentForm& ExponentForm::add(int i, int a, long c) {
    int m = sp_->mode_index(i, a);
    if (m >= 0) coeff_[static_cast<size_t>(m)] += c;
    return *this;
}

ExponentForm& ExponentForm::add_row_range(int i, int b, int cto, long c) {
    for (int j = b; j <= cto; ++j) add(i, j, c);
    return *this;
}

ExponentForm& ExponentForm::add_col_range(int b, int cto, int a, long c) {
    for (int j = b; j <= cto; ++j) add(j, a, c);
    return *this;
}

ExponentForm& ExponentForm::add_weight(Weight dw) {
    w_ = w_ + dw;
    return *this;
}

// --- OscAlgebra ---------------------------------------------------------------

OscAlgebra OscAlgebra::base(SpacePtr sp, bool deformed) {
    if (!sp) throw error("OscAlgebra: null space");
    OscAlgebra al;
    al.sp_ = sp;
    al.deformed_ = deformed;
    al.zero_ = FockOperator::zero(sp);
    int n = sp->nmodes();
    al.c_.reserve(static_cast<size_t>(n));
    al.cd_.reserve(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        const Mode& md = sp->mode(m);
        al.c_.push_back(deformed ? FockOperator::annihilator(sp, md.i, md.a)
                                 : FockOperator::annihilator_linear(sp, md.i, md.a));
        al.cd_.push_back(FockOperator::creator(sp, md.i, md.a));
    }
    al.alpha_.assign(static_cast<size_t>(n), 1);
    al.beta_.assign(static_cast<size_t>(n), 0);
    return al;
}

int OscAlgebra::midx(int i, int a) const { return sp_->mode_index(i, a); }

const FockOperator& OscAlgebra::c(int i, int a) const {
    int m = midx(i, a);
    return m < 0 ? zero_ : c_[static_cast<size_t>(m)];
}

const FockOperator& OscAlgebra::cdag(int i, int a) const {
    int m = midx(i, a);
    return m < 0 ? zero_ : cd_[static_cast<size_t>(m)];
}

FockOperator OscAlgebra::qpow(const ExponentForm& f) const {
    if (f.space() != sp_) throw error("OscAlgebra::qpow: form built on another space");
    RegistryPtr reg = sp_->registry();
    const auto& coeff = f.coeffs();
    return FockOperator::diagonal(sp_, [&, this](int s) {
        long e = 0;
        for (int m = 0; m < sp_->nmodes(); ++m) {
            size_t mm = static_cast<size_t>(m);
            if (coeff[mm] != 0)
                e += coeff[mm] * (alpha_[mm] * sp_->occ(s, m) + beta_[mm]);
        }
        return Scalar::q_weight_power(reg, f.weight() + Weight{e, 0});
    });
}

FockOperator OscAlgebra::qbracket(const ExponentForm& f) const {
    if (f.space() != sp_) throw error("OscAlgebra::qbracket: form built on another space");
    RegistryPtr reg = sp_->registry();
    const auto& coeff = f.coeffs();
    return FockOperator::diagonal(sp_, [&, this](int s) {
        long e = 0;
        for (int m = 0; m < sp_->nmodes(); ++m) {
            size_t mm = static_cast<size_t>(m);
            if (coeff[mm] != 0)
                e += coeff[mm] * (alpha_[mm] * sp_->occ(s, m) + beta_[mm]);
        }
        Weight w = f.weight() + Weight{e, 0};
        if (w.symbolic()) return Scalar::q_bracket_weight(reg, w);
        return Scalar::q_bracket(reg, w.c0);
    });
}

FockOperator OscAlgebra::linear(const ExponentForm& f) const {
    if (f.space() != sp_) throw error("OscAlgebra::linear: form built on another space");
    RegistryPtr reg = sp_->registry();
    const auto& coeff = f.coeffs();
    return FockOperator::diagonal(sp_, [&, this](int s) {
        long e = 0;
        for (int m = 0; m < sp_->nmodes(); ++m) {
            size_t mm = static_cast<size_t>(m);
            if (coeff[mm] != 0)
                e += coeff[mm] * (alpha_[mm] * sp_->occ(s, m) + beta_[mm]);
        }
        return Scalar::weight_poly(reg, f.weight() + Weight{e, 0});
    });
}

OscAlgebra OscAlgebra::rescaled(const std::function<Scalar(int, int)>& cf,
                                const std::function<Scalar(int, int)>& cdf) const {
    OscAlgebra al = *this;
    for (int m = 0; m < sp_->nmodes(); ++m) {
        const Mode& md = sp_->mode(m);
        size_t mm = static_cast<size_t>(m);
        al.c_[mm] = c_[mm].scaled(cf(md.i, md.a));
        al.cd_[mm] = cd_[mm].scaled(cdf(md.i, md.a));
    }
    return al;
}

OscAlgebra OscAlgebra::zeroed(const std::function<bool(int, int)>& pred) const {
    OscAlgebra al = *this;
    for (int m = 0; m < sp_->nmodes(); ++m) {
        const Mode& md = sp_->mode(m);
        if (!pred(md.i, md.a)) continue;
        size_t mm = static_cast<size_t>(m);
        al.c_[mm] = zero_;
        al.cd_[mm] = zero_;
        al.alpha_[mm] = 0;
        al.beta_[mm] = 0;
    }
    return al;
}

OscAlgebra OscAlgebra::flipped(const std::function<bool(int, int)>& pred) const {
    OscAlgebra al = *this;
    for (int m = 0; m < sp_->nmodes(); ++m) {
        const Mode& md = sp_->mode(m);
        if (!pred(md.i, md.a)) continue;
        size_t mm = static_cast<size_t>(m);
        long sgn = (md.parity == 0) ? 1 : -1;  // p_i p_a
        FockOperator oc = c_[mm], ocd = cd_[mm];
        al.c_[mm] = ocd;
        al.cd_[mm] = oc.scaled(-sgn);
        al.alpha_[mm] = -alpha_[mm];
        al.beta_[mm] = -beta_[mm] - sgn;
    }
    return al;
}

OscAlgebra OscAlgebra::with_ops(int i, int a, FockOperator c_new, FockOperator cd_new) const {
    int m = midx(i, a);
    if (m < 0) throw error("OscAlgebra::with_ops: mode absent");
    OscAlgebra al = *this;
    al.c_[static_cast<size_t>(m)] = std::move(c_new);
    al.cd_[static_cast<size_t>(m)] = std::move(cd_new);
    return al;
}

}  // namespace qgl
