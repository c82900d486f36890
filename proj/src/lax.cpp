// lax.cpp — R-matrices, FRT L-operators, their diagonal/spectral
// transformations, and the closed-form L-entry families.
#include "qgl/lax.hpp"

#include "qgl/error.hpp"

namespace qgl {

std::vector<AuxTerm> r_at(const RMatrix& r, const Scalar& z) {
    std::vector<AuxTerm> out = r.part0;
    const Scalar f = (r.kind == RKind::Trig) ? -z : z;
    for (const AuxTerm& t : r.part1) out.push_back({t.a, t.b, t.c, t.d, t.coeff * f});
    return out;
}

RMatrix ps_r(RegistryPtr reg, const GradingProfile& g) {
    const int K = g.K();
    const Scalar s = Scalar::s_poly(reg);
    RMatrix r{g, RKind::Trig, {}, {}};
    for (int i = 1; i <= K; ++i) {
        r.part0.push_back({i, i, i, i, Scalar::q_power(reg, g.sign(i))});
        r.part1.push_back({i, i, i, i, Scalar::q_power(reg, -g.sign(i))});
    }
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            if (i == j) continue;
            r.part0.push_back({i, i, j, j, Scalar::one(reg)});
            r.part1.push_back({i, i, j, j, Scalar::one(reg)});
            if (i < j) r.part0.push_back({i, j, j, i, s.scaled(g.sign(j))});
            if (i > j) r.part1.push_back({i, j, j, i, s.scaled(-g.sign(j))});
        }
    return r;
}

RMatrix rational_r(RegistryPtr reg, const GradingProfile& g) {
    const int K = g.K();
    RMatrix r{g, RKind::Rational, {}, {}};
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            r.part0.push_back({j, i, i, j, Scalar::integer(reg, g.sign(i))});
            r.part1.push_back({i, i, j, j, Scalar::one(reg)});
        }
    return r;
}

LaxOperator::LaxOperator(GradingProfile g, SpacePtr sp, RKind k)
    : grading(std::move(g)), space(std::move(sp)), kind(k) {
    const int n = grading.K() + 1;
    L.assign(n, std::vector<FockOperator>(n, FockOperator::zero(space)));
    Lbar = L;
}

FockOperator lax_entry(const LaxOperator& lax, int i, int j, const Scalar& spectral_coeff) {
    const Scalar f = (lax.kind == RKind::Trig) ? -spectral_coeff : spectral_coeff;
    return lax.L[i][j] + lax.Lbar[i][j].scaled(f);
}

LaxOperator frt_from_family(const GeneratorFamily& fam) {
    const GradingProfile& g = fam.grading;
    const int K = g.K();
    const Scalar s = Scalar::s_poly(fam.osc.registry());
    LaxOperator lax(g, fam.space(), RKind::Trig);
    for (int i = 1; i <= K; ++i) {
        lax.L[i][i] = fam.qcart[i];
        lax.Lbar[i][i] = fam.qcart_bar[i];
        for (int j = 1; j <= K; ++j) {
            if (i > j) lax.L[i][j] = (fam.e[j][i] * fam.qcart[j]).scaled(g.sign(i)).scaled(s);
            if (i < j)
                lax.Lbar[i][j] = (fam.qcart_inv[i] * fam.e[j][i]).scaled(-g.sign(i)).scaled(s);
        }
    }
    return lax;
}

LaxOperator transform_diagonal(LaxOperator lax, const std::vector<Scalar>& hl,
                               const std::vector<Scalar>& hr) {
    const int K = lax.K();
    if (static_cast<int>(hl.size()) != K + 1 || static_cast<int>(hr.size()) != K + 1)
        throw error("transform_diagonal: factors must have K+1 entries (index 0 unused)");
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            const Scalar f = hl[i] * hr[j];
            lax.L[i][j] = lax.L[i][j].scaled(f);
            lax.Lbar[i][j] = lax.Lbar[i][j].scaled(f);
        }
    return lax;
}

LaxOperator rescale_spectral(LaxOperator lax, const Scalar& c_inv) {
    if (lax.kind != RKind::Trig) throw error("rescale_spectral: trigonometric kind only");
    const int K = lax.K();
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) lax.Lbar[i][j] = lax.Lbar[i][j].scaled(c_inv);
    return lax;
}

// --- contracted families -------------------------------------------------------

namespace {

// q^{±p_i(lambda_i + n_{[1,i-1],i} - n_{i,[i+1,K]})}, the group-like diagonal
// shared by the tail entries.
FockOperator tail_diag(const OscAlgebra& osc, const GradingProfile& g, int i, Weight li,
                       long scale) {
    auto f = osc.form()
                 .add_weight(scale * li)
                 .add_col_range(1, i - 1, i, scale)
                 .add_row_range(i, i + 1, g.K(), -scale);
    return osc.qpow(f);
}

}  // namespace

std::vector<LaxEntry> contracted_L_entries_tail(const OscAlgebra& osc, const GradingProfile& g,
                                                int a, const std::vector<Weight>& lambda) {
    const int K = g.K();
    if (a < 1 || a >= K) throw error("contracted_L_entries_tail: split out of range");
    if (static_cast<int>(lambda.size()) != K + 1)
        throw error("contracted_L_entries_tail: lambda must have K+1 entries");
    const RegistryPtr reg = osc.registry();
    const Scalar s = Scalar::s_poly(reg);
    const FockOperator zero = FockOperator::zero(osc.space());
    std::vector<LaxEntry> out;

    for (int i = 1; i <= K; ++i) {
        const long pi = g.sign(i);
        if (i <= a) {
            out.push_back({i, i, false, osc.qpow(osc.form().add_row_range(i, a + 1, K, -pi))});
            out.push_back({i, i, true, zero});
        } else {
            out.push_back({i, i, false, tail_diag(osc, g, i, lambda[i], pi)});
            out.push_back({i, i, true, tail_diag(osc, g, i, lambda[i], -pi)});
        }
    }

    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i), pj = g.sign(i + 1);
        FockOperator e = zero;
        if (i + 1 <= a) {
            for (int k = a + 1; k <= K; ++k) {
                auto f = osc.form()
                             .add_weight(Weight{pi + pj, 0})
                             .add_row_range(i, k, K, -pi)
                             .add_row_range(i, a + 1, K, -pi)
                             .add_row_range(i + 1, k, K, pj);
                e = e + (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(f))
                            .scaled(-pi * pj * g.sign(k))
                            .scaled(s);
            }
        } else if (i == a) {
            auto f1 = osc.form()
                          .add_weight(-(pj * lambda[i + 1]) + Weight{pi, 0})
                          .add_row_range(i, a + 1, K, -2 * pi)
                          .add_row_range(i + 1, i + 2, K, pj);
            e = (osc.c(i, i + 1) * osc.qpow(f1)).scaled(pi * pj);
            for (int k = i + 2; k <= K; ++k) {
                auto f2 = osc.form()
                              .add_weight(-(pj * lambda[i + 1]) + Weight{pi + pj, 0})
                              .add_row_range(i, k, K, -pi)
                              .add_row_range(i, a + 1, K, -pi)
                              .add_row_range(i + 1, k, K, pj);
                e = e + (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(f2))
                            .scaled(-pi * pj * g.sign(k))
                            .scaled(s);
            }
        } else {
            FockOperator big = zero;
            for (int k = 1; k <= i - 1; ++k) {
                auto f = osc.form()
                             .add_weight(-(pi * lambda[i]) + pj * lambda[i + 1])
                             .add_col_range(k + 1, i - 1, i, -pi)
                             .add_col_range(k + 1, i, i + 1, pj)
                             .add_row_range(i, i + 1, K, pi)
                             .add_row_range(i + 1, i + 2, K, -pj);
                big = big + osc.cdag(k, i) * osc.c(k, i + 1) * osc.qpow(f);
            }
            auto br = osc.form()
                          .add_weight(pi * lambda[i] - pj * lambda[i + 1] + Weight{pi, 0})
                          .add_row_range(i, i + 1, K, -pi)
                          .add_row_range(i + 1, i + 2, K, pj);
            big = big + (osc.c(i, i + 1) * osc.qbracket(br)).scaled(pi);
            for (int k = i + 2; k <= K; ++k) {
                auto f = osc.form()
                             .add_weight(pi * lambda[i] - pj * lambda[i + 1] + Weight{pi + pj, 0})
                             .add_row_range(i, k, K, -pi)
                             .add_row_range(i + 1, k, K, pj);
                big = big -
                      (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(f)).scaled(pi * g.sign(k));
            }
            e = (big * tail_diag(osc, g, i, lambda[i], pi)).scaled(pj).scaled(s);
        }
        out.push_back({i + 1, i, false, e});
    }

    for (int u = 1; u <= a; ++u)
        for (int v = u + 1; v <= a; ++v) out.push_back({u, v, true, zero});

    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i), pj = g.sign(i + 1);
        if (i == a) {
            auto f = osc.form()
                         .add_weight(Weight{pi, 0})
                         .add_row_range(i, a + 1, K, pi)
                         .add_col_range(1, i - 1, i + 1, -pj);
            out.push_back(
                {i, i + 1, true, (osc.cdag(i, i + 1) * osc.qpow(f)).scaled(-pi).scaled(s)});
        } else if (i > a) {
            auto f1 = osc.form().add_row_range(i, i + 1, K, pi).add_col_range(1, i - 1, i + 1, -pj);
            FockOperator t = osc.cdag(i, i + 1) * osc.qpow(f1);
            for (int k = 1; k <= i - 1; ++k) {
                auto f2 = osc.form()
                              .add_col_range(k, i - 1, i, -pi)
                              .add_row_range(i, i + 1, K, pi)
                              .add_col_range(1, k - 1, i + 1, -pj);
                t = t + osc.cdag(k, i + 1) * osc.c(k, i) * osc.qpow(f2);
            }
            const FockOperator tf =
                osc.qpow(osc.form().add_weight(Weight{pi, 0} - pi * lambda[i]));
            out.push_back({i, i + 1, true, (t * tf).scaled(-pi).scaled(s)});
        }
    }

    const long p1 = g.sign(1);
    for (int i = a + 1; i <= K; ++i) {
        if (i == 1) continue;
        auto f = osc.form().add_weight(Weight{p1, 0}).add_row_range(1, i, K, p1);
        out.push_back({1, i, true, (osc.cdag(1, i) * osc.qpow(f)).scaled(-p1).scaled(s)});
    }
    return out;
}

std::vector<LaxEntry> contracted_L_entries_crossing(const OscAlgebra& osc,
                                                    const GradingProfile& g, int a, Weight mu) {
    const int K = g.K();
    if (a < 1 || a >= K) throw error("contracted_L_entries_crossing: split out of range");
    const RegistryPtr reg = osc.registry();
    const Scalar s = Scalar::s_poly(reg);
    const FockOperator zero = FockOperator::zero(osc.space());
    std::vector<LaxEntry> out;

    for (int i = 1; i <= K; ++i) {
        const long pi = g.sign(i);
        if (i <= a) {
            out.push_back({i, i, false, osc.qpow(osc.form().add_row_range(i, a + 1, K, -pi))});
            out.push_back({i, i, true, zero});
        } else {
            out.push_back(
                {i, i, false, osc.qpow(osc.form().add_weight(mu).add_col_range(1, a, i, pi))});
            out.push_back(
                {i, i, true, osc.qpow(osc.form().add_weight(-mu).add_col_range(1, a, i, -pi))});
        }
    }

    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i), pj = g.sign(i + 1);
        FockOperator e = zero;
        if (i + 1 <= a) {
            for (int k = a + 1; k <= K; ++k) {
                auto f = osc.form()
                             .add_weight(Weight{pi + pj, 0})
                             .add_row_range(i, k, K, -pi)
                             .add_row_range(i, a + 1, K, -pi)
                             .add_row_range(i + 1, k, K, pj);
                e = e + (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(f))
                            .scaled(-pi * pj * g.sign(k))
                            .scaled(s);
            }
        } else if (i == a) {
            auto f = osc.form().add_weight(-mu + Weight{pi, 0}).add_row_range(i, a + 1, K, -2 * pi);
            e = (osc.c(i, i + 1) * osc.qpow(f)).scaled(pi * pj);
        } else {
            for (int k = 1; k <= a; ++k) {
                auto f = osc.form()
                             .add_weight(mu)
                             .add_col_range(1, k, i, pi)
                             .add_col_range(k + 1, a, i + 1, pj);
                e = e + (osc.cdag(k, i) * osc.c(k, i + 1) * osc.qpow(f)).scaled(pj).scaled(s);
            }
        }
        out.push_back({i + 1, i, false, e});
    }

    for (int u = 1; u <= a; ++u)
        for (int v = u + 1; v <= a; ++v) out.push_back({u, v, true, zero});

    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i), pj = g.sign(i + 1);
        if (i == a) {
            auto f = osc.form()
                         .add_weight(Weight{pi, 0})
                         .add_row_range(i, a + 1, K, pi)
                         .add_col_range(1, i - 1, i + 1, -pj);
            out.push_back(
                {i, i + 1, true, (osc.cdag(i, i + 1) * osc.qpow(f)).scaled(-pi).scaled(s)});
        } else if (i > a) {
            FockOperator t = zero;
            for (int k = 1; k <= a; ++k) {
                auto f = osc.form()
                             .add_weight(-mu + Weight{pi, 0})
                             .add_col_range(k, a, i, -pi)
                             .add_col_range(1, k - 1, i + 1, -pj);
                t = t + osc.cdag(k, i + 1) * osc.c(k, i) * osc.qpow(f);
            }
            out.push_back({i, i + 1, true, t.scaled(-pi).scaled(s)});
        }
    }

    const long p1 = g.sign(1);
    for (int i = a + 1; i <= K; ++i) {
        if (i == 1) continue;
        auto f = osc.form().add_weight(Weight{p1, 0}).add_row_range(1, i, K, p1);
        out.push_back({1, i, true, (osc.cdag(1, i) * osc.qpow(f)).scaled(-p1).scaled(s)});
    }
    return out;
}

// --- single-index family -------------------------------------------------------

LaxOperator single_index_L(SingleIndexLKind kind, const OscAlgebra& osc, const GradingProfile& g,
                           int i0, Weight w) {
    const int K = g.K();
    if (i0 < 1 || i0 > K) throw error("single_index_L: index out of range");
    const RegistryPtr reg = osc.registry();
    const Scalar s = Scalar::s_poly(reg);
    const long pi = g.sign(i0);
    LaxOperator lax(g, osc.space(), RKind::Trig);

    // Occupation shorthand: all modes live on row i0; ranges skip (i0,i0).
    auto row = [&](int b, int cto, long c) { return osc.form().add_row_range(i0, b, cto, c); };

    if (kind == SingleIndexLKind::Generic) {
        lax.L[i0][i0] = osc.qpow(row(1, K, -pi).add_weight(w));
        lax.Lbar[i0][i0] = osc.qpow(row(1, K, pi).add_weight(-w));
        const FockOperator bracket = osc.qbracket(row(1, K, -pi).add_weight(w));
        for (int b = 1; b <= K; ++b) {
            if (b == i0) continue;
            const long pb = g.sign(b);
            lax.L[b][b] = osc.qpow(osc.form().add(i0, b, pb));
            lax.Lbar[b][b] = osc.qpow(osc.form().add(i0, b, -pb));
            if (b > i0)
                lax.L[b][i0] = (osc.c(i0, b) * osc.qpow(row(i0 + 1, b - 1, pi).add_weight(w)))
                                   .scaled(pb);
            else
                lax.Lbar[b][i0] =
                    (osc.c(i0, b) *
                     osc.qpow(row(1, b - 1, pi).add_row_range(i0, i0 + 1, K, pi).add_weight(-w)))
                        .scaled(pb);
            if (b < i0)
                lax.L[i0][b] =
                    (osc.cdag(i0, b) * bracket *
                     osc.qpow(row(1, b - 1, -pi).add_row_range(i0, i0 + 1, K, -pi).add_weight(w)))
                        .scaled(-1)
                        .scaled(s * s);
            else
                lax.Lbar[i0][b] =
                    (osc.cdag(i0, b) * bracket * osc.qpow(row(i0 + 1, b - 1, -pi).add_weight(-w)))
                        .scaled(-1)
                        .scaled(s * s);
            for (int c = 1; c <= K; ++c) {
                if (c == i0 || c == b) continue;
                const bool same_side = (b < i0) == (c < i0);
                if (c < b && same_side)
                    lax.L[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) * osc.qpow(row(c, b - 1, pi)))
                                      .scaled(pb)
                                      .scaled(s);
                if (c < i0 && i0 < b)
                    lax.L[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) *
                                   osc.qpow(row(1, c - 1, -pi)
                                                .add_row_range(i0, b, K, -pi)
                                                .add_weight(2 * w + Weight{pi, 0})))
                                      .scaled(-pb)
                                      .scaled(s);
                if (b < c && same_side)
                    lax.Lbar[b][c] =
                        (osc.cdag(i0, c) * osc.c(i0, b) *
                         osc.qpow(row(b, c - 1, -pi).add_weight(Weight{pi, 0})))
                            .scaled(-pb)
                            .scaled(s);
                if (b < i0 && i0 < c)
                    lax.Lbar[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) *
                                      osc.qpow(row(1, b - 1, pi)
                                                   .add_row_range(i0, c, K, pi)
                                                   .add_weight(-2 * w)))
                                         .scaled(pb)
                                         .scaled(s);
            }
        }
        return lax;
    }

    if (kind == SingleIndexLKind::SmallWeightLimit) {
        lax.L[i0][i0] = osc.qpow(row(1, K, -pi).add_weight(pi * w));
        lax.Lbar[i0][i0] = osc.qpow(row(1, K, pi).add_weight(-(pi * w)));
        for (int b = 1; b <= K; ++b) {
            if (b == i0) continue;
            const long pb = g.sign(b);
            lax.L[b][b] = osc.qpow(osc.form().add(i0, b, pb));
            if (b > i0)
                lax.L[b][i0] =
                    (osc.c(i0, b) * osc.qpow(row(i0 + 1, b - 1, pi).add_weight(pi * w)))
                        .scaled(pb);
            else
                lax.Lbar[b][i0] =
                    (osc.c(i0, b) * osc.qpow(row(1, b - 1, pi)
                                                 .add_row_range(i0, i0 + 1, K, pi)
                                                 .add_weight(-(pi * w))))
                        .scaled(pb);
            if (b < i0)
                lax.L[i0][b] = (osc.cdag(i0, b) * osc.qpow(row(b, i0 - 1, pi))).scaled(s);
            else
                lax.Lbar[i0][b] =
                    (osc.cdag(i0, b) * osc.qpow(row(1, i0 - 1, pi)
                                                    .add_row_range(i0, b, K, pi)
                                                    .add_weight(-2 * (pi * w))))
                        .scaled(s);
            for (int c = 1; c <= K; ++c) {
                if (c == i0 || c == b) continue;
                const bool same_side = (b < i0) == (c < i0);
                if (c < b && same_side)
                    lax.L[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) * osc.qpow(row(c, b - 1, pi)))
                                      .scaled(pb)
                                      .scaled(s);
                if (b < i0 && i0 < c)
                    lax.Lbar[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) *
                                      osc.qpow(row(1, b - 1, pi)
                                                   .add_row_range(i0, c, K, pi)
                                                   .add_weight(-2 * (pi * w))))
                                         .scaled(pb)
                                         .scaled(s);
            }
        }
        return lax;
    }

    // LargeWeightLimit
    lax.L[i0][i0] = osc.qpow(row(1, K, -pi));
    for (int b = 1; b <= K; ++b) {
        if (b == i0) continue;
        const long pb = g.sign(b);
        lax.L[b][b] = osc.qpow(osc.form().add(i0, b, pb));
        lax.Lbar[b][b] = osc.qpow(osc.form().add(i0, b, -pb));
        if (b > i0)
            lax.L[b][i0] = (osc.c(i0, b) * osc.qpow(row(i0 + 1, b - 1, pi))).scaled(pb);
        else
            lax.Lbar[b][i0] =
                (osc.c(i0, b) * osc.qpow(row(1, b - 1, pi).add_row_range(i0, i0 + 1, K, pi)))
                    .scaled(pb);
        if (b < i0)
            lax.L[i0][b] = (osc.cdag(i0, b) * osc.qpow(row(1, K, -pi)
                                                           .add_row_range(i0, 1, b - 1, -pi)
                                                           .add_row_range(i0, i0 + 1, K, -pi)))
                               .scaled(-1)
                               .scaled(s);
        else
            lax.Lbar[i0][b] =
                (osc.cdag(i0, b) * osc.qpow(row(1, K, -pi).add_row_range(i0, i0 + 1, b - 1, -pi)))
                    .scaled(-1)
                    .scaled(s);
        for (int c = 1; c <= K; ++c) {
            if (c == i0 || c == b) continue;
            const bool same_side = (b < i0) == (c < i0);
            if (c < b && same_side)
                lax.L[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) * osc.qpow(row(c, b - 1, pi)))
                                  .scaled(pb)
                                  .scaled(s);
            if (c < i0 && i0 < b)
                lax.L[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) *
                               osc.qpow(row(1, c - 1, -pi)
                                            .add_row_range(i0, b, K, -pi)
                                            .add_weight(Weight{pi, 0})))
                                  .scaled(-pb)
                                  .scaled(s);
            if (b < c && same_side)
                lax.Lbar[b][c] = (osc.cdag(i0, c) * osc.c(i0, b) *
                                  osc.qpow(row(b, c - 1, -pi).add_weight(Weight{pi, 0})))
                                     .scaled(-pb)
                                     .scaled(s);
            if (b < i0 && i0 < c)
                lax.Lbar[b][c] =
                    (osc.cdag(i0, c) * osc.c(i0, b) *
                     osc.qpow(row(1, b - 1, pi).add_row_range(i0, c, K, pi)))
                        .scaled(pb)
                        .scaled(s);
        }
    }
    return lax;
}

LaxOperator rational_lax(const GeneratorFamily& fam) {
    const GradingProfile& g = fam.grading;
    const int K = g.K();
    LaxOperator lax(g, fam.space(), RKind::Rational);
    for (int i = 1; i <= K; ++i) {
        for (int j = 1; j <= K; ++j) lax.L[i][j] = fam.e[j][i].scaled(g.sign(i));
        if (!fam.contracted || i > fam.iset.a)
            lax.Lbar[i][i] = FockOperator::identity(fam.space());
    }
    return lax;
}

}  // namespace qgl
