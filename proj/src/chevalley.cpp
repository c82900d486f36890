// chevalley.cpp — see chevalley.hpp.
#include "qgl/chevalley.hpp"

namespace qgl {

ChevalleyFamily::ChevalleyFamily(GradingProfile g)
    : grading(std::move(g)),
      iset(0, grading.K()),
      e(grading.K() + 1),
      f(grading.K() + 1),
      k(grading.K() + 1),
      qk(grading.K() + 1),
      qk_bar(grading.K() + 1),
      shift(grading.K() + 1, 0) {}

ChevalleyFamily evaluation_chevalley(const GeneratorFamily& fam, const Scalar& x,
                                     const Scalar& x_inv) {
    const GradingProfile& g = fam.grading;
    const int K = g.K();
    if (K < 2) throw error("evaluation_chevalley: needs K >= 2");
    ChevalleyFamily ch(g);
    ch.iset = fam.iset;
    ch.contracted = fam.contracted;
    for (int i = 1; i <= K; ++i) {
        ch.k[i] = fam.e[i][i];
        ch.qk[i] = fam.qcart[i];
        ch.qk_bar[i] = fam.qcart_bar[i];
    }
    for (int i = 1; i < K; ++i) {
        ch.e[i] = fam.e[i][i + 1];
        ch.f[i] = fam.e[i + 1][i].scaled(g.sign(i));
    }
    ch.e[K] = (fam.qcart_inv[1] * fam.e[K][1] * fam.qcart_inv[K]).scaled(x);
    ch.f[K] = (fam.qcart[K] * fam.e[1][K] * fam.qcart[1]).scaled(x_inv).scaled(g.sign(K));
    return ch;
}

ChevalleyFamily contracted_chevalley(const OscAlgebra& osc, const GradingProfile& g, int a,
                                     Weight mu, const Scalar& x, const Scalar& x_inv) {
    const int K = g.K();
    if (K < 2 || a < 1 || a > K - 1) throw error("contracted_chevalley: split out of range");
    RegistryPtr reg = osc.registry();
    SpacePtr sp = osc.space();

    ChevalleyFamily ch(g);
    ch.iset = SubsetI(a, K);
    ch.contracted = true;

    for (int i = 1; i <= a; ++i) {
        ch.k[i] = osc.linear(osc.form().add_row_range(i, a + 1, K, -1));
        ch.qk[i] = osc.qpow(osc.form().add_row_range(i, a + 1, K, -g.sign(i)));
        ch.qk_bar[i] = FockOperator::zero(sp);
    }
    for (int i = a + 1; i <= K; ++i) {
        ch.k[i] = osc.linear(osc.form().add_weight(g.sign(i) * mu).add_col_range(1, a, i, 1));
        ch.qk[i] = osc.qpow(osc.form().add_weight(mu).add_col_range(1, a, i, g.sign(i)));
        ch.qk_bar[i] = osc.qpow(osc.form().add_weight(-mu).add_col_range(1, a, i, -g.sign(i)));
    }

    for (int i = 1; i + 1 <= a; ++i) {
        FockOperator sum = FockOperator::zero(sp);
        for (int kk = a + 1; kk <= K; ++kk)
            sum = sum + (osc.c(i, kk) * osc.cdag(i + 1, kk) *
                         osc.qpow(osc.form()
                                      .add_weight(Weight{g.sign(i) + g.sign(i + 1), 0})
                                      .add_row_range(i, kk, K, -g.sign(i))
                                      .add_row_range(i + 1, kk, K, g.sign(i + 1))))
                            .scaled(-g.sign(i) * g.sign(kk));
        ch.e[i] = sum;
    }
    {
        const int i = a;
        ch.e[i] = (osc.c(i, i + 1) * osc.qpow(osc.form()
                                                  .add_weight(-mu + Weight{g.sign(i), 0})
                                                  .add_row_range(i, a + 1, K, -g.sign(i))))
                      .scaled(Scalar::s_inverse(reg))
                      .scaled(g.sign(i));
    }
    for (int i = a + 1; i + 1 <= K; ++i) {
        FockOperator sum = FockOperator::zero(sp);
        for (int kk = 1; kk <= a; ++kk)
            sum = sum + osc.cdag(kk, i) * osc.c(kk, i + 1) *
                            osc.qpow(osc.form()
                                         .add_col_range(kk + 1, a, i, -g.sign(i))
                                         .add_col_range(kk + 1, a, i + 1, g.sign(i + 1)));
        ch.e[i] = sum;
    }
    ch.e[K] = (osc.cdag(1, K) * osc.qpow(osc.form()
                                             .add_weight(-mu + Weight{g.sign(1), 0})
                                             .add(1, K, g.sign(1))
                                             .add_col_range(1, a, K, -g.sign(K))))
                  .scaled(x);

    for (int i = 1; i + 1 <= a; ++i) ch.f[i] = FockOperator::zero(sp);
    {
        const int i = a;
        ch.f[i] = (osc.cdag(i, i + 1) *
                   osc.qpow(osc.form().add_col_range(1, i - 1, i + 1, -g.sign(i + 1))))
                      .scaled(g.sign(i));
    }
    for (int i = a + 1; i + 1 <= K; ++i) {
        FockOperator sum = FockOperator::zero(sp);
        for (int kk = 1; kk <= a; ++kk)
            sum = sum + osc.cdag(kk, i + 1) * osc.c(kk, i) *
                            osc.qpow(osc.form()
                                         .add_col_range(1, kk - 1, i, g.sign(i))
                                         .add_col_range(1, kk - 1, i + 1, -g.sign(i + 1)));
        ch.f[i] = sum.scaled(g.sign(i));
    }
    FockOperator nested = ch.e[K - 1];
    for (int j = K - 2; j >= 1; --j)
        nested = FockOperator::graded_commutator(ch.e[j], nested,
                                                 Scalar::q_power(reg, -g.sign(j + 1)));
    ch.f[K] = (ch.qk[K] * nested * ch.qk[1]).scaled(x_inv).scaled(g.sign(K));
    return ch;
}

ChevalleyFamily shifted(ChevalleyFamily ch, const std::vector<long>& c) {
    const int K = ch.K();
    if (static_cast<int>(c.size()) != K + 1) throw error("shifted: need K+1 shift constants");
    for (int i = 1; i <= K; ++i) {
        if (c[i] == 0) continue;
        ch.shift[i] += c[i];
        SpacePtr sp = ch.k[i].space();
        ch.k[i] = ch.k[i] + FockOperator::identity(sp).scaled(
                                Scalar::integer(sp->registry(), ch.grading.sign(i) * c[i]));
        ch.qk[i] = ch.qk[i].scaled(Scalar::q_power(sp->registry(), c[i]));
        if (!ch.qk_bar[i].is_zero())
            ch.qk_bar[i] = ch.qk_bar[i].scaled(Scalar::q_power(sp->registry(), -c[i]));
    }
    return ch;
}

}  // namespace qgl
