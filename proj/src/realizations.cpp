// realizations.cpp — construction of the oscillator generator families: the
// four Verma presentations, the contracted families, the explicit closed-form
// families at the extreme splits, and the single-index family.
#include "qgl/realizations.hpp"

#include <algorithm>
#include <utility>

#include "qgl/error.hpp"

namespace qgl {

GeneratorFamily::GeneratorFamily(GradingProfile g, OscAlgebra o)
    : grading(std::move(g)),
      osc(std::move(o)),
      lambda(grading.K() + 1, Weight{0, 0}),
      iset(0, grading.K()),
      e(grading.K() + 1, std::vector<FockOperator>(grading.K() + 1)),
      qcart(grading.K() + 1),
      qcart_inv(grading.K() + 1),
      qcart_bar(grading.K() + 1) {
    if (osc.space()->registry() == nullptr) throw error("GeneratorFamily: bad algebra");
}

// --- mode sets ---------------------------------------------------------------

SpacePtr full_space(RegistryPtr reg, const GradingProfile& g, int cutoff) {
    return std::make_shared<FockSpace>(
        std::move(reg), FockSpace::selected_modes(g, cutoff, [](int i, int a) { return i < a; }),
        cutoff);
}

SpacePtr tail_space(RegistryPtr reg, const GradingProfile& g, int a, int cutoff) {
    return std::make_shared<FockSpace>(
        std::move(reg),
        FockSpace::selected_modes(g, cutoff, [a](int i, int j) { return i < j && j > a; }),
        cutoff);
}

SpacePtr band_space(RegistryPtr reg, const GradingProfile& g, int a, int cutoff) {
    return std::make_shared<FockSpace>(
        std::move(reg),
        FockSpace::selected_modes(g, cutoff, [a](int i, int j) { return i < j && i <= a; }),
        cutoff);
}

SpacePtr crossing_space(RegistryPtr reg, const GradingProfile& g, int a, int cutoff) {
    return std::make_shared<FockSpace>(
        std::move(reg),
        FockSpace::selected_modes(g, cutoff, [a](int i, int j) { return i <= a && j > a; }),
        cutoff);
}

SpacePtr single_index_space(RegistryPtr reg, const GradingProfile& g, int i0, int cutoff) {
    if (i0 < 1 || i0 > g.K()) throw error("single_index_space: index out of range");
    std::vector<std::pair<int, int>> pairs;
    for (int b = 1; b <= g.K(); ++b)
        if (b != i0) pairs.emplace_back(i0, b);
    return std::make_shared<FockSpace>(std::move(reg), FockSpace::listed_modes(g, cutoff, pairs),
                                       cutoff);
}

// --- shared pieces -----------------------------------------------------------

namespace {

void check_lambda(const GradingProfile& g, const std::vector<Weight>& lambda, const char* who) {
    if (static_cast<int>(lambda.size()) != g.K() + 1)
        throw error(std::string(who) + ": lambda must have K+1 entries (index 0 unused)");
}

// Diagonal generator common to all four Verma presentations:
//   e_ii = lambda_i + n_{[1,i-1],i} - n_{i,[i+1,K]}.
ExponentForm verma_diag_form(const OscAlgebra& osc, const GradingProfile& g, int i, Weight li,
                             long scale) {
    return osc.form()
        .add_weight(scale * li)
        .add_col_range(1, i - 1, i, scale)
        .add_row_range(i, i + 1, g.K(), -scale);
}

void fill_verma_diag(GeneratorFamily& f) {
    const GradingProfile& g = f.grading;
    for (int i = 1; i <= g.K(); ++i) {
        const long p = g.sign(i);
        f.e[i][i] = f.osc.linear(verma_diag_form(f.osc, g, i, f.lambda[i], 1));
        f.qcart[i] = f.osc.qpow(verma_diag_form(f.osc, g, i, f.lambda[i], p));
        f.qcart_inv[i] = f.osc.qpow(verma_diag_form(f.osc, g, i, f.lambda[i], -p));
        f.qcart_bar[i] = f.qcart_inv[i];
    }
}

// Adjacent raising generator of the ColumnOne presentation (also serves the
// beyond-split rows of the contracted families, where absent modes drop out).
FockOperator column_one_raising(const OscAlgebra& osc, const GradingProfile& g, int i,
                                const std::vector<Weight>& lam) {
    const int K = g.K();
    const long pi = g.sign(i), pj = g.sign(i + 1);
    FockOperator r = FockOperator::zero(osc.space());
    for (int k = 1; k <= i - 1; ++k) {
        auto f = osc.form()
                     .add_weight(-(pi * lam[i]) + pj * lam[i + 1])
                     .add_col_range(k + 1, i - 1, i, -pi)
                     .add_col_range(k + 1, i, i + 1, pj)
                     .add_row_range(i, i + 1, K, pi)
                     .add_row_range(i + 1, i + 2, K, -pj);
        r = r + osc.cdag(k, i) * osc.c(k, i + 1) * osc.qpow(f);
    }
    {
        auto b = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1] + Weight{pi, 0})
                     .add_row_range(i, i + 1, K, -pi)
                     .add_row_range(i + 1, i + 2, K, pj);
        r = r + (osc.c(i, i + 1) * osc.qbracket(b)).scaled(pi);
    }
    for (int k = i + 2; k <= K; ++k) {
        auto f = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1] + Weight{pi + pj, 0})
                     .add_row_range(i, k, K, -pi)
                     .add_row_range(i + 1, k, K, pj);
        r = r - (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(f)).scaled(pi * g.sign(k));
    }
    return r;
}

// Adjacent lowering generator of the ColumnOne presentation.
FockOperator column_one_lowering(const OscAlgebra& osc, const GradingProfile& g, int i) {
    const long pi = g.sign(i), pj = g.sign(i + 1);
    auto f0 = osc.form().add_col_range(1, i - 1, i, pi).add_col_range(1, i - 1, i + 1, -pj);
    FockOperator l = osc.cdag(i, i + 1) * osc.qpow(f0);
    for (int k = 1; k <= i - 1; ++k) {
        auto f = osc.form().add_col_range(1, k - 1, i, pi).add_col_range(1, k - 1, i + 1, -pj);
        l = l + osc.cdag(k, i + 1) * osc.c(k, i) * osc.qpow(f);
    }
    return l;
}

FockOperator row_one_raising(const OscAlgebra& osc, const GradingProfile& g, int i) {
    const long pi = g.sign(i), pj = g.sign(i + 1);
    auto f0 = osc.form().add_col_range(1, i - 1, i, -pi).add_col_range(1, i - 1, i + 1, pj);
    FockOperator r = osc.c(i, i + 1) * osc.qpow(f0);
    for (int k = 1; k <= i - 1; ++k) {
        auto f = osc.form().add_col_range(1, k - 1, i, -pi).add_col_range(1, k - 1, i + 1, pj);
        r = r + osc.cdag(k, i) * osc.c(k, i + 1) * osc.qpow(f);
    }
    return r;
}

FockOperator row_one_lowering(const OscAlgebra& osc, const GradingProfile& g, int i,
                              const std::vector<Weight>& lam) {
    const int K = g.K();
    const long pi = g.sign(i), pj = g.sign(i + 1);
    FockOperator l = FockOperator::zero(osc.space());
    for (int k = 1; k <= i - 1; ++k) {
        auto f = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1])
                     .add_col_range(k + 1, i - 1, i, pi)
                     .add_col_range(k + 1, i, i + 1, -pj)
                     .add_row_range(i, i + 1, K, -pi)
                     .add_row_range(i + 1, i + 2, K, pj);
        l = l + osc.cdag(k, i + 1) * osc.c(k, i) * osc.qpow(f);
    }
    {
        auto b = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1])
                     .add_row_range(i, i + 1, K, -pi)
                     .add_row_range(i + 1, i + 2, K, pj);
        l = l + (osc.cdag(i, i + 1) * osc.qbracket(b)).scaled(pi);
    }
    for (int k = i + 2; k <= K; ++k) {
        auto f = osc.form()
                     .add_weight(-(pi * lam[i]) + pj * lam[i + 1])
                     .add_row_range(i, k, K, pi)
                     .add_row_range(i + 1, k, K, -pj);
        l = l - (osc.c(i + 1, k) * osc.cdag(i, k) * osc.qpow(f)).scaled(pi * g.sign(k));
    }
    return l;
}

FockOperator column_last_raising(const OscAlgebra& osc, const GradingProfile& g, int i) {
    const int K = g.K();
    const long pi = g.sign(i), pj = g.sign(i + 1);
    auto f0 = osc.form().add_row_range(i, i + 2, K, -pi).add_row_range(i + 1, i + 2, K, pj);
    FockOperator r = osc.c(i, i + 1) * osc.qpow(f0);
    for (int k = i + 2; k <= K; ++k) {
        auto f = osc.form().add_row_range(i, k + 1, K, -pi).add_row_range(i + 1, k + 1, K, pj);
        r = r - (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(f)).scaled(pj * g.sign(k));
    }
    return r;
}

FockOperator column_last_lowering(const OscAlgebra& osc, const GradingProfile& g, int i,
                                  const std::vector<Weight>& lam) {
    const int K = g.K();
    const long pi = g.sign(i), pj = g.sign(i + 1);
    FockOperator l = FockOperator::zero(osc.space());
    for (int k = i + 2; k <= K; ++k) {
        auto f = osc.form()
                     .add_weight(-(pi * lam[i]) + pj * lam[i + 1])
                     .add_row_range(i, i + 1, k - 1, pi)
                     .add_row_range(i + 1, i + 2, k - 1, -pj)
                     .add_col_range(1, i - 1, i, -pi)
                     .add_col_range(1, i, i + 1, pj);
        l = l - (osc.c(i + 1, k) * osc.cdag(i, k) * osc.qpow(f)).scaled(pi * g.sign(k));
    }
    {
        auto b = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1])
                     .add_col_range(1, i - 1, i, pi)
                     .add_col_range(1, i, i + 1, -pj);
        l = l + (osc.cdag(i, i + 1) * osc.qbracket(b)).scaled(pi);
    }
    for (int k = 1; k <= i - 1; ++k) {
        auto f = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1])
                     .add_col_range(1, k, i, pi)
                     .add_col_range(1, k, i + 1, -pj);
        l = l + osc.cdag(k, i + 1) * osc.c(k, i) * osc.qpow(f);
    }
    return l;
}

FockOperator row_last_raising(const OscAlgebra& osc, const GradingProfile& g, int i,
                              const std::vector<Weight>& lam) {
    const int K = g.K();
    const long pi = g.sign(i), pj = g.sign(i + 1);
    FockOperator r = FockOperator::zero(osc.space());
    for (int k = i + 2; k <= K; ++k) {
        auto f = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1])
                     .add_row_range(i, i + 1, k - 1, -pi)
                     .add_row_range(i + 1, i + 2, k - 1, pj)
                     .add_col_range(1, i - 1, i, pi)
                     .add_col_range(1, i, i + 1, -pj);
        r = r - (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(f)).scaled(pi * g.sign(k));
    }
    {
        auto b = osc.form()
                     .add_weight(pi * lam[i] - pj * lam[i + 1] + Weight{pj, 0})
                     .add_col_range(1, i - 1, i, pi)
                     .add_col_range(1, i, i + 1, -pj);
        r = r + (osc.c(i, i + 1) * osc.qbracket(b)).scaled(pi);
    }
    for (int k = 1; k <= i - 1; ++k) {
        auto f = osc.form()
                     .add_weight(-(pi * lam[i]) + pj * lam[i + 1] + Weight{-pi - pj, 0})
                     .add_col_range(1, k, i, -pi)
                     .add_col_range(1, k, i + 1, pj);
        r = r + osc.cdag(k, i) * osc.c(k, i + 1) * osc.qpow(f);
    }
    return r;
}

FockOperator row_last_lowering(const OscAlgebra& osc, const GradingProfile& g, int i) {
    const int K = g.K();
    const long pi = g.sign(i), pj = g.sign(i + 1);
    auto f0 = osc.form().add_row_range(i, i + 2, K, pi).add_row_range(i + 1, i + 2, K, -pj);
    FockOperator l = osc.cdag(i, i + 1) * osc.qpow(f0);
    for (int k = i + 2; k <= K; ++k) {
        auto f = osc.form().add_row_range(i, k + 1, K, pi).add_row_range(i + 1, k + 1, K, -pj);
        l = l - (osc.c(i + 1, k) * osc.cdag(i, k) * osc.qpow(f)).scaled(pj * g.sign(k));
    }
    return l;
}

}  // namespace

// --- Verma presentations -----------------------------------------------------

GeneratorFamily build_verma(const OscAlgebra& osc, const GradingProfile& g, VermaKind kind,
                            std::vector<Weight> lambda) {
    check_lambda(g, lambda, "build_verma");
    GeneratorFamily f(g, osc);
    f.lambda = std::move(lambda);
    fill_verma_diag(f);
    for (int i = 1; i <= g.K() - 1; ++i) {
        switch (kind) {
            case VermaKind::ColumnOne:
                f.e[i][i + 1] = column_one_raising(osc, g, i, f.lambda);
                f.e[i + 1][i] = column_one_lowering(osc, g, i);
                break;
            case VermaKind::RowOne:
                f.e[i][i + 1] = row_one_raising(osc, g, i);
                f.e[i + 1][i] = row_one_lowering(osc, g, i, f.lambda);
                break;
            case VermaKind::ColumnLast:
                f.e[i][i + 1] = column_last_raising(osc, g, i);
                f.e[i + 1][i] = column_last_lowering(osc, g, i, f.lambda);
                break;
            case VermaKind::RowLast:
                f.e[i][i + 1] = row_last_raising(osc, g, i, f.lambda);
                f.e[i + 1][i] = row_last_lowering(osc, g, i);
                break;
        }
    }
    complete_family(f);
    return f;
}

FockOperator verma_corner(const OscAlgebra& osc, const GradingProfile& g, VermaKind kind,
                          int idx) {
    const int K = g.K();
    const long p1 = g.sign(1), pK = g.sign(K);
    switch (kind) {
        case VermaKind::ColumnOne: {
            if (idx < 2 || idx > K) throw error("verma_corner: index out of range");
            return osc.cdag(1, idx) * osc.qpow(osc.form().add_row_range(1, 2, idx - 1, -p1));
        }
        case VermaKind::RowOne: {
            if (idx < 2 || idx > K) throw error("verma_corner: index out of range");
            return osc.c(1, idx) * osc.qpow(osc.form().add_row_range(1, 2, idx - 1, p1));
        }
        case VermaKind::ColumnLast: {
            if (idx < 1 || idx > K - 1) throw error("verma_corner: index out of range");
            auto f = osc.form()
                         .add_weight(Weight{-g.sign_sum(idx + 1, K - 1), 0})
                         .add_col_range(idx + 1, K - 1, K, -pK);
            return osc.c(idx, K) * osc.qpow(f);
        }
        case VermaKind::RowLast: {
            if (idx < 1 || idx > K - 1) throw error("verma_corner: index out of range");
            auto f = osc.form()
                         .add_weight(Weight{g.sign_sum(idx + 1, K - 1), 0})
                         .add_col_range(idx + 1, K - 1, K, pK);
            return osc.cdag(idx, K) * osc.qpow(f);
        }
    }
    throw error("verma_corner: bad kind");
}

std::vector<Weight> reduced_lambda(const GradingProfile& g, VermaKind kind, int a, Weight mu,
                                   std::vector<Weight> lambda) {
    check_lambda(g, lambda, "reduced_lambda");
    if (a < 1 || a > g.K() - 1) throw error("reduced_lambda: split out of range");
    const bool beyond = (kind == VermaKind::ColumnOne || kind == VermaKind::RowOne);
    const int lo = beyond ? a + 1 : 1;
    const int hi = beyond ? g.K() : a;
    for (int i = lo; i <= hi; ++i) lambda[i] = g.sign(i) * mu;
    return lambda;
}

// --- contracted families -----------------------------------------------------

GeneratorFamily build_contracted(const OscAlgebra& osc, const GradingProfile& g, int a,
                                 std::vector<Weight> lambda) {
    check_lambda(g, lambda, "build_contracted");
    const int K = g.K();
    if (a < 1 || a > K - 1) throw error("build_contracted: split out of range");
    GeneratorFamily f(g, osc);
    f.lambda = std::move(lambda);
    f.iset = SubsetI(a, K);
    f.contracted = true;
    const SpacePtr sp = osc.space();

    for (int i = 1; i <= K; ++i) {
        const long pi = g.sign(i);
        if (i <= a) {
            auto d = osc.form().add_row_range(i, a + 1, K, -1);
            f.e[i][i] = osc.linear(d);
            f.qcart[i] = osc.qpow(osc.form().add_row_range(i, a + 1, K, -pi));
            f.qcart_inv[i] = osc.qpow(osc.form().add_row_range(i, a + 1, K, pi));
            f.qcart_bar[i] = FockOperator::zero(sp);
        } else {
            f.e[i][i] = osc.linear(verma_diag_form(osc, g, i, f.lambda[i], 1));
            f.qcart[i] = osc.qpow(verma_diag_form(osc, g, i, f.lambda[i], pi));
            f.qcart_inv[i] = osc.qpow(verma_diag_form(osc, g, i, f.lambda[i], -pi));
            f.qcart_bar[i] = f.qcart_inv[i];
        }
    }

    const Scalar sinv = Scalar::s_inverse(osc.registry());
    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i), pj = g.sign(i + 1);
        if (i + 1 <= a) {
            FockOperator r = FockOperator::zero(sp);
            for (int k = a + 1; k <= K; ++k) {
                auto ff = osc.form()
                              .add_weight(Weight{pi + pj, 0})
                              .add_row_range(i, k, K, -pi)
                              .add_row_range(i + 1, k, K, pj);
                r = r - (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(ff)).scaled(pi * g.sign(k));
            }
            f.e[i][i + 1] = r;
            f.e[i + 1][i] = FockOperator::zero(sp);
        } else if (i == a) {
            auto ff = osc.form()
                          .add_weight(-(pj * f.lambda[i + 1]) + Weight{pi, 0})
                          .add_row_range(i, i + 1, K, -pi)
                          .add_row_range(i + 1, i + 2, K, pj);
            FockOperator r = (osc.c(i, i + 1) * osc.qpow(ff)).scaled(sinv).scaled(pi);
            for (int k = i + 2; k <= K; ++k) {
                auto fk = osc.form()
                              .add_weight(-(pj * f.lambda[i + 1]) + Weight{pi + pj, 0})
                              .add_row_range(i, k, K, -pi)
                              .add_row_range(i + 1, k, K, pj);
                r = r - (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(fk)).scaled(pi * g.sign(k));
            }
            f.e[i][i + 1] = r;
            f.e[i + 1][i] =
                osc.cdag(i, i + 1) * osc.qpow(osc.form().add_col_range(1, i - 1, i + 1, -pj));
        } else {
            f.e[i][i + 1] = column_one_raising(osc, g, i, f.lambda);
            f.e[i + 1][i] = column_one_lowering(osc, g, i);
        }
    }

    // First-column entries of the beyond-split rows, used by the completion.
    const long p1 = g.sign(1);
    for (int i = std::max(a + 1, 2); i <= K; ++i)
        f.e[i][1] = osc.cdag(1, i) * osc.qpow(osc.form().add_row_range(1, a + 1, i - 1, -p1));

    complete_family(f);
    return f;
}

GeneratorFamily build_contracted_mu(const OscAlgebra& osc, const GradingProfile& g, int a,
                                    Weight mu) {
    const int K = g.K();
    if (a < 1 || a > K - 1) throw error("build_contracted_mu: split out of range");
    GeneratorFamily f(g, osc);
    for (int i = a + 1; i <= K; ++i) f.lambda[i] = g.sign(i) * mu;
    f.iset = SubsetI(a, K);
    f.contracted = true;
    const SpacePtr sp = osc.space();

    for (int i = 1; i <= K; ++i) {
        const long pi = g.sign(i);
        if (i <= a) {
            f.e[i][i] = osc.linear(osc.form().add_row_range(i, a + 1, K, -1));
            f.qcart[i] = osc.qpow(osc.form().add_row_range(i, a + 1, K, -pi));
            f.qcart_inv[i] = osc.qpow(osc.form().add_row_range(i, a + 1, K, pi));
            f.qcart_bar[i] = FockOperator::zero(sp);
        } else {
            f.e[i][i] = osc.linear(osc.form().add_weight(pi * mu).add_col_range(1, a, i, 1));
            f.qcart[i] = osc.qpow(osc.form().add_weight(mu).add_col_range(1, a, i, pi));
            f.qcart_inv[i] = osc.qpow(osc.form().add_weight(-mu).add_col_range(1, a, i, -pi));
            f.qcart_bar[i] = f.qcart_inv[i];
        }
    }

    const Scalar sinv = Scalar::s_inverse(osc.registry());
    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i), pj = g.sign(i + 1);
        if (i + 1 <= a) {
            FockOperator r = FockOperator::zero(sp);
            for (int k = a + 1; k <= K; ++k) {
                auto ff = osc.form()
                              .add_weight(Weight{pi + pj, 0})
                              .add_row_range(i, k, K, -pi)
                              .add_row_range(i + 1, k, K, pj);
                r = r - (osc.c(i, k) * osc.cdag(i + 1, k) * osc.qpow(ff)).scaled(pi * g.sign(k));
            }
            f.e[i][i + 1] = r;
            f.e[i + 1][i] = FockOperator::zero(sp);
        } else if (i == a) {
            auto ff = osc.form()
                          .add_weight(-mu + Weight{pi, 0})
                          .add_row_range(i, a + 1, K, -pi);
            f.e[i][i + 1] = (osc.c(i, i + 1) * osc.qpow(ff)).scaled(sinv).scaled(pi);
            f.e[i + 1][i] =
                osc.cdag(i, i + 1) * osc.qpow(osc.form().add_col_range(1, i - 1, i + 1, -pj));
        } else {
            FockOperator r = FockOperator::zero(sp);
            FockOperator l = FockOperator::zero(sp);
            for (int k = 1; k <= a; ++k) {
                auto fr = osc.form()
                              .add_col_range(k + 1, a, i, -pi)
                              .add_col_range(k + 1, a, i + 1, pj);
                r = r + osc.cdag(k, i) * osc.c(k, i + 1) * osc.qpow(fr);
                auto fl = osc.form()
                              .add_col_range(1, k - 1, i, pi)
                              .add_col_range(1, k - 1, i + 1, -pj);
                l = l + osc.cdag(k, i + 1) * osc.c(k, i) * osc.qpow(fl);
            }
            f.e[i][i + 1] = r;
            f.e[i + 1][i] = l;
        }
    }

    const long p1 = g.sign(1);
    for (int i = std::max(a + 1, 2); i <= K; ++i)
        f.e[i][1] = osc.cdag(1, i) * osc.qpow(osc.form().add_row_range(1, a + 1, i - 1, -p1));

    complete_family(f);
    return f;
}

// --- explicit closed-form families -------------------------------------------

GeneratorFamily closed_reduced_split_one(const OscAlgebra& osc, const GradingProfile& g,
                                         Weight lambda1, Weight mu) {
    const int K = g.K();
    GeneratorFamily f(g, osc);
    f.lambda[1] = lambda1;
    for (int i = 2; i <= K; ++i) f.lambda[i] = g.sign(i) * mu;
    const long p1 = g.sign(1);

    f.e[1][1] = osc.linear(osc.form().add_weight(lambda1).add_row_range(1, 2, K, -1));
    f.qcart[1] = osc.qpow(osc.form().add_weight(p1 * lambda1).add_row_range(1, 2, K, -p1));
    f.qcart_inv[1] = osc.qpow(osc.form().add_weight(-(p1 * lambda1)).add_row_range(1, 2, K, p1));
    f.qcart_bar[1] = f.qcart_inv[1];
    for (int i = 2; i <= K; ++i) {
        const long pi = g.sign(i);
        f.e[i][i] = osc.linear(osc.form().add_weight(pi * mu).add(1, i, 1));
        f.qcart[i] = osc.qpow(osc.form().add_weight(mu).add(1, i, pi));
        f.qcart_inv[i] = osc.qpow(osc.form().add_weight(-mu).add(1, i, -pi));
        f.qcart_bar[i] = f.qcart_inv[i];
    }

    for (int j = 2; j <= K; ++j) {
        auto b = osc.form()
                     .add_weight(p1 * lambda1 - mu + Weight{p1, 0})
                     .add_row_range(1, 2, K, -p1);
        auto ph = osc.form().add_row_range(1, 2, j - 1, p1);
        f.e[1][j] = (osc.c(1, j) * osc.qbracket(b) * osc.qpow(ph)).scaled(p1);
        f.e[j][1] = osc.cdag(1, j) * osc.qpow(osc.form().add_row_range(1, 2, j - 1, -p1));
    }
    for (int i = 2; i <= K; ++i)
        for (int j = 2; j <= K; ++j) {
            if (i == j) continue;
            auto ph = (i < j) ? osc.form().add_row_range(1, i + 1, j - 1, p1)
                              : osc.form().add_row_range(1, j + 1, i - 1, -p1);
            f.e[i][j] = osc.cdag(1, i) * osc.c(1, j) * osc.qpow(ph);
        }
    return f;
}

GeneratorFamily closed_contracted_split_one(const OscAlgebra& osc, const GradingProfile& g,
                                            Weight mu) {
    const int K = g.K();
    GeneratorFamily f(g, osc);
    for (int i = 2; i <= K; ++i) f.lambda[i] = g.sign(i) * mu;
    f.iset = SubsetI(1, K);
    f.contracted = true;
    const long p1 = g.sign(1);

    f.e[1][1] = osc.linear(osc.form().add_row_range(1, 2, K, -1));
    f.qcart[1] = osc.qpow(osc.form().add_row_range(1, 2, K, -p1));
    f.qcart_inv[1] = osc.qpow(osc.form().add_row_range(1, 2, K, p1));
    f.qcart_bar[1] = FockOperator::zero(osc.space());
    for (int i = 2; i <= K; ++i) {
        const long pi = g.sign(i);
        f.e[i][i] = osc.linear(osc.form().add_weight(pi * mu).add(1, i, 1));
        f.qcart[i] = osc.qpow(osc.form().add_weight(mu).add(1, i, pi));
        f.qcart_inv[i] = osc.qpow(osc.form().add_weight(-mu).add(1, i, -pi));
        f.qcart_bar[i] = f.qcart_inv[i];
    }

    const Scalar sinv = Scalar::s_inverse(osc.registry());
    for (int j = 2; j <= K; ++j) {
        auto ph = osc.form().add_weight(-mu + Weight{p1, 0}).add_row_range(1, j, K, -p1);
        f.e[1][j] = (osc.c(1, j) * osc.qpow(ph)).scaled(sinv).scaled(p1);
        f.e[j][1] = osc.cdag(1, j) * osc.qpow(osc.form().add_row_range(1, 2, j - 1, -p1));
    }
    for (int i = 2; i <= K; ++i)
        for (int j = 2; j <= K; ++j) {
            if (i == j) continue;
            auto ph = (i < j) ? osc.form().add_row_range(1, i + 1, j - 1, p1)
                              : osc.form().add_row_range(1, j + 1, i - 1, -p1);
            f.e[i][j] = osc.cdag(1, i) * osc.c(1, j) * osc.qpow(ph);
        }
    return f;
}

GeneratorFamily closed_contracted_split_last(const OscAlgebra& osc, const GradingProfile& g,
                                             Weight mu) {
    const int K = g.K();
    GeneratorFamily f(g, osc);
    const long pK = g.sign(K);
    f.lambda[K] = pK * mu;
    f.iset = SubsetI(K - 1, K);
    f.contracted = true;
    const SpacePtr sp = osc.space();

    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i);
        f.e[i][i] = osc.linear(osc.form().add(i, K, -1));
        f.qcart[i] = osc.qpow(osc.form().add(i, K, -pi));
        f.qcart_inv[i] = osc.qpow(osc.form().add(i, K, pi));
        f.qcart_bar[i] = FockOperator::zero(sp);
    }
    f.e[K][K] = osc.linear(osc.form().add_weight(pK * mu).add_col_range(1, K - 1, K, 1));
    f.qcart[K] = osc.qpow(osc.form().add_weight(mu).add_col_range(1, K - 1, K, pK));
    f.qcart_inv[K] = osc.qpow(osc.form().add_weight(-mu).add_col_range(1, K - 1, K, -pK));
    f.qcart_bar[K] = f.qcart_inv[K];

    const Scalar sinv = Scalar::s_inverse(osc.registry());
    for (int i = 1; i <= K - 1; ++i) {
        const long pi = g.sign(i);
        for (int j = i + 1; j <= K - 1; ++j) {
            const long pj = g.sign(j);
            auto ph = osc.form()
                          .add_weight(Weight{pi + pj, 0})
                          .add(i, K, -pi)
                          .add(j, K, pj)
                          .add_col_range(i + 1, j - 1, K, -pK);
            f.e[i][j] = -(osc.c(i, K) * osc.cdag(j, K) * osc.qpow(ph)).scaled(pi * pK);
            f.e[j][i] = FockOperator::zero(sp);
        }
        auto ft = osc.form()
                      .add_weight(-mu + Weight{pi, 0})
                      .add(i, K, -pi)
                      .add_col_range(i + 1, K - 1, K, -pK);
        f.e[i][K] = (osc.c(i, K) * osc.qpow(ft)).scaled(sinv).scaled(pi);
        f.e[K][i] = osc.cdag(i, K) * osc.qpow(osc.form().add_col_range(1, i - 1, K, -pK));
    }
    return f;
}

// --- single-index family -----------------------------------------------------

GeneratorFamily build_single_index(const OscAlgebra& osc, const GradingProfile& g, int i0,
                                   Weight m) {
    const int K = g.K();
    if (i0 < 1 || i0 > K) throw error("build_single_index: index out of range");
    GeneratorFamily f(g, osc);
    const long pi = g.sign(i0);
    f.lambda[i0] = pi * m;
    const Scalar sinv = Scalar::s_inverse(osc.registry());
    const Scalar spol = Scalar::s_poly(osc.registry());

    // All occupations live on row i0; ranges silently skip the absent (i0,i0).
    f.e[i0][i0] = osc.linear(osc.form().add_weight(pi * m).add_row_range(i0, 1, K, -1));
    f.qcart[i0] = osc.qpow(osc.form().add_weight(m).add_row_range(i0, 1, K, -pi));
    f.qcart_inv[i0] = osc.qpow(osc.form().add_weight(-m).add_row_range(i0, 1, K, pi));
    for (int a = 1; a <= K; ++a) {
        if (a == i0) continue;
        const long pa = g.sign(a);
        f.e[a][a] = osc.linear(osc.form().add(i0, a, 1));
        f.qcart[a] = osc.qpow(osc.form().add(i0, a, pa));
        f.qcart_inv[a] = osc.qpow(osc.form().add(i0, a, -pa));
    }
    for (int a = 1; a <= K; ++a) f.qcart_bar[a] = f.qcart_inv[a];

    // Entries in the row and column of i0.
    for (int a = 1; a <= K; ++a) {
        if (a == i0) continue;
        const long pa = g.sign(a);
        if (a > i0) {
            auto ph = osc.form().add_row_range(i0, i0 + 1, a - 1, pi).add_row_range(i0, 1, K, pi);
            f.e[i0][a] = (osc.c(i0, a) * osc.qpow(ph)).scaled(sinv);
            auto br = osc.form().add_weight(m).add_row_range(i0, 1, K, -pi);
            auto ph2 = osc.form()
                           .add_weight(Weight{-pi, 0})
                           .add_row_range(i0, i0 + 1, a - 1, -pi)
                           .add_row_range(i0, 1, K, -pi);
            f.e[a][i0] =
                (osc.cdag(i0, a) * osc.qbracket(br) * osc.qpow(ph2)).scaled(spol).scaled(pi);
        } else {
            auto ph = osc.form()
                          .add_weight(-m + Weight{-pa, 0})
                          .add_row_range(i0, 1, a - 1, pi)
                          .add_row_range(i0, i0 + 1, K, pi)
                          .add(i0, a, pa);
            f.e[i0][a] = -(osc.c(i0, a) * osc.qpow(ph)).scaled(sinv);
            auto br = osc.form().add_weight(m).add_row_range(i0, 1, K, -pi);
            auto ph2 = osc.form()
                           .add_weight(m)
                           .add_row_range(i0, 1, a - 1, -pi)
                           .add_row_range(i0, i0 + 1, K, -pi)
                           .add(i0, a, -pa);
            f.e[a][i0] =
                -(osc.cdag(i0, a) * osc.qbracket(br) * osc.qpow(ph2)).scaled(spol).scaled(pi);
        }
    }

    // Entries with both indices away from i0, written through the pair of
    // ladder modes (i0,b), (i0,a).
    for (int b = 1; b <= K; ++b) {
        if (b == i0) continue;
        const long pb = g.sign(b);
        for (int a = 1; a <= K; ++a) {
            if (a == i0 || a == b) continue;
            const long pa = g.sign(a);
            const bool same_side = (b < i0) == (a < i0);
            FockOperator op;
            if (same_side && b < a) {
                auto ph = osc.form().add_row_range(i0, b, a - 1, pi).add(i0, b, -pb);
                op = osc.cdag(i0, b) * osc.c(i0, a) * osc.qpow(ph);
            } else if (same_side) {  // a < b
                auto ph = osc.form()
                              .add_weight(Weight{pi - pa, 0})
                              .add_row_range(i0, a, b - 1, -pi)
                              .add(i0, a, pa);
                op = osc.cdag(i0, b) * osc.c(i0, a) * osc.qpow(ph);
            } else if (b < i0) {  // b < i0 < a
                auto ph = osc.form()
                              .add_weight(2 * m + Weight{pi, 0})
                              .add_row_range(i0, 1, b - 1, -pi)
                              .add_row_range(i0, a, K, -pi)
                              .add(i0, b, -pb);
                op = -(osc.cdag(i0, b) * osc.c(i0, a) * osc.qpow(ph));
            } else {  // a < i0 < b
                auto ph = osc.form()
                              .add_weight(-(2 * m) + Weight{-pa, 0})
                              .add_row_range(i0, 1, a - 1, pi)
                              .add_row_range(i0, b, K, pi)
                              .add(i0, a, pa);
                op = -(osc.cdag(i0, b) * osc.c(i0, a) * osc.qpow(ph));
            }
            f.e[b][a] = op;
        }
    }
    return f;
}

// --- assembly and completion ---------------------------------------------------

GeneratorFamily assemble_family(const OscAlgebra& osc, const GradingProfile& g,
                                std::vector<Weight> lambda, std::vector<FockOperator> diag,
                                std::vector<FockOperator> qcart,
                                std::vector<FockOperator> qcart_inv,
                                std::vector<FockOperator> raising,
                                std::vector<FockOperator> lowering) {
    const int K = g.K();
    check_lambda(g, lambda, "assemble_family");
    if (static_cast<int>(diag.size()) != K + 1 || static_cast<int>(qcart.size()) != K + 1 ||
        static_cast<int>(qcart_inv.size()) != K + 1 || static_cast<int>(raising.size()) < K ||
        static_cast<int>(lowering.size()) < K)
        throw error("assemble_family: vectors must be 1-based padded");
    GeneratorFamily f(g, osc);
    f.lambda = std::move(lambda);
    for (int i = 1; i <= K; ++i) f.e[i][i] = diag[i];
    f.qcart = std::move(qcart);
    f.qcart_inv = std::move(qcart_inv);
    f.qcart_bar = f.qcart_inv;
    for (int i = 1; i <= K - 1; ++i) {
        f.e[i][i + 1] = raising[i];
        f.e[i + 1][i] = lowering[i];
    }
    complete_family(f);
    return f;
}

void complete_family(GeneratorFamily& f) {
    const GradingProfile& g = f.grading;
    const int K = g.K();
    const RegistryPtr reg = f.osc.registry();
    for (int i = 1; i <= K; ++i)
        if (!f.e[i][i].valid()) throw error("complete_family: missing diagonal entry");
    for (int i = 1; i <= K - 1; ++i)
        if (!f.e[i][i + 1].valid() || !f.e[i + 1][i].valid())
            throw error("complete_family: missing adjacent entry");

    for (int d = 2; d <= K - 1; ++d)
        for (int i = 1; i + d <= K; ++i) {
            const int j = i + d;
            f.e[i][j] = FockOperator::graded_commutator(f.e[i][i + 1], f.e[i + 1][j],
                                                        Scalar::q_power(reg, -g.sign(i + 1)));
        }

    if (!f.contracted) {
        for (int d = 2; d <= K - 1; ++d)
            for (int j = 1; j + d <= K; ++j) {
                const int i = j + d;
                f.e[i][j] = FockOperator::graded_commutator(f.e[i][j + 1], f.e[j + 1][j],
                                                            Scalar::q_power(reg, g.sign(j + 1)));
            }
        return;
    }

    const int a = f.iset.a;
    for (int i = 3; i <= K; ++i)
        for (int j = 1; j <= i - 2; ++j) {
            if (i <= a) {
                f.e[i][j] = FockOperator::zero(f.space());
            } else if (j == 1) {
                if (!f.e[i][1].valid())
                    throw error("complete_family: missing first-column entry");
            } else {
                f.e[i][j] = f.qcart_inv[1] * f.qcart[j] *
                            FockOperator::graded_commutator(f.e[i][1], f.e[1][j]);
            }
        }
}

}  // namespace qgl
