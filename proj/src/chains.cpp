// chains.cpp — see chains.hpp.
#include "qgl/chains.hpp"

namespace qgl {

long mode_sign_braid(const GradingProfile& g, int i, int j) {
    int e = g.parity_sum(i + 1, j - 1) + g.parity(i) * g.parity(j);
    for (int k = i; k <= j - 1; ++k) e += g.parity(k) * g.parity(k + 1);
    return (e % 2 == 0) ? 1 : -1;
}

long mode_sign_alternating(int i, int j) { return ((j - i - 1) % 2 == 0) ? 1 : -1; }

long mode_sign_braid_closed(const GradingProfile& g, int i, int j) {
    int e = 1 + g.parity_sum(i, j) + g.parity(i) * g.parity(j);
    for (int k = i; k <= j - 1; ++k) e += g.parity(k) * g.parity(k + 1);
    return (e % 2 == 0) ? 1 : -1;
}

std::vector<Weight> conjugate_lambda(const GradingProfile& g, std::vector<Weight> lambda) {
    const int K = g.K();
    if (static_cast<int>(lambda.size()) != K + 1)
        throw error("conjugate_lambda: lambda must have K+1 entries");
    for (int i = 1; i <= K; ++i)
        lambda[i] = -lambda[i] + Weight{g.sign(i) * (g.sign_sum(1, i - 1) - g.sign_sum(i + 1, K)), 0};
    return lambda;
}

GradingProfile reversed_grading(const GradingProfile& g) {
    const int K = g.K();
    std::string pat(static_cast<size_t>(K), '0');
    for (int i = 1; i <= K; ++i) pat[i - 1] = (g.parity(K + 1 - i) == 0) ? '1' : '0';
    return GradingProfile::from_pattern(pat);
}

SpacePtr reversed_space(RegistryPtr reg, const GradingProfile& g, int cutoff) {
    const int K = g.K();
    GradingProfile gr = reversed_grading(g);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= K; ++i)
        for (int j = i + 1; j <= K; ++j) pairs.emplace_back(K + 1 - j, K + 1 - i);
    return std::make_shared<FockSpace>(reg, FockSpace::listed_modes(gr, cutoff, pairs), cutoff);
}

GeneratorFamily chain_to_row_one(const OscAlgebra& osc, const GradingProfile& g,
                                 const std::vector<Weight>& lambda) {
    const int K = g.K();
    RegistryPtr reg = osc.space()->registry();
    auto sgn = [&g, reg](int i, int a) { return Scalar::integer(reg, mode_sign_braid(g, i, a)); };
    OscAlgebra tw = osc.rescaled(sgn, sgn).flipped([](int, int) { return true; });
    GeneratorFamily f = build_verma(tw, g, VermaKind::ColumnOne, conjugate_lambda(g, lambda));

    std::vector<FockOperator> diag(K + 1), qc(K + 1), qci(K + 1), raising(K + 1), lowering(K + 1);
    for (int i = 1; i <= K; ++i) {
        diag[i] = f.e[i][i].scaled(-1);
        qc[i] = f.qcart_inv[i];
        qci[i] = f.qcart[i];
    }
    for (int i = 1; i + 1 <= K; ++i) {
        raising[i] = f.e[i + 1][i].scaled(-g.sign(i) * g.sign(i + 1));
        lowering[i] = f.e[i][i + 1].scaled(-1);
    }
    return assemble_family(osc, g, lambda, diag, qc, qci, raising, lowering);
}

GeneratorFamily chain_to_column_last(const OscAlgebra& osc, const GradingProfile& g,
                                     const std::vector<Weight>& lambda) {
    const int K = g.K();
    SpacePtr tgt = osc.space();
    RegistryPtr reg = tgt->registry();
    GradingProfile gr = reversed_grading(g);
    SpacePtr sps = reversed_space(reg, g, tgt->bosonic_cutoff());
    auto sgn = [&gr, reg](int i, int a) {
        return Scalar::integer(reg, mode_sign_braid(gr, i, a) * mode_sign_alternating(i, a));
    };
    OscAlgebra src = OscAlgebra::base(sps).rescaled(sgn, sgn);
    std::vector<Weight> lsrc(K + 1);
    for (int i = 1; i <= K; ++i) lsrc[i] = -lambda[K + 1 - i];
    GeneratorFamily f = build_verma(src, gr, VermaKind::RowOne, lsrc);

    std::vector<FockOperator> diag(K + 1), qc(K + 1), qci(K + 1), raising(K + 1), lowering(K + 1);
    for (int r = 1; r <= K; ++r) {
        diag[r] = f.e[K + 1 - r][K + 1 - r].reinterpreted(tgt).scaled(-1);
        qc[r] = f.qcart[K + 1 - r].reinterpreted(tgt);
        qci[r] = f.qcart_inv[K + 1 - r].reinterpreted(tgt);
    }
    for (int j = 1; j + 1 <= K; ++j) {
        const int i = K - j;
        raising[j] = f.e[i][i + 1].reinterpreted(tgt);
        lowering[j] = f.e[i + 1][i].reinterpreted(tgt).scaled(gr.sign(i) * gr.sign(i + 1));
    }
    return assemble_family(osc, g, lambda, diag, qc, qci, raising, lowering);
}

GeneratorFamily chain_to_row_last(const OscAlgebra& osc, const GradingProfile& g,
                                  const std::vector<Weight>& lambda) {
    const int K = g.K();
    RegistryPtr reg = osc.space()->registry();
    auto sgn = [&g, reg](int i, int a) {
        return Scalar::integer(reg, mode_sign_braid_closed(g, i, a));
    };
    OscAlgebra tw = osc.flipped([](int, int) { return true; }).rescaled(sgn, sgn);
    GeneratorFamily f = build_verma(tw, g, VermaKind::ColumnLast, conjugate_lambda(g, lambda));

    std::vector<FockOperator> diag(K + 1), qc(K + 1), qci(K + 1), raising(K + 1), lowering(K + 1);
    for (int i = 1; i <= K; ++i) {
        diag[i] = f.e[i][i].scaled(-1);
        qc[i] = f.qcart_inv[i];
        qci[i] = f.qcart[i];
    }
    for (int i = 1; i + 1 <= K; ++i) {
        raising[i] = f.e[i + 1][i].scaled(-1);
        lowering[i] = f.e[i][i + 1].scaled(-g.sign(i) * g.sign(i + 1));
    }
    return assemble_family(osc, g, lambda, diag, qc, qci, raising, lowering);
}

}  // namespace qgl
