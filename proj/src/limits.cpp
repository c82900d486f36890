// limits.cpp — the contraction pipeline: twist, renormalize, take the
// tracker limit entrywise, and compare against the direct construction.
#include "qgl/limits.hpp"

#include <algorithm>
#include <map>

#include "qgl/error.hpp"

namespace qgl {

bool operator_limit(const FockOperator& in, int var, Scalar::LimitDir dir, FockOperator* out,
                    std::string* bad) {
    bool ok = true;
    FockOperator res = in.entrywise([&](const Scalar& v) {
        if (!ok) return v;
        Scalar::LimitOutcome lo = v.limit(var, dir);
        if (!lo.ok) {
            ok = false;
            if (bad) *bad = "divergent entry: " + v.str() + " (term " + lo.divergent_term + ")";
            return v;
        }
        return lo.value;
    });
    if (ok && out) *out = std::move(res);
    return ok;
}

GeneratorFamily renormalized_for_contraction(const OscAlgebra& osc, const GradingProfile& g,
                                             int a, const std::vector<Weight>& lambda) {
    const int K = g.K();
    if (a < 1 || a >= K) throw error("renormalized_for_contraction: split out of range");
    const RegistryPtr reg = osc.registry();
    const SubsetI iset{a, K};
    const auto tpow = [&](int e) { return Scalar::var_power(reg, VariableRegistry::kT, e); };
    const auto th = [&](int i) { return iset.in_Ibar(i) ? 1 : 0; };

    // Oscillator twist: each mode (i,j) absorbs the tracker powers of the
    // locked weights carried by its row and column indices.
    const OscAlgebra twisted =
        osc.rescaled([&](int i, int j) { return tpow(th(i) - th(j)); },
                     [&](int i, int j) { return tpow(th(j) - th(i)); });

    // Weights below the split are locked so that q^{p_i λ_i} = t^{-1}.
    std::vector<Weight> lam(K + 1, Weight{0, 0});
    for (int i = 1; i <= K; ++i)
        lam[i] = iset.in_Ibar(i) ? Weight{0, g.sign(i)} : lambda[i];

    GeneratorFamily fam = build_verma(twisted, g, VermaKind::ColumnOne, lam);

    // Family renormalization: lower entries absorb one tracker power per
    // locked index; the locked diagonals are shifted by their weight.
    for (int i = 1; i <= K; ++i) {
        for (int j = 1; j < i; ++j) {
            const int pw = th(i) + th(j);
            if (pw != 0) fam.e[i][j] = fam.e[i][j].scaled(tpow(pw));
        }
        if (iset.in_Ibar(i)) {
            fam.qcart[i] = fam.qcart[i].scaled(tpow(1));
            fam.qcart_inv[i] = fam.qcart_inv[i].scaled(tpow(-1));
            fam.qcart_bar[i] = fam.qcart_bar[i].scaled(tpow(1));
            fam.lambda[i] = Weight{0, 0};
        }
    }
    fam.iset = iset;
    return fam;
}

FamilyLimit limit_family(const GeneratorFamily& fam, int var, Scalar::LimitDir dir) {
    FamilyLimit out(fam);
    out.ok = true;
    const int K = fam.K();
    auto take = [&](FockOperator& op, const std::string& label) {
        if (!out.ok) return;
        std::string bad;
        if (!operator_limit(op, var, dir, &op, &bad)) {
            out.ok = false;
            out.divergent = label + ": " + bad;
        }
    };
    for (int i = 1; i <= K && out.ok; ++i)
        for (int j = 1; j <= K && out.ok; ++j) {
            if (i == j) continue;
            take(out.family.e[i][j],
                 "e[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    for (int i = 1; i <= K && out.ok; ++i) {
        take(out.family.qcart[i], "qcart[" + std::to_string(i) + "]");
        take(out.family.qcart_inv[i], "qcart_inv[" + std::to_string(i) + "]");
        take(out.family.qcart_bar[i], "qcart_bar[" + std::to_string(i) + "]");
    }
    return out;
}

VerificationReport check_contraction_coincidence(const OscAlgebra& osc, const GradingProfile& g,
                                                 int a, const std::vector<Weight>& lambda) {
    VerificationReport rep;
    rep.suite = "limits";
    rep.instance = "pattern=" + g.pattern() + " a=" + std::to_string(a);
    const int K = g.K();

    const GeneratorFamily reno = renormalized_for_contraction(osc, g, a, lambda);
    const FamilyLimit lim = limit_family(reno, VariableRegistry::kT, Scalar::LimitDir::VarToZero);
    rep.add("no-divergence", lim.ok, lim.divergent);
    if (!lim.ok) return rep;

    // The direct construction lives on the reduced mode set; the limit family
    // on the full set.  They are compared on the slice of full-space states
    // with zero occupation on the dropped modes, which carries a one-to-one
    // occupation-preserving match with the reduced basis.
    const SpacePtr full = osc.space();
    const SpacePtr tail = tail_space(full->registry(), g, a, full->bosonic_cutoff());
    const GeneratorFamily direct = build_contracted(OscAlgebra::base(tail), g, a, lambda);

    std::vector<int> into_full(tail->dim(), -1);
    std::vector<int> from_full(full->dim(), -1);
    for (int ts = 0; ts < tail->dim(); ++ts) {
        int fs = full->vacuum();
        for (int m = 0; m < tail->nmodes() && fs >= 0; ++m) {
            const Mode& md = tail->mode(m);
            const int fm = full->mode_index(md.i, md.a);
            for (int k = 0; k < tail->occ(ts, m) && fs >= 0; ++k)
                fs = fm < 0 ? -1 : full->raised(fs, fm);
        }
        if (fs < 0) throw error("contraction coincidence: reduced basis does not embed");
        into_full[ts] = fs;
        from_full[fs] = ts;
    }

    auto compare = [&](const FockOperator& got, const FockOperator& want,
                       const std::string& label) {
        const int h = std::max(got.headroom(), want.headroom());
        const std::vector<int> cols = tail->admissible_block(h);
        if (cols.empty()) {
            rep.infeasible = true;
            rep.add(label, false, "no admissible columns at headroom " + std::to_string(h));
            return;
        }
        for (int ts : cols) {
            const int fc = into_full[ts];
            std::map<int, Scalar> expected;
            for (const auto& [tr, v] : want.column(ts))
                if (!v.is_zero()) expected.emplace(tr, v);
            for (const auto& [fr, v] : got.column(fc)) {
                if (v.is_zero()) continue;
                const int tr = from_full[fr];
                if (tr < 0) {
                    rep.add(label, false,
                            "limit entry leaves the reduced slice: col " + tail->state_str(ts) +
                                " -> " + full->state_str(fr) + " coeff " + v.str());
                    return;
                }
                const auto it = expected.find(tr);
                const Scalar want_v =
                    it == expected.end() ? Scalar::zero(full->registry()) : it->second;
                if (!(v - want_v).is_zero()) {
                    rep.add(label, false,
                            "col " + tail->state_str(ts) + " row " + tail->state_str(tr) + ": " +
                                v.str() + " vs " + want_v.str());
                    return;
                }
                if (it != expected.end()) expected.erase(it);
            }
            for (const auto& [tr, v] : expected) {
                rep.add(label, false,
                        "col " + tail->state_str(ts) + " row " + tail->state_str(tr) +
                            ": 0 vs " + v.str());
                return;
            }
        }
        rep.add(label, true);
    };

    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            if (i == j) continue;
            compare(lim.family.e[i][j], direct.e[i][j],
                    "e[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    for (int i = 1; i <= K; ++i) {
        compare(lim.family.qcart[i], direct.qcart[i], "qcart[" + std::to_string(i) + "]");
        compare(lim.family.qcart_inv[i], direct.qcart_inv[i],
                "qcart_inv[" + std::to_string(i) + "]");
        compare(lim.family.qcart_bar[i], direct.qcart_bar[i],
                "qcart_bar[" + std::to_string(i) + "]");
    }
    return rep;
}

}  // namespace qgl
