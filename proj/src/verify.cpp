// verify.cpp — relation sweeps, Chevalley checks, highest-weight conditions
// and the graded Yang-Baxter equation on a triple tensor space.
#include "qgl/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgl/error.hpp"

namespace qgl {

// --- VerificationReport -------------------------------------------------------

void VerificationReport::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

bool VerificationReport::ok() const {
    if (infeasible) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int VerificationReport::failed() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string VerificationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
    return "";
}

// --- TripleOp -----------------------------------------------------------------
//
// Basis vectors of Fock ⊗ aux ⊗ aux are |f⟩⊗|u⟩⊗|v⟩ with composite parity
// π(f)+p(u)+p(v).  An elementary factor acting on one slot picks up a Koszul
// sign from the parities of the slots it moves past; with column state
// (f,u,v) the signs below are exactly those of the graded tensor product,
// so products of TripleOps need no further sign bookkeeping.

TripleOp::TripleOp(SpacePtr fock, GradingProfile g)
    : fock_(std::move(fock)), g_(std::move(g)), K_(g_.K()), dim_(fock_->dim() * K_ * K_) {
    cols_.resize(dim_);
}

void TripleOp::put(int row, int col, const Scalar& val) {
    if (val.is_zero()) return;
    cols_[col].emplace_back(row, val);
}

void TripleOp::add_left(const FockOperator& F, int i, int j) {
    if (F.is_zero()) return;
    const int pij = (g_.parity(i) + g_.parity(j)) & 1;
    for (int f = 0; f < fock_->dim(); ++f) {
        const auto& col = F.column(f);
        if (col.empty()) continue;
        const bool flip = pij && (fock_->state_parity(f) & 1);
        for (const auto& [fp, val] : col) {
            const Scalar sv = flip ? -val : val;
            for (int v = 1; v <= K_; ++v) put(index(fp, i, v), index(f, j, v), sv);
        }
    }
}

void TripleOp::add_right(const FockOperator& F, int k, int l) {
    if (F.is_zero()) return;
    const int pkl = (g_.parity(k) + g_.parity(l)) & 1;
    for (int f = 0; f < fock_->dim(); ++f) {
        const auto& col = F.column(f);
        if (col.empty()) continue;
        for (const auto& [fp, val] : col) {
            for (int u = 1; u <= K_; ++u) {
                const bool flip = pkl && ((fock_->state_parity(f) + g_.parity(u)) & 1);
                put(index(fp, u, k), index(f, u, l), flip ? -val : val);
            }
        }
    }
}

void TripleOp::add_aux(const AuxTerm& t) {
    if (t.coeff.is_zero()) return;
    const int pab = (g_.parity(t.a) + g_.parity(t.b)) & 1;
    const int pcd = (g_.parity(t.c) + g_.parity(t.d)) & 1;
    const bool base_flip = pcd && (g_.parity(t.b) & 1);
    for (int f = 0; f < fock_->dim(); ++f) {
        bool flip = base_flip;
        if ((pab ^ pcd) && (fock_->state_parity(f) & 1)) flip = !flip;
        put(index(f, t.a, t.c), index(f, t.b, t.d), flip ? -t.coeff : t.coeff);
    }
}

void TripleOp::compress() {
    for (auto& col : cols_) {
        if (col.empty()) continue;
        std::sort(col.begin(), col.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<int, Scalar>> merged;
        for (auto& [r, v] : col) {
            if (!merged.empty() && merged.back().first == r)
                merged.back().second = merged.back().second + v;
            else
                merged.emplace_back(r, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& e) { return e.second.is_zero(); }),
                     merged.end());
        col = std::move(merged);
    }
}

Scalar TripleOp::at(int row, int col) const {
    for (const auto& [r, v] : cols_[col])
        if (r == row) return v;
    return Scalar::zero(fock_->registry());
}

TripleOp operator*(const TripleOp& x, const TripleOp& y) {
    if (x.dim_ != y.dim_) throw error("TripleOp product: dimension mismatch");
    TripleOp out(x.fock_, x.g_);
    for (int c = 0; c < y.dim_; ++c) {
        if (y.cols_[c].empty()) continue;
        std::map<int, Scalar> acc;
        for (const auto& [r, yv] : y.cols_[c])
            for (const auto& [i, xv] : x.cols_[r]) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, xv * yv);
                else
                    it->second = it->second + xv * yv;
            }
        auto& col = out.cols_[c];
        for (auto& [r, v] : acc)
            if (!v.is_zero()) col.emplace_back(r, v);
    }
    return out;
}

bool TripleOp::equal_on(const TripleOp& x, const TripleOp& y,
                        const std::vector<int>& fock_cols, std::string* where) {
    auto describe = [&](int row, int col, const Scalar& xv, const Scalar& yv) {
        if (!where) return;
        const int K = x.K_;
        std::ostringstream os;
        os << "col(" << x.fock_->state_str(col / (K * K)) << ", u=" << (col / K) % K + 1
           << ", v=" << col % K + 1 << ") row(" << x.fock_->state_str(row / (K * K))
           << ", u=" << (row / K) % K + 1 << ", v=" << row % K + 1 << "): lhs=" << xv.str()
           << " rhs=" << yv.str();
        *where = os.str();
    };
    const Scalar z = Scalar::zero(x.fock_->registry());
    for (int f : fock_cols)
        for (int uv = 0; uv < x.K_ * x.K_; ++uv) {
            const int c = f * x.K_ * x.K_ + uv;
            const auto& ca = x.cols_[c];
            const auto& cb = y.cols_[c];
            std::size_t ia = 0, ib = 0;
            while (ia < ca.size() || ib < cb.size()) {
                if (ib == cb.size() || (ia < ca.size() && ca[ia].first < cb[ib].first)) {
                    if (!ca[ia].second.is_zero()) {
                        describe(ca[ia].first, c, ca[ia].second, z);
                        return false;
                    }
                    ++ia;
                } else if (ia == ca.size() || cb[ib].first < ca[ia].first) {
                    if (!cb[ib].second.is_zero()) {
                        describe(cb[ib].first, c, z, cb[ib].second);
                        return false;
                    }
                    ++ib;
                } else {
                    if (!(ca[ia].second == cb[ib].second)) {
                        describe(ca[ia].first, c, ca[ia].second, cb[ib].second);
                        return false;
                    }
                    ++ia;
                    ++ib;
                }
            }
        }
    return true;
}

// --- Yang-Baxter --------------------------------------------------------------

VerificationReport check_ybe(const LaxOperator& lax, const RMatrix& r, int headroom) {
    if (lax.kind != r.kind) throw error("check_ybe: operator and R-matrix kinds differ");
    if (!(lax.grading == r.grading)) throw error("check_ybe: grading mismatch");
    const SpacePtr sp = lax.space;
    const RegistryPtr reg = sp->registry();
    const int K = lax.K();

    VerificationReport rep;
    rep.suite = "ybe";
    rep.instance = "pattern=" + lax.grading.pattern() +
                   (lax.kind == RKind::Trig ? " multiplicative" : " additive");

    Scalar c12, c13, z;
    if (lax.kind == RKind::Trig) {
        c12 = Scalar::var_power(reg, VariableRegistry::kX, -1);
        c13 = Scalar::var_power(reg, VariableRegistry::kY, -1);
        z = Scalar::var_power(reg, VariableRegistry::kX, 1) * Scalar::var_power(reg, VariableRegistry::kY, -1);
    } else {
        c12 = Scalar::var_power(reg, VariableRegistry::kU, 1);
        c13 = Scalar::var_power(reg, VariableRegistry::kV, 1);
        z = c12 - c13;
    }

    // Headroom certificate: L12 acts first on one side, L13 first on the
    // other, so the certified block must survive both orders.  The R-matrix
    // factor is Fock-diagonal and costs nothing.
    std::vector<std::vector<FockOperator>> e12(K + 1), e13(K + 1);
    int h12 = 0, r12 = 0, h13 = 0, r13 = 0;
    for (int i = 1; i <= K; ++i) {
        e12[i].resize(K + 1);
        e13[i].resize(K + 1);
        for (int j = 1; j <= K; ++j) {
            e12[i][j] = lax_entry(lax, i, j, c12);
            e13[i][j] = lax_entry(lax, i, j, c13);
            if (!e12[i][j].is_zero()) {
                h12 = std::max(h12, e12[i][j].headroom());
                r12 = std::max(r12, e12[i][j].raising_bound());
            }
            if (!e13[i][j].is_zero()) {
                h13 = std::max(h13, e13[i][j].headroom());
                r13 = std::max(r13, e13[i][j].raising_bound());
            }
        }
    }
    int need = std::max(std::max(h12, h13 + std::max(r12, 0)),
                        std::max(h13, h12 + std::max(r13, 0)));
    if (headroom >= 0) need = headroom;
    const std::vector<int> block = sp->admissible_block(need);
    if (block.empty()) {
        rep.infeasible = true;
        rep.add("headroom", false,
                "no admissible columns at headroom " + std::to_string(need) +
                    "; raise the bosonic cutoff to at least " + std::to_string(need));
        return rep;
    }

    TripleOp L12(sp, lax.grading), L13(sp, lax.grading), R23(sp, lax.grading);
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            L12.add_left(e12[i][j], i, j);
            L13.add_right(e13[i][j], i, j);
        }
    for (const AuxTerm& t : r_at(r, z)) R23.add_aux(t);
    L12.compress();
    L13.compress();
    R23.compress();

    TripleOp lhs = R23 * (L13 * L12);
    TripleOp rhs = (L12 * L13) * R23;
    std::string where;
    const bool eq = TripleOp::equal_on(lhs, rhs, block, &where);
    rep.add("rll", eq, where);
    return rep;
}

// --- generator relation sweep ---------------------------------------------------

namespace {

// Shared state for one relation sweep.
struct Sweep {
    const GeneratorFamily& f;
    VerificationReport& rep;
    RegistryPtr reg;
    int K;
    Scalar spol, sinv;

    Sweep(const GeneratorFamily& fam, VerificationReport& r)
        : f(fam),
          rep(r),
          reg(fam.osc.registry()),
          K(fam.K()),
          spol(Scalar::s_poly(reg)),
          sinv(Scalar::s_inverse(reg)) {}

    long P(int i) const { return f.grading.sign(i); }
    int p(int i) const { return f.grading.parity(i); }
    long pm(int sum) const { return (sum & 1) ? -1 : 1; }  // (-1)^sum

    std::string tag(const char* base, std::initializer_list<int> idx) const {
        std::string s(base);
        s += '[';
        bool first = true;
        for (int i : idx) {
            if (!first) s += ',';
            s += std::to_string(i);
            first = false;
        }
        s += ']';
        return s;
    }

    void equal(const std::string& name, const FockOperator& lhs, const FockOperator& rhs) {
        const int h = std::max(lhs.headroom(), rhs.headroom());
        const std::vector<int> cols = f.space()->admissible_block(h);
        if (cols.empty()) {
            rep.infeasible = true;
            rep.add(name, false, "no admissible columns at headroom " + std::to_string(h));
            return;
        }
        std::string where;
        const bool eq = FockOperator::equal_on(lhs, rhs, cols, &where);
        rep.add(name, eq, where);
    }

    void zero(const std::string& name, const FockOperator& op) {
        const std::vector<int> cols = f.space()->admissible_block(op.headroom());
        if (cols.empty()) {
            rep.infeasible = true;
            rep.add(name, false,
                    "no admissible columns at headroom " + std::to_string(op.headroom()));
            return;
        }
        std::string where;
        const bool v = op.vanishes_on(cols, &where);
        rep.add(name, v, where);
    }
};

}  // namespace

VerificationReport check_generator_relations(const GeneratorFamily& fam) {
    VerificationReport rep;
    rep.suite = "appendix-a";
    rep.instance = "pattern=" + fam.grading.pattern() +
                   (fam.contracted ? " contracted a=" + std::to_string(fam.iset.a) : "");
    Sweep w(fam, rep);
    const int K = w.K;
    const auto& e = fam.e;
    const auto& qc = fam.qcart;
    const auto& qci = fam.qcart_inv;
    const auto& qcb = fam.qcart_bar;
    const FockOperator id = FockOperator::identity(fam.space());
    const FockOperator zop = FockOperator::zero(fam.space());

    // Diagonal generators commute pairwise across both families.
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b) {
            if (a < b) {
                w.zero(w.tag("a00", {a, b}), FockOperator::graded_commutator(qc[a], qc[b]));
                w.zero(w.tag("a00bar", {a, b}), FockOperator::graded_commutator(qcb[a], qcb[b]));
            }
            w.zero(w.tag("a00mix", {a, b}), FockOperator::graded_commutator(qc[a], qcb[b]));
        }

    // Diagonal inversion; for contracted families the barred diagonal is a
    // two-sided inverse only beyond the split and vanishes below it.
    for (int a = 1; a <= K; ++a) {
        const bool unit = !fam.contracted || fam.iset.in_I(a);
        const FockOperator& want = unit ? id : zop;
        w.equal(w.tag("a0", {a}), qc[a] * qcb[a], want);
        w.equal(w.tag("a0r", {a}), qcb[a] * qc[a], want);
    }

    if (fam.contracted) {
        for (int i = 1; i <= K; ++i) {
            if (fam.iset.in_Ibar(i))
                w.zero(w.tag("red300e", {i}), qcb[i]);
            else
                w.equal(w.tag("red300e", {i}), qcb[i], qci[i]);
        }
        for (int i = 2; i <= fam.iset.a; ++i)
            for (int j = i + 1; j <= fam.iset.a; ++j)
                w.zero(w.tag("red30e", {j, i}), e[j][i]);
    }

    // Ladder recursions through an intermediate index.
    for (int a = 1; a <= K; ++a)
        for (int c = 1; c <= K; ++c)
            for (int b = 1; b <= K; ++b) {
                if (a > c && c > b)
                    w.equal(w.tag("a1", {a, c, b}), e[a][b] * qcb[c] * qc[c],
                            FockOperator::graded_commutator(e[a][c], e[c][b],
                                                            Scalar::q_power(w.reg, w.P(c))));
                if (a < c && c < b)
                    w.equal(w.tag("a2", {a, c, b}), e[a][b],
                            FockOperator::graded_commutator(e[a][c], e[c][b],
                                                            Scalar::q_power(w.reg, -w.P(c))));
            }

    // Pairing of opposite off-diagonal generators.
    for (int a = 1; a <= K; ++a)
        for (int b = a + 1; b <= K; ++b) {
            FockOperator rhs = (qc[a] * qcb[b] - qcb[a] * qc[b]).scaled(w.sinv).scaled(w.P(a));
            w.equal(w.tag("a3", {a, b}), FockOperator::graded_commutator(e[a][b], e[b][a]),
                    std::move(rhs));
        }

    // Mixed brackets over all four-index order patterns.
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b)
            for (int c = 1; c <= K; ++c)
                for (int d = 1; d <= K; ++d) {
                    if (a == b || c == d) continue;
                    const bool pat4 = (b < d && d < a && a < c) || (a < c && c < b && b < d);
                    const bool pat5 = (d < c && c < b && b < a) || (d > c && c > b && b > a) ||
                                      (d < b && b < a && a < c) || (d > b && b > a && a > c) ||
                                      (d < c && c <= a && a < b) || (c < d && d <= b && b < a) ||
                                      (d < a && a < b && b < c) || (c < b && b < a && a < d);
                    const bool pat6 = d < a && a < c && c < b;
                    const bool pat7 = a < d && d < b && b < c;
                    if (!(pat4 || pat5 || pat6 || pat7)) continue;
                    const FockOperator br = FockOperator::graded_commutator(e[d][c], e[b][a]);
                    const long sg = w.pm(w.p(a) * w.p(b) + (w.p(a) + w.p(b)) * w.p(c) + 1);
                    if (pat4) {
                        w.equal(w.tag("a4", {d, c, b, a}), br,
                                (e[d][a] * e[b][c]).scaled(w.spol).scaled(sg));
                    } else if (pat5) {
                        w.zero(w.tag("a5", {d, c, b, a}), br);
                    } else if (pat6) {
                        w.equal(w.tag("a6", {d, c, b, a}), br,
                                (qc[a] * qci[c] * e[d][a] * e[b][c]).scaled(w.spol).scaled(sg));
                    } else if (pat7) {
                        w.equal(w.tag("a7", {d, c, b, a}), br,
                                (e[d][a] * e[b][c] * qc[b] * qci[d]).scaled(w.spol).scaled(-sg));
                    }
                }

    // Brackets sharing one index.
    for (int x = 1; x <= K; ++x)
        for (int y = 1; y <= K; ++y)
            for (int v = 1; v <= K; ++v) {
                // [e_ba, e_ac] with shared inner index a.
                const int a = x, b = y, c = v;
                if (a < b && b < c)
                    w.equal(w.tag("a8", {b, a, c}),
                            FockOperator::graded_commutator(e[b][a], e[a][c]),
                            e[b][c] * qc[b] * qcb[a]);
                if (a < c && c < b)
                    w.equal(w.tag("a9", {b, a, c}),
                            FockOperator::graded_commutator(e[b][a], e[a][c]),
                            qc[a] * qci[c] * e[b][c]);
                // [e_db, e_ba] with shared inner index b.
                const int aa = x, d = y, bb = v;
                if (aa < d && d < bb)
                    w.equal(w.tag("a10", {d, bb, aa}),
                            FockOperator::graded_commutator(e[d][bb], e[bb][aa]),
                            e[d][aa] * qc[bb] * qci[d]);
                if (d < aa && aa < bb)
                    w.equal(w.tag("a11", {d, bb, aa}),
                            FockOperator::graded_commutator(e[d][bb], e[bb][aa]),
                            qc[aa] * qcb[bb] * e[d][aa]);
                // Same-column and same-row q-brackets.
                const int ca = x, cb2 = y, cd = v;
                if ((ca < cb2 && cb2 < cd) || (cb2 < cd && cd < ca))
                    w.zero(w.tag("a12", {cd, ca, cb2}),
                           FockOperator::graded_commutator(e[cd][ca], e[cb2][ca],
                                                           Scalar::q_power(w.reg, -w.P(ca))));
                if ((cd < ca && ca < cb2) || (cb2 < cd && cd < ca))
                    w.zero(w.tag("a13", {cb2, cd, ca}),
                           FockOperator::graded_commutator(e[cb2][cd], e[cb2][ca],
                                                           Scalar::q_power(w.reg, w.P(cb2))));
            }

    // Self-bracket: squares of odd generators vanish.
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b)
            if (a != b)
                w.zero(w.tag("a16", {b, a}), FockOperator::graded_commutator(e[b][a], e[b][a]));

    return rep;
}

// --- Chevalley ----------------------------------------------------------------

VerificationReport check_chevalley(const ChevalleyFamily& ch, bool borel_only) {
    VerificationReport rep;
    rep.suite = "chevalley";
    rep.instance = "pattern=" + ch.grading.pattern() +
                   (ch.contracted ? " contracted a=" + std::to_string(ch.iset.a) : "") +
                   (borel_only ? " borel" : "");
    const int K = ch.K();
    const auto sp = ch.e[1].space();
    const RegistryPtr reg = sp->registry();
    const Scalar sinv = Scalar::s_inverse(reg);
    const auto A = cartan_matrix(ch.grading);
    const auto wrap = [K](int i) { return i % K + 1; };
    const FockOperator zop = FockOperator::zero(sp);

    auto equal = [&](const std::string& name, const FockOperator& lhs, const FockOperator& rhs) {
        const int h = std::max(lhs.headroom(), rhs.headroom());
        const std::vector<int> cols = sp->admissible_block(h);
        if (cols.empty()) {
            rep.infeasible = true;
            rep.add(name, false, "no admissible columns at headroom " + std::to_string(h));
            return;
        }
        std::string where;
        rep.add(name, FockOperator::equal_on(lhs, rhs, cols, &where), where);
    };

    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j) {
            const std::string ij = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            equal("efk0-kk" + ij, FockOperator::graded_commutator(ch.k[i], ch.k[j]), zop);
            const long cij = (i == j ? 1 : 0) - (i == wrap(j) ? 1 : 0);
            equal("efk0-ke" + ij, FockOperator::graded_commutator(ch.k[i], ch.e[j]),
                  ch.e[j].scaled(cij));
            if (!borel_only) {
                equal("efk0-kf" + ij, FockOperator::graded_commutator(ch.k[i], ch.f[j]),
                      ch.f[j].scaled(-cij));
                FockOperator rhs =
                    (i == j)
                        ? (ch.qk[i] * ch.qk_bar[wrap(i)] - ch.qk_bar[i] * ch.qk[wrap(i)])
                              .scaled(sinv)
                        : zop;
                equal("ef" + ij, FockOperator::graded_commutator(ch.e[i], ch.f[j]),
                      std::move(rhs));
            }
            // Bracket vanishing applies only to genuinely disconnected nodes;
            // at K=2 the two nodes are doubly bonded even when the Cartan
            // matrix entry is zero.
            const bool bonded = (i != j) && (wrap(i) == j || wrap(j) == i);
            if (i != j && A[i - 1][j - 1] == 0 && !bonded) {
                equal("comee" + ij, FockOperator::graded_commutator(ch.e[i], ch.e[j]), zop);
                if (!borel_only)
                    equal("comff" + ij, FockOperator::graded_commutator(ch.f[i], ch.f[j]), zop);
            }
        }
    return rep;
}

// --- highest weight -------------------------------------------------------------

namespace {

// The vacuum column of `op` is exactly eigen·|vacuum⟩.
bool vacuum_eigen(const FockOperator& op, const Scalar& eigen, std::string* where) {
    const auto col = op.vacuum_column();
    const int vac = op.space()->vacuum();
    Scalar got = Scalar::zero(op.space()->registry());
    for (const auto& [r, v] : col) {
        if (r == vac) {
            got = v;
            continue;
        }
        if (!v.is_zero()) {
            if (where)
                *where = "vacuum maps onto " + op.space()->state_str(r) + " with " + v.str();
            return false;
        }
    }
    if (got == eigen) return true;
    if (where) *where = "vacuum eigenvalue " + got.str() + ", expected " + eigen.str();
    return false;
}

}  // namespace

VerificationReport check_highest_weight(const GeneratorFamily& fam) {
    VerificationReport rep;
    rep.suite = "highest-weight";
    rep.instance = "pattern=" + fam.grading.pattern() +
                   (fam.contracted ? " contracted a=" + std::to_string(fam.iset.a) : "");
    const int K = fam.K();
    const RegistryPtr reg = fam.osc.registry();
    const int vac = fam.space()->vacuum();

    for (int i = 1; i <= K; ++i) {
        const Weight li =
            (fam.contracted && fam.iset.in_Ibar(i)) ? Weight{0, 0} : fam.lambda[i];
        std::string where;
        bool ok = vacuum_eigen(fam.qcart[i], Scalar::q_weight_power(reg, fam.grading.sign(i) * li),
                               &where);
        rep.add("diag[" + std::to_string(i) + "]", ok, where);
        where.clear();
        if (fam.contracted && fam.iset.in_Ibar(i)) {
            // Below the split the barred diagonal vanishes; the plain inverse
            // is not part of the contracted family's defining data.
            rep.add("diagbar[" + std::to_string(i) + "]", fam.qcart_bar[i].is_zero(),
                    fam.qcart_bar[i].is_zero() ? "" : "barred diagonal not identically zero");
        } else {
            ok = vacuum_eigen(fam.qcart_bar[i],
                              Scalar::q_weight_power(reg, -(fam.grading.sign(i) * li)), &where);
            rep.add("diagbar[" + std::to_string(i) + "]", ok, where);
        }
    }
    for (int j = 1; j <= K; ++j)
        for (int k = j + 1; k <= K; ++k) {
            std::string where;
            const bool ok = fam.e[j][k].vanishes_on({vac}, &where);
            rep.add("raise[" + std::to_string(j) + "," + std::to_string(k) + "]", ok, where);
        }
    return rep;
}

VerificationReport check_single_index_vacuum(const GeneratorFamily& fam, int i0) {
    VerificationReport rep;
    rep.suite = "highest-weight";
    rep.instance = "pattern=" + fam.grading.pattern() + " one-index i0=" + std::to_string(i0);
    const int K = fam.K();
    const RegistryPtr reg = fam.osc.registry();
    const int vac = fam.space()->vacuum();

    for (int i = 1; i <= K; ++i) {
        std::string where;
        const bool ok = vacuum_eigen(
            fam.qcart[i], Scalar::q_weight_power(reg, fam.grading.sign(i) * fam.lambda[i]),
            &where);
        rep.add("diag[" + std::to_string(i) + "]", ok, where);
    }
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b) {
            if (a == b) continue;
            const bool killed = (a < b && b < i0) || (i0 <= a && a < b) || (b < i0 && i0 <= a);
            if (!killed) continue;
            std::string where;
            const bool ok = fam.e[a][b].vanishes_on({vac}, &where);
            rep.add("kill[" + std::to_string(a) + "," + std::to_string(b) + "]", ok, where);
        }
    return rep;
}

VerificationReport check_lax_vacuum(const LaxOperator& lax, const GeneratorFamily& fam) {
    if (lax.kind != RKind::Trig)
        throw error("check_lax_vacuum: only the multiplicative kind carries this vacuum law");
    VerificationReport rep;
    rep.suite = "highest-weight";
    rep.instance = "pattern=" + fam.grading.pattern() + " lax" +
                   (fam.contracted ? " contracted a=" + std::to_string(fam.iset.a) : "");
    const int K = lax.K();
    const RegistryPtr reg = lax.space->registry();
    const int vac = lax.space->vacuum();
    const Scalar xinv = Scalar::var_power(reg, VariableRegistry::kX, -1);

    for (int i = 1; i <= K; ++i)
        for (int j = 1; j < i; ++j) {
            std::string where;
            const bool ok = lax_entry(lax, i, j, xinv).vanishes_on({vac}, &where);
            rep.add("lower[" + std::to_string(i) + "," + std::to_string(j) + "]", ok, where);
        }
    for (int i = 1; i <= K; ++i) {
        Scalar want;
        if (fam.contracted && fam.iset.in_Ibar(i)) {
            want = Scalar::one(reg);
        } else {
            const Weight li = fam.grading.sign(i) * fam.lambda[i];
            want = Scalar::q_weight_power(reg, li) - xinv * Scalar::q_weight_power(reg, -li);
        }
        std::string where;
        const bool ok = vacuum_eigen(lax_entry(lax, i, i, xinv), want, &where);
        rep.add("diag[" + std::to_string(i) + "]", ok, where);
    }
    return rep;
}

}  // namespace qgl
