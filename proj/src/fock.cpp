// fock.cpp — truncated graded Fock spaces and exact sparse operators.
#include "qgl/fock.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgl/error.hpp"

namespace qgl {

FockSpace::FockSpace(RegistryPtr reg, std::vector<Mode> modes, int bosonic_cutoff)
    : reg_(std::move(reg)), modes_(std::move(modes)), cutoff_(bosonic_cutoff) {
    if (!reg_) throw error("FockSpace: null registry");
    if (modes_.empty()) throw error("FockSpace: empty mode list");
    if (cutoff_ < 1) throw error("FockSpace: bosonic cutoff must be >= 1");
    long dim = 1;
    stride_.resize(modes_.size());
    for (std::size_t m = 0; m < modes_.size(); ++m) {
        const Mode& md = modes_[m];
        if (md.parity != 0 && md.parity != 1) throw error("FockSpace: bad mode parity");
        if (md.cap < 1) throw error("FockSpace: bad mode cap");
        if (md.parity == 1 && md.cap != 1) throw error("FockSpace: fermionic cap must be 1");
        if (md.parity == 0) has_bosonic_ = true;
        stride_[m] = static_cast<int>(dim);
        dim *= md.cap + 1;
        if (dim > 2'000'000) throw error("FockSpace: dimension too large");
    }
    dim_ = static_cast<int>(dim);
    state_parity_.resize(dim_);
    bos_total_.resize(dim_);
    for (int s = 0; s < dim_; ++s) {
        int par = 0, bos = 0;
        for (std::size_t m = 0; m < modes_.size(); ++m) {
            const int n = occ(s, static_cast<int>(m));
            if (modes_[m].parity == 1)
                par += n;
            else
                bos += n;
        }
        state_parity_[s] = static_cast<signed char>(par % 2);
        bos_total_[s] = static_cast<short>(bos);
    }
}

std::vector<Mode> FockSpace::full_modes(const GradingProfile& g, int cutoff) {
    std::vector<Mode> out;
    const int K = g.K();
    for (int i = 1; i <= K; ++i)
        for (int a = i + 1; a <= K; ++a) {
            const int par = (g.parity(i) + g.parity(a)) % 2;
            out.push_back(Mode{i, a, par, par == 1 ? 1 : cutoff});
        }
    return out;
}

std::vector<Mode> FockSpace::selected_modes(const GradingProfile& g, int cutoff,
                                            const std::function<bool(int, int)>& keep) {
    std::vector<Mode> out;
    for (const Mode& md : full_modes(g, cutoff))
        if (keep(md.i, md.a)) out.push_back(md);
    return out;
}

std::vector<Mode> FockSpace::listed_modes(const GradingProfile& g, int cutoff,
                                          const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Mode> out;
    for (auto [i, a] : pairs) {
        if (i < 1 || i > g.K() || a < 1 || a > g.K() || i == a)
            throw error("FockSpace: bad mode pair");
        const int par = (g.parity(i) + g.parity(a)) % 2;
        out.push_back(Mode{i, a, par, par == 1 ? 1 : cutoff});
    }
    return out;
}

int FockSpace::mode_index(int i, int a) const {
    for (std::size_t m = 0; m < modes_.size(); ++m)
        if (modes_[m].i == i && modes_[m].a == a) return static_cast<int>(m);
    return -1;
}

int FockSpace::occ(int state, int m) const {
    return (state / stride_[m]) % (modes_[m].cap + 1);
}

int FockSpace::raised(int state, int m) const {
    return occ(state, m) == modes_[m].cap ? -1 : state + stride_[m];
}

int FockSpace::lowered(int state, int m) const {
    return occ(state, m) == 0 ? -1 : state - stride_[m];
}

long FockSpace::koszul_sign(int state, int m) const {
    if (modes_[m].parity == 0) return 1;
    int crossings = 0;
    for (int k = 0; k < m; ++k)
        if (modes_[k].parity == 1) crossings += occ(state, k);
    return crossings % 2 == 0 ? 1 : -1;
}

std::vector<int> FockSpace::admissible_block(int headroom) const {
    std::vector<int> out;
    if (!has_bosonic_) {
        out.resize(dim_);
        for (int s = 0; s < dim_; ++s) out[s] = s;
        return out;
    }
    const int limit = cutoff_ - headroom;
    for (int s = 0; s < dim_; ++s)
        if (bos_total_[s] <= limit) out.push_back(s);
    return out;
}

std::string FockSpace::state_str(int state) const {
    std::ostringstream os;
    os << "|";
    bool any = false;
    for (std::size_t m = 0; m < modes_.size(); ++m) {
        const int n = occ(state, static_cast<int>(m));
        if (n == 0) continue;
        if (any) os << " ";
        os << "n(" << modes_[m].i << "," << modes_[m].a << ")=" << n;
        any = true;
    }
    if (!any) os << "0";
    os << ">";
    return os.str();
}

// ---------------------------------------------------------------------------

FockOperator::FockOperator(SpacePtr s) : space_(std::move(s)), parity_(-1) {
    cols_.resize(space_->dim());
}

FockOperator FockOperator::zero(SpacePtr s) { return FockOperator(std::move(s)); }

FockOperator FockOperator::identity(SpacePtr s) {
    FockOperator op(std::move(s));
    op.parity_ = 0;
    const Scalar one = Scalar::one(op.space_->registry());
    for (int c = 0; c < op.space_->dim(); ++c) op.cols_[c].emplace_back(c, one);
    return op;
}

FockOperator FockOperator::diagonal(SpacePtr s, const std::function<Scalar(int)>& entry) {
    FockOperator op(std::move(s));
    op.parity_ = 0;
    for (int c = 0; c < op.space_->dim(); ++c) {
        Scalar v = entry(c);
        if (!v.is_zero()) op.cols_[c].emplace_back(c, std::move(v));
    }
    if (op.is_zero()) op.parity_ = -1;
    return op;
}

FockOperator FockOperator::creator(SpacePtr s, int i, int a) {
    FockOperator op(s);
    const int m = s->mode_index(i, a);
    if (m < 0) throw error("creator: mode absent from space");
    op.parity_ = s->mode(m).parity;
    op.headroom_ = s->mode(m).parity == 0 ? 1 : 0;
    for (int c = 0; c < s->dim(); ++c) {
        const int r = s->raised(c, m);
        if (r < 0) continue;  // beyond the cap (or fermionic double occupation)
        op.cols_[c].emplace_back(r, Scalar::integer(s->registry(), s->koszul_sign(c, m)));
    }
    return op;
}

FockOperator FockOperator::annihilator(SpacePtr s, int i, int a) {
    FockOperator op(s);
    const int m = s->mode_index(i, a);
    if (m < 0) throw error("annihilator: mode absent from space");
    const int sgn_mode = s->mode(m).parity == 0 ? 1 : -1;
    op.parity_ = s->mode(m).parity;
    for (int c = 0; c < s->dim(); ++c) {
        const int r = s->lowered(c, m);
        if (r < 0) continue;
        const long n = s->occ(c, m);
        // amplitude [1 + (-1)^p(mode) (n-1)]_q : [n]_q bosonic, 1 fermionic
        Scalar amp = Scalar::q_bracket(s->registry(), 1 + sgn_mode * (n - 1));
        if (s->koszul_sign(c, m) < 0) amp = -amp;
        if (!amp.is_zero()) op.cols_[c].emplace_back(r, std::move(amp));
    }
    return op;
}

FockOperator FockOperator::annihilator_linear(SpacePtr s, int i, int a) {
    FockOperator op(s);
    const int m = s->mode_index(i, a);
    if (m < 0) throw error("annihilator_linear: mode absent from space");
    const int sgn_mode = s->mode(m).parity == 0 ? 1 : -1;
    op.parity_ = s->mode(m).parity;
    for (int c = 0; c < s->dim(); ++c) {
        const int r = s->lowered(c, m);
        if (r < 0) continue;
        const long n = s->occ(c, m);
        const long amp = s->koszul_sign(c, m) * (1 + sgn_mode * (n - 1));
        if (amp != 0) op.cols_[c].emplace_back(r, Scalar::integer(s->registry(), amp));
    }
    return op;
}

FockOperator FockOperator::number(SpacePtr s, int i, int a) {
    const int m = s->mode_index(i, a);
    if (m < 0) throw error("number: mode absent from space");
    RegistryPtr reg = s->registry();
    const FockSpace* sp = s.get();
    return diagonal(std::move(s),
                    [reg, sp, m](int c) { return Scalar::integer(reg, sp->occ(c, m)); });
}

bool FockOperator::is_zero() const {
    for (const auto& col : cols_)
        if (!col.empty()) return false;
    return true;
}

int FockOperator::raising_bound() const {
    int r = 0;
    for (int c = 0; c < space_->dim(); ++c)
        for (const auto& [row, v] : cols_[c])
            r = std::max(r, space_->bosonic_total(row) - space_->bosonic_total(c));
    return r;
}

Scalar FockOperator::at(int row, int col) const {
    const auto& col_entries = cols_[col];
    auto it = std::lower_bound(col_entries.begin(), col_entries.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != col_entries.end() && it->first == row) return it->second;
    return Scalar::zero(space_->registry());
}

void FockOperator::check_space(const FockOperator& a, const FockOperator& b) {
    if (!a.valid() || !b.valid()) throw error("FockOperator: invalid operand");
    if (a.space_ != b.space_) throw error("FockOperator: mismatched spaces");
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    FockOperator::check_space(a, b);
    if (a.parity_ >= 0 && b.parity_ >= 0 && a.parity_ != b.parity_)
        throw error("FockOperator: sum of operators with different parities");
    FockOperator out(a.space_);
    out.parity_ = a.parity_ >= 0 ? a.parity_ : b.parity_;
    out.headroom_ = std::max(a.headroom_, b.headroom_);
    for (int c = 0; c < a.space_->dim(); ++c) {
        const auto& ca = a.cols_[c];
        const auto& cb = b.cols_[c];
        auto& co = out.cols_[c];
        std::size_t ia = 0, ib = 0;
        while (ia < ca.size() || ib < cb.size()) {
            if (ib == cb.size() || (ia < ca.size() && ca[ia].first < cb[ib].first)) {
                co.push_back(ca[ia++]);
            } else if (ia == ca.size() || cb[ib].first < ca[ia].first) {
                co.push_back(cb[ib++]);
            } else {
                Scalar v = ca[ia].second + cb[ib].second;
                if (!v.is_zero()) co.emplace_back(ca[ia].first, std::move(v));
                ++ia, ++ib;
            }
        }
    }
    if (out.is_zero()) out.parity_ = -1;
    return out;
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) { return a + (-b); }

FockOperator FockOperator::operator-() const { return scaled(-1); }

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    FockOperator::check_space(a, b);
    FockOperator out(a.space_);
    if (a.parity_ < 0 || b.parity_ < 0)
        out.parity_ = -1;
    else
        out.parity_ = (a.parity_ + b.parity_) % 2;
    out.headroom_ = std::max(b.headroom_, a.headroom_ + std::max(b.raising_bound(), 0));
    for (int c = 0; c < a.space_->dim(); ++c) {
        std::map<int, Scalar> acc;
        for (const auto& [k, v] : b.cols_[c])
            for (const auto& [r, w] : a.cols_[k]) {
                Scalar term = w * v;
                auto it = acc.find(r);
                if (it == acc.end())
                    acc.emplace(r, std::move(term));
                else
                    it->second += term;
            }
        for (auto& [r, v] : acc)
            if (!v.is_zero()) out.cols_[c].emplace_back(r, std::move(v));
    }
    if (out.is_zero()) out.parity_ = -1;
    return out;
}

FockOperator FockOperator::scaled(const Scalar& f) const {
    FockOperator out(space_);
    if (f.is_zero()) return out;
    out.parity_ = parity_;
    out.headroom_ = headroom_;
    for (int c = 0; c < space_->dim(); ++c)
        for (const auto& [r, v] : cols_[c]) {
            Scalar w = v * f;
            if (!w.is_zero()) out.cols_[c].emplace_back(r, std::move(w));
        }
    if (out.is_zero()) out.parity_ = -1;
    return out;
}

FockOperator FockOperator::scaled(long k) const {
    return scaled(Scalar::integer(space_->registry(), k));
}

FockOperator FockOperator::graded_commutator(const FockOperator& a, const FockOperator& b,
                                             const Scalar& qf) {
    check_space(a, b);
    const bool both_odd = a.parity_ == 1 && b.parity_ == 1;
    FockOperator ba = (b * a).scaled(qf);
    return both_odd ? a * b + ba : a * b - ba;
}

FockOperator FockOperator::graded_commutator(const FockOperator& a, const FockOperator& b) {
    return graded_commutator(a, b, Scalar::one(a.space_->registry()));
}

bool FockOperator::vanishes_on(const std::vector<int>& cols, std::string* where) const {
    for (int c : cols)
        for (const auto& [r, v] : cols_[c]) {
            if (v.is_zero()) continue;
            if (where) {
                std::ostringstream os;
                os << space_->state_str(c) << " -> " << space_->state_str(r)
                   << " : " << v.str();
                *where = os.str();
            }
            return false;
        }
    return true;
}

double FockOperator::max_abs_on(const std::vector<int>& cols) const {
    double m = 0.0;
    for (int c : cols)
        for (const auto& [r, v] : cols_[c]) m = std::max(m, std::abs(v.float_value()));
    return m;
}

bool FockOperator::equal_on(const FockOperator& a, const FockOperator& b,
                            const std::vector<int>& cols, std::string* where) {
    check_space(a, b);
    for (int c : cols) {
        const auto& ca = a.cols_[c];
        const auto& cb = b.cols_[c];
        std::size_t ia = 0, ib = 0;
        while (ia < ca.size() || ib < cb.size()) {
            int row;
            bool same;
            if (ib == cb.size() || (ia < ca.size() && ca[ia].first < cb[ib].first)) {
                row = ca[ia].first;
                same = ca[ia].second.is_zero();
                ++ia;
            } else if (ia == ca.size() || cb[ib].first < ca[ia].first) {
                row = cb[ib].first;
                same = cb[ib].second.is_zero();
                ++ib;
            } else {
                row = ca[ia].first;
                same = ca[ia].second == cb[ib].second;
                ++ia, ++ib;
            }
            if (!same) {
                if (where) {
                    std::ostringstream os;
                    os << a.space_->state_str(c) << " -> " << a.space_->state_str(row)
                       << " : " << a.at(row, c).str() << " vs " << b.at(row, c).str();
                    *where = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

double FockOperator::max_abs_diff_on(const FockOperator& a, const FockOperator& b,
                                     const std::vector<int>& cols) {
    check_space(a, b);
    double m = 0.0;
    for (int c : cols) {
        for (const auto& [r, v] : a.cols_[c])
            m = std::max(m, std::abs(v.float_value() - b.at(r, c).float_value()));
        for (const auto& [r, v] : b.cols_[c])
            m = std::max(m, std::abs(a.at(r, c).float_value() - v.float_value()));
    }
    return m;
}

FockOperator& FockOperator::bump_headroom(int h) {
    headroom_ = std::max(headroom_, h);
    return *this;
}

FockOperator FockOperator::reinterpreted(SpacePtr target) const {
    if (!space_ || !target) throw std::invalid_argument("reinterpreted: null space");
    if (target->nmodes() != space_->nmodes() || target->dim() != space_->dim() ||
        target->bosonic_cutoff() != space_->bosonic_cutoff())
        throw std::invalid_argument("reinterpreted: spaces differ in shape");
    for (int m = 0; m < space_->nmodes(); ++m) {
        const Mode& a = space_->mode(m);
        const Mode& b = target->mode(m);
        if (a.cap != b.cap || a.parity != b.parity)
            throw std::invalid_argument("reinterpreted: mode data mismatch at position " +
                                        std::to_string(m));
    }
    FockOperator out(target);
    out.parity_ = parity_;
    out.headroom_ = headroom_;
    out.cols_ = cols_;
    return out;
}

FockOperator FockOperator::entrywise(const std::function<Scalar(const Scalar&)>& fn) const {
    FockOperator out(space_);
    out.parity_ = parity_;
    out.headroom_ = headroom_;
    for (int col = 0; col < space_->dim(); ++col)
        for (const auto& [row, v] : cols_[col]) {
            Scalar w = fn(v);
            if (!w.is_zero()) out.cols_[col].emplace_back(row, std::move(w));
        }
    return out;
}

}  // namespace qgl
