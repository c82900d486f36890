// scalar.cpp — exact Laurent-polynomial ring localized at s = q - q^-1,
// plus the float evaluation backend.
#include "qgl/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qgl {

// ---------------------------------------------------------------------------
// VariableRegistry
// ---------------------------------------------------------------------------

VariableRegistry::VariableRegistry(Backend backend) : backend_(backend) {
    add("q");
}

std::shared_ptr<VariableRegistry> VariableRegistry::standard(Backend backend) {
    auto reg = std::make_shared<VariableRegistry>(backend);
    reg->add("t");
    reg->add("m");
    reg->add("x");
    reg->add("y");
    reg->add("u");
    reg->add("v");
    return reg;
}

int VariableRegistry::add(const std::string& name) {
    if (index_of(name) >= 0) throw error("variable '" + name + "' already registered");
    if (size() >= kMaxVars) throw error("variable registry full");
    names_.push_back(name);
    values_.push_back({1.0, 0.0});
    return size() - 1;
}

int VariableRegistry::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

const std::string& VariableRegistry::name(int slot) const {
    if (slot < 0 || slot >= size()) throw error("variable slot out of range");
    return names_[slot];
}

void VariableRegistry::assign(const std::string& name, std::complex<double> value) {
    if (backend_ != Backend::Float) throw error("assign() requires the float backend");
    int slot = index_of(name);
    if (slot < 0) throw error("assign(): unknown variable '" + name + "'");
    values_[slot] = value;
}

std::complex<double> VariableRegistry::value(int slot) const {
    if (slot < 0 || slot >= size()) throw error("variable slot out of range");
    return values_[slot];
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

namespace {

std::complex<double> ipow(std::complex<double> v, long e) {
    if (e < 0) return 1.0 / ipow(v, -e);
    std::complex<double> acc{1.0, 0.0};
    while (e > 0) {
        if (e & 1) acc *= v;
        v *= v;
        e >>= 1;
    }
    return acc;
}

// Exact division of a Laurent polynomial in q (grouped coefficient form) by
// q^2 - 1, working top-down within the original support; returns false when
// the remainder is nonzero.
bool divide_dense_by_q2m1(std::map<int, mpq_class>& f) {
    if (f.empty()) return true;
    int lo = f.begin()->first;
    int hi = f.rbegin()->first;
    if (hi - lo < 2) return false;
    std::map<int, mpq_class> g;
    std::map<int, mpq_class> r = f;
    for (int d = hi; d >= lo + 2; --d) {
        auto it = r.find(d);
        if (it == r.end() || it->second == 0) continue;
        mpq_class c = it->second;
        g[d - 2] += c;
        r.erase(it);
        r[d - 2] += c;
        if (r[d - 2] == 0) r.erase(d - 2);
    }
    for (auto& [d, c] : r)
        if (c != 0) return false;
    // prune zeros from the quotient
    for (auto it = g.begin(); it != g.end();)
        it = (it->second == 0) ? g.erase(it) : std::next(it);
    f = std::move(g);
    return true;
}

}  // namespace

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (!a.reg_ || !b.reg_) throw error("operation on default-constructed Scalar");
    if (a.reg_ != b.reg_) throw error("Scalar registry mismatch");
}

// Attempt one exact division of the whole term map by s = q - q^-1.
// s = q^-1 (q^2 - 1), so P/s = (P * q) / (q^2 - 1).
static bool divide_terms_by_s(std::map<Expo, mpq_class>& terms) {
    // group by the non-q part of the exponent vector
    std::map<Expo, std::map<int, mpq_class>> groups;
    for (auto& [e, c] : terms) {
        Expo key = e;
        int qe = key[VariableRegistry::kQ];
        key[VariableRegistry::kQ] = 0;
        groups[key][qe + 1] += c;  // the (* q) shift
    }
    std::map<Expo, mpq_class> out;
    for (auto& [key, dense] : groups) {
        if (!divide_dense_by_q2m1(dense)) return false;
        for (auto& [d, c] : dense) {
            if (c == 0) continue;
            Expo e = key;
            e[VariableRegistry::kQ] = static_cast<int16_t>(d);
            out[e] += c;
        }
    }
    terms = std::move(out);
    return true;
}

void Scalar::normalize() {
    if (!reg_ || reg_->backend() == Backend::Float) return;
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    if (terms_.empty()) {
        spow_ = 0;
        return;
    }
    while (spow_ > 0) {
        auto copy = terms_;
        if (!divide_terms_by_s(copy)) break;
        terms_ = std::move(copy);
        --spow_;
    }
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

Scalar Scalar::zero(RegistryPtr reg) { return Scalar(std::move(reg)); }

Scalar Scalar::one(RegistryPtr reg) { return integer(std::move(reg), 1); }

Scalar Scalar::integer(RegistryPtr reg, long v) { return rational(std::move(reg), mpq_class(v)); }

Scalar Scalar::rational(RegistryPtr reg, const mpq_class& v) {
    Scalar s(std::move(reg));
    if (s.reg_->backend() == Backend::Float) {
        s.fval_ = v.get_d();
        return s;
    }
    if (v != 0) s.terms_[Expo{}] = v;
    return s;
}

Scalar Scalar::monomial(RegistryPtr reg, const mpq_class& coeff,
                        std::initializer_list<std::pair<int, int>> powers) {
    Scalar s(std::move(reg));
    if (s.reg_->backend() == Backend::Float) {
        std::complex<double> v = coeff.get_d();
        for (auto [slot, e] : powers) v *= ipow(s.reg_->value(slot), e);
        s.fval_ = v;
        return s;
    }
    if (coeff == 0) return s;
    Expo e{};
    for (auto [slot, p] : powers) {
        if (slot < 0 || slot >= s.reg_->size()) throw error("monomial: slot out of range");
        e[slot] = static_cast<int16_t>(e[slot] + p);
    }
    s.terms_[e] = coeff;
    return s;
}

Scalar Scalar::var_power(RegistryPtr reg, int slot, int e) {
    return monomial(std::move(reg), 1, {{slot, e}});
}

Scalar Scalar::q_power(RegistryPtr reg, long e) {
    return monomial(std::move(reg), 1, {{VariableRegistry::kQ, static_cast<int>(e)}});
}

Scalar Scalar::q_weight_power(RegistryPtr reg, Weight w) {
    if (w.mcoeff == 0) return q_power(std::move(reg), w.c0);
    if (reg->index_of("t") < 0)
        throw error("q_weight_power: symbolic weight requires the t variable");
    return monomial(std::move(reg), 1,
                    {{VariableRegistry::kQ, static_cast<int>(w.c0)},
                     {VariableRegistry::kT, static_cast<int>(-w.mcoeff)}});
}

Scalar Scalar::weight_poly(RegistryPtr reg, Weight w) {
    Scalar s = integer(reg, w.c0);
    if (w.mcoeff != 0) {
        if (reg->index_of("m") < 0)
            throw error("weight_poly: symbolic weight requires the m variable");
        s += monomial(std::move(reg), mpq_class(w.mcoeff), {{VariableRegistry::kM, 1}});
    }
    return s;
}

Scalar Scalar::q_bracket(RegistryPtr reg, long n) {
    // [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n);  [-n]_q = -[n]_q, [0]_q = 0.
    Scalar s(reg);
    if (reg->backend() == Backend::Float) {
        std::complex<double> q = reg->value(VariableRegistry::kQ);
        s.fval_ = (ipow(q, n) - ipow(q, -n)) / (q - 1.0 / q);
        return s;
    }
    long sign = n < 0 ? -1 : 1;
    long a = n < 0 ? -n : n;
    for (long j = 0; j < a; ++j) {
        Expo e{};
        e[VariableRegistry::kQ] = static_cast<int16_t>(a - 1 - 2 * j);
        s.terms_[e] += sign;
    }
    s.normalize();
    return s;
}

Scalar Scalar::q_bracket_weight(RegistryPtr reg, Weight w) {
    if (w.mcoeff == 0) return q_bracket(std::move(reg), w.c0);
    Scalar s = q_weight_power(reg, w) - q_weight_power(reg, -w);
    if (reg->backend() == Backend::Float) {
        std::complex<double> q = reg->value(VariableRegistry::kQ);
        s.fval_ /= (q - 1.0 / q);
        return s;
    }
    s.spow_ += 1;
    s.normalize();
    return s;
}

Scalar Scalar::s_poly(RegistryPtr reg) {
    Scalar lead = q_power(reg, 1);
    return lead - q_power(std::move(reg), -1);
}

Scalar Scalar::s_inverse(RegistryPtr reg) {
    Scalar s = one(std::move(reg));
    if (s.reg_->backend() == Backend::Float) {
        std::complex<double> q = s.reg_->value(VariableRegistry::kQ);
        s.fval_ = 1.0 / (q - 1.0 / q);
        return s;
    }
    s.spow_ = 1;
    return s;
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r += b;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r -= b;
    return r;
}

// Multiply a raw term map by (q - q^-1)^times.
static std::map<Expo, mpq_class> lift_by_s(std::map<Expo, mpq_class> terms, int times) {
    for (int i = 0; i < times; ++i) {
        std::map<Expo, mpq_class> out;
        for (const auto& [e, c] : terms) {
            Expo up = e, down = e;
            up[VariableRegistry::kQ] = static_cast<int16_t>(up[VariableRegistry::kQ] + 1);
            down[VariableRegistry::kQ] = static_cast<int16_t>(down[VariableRegistry::kQ] - 1);
            out[up] += c;
            out[down] -= c;
        }
        terms = std::move(out);
    }
    return terms;
}

Scalar& Scalar::operator+=(const Scalar& b) {
    check_same(*this, b);
    if (reg_->backend() == Backend::Float) {
        fval_ += b.fval_;
        return *this;
    }
    // bring both sides over the common denominator s^max
    int k = std::max(spow_, b.spow_);
    auto lhs = lift_by_s(std::move(terms_), k - spow_);
    auto rhs = lift_by_s(b.terms_, k - b.spow_);
    for (auto& [e, c] : rhs) lhs[e] += c;
    terms_ = std::move(lhs);
    spow_ = k;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (reg_ && reg_->backend() == Backend::Float) {
        r.fval_ = -fval_;
        return r;
    }
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r *= b;
    return r;
}

Scalar& Scalar::operator*=(const Scalar& b) {
    check_same(*this, b);
    if (reg_->backend() == Backend::Float) {
        fval_ *= b.fval_;
        return *this;
    }
    std::map<Expo, mpq_class> out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Expo e;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = static_cast<int16_t>(ea[i] + eb[i]);
            out[e] += ca * cb;
        }
    }
    terms_ = std::move(out);
    spow_ += b.spow_;
    normalize();
    return *this;
}

Scalar Scalar::scaled(long k) const {
    Scalar r = *this;
    if (reg_ && reg_->backend() == Backend::Float) {
        r.fval_ *= static_cast<double>(k);
        return r;
    }
    for (auto& [e, c] : r.terms_) c *= k;
    r.normalize();
    return r;
}

Scalar operator*(long k, const Scalar& a) { return a.scaled(k); }

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    if (a.reg_->backend() == Backend::Float) return a.fval_ == b.fval_;
    return a.spow_ == b.spow_ && a.terms_ == b.terms_;
}

bool Scalar::is_zero() const {
    if (!reg_) throw error("is_zero() on default-constructed Scalar");
    if (reg_->backend() == Backend::Float) return fval_ == std::complex<double>{0.0, 0.0};
    return terms_.empty();
}

bool Scalar::is_one() const {
    if (reg_ && reg_->backend() == Backend::Float) return fval_ == std::complex<double>{1.0, 0.0};
    if (spow_ != 0 || terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return e == Expo{} && c == 1;
}

bool Scalar::is_float() const { return reg_ && reg_->backend() == Backend::Float; }

// ---------------------------------------------------------------------------
// inspection
// ---------------------------------------------------------------------------

std::pair<int, int> Scalar::degree_range(int slot) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first[slot], hi = lo;
    for (const auto& [e, c] : terms_) {
        lo = std::min<int>(lo, e[slot]);
        hi = std::max<int>(hi, e[slot]);
    }
    return {lo, hi};
}

Scalar Scalar::substituted(int var, const std::vector<std::pair<int, int>>& powers) const {
    if (!reg_ || reg_->backend() == Backend::Float)
        throw error("substituted() requires the exact backend");
    if (var == VariableRegistry::kQ)
        throw error("substituted() cannot rewrite the deformation parameter");
    Scalar r(reg_);
    r.spow_ = spow_;
    for (const auto& [e, c] : terms_) {
        const int deg = e[var];
        Expo e2 = e;
        e2[var] = 0;
        for (const auto& [slot, p] : powers) e2[slot] = static_cast<int16_t>(e2[slot] + deg * p);
        r.terms_[e2] += c;
    }
    r.normalize();
    return r;
}

Scalar Scalar::coefficient_of(int slot, int deg) const {
    Scalar r(reg_);
    if (reg_->backend() == Backend::Float)
        throw error("coefficient_of() requires the exact backend");
    for (const auto& [e, c] : terms_) {
        if (e[slot] != deg) continue;
        Expo e2 = e;
        e2[slot] = 0;
        r.terms_[e2] += c;
    }
    r.spow_ = spow_;
    r.normalize();
    return r;
}

static void render_term(std::ostream& os, const RegistryPtr& reg, const Expo& e,
                        const mpq_class& c, bool leading) {
    mpq_class a = c;
    if (!leading) {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    } else if (a < 0) {
        os << "-";
        a = -a;
    }
    bool any_var = false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) any_var = true;
    if (a != 1 || !any_var) {
        os << a.get_str();
        if (any_var) os << "*";
    }
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << reg->name(static_cast<int>(i));
        if (e[i] != 1) os << "^" << e[i];
    }
}

std::string Scalar::str() const {
    if (!reg_) return "<null>";
    std::ostringstream os;
    if (reg_->backend() == Backend::Float) {
        os << fval_;
        return os.str();
    }
    if (terms_.empty()) return "0";
    if (spow_ > 0) os << "(";
    bool leading = true;
    for (const auto& [e, c] : terms_) {
        render_term(os, reg_, e, c, leading);
        leading = false;
    }
    if (spow_ > 0) {
        os << ")/s";
        if (spow_ > 1) os << "^" << spow_;
    }
    return os.str();
}

std::complex<double> Scalar::evaluate(const std::vector<std::complex<double>>& vals) const {
    if (reg_->backend() == Backend::Float) return fval_;
    if (static_cast<int>(vals.size()) < reg_->size())
        throw error("evaluate(): assignment shorter than registry");
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= ipow(vals[i], e[i]);
        acc += t;
    }
    if (spow_ != 0) {
        std::complex<double> q = vals[VariableRegistry::kQ];
        acc /= ipow(q - 1.0 / q, spow_);
    }
    return acc;
}

std::complex<double> Scalar::float_value() const {
    if (!is_float()) throw error("float_value() requires the float backend");
    return fval_;
}

// ---------------------------------------------------------------------------
// limits
// ---------------------------------------------------------------------------

Scalar::LimitOutcome Scalar::limit(int slot, LimitDir dir) const {
    LimitOutcome out;
    if (reg_->backend() == Backend::Float)
        throw error("limit() requires the exact backend");
    if (slot == VariableRegistry::kQ)
        throw error("limit() in the deformation parameter itself is not supported");
    Scalar v(reg_);
    v.spow_ = spow_;
    for (const auto& [e, c] : terms_) {
        int d = e[slot];
        bool divergent = (dir == LimitDir::VarToZero) ? (d < 0) : (d > 0);
        if (divergent) {
            Scalar bad(reg_);
            bad.terms_[e] = c;
            bad.spow_ = spow_;
            out.divergent_term = bad.str();
            return out;
        }
        if (d == 0) v.terms_[e] = c;
    }
    v.normalize();
    out.ok = true;
    out.value = std::move(v);
    return out;
}

}  // namespace qgl
