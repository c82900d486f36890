// scalar.hpp — exact coefficient ring for all symbolic computations.
//
// A Scalar is a multivariate Laurent polynomial over arbitrary-precision
// rationals, localized at s = q - q^-1: the stored value is P / s^k with
// k >= 0 kept minimal by exact division.  The localization is needed because
// several operator families carry literal (q - q^-1)^-1 prefactors; keeping
// the denominator power explicit preserves a canonical form, so equality
// remains a structural comparison.
//
// Variables live in a VariableRegistry with fixed slots:
//   q — deformation parameter (slot 0, always present)
//   t — multiplicative tracker for q^-m in asymptotic limits
//   m — additive symbolic weight entry (degree-1 polynomial variable)
//   x, y — spectral parameters of Lax operators
//   u, v — spectral parameters of the rational (q->1) sector
//
// A registry is either exact or float-backed.  In float mode every Scalar
// collapses to one complex number evaluated at the registry's assignment;
// the same formula code runs unchanged on either backend.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qgl/error.hpp"

namespace qgl {

enum class Backend { Exact, Float };

class VariableRegistry {
public:
    static constexpr int kMaxVars = 8;
    // Fixed slots of the standard registry.
    static constexpr int kQ = 0;
    static constexpr int kT = 1;
    static constexpr int kM = 2;
    static constexpr int kX = 3;
    static constexpr int kY = 4;
    static constexpr int kU = 5;
    static constexpr int kV = 6;

    explicit VariableRegistry(Backend backend = Backend::Exact);

    // Registry with the seven standard variables above.
    static std::shared_ptr<VariableRegistry> standard(Backend backend = Backend::Exact);

    // Registers a new variable; returns its slot. Throws if full or duplicate.
    int add(const std::string& name);
    // Slot of a registered name, or -1.
    int index_of(const std::string& name) const;
    const std::string& name(int slot) const;
    int size() const { return static_cast<int>(names_.size()); }
    Backend backend() const { return backend_; }

    // Float backend only: numeric value assigned to each variable.
    void assign(const std::string& name, std::complex<double> value);
    std::complex<double> value(int slot) const;

private:
    Backend backend_;
    std::vector<std::string> names_;
    std::vector<std::complex<double>> values_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

// Exponent vector of one monomial (dense, fixed arity).
using Expo = std::array<int16_t, VariableRegistry::kMaxVars>;

// value = c0 + mcoeff * m, the general form of one weight entry.
// Weights stay integral; the symbolic part enters formulas either
// multiplicatively (q^w, via the t tracker) or additively (as a polynomial).
struct Weight {
    long c0 = 0;
    long mcoeff = 0;

    Weight() = default;
    Weight(long c) : c0(c) {}
    Weight(long c, long mc) : c0(c), mcoeff(mc) {}

    friend Weight operator+(Weight a, Weight b) { return {a.c0 + b.c0, a.mcoeff + b.mcoeff}; }
    friend Weight operator-(Weight a, Weight b) { return {a.c0 - b.c0, a.mcoeff - b.mcoeff}; }
    friend Weight operator*(long k, Weight w) { return {k * w.c0, k * w.mcoeff}; }
    friend Weight operator-(Weight w) { return {-w.c0, -w.mcoeff}; }
    friend bool operator==(Weight a, Weight b) { return a.c0 == b.c0 && a.mcoeff == b.mcoeff; }
    bool symbolic() const { return mcoeff != 0; }
};

class Scalar {
public:
    Scalar() = default;  // unusable until given a registry

    // --- constructors -----------------------------------------------------
    static Scalar zero(RegistryPtr reg);
    static Scalar one(RegistryPtr reg);
    static Scalar integer(RegistryPtr reg, long v);
    static Scalar rational(RegistryPtr reg, const mpq_class& v);
    // coeff * prod_i var_i^expo_i
    static Scalar monomial(RegistryPtr reg, const mpq_class& coeff,
                           std::initializer_list<std::pair<int, int>> powers);
    static Scalar var_power(RegistryPtr reg, int slot, int e);
    // q^e
    static Scalar q_power(RegistryPtr reg, long e);
    // q^(w.c0) * t^(-w.mcoeff), i.e. q raised to a symbolic weight via t = q^-m.
    static Scalar q_weight_power(RegistryPtr reg, Weight w);
    // w.c0 + w.mcoeff * m as a polynomial in the additive variable m.
    static Scalar weight_poly(RegistryPtr reg, Weight w);
    // [n]_q = (q^n - q^-n)/(q - q^-1), telescoped to a Laurent polynomial.
    static Scalar q_bracket(RegistryPtr reg, long n);
    // [w]_q for a symbolic weight: (q^w - q^-w) / s, kept over the localization.
    static Scalar q_bracket_weight(RegistryPtr reg, Weight w);
    // s = q - q^-1 and s^-1.
    static Scalar s_poly(RegistryPtr reg);
    static Scalar s_inverse(RegistryPtr reg);

    // --- ring operations ---------------------------------------------------
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar scaled(long k) const;
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    bool is_zero() const;
    bool is_one() const;
    RegistryPtr registry() const { return reg_; }
    bool is_float() const;

    // Substitute var ↦ prod_k var_k^{p_k} across all terms (exact backend).
    // Each term's exponent e at `var` is cleared and e*p_k added to slot k;
    // `var` itself may appear among the targets to realize a rescaling.
    Scalar substituted(int var, const std::vector<std::pair<int, int>>& powers) const;

    // --- inspection ---------------------------------------------------------
    // Number of stored monomials (exact backend).
    std::size_t term_count() const { return terms_.size(); }
    int s_power() const { return spow_; }
    // Min/max exponent of a variable across stored terms; (0,0) when absent.
    std::pair<int, int> degree_range(int slot) const;
    // Coefficient (as a Scalar in the remaining variables) of var^e.
    Scalar coefficient_of(int slot, int e) const;

    // Deterministic rendering, canonical across runs.
    std::string str() const;

    // Evaluate an exact scalar at a numeric assignment (one value per slot).
    std::complex<double> evaluate(const std::vector<std::complex<double>>& vals) const;
    // Float-backend payload.
    std::complex<double> float_value() const;

    // --- limits --------------------------------------------------------------
    enum class LimitDir { VarToZero, VarToInfinity };
    // Coefficient-extraction limit in one variable: keep exponent 0 terms,
    // drop the vanishing side, fail if any divergent term survives.
    struct LimitOutcome;
    LimitOutcome limit(int slot, LimitDir dir) const;

private:
    RegistryPtr reg_;
    // exact backend payload: terms_ / s^spow_
    std::map<Expo, mpq_class> terms_;
    int spow_ = 0;
    // float backend payload
    std::complex<double> fval_{0.0, 0.0};

    explicit Scalar(RegistryPtr reg) : reg_(std::move(reg)) {}
    void normalize();
    static void check_same(const Scalar& a, const Scalar& b);
};

struct Scalar::LimitOutcome {
    bool ok = false;
    Scalar value;
    std::string divergent_term;  // non-empty on failure
};

// Convenience: a + b*k etc. live on Scalar; free helpers for readability.
Scalar operator*(long k, const Scalar& a);

}  // namespace qgl
