// fock.hpp — truncated graded Fock spaces and exact sparse operators on them.
//
// A FockSpace is the span of occupation vectors over an ordered list of
// oscillator modes (i,a); fermionic modes (odd parity) cap at 1, bosonic
// modes at the configured cutoff.  Basis states are enumerated mixed-radix
// little-endian in the mode order (first mode varies fastest; index 0 is
// the vacuum).
//
// Truncation bookkeeping: every operator carries
//   * a recomputed bosonic raising bound r — the largest increase of total
//     bosonic occupation across its stored entries, and
//   * a headroom certificate h — columns whose total bosonic occupation is
//     at most (cutoff - h) hold entries identical to the untruncated module.
// h composes as: creators 1 (bosonic), diagonals/annihilators 0,
// max on sums, and max(h_b, h_a + max(r_b,0)) on products a*b.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qgl/grading.hpp"
#include "qgl/scalar.hpp"

namespace qgl {

struct Mode {
    int i = 0, a = 0;   // 1-based pair labels
    int parity = 0;     // p(i)+p(a) mod 2
    int cap = 0;        // maximal occupation stored
};

class FockSpace {
public:
    FockSpace(RegistryPtr reg, std::vector<Mode> modes, int bosonic_cutoff);

    // All pairs (i,a), 1 <= i < a <= K, ordered lexicographically.
    static std::vector<Mode> full_modes(const GradingProfile& g, int cutoff);
    // Subset of the full set selected by a predicate on (i,a).
    static std::vector<Mode> selected_modes(const GradingProfile& g, int cutoff,
                                            const std::function<bool(int, int)>& keep);
    // Arbitrary ordered pair list (used by the one-row and exchange realizations).
    static std::vector<Mode> listed_modes(const GradingProfile& g, int cutoff,
                                          const std::vector<std::pair<int, int>>& pairs);

    int dim() const { return dim_; }
    int nmodes() const { return static_cast<int>(modes_.size()); }
    const Mode& mode(int m) const { return modes_[m]; }
    int mode_index(int i, int a) const;  // -1 when absent
    int bosonic_cutoff() const { return cutoff_; }
    bool has_bosonic_mode() const { return has_bosonic_; }
    RegistryPtr registry() const { return reg_; }

    int occ(int state, int m) const;
    // State index after raising/lowering mode m, or -1 past a cap / below 0.
    int raised(int state, int m) const;
    int lowered(int state, int m) const;
    int state_parity(int state) const { return state_parity_[state]; }
    int bosonic_total(int state) const { return bos_total_[state]; }
    int vacuum() const { return 0; }

    // (-1)^{p(m) * sum_{m'<m} p(m') n_{m'}} — the sign produced by moving a
    // mode-m ladder operator through the creation operators of the earlier
    // modes in the ordered basis product.
    long koszul_sign(int state, int m) const;

    // Indices of basis states with total bosonic occupation <= cutoff - headroom
    // (all states when the mode set is purely fermionic).
    std::vector<int> admissible_block(int headroom) const;

    std::string state_str(int state) const;

private:
    RegistryPtr reg_;
    std::vector<Mode> modes_;
    int cutoff_;
    bool has_bosonic_ = false;
    std::vector<int> stride_;
    int dim_ = 0;
    std::vector<signed char> state_parity_;
    std::vector<short> bos_total_;
};

using SpacePtr = std::shared_ptr<const FockSpace>;

class FockOperator {
public:
    FockOperator() = default;  // invalid until assigned

    static FockOperator zero(SpacePtr s);
    static FockOperator identity(SpacePtr s);
    static FockOperator diagonal(SpacePtr s, const std::function<Scalar(int)>& entry);
    static FockOperator creator(SpacePtr s, int i, int a);
    // q-deformed amplitude [1 + (-1)^p(mode) (n-1)]_q
    static FockOperator annihilator(SpacePtr s, int i, int a);
    // undeformed amplitude 1 + (-1)^p(mode) (n-1), the q->1 oscillator
    static FockOperator annihilator_linear(SpacePtr s, int i, int a);
    static FockOperator number(SpacePtr s, int i, int a);

    SpacePtr space() const { return space_; }
    bool valid() const { return space_ != nullptr; }
    bool is_zero() const;
    // Parity of a homogeneous operator; zero operators match anything.
    int parity() const { return parity_; }
    int headroom() const { return headroom_; }
    // Recomputed from stored entries: max bosonic-occupation gain, >= 0.
    int raising_bound() const;

    Scalar at(int row, int col) const;
    const std::vector<std::pair<int, Scalar>>& column(int col) const { return cols_[col]; }

    friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    FockOperator operator-() const;
    FockOperator scaled(const Scalar& f) const;
    FockOperator scaled(long k) const;

    // Re-wraps the operator over another space whose positional mode data
    // (count, caps, parities, cutoff) coincide with this one's, so that the
    // matrix entries carry over verbatim.  Used to transport an operator
    // between spaces that differ only in how their modes are labelled.
    FockOperator reinterpreted(SpacePtr target) const;

    // Maps every stored entry through fn; entries that become zero are
    // dropped.  Parity and headroom are kept (the map must not change the
    // operator's support pattern guarantees).
    FockOperator entrywise(const std::function<Scalar(const Scalar&)>& fn) const;

    // [A, B]_qf = A B - (-1)^{p(A)p(B)} qf * B A
    static FockOperator graded_commutator(const FockOperator& a, const FockOperator& b,
                                          const Scalar& qf);
    static FockOperator graded_commutator(const FockOperator& a, const FockOperator& b);

    // True when every entry on the given columns vanishes; otherwise fills
    // `where` (if non-null) with the first offending entry.
    bool vanishes_on(const std::vector<int>& cols, std::string* where = nullptr) const;
    // Largest |entry| on the given columns (float backend residual measure).
    double max_abs_on(const std::vector<int>& cols) const;
    // Columns of A and B agree on the given set.
    static bool equal_on(const FockOperator& a, const FockOperator& b,
                         const std::vector<int>& cols, std::string* where = nullptr);
    static double max_abs_diff_on(const FockOperator& a, const FockOperator& b,
                                  const std::vector<int>& cols);

    // Image of the vacuum: list of (state, coefficient).
    std::vector<std::pair<int, Scalar>> vacuum_column() const { return cols_[space_->vacuum()]; }

    // Declares extra headroom demand (used when an operator is known to be a
    // piece of a larger expression, e.g. hand-assembled diagonals).
    FockOperator& bump_headroom(int h);

private:
    SpacePtr space_;
    int parity_ = 0;
    int headroom_ = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> cols_;  // per column, sorted by row

    explicit FockOperator(SpacePtr s);
    static void check_space(const FockOperator& a, const FockOperator& b);
};

}  // namespace qgl
