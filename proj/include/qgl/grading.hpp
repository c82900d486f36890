// grading.hpp — Z2 grading profiles of gl(M|N) index sets, contraction
// subsets, and the (affine) Cartan matrix.
#pragma once

#include <string>
#include <vector>

#include "qgl/error.hpp"

namespace qgl {

inline long theta(bool cond) { return cond ? 1 : 0; }

// Parity assignment p : {1..M+N} -> {0,1} with M bosonic (0) and N
// fermionic (1) indices.  All indices below are 1-based, matching the
// algebraic conventions used throughout.
class GradingProfile {
public:
    GradingProfile(int M, int N, std::vector<int> parities);

    // 0^M 1^N — the distinguished grading.
    static GradingProfile distinguished(int M, int N);
    // Pattern string of '0'/'1' characters, e.g. "010".
    static GradingProfile from_pattern(const std::string& pattern);

    int M() const { return M_; }
    int N() const { return N_; }
    int K() const { return M_ + N_; }  // M + N

    // p(i) for 1 <= i <= K; indices wrap modulo K (p(K+1) = p(1)).
    int parity(int i) const;
    // p_i = (-1)^p(i), wrapped the same way.
    long sign(int i) const;
    // Sum of signs p_[b,c] = sum_{j=b}^{c} p_j (0 when b > c; no wrap).
    long sign_sum(int b, int c) const;
    // Sum of parities over [b,c] (0 when b > c; no wrap).
    int parity_sum(int b, int c) const;

    std::string pattern() const;
    bool operator==(const GradingProfile& o) const { return p_ == o.p_; }

private:
    int M_, N_;
    std::vector<int> p_;  // p_[i-1] = p(i)
};

// Contraction subset: I = {a+1, ..., M+N}, Ibar = {1, ..., a}, 0 <= a <= K.
// a = 0 makes I the whole index set (no contraction).
struct SubsetI {
    int a = 0;
    int K = 0;

    SubsetI() = default;
    SubsetI(int split, int total) : a(split), K(total) {
        if (split < 0 || split > total) throw error("SubsetI: split out of range");
    }
    bool in_I(int i) const { return i > a && i <= K; }
    bool in_Ibar(int i) const { return i >= 1 && i <= a; }
};

// Affine Cartan matrix a_ij = (p_i + p_{i+1}) d_ij - p_{i+1} d_{i,j-1}
// - p_i d_{i,j+1}, indices modulo K.  Every row sums to zero.
std::vector<std::vector<long>> cartan_matrix(const GradingProfile& g);

// All (M+N choose M) parity patterns in lexicographic order; the
// distinguished grading comes first.
std::vector<GradingProfile> enumerate_gradings(int M, int N);

}  // namespace qgl
