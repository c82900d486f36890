// grading.cpp — grading profiles and Cartan data.
#include "qgl/grading.hpp"

#include <algorithm>
#include <numeric>

namespace qgl {

GradingProfile::GradingProfile(int M, int N, std::vector<int> parities)
    : M_(M), N_(N), p_(std::move(parities)) {
    if (M < 0 || N < 0 || M + N <= 0) throw error("GradingProfile: need M+N >= 1");
    if (static_cast<int>(p_.size()) != M + N)
        throw error("GradingProfile: parity vector length mismatch");
    int ones = 0;
    for (int v : p_) {
        if (v != 0 && v != 1) throw error("GradingProfile: parities must be 0/1");
        ones += v;
    }
    if (ones != N) throw error("GradingProfile: fermionic count differs from N");
}

GradingProfile GradingProfile::distinguished(int M, int N) {
    std::vector<int> p(M + N, 0);
    std::fill(p.begin() + M, p.end(), 1);
    return GradingProfile(M, N, std::move(p));
}

GradingProfile GradingProfile::from_pattern(const std::string& pattern) {
    std::vector<int> p;
    for (char c : pattern) {
        if (c == '0')
            p.push_back(0);
        else if (c == '1')
            p.push_back(1);
        else
            throw error("GradingProfile: pattern must consist of '0'/'1'");
    }
    int N = std::accumulate(p.begin(), p.end(), 0);
    int M = static_cast<int>(p.size()) - N;
    return GradingProfile(M, N, std::move(p));
}

int GradingProfile::parity(int i) const {
    int k = K();
    int j = ((i - 1) % k + k) % k;  // modular wrap, 1-based
    return p_[j];
}

long GradingProfile::sign(int i) const { return parity(i) == 0 ? 1 : -1; }

long GradingProfile::sign_sum(int b, int c) const {
    long s = 0;
    for (int j = b; j <= c; ++j) s += sign(j);
    return s;
}

int GradingProfile::parity_sum(int b, int c) const {
    int s = 0;
    for (int j = b; j <= c; ++j) s += parity(j);
    return s;
}

std::string GradingProfile::pattern() const {
    std::string s;
    for (int v : p_) s += (v == 0 ? '0' : '1');
    return s;
}

std::vector<std::vector<long>> cartan_matrix(const GradingProfile& g) {
    int K = g.K();
    std::vector<std::vector<long>> a(K, std::vector<long>(K, 0));
    auto dmod = [K](int i, int j) {  // Kronecker delta with indices modulo K
        int ii = ((i - 1) % K + K) % K;
        int jj = ((j - 1) % K + K) % K;
        return ii == jj ? 1 : 0;
    };
    for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j)
            a[i - 1][j - 1] = (g.sign(i) + g.sign(i + 1)) * dmod(i, j) -
                              g.sign(i + 1) * dmod(i, j - 1) - g.sign(i) * dmod(i, j + 1);
    return a;
}

std::vector<GradingProfile> enumerate_gradings(int M, int N) {
    std::vector<int> p(M + N, 0);
    std::fill(p.begin() + M, p.end(), 1);
    std::sort(p.begin(), p.end());  // lexicographically smallest arrangement
    std::vector<GradingProfile> out;
    do {
        out.emplace_back(M, N, p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace qgl
