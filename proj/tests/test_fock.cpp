// Tests for truncated graded Fock spaces and the oscillator operators on them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <vector>

#include "qgl/error.hpp"
#include "qgl/fock.hpp"

using namespace qgl;

namespace {

RegistryPtr reg() {
    static RegistryPtr r = std::make_shared<VariableRegistry>();
    return r;
}

SpacePtr full_space(const std::string& pattern, int cutoff) {
    GradingProfile g = GradingProfile::from_pattern(pattern);
    return std::make_shared<const FockSpace>(reg(), FockSpace::full_modes(g, cutoff), cutoff);
}

// Independent sign oracle: written as the explicit double sum over pair labels
// (k,d), not over positions in the mode list.  A ladder operator on pair (i,a)
// crosses every occupied mode (k,d) with k < i, and every (i,d) with d < a;
// each crossing of odd-by-odd contributes a sign.
long sign_oracle(const FockSpace& sp, const GradingProfile& g, int state, int i, int a) {
    long e = 0;
    const int pia = (g.parity(i) + g.parity(a)) % 2;
    for (int m = 0; m < sp.nmodes(); ++m) {
        const Mode& md = sp.mode(m);
        const bool earlier = (md.i < i) || (md.i == i && md.a < a);
        if (!earlier) continue;
        const int pkd = (g.parity(md.i) + g.parity(md.a)) % 2;
        e += static_cast<long>(sp.occ(state, m)) * pia * pkd;
    }
    return e % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("mode enumeration and state indexing") {
    auto sp = full_space("001", 3);  // one bosonic pair (1,2), fermionic (1,3), (2,3)
    CHECK(sp->nmodes() == 3);
    CHECK(sp->mode(0).i == 1);
    CHECK(sp->mode(0).a == 2);
    CHECK(sp->mode(0).parity == 0);
    CHECK(sp->mode(0).cap == 3);
    CHECK(sp->mode(1).parity == 1);
    CHECK(sp->mode(2).parity == 1);
    CHECK(sp->dim() == 4 * 2 * 2);
    // little-endian: state 5 = 1*1 + 1*4
    CHECK(sp->occ(5, 0) == 1);
    CHECK(sp->occ(5, 1) == 1);
    CHECK(sp->occ(5, 2) == 0);
    CHECK(sp->state_parity(5) == 1);
    CHECK(sp->bosonic_total(5) == 1);
    CHECK(sp->state_str(5) == "|n(1,2)=1 n(1,3)=1>");
    CHECK(sp->state_str(0) == "|0>");
    CHECK(sp->mode_index(2, 3) == 2);
    CHECK(sp->mode_index(3, 2) == -1);

    // gl(0|3): every pair of odd labels forms an even (bosonic) mode
    auto sp3 = full_space("111", 2);
    for (int m = 0; m < sp3->nmodes(); ++m) CHECK(sp3->mode(m).parity == 0);
    CHECK(sp3->dim() == 27);
}

TEST_CASE("admissible block sizes") {
    auto sp = full_space("001", 3);
    CHECK(sp->admissible_block(0).size() == 16);
    CHECK(sp->admissible_block(1).size() == 12);  // n(1,2) <= 2
    CHECK(sp->admissible_block(3).size() == 4);   // n(1,2) = 0
    CHECK(sp->admissible_block(4).empty());

    auto spf = full_space("01", 3);  // single fermionic mode: no truncation at all
    CHECK_FALSE(spf->has_bosonic_mode());
    CHECK(spf->admissible_block(10).size() == 2);
}

TEST_CASE("koszul signs match the pair-label double-sum oracle") {
    for (const std::string pattern : {"01", "001", "011", "0101", "0011"}) {
        GradingProfile g = GradingProfile::from_pattern(pattern);
        auto sp = std::make_shared<const FockSpace>(reg(), FockSpace::full_modes(g, 2), 2);
        for (int s = 0; s < sp->dim(); ++s)
            for (int m = 0; m < sp->nmodes(); ++m) {
                const Mode& md = sp->mode(m);
                CHECK(sp->koszul_sign(s, m) == sign_oracle(*sp, g, s, md.i, md.a));
            }
    }
}

TEST_CASE("frozen creator entries with crossing signs") {
    // gl(1|2), pattern 011: modes (1,2) odd, (1,3) odd, (2,3) even.
    auto sp = full_space("011", 2);
    REQUIRE(sp->dim() == 2 * 2 * 3);
    auto cd13 = FockOperator::creator(sp, 1, 3);
    CHECK(cd13.parity() == 1);
    CHECK(cd13.headroom() == 0);
    // on vacuum: +|n13=1>
    CHECK(cd13.at(2, 0) == Scalar::one(reg()));
    // on |n12=1>: crosses the occupied odd mode (1,2): -|n12=1 n13=1>
    CHECK(cd13.at(3, 1) == Scalar::integer(reg(), -1));
    // double fermionic occupation is annihilated, not truncated
    CHECK(cd13.at(2, 2) == Scalar::zero(reg()));
    CHECK(cd13.column(2).empty());

    auto cd23 = FockOperator::creator(sp, 2, 3);
    CHECK(cd23.parity() == 0);
    CHECK(cd23.headroom() == 1);
    CHECK(cd23.raising_bound() == 1);
    // bosonic creator keeps amplitude 1: |n23=1> -> |n23=2>
    CHECK(cd23.at(8, 4) == Scalar::one(reg()));
    // top of the ladder is truncated
    CHECK(cd23.column(8).empty());

    // annihilator carries the q-bracket of the departing occupation
    auto c23 = FockOperator::annihilator(sp, 2, 3);
    CHECK(c23.headroom() == 0);
    CHECK(c23.raising_bound() == 0);
    CHECK(c23.at(4, 8) == Scalar::q_bracket(reg(), 2));
    CHECK(c23.at(0, 4) == Scalar::one(reg()));
}

TEST_CASE("ordered creator monomials rebuild every basis vector with coefficient one") {
    for (const std::string pattern : {"011", "0101"}) {
        auto sp = full_space(pattern, 2);
        for (int s = 0; s < sp->dim(); ++s) {
            // rightmost factor of the ordered product acts first
            FockOperator word = FockOperator::identity(sp);
            for (int m = 0; m < sp->nmodes(); ++m) {
                const Mode& md = sp->mode(m);
                for (int k = 0; k < sp->occ(s, m); ++k)
                    word = word * FockOperator::creator(sp, md.i, md.a);
            }
            auto img = word.column(sp->vacuum());
            REQUIRE(img.size() == 1);
            CHECK(img[0].first == s);
            CHECK(img[0].second == Scalar::one(reg()));
        }
    }
}

TEST_CASE("oscillator relations hold on the certified block") {
    for (const std::string pattern : {"00", "01", "10", "11", "001", "010", "011", "110"}) {
        CAPTURE(pattern);
        GradingProfile g = GradingProfile::from_pattern(pattern);
        auto sp = full_space(pattern, 3);
        const int K = g.K();
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= K; ++i)
            for (int a = i + 1; a <= K; ++a) pairs.emplace_back(i, a);

        for (auto [i, a] : pairs) {
            auto c = FockOperator::annihilator(sp, i, a);
            auto cd = FockOperator::creator(sp, i, a);
            auto n = FockOperator::number(sp, i, a);
            const long pi = g.sign(i);
            const long pa = g.sign(a);

            // [c, cd]_{q^{±pa}} = q^{∓ pi n}, both sign choices
            for (int s : {+1, -1}) {
                auto lhs = FockOperator::graded_commutator(c, cd, Scalar::q_power(reg(), s * pa));
                auto rhs = FockOperator::diagonal(sp, [&](int st) {
                    const int m = sp->mode_index(i, a);
                    return Scalar::q_power(reg(), -s * pi * sp->occ(st, m));
                });
                auto diff = lhs - rhs;
                // bosonic ladder pair costs one unit of headroom; fermionic none
                CHECK(diff.headroom() == (sp->mode(sp->mode_index(i, a)).parity == 0 ? 1 : 0));
                std::string where;
                const bool ok = diff.vanishes_on(sp->admissible_block(diff.headroom()), &where);
                CAPTURE(i); CAPTURE(a); CAPTURE(s); CAPTURE(where);
                CHECK(ok);
            }

            // cd c = [n]_q  and  c cd = [1 + (-1)^p(mode) n]_q on the certified block
            const int m = sp->mode_index(i, a);
            const int sgn = sp->mode(m).parity == 0 ? 1 : -1;
            auto numq = FockOperator::diagonal(
                sp, [&](int st) { return Scalar::q_bracket(reg(), sp->occ(st, m)); });
            CHECK((cd * c - numq).vanishes_on(sp->admissible_block(1)));
            auto occq = FockOperator::diagonal(sp, [&](int st) {
                return Scalar::q_bracket(reg(), 1 + sgn * sp->occ(st, m));
            });
            CHECK((c * cd - occq).vanishes_on(sp->admissible_block(1)));

            // [n, cd] = cd, [n, c] = -c (exact, no headroom needed)
            CHECK((n * cd - cd * n - cd).is_zero());
            CHECK((n * c - c * n + c).is_zero());
        }

        // distinct pairs (anti)commute: [c_ia, c_jb] = [c_ia, cd_jb] = 0
        for (auto [i, a] : pairs)
            for (auto [j, b] : pairs) {
                if (i == j && a == b) continue;
                auto cia = FockOperator::annihilator(sp, i, a);
                auto cjb = FockOperator::annihilator(sp, j, b);
                auto cdjb = FockOperator::creator(sp, j, b);
                CHECK(FockOperator::graded_commutator(cia, cjb).is_zero());
                auto x = FockOperator::graded_commutator(cia, cdjb);
                CHECK(x.vanishes_on(sp->admissible_block(x.headroom())));
            }
    }
}

TEST_CASE("relations fail outside the certified block for bosonic modes") {
    auto sp = full_space("00", 3);
    auto c = FockOperator::annihilator(sp, 1, 2);
    auto cd = FockOperator::creator(sp, 1, 2);
    auto lhs = FockOperator::graded_commutator(c, cd, Scalar::q_power(reg(), 1));
    auto rhs = FockOperator::diagonal(
        sp, [&](int st) { return Scalar::q_power(reg(), -sp->occ(st, 0)); });
    auto diff = lhs - rhs;
    // the top rung n=3 sees the truncated creator: the defect must be visible
    std::string where;
    CHECK_FALSE(diff.vanishes_on({3}, &where));
    CHECK(where == "|n(1,2)=3> -> |n(1,2)=3> : -q^-3 - q^-1 - q - q^3");
}

TEST_CASE("headroom certificates compose") {
    auto sp = full_space("00", 3);
    auto cd = FockOperator::creator(sp, 1, 2);
    auto c = FockOperator::annihilator(sp, 1, 2);
    CHECK((cd * cd).headroom() == 2);
    CHECK((cd * cd).raising_bound() == 2);
    CHECK((c * cd).headroom() == 1);
    CHECK((cd * c).headroom() == 1);
    CHECK((cd * c * cd).headroom() == 2);
    CHECK((cd + cd * c * cd).headroom() == 2);
    auto z = FockOperator::zero(sp);
    CHECK(z.is_zero());
    CHECK((z + cd).headroom() == 1);
    CHECK((cd.scaled(Scalar::q_power(reg(), 5))).headroom() == 1);
}

TEST_CASE("parity discipline") {
    auto sp = full_space("011", 2);
    auto even = FockOperator::creator(sp, 2, 3);
    auto odd = FockOperator::creator(sp, 1, 2);
    CHECK_THROWS_AS(even + odd, error);
    CHECK((odd * odd).is_zero());
    CHECK((FockOperator::creator(sp, 1, 2) * FockOperator::creator(sp, 1, 3)).parity() == 0);
    CHECK((even * odd).parity() == 1);
    auto other = full_space("011", 3);
    CHECK_THROWS_AS(even + FockOperator::creator(other, 2, 3), error);
    CHECK_THROWS_AS(FockOperator::creator(sp, 3, 1), error);

    // two odd generators: graded commutator is the anticommutator
    auto c12 = FockOperator::creator(sp, 1, 2);
    auto c13 = FockOperator::creator(sp, 1, 3);
    auto anti = c12 * c13 + c13 * c12;
    CHECK(FockOperator::graded_commutator(c12, c13).is_zero() == anti.is_zero());
    CHECK(anti.is_zero());
}

TEST_CASE("undeformed annihilator amplitudes") {
    auto sp = full_space("00", 4);
    auto c = FockOperator::annihilator_linear(sp, 1, 2);
    for (int n = 1; n <= 4; ++n) CHECK(c.at(n - 1, n) == Scalar::integer(reg(), n));
    // fermionic pair: amplitude (1 - (n-1)) = 1 at n=1
    auto spf = full_space("01", 4);
    auto cf = FockOperator::annihilator_linear(spf, 1, 2);
    CHECK(cf.at(0, 1) == Scalar::one(reg()));
}

TEST_CASE("equality and difference reporting on column sets") {
    auto sp = full_space("001", 3);
    auto a = FockOperator::creator(sp, 1, 2);
    auto b = FockOperator::creator(sp, 1, 2).scaled(Scalar::q_power(reg(), 1));
    std::string where;
    CHECK(FockOperator::equal_on(a, a, sp->admissible_block(0), &where));
    CHECK_FALSE(FockOperator::equal_on(a, b, sp->admissible_block(1), &where));
    CHECK(where == "|0> -> |n(1,2)=1> : 1 vs q");
    CHECK(FockOperator::equal_on(a, b, {}, nullptr));
}

TEST_CASE("space construction guards") {
    GradingProfile g = GradingProfile::from_pattern("01");
    CHECK_THROWS_AS(FockSpace(nullptr, FockSpace::full_modes(g, 2), 2), error);
    CHECK_THROWS_AS(FockSpace(reg(), {}, 2), error);
    CHECK_THROWS_AS(FockSpace(reg(), FockSpace::full_modes(g, 2), 0), error);
    CHECK_THROWS_AS(FockSpace::listed_modes(g, 2, {{1, 5}}), error);
    auto rect = FockSpace::selected_modes(GradingProfile::from_pattern("001"), 2,
                                          [](int i, int) { return i == 1; });
    CHECK(rect.size() == 2);
    CHECK(rect[0].a == 2);
    CHECK(rect[1].a == 3);
}
