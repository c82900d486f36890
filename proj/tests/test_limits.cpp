// Tests for the contraction limit pipeline: entrywise operator limits with
// divergence detection, the renormalized family, and the coincidence of its
// tracker limit with the directly-constructed contracted family.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "qgl/limits.hpp"
#include "qgl/realizations.hpp"

using namespace qgl;

namespace {

RegistryPtr reg() {
    static RegistryPtr r = VariableRegistry::standard();
    return r;
}

std::vector<Weight> random_lambda(const GradingProfile& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<Weight> out(1, Weight{0, 0});
    for (int i = 1; i <= g.K(); ++i) out.push_back(Weight{d(rng), 0});
    return out;
}

}  // namespace

TEST_CASE("entrywise operator limits keep finite parts and flag divergence") {
    const GradingProfile g = GradingProfile::from_pattern("01");
    const SpacePtr sp = full_space(reg(), g, 2);
    const Scalar t = Scalar::var_power(reg(), VariableRegistry::kT, 1);
    const Scalar mix = Scalar::one(reg()) + t;  // -> 1 as t -> 0

    const FockOperator id = FockOperator::identity(sp);
    FockOperator out;
    std::string bad;

    // Tracker-free input is returned unchanged.
    CHECK(operator_limit(id, VariableRegistry::kT, Scalar::LimitDir::VarToZero, &out, &bad));
    CHECK(FockOperator::equal_on(out, id, sp->admissible_block(0)));

    // Positive tracker powers drop out.
    CHECK(operator_limit(id.scaled(mix), VariableRegistry::kT, Scalar::LimitDir::VarToZero, &out,
                         &bad));
    CHECK(FockOperator::equal_on(out, id, sp->admissible_block(0)));

    // A negative power diverges and is reported.
    const FockOperator divg = id.scaled(Scalar::var_power(reg(), VariableRegistry::kT, -1));
    CHECK_FALSE(
        operator_limit(divg, VariableRegistry::kT, Scalar::LimitDir::VarToZero, &out, &bad));
    CHECK_FALSE(bad.empty());
}

TEST_CASE("unrenormalized locked-weight families diverge under the tracker limit") {
    const GradingProfile g = GradingProfile::from_pattern("001");
    const int a = 1;
    const SpacePtr sp = tail_space(reg(), g, a, 2);
    const OscAlgebra osc = OscAlgebra::base(sp);
    // Lock the weight below the split without any renormalization.
    std::vector<Weight> lam(g.K() + 1, Weight{0, 0});
    lam[1] = Weight{0, g.sign(1)};
    lam[2] = Weight{2, 0};
    lam[3] = Weight{-1, 0};
    const GeneratorFamily fam = build_verma(osc, g, VermaKind::ColumnOne, lam);
    const FamilyLimit lim = limit_family(fam, VariableRegistry::kT, Scalar::LimitDir::VarToZero);
    CHECK_FALSE(lim.ok);
    CHECK_FALSE(lim.divergent.empty());
}

TEST_CASE("renormalized families reach the contracted construction in the limit") {
    std::mt19937_64 rng(2024u);
    for (const auto& [M, N] : std::vector<std::pair<int, int>>{{2, 1}, {3, 0}, {1, 2}}) {
        const GradingProfile g = GradingProfile::distinguished(M, N);
        const OscAlgebra osc = OscAlgebra::base(full_space(reg(), g, 3));
        for (int a = 1; a < g.K(); ++a) {
            const VerificationReport rep =
                check_contraction_coincidence(osc, g, a, random_lambda(g, rng));
            CHECK_MESSAGE(rep.ok(), (rep.instance + " | " + rep.first_failure()));
        }
    }
}

TEST_CASE("coincidence check reports every generator and flags weight mismatches") {
    std::mt19937_64 rng(5u);
    const GradingProfile g = GradingProfile::distinguished(2, 1);
    const OscAlgebra osc = OscAlgebra::base(full_space(reg(), g, 3));
    const std::vector<Weight> lam = random_lambda(g, rng);

    const VerificationReport rep = check_contraction_coincidence(osc, g, 2, lam);
    REQUIRE(rep.ok());
    CHECK_FALSE(rep.infeasible);
    // one divergence gate + every off-diagonal entry + three diagonals per index
    CHECK(rep.checks.size() == 1 + 6 + 9);

    // Shifting a tail weight on one side only must change the vacuum
    // eigenvalue the comparison looks at (both vacua sit at index 0).
    std::vector<Weight> wrong = lam;
    wrong[3] = wrong[3] + Weight{1, 0};
    GeneratorFamily reno = renormalized_for_contraction(osc, g, 2, lam);
    FamilyLimit lim = limit_family(reno, VariableRegistry::kT, Scalar::LimitDir::VarToZero);
    REQUIRE(lim.ok);
    const SpacePtr tail = tail_space(reg(), g, 2, 3);
    const GeneratorFamily direct = build_contracted(OscAlgebra::base(tail), g, 2, wrong);
    CHECK_FALSE((lim.family.qcart[3].at(0, 0) - direct.qcart[3].at(0, 0)).is_zero());
}

TEST_CASE("coincidence also holds for non-distinguished gradings") {
    std::mt19937_64 rng(77u);
    for (const char* pattern : {"010", "101", "110"}) {
        const GradingProfile g = GradingProfile::from_pattern(pattern);
        const OscAlgebra osc = OscAlgebra::base(full_space(reg(), g, 3));
        for (int a = 1; a < g.K(); ++a) {
            const VerificationReport rep =
                check_contraction_coincidence(osc, g, a, random_lambda(g, rng));
            CHECK_MESSAGE(rep.ok(), (rep.instance + " | " + rep.first_failure()));
        }
    }
}
