// limits.hpp — asymptotic limits of operator families.  The weight below a
// contraction split is locked to the tracker variable t; renormalizing the
// family and sending t to zero produces the contracted algebra, and the
// machinery here performs that pipeline entrywise with divergence detection.
#pragma once

#include <string>

#include "qgl/realizations.hpp"
#include "qgl/verify.hpp"

namespace qgl {

// Entrywise limit of one operator.  Returns false and fills `bad` (if
// non-null) with the offending entry when any entry diverges; `out` is only
// valid on success.  Idempotent on operators free of the limit variable.
bool operator_limit(const FockOperator& in, int var, Scalar::LimitDir dir, FockOperator* out,
                    std::string* bad);

// The contraction pipeline applied to a full generator family: a plain-weight
// family over `osc` (normally the full mode set, where the completing
// recursion is exact), with the oscillators twisted and the lower/diagonal
// entries rescaled by tracker powers so the large-weight limit below the
// split exists.  Weights below the split are locked to the tracker; weights
// beyond it come from `lambda`.
GeneratorFamily renormalized_for_contraction(const OscAlgebra& osc, const GradingProfile& g,
                                             int a, const std::vector<Weight>& lambda);

// Result of an entrywise family limit.
struct FamilyLimit {
    explicit FamilyLimit(GeneratorFamily f) : family(std::move(f)) {}
    bool ok = false;
    std::string divergent;   // first divergent entry when !ok
    GeneratorFamily family;  // valid when ok
};

// Tracker-to-zero limit of every generator and diagonal of the family.
FamilyLimit limit_family(const GeneratorFamily& fam, int var, Scalar::LimitDir dir);

// End-to-end coincidence check: the limit of the renormalized family equals
// the directly-constructed contracted family, entry by entry, with the
// divergence detector armed.  `osc` is the plain oscillator algebra on the
// FULL mode set (the recursion that completes a family is only valid on a
// genuine module); the direct construction is made internally on the reduced
// mode set, and the two are compared on the slice of full-space states with
// zero occupation below the split.  A limit entry that moves a slice state
// off the slice fails the check.  `lambda` supplies the weights beyond the
// split.
VerificationReport check_contraction_coincidence(const OscAlgebra& osc, const GradingProfile& g,
                                                 int a, const std::vector<Weight>& lambda);

}  // namespace qgl
