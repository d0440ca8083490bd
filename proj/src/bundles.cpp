#include "hirzebruch/bundles.hpp"

#include <algorithm>

#include "hirzebruch/cohomology.hpp"

namespace hirz {

using namespace checked;

std::string_view to_string(Splitting s) noexcept {
    return s == Splitting::NonSplit ? "non-split" : "split";
}

ExtensionBundle::ExtensionBundle(Surface surface, DivisorClass sub, DivisorClass quotient,
                                 std::int64_t deg_y, Splitting splitting)
    : surface_(surface), sub_(sub), quotient_(quotient), deg_y_(deg_y), splitting_(splitting) {
    if (deg_y_ < 0) {
        throw Error(ErrorCode::InvalidBundle,
                    "length of Y must be non-negative, got " + std::to_string(deg_y_));
    }
    if (splitting_ == Splitting::NonSplit && deg_y_ == 0 &&
        ext1_dim(surface_, quotient_, sub_) == 0) {
        throw Error(ErrorCode::InvalidBundle,
                    "Ext^1(O" + to_string(quotient_) + ", O" + to_string(sub_) +
                        ") = 0, so no non-split extension exists");
    }
}

ChernData chern_from_extension(const ExtensionBundle& bundle) {
    return {bundle.sub() + bundle.quotient(),
            add(intersect(bundle.surface(), bundle.sub(), bundle.quotient()), bundle.deg_y())};
}

std::int64_t deg_y_from_invariants(std::int64_t c2, std::int64_t alpha, std::int64_t beta,
                                   std::int64_t d, std::int64_t r, const Surface& s) {
    const std::int64_t e = s.e();
    std::int64_t total = c2;
    total = add(total, mul(alpha, sub(mul(d, e), r)));
    total = sub(total, mul(beta, d));
    total = add(total, mul(2, mul(d, r)));
    total = sub(total, mul(mul(d, d), e));
    return total;
}

SplittingType generic_splitting_type(const ExtensionBundle& bundle) {
    const std::int64_t da = bundle.sub().a;
    const std::int64_t qa = bundle.quotient().a;
    if (da < sub(qa, 1)) {
        throw Error(ErrorCode::UnsupportedFiberType,
                    "fibre degrees " + std::to_string(da) + " < " + std::to_string(qa) +
                        " - 1: restriction to a general fibre need not split as given");
    }
    return {std::max(da, qa), std::min(da, qa)};
}

void require_canonical_presentation(const DivisorClass& g, const DivisorClass& q) {
    if (g.a == q.a) {
        throw Error(ErrorCode::AmbiguousInvariants,
                    "equal fibre degrees " + std::to_string(g.a) +
                        ": the second invariant depends on the extension class");
    }
    if (g.a < q.a) {
        throw Error(ErrorCode::UnsupportedFiberType,
                    "sub-bundle fibre degree " + std::to_string(g.a) +
                        " is below the quotient's " + std::to_string(q.a) +
                        "; re-present the extension with the larger degree first");
    }
}

CanonicalInvariants canonical_invariants(const ExtensionBundle& bundle) {
    const DivisorClass& g = bundle.sub();
    const DivisorClass& q = bundle.quotient();
    require_canonical_presentation(g, q);

    const Surface& s = bundle.surface();
    // Quotient term of E(-dC0 - (r+1)f0) has no sections; the sub term O(-f0) has none either.
    if (h0(s, q - DivisorClass{g.a, add(g.b, 1)}) != 0 || h0(s, {0, -1}) != 0) {
        throw Error(ErrorCode::InternalInconsistency, "twisted quotient term has sections");
    }

    const CanonicalInvariants inv{g.a, q.a, g.b, q.b, bundle.deg_y()};
    const ChernData chern = chern_from_extension(bundle);
    if (deg_y_from_invariants(chern.c2, chern.c1.a, chern.c1.b, inv.d, inv.r, s) != inv.deg_y) {
        throw Error(ErrorCode::InternalInconsistency,
                    "invariants do not reproduce the length of Y");
    }
    return inv;
}

} // namespace hirz
