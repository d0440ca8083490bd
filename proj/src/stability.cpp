#include "hirzebruch/stability.hpp"

#include <array>
#include <numeric>
#include <sstream>

namespace hirz {

using namespace checked;

Slope::Slope(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "slope with zero denominator");
    if (den < 0) {
        num = neg(num);
        den = neg(den);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Slope Slope::divided_by(std::int64_t k) const {
    if (k <= 0) throw Error(ErrorCode::InvalidArgument, "slope divisor must be positive");
    return Slope(num_, mul(den_, k));
}

std::string to_string(const Slope& m) {
    std::ostringstream os;
    os << m.numerator();
    if (m.denominator() != 1) os << '/' << m.denominator();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Slope& m) { return os << to_string(m); }

Slope slope(const Surface& s, const DivisorClass& polarization, const DivisorClass& c1,
            std::int64_t rank) {
    if (!is_ample(s, polarization)) {
        throw Error(ErrorCode::NotAmple, "polarization " + to_string(polarization) +
                                             " is not ample for e=" + std::to_string(s.e()));
    }
    if (rank <= 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
    return Slope(intersect(s, c1, polarization), rank);
}

bool stable_for_some_polarization(const CanonicalInvariants& inv, std::int64_t beta,
                                  Splitting splitting) noexcept {
    return static_cast<wide_int>(2) * inv.r < beta && splitting == Splitting::NonSplit;
}

Wall wall(const DivisorClass& sub_class, const DivisorClass& c1) {
    return {2 * sub_class - c1};
}

namespace {

wide_int chamber_form(std::int64_t u, std::int64_t v, const DivisorClass& h) {
    return static_cast<wide_int>(u) * h.a + static_cast<wide_int>(v) * h.b;
}

// k*x rendered as "a", "-a", "3a", "0".
std::string term(std::int64_t k, char x) {
    if (k == 0) return "0";
    if (k == 1) return std::string(1, x);
    if (k == -1) return std::string("-") + x;
    return std::to_string(k) + x;
}

std::string render_chamber(std::int64_t e, std::int64_t u, std::int64_t v) {
    const std::string lower = term(e, 'a') + " < b";
    if (v > 0 && (-static_cast<wide_int>(u)) % v == 0) {
        // b < k*a together with e*a < b: the chain forces a > 0 once the region is non-empty.
        const auto k = static_cast<std::int64_t>(-static_cast<wide_int>(u) / v);
        return lower + " < " + term(k, 'a');
    }
    std::string out = "0 < a and " + lower;
    if (v == 0) {
        // u*a < 0 with a > 0 holds everywhere or nowhere.
        return u < 0 ? out : out + " and " + term(u, 'a') + " < 0";
    }
    if (v > 0) return out + " and " + term(v, 'b') + " < " + term(-u, 'a');
    const std::int64_t w = -v;
    if (u % w == 0) return out + " and b > " + term(u / w, 'a');
    return out + " and " + term(w, 'b') + " > " + term(u, 'a');
}

bool has_point(const ChamberRegion& region, std::int64_t limit) {
    const std::int64_t e = region.surface.e();
    for (std::int64_t a = 1; a <= limit; ++a) {
        const wide_int lowest = static_cast<wide_int>(a) * e + 1;
        if (lowest > limit) break;
        // The form is monotone in b, so one end of the admissible b range decides.
        const auto b = static_cast<std::int64_t>(region.v > 0 ? lowest : limit);
        if (chamber_form(region.u, region.v, {a, b}) < 0) return true;
    }
    return false;
}

} // namespace

ChamberRegion stable_chamber(const Surface& s, const Wall& w) {
    const DivisorClass& z = w.zeta;
    ChamberRegion region;
    region.u = sub(z.b, mul(s.e(), z.a));
    region.v = z.a;
    region.surface = s;
    region.human_readable = render_chamber(s.e(), region.u, region.v);
    if (!has_point(region, 1000)) {
        throw Error(ErrorCode::EmptyChamber,
                    "no ample (a,b) with 1 <= a,b <= 1000 satisfies H.zeta < 0 for zeta=" +
                        to_string(z) + " (" + region.human_readable + ")");
    }
    return region;
}

bool is_in_chamber(const ChamberRegion& region, const DivisorClass& polarization) {
    return chamber_form(region.u, region.v, polarization) < 0 &&
           is_ample(region.surface, polarization);
}

std::string_view to_string(Outcome o) noexcept {
    return o == Outcome::Stable ? "Stable" : "Destabilized";
}

namespace {

void require_supported(const ExtensionBundle& bundle, const DivisorClass& h) {
    if (!is_ample(bundle.surface(), h)) {
        throw Error(ErrorCode::NotAmple, "polarization " + to_string(h) + " is not ample for e=" +
                                             std::to_string(bundle.surface().e()));
    }
    if (bundle.deg_y() != 0) {
        throw Error(ErrorCode::UnsupportedBundle, "direct check needs Y empty");
    }
    if (bundle.splitting() == Splitting::Split) {
        throw Error(ErrorCode::UnsupportedBundle, "direct check needs a non-split extension");
    }
    if (bundle.sub().a <= bundle.quotient().a) {
        throw Error(ErrorCode::UnsupportedBundle,
                    "direct check needs sub.a > quotient.a");
    }
}

std::array<DivisorClass, 3> corners(const ExtensionBundle& bundle) {
    return {bundle.sub(), bundle.quotient() - DivisorClass::section(),
            bundle.quotient() - DivisorClass::fiber()};
}

SweepReport sweep_corners(const ExtensionBundle& bundle, const DivisorClass& h,
                          std::int64_t window) {
    if (window < 0) throw Error(ErrorCode::InvalidArgument, "sweep window must be non-negative");
    const Surface& s = bundle.surface();
    SweepReport report;
    report.window = window;
    bool first = true;
    for (const DivisorClass& corner : corners(bundle)) {
        const std::int64_t corner_degree = intersect(s, corner, h);
        report.corner_max = first ? corner_degree : std::max(report.corner_max, corner_degree);
        for (std::int64_t p = 0; p <= window; ++p) {
            for (std::int64_t q = 0; q <= window; ++q) {
                const DivisorClass d = corner - DivisorClass{p, q};
                const std::int64_t degree = intersect(s, d, h);
                ++report.examined;
                if (first || degree > report.sweep_max) {
                    report.sweep_max = degree;
                    report.sweep_witness = d;
                    first = false;
                }
            }
        }
    }
    return report;
}

} // namespace

SweepReport exhaustive_sweep(const ExtensionBundle& bundle, const DivisorClass& polarization,
                             std::int64_t window) {
    require_supported(bundle, polarization);
    return sweep_corners(bundle, polarization, window);
}

StabilityVerdict brute_force_stability(const ExtensionBundle& bundle,
                                       const DivisorClass& polarization,
                                       const BruteForceOptions& options) {
    require_supported(bundle, polarization);
    const Surface& s = bundle.surface();
    const std::int64_t total = intersect(s, bundle.sub() + bundle.quotient(), polarization);

    StabilityVerdict verdict;
    verdict.mu = Slope(total, 2);

    const Candidate* best = nullptr;
    for (const DivisorClass& d : corners(bundle)) {
        verdict.candidates.push_back({d, intersect(s, d, polarization)});
    }
    for (const Candidate& c : verdict.candidates) {
        if (best == nullptr || c.degree > best->degree) best = &c;
    }

    std::int64_t top = best->degree;
    DivisorClass witness = best->divisor;
    if (options.exhaustive) {
        verdict.sweep = sweep_corners(bundle, polarization, options.window);
        if (verdict.sweep->sweep_max > top) {
            top = verdict.sweep->sweep_max;
            witness = verdict.sweep->sweep_witness;
        }
    }

    // D.H < c1.H / 2, cross-multiplied.
    if (static_cast<wide_int>(2) * top < total) {
        verdict.outcome = Outcome::Stable;
    } else {
        verdict.outcome = Outcome::Destabilized;
        verdict.witness = witness;
    }
    return verdict;
}

} // namespace hirz
