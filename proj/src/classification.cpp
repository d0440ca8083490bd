#include "hirzebruch/classification.hpp"

#include "hirzebruch/cohomology.hpp"

namespace hirz {

std::string_view to_string(CaseLabel label) noexcept {
    switch (label) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::D: return "D";
    }
    return "?";
}

namespace {

ClassifiedCase make_case(CaseLabel label, std::int64_t e, DivisorClass sub, DivisorClass quotient,
                         std::int64_t c2) {
    const Surface s(e);
    ClassifiedCase entry{label, s, ExtensionBundle(s, sub, quotient), c2};
    const ChernData chern = chern_from_extension(entry.bundle);
    if (chern.c2 != c2 || c2 < e + 5) {
        throw Error(ErrorCode::InternalInconsistency,
                    "table case " + std::string(to_string(label)) + " fails its c2 checks");
    }
    return entry;
}

std::vector<ClassifiedCase> build_table() {
    return {
        make_case(CaseLabel::A, 1, {2, 2}, {1, 3}, 6),
        make_case(CaseLabel::B, 0, {2, 0}, {1, 3}, 6),
        make_case(CaseLabel::C, 1, {2, 1}, {1, 4}, 7),
        make_case(CaseLabel::D, 2, {2, 4}, {1, 4}, 8),
    };
}

} // namespace

const std::vector<ClassifiedCase>& ishihara_table() {
    static const std::vector<ClassifiedCase> table = build_table();
    return table;
}

StabilityReport analyze(const ClassifiedCase& entry) {
    const ExtensionBundle& bundle = entry.bundle;
    StabilityReport report;
    report.label = entry.label;
    report.surface = entry.surface;
    report.chern = chern_from_extension(bundle);
    report.invariants = canonical_invariants(bundle);
    report.ext1 = ext1_dim(entry.surface, bundle.quotient(), bundle.sub());
    report.stable_for_some_h = stable_for_some_polarization(
        report.invariants, report.chern.c1.b, bundle.splitting());
    if (report.stable_for_some_h) {
        report.wall = wall(bundle.sub(), report.chern.c1);
        report.chamber = stable_chamber(entry.surface, *report.wall);
    }
    return report;
}

bool within_small_c2_range(std::int64_t c2, std::int64_t e) noexcept {
    return c2 <= 6 || (c2 <= 7 && e >= 1);
}

std::vector<StabilityReport> classify_stable(std::int64_t c2_max,
                                             std::optional<std::int64_t> e_filter) {
    std::vector<StabilityReport> out;
    for (const ClassifiedCase& entry : ishihara_table()) {
        const std::int64_t e = entry.surface.e();
        if (!within_small_c2_range(entry.expected_c2, e) || entry.expected_c2 > c2_max) continue;
        if (e_filter && *e_filter != e) continue;
        StabilityReport report = analyze(entry);
        if (report.stable_for_some_h) out.push_back(std::move(report));
    }
    return out;
}

} // namespace hirz
