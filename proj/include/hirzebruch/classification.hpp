#pragma once

/**
 * @file classification.hpp
 * @brief Indecomposable ample rank-2 bundles with c2 <= e + 6 and their stability.
 *
 * The four cases are imported data from the known classification, checked on load
 * against the Whitney formula and the bound c2 >= e + 5.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hirzebruch/bundles.hpp"
#include "hirzebruch/stability.hpp"

namespace hirz {

enum class CaseLabel { A, B, C, D };

std::string_view to_string(CaseLabel label) noexcept;

struct ClassifiedCase {
    CaseLabel label;
    Surface surface;
    ExtensionBundle bundle;
    std::int64_t expected_c2;
};

struct StabilityReport {
    CaseLabel label = CaseLabel::A;
    Surface surface{0};
    ChernData chern;
    CanonicalInvariants invariants;
    std::int64_t ext1 = 0;
    bool stable_for_some_h = false;
    std::optional<Wall> wall;          // present iff stable_for_some_h
    std::optional<ChamberRegion> chamber; // present iff stable_for_some_h
};

/// Cases A-D, in that order.
const std::vector<ClassifiedCase>& ishihara_table();

StabilityReport analyze(const ClassifiedCase& entry);

/// Whether a case falls under the small-c2 hypothesis, read as
/// (c2 <= 6) or (c2 <= 7 and e >= 1).
bool within_small_c2_range(std::int64_t c2, std::int64_t e) noexcept;

/// Reports for the table entries that pass the small-c2 hypothesis, c2 <= c2_max and
/// the optional e filter, keeping only those stable for some polarization.
std::vector<StabilityReport> classify_stable(std::int64_t c2_max,
                                             std::optional<std::int64_t> e_filter = std::nullopt);

} // namespace hirz
