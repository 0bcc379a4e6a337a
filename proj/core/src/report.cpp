#include "pmblow/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmblow/table.hpp"

namespace pmb {

std::string to_string(ConditionSystem system) {
    switch (system) {
        case ConditionSystem::DensityBounds: return "density_bounds";
        case ConditionSystem::GlobalRmk: return "global";
        case ConditionSystem::BlowupA: return "blowup_a";
        case ConditionSystem::BlowupB: return "blowup_b";
        case ConditionSystem::BlowupC: return "blowup_c";
        case ConditionSystem::ChainProp: return "chain";
    }
    return "density_bounds";
}

namespace {
// Nonstrict comparisons tolerate rounding at the boundary; strict ones do not.
constexpr double kComparisonSlack = 1e-12;

double slack_for(double lhs, double rhs) {
    return kComparisonSlack * (std::abs(lhs) + std::abs(rhs) + 1.0);
}
} // namespace

bool ConditionReport::all_satisfied() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ConditionEntry& e) { return e.satisfied; });
}

double ConditionReport::min_margin() const {
    double min_value = std::numeric_limits<double>::infinity();
    for (const auto& entry : entries) min_value = std::min(min_value, entry.margin);
    return min_value;
}

const ConditionEntry* ConditionReport::find(const std::string& label) const {
    for (const auto& entry : entries) {
        if (entry.label == label) return &entry;
    }
    return nullptr;
}

std::string ConditionReport::to_csv() const {
    Table table({"system", "label", "lhs", "rhs", "satisfied", "margin"});
    for (const auto& entry : entries) {
        table.add_row({to_string(system), entry.label, format_double(entry.lhs),
                       format_double(entry.rhs), entry.satisfied ? "1" : "0",
                       format_double(entry.margin)});
    }
    return table.to_csv();
}

ConditionEntry entry_le(std::string label, double lhs, double rhs) {
    ConditionEntry entry{std::move(label), lhs, rhs, false, rhs - lhs};
    entry.satisfied = lhs <= rhs + slack_for(lhs, rhs);
    return entry;
}

ConditionEntry entry_ge(std::string label, double lhs, double rhs) {
    ConditionEntry entry{std::move(label), lhs, rhs, false, lhs - rhs};
    entry.satisfied = lhs >= rhs - slack_for(lhs, rhs);
    return entry;
}

ConditionEntry entry_lt(std::string label, double lhs, double rhs) {
    ConditionEntry entry{std::move(label), lhs, rhs, false, rhs - lhs};
    entry.satisfied = lhs < rhs;
    return entry;
}

ConditionEntry entry_gt(std::string label, double lhs, double rhs) {
    ConditionEntry entry{std::move(label), lhs, rhs, false, lhs - rhs};
    entry.satisfied = lhs > rhs;
    return entry;
}

} // namespace pmb
