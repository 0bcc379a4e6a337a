#pragma once

#include <string>
#include <vector>

namespace pmb {

enum class ConditionSystem { DensityBounds, GlobalRmk, BlowupA, BlowupB, BlowupC, ChainProp };

std::string to_string(ConditionSystem system);

/// One inequality instance: lhs REL rhs with the signed distance to the
/// boundary in the inequality's native units.
struct ConditionEntry {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double margin = 0.0;
};

struct ConditionReport {
    ConditionSystem system = ConditionSystem::DensityBounds;
    std::vector<ConditionEntry> entries;

    bool all_satisfied() const;
    double min_margin() const;
    const ConditionEntry* find(const std::string& label) const;
    std::string to_csv() const;
};

/// lhs <= rhs entry; margin = rhs - lhs.
ConditionEntry entry_le(std::string label, double lhs, double rhs);
/// lhs >= rhs entry; margin = lhs - rhs.
ConditionEntry entry_ge(std::string label, double lhs, double rhs);
/// lhs < rhs entry (strict); margin = rhs - lhs, satisfied only when positive.
ConditionEntry entry_lt(std::string label, double lhs, double rhs);
/// lhs > rhs entry (strict); margin = lhs - rhs, satisfied only when positive.
ConditionEntry entry_gt(std::string label, double lhs, double rhs);

} // namespace pmb
