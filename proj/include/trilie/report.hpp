#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trilie/keys.hpp"

namespace trilie {

/// One position of an index assignment: a basis key of the algebra or a
/// p/q/x/z key of the derivation algebra.
using Slot = std::variant<BasisKey, PqxzKey>;

std::string slot_text(const Slot& s);

/// A nonzero defect found by a checker.
struct DefectEntry {
    std::string axiom;
    std::vector<Slot> indices;
    std::optional<WeightKey> probe;
    std::variant<AlgElem, ModVec> defect;

    std::string defect_text() const;
};

/// Outcome of a checker run. Passing means no defect entries. Entries are
/// sorted by (indices, probe, axiom).
struct DefectReport {
    std::string check;
    std::string family;
    std::map<std::string, std::string> parameters;
    std::size_t cases = 0;
    std::vector<DefectEntry> entries;

    bool passed() const { return entries.empty(); }
    void sort_entries();
    /// Appends other's entries and case count, then re-sorts.
    void merge(DefectReport other);
};

/// Human-readable summary plus up to `limit` defect lines.
std::string format_text(const DefectReport& r, std::size_t limit = 20);

/// One JSON object per defect with fields axiom, family, parameters,
/// indices, probe, defect; then one summary object. Byte-for-byte
/// deterministic for a given report.
std::string format_machine(const DefectReport& r);

}  // namespace trilie
