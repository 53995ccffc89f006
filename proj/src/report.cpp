#include "trilie/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace trilie {

std::string slot_text(const Slot& s) {
    return std::visit([](const auto& k) { return k.to_string(); }, s);
}

std::string DefectEntry::defect_text() const {
    return std::visit([](const auto& v) { return format(v); }, defect);
}

void DefectReport::sort_entries() {
    std::stable_sort(entries.begin(), entries.end(), [](const DefectEntry& a, const DefectEntry& b) {
        if (a.indices != b.indices) return a.indices < b.indices;
        if (a.probe != b.probe) return a.probe < b.probe;
        return a.axiom < b.axiom;
    });
}

void DefectReport::merge(DefectReport other) {
    cases += other.cases;
    for (auto& e : other.entries) entries.push_back(std::move(e));
    sort_entries();
}

namespace {

std::string indices_text(const DefectEntry& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.indices.size(); ++i) {
        if (i) s += ", ";
        s += slot_text(e.indices[i]);
    }
    return s + ")";
}

}  // namespace

std::string format_text(const DefectReport& r, std::size_t limit) {
    std::ostringstream os;
    os << r.check << " [" << r.family;
    for (const auto& [k, v] : r.parameters) os << ", " << k << "=" << v;
    os << "]: " << r.cases << " cases, " << r.entries.size() << " defects -> "
       << (r.passed() ? "PASS" : "FAIL") << "\n";
    std::size_t shown = 0;
    for (const auto& e : r.entries) {
        if (shown++ == limit) {
            os << "  ... " << (r.entries.size() - limit) << " more\n";
            break;
        }
        os << "  " << e.axiom << " " << indices_text(e);
        if (e.probe) os << " on " << e.probe->to_string();
        os << ": " << e.defect_text() << "\n";
    }
    return os.str();
}

std::string format_machine(const DefectReport& r) {
    std::ostringstream os;
    nlohmann::json params(r.parameters);
    for (const auto& e : r.entries) {
        nlohmann::json rec;
        rec["axiom"] = e.axiom;
        rec["family"] = r.family;
        rec["parameters"] = params;
        rec["indices"] = nlohmann::json::array();
        for (const auto& s : e.indices) rec["indices"].push_back(slot_text(s));
        rec["probe"] = e.probe ? nlohmann::json(e.probe->to_string()) : nlohmann::json(nullptr);
        rec["defect"] = e.defect_text();
        os << rec.dump() << "\n";
    }
    nlohmann::json summary;
    summary["summary"] = {{"check", r.check},
                          {"family", r.family},
                          {"parameters", params},
                          {"cases", r.cases},
                          {"defects", r.entries.size()},
                          {"passed", r.passed()}};
    os << summary.dump() << "\n";
    return os.str();
}

}  // namespace trilie
