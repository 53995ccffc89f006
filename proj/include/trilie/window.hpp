#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trilie {

/// Closed integer range lo..hi used to enumerate finite index grids.
struct Window {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    /// Throws ConfigError unless lo <= hi and hi - lo <= 64.
    static Window of(std::int64_t lo, std::int64_t hi);
    /// Parses "lo..hi" (e.g. "-2..2") or a single integer "k".
    static Window parse(std::string_view text);

    std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
    bool contains(std::int64_t r) const { return lo <= r && r <= hi; }
    std::vector<std::int64_t> values() const;
    std::string to_string() const;

    friend bool operator==(const Window&, const Window&) = default;
};

inline constexpr std::int64_t kMaxWindowSpan = 64;

}  // namespace trilie
