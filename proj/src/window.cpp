#include "trilie/window.hpp"

#include <charconv>
#include <cstdlib>

#include "trilie/errors.hpp"
#include "trilie/parallel.hpp"

namespace trilie {

Window Window::of(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw ConfigError("window lower bound exceeds upper bound");
    if (hi - lo > kMaxWindowSpan) throw ConfigError("window spans more than 64 integers");
    return Window{lo, hi};
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ConfigError("malformed window '" + std::string(whole) + "', expected lo..hi");
    return v;
}

}  // namespace

Window Window::parse(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto k = parse_int(text, text);
        return of(k, k);
    }
    return of(parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text));
}

std::vector<std::int64_t> Window::values() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = lo; r <= hi; ++r) out.push_back(r);
    return out;
}

std::string Window::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

unsigned default_parallelism() {
    if (const char* env = std::getenv("TRILIE_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace trilie
