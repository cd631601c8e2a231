#pragma once

#include <string>

#include "circulant/disconnection.hpp"

namespace circulant {

// Tool-level defaults, loadable from a key-value text file.
struct ToolConfig {
    SearchLimits limits;
    int jobs = 0;
    std::uint64_t seed = 42;
    std::string cache_path;
};

// Parses lines of the form "key = value"; '#' starts a comment. Keys:
// full_report_max_order, tight_decision_max_order, allow_slow,
// max_report_partitions, default_seed, jobs, cache_path. Unknown keys or
// malformed values raise ParseError.
ToolConfig load_config(const std::string& path);
ToolConfig parse_config(const std::string& text);

}  // namespace circulant
