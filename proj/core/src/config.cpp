#include "circulant/config.hpp"

#include <fstream>
#include <sstream>

#include "circulant/errors.hpp"

namespace circulant {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

bool parse_flag(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ParseError("config: bad boolean for " + key + ": '" + value + "'");
}

long long parse_number(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("config: bad number for " + key + ": '" + value + "'");
    }
}

}  // namespace

ToolConfig parse_config(const std::string& text) {
    ToolConfig config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) +
                             ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "full_report_max_order")
            config.limits.full_report_max_order =
                static_cast<int>(parse_number(value, key));
        else if (key == "tight_decision_max_order")
            config.limits.tight_decision_max_order =
                static_cast<int>(parse_number(value, key));
        else if (key == "allow_slow")
            config.limits.allow_slow = parse_flag(value, key);
        else if (key == "max_report_partitions")
            config.limits.max_report_partitions =
                static_cast<std::size_t>(parse_number(value, key));
        else if (key == "default_seed") {
            config.limits.default_seed =
                static_cast<std::uint64_t>(parse_number(value, key));
            config.seed = config.limits.default_seed;
        } else if (key == "jobs")
            config.jobs = static_cast<int>(parse_number(value, key));
        else if (key == "cache_path")
            config.cache_path = value;
        else
            throw ParseError("config line " + std::to_string(lineno) +
                             ": unknown key '" + key + "'");
    }
    return config;
}

ToolConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace circulant
