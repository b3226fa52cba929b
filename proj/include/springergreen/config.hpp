#pragma once

#include <cstdlib>
#include <string>

#include "springergreen/errors.hpp"

namespace sg {

enum class OutputFormat { Plain, Json, Csv };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "plain") return OutputFormat::Plain;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw ParseError("unknown output format: " + s);
}

// Runtime options shared by the CLI commands.  An empty cache_dir disables
// on-disk caching.  SPRINGERGREEN_CACHE overrides cache_dir.
struct Config {
    std::string cache_dir;
    int max_rank = 8;
    OutputFormat format = OutputFormat::Plain;
    int jobs = 1;

    void finalize() {
        if (const char* env = std::getenv("SPRINGERGREEN_CACHE")) cache_dir = env;
        if (max_rank < 1) throw ParseError("max_rank must be >= 1");
        if (jobs < 0) throw ParseError("jobs must be >= 0");
        if (jobs == 0) jobs = 4; // auto
    }
};

} // namespace sg
