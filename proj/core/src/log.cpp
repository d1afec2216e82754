#include "omcat/log.hpp"

#include <cstdlib>
#include <iostream>

namespace omcat {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("OMCAT_LOG");
        if (!env) return LogLevel::kQuiet;
        std::string s(env);
        if (s == "debug") return LogLevel::kDebug;
        if (s == "info") return LogLevel::kInfo;
        return LogLevel::kQuiet;
    }();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::kInfo) std::cerr << "[omcat] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::kDebug) std::cerr << "[omcat:debug] " << msg << "\n";
}

} // namespace omcat
