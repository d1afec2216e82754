#ifndef OMCAT_LOG_HPP
#define OMCAT_LOG_HPP

#include <string>

namespace omcat {

// Log level from the OMCAT_LOG environment variable: quiet (default), info,
// debug.
enum class LogLevel { kQuiet = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level();
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace omcat

#endif
