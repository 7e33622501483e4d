#include "frechet/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace frechet {

static LogLevel parse_level(const char* text) {
  if (text == nullptr || *text == '\0') return LogLevel::warn;
  if (std::strcmp(text, "error") == 0 || std::strcmp(text, "0") == 0) return LogLevel::error;
  if (std::strcmp(text, "warn") == 0 || std::strcmp(text, "1") == 0) return LogLevel::warn;
  if (std::strcmp(text, "info") == 0 || std::strcmp(text, "2") == 0) return LogLevel::info;
  if (std::strcmp(text, "debug") == 0 || std::strcmp(text, "3") == 0) return LogLevel::debug;
  return LogLevel::warn;
}

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("FRECHET_LOG"));
  return level;
}

void log_message(LogLevel level, std::string_view message) {
  if (level > log_level()) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "[%s] %.*s\n", names[static_cast<int>(level)],
               static_cast<int>(message.size()), message.data());
}

}  // namespace frechet
