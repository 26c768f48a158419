#pragma once

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace plmap {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

// Level comes from PROFILER_PL_LOG={error|info|debug}; defaults to info.
inline LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("PROFILER_PL_LOG");
    if (env == nullptr) return LogLevel::Info;
    if (std::strcmp(env, "error") == 0) return LogLevel::Error;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Info;
  }();
  return level;
}

inline void log_at(LogLevel lvl, const char* fmt, ...) {
  if (static_cast<int>(lvl) > static_cast<int>(log_level())) return;
  const char* tag = lvl == LogLevel::Error ? "error" : (lvl == LogLevel::Info ? "info" : "debug");
  std::fprintf(stderr, "[%s] ", tag);
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

#define PLMAP_LOG_ERROR(...) ::plmap::log_at(::plmap::LogLevel::Error, __VA_ARGS__)
#define PLMAP_LOG_INFO(...) ::plmap::log_at(::plmap::LogLevel::Info, __VA_ARGS__)
#define PLMAP_LOG_DEBUG(...) ::plmap::log_at(::plmap::LogLevel::Debug, __VA_ARGS__)

}  // namespace plmap
