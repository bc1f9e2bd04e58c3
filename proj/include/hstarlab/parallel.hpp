#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

namespace hstarlab {

inline constexpr std::string_view kThreadsEnvVar = "HSTAR_LAB_THREADS";

/// Parses a thread cap. Returns nullopt unless text is a positive integer.
std::optional<unsigned> parse_thread_count(std::string_view text);

/// Thread cap from HSTAR_LAB_THREADS, else the hardware concurrency (at
/// least 1). A malformed variable is ignored here; front ends check it with
/// parse_thread_count and report it.
unsigned default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// handled exactly once; callers reduce per-index results themselves so the
/// outcome does not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace hstarlab
