#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <string>

namespace roughstat {

// Worker cap from ROUGHSTAT_THREADS (default 1, clamped to [1, 64]).
unsigned configured_threads();

// Runs f(i) for i in [0, count). With more than one configured thread the
// range is chunked across workers; results must be written by index so the
// outcome is independent of scheduling. The first exception is rethrown.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& f);

// FNV-1a over a string, as fixed-width hex. Used for stable instance ids.
std::string fnv1a_hex(const std::string& text);

// Formats a double with 12 significant digits ("%.12g").
std::string format_real(double v);

// Rounds to 12 significant decimal digits (serialization precision).
double round_real(double v);

}  // namespace roughstat
