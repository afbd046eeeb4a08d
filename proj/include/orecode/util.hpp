#pragma once

#include <cstdint>
#include <string>

namespace orecode {

/// Worker parallelism for search loops and the reproduction harness:
/// hardware concurrency capped by the ORECODE_THREADS environment variable.
int worker_count();

/// Exact decimal string for base^exp (schoolbook digit vector; exponents in
/// the hundreds are instant).
std::string pow_decimal(uint64_t base, uint64_t exp);

}  // namespace orecode
