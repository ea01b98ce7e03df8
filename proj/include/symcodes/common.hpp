#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace symcodes {

// Field element, encoded as an integer in [0, q): the base-p value of the
// coefficient vector with the constant digit least significant. This encoding
// doubles as the canonical element order (constants 0, 1, ..., p-1 first).
using Elt = std::uint32_t;

// Work-size guards throw this instead of starting an unbounded enumeration.
// The CLI maps it to its own exit code.
class too_large_error : public std::runtime_error {
 public:
  explicit too_large_error(const std::string& what) : std::runtime_error(what) {}
};

long long isqrt_floor(long long n);
bool is_perfect_square(long long n);

long long binomial(long long n, long long k);
// q(q-1)...(q-m+1); zero when m > q.
long long falling_factorial(long long q, long long m);

// Splits [0, total) into `threads` contiguous chunks and runs
// fn(chunk_index, begin, end) on one worker per chunk. Callers merge
// per-chunk results in chunk order to keep output deterministic.
void parallel_chunks(std::size_t total, int threads,
                     const std::function<void(int, std::size_t, std::size_t)>& fn);

}  // namespace symcodes
