#include "symcodes/common.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace symcodes {

long long isqrt_floor(long long n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(long long n) {
  if (n < 0) return false;
  long long r = isqrt_floor(n);
  return r * r == n;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long falling_factorial(long long q, long long m) {
  if (m > q) return 0;
  long long r = 1;
  for (long long i = 0; i < m; ++i) r *= q - i;
  return r;
}

void parallel_chunks(std::size_t total, int threads,
                     const std::function<void(int, std::size_t, std::size_t)>& fn) {
  if (threads < 1) threads = 1;
  std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
  if (nchunks <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nchunks);
  std::size_t base = total / nchunks, rem = total % nchunks, begin = 0;
  for (std::size_t c = 0; c < nchunks; ++c) {
    std::size_t len = base + (c < rem ? 1 : 0);
    workers.emplace_back(fn, static_cast<int>(c), begin, begin + len);
    begin += len;
  }
  for (auto& w : workers) w.join();
}

}  // namespace symcodes
