#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace nvlab {

using i64 = std::int64_t;
using i128 = __int128;

inline std::string to_string_i128(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

// Throws if v does not fit in int64; used to surface overflow instead of wrapping.
inline i64 narrow_checked(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error(std::string(what) + ": value " + to_string_i128(v) +
                              " exceeds 64-bit range");
  return i64(v);
}

// Floor of sqrt for nonnegative 64-bit integers, exact.
inline i64 isqrt64(i64 n) {
  if (n < 0) throw std::domain_error("isqrt64: negative argument");
  if (n == 0) return 0;
  i64 r = i64(std::sqrt(double(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(i64 n, i64& root) {
  if (n < 0) return false;
  root = isqrt64(n);
  return root * root == n;
}

// Global worker cap for the few embarrassingly parallel sweeps (lattice brute force,
// probe trials). Deterministic: each index writes its own slot, reductions are ordered.
inline unsigned& max_threads_ref() {
  static unsigned v = std::thread::hardware_concurrency() ? std::thread::hardware_concurrency() : 1;
  return v;
}
inline void set_max_threads(unsigned n) { max_threads_ref() = n ? n : 1; }

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned workers = max_threads_ref();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = unsigned(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace nvlab
