#pragma once

// Small brute-force oracles shared by the tests. Nothing here calls into the
// library's enumerators.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline std::uint64_t stirling2(std::uint32_t n, std::uint32_t m)
{
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(m + 1));
  s[0][0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = 1; j <= m && j <= i; ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][m];
}

inline std::uint64_t binomial(std::uint32_t n, std::uint32_t k)
{
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::uint32_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// Visits every map {1..n} -> {1..m} as a 1-based image list.
inline void for_each_map(std::uint32_t n, std::uint32_t m,
                         const std::function<void(const std::vector<std::uint32_t>&)>& visit)
{
  std::vector<std::uint32_t> img(n, 1);
  while (true) {
    visit(img);
    std::uint32_t i = n;
    while (i > 0 && img[i - 1] == m)
      img[--i] = 1;
    if (i == 0)
      return;
    ++img[i - 1];
  }
}

/// Surjective, and min f^-1(1) < min f^-1(2) < ...
inline bool is_rigid(const std::vector<std::uint32_t>& img, std::uint32_t m)
{
  std::uint32_t next = 1;
  for (auto v : img) {
    if (v > next)
      return false;
    if (v == next)
      ++next;
  }
  return next == m + 1;
}

} // namespace oracle
