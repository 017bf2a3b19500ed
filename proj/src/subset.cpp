#include "trop/subset.hpp"

#include <stdexcept>

namespace trop {

std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

static void lex_fill(int start, int k, int n, Mask cur, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - k + 1; ++i) lex_fill(i + 1, k - 1, n, cur | bit(i), out);
}

std::vector<Mask> enumerate_ksubsets(int k, int n) {
  if (n < 0 || n > kMaxGround || k < 0 || k > n)
    throw std::invalid_argument("enumerate_ksubsets: need 0 <= k <= n <= 16");
  std::vector<Mask> out;
  out.reserve(binom(n, k));
  lex_fill(1, k, n, 0, out);
  return out;
}

std::size_t lex_rank(Mask s, int n) {
  int k = popcount(s);
  std::size_t r = 0;
  int prev = 0, t = 0;
  for (int v = 1; v <= n; ++v) {
    if (!contains(s, v)) continue;
    ++t;
    for (int u = prev + 1; u < v; ++u) r += binom(n - u, k - t);
    prev = v;
  }
  return r;
}

std::vector<Mask> submasks(Mask ground) {
  std::vector<Mask> out;
  Mask s = 0;
  do {
    out.push_back(s);
    s = (s - ground) & ground;
  } while (s != 0);
  return out;
}

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  for (int i = 1; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

Mask from_elements(const std::vector<int>& xs, int n) {
  Mask m = 0;
  for (int x : xs) {
    if (x < 1 || x > n) throw std::invalid_argument("element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    if (contains(m, x)) throw std::invalid_argument("repeated element " + std::to_string(x));
    m |= bit(x);
  }
  return m;
}

std::string to_string_set(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int x : elements(m)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string short_name(Mask m) {
  auto xs = elements(m);
  for (int x : xs)
    if (x > 9) return to_string_set(m);
  std::string out;
  for (int x : xs) out += static_cast<char>('0' + x);
  return out;
}

}  // namespace trop
