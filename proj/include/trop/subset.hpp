#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace trop {

// Subsets of [n] as bitmasks; element i (1-based) is bit i-1.
using Mask = std::uint32_t;

inline constexpr int kMaxGround = 16;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << (i - 1); }
inline bool contains(Mask m, int i) { return (m >> (i - 1)) & 1u; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask{1} << n) - 1; }

std::uint64_t binom(int n, int k);

// All k-subsets of [n] in lexicographic order of their sorted element lists.
std::vector<Mask> enumerate_ksubsets(int k, int n);

// Position of a k-subset in enumerate_ksubsets(k, n).
std::size_t lex_rank(Mask s, int n);

// All subsets of `ground` in increasing numeric order.
std::vector<Mask> submasks(Mask ground);

std::vector<int> elements(Mask m);
Mask from_elements(const std::vector<int>& xs, int n);

// "{1,2,4}"
std::string to_string_set(Mask m);
// "124" when every element is a single digit, otherwise "{..}"
std::string short_name(Mask m);

}  // namespace trop
