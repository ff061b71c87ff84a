#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace lie2 {

using Tuple = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// number of weakly increasing k-tuples from n symbols
inline std::size_t multiset_count(std::size_t n, std::size_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  return binomial(n + k - 1, k);
}

// Strictly increasing k-subsets of {0..n-1}, lexicographic.
inline std::vector<Tuple> combinations(std::size_t n, std::size_t k) {
  std::vector<Tuple> out;
  if (k > n) return out;
  Tuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// Weakly increasing k-tuples from {0..n-1}, lexicographic.
inline std::vector<Tuple> multisets(std::size_t n, std::size_t k) {
  std::vector<Tuple> out;
  if (k == 0) return {Tuple{}};
  if (n == 0) return out;
  Tuple t(k, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[i - 1];
  }
  return out;
}

// Position of a strictly increasing tuple in combinations(n, k).
inline std::size_t combination_rank(std::span<const std::size_t> t, std::size_t n) {
  const std::size_t k = t.size();
  std::size_t r = 0, start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = start; v < t[i]; ++v) r += binomial(n - v - 1, k - i - 1);
    start = t[i] + 1;
  }
  return r;
}

// Position of a weakly increasing tuple in multisets(n, k); uses a_i + i.
inline std::size_t multiset_rank(std::span<const std::size_t> t, std::size_t n) {
  Tuple shifted(t.begin(), t.end());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += i;
  return combination_rank(shifted, n + t.size() - 1);
}

// Sorts in place and returns the sign of the sorting permutation, or 0 when
// an entry repeats.
inline int sort_alternating(Tuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

inline int permutation_sign(std::span<const std::size_t> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// (k, n-k)-unshuffles of positions 0..n-1: the first k positions chosen in
// increasing order, the rest in increasing order.
struct Shuffle {
  Tuple chosen;
  Tuple rest;
  int sign;
};

inline std::vector<Shuffle> shuffles(std::size_t n, std::size_t k) {
  std::vector<Shuffle> out;
  for (auto& c : combinations(n, k)) {
    Tuple rest;
    for (std::size_t i = 0, j = 0; i < n; ++i) {
      if (j < c.size() && c[j] == i) {
        ++j;
        continue;
      }
      rest.push_back(i);
    }
    Tuple whole = c;
    whole.insert(whole.end(), rest.begin(), rest.end());
    int s = permutation_sign(whole);
    out.push_back({std::move(c), std::move(rest), s});
  }
  return out;
}

}  // namespace lie2
