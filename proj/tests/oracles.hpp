#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library code they are compared against.

#include <functional>
#include <random>
#include <vector>

#include "webgram/qarith.hpp"
#include "webgram/weights.hpp"

namespace oracle {

using webgram::Integer;
using webgram::LaurentPoly;

// [n] as the sum q^(n-1) + q^(n-3) + ... + q^(1-n).
inline LaurentPoly qint_by_sum(int n) {
  LaurentPoly out;
  for (int e = n - 1; e >= 1 - n; e -= 2) out += LaurentPoly::monomial(1, e);
  return out;
}

// Laplace expansion along the first row.
inline LaurentPoly det_cofactor(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly out;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][c] * det_cofactor(minor);
    if (c % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

inline LaurentPoly random_laurent(std::mt19937& rng, int min_exp, int max_exp, int max_coeff) {
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  LaurentPoly p;
  for (int e = min_exp; e <= max_exp; ++e) p += LaurentPoly::monomial(coeff(rng), e);
  return p;
}

// Standard Young tableaux of a shape via the hook length formula.
inline Integer hook_length_count(const std::vector<int>& shape) {
  int n = 0;
  for (int r : shape) n += r;
  Integer num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  Integer den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < shape.size(); ++k) {
        if (shape[k] > j) ++below;
      }
      den *= shape[i] - j - 1 + below + 1;
    }
  }
  return num / den;
}

// Number of partitions of n, by the standard largest-part recursion.
inline long partition_count(int n, int max_part, int max_rows) {
  if (n == 0) return 1;
  if (max_rows == 0) return 0;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += partition_count(n - k, k, max_rows - 1);
  return total;
}

// Sequences of 0/1 steps with x_t ones each, all of whose partial sums are
// weakly decreasing, ending at lambda. Brute force over every step choice.
inline long count_paths_brute(const std::vector<int>& letters, int n, const std::vector<int>& lambda) {
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<long(std::size_t)> go = [&](std::size_t t) -> long {
    if (t == letters.size()) {
      for (int i = 0; i < n; ++i) {
        const int want = i < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i)] : 0;
        if (cur[static_cast<std::size_t>(i)] != want) return 0;
      }
      return 1;
    }
    long total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != letters[t]) continue;
      for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] += (mask >> i) & 1;
      bool ok = true;
      for (int i = 1; i < n; ++i) ok = ok && cur[static_cast<std::size_t>(i)] <= cur[static_cast<std::size_t>(i - 1)];
      if (ok) total += go(t + 1);
      for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] -= (mask >> i) & 1;
    }
    return total;
  };
  return go(0);
}

// Every word of rank n with letter sum at most max_sum, nonempty.
inline void for_each_word(int n, int max_sum, const std::function<void(const webgram::Word&)>& f) {
  std::vector<int> letters;
  std::function<void(int)> go = [&](int rem) {
    if (!letters.empty()) f(webgram::Word(letters, n));
    for (int a = 1; a <= n - 1 && a <= rem; ++a) {
      letters.push_back(a);
      go(rem - a);
      letters.pop_back();
    }
  };
  go(max_sum);
}

}  // namespace oracle
