#pragma once

// Gelfand-Tsetlin chains and the squared normalisation constants N^2 of the
// lowering steps T^(j-1) -> T^(j), in the factorial form and in the
// condensed binomial form, compared against kappa on transposed shapes.

#include <cstddef>
#include <vector>

#include "webgram/exec.hpp"
#include "webgram/kappa.hpp"
#include "webgram/qarith.hpp"
#include "webgram/weights.hpp"

namespace webgram {

// Nested shapes T^(1) <= ... <= T^(m): T^(j) has at most j parts and each
// step is a horizontal strip.
class GTChain {
 public:
  // Throws std::invalid_argument when the chain does not interlace.
  explicit GTChain(std::vector<Partition> shapes);

  int length() const { return static_cast<int>(shapes_.size()); }
  // 1-based; shape(0) is the empty partition.
  const Partition& shape(int j) const;
  // Number of entries j in row i: T^(j)_i - T^(j-1)_i.
  int N(int i, int j) const { return shape(j)[i] - shape(j - 1)[i]; }

 private:
  std::vector<Partition> shapes_;
  Partition empty_;
};

// M^j_ik = T^(s)_k - T^(j)_k - T^(s)_i + T^(j)_i and its dotted companion
// M^j_ik + N_kj, with s the chain length.
class StripStats {
 public:
  explicit StripStats(const GTChain& chain) : chain_(chain) {}
  int M(int i, int k, int j) const;
  int Mdot(int i, int k, int j) const { return M(i, k, j) + chain_.N(k, j); }

 private:
  const GTChain& chain_;
};

// next/prev has at most one box per column.
bool is_horizontal_strip(const Partition& prev, const Partition& next);

// The product of quantum factorials whose square root is N(T^(j-1); T^(j)),
// taken literally:
//   prod_{k<j} [T^j_k - T^(j-1)_k]!
//   prod_{i<k<=j-1} [T^(j-1)_i - i - T^(j-1)_k + k]! / [T^j_i - i - T^(j-1)_k + k]!
//   prod_{i<k<=j} [T^j_i - i - T^j_k + k - 1]! / [T^(j-1)_i - i - T^j_k + k - 1]!
// Throws std::invalid_argument for j outside 2..m or a negative argument.
RatFunc step_norm_sq_heavy(const GTChain& chain, int j);
// Same with T^(j-1) = prev and T^(j) = next.
RatFunc step_norm_sq_heavy(const Partition& prev, const Partition& next, int j);

// prod_{i<k<=s} qbinom(c_ik - 1, N_is) / prod_{i<k<s} qbinom(c_ik + N_ks, N_is)
// with c on next and N_is = next_i - prev_i. Needs a horizontal strip, prev
// with fewer than s rows and next with at most s rows.
RatFunc step_norm_sq_binomial(const Partition& prev, const Partition& next, int s);

// prod_{i<s} [N_is]!^2: heavy = binomial * excess on every valid step.
RatFunc factorial_excess(const Partition& prev, const Partition& next, int s);

// binomial form == kappa_strip_form(prev^T, next^T).
bool lemma_long_check(const Partition& prev, const Partition& next, int s);

// Product of the heavy step values over j = 2..m.
RatFunc full_norm_sq(const GTChain& chain);

struct StripPair {
  Partition prev;
  Partition next;
  int s = 1;
};

// All (prev, next) with next/prev a horizontal strip, |next| <= max_size and
// next with at most max_rows rows; s is the smallest admissible value
// max(2, rows(next), rows(prev) + 1). Ordered by |next|, then next, then prev.
std::vector<StripPair> horizontal_strip_pairs(int max_size, int max_rows);

struct GTSweep {
  std::size_t cases = 0;
  std::vector<StripPair> lemma_failures;          // binomial != kappa
  std::vector<StripPair> heavy_binomial_unequal;  // heavy != binomial
  std::vector<StripPair> excess_failures;         // heavy != binomial * excess
};

GTSweep gt_sweep(int max_size, int max_rows, Exec exec = Exec::parallel);

}  // namespace webgram
