#pragma once

// Gram determinants of the cell modules S(x, lambda).

#include <memory>
#include <utility>
#include <vector>

#include "webgram/kappa.hpp"
#include "webgram/poset.hpp"
#include "webgram/qarith.hpp"
#include "webgram/weights.hpp"

namespace webgram {

struct GramDeterminant {
  // kappa^exponent in edge order of the pruned poset, exponent > 0.
  std::vector<std::pair<KappaValue, Integer>> kappa_powers;
  QIntExponents exponents;  // after cancelling equal [c]
  RatFunc value{1};
  DeltaPoly delta_form;
  // The module is zero dimensional; the determinant is the empty product.
  bool degenerate = false;

  std::string factored(FactorStyle style = FactorStyle::spaced) const { return format_factored(exponents, style); }
};

// Product over poset edges mu1 -> mu2 of kappa^{d(x, mu1) d(x, lambda \ mu2)}.
// Throws std::invalid_argument on a size mismatch and InexactError if the
// result is not a Laurent polynomial.
GramDeterminant gram_det_closed(const Word& x, const Partition& lambda);

// Same product read off an already built poset of x without a target, so
// that every weight of a word can share one construction.
GramDeterminant gram_det_closed(const ReducedYoungPoset& full, const Partition& lambda);

// Same determinant from the block diagonal recursion on the last letter,
// computed in rational function arithmetic with memoisation. Shares no code
// with gram_det_closed beyond the kappa evaluation.
RatFunc gram_det_recursive(const Word& x, const Partition& lambda);

// The recursion with its memo tables kept across weights of one word.
class GramRecursion {
 public:
  explicit GramRecursion(Word x);
  ~GramRecursion();
  GramRecursion(const GramRecursion&) = delete;
  GramRecursion& operator=(const GramRecursion&) = delete;

  RatFunc det(const Partition& lambda);
  Integer paths(const Partition& lambda);

 private:
  struct Memo;
  Word x_;
  std::unique_ptr<Memo> memo_;
};

// Number of paths from the empty partition to lambda (0 if unreachable).
Integer cell_dimension(const Word& x, const Partition& lambda);

}  // namespace webgram
