#pragma once

// Intersection forms kappa_lambda^{lambda+mu} kept as products of ratios
// [c]/[c-1] of quantum integers.

#include <map>
#include <string>
#include <vector>

#include "webgram/qarith.hpp"
#include "webgram/weights.hpp"

namespace webgram {

// Net exponent of each quantum integer [c]; [1] = 1 is never stored.
using QIntExponents = std::map<int, Integer>;

enum class FactorStyle {
  compact,  // [2][4]/[3], [3][6]/([2][4])
  spaced,   // [2]^3 [3]^2 [5] [7], [2] [4] /[3] /[5]
};

std::string format_factored(const QIntExponents& e, FactorStyle style);
// prod [c]^e as a reduced rational function.
RatFunc qint_product(const QIntExponents& e);

class KappaValue {
 public:
  KappaValue() : value_(1) {}
  // Product of [c]/[c-1] over `ratios`; each c must be at least 2.
  explicit KappaValue(std::vector<int> ratios);

  const std::vector<int>& ratios() const { return ratios_; }
  const RatFunc& value() const { return value_; }
  QIntExponents exponents() const;
  bool is_one() const { return value_.is_one(); }
  std::string to_string(FactorStyle style = FactorStyle::compact) const;

 private:
  std::vector<int> ratios_;
  RatFunc value_;
};

// prod over (i,j) in Phi(mu) of [c_ij]/[c_ij - 1], distances on lambda.
// Throws std::invalid_argument if lambda + mu is not a partition.
KappaValue kappa_root_form(const Partition& lambda, const MinusculeWeight& mu);

// Same product indexed by the rows of the vertical strip dst/src: pairs
// i < j with no new box in row i and a new box in row j, distances on src.
// Throws std::invalid_argument unless dst/src is a vertical strip.
KappaValue kappa_strip_form(const Partition& src, const Partition& dst);

// [m+1]/[m], the two-row value with m through strands before the cap.
KappaValue kappa_tl(int m);

// True when dst/src is a vertical strip (at most one new box per row).
bool is_vertical_strip(const Partition& src, const Partition& dst);

}  // namespace webgram
