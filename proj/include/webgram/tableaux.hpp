#pragma once

// Paths in the reduced Young poset as sequences of 0/1 steps, their
// row-semistandard fillings, and closed dimension formulas.

#include <string>
#include <string_view>
#include <vector>

#include "webgram/qarith.hpp"
#include "webgram/weights.hpp"

namespace webgram {

struct PathTableau {
  std::vector<MinusculeWeight> steps;
  Partition shape;

  friend bool operator==(const PathTableau&, const PathTableau&) = default;
};

// Rows of a filling; row i lists its entries left to right.
using Filling = std::vector<std::vector<int>>;

// All paths from the empty partition to lambda, in lexicographic order of
// the step sequences (each step compared as a 0/1 vector).
std::vector<PathTableau> enumerate_paths(const Word& x, const Partition& lambda);

// Entry t in the boxes added by step t.
Filling to_row_ssyt(const PathTableau& p);
// Inverse of to_row_ssyt; throws std::invalid_argument unless `f` is the
// filling of a path for the word x.
PathTableau from_row_ssyt(const Filling& f, const Word& x);

// Rows separated by '/', e.g. "135/26"; entries are comma separated within
// a row when any entry exceeds 9.
std::string filling_to_string(const Filling& f);
Filling parse_filling(std::string_view text);

// C(a, l2) - C(a, l2 - 1) for the shape (a - l2, l2).
Integer dim_two_row(int a, int l2);
// Hook length count of standard tableaux of shape (l1, l2, l3), a = l1+l2+l3.
Integer dim_three_row(int a, int l1, int l2, int l3);

}  // namespace webgram
