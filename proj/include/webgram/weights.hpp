#pragma once

// Type A weights: partitions, object words, 0/1 weights of fundamental
// representations, dominance order and axial distances.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace webgram {

// Malformed text passed to one of the parse functions.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weakly decreasing positive parts; absent parts read as 0 (1-based access).
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are trimmed; throws std::invalid_argument unless the
  // sequence is weakly decreasing and non-negative.
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);  // "(4,4,2,1)", "()"

  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  Partition transpose() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

// Object x = x_1 ... x_k of the web category of rank n: letters in 1..n-1.
class Word {
 public:
  Word(std::vector<int> letters, int rank);
  static Word parse(std::string_view text, int rank);  // "32312"

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int operator[](int t) const { return letters_[static_cast<std::size_t>(t)]; }  // 0-based
  const std::vector<int>& letters() const { return letters_; }
  Word prefix(int len) const;
  int total() const;
  std::string to_string() const;

 private:
  std::vector<int> letters_;
  int rank_ = 2;
};

// 0/1 weight vector of length n.
class MinusculeWeight {
 public:
  explicit MinusculeWeight(std::vector<int> bits);
  static MinusculeWeight parse(std::string_view text);  // "0,1,0,1,0"

  int length() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return i >= 1 && i <= length() ? bits_[static_cast<std::size_t>(i - 1)] : 0; }
  int ones() const;
  bool is_dominant() const;  // a ones-prefix
  const std::vector<int>& bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const MinusculeWeight&, const MinusculeWeight&) = default;
  friend auto operator<=>(const MinusculeWeight& a, const MinusculeWeight& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<int> bits_;
};

// Positive root alpha_{i,j}, 1 <= i < j.
struct RootPair {
  int i = 1;
  int j = 2;
  friend bool operator==(const RootPair&, const RootPair&) = default;
  friend auto operator<=>(const RootPair&, const RootPair&) = default;
};

std::string to_string(const std::vector<RootPair>& roots);

Partition fundamental_weight(int i, int n);
Partition weight_of_word(const Word& x);

// All 0/1 vectors of length n with exactly a ones, in lexicographic order.
std::vector<MinusculeWeight> omega(int a, int n);

// Prefix-sum dominance; partitions of different sizes are incomparable.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// c_ij = lambda_i - lambda_j + j - i
int axial_distance(const Partition& lambda, int i, int j);

// Pairs i < j with mu_i = 0 and mu_j = 1, sorted.
std::vector<RootPair> phi_set(const MinusculeWeight& mu);

// lambda + mu when the sum is a partition.
std::optional<Partition> add_strip(const Partition& lambda, const MinusculeWeight& mu);

Partition transpose(const Partition& lambda);

// Partitions of `size` with at most `max_rows` rows, reverse lexicographic.
std::vector<Partition> partitions_of(int size, int max_rows);

}  // namespace webgram
