#pragma once

// Temperley-Lieb diagrams: link patterns spanning the cell modules, their
// pairing and Gram matrices, exact determinants, and Jones-Wenzl elements.
//
// All polynomials are in q with d = [2] = q + q^-1 the loop value.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "webgram/exec.hpp"
#include "webgram/qarith.hpp"

namespace webgram {

// Non-crossing partial matching of points 1..a whose unmatched points
// (defects) are not nested under any arc.
class LinkPattern {
 public:
  // partner[p] is the 0-based partner of point p, or -1 for a defect.
  // Throws std::invalid_argument for crossing arcs or covered defects.
  LinkPattern(int points, std::vector<int> partner);
  // Each closer (1-based) is joined to the nearest unmatched point on its
  // left; throws std::invalid_argument if there is none.
  static LinkPattern from_closers(int points, const std::vector<int>& closers);

  int points() const { return static_cast<int>(partner_.size()); }
  int defects() const;
  int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
  std::vector<int> closers() const;  // 1-based, increasing
  // Arcs as 1-based pairs, then defects: "(1,4)(2,3)|5,6".
  std::string to_string() const;

  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;

 private:
  std::vector<int> partner_;
};

// Patterns on a points with m defects, ordered colexicographically by their
// closer sets (compare the largest closer first). For a = 6, m = 2 this is
// {2,4}, {3,4}, {2,5}, {3,5}, {4,5}, {2,6}, {3,6}, {4,6}, {5,6}.
// Throws std::invalid_argument unless 0 <= m <= a and m = a mod 2.
std::vector<LinkPattern> enumerate_link_patterns(int a, int m);

// Glue p to the mirror image of r. Returns the number of closed loops, or
// nothing when some strand joins two defects of the same side.
std::optional<int> pairing_loops(const LinkPattern& p, const LinkPattern& r);
// d^loops or 0.
LaurentPoly pairing(const LinkPattern& p, const LinkPattern& r);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
// Loop exponents of the Gram matrix, -1 where the pairing vanishes.
using ExponentMatrix = std::vector<std::vector<int>>;

ExponentMatrix gram_exponents(int a, int m, Exec exec = Exec::parallel);
PolyMatrix gram_matrix(int a, int m, Exec exec = Exec::parallel);

// Fraction-free elimination over Z[q, q^-1] with row pivoting.
LaurentPoly det_bareiss(PolyMatrix m);

// Determinant of a matrix whose entries are 0 (e = -1) or d^e. The result is a
// polynomial in d: it is evaluated at d = 0..deg modulo 62-bit primes,
// interpolated, and lifted by CRT past the Hadamard bound on its coefficients.
LaurentPoly det_delta_powers(const ExponentMatrix& m, Exec exec = Exec::parallel);

// Determinant of the Gram matrix of the cell module with a points, m defects.
LaurentPoly tl_gram_det(int a, int m, Exec exec = Exec::parallel);

// (n, n) planar matching, n <= kMaxStrands. Top points are 0..n-1 and bottom
// points n..2n-1, both left to right.
class Diagram {
 public:
  static constexpr int kMaxStrands = 8;

  static Diagram identity(int n);
  // e_i joins top i, i+1 and bottom i, i+1 (1-based, 1 <= i < n).
  static Diagram cap_cup(int n, int i);
  static Diagram from_partners(int n, const std::vector<int>& partner);

  int strands() const { return n_; }
  int partner(int p) const { return static_cast<int>((bits_ >> (4 * p)) & 0xF); }
  bool is_identity() const { return *this == identity(n_); }
  std::uint64_t key() const { return bits_; }

  struct Product;
  // *this stacked above `below`; closed loops are counted, not kept.
  Product compose(const Diagram& below) const;
  Diagram tensor_identity() const;  // extra strand on the right
  struct Trace;
  Trace partial_trace() const;      // close the rightmost strand

  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) {
    return std::tie(a.n_, a.bits_) <=> std::tie(b.n_, b.bits_);
  }

 private:
  void set(int p, int v) {
    bits_ &= ~(std::uint64_t{0xF} << (4 * p));
    bits_ |= std::uint64_t(v) << (4 * p);
  }
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

struct Diagram::Product {
  Diagram diagram;
  int loops = 0;
};
struct Diagram::Trace {
  Diagram diagram;
  int loops = 0;
};

// Linear combination of (n, n) diagrams with rational function coefficients.
class TLElement {
 public:
  explicit TLElement(int n) : n_(n) {}
  static TLElement identity(int n);
  static TLElement generator(int n, int i);

  int strands() const { return n_; }
  const std::map<Diagram, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const Diagram& d) const;
  bool is_zero() const { return terms_.empty(); }
  void add(const Diagram& d, const RatFunc& c);

  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  TLElement& operator*=(const RatFunc& c);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(TLElement a, const RatFunc& c) { return a *= c; }
  friend bool operator==(const TLElement&, const TLElement&) = default;

  TLElement tensor_identity() const;
  TLElement partial_trace() const;

 private:
  int n_;
  std::map<Diagram, RatFunc> terms_;
};

// a stacked above b. The default path writes every coefficient over a common
// denominator and multiplies numerators as integers at q = 2^B (B from an a
// priori bound on the result coefficients); `multiply_reference` is the plain
// double loop in rational function arithmetic.
TLElement multiply(const TLElement& a, const TLElement& b, Exec exec = Exec::parallel);
TLElement multiply_reference(const TLElement& a, const TLElement& b);

// JW_1 = id, JW_{k+1} = X - ([k]/[k+1]) X e_k X with X = JW_k (x) id.
// Throws std::invalid_argument outside 1 <= n <= Diagram::kMaxStrands.
TLElement jones_wenzl(int n, Exec exec = Exec::parallel);

struct JWReport {
  int n = 0;
  bool idempotent = false;
  bool cap_killing = false;
  bool identity_coefficient = false;
  bool trace_rule = false;
  std::size_t terms = 0;
  bool all() const { return idempotent && cap_killing && identity_coefficient && trace_rule; }
};

// Checks JW_n^2 = JW_n, e_i JW_n = JW_n e_i = 0, coefficient 1 on the
// identity, and trace(JW_n) = ([n+1]/[n]) JW_{n-1}. Needs 2 <= n <= 8.
JWReport jw_checks(int n, Exec exec = Exec::parallel);

}  // namespace webgram
