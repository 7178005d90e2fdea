#pragma once

// Exact arithmetic for balanced quantum numbers.
//
// LaurentPoly is an element of Z[q, q^-1] with arbitrary precision
// coefficients, RatFunc its field of fractions kept in a canonical reduced
// form, and DeltaPoly an element of Z[d] where d = [2] = q + q^-1.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace webgram {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an operation that must be exact (division, delta conversion)
// is not. Inside the library this always means an arithmetic defect.
class InexactError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a value is evaluated at a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  // c * q^e
  static LaurentPoly monomial(const Integer& c, int e);
  static LaurentPoly q() { return monomial(1, 1); }
  // Dense coefficients starting at exponent `low`.
  static LaurentPoly from_dense(int low, std::vector<Integer> coeffs);
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  // Smallest / largest exponent with a nonzero coefficient. Undefined on zero.
  int min_exp() const { return low_; }
  int max_exp() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  Integer coeff(int e) const;
  Integer leading_coeff() const { return coeffs_.back(); }
  const std::vector<Integer>& dense() const { return coeffs_; }
  std::map<int, Integer> terms() const;

  // Image under the bar involution q -> q^-1.
  LaurentPoly bar() const;
  bool is_symmetric() const;
  LaurentPoly shifted(int k) const;  // multiply by q^k

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  LaurentPoly pow(unsigned long e) const;

  // Exact quotient; throws InexactError when `d` does not divide *this.
  LaurentPoly divexact(const LaurentPoly& d) const;
  // Quotient if exact, otherwise false.
  bool divides_into(const LaurentPoly& d, LaurentPoly& quotient) const;

  Rational eval(const Rational& q0) const;

  // "c*q^e" terms in descending exponent, "q^0" elided, e.g. "1*q^1 + 1*q^-1".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coeffs_;  // coeffs_[i] is the coefficient of q^(low_+i)
};

// Reduced quotient of Laurent polynomials.
//
// Canonical representative: num and den coprime in Z[q, q^-1]; den is an
// ordinary polynomial with nonzero constant term and positive leading
// coefficient; the gcd of all integer coefficients of num and den is 1.
// Two equal values therefore have identical representatives.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(long e) const;
  RatFunc inverse() const;

  Rational eval(const Rational& q0) const;
  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

// Integer polynomial in d = q + q^-1.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  explicit DeltaPoly(std::vector<Integer> coeffs);
  static DeltaPoly monomial(const Integer& c, unsigned e);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(unsigned e) const { return e < coeffs_.size() ? coeffs_[e] : Integer(0); }
  const std::vector<Integer>& dense() const { return coeffs_; }

  // Substitute d := q + q^-1.
  LaurentPoly to_laurent() const;

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.coeffs_ == b.coeffs_; }

  // "c*d^e" terms in descending degree, "d^0" elided.
  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
};

// Balanced quantum integer [n]; [0] = 0 and [-n] = -[n].
LaurentPoly qint(long n);
// Primitive gcd with positive leading coefficient and no power of q.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// [n]! ; throws std::invalid_argument for n < 0.
LaurentPoly qfact(long n);
// prod_{i=1..k} [n-k+i]/[i], exact for every integer n.
LaurentPoly qbinom(long n, long k);

// The unique integer polynomial in d with value p. Throws
// std::invalid_argument when p is not bar-symmetric.
DeltaPoly to_delta_poly(const LaurentPoly& p);

Rational eval_rational(const LaurentPoly& p, const Rational& q0);
Rational eval_rational(const RatFunc& f, const Rational& q0);

std::string to_string(const Rational& r);

}  // namespace webgram
