#include "webgram/qarith.hpp"

#include <algorithm>
#include <sstream>

#include "webgram/detail/poly.hpp"

namespace webgram {

using detail::Poly;

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = e;
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LaurentPoly::coeff(int e) const {
  if (is_zero() || e < min_exp() || e > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::map<int, Integer> LaurentPoly::terms() const {
  std::map<int, Integer> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_dense(-max_exp(), std::move(rev));
}

bool LaurentPoly::is_symmetric() const { return *this == bar(); }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_exp(), o.max_exp());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly::from_dense(a.low_ + b.low_, detail::mul(a.coeffs_, b.coeffs_));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool LaurentPoly::divides_into(const LaurentPoly& d, LaurentPoly& quotient) const {
  if (d.is_zero()) throw std::domain_error("Laurent polynomial division by zero");
  if (is_zero()) {
    quotient = {};
    return true;
  }
  Poly qd;
  if (!detail::divexact(coeffs_, d.coeffs_, qd)) return false;
  quotient = from_dense(low_ - d.low_, std::move(qd));
  return true;
}

LaurentPoly LaurentPoly::divexact(const LaurentPoly& d) const {
  LaurentPoly quotient;
  if (!divides_into(d, quotient)) {
    throw InexactError("inexact Laurent division: (" + to_string() + ") / (" + d.to_string() + ")");
  }
  return quotient;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (is_zero()) return 0;
  if (q0 == 0 && low_ < 0) throw PoleError("Laurent polynomial with negative exponents evaluated at q = 0");
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + Rational(*it);
  Rational scale = 1;
  const Rational base = low_ >= 0 ? q0 : Rational(1) / q0;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  acc *= scale;
  acc.canonicalize();
  return acc;
}

namespace {

std::string format_terms(const std::vector<Integer>& coeffs, int low, const char* symbol) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Integer& c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int e = low + i;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << mag.get_str();
    if (e != 0) os << '*' << symbol << '^' << e;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string LaurentPoly::to_string() const { return format_terms(coeffs_, low_, "q"); }

// ------------------------------------------------------------------- RatFunc

namespace {

// Laurent polynomials as ordinary polynomials once the power of q is split off.
struct Split {
  int shift = 0;
  Poly poly;
};

Split split(const LaurentPoly& p) { return {p.min_exp(), p.dense()}; }

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly::from_dense(0, detail::gcd(a.dense(), b.dense()));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) { return laurent_gcd(a, b); }

RatFunc::RatFunc(const LaurentPoly& p) : num_(p), den_(1) {
  // A Laurent polynomial over 1 is canonical as long as its content is kept.
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  if (num.is_zero()) {
    den_ = 1;
    return;
  }
  Split n = split(num);
  Split d = split(den);
  if (detail::degree(d.poly) > 0) {
    Poly g = detail::gcd(n.poly, d.poly);
    if (detail::degree(g) > 0) {
      Poly tmp;
      detail::divexact(n.poly, g, tmp);
      n.poly = std::move(tmp);
      detail::divexact(d.poly, g, tmp);
      d.poly = std::move(tmp);
    }
  }
  Integer c = detail::content(n.poly);
  Integer cd = detail::content(d.poly);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (d.poly.back() < 0) c = -c;
  if (c != 1) {
    for (auto& x : n.poly) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d.poly) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  num_ = LaurentPoly::from_dense(n.shift - d.shift, std::move(n.poly));
  den_ = LaurentPoly::from_dense(0, std::move(d.poly));
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  if (den_.is_one()) return *this = RatFunc(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_one()) return *this = RatFunc(num_ + o.num_ * den_, den_);
  const LaurentPoly g = laurent_gcd(den_, o.den_);
  const LaurentPoly da = den_.divexact(g);
  const LaurentPoly db = o.den_.divexact(g);
  return *this = RatFunc(num_ * db + o.num_ * da, den_ * db);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  // Cross-cancel so the product of two reduced fractions stays small.
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    const LaurentPoly g = laurent_gcd(a, d);
    if (!g.is_constant()) {
      a = a.divexact(g);
      d = d.divexact(g);
    }
  }
  if (!b.is_constant()) {
    const LaurentPoly g = laurent_gcd(c, b);
    if (!g.is_constant()) {
      c = c.divexact(g);
      b = b.divexact(g);
    }
  }
  return *this = RatFunc(a * c, b * d);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of coprime, content-normalized parts stay canonical.
  return RatFunc(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)), Canonical{});
}

Rational RatFunc::eval(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (d == 0) throw PoleError("rational function evaluated at a pole");
  Rational v = num_.eval(q0) / d;
  v.canonicalize();
  return v;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ----------------------------------------------------------------- DeltaPoly

DeltaPoly::DeltaPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { detail::trim(coeffs_); }

DeltaPoly DeltaPoly::monomial(const Integer& c, unsigned e) {
  std::vector<Integer> v(e + 1);
  v[e] = c;
  return DeltaPoly(std::move(v));
}

LaurentPoly DeltaPoly::to_laurent() const {
  const LaurentPoly delta = qint(2);
  LaurentPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= delta;
    acc += LaurentPoly(*it);
  }
  return acc;
}

std::string DeltaPoly::to_string() const { return format_terms(coeffs_, 0, "d"); }

// --------------------------------------------------------- quantum numbers

LaurentPoly qint(long n) {
  if (n == 0) return {};
  if (n < 0) return -qint(-n);
  std::vector<Integer> c(static_cast<std::size_t>(2 * n - 1));
  for (std::size_t i = 0; i < c.size(); i += 2) c[i] = 1;
  return LaurentPoly::from_dense(static_cast<int>(1 - n), std::move(c));
}

LaurentPoly qfact(long n) {
  if (n < 0) throw std::invalid_argument("quantum factorial of negative integer " + std::to_string(n));
  LaurentPoly r(1);
  for (long i = 2; i <= n; ++i) r *= qint(i);
  return r;
}

LaurentPoly qbinom(long n, long k) {
  if (k < 0) throw std::invalid_argument("quantum binomial with negative lower index");
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (long i = 1; i <= k; ++i) {
    num *= qint(n - k + i);
    den *= qint(i);
  }
  return num.divexact(den);
}

DeltaPoly to_delta_poly(const LaurentPoly& p) {
  if (!p.is_symmetric()) throw std::invalid_argument("not bar-symmetric: " + p.to_string());
  if (p.is_zero()) return {};
  // Peel the top term with c * (q + q^-1)^d until nothing is left.
  const int top = p.max_exp();
  std::vector<Integer> work(p.dense());  // exponent e at index e - low
  const int low = p.min_exp();
  std::vector<Integer> out(static_cast<std::size_t>(top) + 1);
  std::vector<Integer> binom;
  for (int d = top; d >= 0; --d) {
    const Integer c = work[static_cast<std::size_t>(d - low)];
    if (c == 0) continue;
    out[static_cast<std::size_t>(d)] = c;
    binom.assign(1, Integer(1));
    for (int k = 0; k <= d; ++k) {
      if (k > 0) binom.push_back(binom.back() * (d - k + 1) / k);
      mpz_submul(work[static_cast<std::size_t>(d - 2 * k - low)].get_mpz_t(), c.get_mpz_t(), binom.back().get_mpz_t());
    }
  }
  for (const auto& c : work) {
    if (c != 0) throw InexactError("residual after delta peeling of " + p.to_string());
  }
  return DeltaPoly(std::move(out));
}

Rational eval_rational(const LaurentPoly& p, const Rational& q0) { return p.eval(q0); }
Rational eval_rational(const RatFunc& f, const Rational& q0) { return f.eval(q0); }

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace webgram
