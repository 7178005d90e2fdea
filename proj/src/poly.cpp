#include "webgram/detail/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace webgram::detail {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

mpz_class content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly primitive_part(const Poly& p) {
  if (p.empty()) return {};
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  Poly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

bool divexact(const Poly& a, const Poly& b, Poly& q) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  q.clear();
  if (a.empty()) return true;
  const int da = degree(a);
  const int db = degree(b);
  if (da < db) return false;
  Poly r = a;
  q.assign(static_cast<std::size_t>(da - db + 1), 0);
  const mpz_class& lb = b.back();
  mpz_class rem;
  for (int i = da - db; i >= 0; --i) {
    mpz_class& c = r[static_cast<std::size_t>(i + db)];
    if (c == 0) continue;
    mpz_tdiv_qr(q[i].get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
    if (rem != 0) return false;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i + j)].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (int j = 0; j < db; ++j) {
    if (r[static_cast<std::size_t>(j)] != 0) return false;
  }
  trim(q);
  return true;
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  Poly r = a;
  const int db = degree(b);
  const mpz_class& lb = b.back();
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const mpz_class lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(shift + j)].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
  }
  return r;
}

Poly gcd_prs(const Poly& a, const Poly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    Poly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

unsigned long max_coeff_bits(const Poly& p) {
  std::size_t bits = 0;
  for (const auto& c : p) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

mpz_class pack(const Poly& p, unsigned long bits) {
  mpz_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    v += *it;
  }
  return v;
}

Poly unpack_balanced(mpz_class v, unsigned long bits) {
  Poly out;
  mpz_class half;
  mpz_class full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, bits);
  half = full / 2;
  mpz_class r;
  while (v != 0) {
    mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
    if (r >= half) r -= full;
    v -= r;
    mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    out.push_back(r);
  }
  trim(out);
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  if (degree(x) == 0 || degree(y) == 0) return Poly{1};
  if (x == y) return x;

  // Evaluate at 2^bits, take the integer gcd, read the digits back. The
  // candidate is accepted only if it divides both inputs, which (with the
  // bound 2^bits > 2 min(|x|,|y|) + 2) makes it the true gcd.
  unsigned long bits = std::min(max_coeff_bits(x), max_coeff_bits(y)) + 3;
  Poly quotient;
  for (int attempt = 0; attempt < 4; ++attempt) {
    mpz_class gx = pack(x, bits);
    mpz_class gy = pack(y, bits);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), gx.get_mpz_t(), gy.get_mpz_t());
    Poly cand = primitive_part(unpack_balanced(g, bits));
    if (!cand.empty() && divexact(x, cand, quotient) && divexact(y, cand, quotient)) return cand;
    bits = 2 * bits + 7;
  }
  return gcd_prs(x, y);
}

}  // namespace webgram::detail
