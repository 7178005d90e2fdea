#include "webgram/tldiagrams.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "webgram/detail/poly.hpp"

namespace webgram {

using detail::Poly;

// --------------------------------------------------------------- LinkPattern

LinkPattern::LinkPattern(int points, std::vector<int> partner) : partner_(std::move(partner)) {
  if (static_cast<int>(partner_.size()) != points) throw std::invalid_argument("link pattern size mismatch");
  for (int p = 0; p < points; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q == -1) continue;
    if (q < 0 || q >= points || q == p || partner_[static_cast<std::size_t>(q)] != p) {
      throw std::invalid_argument("link pattern partners are not a matching");
    }
  }
  for (int i = 0; i < points; ++i) {
    const int j = partner_[static_cast<std::size_t>(i)];
    if (j <= i) continue;
    for (int k = i + 1; k < j; ++k) {
      const int l = partner_[static_cast<std::size_t>(k)];
      if (l == -1) throw std::invalid_argument("defect nested under an arc");
      if (l < i || l > j) throw std::invalid_argument("crossing arcs in link pattern");
    }
  }
}

LinkPattern LinkPattern::from_closers(int points, const std::vector<int>& closers) {
  std::vector<bool> is_closer(static_cast<std::size_t>(points), false);
  for (int c : closers) {
    if (c < 1 || c > points) throw std::invalid_argument("closer outside 1..a");
    is_closer[static_cast<std::size_t>(c - 1)] = true;
  }
  std::vector<int> partner(static_cast<std::size_t>(points), -1);
  std::vector<int> open;
  for (int p = 0; p < points; ++p) {
    if (!is_closer[static_cast<std::size_t>(p)]) {
      open.push_back(p);
      continue;
    }
    if (open.empty()) throw std::invalid_argument("closer " + std::to_string(p + 1) + " has nothing to close");
    partner[static_cast<std::size_t>(p)] = open.back();
    partner[static_cast<std::size_t>(open.back())] = p;
    open.pop_back();
  }
  return LinkPattern(points, std::move(partner));
}

int LinkPattern::defects() const { return static_cast<int>(std::count(partner_.begin(), partner_.end(), -1)); }

std::vector<int> LinkPattern::closers() const {
  std::vector<int> out;
  for (int p = 0; p < points(); ++p) {
    if (partner(p) >= 0 && partner(p) < p) out.push_back(p + 1);
  }
  return out;
}

std::string LinkPattern::to_string() const {
  std::ostringstream os;
  for (int p = 0; p < points(); ++p) {
    if (partner(p) > p) os << '(' << p + 1 << ',' << partner(p) + 1 << ')';
  }
  os << '|';
  bool first = true;
  for (int p = 0; p < points(); ++p) {
    if (partner(p) != -1) continue;
    os << (first ? "" : ",") << p + 1;
    first = false;
  }
  return os.str();
}

namespace {

void closer_sets(int a, int remaining, int p, int open, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (p > a) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (a - p + 1 < remaining) return;
  closer_sets(a, remaining, p + 1, open + 1, cur, out);
  if (remaining > 0 && open > 0) {
    cur.push_back(p);
    closer_sets(a, remaining - 1, p + 1, open - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LinkPattern> enumerate_link_patterns(int a, int m) {
  if (a < 0 || m < 0 || m > a || (a - m) % 2 != 0) {
    throw std::invalid_argument("no link patterns with a=" + std::to_string(a) + " points and m=" + std::to_string(m) +
                                " defects");
  }
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  closer_sets(a, (a - m) / 2, 1, 0, cur, sets);
  std::sort(sets.begin(), sets.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  std::vector<LinkPattern> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(LinkPattern::from_closers(a, s));
  return out;
}

std::optional<int> pairing_loops(const LinkPattern& p, const LinkPattern& r) {
  if (p.points() != r.points() || p.defects() != r.defects()) {
    throw std::invalid_argument("pairing of link patterns of different shapes");
  }
  const int a = p.points();
  std::vector<bool> seen(static_cast<std::size_t>(a), false);
  // Strands starting at a defect of p alternate r-arcs and p-arcs.
  for (int s = 0; s < a; ++s) {
    if (p.partner(s) != -1) continue;
    int cur = s;
    while (true) {
      seen[static_cast<std::size_t>(cur)] = true;
      const int across = r.partner(cur);
      if (across == -1) break;
      seen[static_cast<std::size_t>(across)] = true;
      const int back = p.partner(across);
      if (back == -1) return std::nullopt;
      cur = back;
    }
  }
  int loops = 0;
  for (int s = 0; s < a; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    if (r.partner(s) == -1) return std::nullopt;
    ++loops;
    int cur = s;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      const int across = r.partner(cur);
      seen[static_cast<std::size_t>(across)] = true;
      cur = p.partner(across);
    } while (cur != s);
  }
  return loops;
}

LaurentPoly pairing(const LinkPattern& p, const LinkPattern& r) {
  const auto loops = pairing_loops(p, r);
  if (!loops) return LaurentPoly();
  return qint(2).pow(static_cast<unsigned long>(*loops));
}

ExponentMatrix gram_exponents(int a, int m, Exec exec) {
  const std::vector<LinkPattern> basis = enumerate_link_patterns(a, m);
  const int n = static_cast<int>(basis.size());
  ExponentMatrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto loops = pairing_loops(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = loops ? *loops : -1;
    }
  }
  return g;
}

PolyMatrix gram_matrix(int a, int m, Exec exec) {
  const ExponentMatrix e = gram_exponents(a, m, exec);
  PolyMatrix g(e.size());
  const LaurentPoly delta = qint(2);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int x : e[i]) g[i].push_back(x < 0 ? LaurentPoly() : delta.pow(static_cast<unsigned long>(x)));
  }
  return g;
}

LaurentPoly det_bareiss(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return LaurentPoly();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Primes just above 2^61, generated once and extended on demand.
u64 modulus(std::size_t k) {
  static std::vector<u64> primes;
  static std::mutex lock;
  const std::lock_guard<std::mutex> guard(lock);
  mpz_class cur = primes.empty() ? mpz_class(1) << 61 : mpz_class(static_cast<unsigned long>(primes.back()));
  while (primes.size() <= k) {
    mpz_nextprime(cur.get_mpz_t(), cur.get_mpz_t());
    primes.push_back(cur.get_ui());
  }
  return primes[k];
}

// det of (x^e_ij) modulo p by Gaussian elimination; `m` is n*n scratch.
u64 det_at(const ExponentMatrix& e, const std::vector<u64>& powers, u64 p, std::vector<u64>& m) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = e[i][j] < 0 ? 0 : powers[static_cast<std::size_t>(e[i][j])];
  }
  u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap_ranges(m.begin() + static_cast<long>(piv * n), m.begin() + static_cast<long>(piv * n + n),
                       m.begin() + static_cast<long>(k * n));
      det = det == 0 ? 0 : p - det;
    }
    const u64 pivot = m[k * n + k];
    det = mulmod(det, pivot, p);
    const u64 inv = invmod(pivot, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 f = mulmod(m[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        const u64 t = mulmod(f, m[k * n + j], p);
        u64& x = m[i * n + j];
        x = x >= t ? x - t : x + p - t;
      }
    }
  }
  return det;
}

// Coefficients of the polynomial of degree <= D taking values[x] at x = 0..D.
std::vector<u64> interpolate(std::vector<u64> c, u64 p) {
  const std::size_t D = c.size() - 1;
  std::vector<u64> inv(D + 1, 1);
  for (std::size_t j = 1; j <= D; ++j) inv[j] = invmod(j, p);
  // Newton divided differences; nodes differ by j at level j.
  for (std::size_t j = 1; j <= D; ++j) {
    for (std::size_t i = D; i >= j; --i) {
      const u64 diff = c[i] >= c[i - 1] ? c[i] - c[i - 1] : c[i] + p - c[i - 1];
      c[i] = mulmod(diff, inv[j], p);
    }
  }
  // Horner on the Newton form: poly = poly * (x - i) + c[i].
  std::vector<u64> poly(D + 1, 0);
  poly[0] = c[D];
  for (std::size_t i = D; i-- > 0;) {
    const std::size_t deg = D - 1 - i;
    for (std::size_t k = deg + 2; k-- > 0;) {
      const u64 shifted = k == 0 ? 0 : poly[k - 1];
      const u64 t = mulmod(poly[k], i, p);
      poly[k] = shifted >= t ? shifted - t : shifted + p - t;
    }
    poly[0] = (poly[0] + c[i]) % p;
  }
  return poly;
}

}  // namespace

LaurentPoly det_delta_powers(const ExponentMatrix& e, Exec exec) {
  const std::size_t n = e.size();
  for (const auto& row : e) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return LaurentPoly(1);

  // det is a polynomial in d of degree at most D = sum of row maxima. Its
  // coefficients are bounded by its maximum on |d| = 1 (Cauchy), where every
  // nonzero entry has modulus 1, so Hadamard's inequality gives
  // |c_k| <= prod sqrt(r_i), r_i the nonzeros of row i.
  double log2_bound = 0;
  std::size_t D = 0;
  int max_exp = 0;
  for (const auto& row : e) {
    const auto r = std::count_if(row.begin(), row.end(), [](int x) { return x >= 0; });
    if (r == 0) return LaurentPoly();
    log2_bound += 0.5 * std::log2(static_cast<double>(r));
    const int top = *std::max_element(row.begin(), row.end());
    D += static_cast<std::size_t>(top);
    max_exp = std::max(max_exp, top);
  }

  // Residues of every coefficient modulo enough primes, combined by CRT.
  std::vector<mpz_class> coeffs(D + 1, 0);
  mpz_class M = 1;
  for (std::size_t k = 0; mpz_sizeinbase(M.get_mpz_t(), 2) < static_cast<std::size_t>(log2_bound) + 3; ++k) {
    const u64 p = modulus(k);
    std::vector<u64> values(D + 1);
    const long points = static_cast<long>(D + 1);
#pragma omp parallel if (exec == Exec::parallel)
    {
      std::vector<u64> scratch(n * n);
      std::vector<u64> powers(static_cast<std::size_t>(max_exp) + 1);
#pragma omp for schedule(dynamic)
      for (long x = 0; x < points; ++x) {
        powers[0] = 1;
        for (std::size_t j = 1; j < powers.size(); ++j) powers[j] = mulmod(powers[j - 1], static_cast<u64>(x), p);
        values[static_cast<std::size_t>(x)] = det_at(e, powers, p, scratch);
      }
    }
    const std::vector<u64> residues = interpolate(std::move(values), p);
    // coeffs += M * ((r - coeffs) / M mod p)
    const mpz_class P(static_cast<unsigned long>(p));
    const mpz_class Minv = [&] {
      mpz_class m = M % P;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
      return inv;
    }();
    for (std::size_t i = 0; i <= D; ++i) {
      mpz_class t = (mpz_class(static_cast<unsigned long>(residues[i])) - coeffs[i]) * Minv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t());
      coeffs[i] += M * t;
    }
    M *= P;
  }
  const mpz_class half = M / 2;
  for (auto& c : coeffs) {
    if (c > half) c -= M;
  }
  return DeltaPoly(std::move(coeffs)).to_laurent();
}

LaurentPoly tl_gram_det(int a, int m, Exec exec) { return det_delta_powers(gram_exponents(a, m, exec), exec); }

// ------------------------------------------------------------------- Diagram

Diagram Diagram::identity(int n) {
  if (n < 0 || n > kMaxStrands) throw std::invalid_argument("diagram strand count outside 0..8");
  Diagram d;
  d.n_ = n;
  for (int i = 0; i < n; ++i) {
    d.set(i, n + i);
    d.set(n + i, i);
  }
  return d;
}

Diagram Diagram::cap_cup(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator e_" + std::to_string(i) + " on " + std::to_string(n) + " strands");
  Diagram d = identity(n);
  d.set(i - 1, i);
  d.set(i, i - 1);
  d.set(n + i - 1, n + i);
  d.set(n + i, n + i - 1);
  return d;
}

Diagram Diagram::from_partners(int n, const std::vector<int>& partner) {
  if (n < 0 || n > kMaxStrands || static_cast<int>(partner.size()) != 2 * n) {
    throw std::invalid_argument("diagram needs 2n partners with n <= 8");
  }
  // Position around the boundary: top left to right, then bottom right to left.
  auto pos = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
  Diagram d;
  d.n_ = n;
  for (int p = 0; p < 2 * n; ++p) {
    const int q = partner[static_cast<std::size_t>(p)];
    if (q < 0 || q >= 2 * n || q == p || partner[static_cast<std::size_t>(q)] != p) {
      throw std::invalid_argument("diagram partners are not a perfect matching");
    }
    d.set(p, q);
  }
  for (int p = 0; p < 2 * n; ++p) {
    const int a = std::min(pos(p), pos(d.partner(p)));
    const int b = std::max(pos(p), pos(d.partner(p)));
    for (int s = 0; s < 2 * n; ++s) {
      const int c = pos(s);
      const int e = pos(d.partner(s));
      if (a < c && c < b && (e < a || e > b)) throw std::invalid_argument("diagram is not planar");
    }
  }
  return d;
}

Diagram::Product Diagram::compose(const Diagram& below) const {
  if (n_ != below.n_) throw std::invalid_argument("composing diagrams with different strand counts");
  const int n = n_;
  const Diagram& a = *this;
  const Diagram& b = below;
  Product out;
  out.diagram.n_ = n;
  unsigned visited = 0;
  unsigned done = 0;
  // From a top point of a: alternate a and b through the middle row.
  for (int t = 0; t < n; ++t) {
    if (done & (1u << t)) continue;
    int p = a.partner(t);
    int end;
    while (true) {
      if (p < n) {
        end = p;
        break;
      }
      const int k = p - n;
      visited |= 1u << k;
      const int p2 = b.partner(k);
      if (p2 >= n) {
        end = p2;
        break;
      }
      visited |= 1u << p2;
      p = a.partner(n + p2);
    }
    out.diagram.set(t, end);
    out.diagram.set(end, t);
    done |= (1u << t) | (1u << end);
  }
  for (int u = n; u < 2 * n; ++u) {
    if (done & (1u << u)) continue;
    int p = b.partner(u);
    int end;
    while (true) {
      if (p >= n) {
        end = p;
        break;
      }
      visited |= 1u << p;
      const int p2 = a.partner(n + p);
      if (p2 < n) {
        end = p2;
        break;
      }
      const int k2 = p2 - n;
      visited |= 1u << k2;
      p = b.partner(k2);
    }
    out.diagram.set(u, end);
    out.diagram.set(end, u);
    done |= (1u << u) | (1u << end);
  }
  for (int k = 0; k < n; ++k) {
    if (visited & (1u << k)) continue;
    ++out.loops;
    int cur = k;
    do {
      visited |= 1u << cur;
      const int nxt = a.partner(n + cur) - n;
      visited |= 1u << nxt;
      cur = b.partner(nxt);
    } while (cur != k);
  }
  return out;
}

Diagram Diagram::tensor_identity() const {
  if (n_ >= kMaxStrands) throw std::invalid_argument("diagram already has the maximal strand count");
  const int n = n_;
  auto map = [n](int p) { return p < n ? p : p + 1; };
  Diagram d;
  d.n_ = n + 1;
  for (int p = 0; p < 2 * n; ++p) d.set(map(p), map(partner(p)));
  d.set(n, 2 * n + 1);
  d.set(2 * n + 1, n);
  return d;
}

Diagram::Trace Diagram::partial_trace() const {
  if (n_ < 1) throw std::invalid_argument("partial trace of the empty diagram");
  const int n = n_;
  const int top = n - 1;
  const int bottom = 2 * n - 1;
  auto map = [n](int p) { return p < n - 1 ? p : p - 1; };
  Trace out;
  out.diagram.n_ = n - 1;
  if (partner(top) == bottom) out.loops = 1;
  for (int p = 0; p < 2 * n; ++p) {
    if (p == top || p == bottom) continue;
    int q = partner(p);
    if (q == top) {
      q = partner(bottom);
    } else if (q == bottom) {
      q = partner(top);
    }
    out.diagram.set(map(p), map(q));
  }
  return out;
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int p = 0; p < 2 * n_; ++p) {
    const int q = partner(p);
    if (q < p) continue;
    auto name = [this](int x) { return x < n_ ? "t" + std::to_string(x + 1) : "b" + std::to_string(x - n_ + 1); };
    os << (first ? "" : " ") << name(p) << '-' << name(q);
    first = false;
  }
  os << '}';
  return os.str();
}

// ----------------------------------------------------------------- TLElement

TLElement TLElement::identity(int n) {
  TLElement e(n);
  e.add(Diagram::identity(n), RatFunc(1));
  return e;
}

TLElement TLElement::generator(int n, int i) {
  TLElement e(n);
  e.add(Diagram::cap_cup(n, i), RatFunc(1));
  return e;
}

RatFunc TLElement::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? RatFunc(0) : it->second;
}

void TLElement::add(const Diagram& d, const RatFunc& c) {
  if (d.strands() != n_) throw std::invalid_argument("diagram strand count differs from the element");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

TLElement& TLElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

TLElement TLElement::tensor_identity() const {
  TLElement out(n_ + 1);
  for (const auto& [d, c] : terms_) out.terms_.emplace(d.tensor_identity(), c);
  return out;
}

TLElement TLElement::partial_trace() const {
  TLElement out(n_ - 1);
  const RatFunc delta(qint(2));
  for (const auto& [d, c] : terms_) {
    const Diagram::Trace t = d.partial_trace();
    out.add(t.diagram, t.loops ? c * delta : c);
  }
  return out;
}

namespace {

// Coefficients c_i = N_i q^shift / den with N_i ordinary polynomials.
struct CommonDenominator {
  std::vector<Diagram> diagrams;
  std::vector<Poly> numerators;
  LaurentPoly den{1};
  int shift = 0;
  mpz_class l1 = 0;  // sum of |coefficients| over all numerators
};

CommonDenominator common_denominator(const TLElement& x) {
  CommonDenominator out;
  for (const auto& [d, c] : x.terms()) {
    if (c.den().is_one()) continue;
    out.den *= c.den().divexact(gcd(out.den, c.den()));
  }
  std::vector<LaurentPoly> nums;
  int shift = 0;
  for (const auto& [d, c] : x.terms()) {
    LaurentPoly num = c.num() * out.den.divexact(c.den());
    shift = nums.empty() ? num.min_exp() : std::min(shift, num.min_exp());
    out.diagrams.push_back(d);
    nums.push_back(std::move(num));
  }
  out.shift = shift;
  for (const LaurentPoly& num : nums) {
    Poly p(static_cast<std::size_t>(num.min_exp() - shift), 0);
    for (const Integer& v : num.dense()) {
      p.push_back(v);
      out.l1 += abs(v);
    }
    out.numerators.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TLElement multiply(const TLElement& a, const TLElement& b, Exec exec) {
  if (a.strands() != b.strands()) throw std::invalid_argument("multiplying elements with different strand counts");
  const int n = a.strands();
  TLElement out(n);
  if (a.is_zero() || b.is_zero()) return out;
  const CommonDenominator ca = common_denominator(a);
  const CommonDenominator cb = common_denominator(b);

  // Result numerators are sums of N_a N_b d^k, k <= n/2 closed loops. Every
  // term is scaled by q^L, L = n/2, so d^k q^L = (q^2+1)^k q^(L-k) is an
  // ordinary polynomial whose coefficients sum to 2^k <= 2^L.
  const int max_loops = n / 2;
  const mpz_class bound = ca.l1 * cb.l1 << max_loops;
  const unsigned long bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 2;

  std::vector<mpz_class> pa;
  std::vector<mpz_class> pb;
  for (const Poly& p : ca.numerators) pa.push_back(detail::pack(p, bits));
  for (const Poly& p : cb.numerators) pb.push_back(detail::pack(p, bits));
  std::vector<mpz_class> loop_factor;
  for (int k = 0; k <= max_loops; ++k) {
    Poly f{1};
    for (int s = 0; s < k; ++s) f = detail::mul(f, Poly{1, 0, 1});
    f.insert(f.begin(), static_cast<std::size_t>(max_loops - k), mpz_class(0));
    loop_factor.push_back(detail::pack(f, bits));
  }

  std::unordered_map<std::uint64_t, std::pair<Diagram, mpz_class>> total;
  const long nb = static_cast<long>(cb.diagrams.size());
#pragma omp parallel if (exec == Exec::parallel)
  {
    std::unordered_map<std::uint64_t, std::pair<Diagram, mpz_class>> local;
    std::unordered_map<std::uint64_t, std::pair<Diagram, std::vector<mpz_class>>> bucket;
    mpz_class acc;
#pragma omp for schedule(dynamic)
    for (long j = 0; j < nb; ++j) {
      // Group the products d_i d_j by result and loop count first, so the
      // expensive multiplication by N_b runs once per distinct result.
      bucket.clear();
      const Diagram& dj = cb.diagrams[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < ca.diagrams.size(); ++i) {
        const Diagram::Product pr = ca.diagrams[i].compose(dj);
        auto [it, inserted] = bucket.try_emplace(pr.diagram.key());
        if (inserted) {
          it->second.first = pr.diagram;
          it->second.second.assign(static_cast<std::size_t>(max_loops + 1), 0);
        }
        it->second.second[static_cast<std::size_t>(pr.loops)] += pa[i];
      }
      for (auto& [key, entry] : bucket) {
        acc = 0;
        for (int k = 0; k <= max_loops; ++k) {
          const mpz_class& v = entry.second[static_cast<std::size_t>(k)];
          if (v != 0) mpz_addmul(acc.get_mpz_t(), v.get_mpz_t(), loop_factor[static_cast<std::size_t>(k)].get_mpz_t());
        }
        acc *= pb[static_cast<std::size_t>(j)];
        auto [it, inserted] = local.try_emplace(key, entry.first, 0);
        it->second.second += acc;
      }
    }
#pragma omp critical
    for (auto& [key, entry] : local) {
      auto [it, inserted] = total.try_emplace(key, entry.first, 0);
      it->second.second += entry.second;
    }
  }

  const LaurentPoly den = ca.den * cb.den;
  const int low = ca.shift + cb.shift - max_loops;
  for (auto& [key, entry] : total) {
    if (entry.second == 0) continue;
    const LaurentPoly num = LaurentPoly::from_dense(low, detail::unpack_balanced(entry.second, bits));
    out.add(entry.first, RatFunc(num, den));
  }
  return out;
}

TLElement multiply_reference(const TLElement& a, const TLElement& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("multiplying elements with different strand counts");
  TLElement out(a.strands());
  const RatFunc delta(qint(2));
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      const Diagram::Product pr = da.compose(db);
      out.add(pr.diagram, ca * cb * delta.pow(pr.loops));
    }
  }
  return out;
}

TLElement jones_wenzl(int n, Exec exec) {
  if (n < 1 || n > Diagram::kMaxStrands) {
    throw std::invalid_argument("Jones-Wenzl element needs 1 <= n <= 8, got " + std::to_string(n));
  }
  TLElement jw = TLElement::identity(1);
  for (int k = 1; k < n; ++k) {
    const TLElement x = jw.tensor_identity();
    const TLElement xe = multiply(x, TLElement::generator(k + 1, k), exec);
    jw = x - multiply(xe, x, exec) * RatFunc(qint(k), qint(k + 1));
  }
  return jw;
}

JWReport jw_checks(int n, Exec exec) {
  if (n < 2 || n > Diagram::kMaxStrands) throw std::invalid_argument("jw_checks needs 2 <= n <= 8");
  JWReport report;
  report.n = n;
  const TLElement jw = jones_wenzl(n, exec);
  report.terms = jw.terms().size();
  report.identity_coefficient = jw.coeff(Diagram::identity(n)).is_one();
  report.idempotent = multiply(jw, jw, exec) == jw;
  report.cap_killing = true;
  for (int i = 1; i < n && report.cap_killing; ++i) {
    const TLElement e = TLElement::generator(n, i);
    report.cap_killing = multiply(e, jw, exec).is_zero() && multiply(jw, e, exec).is_zero();
  }
  report.trace_rule = jw.partial_trace() == jones_wenzl(n - 1, exec) * RatFunc(qint(n + 1), qint(n));
  return report;
}

}  // namespace webgram
