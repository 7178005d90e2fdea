#include "webgram/tableaux.hpp"

#include <sstream>
#include <stdexcept>

namespace webgram {

namespace {

void extend(const Word& x, const Partition& lambda, std::vector<MinusculeWeight>& steps, const Partition& cur,
            std::vector<PathTableau>& out) {
  const int t = static_cast<int>(steps.size());
  if (t == x.length()) {
    if (cur == lambda) out.push_back({steps, cur});
    return;
  }
  for (const MinusculeWeight& mu : omega(x[t], x.rank())) {
    std::optional<Partition> next = add_strip(cur, mu);
    if (!next) continue;
    bool inside = next->length() <= lambda.length();
    for (int i = 1; inside && i <= next->length(); ++i) inside = (*next)[i] <= lambda[i];
    if (!inside) continue;
    steps.push_back(mu);
    extend(x, lambda, steps, *next, out);
    steps.pop_back();
  }
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

std::vector<PathTableau> enumerate_paths(const Word& x, const Partition& lambda) {
  std::vector<PathTableau> out;
  if (lambda.size() != x.total()) return out;
  std::vector<MinusculeWeight> steps;
  extend(x, lambda, steps, Partition(), out);
  return out;
}

Filling to_row_ssyt(const PathTableau& p) {
  Filling f(static_cast<std::size_t>(p.shape.length()));
  for (std::size_t t = 0; t < p.steps.size(); ++t) {
    for (int i = 1; i <= p.steps[t].length(); ++i) {
      if (p.steps[t][i] == 1) f[static_cast<std::size_t>(i - 1)].push_back(static_cast<int>(t) + 1);
    }
  }
  return f;
}

PathTableau from_row_ssyt(const Filling& f, const Word& x) {
  const int n = x.rank();
  if (static_cast<int>(f.size()) > n) throw std::invalid_argument("filling has more rows than the rank");
  std::vector<std::vector<int>> bits(static_cast<std::size_t>(x.length()), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].empty()) throw std::invalid_argument("filling has an empty row");
    for (std::size_t k = 0; k < f[i].size(); ++k) {
      const int t = f[i][k];
      if (t < 1 || t > x.length()) throw std::invalid_argument("filling entry " + std::to_string(t) + " out of range");
      if (k > 0 && t <= f[i][k - 1]) throw std::invalid_argument("filling rows must strictly increase");
      bits[static_cast<std::size_t>(t - 1)][i] = 1;
    }
  }
  PathTableau p;
  Partition cur;
  for (int t = 0; t < x.length(); ++t) {
    MinusculeWeight mu(bits[static_cast<std::size_t>(t)]);
    if (mu.ones() != x[t]) {
      throw std::invalid_argument("entry " + std::to_string(t + 1) + " appears " + std::to_string(mu.ones()) +
                                  " times, expected " + std::to_string(x[t]));
    }
    std::optional<Partition> next = add_strip(cur, mu);
    if (!next) throw std::invalid_argument("entries up to " + std::to_string(t + 1) + " do not form a partition");
    cur = *next;
    p.steps.push_back(std::move(mu));
  }
  p.shape = cur;
  if (to_row_ssyt(p) != f) throw std::invalid_argument("filling is not the filling of a path");
  return p;
}

std::string filling_to_string(const Filling& f) {
  bool wide = false;
  for (const auto& row : f) {
    for (int v : row) wide = wide || v > 9;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << '/';
    for (std::size_t k = 0; k < f[i].size(); ++k) {
      if (k && wide) os << ',';
      os << f[i][k];
    }
  }
  return os.str();
}

Filling parse_filling(std::string_view text) {
  Filling f;
  if (text.empty()) return f;
  const bool wide = text.find(',') != std::string_view::npos;
  std::vector<int> row;
  std::string num;
  auto flush_num = [&] {
    if (num.empty()) throw ParseError("empty entry in filling '" + std::string(text) + "'");
    row.push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      num += ch;
      if (!wide) flush_num();
    } else if (ch == ',' && wide) {
      flush_num();
    } else if (ch == '/') {
      if (wide) flush_num();
      f.push_back(std::move(row));
      row.clear();
    } else {
      throw ParseError("bad character in filling '" + std::string(text) + "'");
    }
  }
  if (wide) flush_num();
  f.push_back(std::move(row));
  return f;
}

Integer dim_two_row(int a, int l2) {
  if (a < 0 || l2 < 0 || 2 * l2 > a) {
    throw std::invalid_argument("two-row shape needs 0 <= l2 <= a/2, got a=" + std::to_string(a) + ", l2=" + std::to_string(l2));
  }
  return binomial(a, l2) - binomial(a, l2 - 1);
}

Integer dim_three_row(int a, int l1, int l2, int l3) {
  if (l3 < 0 || l2 < l3 || l1 < l2 || l1 + l2 + l3 != a) {
    throw std::invalid_argument("(" + std::to_string(l1) + "," + std::to_string(l2) + "," + std::to_string(l3) +
                                ") is not a partition of " + std::to_string(a));
  }
  Integer num = factorial(a) * (l1 - l2 + 1) * (l1 - l3 + 2) * (l2 - l3 + 1);
  Integer den = factorial(l1 + 2) * factorial(l2 + 1) * factorial(l3);
  return num / den;
}

}  // namespace webgram
