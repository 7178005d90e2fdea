#include "webgram/kappa.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace webgram {

namespace {

void append_power(std::ostringstream& os, int c, const Integer& e) {
  os << '[' << c << ']';
  if (e != 1) os << '^' << e.get_str();
}

std::string join(const std::vector<std::pair<int, Integer>>& factors, FactorStyle style) {
  std::ostringstream os;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k > 0 && style == FactorStyle::spaced) os << ' ';
    append_power(os, factors[k].first, factors[k].second);
  }
  return os.str();
}

}  // namespace

std::string format_factored(const QIntExponents& e, FactorStyle style) {
  std::vector<std::pair<int, Integer>> up;
  std::vector<std::pair<int, Integer>> down;
  for (const auto& [c, k] : e) {
    if (c == 1 || k == 0) continue;
    if (k > 0) {
      up.emplace_back(c, k);
    } else {
      down.emplace_back(c, -k);
    }
  }
  if (up.empty() && down.empty()) return "1";
  if (style == FactorStyle::spaced) {
    std::ostringstream os;
    os << (up.empty() ? "1" : join(up, style));
    for (const auto& [c, k] : down) {
      os << " /";
      append_power(os, c, k);
    }
    return os.str();
  }
  std::string out = up.empty() ? "1" : join(up, style);
  if (!down.empty()) out += down.size() == 1 ? "/" + join(down, style) : "/(" + join(down, style) + ")";
  return out;
}

RatFunc qint_product(const QIntExponents& e) {
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (const auto& [c, k] : e) {
    if (c == 1 || k == 0) continue;
    if (c < 1) throw std::invalid_argument("quantum integer factor [" + std::to_string(c) + "] in a product");
    const Integer m = abs(k);
    if (!m.fits_ulong_p()) throw std::overflow_error("exponent too large to expand");
    (k > 0 ? num : den) *= qint(c).pow(m.get_ui());
  }
  return RatFunc(num, den);
}

KappaValue::KappaValue(std::vector<int> ratios) : ratios_(std::move(ratios)), value_(1) {
  for (int c : ratios_) {
    if (c < 2) {
      throw std::logic_error("intersection form factor [" + std::to_string(c) + "]/[" + std::to_string(c - 1) +
                             "] on a valid edge");
    }
  }
  value_ = qint_product(exponents());
}

QIntExponents KappaValue::exponents() const {
  QIntExponents e;
  for (int c : ratios_) {
    e[c] += 1;
    if (c - 1 > 1) e[c - 1] -= 1;
  }
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return e;
}

std::string KappaValue::to_string(FactorStyle style) const { return format_factored(exponents(), style); }

KappaValue kappa_root_form(const Partition& lambda, const MinusculeWeight& mu) {
  if (!add_strip(lambda, mu)) {
    throw std::invalid_argument(lambda.to_string() + " + " + mu.to_string() + " is not a partition");
  }
  std::vector<int> ratios;
  for (const RootPair& r : phi_set(mu)) ratios.push_back(axial_distance(lambda, r.i, r.j));
  return KappaValue(std::move(ratios));
}

bool is_vertical_strip(const Partition& src, const Partition& dst) {
  const int rows = std::max(src.length(), dst.length());
  for (int i = 1; i <= rows; ++i) {
    const int d = dst[i] - src[i];
    if (d != 0 && d != 1) return false;
  }
  return true;
}

KappaValue kappa_strip_form(const Partition& src, const Partition& dst) {
  if (!is_vertical_strip(src, dst)) {
    throw std::invalid_argument(dst.to_string() + " / " + src.to_string() + " is not a vertical strip");
  }
  // Distances are read on the source shape. Reading them on dst instead
  // gives [1]/[0] already for (2,2,1) -> (3,3,1,1), so that reading is not
  // offered.
  std::vector<int> ratios;
  const int rows = dst.length();
  for (int i = 1; i <= rows; ++i) {
    if (dst[i] != src[i]) continue;
    for (int j = i + 1; j <= rows; ++j) {
      if (dst[j] != src[j]) ratios.push_back(axial_distance(src, i, j));
    }
  }
  return KappaValue(std::move(ratios));
}

KappaValue kappa_tl(int m) {
  if (m < 1) throw std::invalid_argument("kappa_tl needs m >= 1, got " + std::to_string(m));
  return KappaValue({m + 1});
}

}  // namespace webgram
