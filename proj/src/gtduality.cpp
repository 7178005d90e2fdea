#include "webgram/gtduality.hpp"

#include <algorithm>
#include <stdexcept>

namespace webgram {

GTChain::GTChain(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
  for (int j = 1; j <= length(); ++j) {
    if (shape(j).length() > j) {
      throw std::invalid_argument("T^(" + std::to_string(j) + ") = " + shape(j).to_string() + " has more than " +
                                  std::to_string(j) + " parts");
    }
    if (!is_horizontal_strip(shape(j - 1), shape(j))) {
      throw std::invalid_argument(shape(j).to_string() + " / " + shape(j - 1).to_string() + " is not a horizontal strip");
    }
  }
}

const Partition& GTChain::shape(int j) const {
  if (j == 0) return empty_;
  if (j < 0 || j > length()) throw std::out_of_range("chain index " + std::to_string(j));
  return shapes_[static_cast<std::size_t>(j - 1)];
}

int StripStats::M(int i, int k, int j) const {
  const int s = chain_.length();
  return chain_.shape(s)[k] - chain_.shape(j)[k] - chain_.shape(s)[i] + chain_.shape(j)[i];
}

bool is_horizontal_strip(const Partition& prev, const Partition& next) {
  const int rows = std::max(prev.length(), next.length());
  for (int i = 1; i <= rows; ++i) {
    if (next[i] < prev[i] || prev[i] < next[i + 1]) return false;
  }
  return true;
}

namespace {

void add_factorial(QIntExponents& e, int n, int sign) {
  if (n < 0) throw std::invalid_argument("negative quantum factorial argument " + std::to_string(n));
  for (int c = 2; c <= n; ++c) e[c] += sign;
}

void check_step(const Partition& prev, const Partition& next, int s, const char* what) {
  if (!is_horizontal_strip(prev, next)) {
    throw std::invalid_argument(std::string(what) + ": " + next.to_string() + " / " + prev.to_string() +
                                " is not a horizontal strip");
  }
  if (prev.length() >= s || next.length() > s) {
    throw std::invalid_argument(std::string(what) + ": needs rows(prev) < s and rows(next) <= s, s = " + std::to_string(s));
  }
}

}  // namespace

RatFunc step_norm_sq_heavy(const Partition& prev, const Partition& next, int j) {
  if (j < 2) throw std::invalid_argument("step index j must be at least 2");
  check_step(prev, next, j, "step_norm_sq_heavy");
  const Partition& a = prev;  // T^(j-1)
  const Partition& b = next;  // T^(j)
  QIntExponents e;
  for (int k = 1; k <= j - 1; ++k) add_factorial(e, b[k] - a[k], +1);
  for (int i = 1; i <= j - 1; ++i) {
    for (int k = i + 1; k <= j - 1; ++k) {
      add_factorial(e, a[i] - i - a[k] + k, +1);
      add_factorial(e, b[i] - i - a[k] + k, -1);
    }
  }
  for (int i = 1; i <= j; ++i) {
    for (int k = i + 1; k <= j; ++k) {
      add_factorial(e, b[i] - i - b[k] + k - 1, +1);
      add_factorial(e, a[i] - i - b[k] + k - 1, -1);
    }
  }
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return qint_product(e);
}

RatFunc step_norm_sq_heavy(const GTChain& chain, int j) {
  if (j < 2 || j > chain.length()) throw std::invalid_argument("step index outside 2..m");
  return step_norm_sq_heavy(chain.shape(j - 1), chain.shape(j), j);
}

RatFunc step_norm_sq_binomial(const Partition& prev, const Partition& next, int s) {
  check_step(prev, next, s, "step_norm_sq_binomial");
  auto N = [&](int i) { return next[i] - prev[i]; };
  LaurentPoly num(1);
  LaurentPoly den(1);
  for (int i = 1; i <= s; ++i) {
    for (int k = i + 1; k <= s; ++k) {
      const int c = axial_distance(next, i, k);
      num *= qbinom(c - 1, N(i));
      if (k < s) den *= qbinom(c + N(k), N(i));
    }
  }
  return RatFunc(num, den);
}

RatFunc factorial_excess(const Partition& prev, const Partition& next, int s) {
  check_step(prev, next, s, "factorial_excess");
  QIntExponents e;
  for (int i = 1; i < s; ++i) add_factorial(e, next[i] - prev[i], +2);
  std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  return qint_product(e);
}

bool lemma_long_check(const Partition& prev, const Partition& next, int s) {
  return step_norm_sq_binomial(prev, next, s) == kappa_strip_form(prev.transpose(), next.transpose()).value();
}

RatFunc full_norm_sq(const GTChain& chain) {
  RatFunc out(1);
  for (int j = 2; j <= chain.length(); ++j) out *= step_norm_sq_heavy(chain, j);
  return out;
}

namespace {

void prev_shapes(const Partition& next, int i, std::vector<int>& cur, std::vector<Partition>& out) {
  if (i > next.length()) {
    out.emplace_back(cur);
    return;
  }
  for (int v = next[i + 1]; v <= next[i]; ++v) {
    cur.push_back(v);
    prev_shapes(next, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<StripPair> horizontal_strip_pairs(int max_size, int max_rows) {
  std::vector<StripPair> out;
  for (int size = 0; size <= max_size; ++size) {
    std::vector<Partition> nexts = partitions_of(size, max_rows);
    std::sort(nexts.begin(), nexts.end());
    for (const Partition& next : nexts) {
      std::vector<Partition> prevs;
      std::vector<int> cur;
      prev_shapes(next, 1, cur, prevs);
      std::sort(prevs.begin(), prevs.end());
      for (Partition& prev : prevs) {
        const int s = std::max({2, next.length(), prev.length() + 1});
        out.push_back({std::move(prev), next, s});
      }
    }
  }
  return out;
}

GTSweep gt_sweep(int max_size, int max_rows, Exec exec) {
  const std::vector<StripPair> pairs = horizontal_strip_pairs(max_size, max_rows);
  const long count = static_cast<long>(pairs.size());
  std::vector<char> lemma(pairs.size());
  std::vector<char> equal(pairs.size());
  std::vector<char> excess(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long t = 0; t < count; ++t) {
    const StripPair& p = pairs[static_cast<std::size_t>(t)];
    const RatFunc heavy = step_norm_sq_heavy(p.prev, p.next, p.s);
    const RatFunc binomial = step_norm_sq_binomial(p.prev, p.next, p.s);
    const RatFunc kappa = kappa_strip_form(p.prev.transpose(), p.next.transpose()).value();
    lemma[static_cast<std::size_t>(t)] = binomial == kappa;
    equal[static_cast<std::size_t>(t)] = heavy == binomial;
    excess[static_cast<std::size_t>(t)] = heavy == binomial * factorial_excess(p.prev, p.next, p.s);
  }
  GTSweep out;
  out.cases = pairs.size();
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    if (!lemma[t]) out.lemma_failures.push_back(pairs[t]);
    if (!equal[t]) out.heavy_binomial_unequal.push_back(pairs[t]);
    if (!excess[t]) out.excess_failures.push_back(pairs[t]);
  }
  return out;
}

}  // namespace webgram
