#include "webgram/gram.hpp"

#include <map>
#include <stdexcept>

namespace webgram {

namespace {

GramDeterminant from_counts(const ReducedYoungPoset& poset, const std::vector<Integer>& down, const std::vector<Integer>& up) {
  GramDeterminant det;
  for (const PosetEdge& e : poset.edges()) {
    const Integer mult = down[e.from] * up[e.to];
    if (mult == 0 || e.kappa.is_one()) continue;
    for (const auto& [c, k] : e.kappa.exponents()) det.exponents[c] += k * mult;
    det.kappa_powers.emplace_back(e.kappa, mult);
  }
  std::erase_if(det.exponents, [](const auto& kv) { return kv.second == 0; });
  det.value = qint_product(det.exponents);
  if (!det.value.is_laurent()) {
    throw InexactError("Gram determinant " + det.value.to_string() + " is not a Laurent polynomial");
  }
  det.delta_form = to_delta_poly(det.value.num());
  return det;
}

GramDeterminant degenerate() {
  GramDeterminant det;
  det.degenerate = true;
  det.delta_form = DeltaPoly({Integer(1)});
  return det;
}

}  // namespace

GramDeterminant gram_det_closed(const Word& x, const Partition& lambda) {
  const ReducedYoungPoset poset = build_poset(x, lambda);
  if (!poset.find(lambda)) return degenerate();
  std::vector<Integer> down;
  std::vector<Integer> up;
  for (const PosetNode& n : poset.nodes()) {
    down.push_back(n.paths_from_bottom);
    up.push_back(n.paths_to_top);
  }
  return from_counts(poset, down, up);
}

GramDeterminant gram_det_closed(const ReducedYoungPoset& full, const Partition& lambda) {
  if (full.target()) throw std::invalid_argument("gram_det_closed expects a poset built without a target");
  if (lambda.size() != full.word().total()) {
    throw std::invalid_argument("weight " + lambda.to_string() + " has the wrong size for the word " + full.word().to_string());
  }
  const auto v = full.find(lambda);
  if (!v) return degenerate();
  const PathCounts pc = path_counts(full, lambda);
  return from_counts(full, pc.from_bottom, pc.to_target);
}

struct GramRecursion::Memo {
  explicit Memo(const Word& x) : x_(x) {}

  Integer paths(int t, const Partition& lambda) {
    if (t == 0) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(t, lambda);
    if (auto it = paths_.find(key); it != paths_.end()) return it->second;
    Integer total = 0;
    for (const auto& [prev, mu] : predecessors(t, lambda)) total += paths(t - 1, prev);
    paths_.emplace(std::move(key), total);
    return total;
  }

  RatFunc det(int t, const Partition& lambda) {
    if (t == 0) return RatFunc(1);
    auto key = std::make_pair(t, lambda);
    if (auto it = dets_.find(key); it != dets_.end()) return it->second;
    RatFunc out(1);
    for (const auto& [prev, mu] : predecessors(t, lambda)) {
      const Integer d = paths(t - 1, prev);
      if (d == 0) continue;
      out *= kappa_root_form(prev, mu).value().pow(d.get_si());
      out *= det(t - 1, prev);
    }
    dets_.emplace(std::move(key), out);
    return out;
  }

 private:
  // Shapes lambda - mu that are partitions, mu running over the 0/1 weights
  // of the t-th letter.
  std::vector<std::pair<Partition, MinusculeWeight>> predecessors(int t, const Partition& lambda) const {
    std::vector<std::pair<Partition, MinusculeWeight>> out;
    for (const MinusculeWeight& mu : omega(x_[t - 1], x_.rank())) {
      std::vector<int> parts(static_cast<std::size_t>(std::max(lambda.length(), mu.length())));
      bool ok = lambda.length() <= mu.length();
      for (int i = 1; ok && i <= static_cast<int>(parts.size()); ++i) {
        parts[static_cast<std::size_t>(i - 1)] = lambda[i] - mu[i];
        ok = parts[static_cast<std::size_t>(i - 1)] >= 0 && (i == 1 || parts[static_cast<std::size_t>(i - 1)] <= parts[static_cast<std::size_t>(i - 2)]);
      }
      if (ok) out.emplace_back(Partition(std::move(parts)), mu);
    }
    return out;
  }

  const Word& x_;
  std::map<std::pair<int, Partition>, Integer> paths_;
  std::map<std::pair<int, Partition>, RatFunc> dets_;
};

GramRecursion::GramRecursion(Word x) : x_(std::move(x)), memo_(std::make_unique<Memo>(x_)) {}
GramRecursion::~GramRecursion() = default;

RatFunc GramRecursion::det(const Partition& lambda) {
  if (lambda.size() != x_.total()) {
    throw std::invalid_argument("weight " + lambda.to_string() + " has the wrong size for the word " + x_.to_string());
  }
  return memo_->det(x_.length(), lambda);
}

Integer GramRecursion::paths(const Partition& lambda) {
  if (lambda.size() != x_.total()) return 0;
  return memo_->paths(x_.length(), lambda);
}

RatFunc gram_det_recursive(const Word& x, const Partition& lambda) {
  GramRecursion r(x);
  return r.det(lambda);
}

Integer cell_dimension(const Word& x, const Partition& lambda) {
  if (lambda.size() != x.total()) return 0;
  const ReducedYoungPoset poset = build_poset(x, lambda);
  const auto v = poset.find(lambda);
  return v ? poset.nodes()[*v].paths_from_bottom : Integer(0);
}

}  // namespace webgram
