#pragma once

// The reduced Young poset of an object word: layered DAG of partitions where
// layer t is reached from layer t-1 by adding a vertical strip of x_t boxes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "webgram/kappa.hpp"
#include "webgram/qarith.hpp"
#include "webgram/weights.hpp"

namespace webgram {

struct PosetNode {
  Partition shape;
  int layer = 0;
  Integer paths_from_bottom;
  Integer paths_to_top;
};

struct PosetEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  MinusculeWeight step{std::vector<int>{}};
  KappaValue kappa;
  Integer multiplicity;  // paths_from_bottom(from) * paths_to_top(to)
};

class ReducedYoungPoset {
 public:
  const Word& word() const { return word_; }
  const std::optional<Partition>& target() const { return target_; }
  // Nodes ordered by (layer, partition); edges by (from, to).
  const std::vector<PosetNode>& nodes() const { return nodes_; }
  const std::vector<PosetEdge>& edges() const { return edges_; }
  int layer_count() const { return word_.length() + 1; }
  std::vector<std::size_t> layer(int t) const;
  std::optional<std::size_t> find(const Partition& shape) const;

 private:
  friend ReducedYoungPoset build_poset(const Word& x, const std::optional<Partition>& target);
  ReducedYoungPoset(Word w, std::optional<Partition> t) : word_(std::move(w)), target_(std::move(t)) {}

  Word word_;
  std::optional<Partition> target_;
  std::vector<PosetNode> nodes_;
  std::vector<PosetEdge> edges_;
};

// Full layered DAG. With a target, paths_to_top counts paths to the target
// and nodes that cannot reach it are dropped; without one, paths_to_top
// counts paths to any node of the top layer. Throws std::invalid_argument
// when the target size differs from the letter sum. A target of the right
// size that is never reached leaves only an empty poset.
ReducedYoungPoset build_poset(const Word& x, const std::optional<Partition>& target = std::nullopt);

struct PathCounts {
  std::vector<Integer> from_bottom;  // indexed like poset.nodes()
  std::vector<Integer> to_target;
};

// Forward and backward path counts relative to `target`, which must be a
// node of the top layer (std::invalid_argument otherwise).
PathCounts path_counts(const ReducedYoungPoset& poset, const Partition& target);

std::string export_dot(const ReducedYoungPoset& poset);
std::string export_json(const ReducedYoungPoset& poset, int indent = 2);

}  // namespace webgram
