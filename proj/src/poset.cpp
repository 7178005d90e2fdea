#include "webgram/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace webgram {

namespace {

struct RawPoset {
  std::vector<Partition> shapes;
  std::vector<int> layers;
  struct Edge {
    std::size_t from;
    std::size_t to;
    MinusculeWeight step;
  };
  std::vector<Edge> edges;
};

RawPoset expand(const Word& x) {
  RawPoset raw;
  raw.shapes.emplace_back();
  raw.layers.push_back(0);
  std::vector<std::size_t> current{0};
  for (int t = 0; t < x.length(); ++t) {
    const std::vector<MinusculeWeight> steps = omega(x[t], x.rank());
    std::map<Partition, std::size_t> next;
    std::vector<RawPoset::Edge> layer_edges;
    for (std::size_t v : current) {
      for (const MinusculeWeight& mu : steps) {
        std::optional<Partition> child = add_strip(raw.shapes[v], mu);
        if (!child) continue;
        auto [it, inserted] = next.try_emplace(*child, 0);
        if (inserted) {
          it->second = raw.shapes.size();
          raw.shapes.push_back(*child);
          raw.layers.push_back(t + 1);
        }
        layer_edges.push_back({v, it->second, mu});
      }
    }
    raw.edges.insert(raw.edges.end(), layer_edges.begin(), layer_edges.end());
    current.clear();
    for (const auto& kv : next) current.push_back(kv.second);
  }
  return raw;
}

std::string count_text(const Integer& v) { return v.get_str(); }

nlohmann::ordered_json count_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

}  // namespace

std::vector<std::size_t> ReducedYoungPoset::layer(int t) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].layer == t) out.push_back(v);
  }
  return out;
}

std::optional<std::size_t> ReducedYoungPoset::find(const Partition& shape) const {
  // Letters are positive, so a shape determines its layer.
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].shape == shape) return v;
  }
  return std::nullopt;
}

ReducedYoungPoset build_poset(const Word& x, const std::optional<Partition>& target) {
  if (target && target->size() != x.total()) {
    throw std::invalid_argument("target " + target->to_string() + " has size " + std::to_string(target->size()) +
                                " but the word " + x.to_string() + " has letter sum " + std::to_string(x.total()));
  }
  const RawPoset raw = expand(x);
  const std::size_t count = raw.shapes.size();
  const int top = x.length();

  // Edges are generated layer by layer, so one pass in each direction is a
  // topological sweep.
  std::vector<Integer> down(count, 0);
  std::vector<Integer> up(count, 0);
  down[0] = 1;
  for (const auto& e : raw.edges) down[e.to] += down[e.from];
  for (std::size_t v = 0; v < count; ++v) {
    if (raw.layers[v] == top && (!target || raw.shapes[v] == *target)) up[v] = 1;
  }
  for (auto it = raw.edges.rbegin(); it != raw.edges.rend(); ++it) up[it->from] += up[it->to];

  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < count; ++v) {
    if (!target || up[v] != 0) keep.push_back(v);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(raw.layers[a], raw.shapes[a]) < std::tie(raw.layers[b], raw.shapes[b]);
  });
  std::vector<std::size_t> index(count, count);
  ReducedYoungPoset poset(x, target);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t v = keep[k];
    index[v] = k;
    poset.nodes_.push_back({raw.shapes[v], raw.layers[v], down[v], up[v]});
  }
  for (const auto& e : raw.edges) {
    if (index[e.from] == count || index[e.to] == count) continue;
    PosetEdge edge{index[e.from], index[e.to], e.step, kappa_root_form(raw.shapes[e.from], e.step), down[e.from] * up[e.to]};
    poset.edges_.push_back(std::move(edge));
  }
  std::sort(poset.edges_.begin(), poset.edges_.end(),
            [](const PosetEdge& a, const PosetEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return poset;
}

PathCounts path_counts(const ReducedYoungPoset& poset, const Partition& target) {
  const auto& nodes = poset.nodes();
  std::optional<std::size_t> t;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v].layer == poset.layer_count() - 1 && nodes[v].shape == target) t = v;
  }
  if (!t) throw std::invalid_argument("target " + target.to_string() + " is not in the top layer");
  PathCounts pc;
  pc.from_bottom.assign(nodes.size(), 0);
  pc.to_target.assign(nodes.size(), 0);
  if (!nodes.empty()) pc.from_bottom[0] = 1;
  // Edges are sorted by source index and sources precede targets.
  for (const PosetEdge& e : poset.edges()) pc.from_bottom[e.to] += pc.from_bottom[e.from];
  pc.to_target[*t] = 1;
  for (auto it = poset.edges().rbegin(); it != poset.edges().rend(); ++it) pc.to_target[it->from] += pc.to_target[it->to];
  return pc;
}

std::string export_dot(const ReducedYoungPoset& poset) {
  std::ostringstream os;
  os << "digraph reduced_young_poset {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t v = 0; v < poset.nodes().size(); ++v) {
    const PosetNode& n = poset.nodes()[v];
    os << "  n" << v << " [label=\"" << n.shape.to_string() << "\\nb=" << count_text(n.paths_from_bottom)
       << ",t=" << count_text(n.paths_to_top) << "\"];\n";
  }
  for (const PosetEdge& e : poset.edges()) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.kappa.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const ReducedYoungPoset& poset, int indent) {
  using nlohmann::ordered_json;
  ordered_json nodes = ordered_json::array();
  for (const PosetNode& n : poset.nodes()) {
    nodes.push_back(ordered_json{{"layer", n.layer},
                     {"partition", n.shape.to_string()},
                     {"paths_from_bottom", count_json(n.paths_from_bottom)},
                     {"paths_to_top", count_json(n.paths_to_top)}});
  }
  ordered_json edges = ordered_json::array();
  for (const PosetEdge& e : poset.edges()) {
    edges.push_back(ordered_json{{"from", poset.nodes()[e.from].shape.to_string()},
                     {"to", poset.nodes()[e.to].shape.to_string()},
                     {"kappa", e.kappa.to_string()},
                     {"multiplicity", count_json(e.multiplicity)}});
  }
  ordered_json doc;
  doc["word"] = poset.word().to_string();
  doc["rank"] = poset.word().rank();
  if (poset.target()) doc["target"] = poset.target()->to_string();
  doc["nodes"] = nodes;
  doc["edges"] = edges;
  return doc.dump(indent) + "\n";
}

}  // namespace webgram
