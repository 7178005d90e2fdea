#include <set>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "webgram/poset.hpp"

using namespace webgram;

namespace {

std::set<Partition> layer_shapes(const ReducedYoungPoset& p, int t) {
  std::set<Partition> out;
  for (auto v : p.layer(t)) out.insert(p.nodes()[v].shape);
  return out;
}

std::set<Partition> shapes(std::initializer_list<std::vector<int>> list) {
  std::set<Partition> out;
  for (const auto& v : list) out.insert(Partition(v));
  return out;
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("layers of the poset of 3231 in rank 5") {
    const ReducedYoungPoset p = build_poset(Word::parse("3231", 5));
    CHECK(layer_shapes(p, 0) == shapes({{}}));
    CHECK(layer_shapes(p, 1) == shapes({{1, 1, 1}}));
    CHECK(layer_shapes(p, 2) == shapes({{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}}));
    CHECK(layer_shapes(p, 3) ==
          shapes({{2, 2, 2, 1, 1}, {2, 2, 2, 2}, {3, 2, 1, 1, 1}, {3, 2, 2, 1}, {3, 3, 1, 1}, {3, 3, 2}}));
    CHECK(layer_shapes(p, 4) == shapes({{2, 2, 2, 2, 1}, {3, 2, 2, 1, 1}, {4, 2, 1, 1, 1}, {3, 2, 2, 2},
                                        {3, 3, 1, 1, 1}, {4, 2, 2, 1}, {4, 3, 1, 1}, {3, 3, 2, 1}, {4, 3, 2},
                                        {3, 3, 3}}));
  }

  TEST_CASE("pruned poset of 32312 towards (4,4,2,1)") {
    const ReducedYoungPoset p = build_poset(Word::parse("32312", 5), Partition({4, 4, 2, 1}));
    CHECK(p.nodes().size() == 11);
    CHECK(p.edges().size() == 15);
    CHECK_FALSE(p.find(Partition({1, 1, 1, 1, 1})));
    struct Expect {
      std::vector<int> shape;
      int bottom;
      int top;
    };
    const Expect expected[] = {{{}, 1, 6},           {{1, 1, 1}, 1, 6},     {{2, 1, 1, 1}, 1, 1},
                               {{2, 2, 1}, 1, 5},    {{3, 2, 2, 1}, 2, 1},  {{3, 3, 1, 1}, 1, 2},
                               {{3, 3, 2}, 1, 2},    {{4, 3, 2}, 1, 1},     {{3, 3, 2, 1}, 4, 1},
                               {{4, 3, 1, 1}, 1, 1}, {{4, 4, 2, 1}, 6, 1}};
    for (const Expect& e : expected) {
      const auto v = p.find(Partition(e.shape));
      REQUIRE(v);
      CHECK(p.nodes()[*v].paths_from_bottom == e.bottom);
      CHECK(p.nodes()[*v].paths_to_top == e.top);
    }
  }

  TEST_CASE("bottom counts agree with brute force enumeration") {
    for (int n = 2; n <= 5; ++n) {
      oracle::for_each_word(n, 6, [n](const Word& x) {
        const ReducedYoungPoset p = build_poset(x);
        for (const PosetNode& node : p.nodes()) {
          if (node.layer != x.length()) continue;
          CHECK(node.paths_from_bottom == oracle::count_paths_brute(x.letters(), n, node.shape.parts()));
        }
      });
    }
  }

  TEST_CASE("layer sums of bottom times top are constant") {
    for (int n = 2; n <= 5; ++n) {
      oracle::for_each_word(n, 7, [](const Word& x) {
        const ReducedYoungPoset full = build_poset(x);
        for (auto top : full.layer(x.length())) {
          const Partition& target = full.nodes()[top].shape;
          const ReducedYoungPoset p = build_poset(x, target);
          const Integer total = p.nodes()[*p.find(target)].paths_from_bottom;
          for (int t = 0; t < p.layer_count(); ++t) {
            Integer sum = 0;
            for (auto v : p.layer(t)) sum += p.nodes()[v].paths_from_bottom * p.nodes()[v].paths_to_top;
            CHECK(sum == total);
          }
        }
      });
    }
  }

  TEST_CASE("pruning keeps the counts of surviving nodes") {
    for (int n = 3; n <= 5; ++n) {
      oracle::for_each_word(n, 6, [](const Word& x) {
        const ReducedYoungPoset full = build_poset(x);
        for (auto top : full.layer(x.length())) {
          const Partition& target = full.nodes()[top].shape;
          const ReducedYoungPoset pruned = build_poset(x, target);
          const PathCounts pc = path_counts(full, target);
          for (const PosetNode& node : pruned.nodes()) {
            const auto v = full.find(node.shape);
            REQUIRE(v);
            CHECK(node.paths_from_bottom == full.nodes()[*v].paths_from_bottom);
            CHECK(node.paths_from_bottom == pc.from_bottom[*v]);
            CHECK(node.paths_to_top == pc.to_target[*v]);
          }
          // Every dropped node has no path to the target.
          for (std::size_t v = 0; v < full.nodes().size(); ++v) {
            if (!pruned.find(full.nodes()[v].shape)) CHECK(pc.to_target[v] == 0);
          }
        }
      });
    }
  }

  TEST_CASE("edge multiplicities are bottom times top") {
    const ReducedYoungPoset p = build_poset(Word::parse("32312", 5), Partition({4, 4, 2, 1}));
    for (const PosetEdge& e : p.edges()) {
      CHECK(e.multiplicity == p.nodes()[e.from].paths_from_bottom * p.nodes()[e.to].paths_to_top);
      CHECK(p.nodes()[e.to].layer == p.nodes()[e.from].layer + 1);
    }
  }

  TEST_CASE("targets of the wrong size or out of reach") {
    CHECK_THROWS_AS(build_poset(Word::parse("32", 5), Partition({4})), std::invalid_argument);
    const ReducedYoungPoset p = build_poset(Word::parse("11", 3), Partition({2}));
    CHECK(p.nodes().size() == 3);
    const ReducedYoungPoset none = build_poset(Word::parse("2", 3), Partition({2}));
    CHECK(none.nodes().empty());
    const ReducedYoungPoset full = build_poset(Word::parse("11", 3));
    CHECK_THROWS_AS(path_counts(full, Partition({1})), std::invalid_argument);
    CHECK_THROWS_AS(path_counts(full, Partition({3})), std::invalid_argument);
  }

  TEST_CASE("dot export") {
    const ReducedYoungPoset p = build_poset(Word::parse("12", 3));
    const std::string dot = export_dot(p);
    CHECK(dot.rfind("digraph reduced_young_poset", 0) == 0);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("[3]") != std::string::npos);
  }

  TEST_CASE("json export round trips") {
    const ReducedYoungPoset p = build_poset(Word::parse("32312", 5), Partition({4, 4, 2, 1}));
    const std::string text = export_json(p);
    const auto j = nlohmann::ordered_json::parse(text);
    CHECK(j["word"] == "32312");
    CHECK(j["rank"] == 5);
    CHECK(j["target"] == "(4,4,2,1)");
    REQUIRE(j["nodes"].size() == p.nodes().size());
    REQUIRE(j["edges"].size() == p.edges().size());
    for (std::size_t v = 0; v < p.nodes().size(); ++v) {
      CHECK(j["nodes"][v]["partition"] == p.nodes()[v].shape.to_string());
      CHECK(j["nodes"][v]["paths_from_bottom"] == p.nodes()[v].paths_from_bottom.get_si());
    }
    for (std::size_t k = 0; k < p.edges().size(); ++k) {
      CHECK(j["edges"][k]["kappa"] == p.edges()[k].kappa.to_string());
    }
    CHECK(nlohmann::ordered_json::parse(j.dump(2)) == j);
    CHECK(j.dump(2) + "\n" == text);
  }
}
