#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "webgram/gram.hpp"
#include "webgram/tableaux.hpp"

using namespace webgram;

namespace {

bool is_standard(const Filling& f, int a) {
  std::vector<int> seen;
  for (std::size_t r = 0; r < f.size(); ++r) {
    for (std::size_t c = 0; c < f[r].size(); ++c) {
      seen.push_back(f[r][c]);
      if (c > 0 && f[r][c] <= f[r][c - 1]) return false;
      if (r > 0 && (c >= f[r - 1].size() || f[r][c] <= f[r - 1][c])) return false;
    }
  }
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < a; ++i) {
    if (i >= static_cast<int>(seen.size()) || seen[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return static_cast<int>(seen.size()) == a;
}

}  // namespace

TEST_SUITE("tableaux") {
  TEST_CASE("standard tableaux of shape (4,2)") {
    const Word x = Word::parse("111111", 2);
    const auto paths = enumerate_paths(x, Partition({4, 2}));
    REQUIRE(paths.size() == 9);
    std::set<std::string> got;
    for (const auto& p : paths) got.insert(filling_to_string(to_row_ssyt(p)));
    const std::set<std::string> expected{"1356/24", "1256/34", "1346/25", "1246/35", "1236/45",
                                         "1345/26", "1245/36", "1235/46", "1234/56"};
    CHECK(got == expected);
  }

  TEST_CASE("path counts equal cell dimensions") {
    for (int n = 2; n <= 5; ++n) {
      oracle::for_each_word(n, 7, [](const Word& x) {
        const ReducedYoungPoset full = build_poset(x);
        for (auto v : full.layer(x.length())) {
          const Partition& lambda = full.nodes()[v].shape;
          CHECK(Integer(enumerate_paths(x, lambda).size()) == full.nodes()[v].paths_from_bottom);
        }
      });
    }
  }

  TEST_CASE("paths are enumerated in lexicographic order without repeats") {
    const auto paths = enumerate_paths(Word::parse("32312", 5), Partition({4, 4, 2, 1}));
    REQUIRE(paths.size() == 6);
    for (std::size_t i = 1; i < paths.size(); ++i) CHECK(paths[i - 1].steps < paths[i].steps);
  }

  TEST_CASE("fillings round trip") {
    for (int n = 2; n <= 5; ++n) {
      oracle::for_each_word(n, 6, [](const Word& x) {
        for (const auto& lambda : partitions_of(x.total(), x.rank())) {
          for (const auto& p : enumerate_paths(x, lambda)) {
            const Filling f = to_row_ssyt(p);
            CHECK(from_row_ssyt(f, x) == p);
            CHECK(parse_filling(filling_to_string(f)) == f);
          }
        }
      });
    }
  }

  TEST_CASE("all-ones words give standard tableaux") {
    for (int a = 1; a <= 8; ++a) {
      const Word x(std::vector<int>(static_cast<std::size_t>(a), 1), std::min(a + 1, 9));
      for (const auto& lambda : partitions_of(a, a)) {
        const auto paths = enumerate_paths(x, lambda);
        CHECK(Integer(paths.size()) == oracle::hook_length_count(lambda.parts()));
        for (const auto& p : paths) CHECK(is_standard(to_row_ssyt(p), a));
      }
    }
  }

  TEST_CASE("hook length formulas for two and three rows") {
    for (int a = 0; a <= 16; ++a) {
      for (int l2 = 0; 2 * l2 <= a; ++l2) {
        CHECK(dim_two_row(a, l2) == oracle::hook_length_count({a - l2, l2}));
      }
      for (const auto& lambda : partitions_of(a, 3)) {
        CHECK(dim_three_row(a, lambda[1], lambda[2], lambda[3]) == oracle::hook_length_count(lambda.parts()));
      }
    }
    CHECK(dim_two_row(6, 2) == 9);
  }

  TEST_CASE("filling text format") {
    CHECK(filling_to_string({{1, 3, 5}, {2, 6}}) == "135/26");
    CHECK(filling_to_string({{1, 2, 10}, {11}}) == "1,2,10/11");
    CHECK(parse_filling("1,2,10/11") == Filling{{1, 2, 10}, {11}});
    CHECK(parse_filling("135/26") == Filling{{1, 3, 5}, {2, 6}});
    CHECK_THROWS_AS(parse_filling("1a/2"), ParseError);
  }

  TEST_CASE("invalid fillings are rejected") {
    const Word x = Word::parse("1111", 2);
    CHECK_THROWS_AS(from_row_ssyt({{1, 2}, {3, 4}}, Word::parse("11", 2)), std::invalid_argument);
    CHECK_THROWS_AS(from_row_ssyt({{2, 1}, {3, 4}}, x), std::invalid_argument);
    CHECK_THROWS_AS(from_row_ssyt({{1, 3}, {2}}, x), std::invalid_argument);
    CHECK_NOTHROW(from_row_ssyt({{1, 2}, {3, 4}}, x));
  }
}
