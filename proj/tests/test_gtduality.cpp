#include <algorithm>
#include <tuple>

#include "doctest.h"
#include "webgram/gtduality.hpp"

using namespace webgram;

TEST_SUITE("gtduality") {
  TEST_CASE("chains must interlace") {
    const GTChain chain({Partition({2}), Partition({3, 1}), Partition({3, 2, 1})});
    CHECK(chain.length() == 3);
    CHECK(chain.shape(0).empty());
    CHECK(chain.N(1, 1) == 2);
    CHECK(chain.N(1, 2) == 1);
    CHECK(chain.N(2, 2) == 1);
    CHECK(chain.N(2, 3) == 1);
    CHECK(chain.N(3, 3) == 1);
    CHECK_THROWS_AS(GTChain({Partition({1, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(GTChain({Partition({1}), Partition({1, 1, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(GTChain({Partition({2}), Partition({1, 1})}), std::invalid_argument);
  }

  TEST_CASE("strip statistics") {
    const GTChain chain({Partition({2}), Partition({3, 1}), Partition({3, 2, 1})});
    const StripStats st(chain);
    // T^(3) = (3,2,1), T^(2) = (3,1): M = (2 - 1) - (3 - 3) = 1
    CHECK(st.M(1, 2, 2) == 1);
    CHECK(st.Mdot(1, 2, 2) == 1 + chain.N(2, 2));
  }

  TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({3, 2}), Partition({4, 2, 2})));
    CHECK_FALSE(is_horizontal_strip(Partition({1}), Partition({1, 1, 1})));
    CHECK_FALSE(is_horizontal_strip(Partition({2}), Partition({1, 1})));
  }

  TEST_CASE("transposed instance of a two-box step") {
    // (2,2,1) -> (3,3,1,1) transposed is (3,2) -> (4,2,2).
    const Partition prev = transpose(Partition({2, 2, 1}));
    const Partition next = transpose(Partition({3, 3, 1, 1}));
    CHECK(prev == Partition({3, 2}));
    CHECK(next == Partition({4, 2, 2}));
    CHECK(step_norm_sq_binomial(prev, next, 3) == RatFunc(qint(2)));
    CHECK(lemma_long_check(prev, next, 3));
  }

  TEST_CASE("single row step") {
    const Partition prev({1});
    const Partition next({2});
    CHECK(step_norm_sq_binomial(prev, next, 2) == RatFunc(qint(2)));
    CHECK(kappa_strip_form(transpose(prev), transpose(next)).value() == RatFunc(qint(2)));
    CHECK(lemma_long_check(prev, next, 2));
  }

  TEST_CASE("binomial form does not depend on s") {
    for (const StripPair& p : horizontal_strip_pairs(7, 4)) {
      const RatFunc base = step_norm_sq_binomial(p.prev, p.next, p.s);
      for (int s = p.s + 1; s <= p.s + 2; ++s) CHECK(step_norm_sq_binomial(p.prev, p.next, s) == base);
    }
  }

  TEST_CASE("heavy form is the binomial form times the factorial excess") {
    for (const StripPair& p : horizontal_strip_pairs(8, 4)) {
      const RatFunc heavy = step_norm_sq_heavy(p.prev, p.next, p.s);
      CHECK(heavy == step_norm_sq_binomial(p.prev, p.next, p.s) * factorial_excess(p.prev, p.next, p.s));
      CHECK(lemma_long_check(p.prev, p.next, p.s));
    }
  }

  TEST_CASE("the two forms differ exactly when some row gains two boxes") {
    for (const StripPair& p : horizontal_strip_pairs(7, 4)) {
      bool big_row = false;
      for (int i = 1; i < p.s; ++i) big_row = big_row || p.next[i] - p.prev[i] >= 2;
      const bool equal = step_norm_sq_heavy(p.prev, p.next, p.s) == step_norm_sq_binomial(p.prev, p.next, p.s);
      CHECK(equal == !big_row);
    }
  }

  TEST_CASE("pairs are ordered and valid") {
    const auto pairs = horizontal_strip_pairs(6, 3);
    CHECK_FALSE(pairs.empty());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const StripPair& p = pairs[k];
      CHECK(is_horizontal_strip(p.prev, p.next));
      CHECK(p.next.size() <= 6);
      CHECK(p.next.length() <= 3);
      CHECK(p.s == std::max({2, p.next.length(), p.prev.length() + 1}));
      if (k > 0) {
        const StripPair& q = pairs[k - 1];
        CHECK(std::make_tuple(q.next.size(), q.next, q.prev) < std::make_tuple(p.next.size(), p.next, p.prev));
      }
    }
  }

  TEST_CASE("chain products and argument checks") {
    const GTChain chain({Partition({1}), Partition({2})});
    CHECK(full_norm_sq(chain) == step_norm_sq_heavy(chain, 2));
    CHECK(full_norm_sq(GTChain({Partition({3})})).is_one());
    CHECK_THROWS_AS(step_norm_sq_heavy(chain, 1), std::invalid_argument);
    CHECK_THROWS_AS(step_norm_sq_heavy(chain, 3), std::invalid_argument);
    CHECK_THROWS_AS(step_norm_sq_binomial(Partition({1}), Partition({1, 1, 1}), 3), std::invalid_argument);
  }

  TEST_CASE("serial and parallel sweeps agree") {
    const GTSweep a = gt_sweep(8, 4, Exec::serial);
    const GTSweep b = gt_sweep(8, 4, Exec::parallel);
    CHECK(a.cases == b.cases);
    CHECK(a.cases == horizontal_strip_pairs(8, 4).size());
    CHECK(a.lemma_failures.size() == b.lemma_failures.size());
    CHECK(a.heavy_binomial_unequal.size() == b.heavy_binomial_unequal.size());
    CHECK(a.lemma_failures.empty());
    CHECK(a.excess_failures.empty());
  }
}
