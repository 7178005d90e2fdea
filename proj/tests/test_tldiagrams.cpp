#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "webgram/gram.hpp"
#include "webgram/tldiagrams.hpp"

using namespace webgram;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

LaurentPoly delta_power(int e) { return qint(2).pow(static_cast<unsigned long>(e)); }

TLElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  TLElement out(n);
  for (int term = 0; term < 4; ++term) {
    Diagram d = Diagram::identity(n);
    int loops = 0;
    for (int k = len(rng); k > 0; --k) {
      const auto p = d.compose(Diagram::cap_cup(n, gen(rng)));
      d = p.diagram;
      loops += p.loops;
    }
    out.add(d, RatFunc(LaurentPoly(coeff(rng)) * delta_power(loops), qint(term + 1)));
  }
  return out;
}

}  // namespace

TEST_SUITE("tldiagrams") {
  TEST_CASE("link pattern counts") {
    for (int a = 0; a <= 12; ++a) {
      for (int m = a % 2; m <= a; m += 2) {
        const int l2 = (a - m) / 2;
        CHECK(static_cast<long>(enumerate_link_patterns(a, m).size()) == binom(a, l2) - binom(a, l2 - 1));
      }
    }
    CHECK_THROWS_AS(enumerate_link_patterns(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_link_patterns(3, 5), std::invalid_argument);
  }

  TEST_CASE("basis order for six points and two defects") {
    const auto basis = enumerate_link_patterns(6, 2);
    const std::vector<std::vector<int>> closers{{2, 4}, {3, 4}, {2, 5}, {3, 5}, {4, 5},
                                                {2, 6}, {3, 6}, {4, 6}, {5, 6}};
    REQUIRE(basis.size() == closers.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].closers() == closers[i]);
      CHECK(LinkPattern::from_closers(6, closers[i]) == basis[i]);
    }
    CHECK(basis[0].to_string() == "(1,2)(3,4)|5,6");
    CHECK(basis[1].to_string() == "(1,4)(2,3)|5,6");
  }

  TEST_CASE("link pattern validation") {
    CHECK_THROWS_AS(LinkPattern(4, {2, 3, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LinkPattern(3, {2, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LinkPattern::from_closers(3, {1}), std::invalid_argument);
    CHECK(LinkPattern(3, {-1, 2, 1}).defects() == 1);
  }

  TEST_CASE("pairings") {
    const auto basis = enumerate_link_patterns(4, 0);
    CHECK(pairing_loops(basis[0], basis[0]) == 2);
    CHECK(pairing_loops(basis[0], basis[1]) == 1);
    const auto two = enumerate_link_patterns(2, 2);
    CHECK(pairing(two[0], two[0]).is_one());
    const auto p = enumerate_link_patterns(4, 2);
    CHECK(pairing(p[0], p[1]).is_one());
    // Against (3,4)|1,2 the arc (1,2) joins the two defects of the other side.
    CHECK(pairing(p[0], p[2]).is_zero());
  }

  TEST_CASE("Gram matrices are symmetric with d^(arcs) on the diagonal") {
    for (int a = 1; a <= 9; ++a) {
      for (int m = a % 2; m <= a; m += 2) {
        const ExponentMatrix e = gram_exponents(a, m);
        CHECK(e == gram_exponents(a, m, Exec::serial));
        for (std::size_t i = 0; i < e.size(); ++i) {
          CHECK(e[i][i] == (a - m) / 2);
          for (std::size_t j = 0; j < e.size(); ++j) {
            CHECK(e[i][j] == e[j][i]);
            if (i != j) CHECK(e[i][j] < (a - m) / 2);
          }
        }
      }
    }
  }

  TEST_CASE("fraction-free elimination against cofactor expansion") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
      PolyMatrix m(n, std::vector<LaurentPoly>(n));
      for (auto& row : m) {
        for (auto& x : row) x = trial % 3 == 0 && rng() % 3 == 0 ? LaurentPoly() : oracle::random_laurent(rng, -2, 2, 4);
      }
      CHECK(det_bareiss(m) == oracle::det_cofactor(m));
    }
    PolyMatrix singular{{qint(2), qint(3)}, {qint(2) * qint(4), qint(3) * qint(4)}};
    CHECK(det_bareiss(singular).is_zero());
    PolyMatrix pivot{{LaurentPoly(), LaurentPoly(1)}, {LaurentPoly(1), LaurentPoly()}};
    CHECK(det_bareiss(pivot) == LaurentPoly(-1));
  }

  TEST_CASE("packed determinant matches generic elimination") {
    for (int a = 1; a <= 8; ++a) {
      for (int m = a % 2; m <= a; m += 2) {
        const LaurentPoly generic = det_bareiss(gram_matrix(a, m));
        CHECK(det_delta_powers(gram_exponents(a, m), Exec::serial) == generic);
        CHECK(det_delta_powers(gram_exponents(a, m), Exec::parallel) == generic);
        CHECK(tl_gram_det(a, m) == generic);
      }
    }
    CHECK(det_delta_powers({{-1, 0}, {0, -1}}) == LaurentPoly(-1));
    CHECK(det_delta_powers({}).is_one());
  }

  TEST_CASE("six points two defects") {
    CHECK(tl_gram_det(6, 2) == gram_det_closed(Word::parse("111111", 2), Partition({4, 2})).value.num());
    CHECK(to_delta_poly(tl_gram_det(6, 2)).degree() == 18);
  }

  TEST_CASE("diagram relations") {
    for (int n = 2; n <= 8; ++n) {
      const Diagram id = Diagram::identity(n);
      CHECK(id.is_identity());
      for (int i = 1; i < n; ++i) {
        const Diagram e = Diagram::cap_cup(n, i);
        const auto sq = e.compose(e);
        CHECK(sq.diagram == e);
        CHECK(sq.loops == 1);
        CHECK(id.compose(e).diagram == e);
        CHECK(e.compose(id).loops == 0);
        if (i + 1 < n) {
          const Diagram f = Diagram::cap_cup(n, i + 1);
          const auto efe = e.compose(f).diagram.compose(e);
          CHECK(efe.diagram == e);
          CHECK(efe.loops == 0);
          const auto fef = f.compose(e).diagram.compose(f);
          CHECK(fef.diagram == f);
        }
        for (int j = i + 2; j < n; ++j) {
          const Diagram f = Diagram::cap_cup(n, j);
          CHECK(e.compose(f).diagram == f.compose(e).diagram);
        }
      }
      const auto tr = id.partial_trace();
      CHECK(tr.diagram == Diagram::identity(n - 1));
      CHECK(tr.loops == 1);
      const auto tr_e = Diagram::cap_cup(n, n - 1).partial_trace();
      CHECK(tr_e.diagram == Diagram::identity(n - 1));
      CHECK(tr_e.loops == 0);
      CHECK(Diagram::identity(n - 1).tensor_identity() == id);
    }
    CHECK(Diagram::cap_cup(2, 1).to_string() == "{t1-t2 b1-b2}");
    CHECK(Diagram::identity(2).to_string() == "{t1-b1 t2-b2}");
    CHECK_THROWS_AS(Diagram::identity(9), std::invalid_argument);
    CHECK_THROWS_AS(Diagram::from_partners(2, {3, 2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Diagram::cap_cup(3, 3), std::invalid_argument);
  }

  TEST_CASE("composition is associative") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 6;
      const TLElement a = random_element(rng, n);
      const TLElement b = random_element(rng, n);
      const TLElement c = random_element(rng, n);
      for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
          for (const auto& [dc, cc] : c.terms()) {
            const auto ab = da.compose(db);
            const auto ab_c = ab.diagram.compose(dc);
            const auto bc = db.compose(dc);
            const auto a_bc = da.compose(bc.diagram);
            CHECK(ab_c.diagram == a_bc.diagram);
            CHECK(ab.loops + ab_c.loops == bc.loops + a_bc.loops);
          }
        }
      }
    }
  }

  TEST_CASE("packed products match the reference product") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 7;
      const TLElement a = random_element(rng, n);
      const TLElement b = random_element(rng, n);
      const TLElement ref = multiply_reference(a, b);
      CHECK(multiply(a, b, Exec::serial) == ref);
      CHECK(multiply(a, b, Exec::parallel) == ref);
    }
    const TLElement jw = jones_wenzl(3);
    CHECK(multiply(jw, jw) == multiply_reference(jw, jw));
  }

  TEST_CASE("Jones-Wenzl projectors in two and three strands") {
    // JW_2 = 1 - e_1 / [2]
    TLElement jw2 = TLElement::identity(2);
    jw2 -= TLElement::generator(2, 1) * RatFunc(1, qint(2));
    CHECK(jones_wenzl(2) == jw2);
    // JW_3 = 1 - [2]/[3] (e_1 + e_2) + (e_1 e_2 + e_2 e_1) / [3]
    const Diagram e1 = Diagram::cap_cup(3, 1);
    const Diagram e2 = Diagram::cap_cup(3, 2);
    TLElement jw3 = TLElement::identity(3);
    jw3.add(e1, RatFunc(-qint(2), qint(3)));
    jw3.add(e2, RatFunc(-qint(2), qint(3)));
    jw3.add(e1.compose(e2).diagram, RatFunc(1, qint(3)));
    jw3.add(e2.compose(e1).diagram, RatFunc(1, qint(3)));
    CHECK(jones_wenzl(3) == jw3);
    CHECK(jones_wenzl(3, Exec::serial) == jw3);
    CHECK(jones_wenzl(1) == TLElement::identity(1));
    CHECK_THROWS_AS(jones_wenzl(9), std::invalid_argument);
  }

  TEST_CASE("Jones-Wenzl checks and term counts") {
    for (int n = 2; n <= 6; ++n) {
      const JWReport r = jw_checks(n);
      CHECK(r.idempotent);
      CHECK(r.cap_killing);
      CHECK(r.identity_coefficient);
      CHECK(r.trace_rule);
      // JW_n has a nonzero coefficient on every Catalan(n) diagram.
      CHECK(static_cast<long>(r.terms) == binom(2 * n, n) / (n + 1));
    }
    CHECK_THROWS(jw_checks(1));
  }

  TEST_CASE("partial trace of JW_3") {
    const TLElement lhs = jones_wenzl(3).partial_trace();
    const TLElement rhs = jones_wenzl(2) * RatFunc(qint(4), qint(3));
    CHECK(lhs == rhs);
  }
}
