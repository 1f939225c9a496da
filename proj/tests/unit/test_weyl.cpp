#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "ordext/error.hpp"
#include "ordext/weyl.hpp"

using namespace ordext;

namespace {

std::set<IntVec> inversion_vectors(const WeylGroup& g, const WeylElement& w) {
  std::set<IntVec> out;
  for (auto i : g.inversion_set(w)) out.insert(g.positive().roots[i]);
  return out;
}

}  // namespace

TEST_CASE("group orders and Poincare polynomials match breadth-first search") {
  struct Case {
    const char* name;
    std::size_t order;
  };
  for (auto [name, order] : {Case{"A1", 2}, Case{"A2", 6}, Case{"G2", 12}, Case{"A3", 24}, Case{"B3", 48},
                             Case{"C3", 48}, Case{"D4", 192}, Case{"F4", 1152}, Case{"GSp4", 8}}) {
    CAPTURE(name);
    RootDatum rd = preset(name);
    WeylGroup g(rd);
    WeylTable t = g.enumerate();
    CHECK(t.size() == order);
    oracle::BfsGroup bfs = oracle::bfs_group(rd);
    CHECK(bfs.length.size() == order);
    CHECK(t.poincare == bfs.poincare);
    CHECK(g.length(g.longest()) == g.num_positive());
  }
}

TEST_CASE("A2 basics") {
  WeylGroup g(preset("A2"));
  WeylTable t = g.enumerate();
  CHECK(t.poincare == std::vector<std::size_t>{1, 2, 2, 1});
  WeylGroup a1(preset("A1"));
  CHECK(a1.longest() == a1.simple(0));
  CHECK(WeylGroup(preset("G2")).length(WeylGroup(preset("G2")).longest()) == 6);
}

TEST_CASE("length equals inversion count and reduced words reproduce the element") {
  for (const char* name : {"A3", "B3", "G2"}) {
    WeylGroup g(preset(name));
    for (const auto& w : g.enumerate().elements) {
      Word word = g.reduced_word(w);
      CHECK(word.size() == g.length(w));
      CHECK(g.inversion_set(w).size() == g.length(w));
      CHECK(g.from_word(word) == w);
      CHECK(g.is_reduced(word));
      CHECK(g.length(g.inverse(w)) == g.length(w));
      CHECK(g.multiply(w, g.inverse(w)) == g.identity());
    }
  }
}

TEST_CASE("Bruhat examples in A2") {
  WeylGroup g(preset("A2"));
  auto s1 = g.simple(0), s2 = g.simple(1);
  CHECK(g.bruhat_leq(s1, g.multiply(s1, s2)));
  CHECK_FALSE(g.bruhat_leq(s1, s2));
  for (const auto& w : g.enumerate().elements) CHECK(g.bruhat_leq(w, g.longest()));
}

TEST_CASE("inversion sets") {
  WeylGroup g(preset("A2"));
  PositiveRootSet pos = g.positive();
  IntVec a1 = pos.roots[*pos.index_of_coefficients({1, 0})];
  IntVec a2 = pos.roots[*pos.index_of_coefficients({0, 1})];
  IntVec a12 = pos.roots[*pos.index_of_coefficients({1, 1})];
  CHECK(inversion_vectors(g, g.simple(0)) == std::set<IntVec>{a1});
  CHECK(inversion_vectors(g, g.from_word({0, 1})) == std::set<IntVec>{a2, a12});
  for (const char* name : {"A3", "B2", "G2"}) {
    WeylGroup h(preset(name));
    CHECK(h.inversion_set(h.longest()).size() == h.num_positive());
  }
}

TEST_CASE("alpha_w on GL3") {
  WeylGroup g(preset("GL3"));
  CHECK(g.alpha_w(g.from_word({0, 1})) == IntVec{1, 1, -2});
  CHECK(g.alpha_w(g.identity()) == IntVec{0, 0, 0});
  CHECK(g.alpha_w(g.longest()) == IntVec{2, 0, -2});
}

TEST_CASE("action on X is a group action and matches the reflection formula") {
  RootDatum rd = preset("GL3");
  WeylGroup g(rd);
  IntVec x{5, -2, 7};
  for (std::size_t i = 0; i < g.num_simple(); ++i) CHECK(g.act(g.simple(i), x) == oracle::reflect(rd, i, x));
  auto els = g.enumerate().elements;
  for (const auto& u : els)
    for (const auto& v : els) CHECK(g.act(g.multiply(u, v), x) == g.act(u, g.act(v, x)));
}

TEST_CASE("alpha_k sequence") {
  WeylGroup g(preset("A2"));
  Word w21{1, 0};
  WeylElement w = g.from_word(w21);
  AlphaKSequence seq = alpha_k_sequence(g, w, w21);
  REQUIRE(seq.alpha.size() == 3);
  CHECK(is_zero(seq.alpha[2]));
  CHECK(seq.alpha[0] == g.alpha_w(w));
  CHECK(g.positive().index_of(seq.alpha[1]).has_value());
  CHECK_THROWS_AS(alpha_k_sequence(g, w, Word{0, 0}), Error);
}

TEST_CASE("parabolic representatives") {
  WeylGroup g(preset("A2"));
  ParabolicData pd = parabolic_reps(g, {0});
  std::set<WeylElement> got(pd.max_reps.begin(), pd.max_reps.end());
  std::set<WeylElement> want{g.from_word({0}), g.from_word({0, 1}), g.from_word({0, 1, 0})};
  CHECK(got == want);
  CHECK(pd.length_law_holds);
  CHECK(cell_decomposition_check(g, pd));
  CHECK(parabolic_reps(g, {}).max_reps.size() == 6);
  ParabolicData full = parabolic_reps(g, {0, 1});
  REQUIRE(full.max_reps.size() == 1);
  CHECK(full.max_reps[0] == g.longest());
  CHECK(cell_decomposition_check(g, parabolic_reps(g, {})));
  CHECK(cell_decomposition_check(g, full));
}

TEST_CASE("words parse and print 1-based") {
  CHECK(format_word({0, 1}) == "s1s2");
  CHECK(format_word({}) == "e");
  CHECK(parse_word("s2s1", 2) == Word{1, 0});
  CHECK(parse_word("e", 2).empty());
  CHECK_THROWS_AS(parse_word("s3", 2), Error);
}

TEST_CASE("enumeration bound") {
  WeylGroup g(preset("F4"));
  CHECK_THROWS_AS(g.enumerate(100), Error);
}
