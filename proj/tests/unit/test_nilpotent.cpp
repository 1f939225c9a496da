#include <doctest.h>

#include <random>

#include "ordext/error.hpp"
#include "ordext/nilpotent.hpp"

using namespace ordext;

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense dense(const NilMatrix& m) {
  Dense d(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m.at(i, j);
  return d;
}

Dense mul(const Dense& a, const Dense& b) {
  std::size_t n = a.size();
  Dense c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense identity(std::size_t n) {
  Dense d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

// exp and log of nilpotent matrices by plain power series.
Dense dexp(const Dense& x) {
  std::size_t n = x.size();
  Dense out = identity(n), term = identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = mul(term, x);
    for (auto& row : term)
      for (auto& v : row) v /= static_cast<long>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += term[i][j];
  }
  return out;
}

Dense dlog(const Dense& g) {
  std::size_t n = g.size();
  Dense u = g;
  for (std::size_t i = 0; i < n; ++i) u[i][i] -= 1;
  Dense out(n, std::vector<Rational>(n)), power = identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = mul(power, u);
    Rational c(k % 2 ? 1 : -1, static_cast<long>(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += c * power[i][j];
  }
  return out;
}

NilMatrix random_nil(std::size_t n, std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  NilMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = Rational(num(rng), den(rng));
      m.at(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_CASE("closed form for aE12 and bE23") {
  for (int a : {1, 2, -3, 7})
    for (int b : {1, 5, -4}) {
      NilMatrix x = NilMatrix::unit(3, 0, 1).scaled(a);
      NilMatrix y = NilMatrix::unit(3, 1, 2).scaled(b);
      Rational half(a * b, 2);
      half.canonicalize();
      NilMatrix want = x + y + NilMatrix::unit(3, 0, 2).scaled(half);
      CHECK(bch(x, y, 5) == want);
      CHECK(dense(want) == dlog(mul(dexp(dense(x)), dexp(dense(y)))));
    }
}

TEST_CASE("series and matrix routes agree with the power-series oracle") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    BchSeries series = bch_series(n - 1);
    for (int t = 0; t < 25; ++t) {
      NilMatrix x = random_nil(n, rng), y = random_nil(n, rng);
      Dense oracle = dlog(mul(dexp(dense(x)), dexp(dense(y))));
      CHECK(dense(series.evaluate(x, y)) == oracle);
      CHECK(dense(nil_log(nil_exp(x) * nil_exp(y))) == oracle);
      CHECK(dense(bch(x, y, 7)) == oracle);
    }
  }
}

TEST_CASE("BCH identities") {
  std::mt19937_64 rng(11);
  NilMatrix zero(4);
  for (int t = 0; t < 20; ++t) {
    NilMatrix x = random_nil(4, rng), y = random_nil(4, rng), z = random_nil(4, rng);
    CHECK(bch(x, zero, 7) == x);
    CHECK(bch(zero, y, 7) == y);
    CHECK(bch(x, x.scaled(-1), 7).is_zero());
    CHECK(nil_log(nil_exp(x)) == x);
    CHECK(bch(bch(x, y, 7), z, 7) == bch(x, bch(y, z, 7), 7));
  }
}

TEST_CASE("low-degree series coefficients") {
  BchSeries s = bch_series(3);
  REQUIRE(s.words.size() >= 3);
  NilMatrix x = NilMatrix::unit(3, 0, 1), y = NilMatrix::unit(3, 1, 2);
  CHECK(s.evaluate_component(2, x, y) == bracket(x, y).scaled(Rational(1, 2)));
  CHECK(s.evaluate_component(1, x, y) == x + y);
  CHECK(*s.min_valuation(5) == 0);
  CHECK(*s.min_valuation(2) < 0);
  CHECK(*s.min_valuation(3) < 0);
}

TEST_CASE("small primes are refused") {
  NilMatrix x = NilMatrix::unit(4, 0, 1);
  try {
    bch(x, x, 3);
    FAIL("expected SmallPrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SmallPrime);
  }
}

TEST_CASE("valuations") {
  CHECK(*valuation(Rational(25, 3), 5) == 2);
  CHECK(*valuation(Rational(3, 10), 5) == -1);
  CHECK_FALSE(valuation(Rational(0), 5).has_value());
}

TEST_CASE("root positions and closure") {
  auto pos = root_positions(4);
  CHECK(pos.size() == 6);
  CHECK(root_height(pos.front()) == 1);
  CHECK(root_height(pos.back()) == 3);
  CHECK(root_coefficients(4, {0, 2}) == IntVec{1, 1, 0});
  CHECK(is_closed_root_set({{0, 1}, {1, 2}, {0, 2}}));
  CHECK_FALSE(is_closed_root_set({{0, 1}, {1, 2}}));
  CHECK(is_closed_root_set({{0, 1}}));
}

TEST_CASE("lattices") {
  LieLattice L = integer_lattice(3, 5);
  CHECK(L.is_root_compatible());
  CHECK(L.is_lie_subalgebra());
  CHECK(L.bracket_defect() == 0);
  CHECK(L.contains(NilMatrix::unit(3, 0, 2)));
  CHECK_FALSE(L.contains(NilMatrix::unit(3, 0, 2), 1));
  CHECK(L.contains(NilMatrix::unit(3, 0, 2).scaled(5), 1));
  LieLattice skew = skew_lattice(5);
  CHECK_FALSE(skew.is_root_compatible());
  LieLattice half = diagonal_lattice(3, 5, {{0, -1, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK(half.bracket_defect() == 1);
}

TEST_CASE("standard family and congruences") {
  StandardFamily fam = make_standard_family(3, 5, 2);
  CHECK(fam.valid());
  CHECK(fam.a == 0);
  CHECK(fam.b == 0);
  CHECK(fam.threshold() == 2);
  CongruenceReport r = congruence_harness(fam, 300, 1);
  CHECK(r.asserted_failures() == 0);
  for (const auto& s : r.shifts) {
    CHECK(s.exp_log_failures == 0);
    if (s.at_or_above_threshold) CHECK(s.congruence_failures == 0);
  }
  CongruenceReport again = congruence_harness(fam, 300, 1);
  CHECK(to_json(again) == to_json(r));
  CHECK(make_standard_family(3, 5, 0).threshold() == 0);
}

TEST_CASE("factorization by heights") {
  std::set<RootPos> r1{{0, 1}}, r2{{1, 2}, {0, 2}};
  FactorizationReport ok = factorization_check(r1, r2, integer_lattice(3, 5), 300, 3);
  CHECK(ok.lattice_compatible);
  CHECK(ok.passes == 300);
  CHECK(ok.failures == 0);
  FactorizationReport trivial = factorization_check(r1, {}, integer_lattice(3, 5), 50, 3);
  CHECK(trivial.failures == 0);
  FactorizationReport skew = factorization_check({{0, 1}}, {{1, 2}, {0, 2}}, skew_lattice(5), 200, 3);
  CHECK(skew.failures > 0);
  CHECK_FALSE(skew.witnesses.empty());
  try {
    factorization_check({{0, 1}, {1, 2}}, {}, integer_lattice(3, 5), 10, 1);
    FAIL("expected NotClosedRootSet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosedRootSet);
  }
}

TEST_CASE("Weyl splits of the unipotent radical") {
  WeylSplitReport r = weyl_split_check(3, integer_lattice(3, 5), 30, 5);
  CHECK(r.elements == 6);
  CHECK(r.passes == 6);
  CHECK(r.failures.empty());
}
