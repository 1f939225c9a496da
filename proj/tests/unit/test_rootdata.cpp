#include <doctest.h>

#include "oracles.hpp"
#include "ordext/error.hpp"
#include "ordext/rootdata.hpp"

using namespace ordext;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("GL2 and GL3 build with the expected Cartan matrices") {
  RootDatum gl2 = build_root_datum(2, {{1, -1}}, {{1, -1}}, "GL2");
  CHECK(gl2.cartan_matrix() == IntMatrix{{2}});
  RootDatum gl3 = build_root_datum(3, {{1, -1, 0}, {0, 1, -1}}, {{1, -1, 0}, {0, 1, -1}});
  CHECK(gl3.cartan_matrix() == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(preset("GL3").cartan_matrix() == gl3.cartan_matrix());
}

TEST_CASE("bad data are rejected with the right kind") {
  CHECK(kind_of([] { build_root_datum(2, {{2, 0}, {1, 1}}, {{1, 0}, {1, 1}}); }) == ErrorKind::NotFiniteType);
  CHECK(kind_of([] { build_root_datum(2, {{1, -1, 0}}, {{1, -1}}); }) == ErrorKind::RankMismatch);
  // affine A1: the diagonal is fine, the full determinant vanishes
  CHECK(kind_of([] { build_root_datum(2, {{1, -1}, {-1, 1}}, {{1, -1}, {-1, 1}}); }) == ErrorKind::NotFiniteType);
}

TEST_CASE("positive root counts agree with the reflection closure") {
  CHECK(positive_roots(preset("GL3")).size() == 3);
  CHECK(positive_roots(preset("GL2")).size() == 1);
  CHECK(positive_roots(preset("B2")).size() == 4);
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    RootDatum rd = preset(name);
    PositiveRootSet pos = positive_roots(rd);
    CHECK(2 * pos.size() == oracle::all_roots(rd).size());
    for (std::size_t i = 0; i < pos.size(); ++i) {
      Int h = 0;
      for (auto c : pos.coefficients[i]) h += c;
      CHECK(h == pos.heights[i]);
      if (i > 0) CHECK(pos.heights[i - 1] <= pos.heights[i]);
    }
  }
}

TEST_CASE("GL3 positive roots in height order") {
  PositiveRootSet pos = positive_roots(preset("GL3"));
  REQUIRE(pos.size() == 3);
  CHECK(pos.roots[2] == IntVec{1, 0, -1});
  CHECK(pos.coroots[2] == IntVec{1, 0, -1});
}

TEST_CASE("center and derived group from Smith forms") {
  CHECK(is_center_connected(preset("GL2")));
  CHECK(is_derived_simply_connected(preset("GL2")));
  RootDatum sl2 = build_root_datum(1, {{2}}, {{1}});
  CHECK_FALSE(is_center_connected(sl2));
  CHECK(is_derived_simply_connected(sl2));
  CHECK(character_quotient(sl2).divisors == IntVec{2});
  RootDatum pgl2 = build_root_datum(1, {{1}}, {{2}});
  CHECK(is_center_connected(pgl2));
  CHECK_FALSE(is_derived_simply_connected(pgl2));
  CHECK(is_center_connected(preset("PGL3")));
  CHECK_FALSE(is_center_connected(preset("SL3")));
}

TEST_CASE("twisting elements") {
  auto t2 = twisting_element(preset("GL2"));
  REQUIRE(t2);
  CHECK(t2->theta == IntVec{1, 0});
  REQUIRE(t2->kernel.size() == 1);
  CHECK((t2->kernel[0] == IntVec{1, 1} || t2->kernel[0] == IntVec{-1, -1}));
  auto t3 = twisting_element(preset("GL3"));
  REQUIRE(t3);
  CHECK(t3->theta == IntVec{2, 1, 0});
  CHECK_FALSE(twisting_element(build_root_datum(1, {{1}}, {{2}})));
  for (const auto& name : preset_names()) {
    RootDatum rd = preset(name);
    if (auto t = twisting_element(rd))
      for (const auto& cv : rd.simple_coroots) CHECK(pairing(t->theta, cv) == 1);
  }
}

TEST_CASE("rho") {
  CHECK(rho(preset("GL3")) == RatVec{1, 0, -1});
  CHECK(rho(preset("GL2")) == RatVec{Rational(1, 2), Rational(-1, 2)});
  for (const auto& name : {"B2", "C3", "G2", "F4", "GSp4"}) {
    RootDatum rd = preset(name);
    RatVec r = rho(rd);
    for (const auto& cv : rd.simple_coroots) CHECK(pairing(r, cv) == 1);
  }
}

TEST_CASE("json round trip and resolve") {
  for (const auto& name : preset_names()) {
    RootDatum rd = preset(name);
    RootDatum back = root_datum_from_json(to_json(rd));
    CHECK(back.simple_roots == rd.simple_roots);
    CHECK(back.simple_coroots == rd.simple_coroots);
    CHECK(back.rank == rd.rank);
  }
  RootDatum inl = resolve_datum(R"({"rank":1,"simple_roots":[[2]],"simple_coroots":[[1]]})");
  CHECK(inl.cartan_matrix() == IntMatrix{{2}});
  CHECK_THROWS_AS(resolve_datum("GL99"), Error);
}

TEST_CASE("Weyl invariance") {
  CHECK(is_weyl_invariant(preset("GL3"), {1, 1, 1}));
  CHECK_FALSE(is_weyl_invariant(preset("GL3"), {1, 0, 0}));
}
