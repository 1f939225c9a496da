#include <doctest.h>

#include <set>

#include "ordext/error.hpp"
#include "ordext/localchar.hpp"

using namespace ordext;

namespace {

CharacterSpace space(const char* datum, const char* field, const char* coeff) {
  LocalFieldParams F = parse_field(field);
  return CharacterSpace{F, parse_coefficients(coeff, F.p), preset(datum).rank};
}

}  // namespace

TEST_CASE("fields") {
  LocalFieldParams F = parse_field("p=5");
  CHECK(F == LocalFieldParams{5, 1, 1, 0});
  CHECK(F.is_qp());
  CHECK(parse_field("p=2").r == 1);
  CHECK(parse_field("p=3,f=2").q() == 9);
  CHECK_THROWS_AS(make_field(2, 1, 1, 0), Error);
  CHECK_THROWS_AS(make_field(4, 1, 1, 0), Error);
  CHECK_THROWS_AS(make_field(3, 1, 1, 1), Error);
  CHECK(make_field(3, 1, 2, 1).degree() == 2);
}

TEST_CASE("coefficient groups") {
  CoefficientUnits A = parse_coefficients("kE:q=5", 5);
  CHECK(A.order() == 4);
  CHECK(A.has_trivial_p_part());
  CoefficientUnits B = parse_coefficients("unram:q=5,k=2", 5);
  CHECK(B.order() == 20);
  CHECK(B.p_part_order() == 5);
  CHECK(B.divisors() == std::vector<Int>{20});
  CHECK(torsion_elements(A, 2, false).size() == 2);
}

TEST_CASE("character counts by divisor arithmetic match enumeration") {
  for (const char* field : {"p=5", "p=3,f=2", "p=2", "p=3,e=2,r=1"}) {
    for (const char* coeff : {"kE:q=5", "kE:q=9", "unram:q=3,k=2"}) {
      LocalFieldParams F = parse_field(field);
      CoefficientUnits A;
      try {
        A = parse_coefficients(coeff, F.p);
      } catch (const Error&) {
        continue;
      }
      CharacterSpace S{F, A, 1};
      CAPTURE(field);
      CAPTURE(coeff);
      for (auto fam : {CharacterFamily::TameOnly, CharacterFamily::Full}) {
        auto all = enumerate_fx_characters(S, fam);
        CHECK(static_cast<Int>(all.size()) == fx_character_count(S, fam));
        CHECK(std::set<FxCharacter>(all.begin(), all.end()).size() == all.size());
      }
    }
  }
}

TEST_CASE("16 and 64 tame characters over Q5 with F5 coefficients") {
  CHECK(enumerate_torus_characters(space("GL2", "p=5", "kE:q=5"), CharacterFamily::TameOnly).size() == 16);
  CHECK(enumerate_torus_characters(space("GL3", "p=5", "kE:q=5"), CharacterFamily::TameOnly).size() == 64);
}

TEST_CASE("omega") {
  CharacterSpace S = space("GL2", "p=5", "kE:q=5");
  FxCharacter w = cyclotomic_omega(S);
  CHECK(fx_is_trivial(fx_pow(S, w, 4)));
  CHECK_FALSE(fx_is_trivial(fx_pow(S, w, 2)));
  CHECK(group_is_zero(w.unram));
  CharacterSpace bad{parse_field("p=5"), make_coefficients(5, {2}, 1), 2};
  try {
    cyclotomic_omega(bad);
    FAIL("expected MissingEmbedding");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingEmbedding);
  }
}

TEST_CASE("Weyl action and twists on GL2") {
  WeylGroup g(preset("GL2"));
  CharacterSpace S = space("GL2", "p=5", "kE:q=5");
  TorusCharacter chi = parse_character(S, "1/2,3/1");
  CHECK(weyl_act(g, S, g.identity(), chi) == chi);
  CHECK(format_character(S, weyl_act(g, S, g.simple(0), chi)) == "3/1,1/2");
  CHECK(twist_by_algebraic(S, chi, cyclotomic_omega(S), {0, 0}) == chi);
  FxCharacter w_inv = fx_inverse(S, cyclotomic_omega(S));
  TorusCharacter t = twist_by_algebraic(S, chi, w_inv, {1, 0});
  CHECK(t[0] == fx_mul(S, chi[0], w_inv));
  CHECK(t[1] == chi[1]);
  CHECK(twist_by_algebraic(S, t, w_inv, {-1, 0}) == chi);
  CHECK(compose_with_coroot(S, chi, {1, -1}) == fx_mul(S, chi[0], fx_inverse(S, chi[1])));
}

TEST_CASE("Weyl action is an action on characters") {
  WeylGroup g(preset("GL3"));
  CharacterSpace S = space("GL3", "p=5", "kE:q=5");
  auto chars = enumerate_torus_characters(S, CharacterFamily::TameOnly);
  auto els = g.enumerate().elements;
  for (std::size_t k = 0; k < chars.size(); k += 7)
    for (const auto& u : els)
      for (const auto& v : els)
        CHECK(weyl_act(g, S, g.multiply(u, v), chars[k]) == weyl_act(g, S, u, weyl_act(g, S, v, chars[k])));
}

TEST_CASE("genericity") {
  WeylGroup g2(preset("GL2"));
  CharacterSpace S2 = space("GL2", "p=5", "kE:q=5");
  CHECK_FALSE(is_weakly_generic(g2, S2, torus_trivial(S2)));
  for (const auto& chi : enumerate_torus_characters(S2, CharacterFamily::TameOnly))
    CHECK(is_weakly_generic(g2, S2, chi) == (chi[0] != chi[1]));
  WeylGroup g3(preset("GL3"));
  CharacterSpace S3 = space("GL3", "p=5", "kE:q=5");
  CHECK(is_strongly_generic(g3, S3, parse_character(S3, "0/0,0/1,0/2")));
  CHECK_FALSE(is_strongly_generic(g3, S3, parse_character(S3, "0/0,0/1,0/1")));
  CHECK(is_weakly_generic(g3, S3, parse_character(S3, "0/1,0/2,0/1")));
}

TEST_CASE("exhaustive genericity check") {
  for (const char* datum : {"GL2", "GL3"}) {
    WeylGroup g(preset(datum));
    GenericityReport r = genericity_check(g, space(datum, "p=5", "kE:q=5"), CharacterFamily::TameOnly);
    CHECK(r.characters == (std::string(datum) == "GL2" ? 16u : 64u));
    CHECK(r.converse_asserted);
    CHECK(r.forward_counterexamples == 0);
    CHECK(r.converse_counterexamples == 0);
    CHECK(r.distinct_reflection_counterexamples == 0);
  }
  WeylGroup sl2(preset("SL2"));
  GenericityReport r = genericity_check(sl2, space("SL2", "p=5", "kE:q=5"), CharacterFamily::TameOnly);
  CHECK_FALSE(r.converse_asserted);
  CHECK(r.forward_counterexamples == 0);
  CHECK(r.converse_failures_observed > 0);
}

TEST_CASE("torus Ext^1 dimensions") {
  CHECK(ext1_torus_dim(parse_field("p=5"), CoeffKind::ModP, 2) == 4);
  CHECK(ext1_torus_dim(parse_field("p=5"), CoeffKind::Unitary, 2) == 4);
  CHECK(ext1_torus_dim(parse_field("p=2"), CoeffKind::ModP, 2) == 6);
  CHECK(ext1_torus_dim(parse_field("p=2"), CoeffKind::Unitary, 2) == 4);
  CHECK(ext1_torus_dim(parse_field("p=5,f=2"), CoeffKind::ModP, 2) == 6);
  CHECK(ext1_torus_dim(parse_field("p=5"), CoeffKind::ModP, 2, false) == 0);
}

TEST_CASE("character text and json round trip") {
  CharacterSpace S = space("GL2", "p=5", "unram:q=5,k=2");
  S.rank = 1;
  for (const auto& chi : enumerate_torus_characters(S, CharacterFamily::Full, 1000000)) {
    CHECK(parse_character(S, format_character(S, chi)) == chi);
    CHECK(character_from_json(S, to_json(S, chi)) == chi);
  }
  CHECK_THROWS_AS(parse_character(S, "0/0,0/0"), Error);
}
