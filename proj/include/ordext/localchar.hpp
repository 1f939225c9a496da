#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordext/weyl.hpp"

namespace ordext {

// The p-adic field F through (p, f, e, r): residue field of size q = p^f,
// ramification index e, and mu_{p^r} the p-power roots of unity in F.
struct LocalFieldParams {
  Int p = 0;
  Int f = 1;
  Int e = 1;
  Int r = 0;

  Int q() const { return ipow(p, f); }
  Int degree() const { return e * f; }  // [F : Q_p]
  bool is_qp() const { return e == 1 && f == 1; }
  bool operator==(const LocalFieldParams&) const = default;
};

// Validates primality of p, positivity, p = 2 => r >= 1, and
// p^{r-1}(p-1) | e when r >= 1.
LocalFieldParams make_field(Int p, Int f, Int e, Int r);
// "p=5,f=1,e=1,r=0"; omitted keys default to f = e = 1 and r = (p == 2).
LocalFieldParams parse_field(const std::string& text);
std::string format_field(const LocalFieldParams& F);
bool is_prime(Int n);

// A finite abelian group written as a product of cyclic factors, each of
// order prime to p or a power of p. Elements are residue vectors.
struct CoefficientUnits {
  Int p = 0;
  std::vector<Int> factors;
  int k = 1;  // level: the unit group of O_E / varpi_E^k

  Int order() const;
  Int prime_to_p_order() const;
  Int p_part_order() const;
  bool is_p_power_factor(std::size_t i) const;
  bool has_trivial_p_part() const { return p_part_order() == 1; }
  // Elementary divisors d_1 | d_2 | ... of the group.
  std::vector<Int> divisors() const;
  bool operator==(const CoefficientUnits&) const = default;
};

// Splits every given cyclic order into its prime-to-p and p-primary parts.
CoefficientUnits make_coefficients(Int p, const std::vector<Int>& cyclic_orders, int k);
// k_E^x with |k_E| = q_E (a power of p): cyclic of order q_E - 1, level 1.
CoefficientUnits residue_field_units(Int p, Int q_E);
// (O_E / p^k)^x for E unramified with residue field of size q_E = p^m.
CoefficientUnits unramified_units(Int p, Int q_E, int k);
// "kE:q=5", "unram:q=5,k=2", or "div:4,25;k=2".
CoefficientUnits parse_coefficients(const std::string& text, Int p);
std::string format_coefficients(const CoefficientUnits& A);

using GroupElement = IntVec;

GroupElement group_zero(const CoefficientUnits& A);
GroupElement group_add(const CoefficientUnits& A, const GroupElement& x, const GroupElement& y);
GroupElement group_scale(const CoefficientUnits& A, Int n, const GroupElement& x);
bool group_is_zero(const GroupElement& x);
// x reduced into canonical residues; throws on wrong length.
GroupElement group_normalize(const CoefficientUnits& A, GroupElement x);
// All x with n * x = 0; when p_part_only the prime-to-p coordinates are zero.
std::vector<GroupElement> torsion_elements(const CoefficientUnits& A, Int n, bool p_part_only);
std::vector<GroupElement> all_elements(const CoefficientUnits& A, bool p_part_only);
Int element_order(const CoefficientUnits& A, const GroupElement& x);

// A smooth character of F^x = Z x mu_{q-1} x Z/p^r x Z_p^{ef} into A.
struct FxCharacter {
  GroupElement unram;                   // value at varpi_F
  GroupElement tame;                    // value at a generator of mu_{q-1}
  GroupElement wild_tors;               // value at a generator of Z/p^r
  std::vector<GroupElement> wild_free;  // values on a basis of Z_p^{ef}

  bool operator==(const FxCharacter&) const = default;
  bool operator<(const FxCharacter& o) const;
};

struct CharacterSpace {
  LocalFieldParams field;
  CoefficientUnits coeff;
  std::size_t rank = 0;
};

using TorusCharacter = std::vector<FxCharacter>;  // one component per cocharacter e_i

FxCharacter fx_trivial(const CharacterSpace& S);
FxCharacter fx_mul(const CharacterSpace& S, const FxCharacter& a, const FxCharacter& b);
FxCharacter fx_pow(const CharacterSpace& S, const FxCharacter& a, Int n);
FxCharacter fx_inverse(const CharacterSpace& S, const FxCharacter& a);
bool fx_is_trivial(const FxCharacter& a);
// Checks the torsion conditions and vanishing of wild parts when A has trivial p-part.
void validate(const CharacterSpace& S, const FxCharacter& a);
void validate(const CharacterSpace& S, const TorusCharacter& chi);

TorusCharacter torus_trivial(const CharacterSpace& S);
TorusCharacter torus_mul(const CharacterSpace& S, const TorusCharacter& a, const TorusCharacter& b);

// Choices that fix omega: the element of A of order p - 1 standing for the
// image of a generator of F_p^x, and the values of epsilon away from mu_{q-1}.
struct OmegaConventions {
  std::optional<GroupElement> fp_generator;  // default: canonical element of order p - 1
  std::optional<GroupElement> unram;         // epsilon(varpi_F); default trivial
  std::optional<GroupElement> wild_tors;
  std::optional<std::vector<GroupElement>> wild_free;
};

// Throws MissingEmbedding when A has no element of order p - 1.
FxCharacter cyclotomic_omega(const CharacterSpace& S, const OmegaConventions& conv = {});

// Component j of w(chi) is sum_i c_ij chi_i where w^{-1}(e_j) = sum_i c_ij e_i.
TorusCharacter weyl_act(const WeylGroup& g, const CharacterSpace& S, const WeylElement& w,
                        const TorusCharacter& chi);
// Component i multiplied by eta^{mu_i}.
TorusCharacter twist_by_algebraic(const CharacterSpace& S, const TorusCharacter& chi,
                                  const FxCharacter& eta, const IntVec& mu);
// chi o lambda for a cocharacter lambda = sum n_i e_i.
FxCharacter compose_with_coroot(const CharacterSpace& S, const TorusCharacter& chi,
                                const IntVec& lambda);
bool is_weakly_generic(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi);
bool is_strongly_generic(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi);

enum class CharacterFamily {
  TameOnly,  // unramified and wild parts trivial
  Full,      // every smooth character
};

// All F^x-characters of the family, in a fixed order.
std::vector<FxCharacter> enumerate_fx_characters(const CharacterSpace& S, CharacterFamily family);
// All torus characters with components in the family; SearchSpaceTooLarge
// beyond `bound`.
std::vector<TorusCharacter> enumerate_torus_characters(const CharacterSpace& S, CharacterFamily family,
                                                       std::size_t bound = 1000000);
// |Hom(Z x Z/(q-1) x Z/p^r x Z_p^{ef}, A)| by elementary-divisor arithmetic.
Int fx_character_count(const CharacterSpace& S, CharacterFamily family);

struct GenericityReport {
  std::size_t characters = 0;
  std::size_t checks = 0;
  bool converse_asserted = false;  // center connected
  std::size_t forward_counterexamples = 0;
  std::size_t converse_counterexamples = 0;
  std::size_t converse_failures_observed = 0;  // only when the converse is not asserted
  std::size_t distinct_reflection_counterexamples = 0;
  std::vector<std::string> witnesses;  // first few counterexamples or observed failures
};

// Exhaustive check over all torus characters in the family and all positive
// roots alpha: s_alpha(chi) != chi implies chi o alpha^vee != 1, with the
// converse when the center is connected; and for simple alpha, beta with
// s_alpha(chi) != chi, s_alpha(chi) = s_beta(chi) only if alpha = beta.
GenericityReport genericity_check(const WeylGroup& g, const CharacterSpace& S,
                                  CharacterFamily family, std::size_t bound = 1000000);

enum class CoeffKind { ModP, Unitary };

// dim Ext^1_{T(F)}(chi', chi); 0 when chi' != chi.
Int ext1_torus_dim(const LocalFieldParams& F, CoeffKind kind, std::size_t rank, bool same = true);

// Compact grammar: components separated by ',', each "u/t[/wt[/wf1;wf2...]]"
// where group elements are residues joined by '.'.
TorusCharacter parse_character(const CharacterSpace& S, const std::string& text);
std::string format_character(const CharacterSpace& S, const TorusCharacter& chi);
std::string format_fx(const CharacterSpace& S, const FxCharacter& a);

nlohmann::json to_json(const CharacterSpace& S, const TorusCharacter& chi);
nlohmann::json to_json(const FxCharacter& a);
TorusCharacter character_from_json(const CharacterSpace& S, const nlohmann::json& j);

}  // namespace ordext
