#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ordext/types.hpp"

namespace ordext {

// A based root datum (X, Delta, X^vee, Delta^vee) with X = Z^rank and the
// standard pairing. Simple roots and coroots are stored in lattice coordinates.
struct RootDatum {
  std::string name;
  std::size_t rank = 0;
  std::vector<IntVec> simple_roots;
  std::vector<IntVec> simple_coroots;

  std::size_t semisimple_rank() const { return simple_roots.size(); }
  // C[i][j] = <alpha_i, alpha_j^vee>
  IntMatrix cartan_matrix() const;
};

// Validates the Cartan axioms and linear independence. Throws Error with kind
// RankMismatch, NotFiniteType or LinearlyDependent; the details list every
// violated axiom.
RootDatum build_root_datum(std::size_t rank, std::vector<IntVec> simple_roots,
                           std::vector<IntVec> simple_coroots, std::string name = {});

// Named presets: GLn (n = 1..6), SLn / PGLn (n = 2..5), GSp4, Sp4, and the
// simply connected data A1..A4, B2..B4, C2..C4, D4, F4, G2.
RootDatum preset(std::string_view name);
std::vector<std::string> preset_names();

// Simply connected datum for a Cartan matrix: X is the weight lattice in the
// basis of fundamental weights.
RootDatum simply_connected(const IntMatrix& cartan, std::string name = {});
// Adjoint datum: X is the root lattice in the basis of simple roots.
RootDatum adjoint(const IntMatrix& cartan, std::string name = {});
IntMatrix cartan_of_type(char type, std::size_t n);

struct PositiveRootSet {
  std::vector<IntVec> roots;         // coordinates in X
  std::vector<IntVec> coroots;       // matching coroots in X^vee
  std::vector<IntVec> coefficients;  // coordinates in the basis Delta
  std::vector<Int> heights;          // |alpha| = sum of coefficients

  std::size_t size() const { return roots.size(); }
  std::optional<std::size_t> index_of(const IntVec& root) const;
  std::optional<std::size_t> index_of_coefficients(const IntVec& coeffs) const;
};

// Breadth-first closure of Delta under the simple reflections; sorted by
// height, then by Delta-coefficients in decreasing lexicographic order.
PositiveRootSet positive_roots(const RootDatum& rd);

struct LatticeQuotient {
  IntVec divisors;  // elementary divisors of the sublattice (all of them, 1s included)
  std::size_t free_rank = 0;
  bool torsion_free() const;
};

LatticeQuotient character_quotient(const RootDatum& rd);    // X / Z Phi
LatticeQuotient cocharacter_quotient(const RootDatum& rd);  // X^vee / Z Phi^vee
bool is_center_connected(const RootDatum& rd);
bool is_derived_simply_connected(const RootDatum& rd);

// Elements theta of X with <theta, alpha^vee> = 1 for every simple alpha.
// `theta` is the canonical representative of the coset theta + kernel.
struct TwistingCoset {
  IntVec theta;
  std::vector<IntVec> kernel;  // basis of {x : <x, alpha^vee> = 0 for all simple alpha}
};
std::optional<TwistingCoset> twisting_element(const RootDatum& rd);

// Half sum of positive roots in X (x) Q.
RatVec rho(const RootDatum& rd);

// Elements of X fixed by W, i.e. pairing to zero with every simple coroot.
bool is_weyl_invariant(const RootDatum& rd, const IntVec& x);

nlohmann::json to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const nlohmann::json& j);
// Accepts a preset name or an inline JSON document.
RootDatum resolve_datum(const std::string& spec);

}  // namespace ordext
