#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ordext/types.hpp"

namespace ordext {

// Strictly upper triangular n x n matrix over Q: the Lie algebra of the
// unipotent radical of the upper Borel of GL_n.
class NilMatrix {
 public:
  NilMatrix() = default;
  explicit NilMatrix(std::size_t n);
  static NilMatrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_ij, i < j

  std::size_t size() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  bool is_zero() const;
  bool is_strictly_upper() const;

  NilMatrix operator+(const NilMatrix& o) const;
  NilMatrix operator-(const NilMatrix& o) const;
  NilMatrix operator*(const NilMatrix& o) const;
  NilMatrix scaled(const Rational& c) const;
  bool operator==(const NilMatrix& o) const = default;

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

NilMatrix bracket(const NilMatrix& x, const NilMatrix& y);

// Unipotent matrix 1 + u with u strictly upper triangular, stored as u.
struct Unipotent {
  NilMatrix u;
  Unipotent operator*(const Unipotent& o) const { return {u + o.u + u * o.u}; }
  bool operator==(const Unipotent& o) const = default;
};

Unipotent nil_exp(const NilMatrix& x);
NilMatrix nil_log(const Unipotent& g);

// p-adic valuation; nullopt for 0.
std::optional<Int> valuation(const Rational& x, Int p);

// Homogeneous components Z^k of the Campbell-Hausdorff series in the free
// associative algebra on x, y, truncated at degree d. words[k] maps a word
// over {'x','y'} to its coefficient.
struct BchSeries {
  std::size_t degree = 0;
  std::vector<std::map<std::string, Rational>> words;
  // Lie form through Dynkin's theorem: Z^k = sum_w (c_w / k) [w] with [w] the
  // right-nested bracket.
  NilMatrix evaluate(const NilMatrix& x, const NilMatrix& y) const;
  NilMatrix evaluate_component(std::size_t k, const NilMatrix& x, const NilMatrix& y) const;
  // min over k in [2, degree] and words of v_p(c_w / k); nullopt if none.
  std::optional<Int> min_valuation(Int p) const;
};

BchSeries bch_series(std::size_t degree);

// log(exp X exp Y) by matrix arithmetic. SmallPrime when p <= n.
NilMatrix bch(const NilMatrix& x, const NilMatrix& y, Int p, std::optional<std::size_t> degree_cap = {});

// Type A_{n-1} positive roots are the positions (i, j), i < j.
using RootPos = std::pair<std::size_t, std::size_t>;
std::vector<RootPos> root_positions(std::size_t n);
std::size_t root_height(const RootPos& r);
// Delta-coefficient vector of e_i - e_j.
IntVec root_coefficients(std::size_t n, const RootPos& r);
bool is_closed_root_set(const std::set<RootPos>& s);

// A full-rank Z_p-lattice in Lie(N) given by a basis over Z. Coordinates of
// basis vectors follow root_positions order.
struct LieLattice {
  std::size_t n = 0;
  Int p = 0;
  std::vector<RatVec> basis;
  std::string label;

  // coordinates of x in the basis; throws if the basis is singular
  RatVec coordinates(const NilMatrix& x) const;
  // x in p^shift L
  bool contains(const NilMatrix& x, Int shift = 0) const;
  NilMatrix basis_matrix(std::size_t i) const;
  bool is_root_compatible() const;
  bool is_lie_subalgebra() const;
  // Smallest a with [L, L] in p^{-a} L; 0 when L is abelian.
  Int bracket_defect() const;

 private:
  mutable std::vector<RatVec> inverse_;
};

// M0 = sum_{i<j} p^{c_ij} Z E_ij with c_ij = exponents[i][j].
LieLattice diagonal_lattice(std::size_t n, Int p, const IntMatrix& exponents);
LieLattice integer_lattice(std::size_t n, Int p);
// span{E12 + E23, p E23, E13}: a Lie subalgebra that is not root-compatible.
LieLattice skew_lattice(Int p);

NilMatrix matrix_of(std::size_t n, const RatVec& coords);
RatVec coords_of(const NilMatrix& x);

struct StandardFamily {
  LieLattice base;
  Int a = 0;
  Int b = 0;
  Int c = 0;
  Int threshold() const { return a + b + c; }
  // members p^r M0 for r in [threshold, threshold + count)
  std::vector<Int> shifts;
  std::vector<std::string> validation_failures;
  bool valid() const { return validation_failures.empty(); }
};

// The family (p^r M0)_{r >= a+b+c}; every listed member is checked to be a
// root-compatible Lie subalgebra with exp(p^r M0) closed under products.
StandardFamily make_standard_family(const LieLattice& m0, Int c, std::size_t members = 3);
StandardFamily make_standard_family(std::size_t n, Int p, Int c);

struct ShiftRecord {
  Int shift = 0;
  bool at_or_above_threshold = false;
  std::size_t samples = 0;
  std::size_t congruence_failures = 0;
  std::size_t closure_failures = 0;  // log(n1 n2) outside p^r M0
  std::size_t exp_log_failures = 0;
};

struct CongruenceReport {
  std::size_t n = 0;
  Int p = 0;
  Int c = 0;
  Int a = 0;
  Int b = 0;
  Int threshold = 0;
  std::uint64_t seed = 0;
  std::vector<ShiftRecord> shifts;
  std::vector<std::string> witnesses;
  // failures at shifts >= threshold
  std::size_t asserted_failures() const;
  // smallest shift from which no failure was observed, as far as sampled
  std::optional<Int> empirical_boundary() const;
};

// Samples n1 = exp X1, n2 = exp X2 with X_i in p^r M0 for r from threshold - below
// to threshold + above, testing log(n1 n2) = log n1 + log n2 mod p^c p^r M0.
CongruenceReport congruence_harness(const StandardFamily& fam, std::size_t samples, std::uint64_t seed,
                                    Int below = 2, Int above = 1);

struct FactorizationSample {
  NilMatrix log_n;
  NilMatrix x1;
  NilMatrix x2;
  bool product_ok = false;  // exp(x1) exp(x2) == exp(log_n)
  bool in_lattice = false;  // x1, x2 in Lie(N0)
};

// Height induction for one sample: x1, x2 supported on roots1, roots2 with
// exp(x1) exp(x2) = exp(log_n).
FactorizationSample factor_by_height(const NilMatrix& log_n, const std::set<RootPos>& roots1,
                                     const std::set<RootPos>& roots2, const LieLattice& lattice);

struct FactorizationReport {
  std::set<RootPos> roots1;
  std::set<RootPos> roots2;
  std::string lattice;
  bool lattice_compatible = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
};

// Factors n = n1 n2 with n_i in N_{roots_i}(F) by induction on root height and
// checks log n_i in Lie(N0) for n sampled from (N1 N2)(F) cap N0. Overlapping
// sets are reduced to roots2 minus roots1.
FactorizationReport factorization_check(const std::set<RootPos>& roots1, const std::set<RootPos>& roots2,
                           const LieLattice& lattice, std::size_t samples, std::uint64_t seed);

// The split Phi+ = (Phi+ minus Phi+_w) sqcup Phi+_w for every w in S_n.
struct WeylSplitReport {
  std::size_t elements = 0;
  std::size_t passes = 0;
  std::vector<std::string> failures;
};
WeylSplitReport weyl_split_check(std::size_t n, const LieLattice& lattice, std::size_t samples_per_w,
                                 std::uint64_t seed);

nlohmann::json to_json(const CongruenceReport& r);
nlohmann::json to_json(const FactorizationReport& r);

}  // namespace ordext
