#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordext/localchar.hpp"

namespace ordext {

enum class Verdict { Zero, Exactly, AtLeast, SymbolicUnknown };

struct DimResult {
  Verdict verdict = Verdict::Zero;
  Int dim = 0;      // meaningful for Exactly and AtLeast
  std::string tag;  // for SymbolicUnknown
  std::vector<std::string> hypotheses_used;
  std::string source;
  std::optional<std::string> annotation;

  static DimResult zero() { return {}; }
  static DimResult exactly(Int d) { return {Verdict::Exactly, d, {}, {}, {}, {}}; }
  static DimResult at_least(Int d) { return {Verdict::AtLeast, d, {}, {}, {}, {}}; }
  static DimResult unknown(std::string tag) { return {Verdict::SymbolicUnknown, 0, std::move(tag), {}, {}, {}}; }

  bool is_pinned() const { return verdict == Verdict::Zero || verdict == Verdict::Exactly; }
  Int pinned_dim() const { return verdict == Verdict::Exactly ? dim : 0; }
  std::string str() const;
  bool operator==(const DimResult& o) const;
};

// Ext^1_G(Ind chi' (eps^{-1} o theta), Ind chi (eps^{-1} o theta)) over Q_p and
// Ext^1_G(Ind chi', Ind chi) otherwise: the arguments are the characters chi',
// chi themselves, and the twist is implied by the case.
// chi (eps^{-1} o theta) with eps = omega; throws NoTwistingElement if theta is absent.
TorusCharacter apply_theta_twist(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi,
                                 const OmegaConventions& omega = {});

DimResult ext1_principal(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi_prime,
                         const TorusCharacter& chi, CoeffKind kind);

// Ext^1_G(Ind_B chi, Ind_P eta o det) for a standard parabolic P != B given by I.
DimResult ext1_parabolic(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi,
                         const std::vector<std::size_t>& I, const FxCharacter& eta, const IntVec& det,
                         const OmegaConventions& omega = {});

// E_2 page of the spectral sequence computing Ext^n_G from torus Ext groups.
struct SpectralPage {
  Int n = 0;
  // entries[j][i] = E_2^{i,j} for i + j <= n
  std::vector<std::vector<DimResult>> entries;
  std::vector<Int> columns;  // the j with a nonzero entry
  bool degenerates = false;
};

struct ExtnResult {
  DimResult result;
  SpectralPage page;
};

// Ext^n_G between principal series over k_E, assuming the ordinary-parts
// adjunction conjecture. Needs a twisting element and level k = 1.
ExtnResult extn_principal(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi_prime,
                          const TorusCharacter& chi, Int n);

// d_E <= d_1 cell by cell. Every entry must be Zero or Exactly; otherwise
// IncomparableEntry is thrown.
struct CrossCheckReport {
  std::size_t comparisons = 0;
  std::size_t failures = 0;
  std::vector<std::string> lines;
  bool passed() const { return failures == 0; }
};
CrossCheckReport coefficient_crosscheck(const std::vector<DimResult>& mod_p,
                                       const std::vector<DimResult>& unitary);

// Runs ext1_principal in both coefficient kinds over every ordered pair of
// characters of the family, skipping cells where either side is not pinned.
struct ExtGrid {
  std::vector<std::pair<TorusCharacter, TorusCharacter>> pairs;
  std::vector<DimResult> mod_p;
  std::vector<DimResult> unitary;
  std::size_t skipped = 0;
};
ExtGrid ext1_grid(const WeylGroup& g, const CharacterSpace& S, CharacterFamily family,
                  std::size_t bound = 200000);

nlohmann::json to_json(const DimResult& r);
nlohmann::json to_json(const SpectralPage& page);

}  // namespace ordext
