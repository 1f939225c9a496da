#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordext/localchar.hpp"

namespace ordext {

// A smooth representation U of T(F): either a character, or an opaque tag of
// some dimension carried through formulas symbolically.
struct TorusRep {
  std::optional<TorusCharacter> character;
  std::string tag = "U";
  std::size_t dim = 1;

  static TorusRep of(TorusCharacter chi) { return TorusRep{std::move(chi), "chi", 1}; }
  static TorusRep symbolic(std::string tag, std::size_t dim) { return TorusRep{std::nullopt, std::move(tag), dim}; }
};

struct Summand {
  Word provenance;  // w, or w~ in the parabolic case
  IntVec twist;     // the algebraic character composed with omega^{-1}
  std::optional<TorusCharacter> character;
  std::string descriptor;
};

struct GradedCharacterList {
  Int degree = 0;
  std::vector<Summand> summands;

  std::size_t size() const { return summands.size(); }
};

struct OrdOptions {
  OmegaConventions omega;
  // Drops the "A = k_E and dim U = 1, or n <= 1" requirement on single cells.
  // Not covered by a proof; results are labelled accordingly.
  bool assume_general_cell_formula = false;
};

// H^n Ord of the cell C_c(N_w(F), U): U^w (x) (omega^{-1} o alpha_w) when
// n = [F:Q_p] l(w), zero otherwise. For a character, U^w = w^{-1}(chi).
GradedCharacterList ord_cell(const WeylGroup& g, const CharacterSpace& S, const WeylElement& w,
                             const TorusRep& U, Int n, const OrdOptions& opts = {});

// H^1 Ord of Ind U: one summand U^alpha (x) (omega^{-1} o alpha) per simple
// root when F = Q_p, nothing otherwise.
GradedCharacterList h1_ord_principal(const WeylGroup& g, const CharacterSpace& S, const TorusRep& U,
                                     const OrdOptions& opts = {});

// H^n Ord of Ind chi (omega^{-1} o theta): the summands w(chi)(omega^{-1} o theta)
// over w with [F:Q_p] l(w) = n. Needs a twisting element and A = k_E or n <= 1.
GradedCharacterList hn_ord_principal(const WeylGroup& g, const CharacterSpace& S,
                                     const TorusCharacter& chi, Int n, const OrdOptions& opts = {});

// H^n Ord of the parabolic induction of eta o det: summands
// (eta o det)(omega^{-1} o alpha_w~) over w~ in W~_P with [F:Q_p] l(w~) = n.
GradedCharacterList hn_ord_parabolic(const WeylGroup& g, const CharacterSpace& S,
                                     const std::vector<std::size_t>& I, const FxCharacter& eta,
                                     const IntVec& det, Int n, const OrdOptions& opts = {});

struct LedgerRow {
  std::size_t k = 0;
  std::string group;     // N_{s_k...s_1,0}
  Int top_degree = 0;    // [F:Q_p] (l(w) - k)
  IntVec twist;          // alpha_k
  std::string top;       // U^w (x) (omega^{-1} o alpha_k)
  std::string below_top = "Hecke-nilpotent";
  std::string above_top = "vanishes";
};

struct CohomologyLedger {
  Word word;
  std::vector<LedgerRow> rows;  // k = l(w) down to 0
};

CohomologyLedger cohomology_ledger(const WeylGroup& g, const WeylElement& w, const Word& word,
                                   const LocalFieldParams& F);

nlohmann::json to_json(const CharacterSpace& S, const GradedCharacterList& list);
nlohmann::json to_json(const CohomologyLedger& ledger);

}  // namespace ordext
