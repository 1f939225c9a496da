#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordext/weyl.hpp"

namespace ordext {

struct CellDescriptor {
  WeylElement w;
  Word word;
  std::size_t length = 0;
  std::vector<std::size_t> n_w_roots;  // Phi^+_w, indices into positive()
};

// Open sets G_r = {w : l(w) <= r} for r = -1..d and graded pieces l(w) = r for
// r = 0..d. For a parabolic ledger only w in W~_P appear.
struct FiltrationLedger {
  std::size_t d = 0;
  std::optional<std::vector<std::size_t>> parabolic;  // I, when not the Borel case
  std::vector<std::vector<Word>> open_sets;           // index r + 1
  std::vector<std::vector<CellDescriptor>> graded;    // index r

  std::vector<std::size_t> grade_sizes() const;
};

FiltrationLedger bruhat_filtration(const WeylGroup& g);
FiltrationLedger parabolic_filtration(const WeylGroup& g, const std::vector<std::size_t>& I);

// For all pairs: {u <= w'} is contained in {u <= w} exactly when w' <= w.
bool closure_order_check(const WeylGroup& g);

// Symbolic short exact sequences 0 -> I_{r-1} -> I_r -> (+) C_c(N_w(F), U) -> 0.
std::vector<std::string> ses_report(const FiltrationLedger& ledger);
nlohmann::json to_json(const FiltrationLedger& ledger, const WeylGroup& g);

}  // namespace ordext
