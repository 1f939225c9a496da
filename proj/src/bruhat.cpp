#include "ordext/bruhat.hpp"

#include <algorithm>

namespace ordext {

std::vector<std::size_t> FiltrationLedger::grade_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& g : graded) out.push_back(g.size());
  return out;
}

namespace {

FiltrationLedger ledger_over(const WeylGroup& g, const std::vector<WeylElement>& elements,
                             std::optional<std::vector<std::size_t>> parabolic) {
  FiltrationLedger led;
  led.d = g.num_positive();
  led.parabolic = std::move(parabolic);
  led.graded.resize(led.d + 1);
  for (const auto& w : elements) {
    CellDescriptor c{w, g.reduced_word(w), g.length(w), g.phi_plus_w(w)};
    led.graded[c.length].push_back(std::move(c));
  }
  led.open_sets.resize(led.d + 2);
  for (std::size_t r = 0; r <= led.d; ++r) {
    led.open_sets[r + 1] = led.open_sets[r];
    for (const auto& c : led.graded[r]) led.open_sets[r + 1].push_back(c.word);
  }
  return led;
}

}  // namespace

FiltrationLedger bruhat_filtration(const WeylGroup& g) {
  return ledger_over(g, g.enumerate().elements, std::nullopt);
}

FiltrationLedger parabolic_filtration(const WeylGroup& g, const std::vector<std::size_t>& I) {
  ParabolicData pd = parabolic_reps(g, I);
  if (pd.I.empty()) return bruhat_filtration(g);
  return ledger_over(g, pd.max_reps, pd.I);
}

bool closure_order_check(const WeylGroup& g) {
  const auto elems = g.enumerate().elements;
  const std::size_t n = elems.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = g.bruhat_leq(elems[a], elems[b]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool contained = true;
      for (std::size_t u = 0; u < n && contained; ++u)
        if (leq[u][a] && !leq[u][b]) contained = false;
      if (contained != leq[a][b]) return false;
    }
  return true;
}

std::vector<std::string> ses_report(const FiltrationLedger& ledger) {
  const std::string coeff = ledger.parabolic ? "eta o det" : "U";
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < ledger.graded.size(); ++r) {
    std::string sum;
    for (const auto& c : ledger.graded[r]) {
      if (!sum.empty()) sum += " (+) ";
      sum += "C_c(N_" + format_word(c.word) + "(F), " + coeff + ")";
    }
    if (sum.empty()) sum = "0";
    lines.push_back("0 -> I_" + std::to_string(static_cast<long>(r) - 1) + " -> I_" +
                    std::to_string(r) + " -> " + sum + " -> 0");
  }
  return lines;
}

nlohmann::json to_json(const FiltrationLedger& ledger, const WeylGroup& g) {
  nlohmann::json j;
  j["kind"] = ledger.parabolic ? "parabolic" : "borel";
  if (ledger.parabolic) {
    std::vector<std::size_t> one_based;
    for (auto i : *ledger.parabolic) one_based.push_back(i + 1);
    j["I"] = one_based;
  }
  j["d"] = ledger.d;
  j["grades"] = nlohmann::json::array();
  for (std::size_t r = 0; r < ledger.graded.size(); ++r) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : ledger.graded[r]) {
      nlohmann::json roots = nlohmann::json::array();
      for (auto i : c.n_w_roots) roots.push_back(g.positive().roots[i]);
      cells.push_back({{"word", format_word(c.word)}, {"length", c.length}, {"n_w_roots", roots}});
    }
    j["grades"].push_back({{"r", r}, {"cells", cells}});
  }
  j["ses"] = ses_report(ledger);
  return j;
}

}  // namespace ordext
