#include "ordext/ordparts.hpp"

#include "ordext/error.hpp"

namespace ordext {

namespace {

void require_cell_hypothesis(const CharacterSpace& S, std::size_t dim, Int n, const OrdOptions& opts) {
  if (opts.assume_general_cell_formula) return;
  bool residue_field_line = S.coeff.k == 1 && dim == 1;
  if (!residue_field_line && n > 1)
    throw Error(ErrorKind::HypothesisNotMet,
                "the cell formula is proved only when A = k_E and U is one-dimensional, or n <= 1",
                {"coefficient level k = " + std::to_string(S.coeff.k), "dim U = " + std::to_string(dim),
                 "n = " + std::to_string(n)});
}

void require_field_or_low_degree(const CharacterSpace& S, Int n, const OrdOptions& opts) {
  if (opts.assume_general_cell_formula) return;
  if (S.coeff.k != 1 && n > 1)
    throw Error(ErrorKind::HypothesisNotMet, "needs A = k_E or n <= 1",
                {"coefficient level k = " + std::to_string(S.coeff.k), "n = " + std::to_string(n)});
}

std::string twist_text(const IntVec& v) { return "(omega^-1 o " + format_vec(v) + ")"; }

}  // namespace

GradedCharacterList ord_cell(const WeylGroup& g, const CharacterSpace& S, const WeylElement& w,
                             const TorusRep& U, Int n, const OrdOptions& opts) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  require_cell_hypothesis(S, U.dim, n, opts);
  GradedCharacterList out;
  out.degree = n;
  if (n != S.field.degree() * static_cast<Int>(g.length(w))) return out;
  Summand s;
  s.provenance = g.reduced_word(w);
  s.twist = g.alpha_w(w);
  s.descriptor = U.tag + "^" + format_word(s.provenance) + " (x) " + twist_text(s.twist);
  if (opts.assume_general_cell_formula) s.descriptor += " [assumed general cell formula]";
  if (U.character) {
    FxCharacter omega_inv = fx_inverse(S, cyclotomic_omega(S, opts.omega));
    s.character = twist_by_algebraic(S, weyl_act(g, S, g.inverse(w), *U.character), omega_inv, s.twist);
  }
  out.summands.push_back(std::move(s));
  return out;
}

GradedCharacterList h1_ord_principal(const WeylGroup& g, const CharacterSpace& S, const TorusRep& U,
                                     const OrdOptions& opts) {
  GradedCharacterList out;
  out.degree = 1;
  if (!S.field.is_qp()) return out;
  for (std::size_t i = 0; i < g.num_simple(); ++i) {
    auto cell = ord_cell(g, S, g.simple(i), U, 1, opts);
    for (auto& s : cell.summands) out.summands.push_back(std::move(s));
  }
  return out;
}

GradedCharacterList hn_ord_principal(const WeylGroup& g, const CharacterSpace& S,
                                     const TorusCharacter& chi, Int n, const OrdOptions& opts) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  auto theta = twisting_element(g.datum());
  if (!theta)
    throw Error(ErrorKind::NoTwistingElement,
                "no theta in X with <theta, alpha^vee> = 1 for every simple alpha",
                {"datum " + (g.datum().name.empty() ? std::string("(inline)") : g.datum().name)});
  require_field_or_low_degree(S, n, opts);
  validate(S, chi);

  GradedCharacterList out;
  out.degree = n;
  const Int deg = S.field.degree();
  if (n % deg != 0) return out;
  const std::size_t len = static_cast<std::size_t>(n / deg);
  if (len > g.num_positive()) return out;
  FxCharacter omega_inv = fx_inverse(S, cyclotomic_omega(S, opts.omega));
  for (const auto& w : g.enumerate().elements) {
    if (g.length(w) != len) continue;
    Summand s;
    s.provenance = g.reduced_word(w);
    s.twist = theta->theta;
    s.character = twist_by_algebraic(S, weyl_act(g, S, w, chi), omega_inv, theta->theta);
    s.descriptor = format_word(s.provenance) + "(chi) " + twist_text(s.twist);
    out.summands.push_back(std::move(s));
  }
  return out;
}

GradedCharacterList hn_ord_parabolic(const WeylGroup& g, const CharacterSpace& S,
                                     const std::vector<std::size_t>& I, const FxCharacter& eta,
                                     const IntVec& det, Int n, const OrdOptions& opts) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  if (!is_weyl_invariant(g.datum(), det))
    throw Error(ErrorKind::DetNotGInvariant, "det = " + format_vec(det) + " is not a character of G",
                {"it must pair to zero with every simple coroot"});
  require_field_or_low_degree(S, n, opts);
  validate(S, eta);

  GradedCharacterList out;
  out.degree = n;
  const Int deg = S.field.degree();
  if (n % deg != 0) return out;
  const std::size_t len = static_cast<std::size_t>(n / deg);
  FxCharacter omega_inv = fx_inverse(S, cyclotomic_omega(S, opts.omega));
  TorusCharacter eta_det = twist_by_algebraic(S, torus_trivial(S), eta, det);
  for (const auto& wt : parabolic_reps(g, I).max_reps) {
    if (g.length(wt) != len) continue;
    Summand s;
    s.provenance = g.reduced_word(wt);
    s.twist = g.alpha_w(wt);
    s.character = twist_by_algebraic(S, eta_det, omega_inv, s.twist);
    s.descriptor = "(eta o det) " + twist_text(s.twist);
    out.summands.push_back(std::move(s));
  }
  return out;
}

CohomologyLedger cohomology_ledger(const WeylGroup& g, const WeylElement& w, const Word& word,
                                   const LocalFieldParams& F) {
  AlphaKSequence seq = alpha_k_sequence(g, w, word);
  const std::size_t len = word.size();
  CohomologyLedger led;
  led.word = word;
  for (std::size_t k = len + 1; k-- > 0;) {
    LedgerRow row;
    row.k = k;
    Word suffix(word.end() - static_cast<std::ptrdiff_t>(k), word.end());
    row.group = "N_{" + format_word(suffix) + ",0}";
    row.top_degree = F.degree() * static_cast<Int>(len - k);
    row.twist = seq.alpha[k];
    row.top = "U^" + format_word(word) + " (x) " + twist_text(row.twist);
    led.rows.push_back(std::move(row));
  }
  return led;
}

nlohmann::json to_json(const CharacterSpace& S, const GradedCharacterList& list) {
  nlohmann::json j;
  j["degree"] = list.degree;
  j["count"] = list.summands.size();
  j["summands"] = nlohmann::json::array();
  for (const auto& s : list.summands) {
    nlohmann::json e{{"provenance", format_word(s.provenance)}, {"twist", s.twist}, {"descriptor", s.descriptor}};
    if (s.character) e["character"] = format_character(S, *s.character);
    j["summands"].push_back(std::move(e));
  }
  return j;
}

nlohmann::json to_json(const CohomologyLedger& ledger) {
  nlohmann::json j;
  j["word"] = format_word(ledger.word);
  j["rows"] = nlohmann::json::array();
  for (const auto& r : ledger.rows)
    j["rows"].push_back({{"k", r.k},
                         {"group", r.group},
                         {"top_degree", r.top_degree},
                         {"twist", r.twist},
                         {"top", r.top},
                         {"below_top", r.below_top},
                         {"above_top", r.above_top}});
  return j;
}

}  // namespace ordext
