#include "ordext/ext.hpp"

#include <algorithm>
#include <set>

#include "ordext/error.hpp"

namespace ordext {

std::string DimResult::str() const {
  switch (verdict) {
    case Verdict::Zero:
      return "Zero";
    case Verdict::Exactly:
      return "Exactly(" + std::to_string(dim) + ")";
    case Verdict::AtLeast:
      return "AtLeast(" + std::to_string(dim) + ")";
    case Verdict::SymbolicUnknown:
      return "SymbolicUnknown(" + tag + ")";
  }
  return "?";
}

bool DimResult::operator==(const DimResult& o) const {
  return verdict == o.verdict && dim == o.dim && tag == o.tag;
}

namespace {

DimResult with(DimResult r, std::vector<std::string> hyps, std::string source) {
  r.hypotheses_used = std::move(hyps);
  r.source = std::move(source);
  return r;
}

void require_qp_group_hypotheses(const RootDatum& rd) {
  std::vector<std::string> failed;
  if (!is_center_connected(rd)) failed.push_back("center-connected: X / Z Phi has torsion");
  if (!is_derived_simply_connected(rd)) failed.push_back("derived-SC: X^vee / Z Phi^vee has torsion");
  if (!failed.empty())
    throw Error(ErrorKind::HypothesesViolated,
                "over Q_p the Ext computations need a connected center and a simply connected derived group",
                failed);
}

}  // namespace

DimResult ext1_principal(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi_prime,
                         const TorusCharacter& chi, CoeffKind kind) {
  validate(S, chi_prime);
  validate(S, chi);
  const std::size_t rank = g.datum().rank;
  const bool same = chi_prime == chi;

  if (!S.field.is_qp()) {
    if (same)
      return with(DimResult::exactly(ext1_torus_dim(S.field, kind, rank)), {"F!=Q_p"},
                  "principal series over F != Q_p: Ind induces Ext^1_T(chi, chi) = Ext^1_G");
    return with(DimResult::zero(), {"F!=Q_p"},
                "principal series over F != Q_p: Ext^1_G vanishes unless chi' = chi");
  }

  require_qp_group_hypotheses(g.datum());
  std::vector<std::string> hyps{"F=Q_p", "center-connected", "derived-SC"};
  const Int torus_dim = ext1_torus_dim(S.field, kind, rank);

  if (same) {
    if (is_weakly_generic(g, S, chi)) {
      hyps.push_back("weakly-generic");
      return with(DimResult::exactly(torus_dim), hyps,
                  "principal series over Q_p, chi' = chi weakly generic: Ind induces Ext^1_T(chi, chi) = Ext^1_G");
    }
    DimResult r = with(DimResult::at_least(torus_dim), hyps,
                       "principal series over Q_p, chi' = chi not weakly generic: Ext^1_T(chi, chi) injects into "
                       "Ext^1_G, cokernel not determined");
    if (kind == CoeffKind::ModP && S.field.p == 2) {
      std::size_t fixed = 0;
      for (std::size_t i = 0; i < g.num_simple(); ++i)
        if (weyl_act(g, S, g.simple(i), chi) == chi) ++fixed;
      r.annotation = "expected (not proved): cokernel of dimension #{alpha simple : s_alpha(chi) = chi} = " +
                     std::to_string(fixed);
    }
    return r;
  }

  for (std::size_t i = 0; i < g.num_simple(); ++i)
    if (weyl_act(g, S, g.simple(i), chi) == chi_prime)
      return with(DimResult::exactly(1), hyps,
                  "principal series over Q_p, chi' = s_" + std::to_string(i + 1) + "(chi) != chi: one-dimensional");

  return with(DimResult::zero(), hyps,
              "principal series over Q_p: Ext^1_G vanishes unless chi' = chi or chi' = s_alpha(chi)");
}

DimResult ext1_parabolic(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi,
                         const std::vector<std::size_t>& I, const FxCharacter& eta, const IntVec& det,
                         const OmegaConventions& omega) {
  std::set<std::size_t> levi(I.begin(), I.end());
  if (levi.empty()) throw Error(ErrorKind::ParabolicIsBorel, "the parabolic must be strictly larger than B");
  for (auto i : levi)
    if (i >= g.num_simple()) throw Error(ErrorKind::InvalidArgument, "simple root index out of range");
  if (!is_weyl_invariant(g.datum(), det))
    throw Error(ErrorKind::DetNotGInvariant, "det = " + format_vec(det) + " is not a character of G");
  validate(S, chi);
  validate(S, eta);

  if (!S.field.is_qp())
    return with(DimResult::zero(), {"F!=Q_p", "P!=B"},
                "Ind_B chi against Ind_P (eta o det) over F != Q_p: Ext^1_G vanishes");

  require_qp_group_hypotheses(g.datum());
  std::vector<std::string> hyps{"F=Q_p", "P!=B", "center-connected", "derived-SC"};
  if (levi.size() == 1) {
    const std::size_t a = *levi.begin();
    FxCharacter eps_inv = fx_inverse(S, cyclotomic_omega(S, omega));
    TorusCharacter target = twist_by_algebraic(S, twist_by_algebraic(S, torus_trivial(S), eta, det), eps_inv,
                                               g.datum().simple_roots[a]);
    if (chi == target)
      return with(DimResult::exactly(1), hyps,
                  "Ind_B chi against Ind_{P_alpha} (eta o det) over Q_p with chi = (eta o det)(eps^-1 o alpha_" +
                      std::to_string(a + 1) + "): one-dimensional");
  }
  return with(DimResult::zero(), hyps,
              "Ind_B chi against Ind_P (eta o det) over Q_p: Ext^1_G vanishes unless P = P_alpha and "
              "chi = (eta o det)(eps^-1 o alpha)");
}

TorusCharacter apply_theta_twist(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi,
                                 const OmegaConventions& omega) {
  auto theta = twisting_element(g.datum());
  if (!theta)
    throw Error(ErrorKind::NoTwistingElement, "no theta in X with <theta, alpha^vee> = 1 for every simple alpha");
  validate(S, chi);
  return twist_by_algebraic(S, chi, fx_inverse(S, cyclotomic_omega(S, omega)), theta->theta);
}

ExtnResult extn_principal(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi_prime,
                          const TorusCharacter& chi, Int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  if (S.coeff.k != 1)
    throw Error(ErrorKind::HypothesisNotMet, "Ext^n between principal series is computed over k_E only",
                {"coefficient level k = " + std::to_string(S.coeff.k)});
  if (!twisting_element(g.datum()))
    throw Error(ErrorKind::NoTwistingElement, "no theta in X with <theta, alpha^vee> = 1 for every simple alpha");
  validate(S, chi_prime);
  validate(S, chi);

  const Int deg = S.field.degree();
  const Int torus_ext1 = ext1_torus_dim(S.field, CoeffKind::ModP, g.datum().rank);
  const std::string conj = "ord-adjunction-conjecture";

  // lengths of all w with chi' = w(chi)
  std::vector<std::size_t> matching;
  for (const auto& w : g.enumerate().elements)
    if (weyl_act(g, S, w, chi) == chi_prime) matching.push_back(g.length(w));

  auto torus_ext = [&](Int i, Int copies) {
    if (copies == 0) return DimResult::zero();
    if (i == 0) return DimResult::exactly(copies);
    if (i == 1) return DimResult::exactly(copies * torus_ext1);
    return DimResult::unknown(std::to_string(copies) + " x dim Ext^" + std::to_string(i) + "_T(1,1)");
  };

  ExtnResult out;
  out.page.n = n;
  for (Int j = 0; j <= n; ++j) {
    Int copies = 0;
    for (auto l : matching)
      if (deg * static_cast<Int>(l) == j) ++copies;
    std::vector<DimResult> row;
    for (Int i = 0; i + j <= n; ++i) row.push_back(torus_ext(i, copies));
    if (copies > 0) out.page.columns.push_back(j);
    out.page.entries.push_back(std::move(row));
  }
  out.page.degenerates = out.page.columns.size() <= 1;

  bool reachable = std::any_of(matching.begin(), matching.end(),
                               [&](std::size_t l) { return deg * static_cast<Int>(l) <= n; });
  if (!reachable) {
    out.result = with(DimResult::zero(), {conj},
                      "Ext^n_G vanishes unless chi' = w(chi) with [F:Q_p] l(w) <= n");
    return out;
  }
  if (is_strongly_generic(g, S, chi)) {
    // strongly generic: exactly one w with chi' = w(chi)
    const Int m = n - deg * static_cast<Int>(matching.front());
    std::vector<std::string> hyps{conj, "strongly-generic"};
    const std::string src = "strongly generic chi, chi' = w(chi): Ext^n_G = Ext^m_T(1,1) with m = n - [F:Q_p] l(w) = " +
                            std::to_string(m);
    if (m < 0) out.result = with(DimResult::zero(), hyps, src);
    else if (m == 0) out.result = with(DimResult::exactly(1), hyps, src);
    else if (m == 1) out.result = with(DimResult::exactly(torus_ext1), hyps, src);
    else out.result = with(DimResult::unknown("dim Ext^" + std::to_string(m) + "_T(1,1)"), hyps,
                           src + "; torus Ext in degree >= 2 is not determined");
    return out;
  }
  out.result = with(DimResult::at_least(0), {conj},
                    "chi is not strongly generic: only the support condition chi' = w(chi), [F:Q_p] l(w) <= n is known");
  out.result.annotation = "strongly-generic hypothesis fails; verdict left open";
  return out;
}

CrossCheckReport coefficient_crosscheck(const std::vector<DimResult>& mod_p,
                                       const std::vector<DimResult>& unitary) {
  if (mod_p.size() != unitary.size())
    throw Error(ErrorKind::InvalidArgument, "tables of different sizes cannot be compared");
  CrossCheckReport rep;
  for (std::size_t i = 0; i < mod_p.size(); ++i) {
    if (!mod_p[i].is_pinned() || !unitary[i].is_pinned())
      throw Error(ErrorKind::IncomparableEntry,
                  "cell " + std::to_string(i) + " has " + unitary[i].str() + " (unitary) vs " + mod_p[i].str() +
                      " (mod p); only Zero and Exactly are comparable");
    const Int dE = unitary[i].pinned_dim(), d1 = mod_p[i].pinned_dim();
    ++rep.comparisons;
    bool ok = dE <= d1;
    if (!ok) ++rep.failures;
    rep.lines.push_back("cell " + std::to_string(i) + ": " + std::to_string(dE) + " <= " + std::to_string(d1) +
                        (ok ? " ok" : " FAIL"));
  }
  return rep;
}

ExtGrid ext1_grid(const WeylGroup& g, const CharacterSpace& S, CharacterFamily family, std::size_t bound) {
  auto chars = enumerate_torus_characters(S, family, bound);
  if (static_cast<long double>(chars.size()) * chars.size() > static_cast<long double>(bound))
    throw Error(ErrorKind::SearchSpaceTooLarge, std::to_string(chars.size()) + "^2 pairs exceed the bound " +
                                                    std::to_string(bound));
  ExtGrid grid;
  for (const auto& cp : chars)
    for (const auto& c : chars) {
      DimResult m = ext1_principal(g, S, cp, c, CoeffKind::ModP);
      DimResult u = ext1_principal(g, S, cp, c, CoeffKind::Unitary);
      if (!m.is_pinned() || !u.is_pinned()) {
        ++grid.skipped;
        continue;
      }
      grid.pairs.emplace_back(cp, c);
      grid.mod_p.push_back(std::move(m));
      grid.unitary.push_back(std::move(u));
    }
  return grid;
}

nlohmann::json to_json(const DimResult& r) {
  nlohmann::json j{{"verdict", r.str()}, {"hypotheses", r.hypotheses_used}, {"source", r.source}};
  if (r.annotation) j["annotation"] = *r.annotation;
  return j;
}

nlohmann::json to_json(const SpectralPage& page) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t j = 0; j < page.entries.size(); ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& e : page.entries[j]) row.push_back(e.str());
    rows.push_back({{"j", j}, {"entries", row}});
  }
  return {{"n", page.n}, {"rows", rows}, {"columns", page.columns}, {"degenerates", page.degenerates}};
}

}  // namespace ordext
