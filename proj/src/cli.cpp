#include "ordext/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordext/bruhat.hpp"
#include "ordext/error.hpp"
#include "ordext/ext.hpp"
#include "ordext/nilpotent.hpp"
#include "ordext/ordparts.hpp"

namespace ordext::cli {

using nlohmann::json;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // pretty-only trailer lines
};

struct Report {
  json result;
  Table table;
};

struct Options {
  std::string datum = "GL2";
  std::string field = "p=5,f=1,e=1,r=0";
  std::string coeff = "kE:q=5";
  std::string format = "pretty";
  std::uint64_t seed = 1;

  std::string parabolic;
  std::string word;
  std::string chi;
  std::string chi_prime;
  std::string eta;
  std::string det;
  std::string mode = "principal";
  std::string pair = "diag-generic";
  std::string pairs;
  std::string kind = "modp";
  std::string family = "tame";
  std::string lattice = "integer";
  Int n = -1;
  bool general_cell = false;

  Int nil_n = 3;
  Int nil_p = 5;
  Int nil_c = 2;
  std::size_t samples = 1000;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::size_t> parse_index_set(const std::string& text, std::size_t num_simple) {
  std::vector<std::size_t> out;
  if (text.empty() || text == "none" || text == "{}") return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty() && (tok[0] == 's' || tok[0] == 'a')) tok = tok.substr(1);
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || v < 1 || static_cast<std::size_t>(v) > num_simple)
      throw Error(ErrorKind::ParseError, "bad simple root index '" + tok + "' in --parabolic");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntVec parse_int_vec(const std::string& text, const std::string& flag) {
  IntVec out;
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), t.end());
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.empty()) throw Error(ErrorKind::ParseError, "bad integer '" + tok + "' in " + flag);
    out.push_back(v);
  }
  return out;
}

std::string vec_str(const IntVec& v) { return format_vec(v); }

CharacterSpace make_space(const Options& o, const RootDatum& rd) {
  LocalFieldParams F = parse_field(o.field);
  return CharacterSpace{F, parse_coefficients(o.coeff, F.p), rd.rank};
}

CharacterFamily parse_family(const std::string& s) {
  if (s == "tame") return CharacterFamily::TameOnly;
  if (s == "full") return CharacterFamily::Full;
  throw Error(ErrorKind::ParseError, "--family must be tame or full, got '" + s + "'");
}

FxCharacter parse_fx(const CharacterSpace& S, const std::string& text) {
  CharacterSpace one = S;
  one.rank = 1;
  return parse_character(one, text).at(0);
}

// ---- rootdata ---------------------------------------------------------------

Report cmd_rootdata_show(const Options& o) {
  RootDatum rd = resolve_datum(o.datum);
  WeylGroup g(rd);
  Report rep;
  json j = to_json(rd);
  j["cartan"] = rd.cartan_matrix();
  json roots = json::array();
  for (std::size_t i = 0; i < g.num_positive(); ++i)
    roots.push_back({{"root", g.positive().roots[i]},
                     {"coroot", g.positive().coroots[i]},
                     {"coefficients", g.positive().coefficients[i]},
                     {"height", g.positive().heights[i]}});
  j["positive_roots"] = roots;
  auto xq = character_quotient(rd), cq = cocharacter_quotient(rd);
  j["center_connected"] = xq.torsion_free();
  j["derived_simply_connected"] = cq.torsion_free();
  j["character_quotient"] = {{"divisors", xq.divisors}, {"free_rank", xq.free_rank}};
  j["cocharacter_quotient"] = {{"divisors", cq.divisors}, {"free_rank", cq.free_rank}};
  auto theta = twisting_element(rd);
  j["theta"] = theta ? json(theta->theta) : json(nullptr);
  json rh = json::array();
  for (const auto& x : rho(rd)) rh.push_back(x.get_str());
  j["rho"] = rh;
  j["weyl_order"] = g.enumerate().size();
  rep.result = j;

  rep.table.header = {"index", "root", "coroot", "height"};
  for (std::size_t i = 0; i < g.num_positive(); ++i)
    rep.table.rows.push_back({std::to_string(i), vec_str(g.positive().roots[i]), vec_str(g.positive().coroots[i]),
                              std::to_string(g.positive().heights[i])});
  rep.table.notes.push_back("datum " + rd.name + ", rank " + std::to_string(rd.rank) + ", semisimple rank " +
                            std::to_string(rd.semisimple_rank()));
  rep.table.notes.push_back("center connected: " + std::string(xq.torsion_free() ? "yes" : "no") +
                            ", derived group simply connected: " + (cq.torsion_free() ? "yes" : "no"));
  rep.table.notes.push_back("theta: " + (theta ? vec_str(theta->theta) : std::string("none")) +
                            ", rho: " + format_vec(rho(rd)) + ", |W| = " + std::to_string(g.enumerate().size()));
  return rep;
}

// ---- weyl -------------------------------------------------------------------

Report cmd_weyl_table(const Options& o) {
  WeylGroup g(resolve_datum(o.datum));
  WeylTable t = g.enumerate();
  Report rep;
  rep.table.header = {"word", "length", "inversions"};
  for (std::size_t c = 0; c < g.datum().rank; ++c) rep.table.header.push_back("alpha_w_" + std::to_string(c + 1));
  json rows = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    IntVec a = g.alpha_w(t.elements[i]);
    std::size_t inv = g.inversion_set(t.elements[i]).size();
    std::vector<std::string> row{format_word(t.words[i]), std::to_string(t.lengths[i]), std::to_string(inv)};
    for (auto x : a) row.push_back(std::to_string(x));
    rep.table.rows.push_back(std::move(row));
    rows.push_back({{"word", format_word(t.words[i])}, {"length", t.lengths[i]}, {"inversions", inv}, {"alpha_w", a}});
  }
  rep.result = {{"order", t.size()}, {"poincare", t.poincare}, {"elements", rows}};
  rep.table.notes.push_back("|W| = " + std::to_string(t.size()) + ", l(w0) = " + std::to_string(t.poincare.size() - 1));
  return rep;
}

Report cmd_weyl_alpha(const Options& o) {
  WeylGroup g(resolve_datum(o.datum));
  if (o.word.empty()) throw Error(ErrorKind::InvalidArgument, "--word is required");
  Word word = parse_word(o.word, g.num_simple());
  WeylElement w = g.from_word(word);
  AlphaKSequence seq = alpha_k_sequence(g, w, word);
  Report rep;
  rep.table.header = {"k", "alpha_k", "step_root"};
  json rows = json::array();
  for (std::size_t k = 0; k < seq.alpha.size(); ++k) {
    std::string step = k < seq.step_roots.size() ? vec_str(seq.step_roots[k]) : "-";
    rep.table.rows.push_back({std::to_string(k), vec_str(seq.alpha[k]), step});
    json r{{"k", k}, {"alpha_k", seq.alpha[k]}};
    if (k < seq.step_roots.size()) r["step_root"] = seq.step_roots[k];
    rows.push_back(r);
  }
  rep.result = {{"word", format_word(word)}, {"alpha_w", g.alpha_w(w)}, {"sequence", rows}};
  return rep;
}

// ---- bruhat -----------------------------------------------------------------

Report cmd_bruhat_filtration(const Options& o) {
  WeylGroup g(resolve_datum(o.datum));
  auto I = parse_index_set(o.parabolic, g.num_simple());
  FiltrationLedger led = I.empty() ? bruhat_filtration(g) : parabolic_filtration(g, I);
  Report rep;
  rep.result = to_json(led, g);
  rep.table.header = {"r", "word", "length", "n_w_roots"};
  for (std::size_t r = 0; r < led.graded.size(); ++r)
    for (const auto& c : led.graded[r])
      rep.table.rows.push_back(
          {std::to_string(r), format_word(c.word), std::to_string(c.length), std::to_string(c.n_w_roots.size())});
  rep.table.notes = ses_report(led);
  return rep;
}

// ---- ordparts ---------------------------------------------------------------

void list_rows(const CharacterSpace& S, const GradedCharacterList& list, Table& t) {
  for (std::size_t i = 0; i < list.summands.size(); ++i) {
    const auto& s = list.summands[i];
    t.rows.push_back({std::to_string(list.degree), std::to_string(i), format_word(s.provenance), vec_str(s.twist),
                      s.character ? format_character(S, *s.character) : s.descriptor});
  }
}

Report cmd_ordparts(const Options& o) {
  WeylGroup g(resolve_datum(o.datum));
  CharacterSpace S = make_space(o, g.datum());
  OrdOptions opts;
  opts.assume_general_cell_formula = o.general_cell;
  TorusCharacter chi = o.chi.empty() ? torus_trivial(S) : parse_character(S, o.chi);
  Report rep;
  rep.table.header = {"n", "index", "provenance", "twist", "character"};
  const Int top = S.field.degree() * static_cast<Int>(g.num_positive());

  auto degrees = [&]() {
    std::vector<Int> ns;
    if (o.n >= 0) ns.push_back(o.n);
    else
      for (Int n = 0; n <= top + 1; ++n) ns.push_back(n);
    return ns;
  };

  if (o.mode == "principal" || o.mode == "parabolic") {
    json lists = json::array();
    std::vector<std::string> census;
    std::vector<std::size_t> I;
    FxCharacter eta;
    IntVec det;
    if (o.mode == "parabolic") {
      I = parse_index_set(o.parabolic, g.num_simple());
      eta = o.eta.empty() ? fx_trivial(S) : parse_fx(S, o.eta);
      det = o.det.empty() ? IntVec(g.datum().rank, 0) : parse_int_vec(o.det, "--det");
    }
    for (Int n : degrees()) {
      auto list = o.mode == "principal" ? hn_ord_principal(g, S, chi, n, opts)
                                        : hn_ord_parabolic(g, S, I, eta, det, n, opts);
      list_rows(S, list, rep.table);
      lists.push_back(to_json(S, list));
      census.push_back(std::to_string(list.size()));
    }
    rep.result = {{"mode", o.mode}, {"lists", lists}};
    rep.table.notes.push_back("census: " + join(census, ", "));
  } else if (o.mode == "h1") {
    auto list = h1_ord_principal(g, S, TorusRep::of(chi), opts);
    list_rows(S, list, rep.table);
    rep.result = {{"mode", o.mode}, {"lists", json::array({to_json(S, list)})}};
  } else if (o.mode == "cell") {
    if (o.word.empty()) throw Error(ErrorKind::InvalidArgument, "--word is required for --mode cell");
    WeylElement w = g.from_word(parse_word(o.word, g.num_simple()));
    json lists = json::array();
    for (Int n : degrees()) {
      auto list = ord_cell(g, S, w, TorusRep::of(chi), n, opts);
      list_rows(S, list, rep.table);
      lists.push_back(to_json(S, list));
    }
    rep.result = {{"mode", o.mode}, {"lists", lists}};
  } else if (o.mode == "ledger") {
    if (o.word.empty()) throw Error(ErrorKind::InvalidArgument, "--word is required for --mode ledger");
    Word word = parse_word(o.word, g.num_simple());
    auto led = cohomology_ledger(g, g.from_word(word), word, S.field);
    rep.result = {{"mode", o.mode}, {"ledger", to_json(led)}};
    rep.table.header = {"k", "group", "top_degree", "twist", "top", "below_top", "above_top"};
    for (const auto& r : led.rows)
      rep.table.rows.push_back({std::to_string(r.k), r.group, std::to_string(r.top_degree), vec_str(r.twist), r.top,
                                r.below_top, r.above_top});
  } else {
    throw Error(ErrorKind::ParseError, "--mode must be principal, parabolic, h1, cell or ledger, got '" + o.mode + "'");
  }
  return rep;
}

// ---- ext-table --------------------------------------------------------------

std::pair<TorusCharacter, TorusCharacter> choose_pair(const WeylGroup& g, const CharacterSpace& S,
                                                      const Options& o) {
  CharacterFamily fam = parse_family(o.family);
  auto chars = enumerate_torus_characters(S, fam);
  auto orbit = [&](const TorusCharacter& c) {
    std::vector<TorusCharacter> out;
    for (const auto& w : g.enumerate().elements) out.push_back(weyl_act(g, S, w, c));
    return out;
  };
  std::string kind = o.pair, arg;
  if (auto colon = kind.find(':'); colon != std::string::npos) {
    arg = kind.substr(colon + 1);
    kind = kind.substr(0, colon);
  }
  std::optional<TorusCharacter> fixed_chi;
  if (!o.chi.empty()) fixed_chi = parse_character(S, o.chi);
  auto candidates = fixed_chi ? std::vector<TorusCharacter>{*fixed_chi} : chars;

  for (const auto& c : candidates) {
    if (kind == "diag") return {c, c};
    if (kind == "diag-generic") {
      if (is_weakly_generic(g, S, c)) return {c, c};
    } else if (kind == "reflect") {
      auto idx = parse_index_set(arg, g.num_simple());
      if (idx.size() != 1) throw Error(ErrorKind::ParseError, "--pair reflect:i needs one simple root index");
      TorusCharacter s = weyl_act(g, S, g.simple(idx[0]), c);
      if (s != c) return {s, c};
    } else if (kind == "strong") {
      if (!is_strongly_generic(g, S, c)) continue;
      WeylElement w = arg.empty() ? g.identity() : g.from_word(parse_word(arg, g.num_simple()));
      return {weyl_act(g, S, w, c), c};
    } else if (kind == "unrelated") {
      auto orb = orbit(c);
      for (const auto& d : chars)
        if (std::find(orb.begin(), orb.end(), d) == orb.end()) return {d, c};
    } else {
      throw Error(ErrorKind::ParseError, "--pair must be diag, diag-generic, reflect:i, strong[:word], unrelated "
                                         "or grid, got '" + o.pair + "'");
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no character pair of kind '" + o.pair + "' in the " + o.family + " family");
}

CoeffKind parse_kind(const std::string& s) {
  if (s == "modp") return CoeffKind::ModP;
  if (s == "unitary") return CoeffKind::Unitary;
  throw Error(ErrorKind::ParseError, "--kind must be modp or unitary, got '" + s + "'");
}

Report cmd_ext_table(const Options& o) {
  WeylGroup g(resolve_datum(o.datum));
  CharacterSpace S = make_space(o, g.datum());
  Report rep;

  if (o.pairs == "grid" || o.pair == "grid" || !o.pairs.empty()) {
    std::vector<std::pair<TorusCharacter, TorusCharacter>> pairs;
    std::vector<DimResult> mod_p, unitary;
    std::size_t skipped = 0;
    if (!o.pairs.empty() && o.pairs != "grid") {
      std::ifstream in(o.pairs);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open --pairs file " + o.pairs);
      json arr = json::parse(in);
      for (const auto& e : arr) {
        TorusCharacter cp = parse_character(S, e.at("chi_prime").get<std::string>());
        TorusCharacter c = parse_character(S, e.at("chi").get<std::string>());
        DimResult m = ext1_principal(g, S, cp, c, CoeffKind::ModP);
        DimResult u = ext1_principal(g, S, cp, c, CoeffKind::Unitary);
        if (!m.is_pinned() || !u.is_pinned()) {
          ++skipped;
          continue;
        }
        pairs.emplace_back(cp, c);
        mod_p.push_back(m);
        unitary.push_back(u);
      }
    } else {
      ExtGrid grid = ext1_grid(g, S, parse_family(o.family));
      pairs = std::move(grid.pairs);
      mod_p = std::move(grid.mod_p);
      unitary = std::move(grid.unitary);
      skipped = grid.skipped;
    }
    CrossCheckReport cc = coefficient_crosscheck(mod_p, unitary);
    rep.table.header = {"chi_prime", "chi", "n", "verdict_modp", "verdict_unitary", "hypotheses", "citation"};
    json cells = json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::string a = format_character(S, pairs[i].first), b = format_character(S, pairs[i].second);
      rep.table.rows.push_back({a, b, "1", mod_p[i].str(), unitary[i].str(), join(mod_p[i].hypotheses_used, ";"),
                                mod_p[i].source});
      cells.push_back({{"chi_prime", a},
                       {"chi", b},
                       {"n", 1},
                       {"mod_p", to_json(mod_p[i])},
                       {"unitary", to_json(unitary[i])}});
    }
    rep.result = {{"cells", cells},
                  {"skipped", skipped},
                  {"crosscheck", {{"comparisons", cc.comparisons}, {"failures", cc.failures}, {"passed", cc.passed()}}}};
    rep.table.notes.push_back("cross-check d_unitary <= d_modp: " + std::to_string(cc.comparisons) +
                              " comparisons, " + std::to_string(cc.failures) + " failures, " +
                              std::to_string(skipped) + " cells skipped (not pinned)");
    return rep;
  }

  if (!o.parabolic.empty()) {
    auto I = parse_index_set(o.parabolic, g.num_simple());
    TorusCharacter chi = o.chi.empty() ? torus_trivial(S) : parse_character(S, o.chi);
    FxCharacter eta = o.eta.empty() ? fx_trivial(S) : parse_fx(S, o.eta);
    IntVec det = o.det.empty() ? IntVec(g.datum().rank, 0) : parse_int_vec(o.det, "--det");
    DimResult r = ext1_parabolic(g, S, chi, I, eta, det);
    rep.result = to_json(r);
    rep.result["chi"] = format_character(S, chi);
    rep.result["eta"] = format_fx(S, eta);
    rep.table.header = {"chi", "eta", "verdict", "hypotheses", "citation"};
    rep.table.rows.push_back({format_character(S, chi), format_fx(S, eta), r.str(), join(r.hypotheses_used, ";"), r.source});
    return rep;
  }

  TorusCharacter chi_prime, chi;
  if (!o.chi.empty() && !o.chi_prime.empty()) {
    chi = parse_character(S, o.chi);
    chi_prime = parse_character(S, o.chi_prime);
  } else {
    std::tie(chi_prime, chi) = choose_pair(g, S, o);
  }
  const std::string a = format_character(S, chi_prime), b = format_character(S, chi);
  rep.table.header = {"chi_prime", "chi", "n", "verdict", "hypotheses", "citation"};
  if (o.n >= 0) {
    ExtnResult r = extn_principal(g, S, chi_prime, chi, o.n);
    rep.result = to_json(r.result);
    rep.result["chi_prime"] = a;
    rep.result["chi"] = b;
    rep.result["n"] = o.n;
    rep.result["page"] = to_json(r.page);
    rep.table.rows.push_back({a, b, std::to_string(o.n), r.result.str(), join(r.result.hypotheses_used, ";"), r.result.source});
    for (std::size_t j = 0; j < r.page.entries.size(); ++j) {
      std::vector<std::string> cells;
      for (const auto& e : r.page.entries[j]) cells.push_back(e.str());
      rep.table.notes.push_back("E2 row j=" + std::to_string(j) + ": " + join(cells, "  "));
    }
    rep.table.notes.push_back(std::string("degenerates: ") + (r.page.degenerates ? "yes" : "no"));
    return rep;
  }
  DimResult r = ext1_principal(g, S, chi_prime, chi, parse_kind(o.kind));
  rep.result = to_json(r);
  rep.result["chi_prime"] = a;
  rep.result["chi"] = b;
  rep.result["n"] = 1;
  rep.result["kind"] = o.kind;
  rep.table.rows.push_back({a, b, "1", r.str(), join(r.hypotheses_used, ";"), r.source});
  if (r.annotation) rep.table.notes.push_back("note: " + *r.annotation);
  return rep;
}

// ---- nilpotent --------------------------------------------------------------

Report cmd_nilpotent_check(const Options& o) {
  if (o.nil_n < 2 || o.nil_n > 8) throw Error(ErrorKind::InvalidArgument, "--n must lie in [2, 8]");
  const auto n = static_cast<std::size_t>(o.nil_n);
  Report rep;
  rep.table.header = {"check", "detail", "samples", "passes", "failures"};
  json witnesses = json::array();
  std::size_t passes = 0, failures = 0;
  json result;

  LieLattice L = o.lattice == "skew" ? skew_lattice(o.nil_p) : integer_lattice(n, o.nil_p);
  if (o.lattice != "skew" && o.lattice != "integer")
    throw Error(ErrorKind::ParseError, "--lattice must be integer or skew, got '" + o.lattice + "'");
  if (L.n != n) throw Error(ErrorKind::InvalidArgument, "the skew lattice lives in n = 3");

  if (o.lattice == "integer") {
    StandardFamily fam = make_standard_family(L, o.nil_c);
    CongruenceReport cr = congruence_harness(fam, o.samples, o.seed);
    result["threshold"] = cr.threshold;
    result["congruence"] = to_json(cr);
    result["family_valid"] = fam.valid();
    for (const auto& s : cr.shifts) {
      std::size_t f = s.congruence_failures + s.closure_failures + s.exp_log_failures;
      rep.table.rows.push_back({"congruence", "r=" + std::to_string(s.shift) + (s.at_or_above_threshold ? "" : " (unasserted)"),
                                std::to_string(s.samples), std::to_string(s.samples - std::min(f, s.samples)),
                                std::to_string(f)});
      if (s.at_or_above_threshold) {
        passes += s.samples - std::min(f, s.samples);
        failures += f;
      }
    }
    for (const auto& w : cr.witnesses) witnesses.push_back(w);
  } else {
    result["threshold"] = nullptr;
  }

  std::set<RootPos> first{{0, 1}}, rest;
  for (const auto& pos : root_positions(n))
    if (pos != RootPos{0, 1}) rest.insert(pos);
  FactorizationReport fr = factorization_check(first, rest, L, o.samples, o.seed);
  result["factorization"] = to_json(fr);
  rep.table.rows.push_back({"factorization", "E12 | rest on " + L.label, std::to_string(fr.samples),
                            std::to_string(fr.passes), std::to_string(fr.failures)});
  passes += fr.passes;
  failures += fr.failures;
  for (const auto& w : fr.witnesses) witnesses.push_back(w);

  result["passes"] = passes;
  result["failures"] = failures;
  result["witnesses"] = witnesses;
  rep.result = result;
  rep.table.notes.push_back("seed " + std::to_string(o.seed) + ", lattice " + L.label);
  return rep;
}

// ---- output -----------------------------------------------------------------

void emit(const Report& rep, const json& config, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << json{{"config", config}, {"result", rep.result}}.dump(2) << "\n";
    return;
  }
  out << "# config: " << config.dump() << "\n";
  if (format == "tsv") {
    out << join(rep.table.header, "\t") << "\n";
    for (const auto& r : rep.table.rows) out << join(r, "\t") << "\n";
    return;
  }
  std::vector<std::size_t> width(rep.table.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  grow(rep.table.header);
  for (const auto& r : rep.table.rows) grow(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(rep.table.header);
  for (const auto& r : rep.table.rows) line(r);
  for (const auto& n : rep.table.notes) out << n << "\n";
}

// Flags from a JSON config object, placed before the command line so that
// explicit flags win.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open --config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("--config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "--config must hold a JSON object");
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (k == "command") continue;
    if (v.is_boolean()) {
      if (v.get<bool>()) out.push_back("--" + k);
    } else if (v.is_string()) {
      out.push_back("--" + k);
      out.push_back(v.get<std::string>());
    } else if (v.is_number()) {
      out.push_back("--" + k);
      out.push_back(v.dump());
    } else {
      throw Error(ErrorKind::ParseError, "--config key '" + k + "' must be a string, number or boolean");
    }
  }
  return out;
}

}  // namespace

std::string usage() {
  return "usage: ordext <command> [options]\n"
         "\n"
         "commands:\n"
         "  rootdata show        --datum NAME|JSON|FILE.json\n"
         "  weyl table           --datum NAME\n"
         "  weyl alpha           --datum NAME --word s1s2...\n"
         "  bruhat filtration    --datum NAME [--parabolic 1,2]\n"
         "  ordparts             --datum NAME --field p=..,f=..,e=..,r=.. --coeff SPEC [--chi C] [--degree N]\n"
         "                       [--mode principal|parabolic|h1|cell|ledger] [--word W] [--parabolic I]\n"
         "                       [--eta E] [--det D] [--assume-general-cell-formula]\n"
         "  ext-table            --datum NAME --field F --coeff SPEC\n"
         "                       [--pair diag|diag-generic|reflect:i|strong[:word]|unrelated|grid]\n"
         "                       [--chi C --chi-prime C'] [--kind modp|unitary] [--n N] [--pairs grid|FILE]\n"
         "                       [--parabolic I --eta E --det D] [--family tame|full]\n"
         "  nilpotent check      --n 3 --p 5 --c 2 --samples 1000 --seed S [--lattice integer|skew]\n"
         "\n"
         "common options: --format json|tsv|pretty, --config FILE.json, --seed S\n"
         "exit codes: 0 ok, 1 input error, 2 hypothesis guard rejected the request\n";
}

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
  if (args_in.empty()) {
    err << usage();
    return kInputError;
  }
  try {
    std::vector<std::string> args;
    std::vector<std::string> tail;
    std::string config_path;
    for (std::size_t i = 0; i < args_in.size(); ++i) {
      if (args_in[i] == "--config") {
        if (i + 1 >= args_in.size()) throw Error(ErrorKind::ParseError, "--config needs a file argument");
        config_path = args_in[++i];
      } else {
        tail.push_back(args_in[i]);
      }
    }
    // positional command words come first, then config flags, then explicit flags
    std::size_t words = 0;
    while (words < tail.size() && tail[words].rfind("--", 0) != 0) ++words;
    args.assign(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(words));
    if (!config_path.empty())
      for (auto& a : config_args(config_path)) args.push_back(a);
    args.insert(args.end(), tail.begin() + static_cast<std::ptrdiff_t>(words), tail.end());

    Options o;
    CLI::App app{"ordext: root data, Weyl groups and ordinary parts of principal series"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    std::string command;
    auto common = [&](CLI::App* sub, const std::string& name) {
      sub->add_option("--datum", o.datum, "root datum preset, inline JSON or .json file");
      sub->add_option("--format", o.format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
      sub->add_option("--seed", o.seed, "random seed");
      sub->callback([&command, name] { command = name; });
    };
    auto field_opts = [&](CLI::App* sub) {
      sub->add_option("--field", o.field, "p=..,f=..,e=..,r=..");
      sub->add_option("--coeff", o.coeff, "kE:q=Q | unram:q=Q,k=K | div:d1,d2;k=K");
      sub->add_option("--chi,--char", o.chi, "torus character, components 'u/t[/wt[/wf]]' separated by ','");
    };

    auto* rd = app.add_subcommand("rootdata", "root datum queries")->require_subcommand(1);
    common(rd->add_subcommand("show", "datum, positive roots, quotients, theta and rho"), "rootdata show");

    auto* weyl = app.add_subcommand("weyl", "Weyl group tables")->require_subcommand(1);
    common(weyl->add_subcommand("table", "elements with words, lengths and alpha_w"), "weyl table");
    auto* alpha = weyl->add_subcommand("alpha", "alpha_k sequence of a reduced word");
    common(alpha, "weyl alpha");
    alpha->add_option("--word", o.word, "reduced word, e.g. s1s2s1");

    auto* bruhat = app.add_subcommand("bruhat", "Bruhat filtrations")->require_subcommand(1);
    auto* filt = bruhat->add_subcommand("filtration", "graded pieces of the cell filtration");
    common(filt, "bruhat filtration");
    filt->add_option("--parabolic", o.parabolic, "simple roots of the Levi, 1-based, comma separated");

    auto* ord = app.add_subcommand("ordparts", "graded characters of derived ordinary parts");
    common(ord, "ordparts");
    field_opts(ord);
    ord->add_option("--mode", o.mode, "principal, parabolic, h1, cell or ledger");
    ord->add_option("--n,--degree", o.n, "degree; all degrees when omitted");
    ord->add_option("--word", o.word, "Weyl element for cell and ledger modes");
    ord->add_option("--parabolic", o.parabolic, "Levi simple roots for parabolic mode");
    ord->add_option("--eta", o.eta, "character of F^x");
    ord->add_option("--det", o.det, "G-invariant character det in X");
    ord->add_flag("--assume-general-cell-formula", o.general_cell,
                  "use the cell formula beyond the cases where it is proved");

    auto* ext = app.add_subcommand("ext-table", "Ext dimension verdicts");
    common(ext, "ext-table");
    field_opts(ext);
    ext->add_option("--chi-prime", o.chi_prime, "first character");
    ext->add_option("--pair", o.pair, "diag, diag-generic, reflect:i, strong[:word], unrelated or grid");
    ext->add_option("--pairs", o.pairs, "'grid' for every pair of the family, or a JSON file of {chi_prime, chi}");
    ext->add_option("--kind", o.kind, "modp or unitary");
    ext->add_option("--family", o.family, "tame or full");
    ext->add_option("--n", o.n, "Ext degree (default 1)");
    ext->add_option("--parabolic", o.parabolic, "Levi simple roots: Ext^1 against Ind_P (eta o det)");
    ext->add_option("--eta", o.eta, "character of F^x");
    ext->add_option("--det", o.det, "G-invariant character det in X");

    auto* nil = app.add_subcommand("nilpotent", "exact BCH and standard lattices")->require_subcommand(1);
    auto* check = nil->add_subcommand("check", "congruence and factorization harness");
    common(check, "nilpotent check");
    check->add_option("--n", o.nil_n, "matrix size");
    check->add_option("--p", o.nil_p, "prime, p > n");
    check->add_option("--c", o.nil_c, "congruence exponent");
    check->add_option("--samples", o.samples, "samples per shift");
    check->add_option("--lattice", o.lattice, "integer or skew");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << "\n\n" << usage();
      return kInputError;
    }

    json config{{"command", command}, {"format", o.format}, {"seed", o.seed}};
    auto record = [&](const CLI::App* sub) {
      for (const auto* opt : sub->get_options()) {
        if (opt->get_name().empty() || opt->get_name() == "--help" || opt->count() == 0) continue;
        std::string key = opt->get_name().substr(2);
        if (key == "format" || key == "seed") continue;
        auto res = opt->results();
        config[key] = opt->get_expected_min() == 0 ? json(true) : json(res.empty() ? "" : res.back());
      }
    };
    for (const auto* sub : app.get_subcommands()) {
      record(sub);
      for (const auto* leaf : sub->get_subcommands()) record(leaf);
    }
    // resolved defaults that determine the output
    if (command != "nilpotent check") config["datum"] = o.datum;
    if (command == "ordparts" || command == "ext-table") {
      config["field"] = format_field(parse_field(o.field));
      config["coeff"] = o.coeff;
    }
    if (command == "nilpotent check") {
      config["n"] = o.nil_n;
      config["p"] = o.nil_p;
      config["c"] = o.nil_c;
      config["samples"] = o.samples;
      config["lattice"] = o.lattice;
    }

    Report rep;
    if (command == "rootdata show") rep = cmd_rootdata_show(o);
    else if (command == "weyl table") rep = cmd_weyl_table(o);
    else if (command == "weyl alpha") rep = cmd_weyl_alpha(o);
    else if (command == "bruhat filtration") rep = cmd_bruhat_filtration(o);
    else if (command == "ordparts") rep = cmd_ordparts(o);
    else if (command == "ext-table") rep = cmd_ext_table(o);
    else if (command == "nilpotent check") rep = cmd_nilpotent_check(o);
    else throw Error(ErrorKind::ParseError, "unknown command");
    emit(rep, config, o.format, out);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_hypothesis_guard(e.kind()) ? kGuardRejected : kInputError;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace ordext::cli
