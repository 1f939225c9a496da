#include "ordext/localchar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ordext/error.hpp"
#include "ordext/smith.hpp"

namespace ordext {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LocalFieldParams make_field(Int p, Int f, Int e, Int r) {
  std::vector<std::string> problems;
  if (!is_prime(p)) problems.push_back("p = " + std::to_string(p) + " is not prime");
  if (f < 1) problems.push_back("f must be >= 1");
  if (e < 1) problems.push_back("e must be >= 1");
  if (r < 0) problems.push_back("r must be >= 0");
  if (problems.empty()) {
    if (p == 2 && r < 1) problems.push_back("p = 2 forces r >= 1 since -1 is in F");
    if (r >= 1) {
      Int need = checked_mul(ipow(p, r - 1), p - 1);
      if (e % need != 0)
        problems.push_back("mu_{p^r} in F needs p^(r-1)(p-1) = " + std::to_string(need) +
                           " to divide e = " + std::to_string(e));
    }
    if (f > 62) problems.push_back("f too large");
  }
  if (!problems.empty()) throw Error(ErrorKind::InvalidArgument, "invalid field parameters", problems);
  return LocalFieldParams{p, f, e, r};
}

namespace {

std::map<std::string, std::string> parse_key_values(const std::string& text, char sep) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=value, got '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

Int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "expected an integer, got '" + s + "'");
  }
}

Int positive_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int lcm(Int a, Int b) { return a / gcd(a, b) * b; }

}  // namespace

LocalFieldParams parse_field(const std::string& text) {
  auto kv = parse_key_values(text, ',');
  for (const auto& [k, v] : kv)
    if (k != "p" && k != "f" && k != "e" && k != "r")
      throw Error(ErrorKind::ParseError, "unknown field key '" + k + "'");
  if (!kv.count("p")) throw Error(ErrorKind::ParseError, "field spec needs p");
  Int p = parse_int(kv["p"]);
  Int f = kv.count("f") ? parse_int(kv["f"]) : 1;
  Int e = kv.count("e") ? parse_int(kv["e"]) : 1;
  Int r = kv.count("r") ? parse_int(kv["r"]) : (p == 2 ? 1 : 0);
  return make_field(p, f, e, r);
}

std::string format_field(const LocalFieldParams& F) {
  return "p=" + std::to_string(F.p) + ",f=" + std::to_string(F.f) + ",e=" + std::to_string(F.e) +
         ",r=" + std::to_string(F.r);
}

Int CoefficientUnits::order() const {
  Int o = 1;
  for (Int m : factors) o = checked_mul(o, m);
  return o;
}

bool CoefficientUnits::is_p_power_factor(std::size_t i) const {
  Int m = factors.at(i);
  if (m == 1) return false;
  while (m % p == 0) m /= p;
  return m == 1;
}

Int CoefficientUnits::p_part_order() const {
  Int o = 1;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (is_p_power_factor(i)) o = checked_mul(o, factors[i]);
  return o;
}

Int CoefficientUnits::prime_to_p_order() const { return order() / p_part_order(); }

std::vector<Int> CoefficientUnits::divisors() const {
  if (factors.empty()) return {};
  IntMatrix diag(factors.size(), IntVec(factors.size(), 0));
  for (std::size_t i = 0; i < factors.size(); ++i) diag[i][i] = factors[i];
  std::vector<Int> out;
  for (Int d : smith_normal_form(diag, factors.size()).divisors)
    if (d != 1) out.push_back(d);
  return out;
}

CoefficientUnits make_coefficients(Int p, const std::vector<Int>& cyclic_orders, int k) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "coefficient prime must be prime");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "level k must be >= 1");
  CoefficientUnits A;
  A.p = p;
  A.k = k;
  std::vector<Int> prime_to_p, p_power;
  for (Int n : cyclic_orders) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic orders must be positive");
    Int a = 1;
    while (n % p == 0) {
      n /= p;
      a *= p;
    }
    if (n > 1) prime_to_p.push_back(n);
    if (a > 1) p_power.push_back(a);
  }
  A.factors = prime_to_p;
  A.factors.insert(A.factors.end(), p_power.begin(), p_power.end());
  if (k == 1 && !A.has_trivial_p_part())
    throw Error(ErrorKind::InvalidArgument, "level k = 1 (a residue field) needs order prime to p");
  return A;
}

CoefficientUnits residue_field_units(Int p, Int q_E) {
  Int m = q_E;
  while (m > 1 && m % p == 0) m /= p;
  if (q_E < p || m != 1)
    throw Error(ErrorKind::InvalidArgument, "q = " + std::to_string(q_E) + " is not a power of p = " + std::to_string(p));
  return make_coefficients(p, {q_E - 1}, 1);
}

CoefficientUnits unramified_units(Int p, Int q_E, int k) {
  CoefficientUnits base = residue_field_units(p, q_E);
  if (k == 1) return base;
  if (p == 2 && k > 2)
    throw Error(ErrorKind::InvalidArgument,
                "(O_E/2^k)^x is not (Z/2^(k-1))^m for k > 2; pass explicit cyclic orders");
  Int m = 0;
  for (Int x = q_E; x > 1; x /= p) ++m;
  std::vector<Int> orders{q_E - 1};
  for (Int i = 0; i < m; ++i) orders.push_back(ipow(p, k - 1));
  return make_coefficients(p, orders, k);
}

CoefficientUnits parse_coefficients(const std::string& text, Int p) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::ParseError, "coefficient spec must look like kE:q=5, unram:q=5,k=2 or div:4,25;k=2");
  std::string kind = text.substr(0, colon), rest = text.substr(colon + 1);
  if (kind == "kE") {
    auto kv = parse_key_values(rest, ',');
    if (!kv.count("q")) throw Error(ErrorKind::ParseError, "kE needs q");
    return residue_field_units(p, parse_int(kv["q"]));
  }
  if (kind == "unram") {
    auto kv = parse_key_values(rest, ',');
    if (!kv.count("q")) throw Error(ErrorKind::ParseError, "unram needs q");
    int k = kv.count("k") ? static_cast<int>(parse_int(kv["k"])) : 1;
    return unramified_units(p, parse_int(kv["q"]), k);
  }
  if (kind == "div") {
    std::string orders_text = rest, level;
    auto semi = rest.find(';');
    if (semi != std::string::npos) {
      orders_text = rest.substr(0, semi);
      level = rest.substr(semi + 1);
    }
    std::vector<Int> orders;
    std::stringstream ss(orders_text);
    std::string item;
    while (std::getline(ss, item, ',')) orders.push_back(parse_int(item));
    int k = 0;
    if (!level.empty()) {
      auto kv = parse_key_values(level, ',');
      if (!kv.count("k")) throw Error(ErrorKind::ParseError, "expected k=... after ';'");
      k = static_cast<int>(parse_int(kv["k"]));
    }
    if (k == 0) {
      bool has_p = std::any_of(orders.begin(), orders.end(), [p](Int n) { return n % p == 0; });
      k = has_p ? 2 : 1;
    }
    return make_coefficients(p, orders, k);
  }
  throw Error(ErrorKind::ParseError, "unknown coefficient kind '" + kind + "'");
}

std::string format_coefficients(const CoefficientUnits& A) {
  std::string s = "div:";
  for (std::size_t i = 0; i < A.factors.size(); ++i) s += (i ? "," : "") + std::to_string(A.factors[i]);
  if (A.factors.empty()) s += "1";
  return s + ";k=" + std::to_string(A.k);
}

GroupElement group_zero(const CoefficientUnits& A) { return GroupElement(A.factors.size(), 0); }

GroupElement group_normalize(const CoefficientUnits& A, GroupElement x) {
  if (x.size() != A.factors.size())
    throw Error(ErrorKind::InvalidArgument, "group element has " + std::to_string(x.size()) +
                                                " coordinates, expected " + std::to_string(A.factors.size()));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = positive_mod(x[i], A.factors[i]);
  return x;
}

GroupElement group_add(const CoefficientUnits& A, const GroupElement& x, const GroupElement& y) {
  GroupElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = positive_mod(x[i] + y[i], A.factors[i]);
  return out;
}

GroupElement group_scale(const CoefficientUnits& A, Int n, const GroupElement& x) {
  GroupElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Int m = A.factors[i];
    out[i] = positive_mod(checked_mul(positive_mod(n, m), x[i]), m);
  }
  return out;
}

bool group_is_zero(const GroupElement& x) { return is_zero(x); }

std::vector<GroupElement> torsion_elements(const CoefficientUnits& A, Int n, bool p_part_only) {
  std::vector<GroupElement> out{group_zero(A)};
  for (std::size_t i = 0; i < A.factors.size(); ++i) {
    if (p_part_only && !A.is_p_power_factor(i)) continue;
    Int m = A.factors[i];
    Int step = m / gcd(n, m);
    std::vector<GroupElement> next;
    for (const auto& x : out)
      for (Int v = 0; v < m; v += step) {
        GroupElement y = x;
        y[i] = v;
        next.push_back(std::move(y));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<GroupElement> all_elements(const CoefficientUnits& A, bool p_part_only) {
  return torsion_elements(A, 0, p_part_only);
}

Int element_order(const CoefficientUnits& A, const GroupElement& x) {
  Int o = 1;
  for (std::size_t i = 0; i < x.size(); ++i) o = lcm(o, A.factors[i] / gcd(x[i], A.factors[i]));
  return o;
}

bool FxCharacter::operator<(const FxCharacter& o) const {
  return std::tie(unram, tame, wild_tors, wild_free) <
         std::tie(o.unram, o.tame, o.wild_tors, o.wild_free);
}

FxCharacter fx_trivial(const CharacterSpace& S) {
  FxCharacter a;
  a.unram = a.tame = a.wild_tors = group_zero(S.coeff);
  a.wild_free.assign(static_cast<std::size_t>(S.field.degree()), group_zero(S.coeff));
  return a;
}

FxCharacter fx_mul(const CharacterSpace& S, const FxCharacter& a, const FxCharacter& b) {
  FxCharacter c;
  c.unram = group_add(S.coeff, a.unram, b.unram);
  c.tame = group_add(S.coeff, a.tame, b.tame);
  c.wild_tors = group_add(S.coeff, a.wild_tors, b.wild_tors);
  for (std::size_t i = 0; i < a.wild_free.size(); ++i)
    c.wild_free.push_back(group_add(S.coeff, a.wild_free[i], b.wild_free[i]));
  return c;
}

FxCharacter fx_pow(const CharacterSpace& S, const FxCharacter& a, Int n) {
  FxCharacter c;
  c.unram = group_scale(S.coeff, n, a.unram);
  c.tame = group_scale(S.coeff, n, a.tame);
  c.wild_tors = group_scale(S.coeff, n, a.wild_tors);
  for (const auto& x : a.wild_free) c.wild_free.push_back(group_scale(S.coeff, n, x));
  return c;
}

FxCharacter fx_inverse(const CharacterSpace& S, const FxCharacter& a) { return fx_pow(S, a, -1); }

bool fx_is_trivial(const FxCharacter& a) {
  if (!group_is_zero(a.unram) || !group_is_zero(a.tame) || !group_is_zero(a.wild_tors)) return false;
  return std::all_of(a.wild_free.begin(), a.wild_free.end(), group_is_zero);
}

namespace {

bool in_p_part(const CoefficientUnits& A, const GroupElement& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!A.is_p_power_factor(i) && x[i] != 0) return false;
  return true;
}

}  // namespace

void validate(const CharacterSpace& S, const FxCharacter& a) {
  const auto& A = S.coeff;
  std::vector<std::string> problems;
  auto check_len = [&](const GroupElement& x, const char* what) {
    if (x.size() != A.factors.size()) problems.push_back(std::string(what) + " has the wrong number of coordinates");
  };
  check_len(a.unram, "unram");
  check_len(a.tame, "tame");
  check_len(a.wild_tors, "wild_tors");
  for (const auto& x : a.wild_free) check_len(x, "wild_free");
  if (a.wild_free.size() != static_cast<std::size_t>(S.field.degree()))
    problems.push_back("wild_free needs [F:Q_p] = " + std::to_string(S.field.degree()) + " entries");
  if (!problems.empty()) throw Error(ErrorKind::InvalidArgument, "malformed F^x character", problems);
  if (!group_is_zero(group_scale(A, S.field.q() - 1, a.tame)))
    problems.push_back("tame part is not killed by q - 1");
  if (!in_p_part(A, a.wild_tors) || !group_is_zero(group_scale(A, ipow(S.field.p, S.field.r), a.wild_tors)))
    problems.push_back("wild_tors must lie in the p-part and be killed by p^r");
  for (const auto& x : a.wild_free)
    if (!in_p_part(A, x)) problems.push_back("wild_free entries must lie in the p-part");
  if (!problems.empty()) throw Error(ErrorKind::InvalidArgument, "not a smooth character", problems);
}

void validate(const CharacterSpace& S, const TorusCharacter& chi) {
  if (chi.size() != S.rank)
    throw Error(ErrorKind::RankMismatch, "torus character has " + std::to_string(chi.size()) +
                                             " components, expected " + std::to_string(S.rank));
  for (const auto& c : chi) validate(S, c);
}

TorusCharacter torus_trivial(const CharacterSpace& S) { return TorusCharacter(S.rank, fx_trivial(S)); }

TorusCharacter torus_mul(const CharacterSpace& S, const TorusCharacter& a, const TorusCharacter& b) {
  TorusCharacter c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(fx_mul(S, a[i], b[i]));
  return c;
}

FxCharacter cyclotomic_omega(const CharacterSpace& S, const OmegaConventions& conv) {
  const auto& A = S.coeff;
  const Int p = S.field.p;
  GroupElement g;
  if (conv.fp_generator) {
    g = group_normalize(A, *conv.fp_generator);
    if (element_order(A, g) != p - 1)
      throw Error(ErrorKind::MissingEmbedding, "the supplied image of F_p^x does not have order p - 1");
  } else {
    // Assemble an element of order p - 1 prime power by prime power.
    g = group_zero(A);
    Int rest = p - 1;
    for (Int l = 2; rest > 1; ++l) {
      if (rest % l != 0) continue;
      Int la = 1;
      while (rest % l == 0) {
        rest /= l;
        la *= l;
      }
      bool placed = false;
      for (std::size_t i = 0; i < A.factors.size() && !placed; ++i)
        if (A.factors[i] % la == 0) {
          g[i] = positive_mod(g[i] + A.factors[i] / la, A.factors[i]);
          placed = true;
        }
      if (!placed)
        throw Error(ErrorKind::MissingEmbedding,
                    "coefficient units " + format_coefficients(A) + " contain no element of order p - 1 = " +
                        std::to_string(p - 1));
    }
  }
  FxCharacter w = fx_trivial(S);
  w.tame = group_scale(A, S.field.e, g);
  if (conv.unram) w.unram = group_normalize(A, *conv.unram);
  if (conv.wild_tors) w.wild_tors = group_normalize(A, *conv.wild_tors);
  if (conv.wild_free) {
    w.wild_free.clear();
    for (const auto& x : *conv.wild_free) w.wild_free.push_back(group_normalize(A, x));
  }
  validate(S, w);
  return w;
}

namespace {

// C[i][j] with w^{-1}(e_j) = sum_i C[i][j] e_i on X^vee.
IntMatrix coweight_matrix(const WeylGroup& g, const WeylElement& w) {
  const std::size_t n = g.datum().rank;
  WeylElement winv = g.inverse(w);
  IntMatrix c(n, IntVec(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    IntVec v = g.act_coweight(winv, e);
    for (std::size_t i = 0; i < n; ++i) c[i][j] = v[i];
  }
  return c;
}

TorusCharacter act_by_matrix(const CharacterSpace& S, const IntMatrix& c, const TorusCharacter& chi) {
  TorusCharacter out;
  for (std::size_t j = 0; j < chi.size(); ++j) {
    FxCharacter comp = fx_trivial(S);
    for (std::size_t i = 0; i < chi.size(); ++i)
      if (c[i][j] != 0) comp = fx_mul(S, comp, fx_pow(S, chi[i], c[i][j]));
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

TorusCharacter weyl_act(const WeylGroup& g, const CharacterSpace& S, const WeylElement& w,
                        const TorusCharacter& chi) {
  if (chi.size() != g.datum().rank) throw Error(ErrorKind::RankMismatch, "character rank differs from the datum");
  return act_by_matrix(S, coweight_matrix(g, w), chi);
}

TorusCharacter twist_by_algebraic(const CharacterSpace& S, const TorusCharacter& chi,
                                  const FxCharacter& eta, const IntVec& mu) {
  if (mu.size() != chi.size()) throw Error(ErrorKind::RankMismatch, "twist vector has the wrong length");
  TorusCharacter out = chi;
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (mu[i] != 0) out[i] = fx_mul(S, out[i], fx_pow(S, eta, mu[i]));
  return out;
}

FxCharacter compose_with_coroot(const CharacterSpace& S, const TorusCharacter& chi,
                                const IntVec& lambda) {
  if (lambda.size() != chi.size()) throw Error(ErrorKind::RankMismatch, "cocharacter has the wrong length");
  FxCharacter out = fx_trivial(S);
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (lambda[i] != 0) out = fx_mul(S, out, fx_pow(S, chi[i], lambda[i]));
  return out;
}

bool is_weakly_generic(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi) {
  for (std::size_t i = 0; i < g.num_simple(); ++i)
    if (weyl_act(g, S, g.simple(i), chi) == chi) return false;
  return true;
}

bool is_strongly_generic(const WeylGroup& g, const CharacterSpace& S, const TorusCharacter& chi) {
  for (const auto& w : g.enumerate().elements)
    if (g.length(w) > 0 && weyl_act(g, S, w, chi) == chi) return false;
  return true;
}

std::vector<FxCharacter> enumerate_fx_characters(const CharacterSpace& S, CharacterFamily family) {
  const auto& A = S.coeff;
  const std::size_t ef = static_cast<std::size_t>(S.field.degree());
  std::vector<GroupElement> unram{group_zero(A)}, wild_tors{group_zero(A)}, p_part{group_zero(A)};
  auto tame = torsion_elements(A, S.field.q() - 1, false);
  if (family == CharacterFamily::Full) {
    unram = all_elements(A, false);
    wild_tors = torsion_elements(A, ipow(S.field.p, S.field.r), true);
    p_part = all_elements(A, true);
  }
  std::vector<std::vector<GroupElement>> wild_free_choices{{}};
  for (std::size_t k = 0; k < ef; ++k) {
    std::vector<std::vector<GroupElement>> next;
    for (const auto& prefix : wild_free_choices)
      for (const auto& x : p_part) {
        auto v = prefix;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    wild_free_choices = std::move(next);
  }
  std::vector<FxCharacter> out;
  for (const auto& u : unram)
    for (const auto& t : tame)
      for (const auto& wt : wild_tors)
        for (const auto& wf : wild_free_choices) out.push_back(FxCharacter{u, t, wt, wf});
  return out;
}

std::vector<TorusCharacter> enumerate_torus_characters(const CharacterSpace& S, CharacterFamily family,
                                                       std::size_t bound) {
  const auto fx = enumerate_fx_characters(S, family);
  long double total = 1;
  for (std::size_t i = 0; i < S.rank; ++i) total *= static_cast<long double>(fx.size());
  if (total > static_cast<long double>(bound))
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "character space has " + std::to_string(static_cast<unsigned long long>(total)) +
                    " elements, above the bound " + std::to_string(bound));
  std::vector<TorusCharacter> out{TorusCharacter{}};
  for (std::size_t i = 0; i < S.rank; ++i) {
    std::vector<TorusCharacter> next;
    next.reserve(out.size() * fx.size());
    for (const auto& prefix : out)
      for (const auto& a : fx) {
        auto chi = prefix;
        chi.push_back(a);
        next.push_back(std::move(chi));
      }
    out = std::move(next);
  }
  return out;
}

Int fx_character_count(const CharacterSpace& S, CharacterFamily family) {
  const auto divs = S.coeff.divisors();
  const Int p = S.field.p;
  auto hom_from_cyclic = [&](Int n, bool p_only) {
    Int c = 1;
    for (Int d : divs) {
      Int pd = 1;
      for (Int x = d; x % p == 0; x /= p) pd *= p;
      c = checked_mul(c, gcd(n, p_only ? pd : d));
    }
    return c;
  };
  Int count = hom_from_cyclic(S.field.q() - 1, false);
  if (family == CharacterFamily::TameOnly) return count;
  Int order = 1, p_order = 1;
  for (Int d : divs) {
    order = checked_mul(order, d);
    Int pd = 1;
    for (Int x = d; x % p == 0; x /= p) pd *= p;
    p_order = checked_mul(p_order, pd);
  }
  count = checked_mul(count, order);
  count = checked_mul(count, hom_from_cyclic(ipow(p, S.field.r), true));
  count = checked_mul(count, ipow(p_order, S.field.degree()));
  return count;
}

GenericityReport genericity_check(const WeylGroup& g, const CharacterSpace& S,
                                  CharacterFamily family, std::size_t bound) {
  const auto fx = enumerate_fx_characters(S, family);
  const std::size_t rank = g.datum().rank;
  long double total = 1;
  for (std::size_t i = 0; i < rank; ++i) total *= static_cast<long double>(fx.size());
  if (total > static_cast<long double>(bound))
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "character space has " + std::to_string(static_cast<unsigned long long>(total)) +
                    " elements, above the bound " + std::to_string(bound));

  const auto& pos = g.positive();
  std::vector<IntMatrix> reflections;
  for (std::size_t a = 0; a < pos.size(); ++a) reflections.push_back(coweight_matrix(g, g.reflection(a)));

  GenericityReport rep;
  rep.converse_asserted = is_center_connected(g.datum());
  auto note = [&](const std::string& s) {
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(s);
  };

  std::vector<std::size_t> idx(rank, 0);
  while (true) {
    TorusCharacter chi;
    for (auto i : idx) chi.push_back(fx[i]);
    ++rep.characters;

    std::vector<TorusCharacter> images(pos.size());
    std::vector<bool> fixed(pos.size());
    for (std::size_t a = 0; a < pos.size(); ++a) {
      images[a] = act_by_matrix(S, reflections[a], chi);
      fixed[a] = images[a] == chi;
      bool trivial = fx_is_trivial(compose_with_coroot(S, chi, pos.coroots[a]));
      ++rep.checks;
      if (!fixed[a] && trivial) {
        ++rep.forward_counterexamples;
        note("forward fails at chi = " + format_character(S, chi) + ", root " + format_vec(pos.roots[a]));
      }
      if (fixed[a] && !trivial) {
        if (rep.converse_asserted) {
          ++rep.converse_counterexamples;
          note("converse fails at chi = " + format_character(S, chi) + ", root " + format_vec(pos.roots[a]));
        } else {
          ++rep.converse_failures_observed;
          note("converse not available: chi = " + format_character(S, chi) + " is fixed by s_" +
               format_vec(pos.roots[a]) + " but chi o coroot is nontrivial");
        }
      }
    }
    if (rep.converse_asserted)
      for (std::size_t a = 0; a < g.num_simple(); ++a) {
        if (fixed[a]) continue;
        for (std::size_t b = 0; b < g.num_simple(); ++b)
          if (b != a && images[a] == images[b]) {
            ++rep.distinct_reflection_counterexamples;
            note("s_" + std::to_string(a + 1) + " and s_" + std::to_string(b + 1) + " agree on chi = " +
                 format_character(S, chi));
          }
      }

    std::size_t k = 0;
    while (k < rank && ++idx[k] == fx.size()) idx[k++] = 0;
    if (k == rank) break;
  }
  return rep;
}

Int ext1_torus_dim(const LocalFieldParams& F, CoeffKind kind, std::size_t rank, bool same) {
  if (!same) return 0;
  const Int n = static_cast<Int>(rank);
  if (kind == CoeffKind::Unitary) return (F.degree() + 1) * n;
  return (F.degree() + (F.r > 0 ? 2 : 1)) * n;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

GroupElement parse_element(const CharacterSpace& S, const std::string& text) {
  GroupElement x = group_zero(S.coeff);
  if (text.empty()) return x;
  auto parts = split(text, '.');
  if (S.coeff.factors.empty() && parts.size() == 1 && parse_int(parts[0]) == 0) return x;
  if (parts.size() != x.size())
    throw Error(ErrorKind::ParseError, "element '" + text + "' needs " + std::to_string(x.size()) +
                                           " residues joined by '.'");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = parse_int(parts[i]);
  return group_normalize(S.coeff, x);
}

std::string format_element(const GroupElement& x) {
  if (x.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "." : "") + std::to_string(x[i]);
  return s;
}

}  // namespace

TorusCharacter parse_character(const CharacterSpace& S, const std::string& text) {
  TorusCharacter chi;
  for (const auto& comp : split(text, ',')) {
    auto fields = split(comp, '/');
    if (fields.size() < 2 || fields.size() > 4)
      throw Error(ErrorKind::ParseError, "component '" + comp + "' must look like u/t[/wt[/wf1;wf2]]");
    FxCharacter a = fx_trivial(S);
    a.unram = parse_element(S, fields[0]);
    a.tame = parse_element(S, fields[1]);
    if (fields.size() >= 3) a.wild_tors = parse_element(S, fields[2]);
    if (fields.size() == 4) {
      auto wf = split(fields[3], ';');
      if (wf.size() != a.wild_free.size())
        throw Error(ErrorKind::ParseError, "wild_free needs " + std::to_string(a.wild_free.size()) + " entries");
      for (std::size_t i = 0; i < wf.size(); ++i) a.wild_free[i] = parse_element(S, wf[i]);
    }
    chi.push_back(std::move(a));
  }
  validate(S, chi);
  return chi;
}

std::string format_fx(const CharacterSpace& S, const FxCharacter& a) {
  std::string s = format_element(a.unram) + "/" + format_element(a.tame);
  if (!S.coeff.has_trivial_p_part()) {
    s += "/" + format_element(a.wild_tors) + "/";
    for (std::size_t i = 0; i < a.wild_free.size(); ++i) s += (i ? ";" : "") + format_element(a.wild_free[i]);
  }
  return s;
}

std::string format_character(const CharacterSpace& S, const TorusCharacter& chi) {
  std::string s;
  for (std::size_t i = 0; i < chi.size(); ++i) s += (i ? "," : "") + format_fx(S, chi[i]);
  return s;
}

nlohmann::json to_json(const FxCharacter& a) {
  return {{"unram", a.unram}, {"tame", a.tame}, {"wild_tors", a.wild_tors}, {"wild_free", a.wild_free}};
}

nlohmann::json to_json(const CharacterSpace& S, const TorusCharacter& chi) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : chi) comps.push_back(to_json(c));
  return {{"field", {{"p", S.field.p}, {"f", S.field.f}, {"e", S.field.e}, {"r", S.field.r}}},
          {"coeff", {{"factors", S.coeff.factors}, {"divisors", S.coeff.divisors()}, {"k", S.coeff.k}}},
          {"components", comps}};
}

TorusCharacter character_from_json(const CharacterSpace& S, const nlohmann::json& j) {
  try {
    TorusCharacter chi;
    for (const auto& c : j.at("components")) {
      FxCharacter a;
      a.unram = group_normalize(S.coeff, c.at("unram").get<IntVec>());
      a.tame = group_normalize(S.coeff, c.at("tame").get<IntVec>());
      a.wild_tors = group_normalize(S.coeff, c.at("wild_tors").get<IntVec>());
      for (const auto& x : c.at("wild_free")) a.wild_free.push_back(group_normalize(S.coeff, x.get<IntVec>()));
      chi.push_back(std::move(a));
    }
    validate(S, chi);
    return chi;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed character JSON: ") + e.what());
  }
}

}  // namespace ordext
