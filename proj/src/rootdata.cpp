#include "ordext/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ordext/error.hpp"
#include "ordext/smith.hpp"

namespace ordext {

IntMatrix RootDatum::cartan_matrix() const {
  const std::size_t k = semisimple_rank();
  IntMatrix c(k, IntVec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i][j] = pairing(simple_roots[i], simple_coroots[j]);
  return c;
}

namespace {

Rational determinant(std::vector<RatVec> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<std::string> cartan_violations(const IntMatrix& c) {
  std::vector<std::string> out;
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (c[i][i] != 2)
      out.push_back("C[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                    std::to_string(c[i][i]) + ", diagonal entries must equal 2");
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0)
        out.push_back("C[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                      std::to_string(c[i][j]) + ", off-diagonal entries must be <= 0");
      if ((c[i][j] == 0) != (c[j][i] == 0) && i < j)
        out.push_back("C[" + std::to_string(i) + "][" + std::to_string(j) + "] and C[" +
                      std::to_string(j) + "][" + std::to_string(i) +
                      "] must vanish together");
    }
  }
  // Every principal minor must be positive (finite type).
  if (k <= 12) {
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      std::vector<RatVec> sub(idx.size(), RatVec(idx.size()));
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
          sub[a][b] = Rational(static_cast<long>(c[idx[a]][idx[b]]));
      Rational det = determinant(sub);
      if (det <= 0) {
        std::string s = "principal minor on {";
        for (std::size_t a = 0; a < idx.size(); ++a) s += (a ? "," : "") + std::to_string(idx[a]);
        out.push_back(s + "} = " + det.get_str() + ", must be positive");
        break;
      }
    }
  } else {
    out.push_back("semisimple rank above 12 is not supported");
  }
  return out;
}

}  // namespace

RootDatum build_root_datum(std::size_t rank, std::vector<IntVec> simple_roots,
                           std::vector<IntVec> simple_coroots, std::string name) {
  std::vector<std::string> shape;
  if (rank == 0) shape.push_back("rank must be positive");
  if (simple_roots.size() != simple_coroots.size())
    shape.push_back("got " + std::to_string(simple_roots.size()) + " simple roots but " +
                    std::to_string(simple_coroots.size()) + " simple coroots");
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    if (simple_roots[i].size() != rank)
      shape.push_back("simple root " + std::to_string(i) + " has length " +
                      std::to_string(simple_roots[i].size()) + ", expected " +
                      std::to_string(rank));
  for (std::size_t i = 0; i < simple_coroots.size(); ++i)
    if (simple_coroots[i].size() != rank)
      shape.push_back("simple coroot " + std::to_string(i) + " has length " +
                      std::to_string(simple_coroots[i].size()) + ", expected " +
                      std::to_string(rank));
  if (simple_roots.size() > rank)
    shape.push_back("more simple roots than the rank of X");
  if (!shape.empty()) throw Error(ErrorKind::RankMismatch, "inconsistent root datum dimensions", shape);

  RootDatum rd{std::move(name), rank, std::move(simple_roots), std::move(simple_coroots)};
  auto violations = cartan_violations(rd.cartan_matrix());

  std::vector<std::string> dependence;
  if (smith_normal_form(rd.simple_roots, rank).rank != rd.simple_roots.size())
    dependence.push_back("simple roots are linearly dependent");
  if (smith_normal_form(rd.simple_coroots, rank).rank != rd.simple_coroots.size())
    dependence.push_back("simple coroots are linearly dependent");

  if (!violations.empty()) {
    violations.insert(violations.end(), dependence.begin(), dependence.end());
    throw Error(ErrorKind::NotFiniteType, "Cartan matrix is not of finite type", violations);
  }
  if (!dependence.empty())
    throw Error(ErrorKind::LinearlyDependent, "simple roots or coroots not independent",
                dependence);
  return rd;
}

IntMatrix cartan_of_type(char type, std::size_t n) {
  IntMatrix c(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) c[n - 2][n - 1] = -2;
      break;
    case 'C':  // alpha_n long
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) c[n - 1][n - 2] = -2;
      break;
    case 'D':
      if (n < 4) throw Error(ErrorKind::InvalidArgument, "type D needs rank >= 4");
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'F':
      if (n != 4) throw Error(ErrorKind::InvalidArgument, "type F only exists in rank 4");
      link(0, 1);
      link(2, 3);
      c[1][2] = -2;
      c[2][1] = -1;
      break;
    case 'G':
      if (n != 2) throw Error(ErrorKind::InvalidArgument, "type G only exists in rank 2");
      c[0][1] = -1;  // alpha_1 short
      c[1][0] = -3;
      break;
    default:
      throw Error(ErrorKind::InvalidArgument, std::string("unknown Cartan type ") + type);
  }
  return c;
}

RootDatum simply_connected(const IntMatrix& cartan, std::string name) {
  const std::size_t n = cartan.size();
  std::vector<IntVec> roots(n), coroots(n);
  for (std::size_t i = 0; i < n; ++i) {
    roots[i] = cartan[i];  // alpha_i = sum_j C[i][j] omega_j
    coroots[i].assign(n, 0);
    coroots[i][i] = 1;
  }
  return build_root_datum(n, std::move(roots), std::move(coroots), std::move(name));
}

RootDatum adjoint(const IntMatrix& cartan, std::string name) {
  const std::size_t n = cartan.size();
  std::vector<IntVec> roots(n), coroots(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    roots[i].assign(n, 0);
    roots[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) coroots[i][k] = cartan[k][i];
  }
  return build_root_datum(n, std::move(roots), std::move(coroots), std::move(name));
}

namespace {

RootDatum general_linear(std::size_t n) {
  std::vector<IntVec> roots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVec a(n, 0);
    a[i] = 1;
    a[i + 1] = -1;
    roots.push_back(a);
  }
  auto coroots = roots;
  return build_root_datum(n, std::move(roots), std::move(coroots), "GL" + std::to_string(n));
}

// diag(t1, t2, nu/t2, nu/t1); X has basis e1, e2, e0 (similitude).
RootDatum gsp4() {
  return build_root_datum(3, {{1, -1, 0}, {0, 2, -1}}, {{1, -1, 0}, {0, 1, 0}}, "GSp4");
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"GL1", "GL2", "GL3", "GL4", "GL5", "GL6", "SL2", "SL3", "SL4", "SL5",
          "PGL2", "PGL3", "PGL4", "PGL5", "GSp4", "Sp4", "A1", "A2", "A3", "A4",
          "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"};
}

RootDatum preset(std::string_view name) {
  const std::string s(name);
  auto number = [&](std::size_t prefix) -> std::size_t {
    try {
      return static_cast<std::size_t>(std::stoul(s.substr(prefix)));
    } catch (...) {
      throw Error(ErrorKind::InvalidArgument, "unknown preset '" + s + "'");
    }
  };
  auto known = preset_names();
  if (std::find(known.begin(), known.end(), s) == known.end())
    throw Error(ErrorKind::InvalidArgument, "unknown preset '" + s + "'");
  if (s.rfind("GL", 0) == 0) return general_linear(number(2));
  if (s.rfind("SL", 0) == 0) return simply_connected(cartan_of_type('A', number(2) - 1), s);
  if (s.rfind("PGL", 0) == 0) return adjoint(cartan_of_type('A', number(3) - 1), s);
  if (s == "GSp4") return gsp4();
  if (s == "Sp4") return simply_connected(cartan_of_type('C', 2), s);
  return simply_connected(cartan_of_type(s[0], number(1)), s);
}

std::optional<std::size_t> PositiveRootSet::index_of(const IntVec& root) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == root) return i;
  return std::nullopt;
}

std::optional<std::size_t> PositiveRootSet::index_of_coefficients(const IntVec& c) const {
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] == c) return i;
  return std::nullopt;
}

PositiveRootSet positive_roots(const RootDatum& rd) {
  const std::size_t k = rd.semisimple_rank();
  const IntMatrix c = rd.cartan_matrix();

  // Visited set keyed on exact Delta-coordinates; each root carries its coroot.
  std::map<IntVec, IntVec> seen;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec e(k, 0);
    e[i] = 1;
    seen.emplace(e, rd.simple_coroots[i]);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVec beta = queue.front();
    queue.pop_front();
    const IntVec beta_co = seen.at(beta);
    for (std::size_t i = 0; i < k; ++i) {
      Int n = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < k; ++j) n = checked_add(n, checked_mul(beta[j], c[j][i]));
      if (n == 0) continue;
      IntVec image = beta;
      image[i] = checked_add(image[i], -n);
      if (seen.count(image)) continue;
      // s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
      Int m = pairing(rd.simple_roots[i], beta_co);
      seen.emplace(image, sub(beta_co, scale(m, rd.simple_coroots[i])));
      queue.push_back(image);
    }
  }

  std::vector<std::pair<IntVec, IntVec>> positive;
  for (const auto& [coeffs, co] : seen)
    if (std::all_of(coeffs.begin(), coeffs.end(), [](Int x) { return x >= 0; }))
      positive.emplace_back(coeffs, co);
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    Int ha = 0, hb = 0;
    for (Int x : a.first) ha += x;
    for (Int x : b.first) hb += x;
    if (ha != hb) return ha < hb;
    return a.first > b.first;
  });

  PositiveRootSet out;
  for (const auto& [coeffs, co] : positive) {
    IntVec root(rd.rank, 0);
    Int h = 0;
    for (std::size_t j = 0; j < k; ++j) {
      root = add(root, scale(coeffs[j], rd.simple_roots[j]));
      h += coeffs[j];
    }
    out.roots.push_back(root);
    out.coroots.push_back(co);
    out.coefficients.push_back(coeffs);
    out.heights.push_back(h);
  }
  return out;
}

bool LatticeQuotient::torsion_free() const {
  return std::all_of(divisors.begin(), divisors.end(), [](Int d) { return d == 1; });
}

namespace {
LatticeQuotient quotient_by(const std::vector<IntVec>& generators, std::size_t rank) {
  LatticeQuotient q;
  if (generators.empty()) {
    q.free_rank = rank;
    return q;
  }
  SmithForm snf = smith_normal_form(generators, rank);
  q.divisors = snf.divisors;
  q.free_rank = rank - snf.rank;
  return q;
}
}  // namespace

LatticeQuotient character_quotient(const RootDatum& rd) {
  return quotient_by(rd.simple_roots, rd.rank);
}

LatticeQuotient cocharacter_quotient(const RootDatum& rd) {
  return quotient_by(rd.simple_coroots, rd.rank);
}

bool is_center_connected(const RootDatum& rd) { return character_quotient(rd).torsion_free(); }

bool is_derived_simply_connected(const RootDatum& rd) {
  return cocharacter_quotient(rd).torsion_free();
}

std::optional<TwistingCoset> twisting_element(const RootDatum& rd) {
  const std::size_t k = rd.semisimple_rank();
  IntVec ones(k, 1);
  if (k == 0) {
    TwistingCoset t;
    t.theta.assign(rd.rank, 0);
    for (std::size_t i = 0; i < rd.rank; ++i) {
      IntVec e(rd.rank, 0);
      e[i] = 1;
      t.kernel.push_back(e);
    }
    return t;
  }
  auto sol = solve_integral(rd.simple_coroots, rd.rank, ones);
  if (!sol) return std::nullopt;
  TwistingCoset t;
  t.kernel = hermite_rows(sol->kernel, rd.rank);
  t.theta = reduce_modulo_lattice(sol->particular, sol->kernel, rd.rank);
  return t;
}

RatVec rho(const RootDatum& rd) {
  auto pos = positive_roots(rd);
  RatVec out(rd.rank, Rational(0));
  for (const auto& r : pos.roots)
    for (std::size_t i = 0; i < rd.rank; ++i) out[i] += Rational(static_cast<long>(r[i]));
  for (auto& x : out) x /= 2;
  return out;
}

bool is_weyl_invariant(const RootDatum& rd, const IntVec& x) {
  if (x.size() != rd.rank) throw Error(ErrorKind::RankMismatch, "vector has wrong length");
  for (const auto& co : rd.simple_coroots)
    if (pairing(x, co) != 0) return false;
  return true;
}

nlohmann::json to_json(const RootDatum& rd) {
  nlohmann::json j;
  j["rank"] = rd.rank;
  j["simple_roots"] = rd.simple_roots;
  j["simple_coroots"] = rd.simple_coroots;
  if (!rd.name.empty()) j["name"] = rd.name;
  return j;
}

RootDatum root_datum_from_json(const nlohmann::json& j) {
  try {
    auto rank = j.at("rank").get<std::size_t>();
    auto roots = j.at("simple_roots").get<std::vector<IntVec>>();
    auto coroots = j.at("simple_coroots").get<std::vector<IntVec>>();
    std::string name = j.value("name", std::string{});
    return build_root_datum(rank, std::move(roots), std::move(coroots), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed root datum JSON: ") + e.what());
  }
}

RootDatum resolve_datum(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    try {
      return root_datum_from_json(nlohmann::json::parse(spec));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::ParseError, std::string("invalid datum JSON: ") + e.what());
    }
  }
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open datum file " + spec);
    try {
      return root_datum_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::ParseError, std::string("invalid datum JSON: ") + e.what());
    }
  }
  return preset(spec);
}

}  // namespace ordext
