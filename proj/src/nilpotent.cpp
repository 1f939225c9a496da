#include "ordext/nilpotent.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "ordext/error.hpp"
#include "ordext/localchar.hpp"
#include "ordext/smith.hpp"
#include "ordext/weyl.hpp"

namespace ordext {

NilMatrix::NilMatrix(std::size_t n) : n_(n), a_(n * n) {}

NilMatrix NilMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j || j >= n) throw Error(ErrorKind::InvalidArgument, "E_ij needs i < j < n");
  NilMatrix m(n);
  m.at(i, j) = 1;
  return m;
}

bool NilMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

bool NilMatrix::is_strictly_upper() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

NilMatrix NilMatrix::operator+(const NilMatrix& o) const {
  NilMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

NilMatrix NilMatrix::operator-(const NilMatrix& o) const {
  NilMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

NilMatrix NilMatrix::operator*(const NilMatrix& o) const {
  NilMatrix r(n_);
  // strictly upper: only i < k < j contribute
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = i + 1; k < n_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = k + 1; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

NilMatrix NilMatrix::scaled(const Rational& c) const {
  NilMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

std::string NilMatrix::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (at(i, j) == 0) continue;
      os << (first ? "" : " + ") << at(i, j).get_str() << "*E" << i + 1 << j + 1;
      first = false;
    }
  return first ? "0" : os.str();
}

NilMatrix bracket(const NilMatrix& x, const NilMatrix& y) { return x * y - y * x; }

Unipotent nil_exp(const NilMatrix& x) {
  NilMatrix sum(x.size()), power = x;
  Rational fact = 1;
  for (std::size_t k = 1; k < std::max<std::size_t>(x.size(), 1); ++k) {
    fact *= static_cast<long>(k);
    sum = sum + power.scaled(1 / fact);
    power = power * x;
  }
  return {sum};
}

NilMatrix nil_log(const Unipotent& g) {
  NilMatrix sum(g.u.size()), power = g.u;
  for (std::size_t k = 1; k < std::max<std::size_t>(g.u.size(), 1); ++k) {
    Rational c(k % 2 ? 1 : -1, static_cast<long>(k));
    sum = sum + power.scaled(c);
    power = power * g.u;
  }
  return sum;
}

std::optional<Int> valuation(const Rational& x, Int p) {
  if (x == 0) return std::nullopt;
  auto count = [p](mpz_class z) {
    Int v = 0;
    mpz_class q = static_cast<unsigned long>(p);
    while (mpz_divisible_p(z.get_mpz_t(), q.get_mpz_t())) {
      z /= q;
      ++v;
    }
    return v;
  };
  return count(x.get_num()) - count(x.get_den());
}

namespace {

using Poly = std::map<std::string, Rational>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t degree) {
  Poly out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      if (u.size() + v.size() > degree) continue;
      Rational& slot = out[u + v];
      slot += cu * cv;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly poly_add(Poly a, const Poly& b, const Rational& scale) {
  for (const auto& [w, c] : b) a[w] += scale * c;
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

Poly exp_of_letter(char letter, std::size_t degree) {
  Poly out{{"", 1}};
  Rational fact = 1;
  std::string word;
  for (std::size_t k = 1; k <= degree; ++k) {
    fact *= static_cast<long>(k);
    word.push_back(letter);
    out[word] = 1 / fact;
  }
  return out;
}

NilMatrix nested(const std::string& w, const NilMatrix& x, const NilMatrix& y) {
  NilMatrix acc = w.back() == 'x' ? x : y;
  for (std::size_t i = w.size() - 1; i-- > 0;) acc = bracket(w[i] == 'x' ? x : y, acc);
  return acc;
}

}  // namespace

BchSeries bch_series(std::size_t degree) {
  static std::mutex mu;
  static std::map<std::size_t, BchSeries> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(degree); it != cache.end()) return it->second;

  Poly u = poly_mul(exp_of_letter('x', degree), exp_of_letter('y', degree), degree);
  u.erase("");
  Poly log, power = u;
  for (std::size_t k = 1; k <= degree; ++k) {
    log = poly_add(log, power, Rational(k % 2 ? 1 : -1, static_cast<long>(k)));
    power = poly_mul(power, u, degree);
  }
  BchSeries s;
  s.degree = degree;
  s.words.resize(degree + 1);
  for (const auto& [w, c] : log) s.words[w.size()][w] = c;
  cache[degree] = s;
  return s;
}

NilMatrix BchSeries::evaluate_component(std::size_t k, const NilMatrix& x, const NilMatrix& y) const {
  NilMatrix out(x.size());
  if (k == 0 || k > degree) return out;
  for (const auto& [w, c] : words[k]) out = out + nested(w, x, y).scaled(c / Rational(static_cast<long>(k)));
  return out;
}

NilMatrix BchSeries::evaluate(const NilMatrix& x, const NilMatrix& y) const {
  NilMatrix out(x.size());
  for (std::size_t k = 1; k <= degree; ++k) out = out + evaluate_component(k, x, y);
  return out;
}

std::optional<Int> BchSeries::min_valuation(Int p) const {
  std::optional<Int> best;
  for (std::size_t k = 2; k <= degree; ++k)
    for (const auto& [w, c] : words[k]) {
      auto v = valuation(c / Rational(static_cast<long>(k)), p);
      if (v && (!best || *v < *best)) best = v;
    }
  return best;
}

namespace {

void require_large_prime(std::size_t n, Int p) {
  if (p <= static_cast<Int>(n))
    throw Error(ErrorKind::SmallPrime, "need p > n so that exp, log and BCH have p-unit denominators",
                {"p = " + std::to_string(p), "n = " + std::to_string(n)});
}

}  // namespace

NilMatrix bch(const NilMatrix& x, const NilMatrix& y, Int p, std::optional<std::size_t> degree_cap) {
  if (x.size() != y.size()) throw Error(ErrorKind::InvalidArgument, "matrix sizes differ");
  if (!x.is_strictly_upper() || !y.is_strictly_upper())
    throw Error(ErrorKind::InvalidArgument, "BCH inputs must be strictly upper triangular");
  require_large_prime(x.size(), p);
  const std::size_t d = x.size() > 0 ? x.size() - 1 : 0;
  if (degree_cap && *degree_cap < d) return bch_series(*degree_cap).evaluate(x, y);
  return nil_log(nil_exp(x) * nil_exp(y));
}

std::vector<RootPos> root_positions(std::size_t n) {
  std::vector<RootPos> out;
  for (std::size_t h = 1; h < n; ++h)
    for (std::size_t i = 0; i + h < n; ++i) out.emplace_back(i, i + h);
  return out;
}

std::size_t root_height(const RootPos& r) { return r.second - r.first; }

IntVec root_coefficients(std::size_t n, const RootPos& r) {
  IntVec v(n > 0 ? n - 1 : 0, 0);
  for (std::size_t k = r.first; k < r.second; ++k) v[k] = 1;
  return v;
}

bool is_closed_root_set(const std::set<RootPos>& s) {
  for (const auto& a : s)
    for (const auto& b : s)
      if (a.second == b.first && !s.count({a.first, b.second})) return false;
  return true;
}

NilMatrix matrix_of(std::size_t n, const RatVec& coords) {
  auto pos = root_positions(n);
  if (coords.size() != pos.size()) throw Error(ErrorKind::InvalidArgument, "coordinate vector has wrong length");
  NilMatrix m(n);
  for (std::size_t k = 0; k < pos.size(); ++k) m.at(pos[k].first, pos[k].second) = coords[k];
  return m;
}

RatVec coords_of(const NilMatrix& x) {
  RatVec out;
  for (const auto& [i, j] : root_positions(x.size())) out.push_back(x.at(i, j));
  return out;
}

RatVec LieLattice::coordinates(const NilMatrix& x) const {
  const std::size_t m = basis.size();
  if (inverse_.empty()) {
    // Gauss-Jordan on [B | I] with B's columns the basis vectors
    std::vector<RatVec> aug(m, RatVec(2 * m));
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) aug[r][c] = basis[c].at(r);
      aug[r][m + r] = 1;
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t piv = c;
      while (piv < m && aug[piv][c] == 0) ++piv;
      if (piv == m) throw Error(ErrorKind::LinearlyDependent, "lattice basis is singular");
      std::swap(aug[piv], aug[c]);
      Rational inv = 1 / aug[c][c];
      for (auto& v : aug[c]) v *= inv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == c || aug[r][c] == 0) continue;
        Rational f = aug[r][c];
        for (std::size_t k = 0; k < 2 * m; ++k) aug[r][k] -= f * aug[c][k];
      }
    }
    inverse_.assign(m, RatVec(m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) inverse_[r][c] = aug[r][m + c];
  }
  RatVec xs = coords_of(x);
  if (xs.size() != m) throw Error(ErrorKind::InvalidArgument, "matrix size does not match the lattice");
  RatVec t(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) t[r] += inverse_[r][c] * xs[c];
  return t;
}

bool LieLattice::contains(const NilMatrix& x, Int shift) const {
  for (const auto& t : coordinates(x)) {
    auto v = valuation(t, p);
    if (v && *v < shift) return false;
  }
  return true;
}

NilMatrix LieLattice::basis_matrix(std::size_t i) const { return matrix_of(n, basis.at(i)); }

bool LieLattice::is_root_compatible() const {
  auto pos = root_positions(n);
  for (const auto& b : basis)
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (b[k] == 0) continue;
      NilMatrix proj(n);
      proj.at(pos[k].first, pos[k].second) = b[k];
      if (!contains(proj)) return false;
    }
  return true;
}

bool LieLattice::is_lie_subalgebra() const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!contains(bracket(basis_matrix(i), basis_matrix(j)))) return false;
  return true;
}

Int LieLattice::bracket_defect() const {
  std::optional<Int> a;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (const auto& t : coordinates(bracket(basis_matrix(i), basis_matrix(j))))
        if (auto v = valuation(t, p); v && (!a || -*v > *a)) a = -*v;
  return a.value_or(0);
}

LieLattice diagonal_lattice(std::size_t n, Int p, const IntMatrix& exponents) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "need n >= 2");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  auto pos = root_positions(n);
  LieLattice L;
  L.n = n;
  L.p = p;
  std::ostringstream label;
  label << "diag";
  for (std::size_t k = 0; k < pos.size(); ++k) {
    Int c = exponents.at(pos[k].first).at(pos[k].second);
    RatVec v(pos.size());
    mpz_class pc;
    mpz_ui_pow_ui(pc.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(c < 0 ? -c : c));
    v[k] = c >= 0 ? Rational(pc) : Rational(1) / Rational(pc);
    L.basis.push_back(std::move(v));
    label << (k ? "," : "(") << c;
  }
  label << ")";
  L.label = label.str();
  return L;
}

LieLattice integer_lattice(std::size_t n, Int p) {
  LieLattice L = diagonal_lattice(n, p, IntMatrix(n, IntVec(n, 0)));
  L.label = "integer";
  return L;
}

LieLattice skew_lattice(Int p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be prime");
  // positions in order (0,1), (1,2), (0,2)
  LieLattice L;
  L.n = 3;
  L.p = p;
  L.basis = {RatVec{1, 1, 0}, RatVec{0, Rational(static_cast<long>(p)), 0}, RatVec{0, 0, 1}};
  L.label = "skew{E12+E23, pE23, E13}";
  return L;
}

namespace {

Rational p_power(Int p, Int e) {
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(pe) : Rational(1) / Rational(pe);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix(splitmix(seed ^ splitmix(stream)) + index);
}

// sum_i t_i v_i with t_i uniform in [-p^2, p^2]
NilMatrix random_combination(std::size_t n, Int p, const std::vector<RatVec>& gens, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-static_cast<long>(p * p), static_cast<long>(p * p));
  RatVec acc(n * (n - 1) / 2);
  for (const auto& g : gens) {
    long t = dist(rng);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += g[k] * t;
  }
  return matrix_of(n, acc);
}

}  // namespace

StandardFamily make_standard_family(const LieLattice& m0, Int c, std::size_t members) {
  if (c < 0) throw Error(ErrorKind::InvalidArgument, "c must be nonnegative");
  require_large_prime(m0.n, m0.p);
  StandardFamily fam;
  fam.base = m0;
  fam.c = c;
  fam.a = m0.bracket_defect();
  auto minv = bch_series(m0.n - 1).min_valuation(m0.p);
  fam.b = minv ? -*minv : 0;

  if (!m0.is_root_compatible()) fam.validation_failures.push_back("M0 is not root-compatible");
  for (std::size_t k = 0; k < members; ++k) {
    const Int r = fam.threshold() + static_cast<Int>(k);
    fam.shifts.push_back(r);
    const Rational pr = p_power(m0.p, r);
    std::vector<NilMatrix> gens;
    for (std::size_t i = 0; i < m0.basis.size(); ++i) gens.push_back(m0.basis_matrix(i).scaled(pr));
    bool subalgebra = true, group = true;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i < j && !m0.contains(bracket(gens[i], gens[j]), r)) subalgebra = false;
        if (!m0.contains(nil_log(nil_exp(gens[i]) * nil_exp(gens[j])), r)) group = false;
      }
    if (!subalgebra) fam.validation_failures.push_back("p^" + std::to_string(r) + " M0 not closed under bracket");
    if (!group) fam.validation_failures.push_back("exp(p^" + std::to_string(r) + " M0) not closed under products");
  }
  return fam;
}

StandardFamily make_standard_family(std::size_t n, Int p, Int c) {
  require_large_prime(n, p);
  return make_standard_family(integer_lattice(n, p), c);
}

std::size_t CongruenceReport::asserted_failures() const {
  std::size_t f = 0;
  for (const auto& s : shifts)
    if (s.at_or_above_threshold) f += s.congruence_failures + s.closure_failures + s.exp_log_failures;
  return f;
}

std::optional<Int> CongruenceReport::empirical_boundary() const {
  std::optional<Int> boundary;
  for (auto it = shifts.rbegin(); it != shifts.rend(); ++it) {
    if (it->congruence_failures + it->closure_failures > 0) break;
    boundary = it->shift;
  }
  return boundary;
}

CongruenceReport congruence_harness(const StandardFamily& fam, std::size_t samples, std::uint64_t seed, Int below,
                                    Int above) {
  const LieLattice& L = fam.base;
  require_large_prime(L.n, L.p);
  CongruenceReport rep;
  rep.n = L.n;
  rep.p = L.p;
  rep.c = fam.c;
  rep.a = fam.a;
  rep.b = fam.b;
  rep.threshold = fam.threshold();
  rep.seed = seed;
  for (Int r = rep.threshold - below; r <= rep.threshold + above; ++r) {
    ShiftRecord rec;
    rec.shift = r;
    rec.at_or_above_threshold = r >= rep.threshold;
    const Rational pr = p_power(L.p, r);
    std::vector<RatVec> gens;
    for (const auto& b : L.basis) {
      RatVec v = b;
      for (auto& x : v) x *= pr;
      gens.push_back(std::move(v));
    }
    for (std::size_t s = 0; s < samples; ++s) {
      std::mt19937_64 rng(sample_seed(seed, static_cast<std::uint64_t>(r + 1000), s));
      NilMatrix x1 = random_combination(L.n, L.p, gens, rng);
      NilMatrix x2 = random_combination(L.n, L.p, gens, rng);
      Unipotent n1 = nil_exp(x1), n2 = nil_exp(x2), n12 = n1 * n2;
      NilMatrix z = nil_log(n12);
      ++rec.samples;
      if (nil_log(n1) != x1 || nil_exp(z) != n12) ++rec.exp_log_failures;
      bool closed = L.contains(z, r);
      bool congruent = L.contains(z - x1 - x2, r + fam.c);
      if (!closed) ++rec.closure_failures;
      if (!congruent) ++rec.congruence_failures;
      if ((!closed || !congruent) && rep.witnesses.size() < 6)
        rep.witnesses.push_back("r=" + std::to_string(r) + (rec.at_or_above_threshold ? " " : " (below threshold) ") +
                                "X1=" + x1.str() + " X2=" + x2.str() + " log(n1n2)-X1-X2=" + (z - x1 - x2).str());
    }
    rep.shifts.push_back(rec);
  }
  return rep;
}

FactorizationSample factor_by_height(const NilMatrix& log_n, const std::set<RootPos>& roots1,
                                     const std::set<RootPos>& roots2, const LieLattice& lattice) {
  const std::size_t n = log_n.size();
  FactorizationSample out;
  out.log_n = log_n;
  out.x1 = NilMatrix(n);
  out.x2 = NilMatrix(n);
  for (std::size_t h = 1; h < n; ++h) {
    // pi_alpha of the higher BCH terms only sees components of lower height
    NilMatrix current = nil_log(nil_exp(out.x1) * nil_exp(out.x2));
    for (std::size_t i = 0; i + h < n; ++i) {
      RootPos a{i, i + h};
      Rational v = log_n.at(i, i + h) - current.at(i, i + h);
      if (roots1.count(a)) out.x1.at(i, i + h) = v;
      else if (roots2.count(a)) out.x2.at(i, i + h) = v;
    }
  }
  out.product_ok = nil_exp(out.x1) * nil_exp(out.x2) == nil_exp(log_n);
  out.in_lattice = lattice.contains(out.x1) && lattice.contains(out.x2);
  return out;
}

FactorizationReport factorization_check(const std::set<RootPos>& roots1, const std::set<RootPos>& roots2,
                                        const LieLattice& lattice, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = lattice.n;
  require_large_prime(n, lattice.p);
  for (const auto* s : {&roots1, &roots2})
    for (const auto& [i, j] : *s)
      if (i >= j || j >= n) throw Error(ErrorKind::InvalidArgument, "root position out of range");
  if (!is_closed_root_set(roots1)) throw Error(ErrorKind::NotClosedRootSet, "first root set is not closed");
  if (!is_closed_root_set(roots2)) throw Error(ErrorKind::NotClosedRootSet, "second root set is not closed");

  FactorizationReport rep;
  rep.roots1 = roots1;
  for (const auto& a : roots2)
    if (!roots1.count(a)) rep.roots2.insert(a);
  std::set<RootPos> uni = roots1;
  uni.insert(roots2.begin(), roots2.end());
  if (!is_closed_root_set(rep.roots2))
    throw Error(ErrorKind::NotClosedRootSet, "second root set minus the first is not closed");
  if (!is_closed_root_set(uni))
    throw Error(ErrorKind::NotClosedRootSet, "the product of the two subgroups is not a subgroup");
  rep.lattice = lattice.label;
  rep.lattice_compatible = lattice.is_root_compatible();
  rep.seed = seed;

  // Z-basis of L cap Lie(N_uni): lattice coordinates t with vanishing entries off uni
  auto pos = root_positions(n);
  const std::size_t m = lattice.basis.size();
  IntMatrix constraints;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (uni.count(pos[k])) continue;
    mpz_class den = 1;
    for (std::size_t i = 0; i < m; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), lattice.basis[i][k].get_den_mpz_t());
    IntVec row;
    for (std::size_t i = 0; i < m; ++i) {
      Rational v = lattice.basis[i][k] * den;
      if (!v.get_num().fits_slong_p()) throw Error(ErrorKind::Overflow, "lattice entries too large");
      row.push_back(v.get_num().get_si());
    }
    constraints.push_back(std::move(row));
  }
  IntMatrix kernel;
  if (constraints.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      IntVec e(m, 0);
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = solve_integral(constraints, m, IntVec(constraints.size(), 0))->kernel;
  }
  std::vector<RatVec> gens;
  for (const auto& t : kernel) {
    RatVec v(pos.size());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < pos.size(); ++k) v[k] += lattice.basis[i][k] * t[i];
    gens.push_back(std::move(v));
  }

  for (std::size_t s = 0; s < samples; ++s) {
    std::mt19937_64 rng(sample_seed(seed, 7, s));
    NilMatrix z = gens.empty() ? NilMatrix(n) : random_combination(n, lattice.p, gens, rng);
    FactorizationSample f = factor_by_height(z, rep.roots1, rep.roots2, lattice);
    ++rep.samples;
    if (f.product_ok && f.in_lattice) {
      ++rep.passes;
    } else {
      ++rep.failures;
      if (rep.witnesses.size() < 4)
        rep.witnesses.push_back("log n = " + z.str() + ", log n1 = " + f.x1.str() + ", log n2 = " + f.x2.str() +
                                (f.product_ok ? "" : " (product mismatch)"));
    }
  }
  return rep;
}

WeylSplitReport weyl_split_check(std::size_t n, const LieLattice& lattice, std::size_t samples_per_w,
                                 std::uint64_t seed) {
  if (n < 2 || lattice.n != n) throw Error(ErrorKind::InvalidArgument, "lattice size must match n >= 2");
  WeylGroup g(simply_connected(cartan_of_type('A', n - 1), "A" + std::to_string(n - 1)));
  std::vector<RootPos> idx_to_pos;
  for (const auto& coeff : g.positive().coefficients) {
    std::size_t i = 0;
    while (coeff[i] == 0) ++i;
    std::size_t j = i;
    while (j < coeff.size() && coeff[j] == 1) ++j;
    idx_to_pos.emplace_back(i, j);
  }
  WeylSplitReport rep;
  std::uint64_t k = 0;
  for (const auto& w : g.enumerate().elements) {
    std::set<RootPos> keep, flip;
    for (auto i : g.phi_plus_w(w)) keep.insert(idx_to_pos[i]);
    for (auto i : g.inversion_set(w)) flip.insert(idx_to_pos[i]);
    ++rep.elements;
    auto r = factorization_check(flip, keep, lattice, samples_per_w, sample_seed(seed, 11, k++));
    if (r.failures == 0) ++rep.passes;
    else rep.failures.push_back(format_word(g.reduced_word(w)) + ": " + std::to_string(r.failures) + " failures");
  }
  return rep;
}

namespace {

nlohmann::json roots_json(const std::set<RootPos>& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [i, k] : s) j.push_back("E" + std::to_string(i + 1) + std::to_string(k + 1));
  return j;
}

}  // namespace

nlohmann::json to_json(const CongruenceReport& r) {
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& s : r.shifts)
    shifts.push_back({{"r", s.shift},
                      {"asserted", s.at_or_above_threshold},
                      {"samples", s.samples},
                      {"congruence_failures", s.congruence_failures},
                      {"closure_failures", s.closure_failures},
                      {"exp_log_failures", s.exp_log_failures}});
  nlohmann::json j{{"n", r.n},          {"p", r.p},
                   {"c", r.c},          {"a", r.a},
                   {"b", r.b},          {"threshold", r.threshold},
                   {"seed", r.seed},    {"shifts", shifts},
                   {"failures", r.asserted_failures()}, {"witnesses", r.witnesses}};
  auto boundary = r.empirical_boundary();
  j["empirical_boundary"] = boundary ? nlohmann::json(*boundary) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const FactorizationReport& r) {
  return {{"roots1", roots_json(r.roots1)}, {"roots2", roots_json(r.roots2)},
          {"lattice", r.lattice},           {"root_compatible", r.lattice_compatible},
          {"seed", r.seed},                 {"samples", r.samples},
          {"passes", r.passes},             {"failures", r.failures},
          {"witnesses", r.witnesses}};
}

}  // namespace ordext
