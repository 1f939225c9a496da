#include "ordext/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "ordext/error.hpp"

namespace ordext {

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : w.perm) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

WeylGroup::WeylGroup(RootDatum rd) : rd_(std::move(rd)), pos_(positive_roots(rd_)) {
  const std::size_t n = pos_.size();
  if (2 * n > 65535) throw Error(ErrorKind::GroupTooLarge, "root system too large");
  for (std::size_t i = 0; i < n; ++i) {
    root_index_[pos_.roots[i]] = i;
    root_index_[neg(pos_.roots[i])] = n + i;
  }
  for (std::size_t j = 0; j < num_simple(); ++j) simple_.push_back(reflection(j));
}

WeylElement WeylGroup::reflection(std::size_t positive_index) const {
  const std::size_t n = pos_.size();
  if (positive_index >= n) throw Error(ErrorKind::InvalidArgument, "root index out of range");
  const IntVec& alpha = pos_.roots[positive_index];
  const IntVec& coroot = pos_.coroots[positive_index];
  WeylElement s;
  s.perm.resize(2 * n);
  for (std::size_t r = 0; r < 2 * n; ++r) {
    IntVec v = root_vector(r);
    s.perm[r] = static_cast<std::uint16_t>(root_index_.at(sub(v, scale(pairing(v, coroot), alpha))));
  }
  return s;
}

IntVec WeylGroup::root_vector(std::size_t r) const {
  const std::size_t n = pos_.size();
  return r < n ? pos_.roots[r] : neg(pos_.roots[r - n]);
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  e.perm.resize(2 * pos_.size());
  for (std::size_t r = 0; r < e.perm.size(); ++r) e.perm[r] = static_cast<std::uint16_t>(r);
  return e;
}

WeylElement WeylGroup::simple(std::size_t i) const {
  if (i >= simple_.size()) throw Error(ErrorKind::InvalidArgument, "simple reflection index out of range");
  return simple_[i];
}

WeylElement WeylGroup::from_word(const Word& word) const {
  WeylElement w = identity();
  for (auto a : word) w = multiply(w, simple(a));
  return w;
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  WeylElement out;
  out.perm.resize(a.perm.size());
  for (std::size_t r = 0; r < out.perm.size(); ++r) out.perm[r] = a.perm[b.perm[r]];
  return out;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  WeylElement out;
  out.perm.resize(w.perm.size());
  for (std::size_t r = 0; r < w.perm.size(); ++r) out.perm[w.perm[r]] = static_cast<std::uint16_t>(r);
  return out;
}

WeylElement WeylGroup::longest() const {
  WeylElement w = identity();
  while (true) {
    bool grew = false;
    for (std::size_t i = 0; i < num_simple(); ++i)
      if (!is_left_descent(w, i)) {
        w = multiply(simple_[i], w);
        grew = true;
        break;
      }
    if (!grew) return w;
  }
}

std::size_t WeylGroup::length(const WeylElement& w) const {
  const std::size_t n = pos_.size();
  std::size_t l = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (w.perm[i] >= n) ++l;
  return l;
}

bool WeylGroup::is_left_descent(const WeylElement& w, std::size_t i) const {
  // w^{-1}(alpha_i) < 0; simple root i sits at index i of the positive roots
  for (std::size_t r = 0; r < w.perm.size(); ++r)
    if (w.perm[r] == i) return r >= pos_.size();
  return false;
}

bool WeylGroup::is_right_descent(const WeylElement& w, std::size_t i) const {
  return w.perm[i] >= pos_.size();
}

Word WeylGroup::reduced_word(const WeylElement& w) const {
  Word out;
  WeylElement cur = w;
  std::size_t l = length(cur);
  while (l > 0) {
    std::size_t i = 0;
    while (!is_left_descent(cur, i)) ++i;
    out.push_back(i);
    cur = multiply(simple_[i], cur);
    --l;
  }
  return out;
}

std::vector<Word> WeylGroup::reduced_words(const WeylElement& w) const {
  std::unordered_map<WeylElement, std::vector<Word>, WeylElementHash> memo;
  std::function<const std::vector<Word>&(const WeylElement&)> rec =
      [&](const WeylElement& x) -> const std::vector<Word>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<Word> words;
    if (length(x) == 0) {
      words.push_back({});
    } else {
      for (std::size_t i = 0; i < num_simple(); ++i) {
        if (!is_left_descent(x, i)) continue;
        for (const auto& tail : rec(multiply(simple_[i], x))) {
          Word word{i};
          word.insert(word.end(), tail.begin(), tail.end());
          words.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(x, std::move(words)).first->second;
  };
  return rec(w);
}

bool WeylGroup::is_reduced(const Word& word) const {
  WeylElement x = identity();
  for (auto a : word) {
    if (a >= num_simple()) throw Error(ErrorKind::InvalidArgument, "letter out of range in word");
    if (x.perm[a] >= pos_.size()) return false;
    x = multiply(x, simple_[a]);
  }
  return true;
}

IntVec WeylGroup::act(const WeylElement& w, const IntVec& x) const {
  if (x.size() != rd_.rank) throw Error(ErrorKind::RankMismatch, "vector has wrong length");
  Word word = reduced_word(w);
  IntVec v = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = sub(v, scale(pairing(v, rd_.simple_coroots[*it]), rd_.simple_roots[*it]));
  return v;
}

RatVec WeylGroup::act(const WeylElement& w, const RatVec& x) const {
  if (x.size() != rd_.rank) throw Error(ErrorKind::RankMismatch, "vector has wrong length");
  Word word = reduced_word(w);
  RatVec v = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Rational c = pairing(v, rd_.simple_coroots[*it]);
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] -= c * Rational(static_cast<long>(rd_.simple_roots[*it][k]));
  }
  return v;
}

IntVec WeylGroup::act_coweight(const WeylElement& w, const IntVec& lambda) const {
  if (lambda.size() != rd_.rank) throw Error(ErrorKind::RankMismatch, "vector has wrong length");
  Word word = reduced_word(w);
  IntVec v = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = sub(v, scale(pairing(rd_.simple_roots[*it], v), rd_.simple_coroots[*it]));
  return v;
}

std::size_t WeylGroup::act_on_root(const WeylElement& w, std::size_t root_index) const {
  return w.perm.at(root_index);
}

std::vector<std::size_t> WeylGroup::inversion_set(const WeylElement& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pos_.size(); ++i)
    if (w.perm[i] >= pos_.size()) out.push_back(i);
  return out;
}

std::vector<std::size_t> WeylGroup::phi_plus_w(const WeylElement& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pos_.size(); ++i)
    if (w.perm[i] < pos_.size()) out.push_back(i);
  return out;
}

IntVec WeylGroup::alpha_w(const WeylElement& w) const {
  IntVec sum(rd_.rank, 0);
  for (auto i : inversion_set(w)) sum = add(sum, pos_.roots[i]);
  return sum;
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
  WeylElement x = u, y = w;
  while (true) {
    std::size_t ly = length(y), lx = length(x);
    if (lx > ly) return false;
    if (lx == 0) return true;
    if (lx == ly) return x == y;
    std::size_t s = 0;
    while (!is_left_descent(y, s)) ++s;
    if (is_left_descent(x, s)) x = multiply(simple_[s], x);
    y = multiply(simple_[s], y);
  }
}

bool WeylGroup::bruhat_leq_subword(const WeylElement& u, const Word& word) const {
  if (!is_reduced(word)) throw Error(ErrorKind::NotReduced, "word " + format_word(word) + " is not reduced");
  std::unordered_set<WeylElement, WeylElementHash> reached{identity()};
  for (auto a : word) {
    std::vector<WeylElement> grown;
    for (const auto& x : reached)
      if (x.perm[a] < pos_.size()) grown.push_back(multiply(x, simple_[a]));
    reached.insert(grown.begin(), grown.end());
  }
  return reached.count(u) > 0;
}

namespace {

void sort_by_length_then_word(const WeylGroup& g, std::vector<WeylElement>& elems,
                              std::vector<Word>* words_out = nullptr,
                              std::vector<std::size_t>* lengths_out = nullptr) {
  std::vector<std::pair<Word, WeylElement>> keyed;
  keyed.reserve(elems.size());
  for (auto& e : elems) keyed.emplace_back(g.reduced_word(e), std::move(e));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  elems.clear();
  for (auto& [word, e] : keyed) {
    if (lengths_out) lengths_out->push_back(word.size());
    if (words_out) words_out->push_back(word);
    elems.push_back(std::move(e));
  }
}

}  // namespace

WeylTable WeylGroup::enumerate(std::size_t bound) const {
  std::unordered_set<WeylElement, WeylElementHash> seen{identity()};
  std::vector<WeylElement> all{identity()};
  std::vector<WeylElement> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier)
      for (std::size_t i = 0; i < num_simple(); ++i) {
        if (is_left_descent(x, i)) continue;
        WeylElement y = multiply(simple_[i], x);
        if (seen.insert(y).second) {
          if (seen.size() > bound)
            throw Error(ErrorKind::GroupTooLarge,
                        "Weyl group exceeds the enumeration bound of " + std::to_string(bound));
          next.push_back(y);
          all.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  WeylTable t;
  sort_by_length_then_word(*this, all, &t.words, &t.lengths);
  t.elements = std::move(all);
  t.poincare.assign(num_positive() + 1, 0);
  for (auto l : t.lengths) ++t.poincare[l];
  return t;
}

std::vector<WeylElement> WeylGroup::parabolic_subgroup(const std::vector<std::size_t>& I) const {
  for (auto i : I)
    if (i >= num_simple()) throw Error(ErrorKind::InvalidArgument, "parabolic index out of range");
  std::unordered_set<WeylElement, WeylElementHash> seen{identity()};
  std::vector<WeylElement> all{identity()};
  for (std::size_t k = 0; k < all.size(); ++k)
    for (auto i : I) {
      WeylElement y = multiply(simple_[i], all[k]);
      if (seen.insert(y).second) all.push_back(y);
    }
  sort_by_length_then_word(*this, all);
  return all;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (auto a : w) s += "s" + std::to_string(a + 1);
  return s;
}

Word parse_word(const std::string& text, std::size_t num_simple) {
  Word out;
  if (text == "e" || text.empty()) return out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == 's' || c == ',' || c == ' ' || c == '.') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::ParseError, "bad character in word '" + text + "'");
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    std::size_t letter = std::stoul(text.substr(i, j - i));
    if (letter == 0 || letter > num_simple)
      throw Error(ErrorKind::ParseError, "letter " + std::to_string(letter) + " out of range in '" + text + "'");
    out.push_back(letter - 1);
    i = j;
  }
  return out;
}

AlphaKSequence alpha_k_sequence(const WeylGroup& g, const WeylElement& w, const Word& word) {
  const std::size_t len = g.length(w);
  if (word.size() > len || !g.is_reduced(word))
    throw Error(ErrorKind::NotReduced, "word " + format_word(word) + " is not a reduced word of an element of length " + std::to_string(len));
  if (g.from_word(word) != w)
    throw Error(ErrorKind::WordMismatch, "word " + format_word(word) + " does not multiply to the given element");

  const std::size_t n = g.num_positive();
  std::vector<bool> in_phi_w(n, false);
  for (auto i : g.phi_plus_w(w)) in_phi_w[i] = true;

  AlphaKSequence out;
  const IntVec zero(g.datum().rank, 0);
  for (std::size_t k = 0; k <= len; ++k) {
    // u_k = s_k ... s_1 is the suffix of length k
    Word suffix(word.end() - static_cast<std::ptrdiff_t>(k), word.end());
    WeylElement u = g.from_word(suffix);
    IntVec a = zero;
    for (auto i : g.phi_plus_w(u))
      if (!in_phi_w[i]) a = add(a, g.positive().roots[i]);
    out.alpha.push_back(a);
    if (k < len) {
      std::size_t letter = word[len - k - 1];  // s_{k+1}
      std::size_t idx = g.inverse(u).perm[letter];
      out.step_root_indices.push_back(idx);
      out.step_roots.push_back(g.root_vector(idx));
    }
  }
  return out;
}

ParabolicData parabolic_reps(const WeylGroup& g, const std::vector<std::size_t>& I) {
  ParabolicData pd;
  pd.I = I;
  std::sort(pd.I.begin(), pd.I.end());
  pd.I.erase(std::unique(pd.I.begin(), pd.I.end()), pd.I.end());
  pd.levi_weyl = g.parabolic_subgroup(pd.I);
  pd.levi_longest = pd.levi_weyl.back();
  for (const auto& x : g.enumerate().elements) {
    bool all = true, none = true;
    for (auto i : pd.I) {
      bool d = g.is_left_descent(x, i);
      all = all && d;
      none = none && !d;
    }
    if (all) pd.max_reps.push_back(x);
    if (none) pd.min_reps.push_back(x);
  }
  pd.length_law_holds = true;
  for (const auto& wt : pd.max_reps)
    for (const auto& wl : pd.levi_weyl)
      if (g.length(g.multiply(wl, wt)) + g.length(wl) != g.length(wt)) pd.length_law_holds = false;
  return pd;
}

bool cell_decomposition_check(const WeylGroup& g, const ParabolicData& pd,
                              const WeylElement& w_tilde) {
  std::unordered_set<WeylElement, WeylElementHash> cell;
  for (const auto& wl : pd.levi_weyl) cell.insert(g.multiply(wl, w_tilde));
  if (cell.size() != pd.levi_weyl.size()) return false;
  // every member of the cell must have w_tilde as the maximal element of its coset
  for (const auto& x : cell)
    for (auto i : pd.I)
      if (!g.is_left_descent(w_tilde, i) || g.length(x) > g.length(w_tilde)) return false;
  return true;
}

bool cell_decomposition_check(const WeylGroup& g, const ParabolicData& pd) {
  std::unordered_set<WeylElement, WeylElementHash> covered;
  std::size_t total = 0;
  for (const auto& wt : pd.max_reps) {
    if (!cell_decomposition_check(g, pd, wt)) return false;
    for (const auto& wl : pd.levi_weyl) {
      covered.insert(g.multiply(wl, wt));
      ++total;
    }
  }
  std::size_t order = g.enumerate().size();
  return covered.size() == total && total == order;
}

}  // namespace ordext
