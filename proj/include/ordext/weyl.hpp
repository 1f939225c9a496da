#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordext/rootdata.hpp"

namespace ordext {

// Simple-reflection indices, 0-based. A word (a_1, ..., a_k) denotes the
// product s_{a_1} s_{a_2} ... s_{a_k}, so the last letter acts first.
using Word = std::vector<std::size_t>;

// A Weyl group element as the permutation it induces on Phi. Index i < N is the
// i-th positive root, index N + i its negative.
struct WeylElement {
  std::vector<std::uint16_t> perm;

  bool operator==(const WeylElement& o) const { return perm == o.perm; }
  bool operator!=(const WeylElement& o) const { return perm != o.perm; }
  bool operator<(const WeylElement& o) const { return perm < o.perm; }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const;
};

struct WeylTable;

class WeylGroup {
 public:
  explicit WeylGroup(RootDatum rd);

  const RootDatum& datum() const { return rd_; }
  const PositiveRootSet& positive() const { return pos_; }
  std::size_t num_positive() const { return pos_.size(); }
  std::size_t num_simple() const { return rd_.semisimple_rank(); }

  WeylElement identity() const;
  WeylElement simple(std::size_t i) const;
  WeylElement from_word(const Word& word) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement longest() const;
  // s_alpha for the positive root with the given index.
  WeylElement reflection(std::size_t positive_index) const;

  std::size_t length(const WeylElement& w) const;
  bool is_left_descent(const WeylElement& w, std::size_t i) const;   // l(s_i w) < l(w)
  bool is_right_descent(const WeylElement& w, std::size_t i) const;  // l(w s_i) < l(w)

  // Lexicographically first reduced word: repeatedly strip the lowest-index
  // left descent.
  Word reduced_word(const WeylElement& w) const;
  // Every reduced word of w, in lexicographic order.
  std::vector<Word> reduced_words(const WeylElement& w) const;
  bool is_reduced(const Word& word) const;

  // Action on X, on X^vee and on X (x) Q.
  IntVec act(const WeylElement& w, const IntVec& x) const;
  RatVec act(const WeylElement& w, const RatVec& x) const;
  IntVec act_coweight(const WeylElement& w, const IntVec& lambda) const;
  // Image of the root with the given index (see WeylElement).
  std::size_t act_on_root(const WeylElement& w, std::size_t root_index) const;
  IntVec root_vector(std::size_t root_index) const;

  // Indices into positive(): {alpha > 0 : w(alpha) < 0} and its complement.
  std::vector<std::size_t> inversion_set(const WeylElement& w) const;
  std::vector<std::size_t> phi_plus_w(const WeylElement& w) const;
  IntVec alpha_w(const WeylElement& w) const;

  // Bruhat order by descent recursion.
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;
  // Bruhat order by scanning reduced subwords of the given reduced word of w.
  bool bruhat_leq_subword(const WeylElement& u, const Word& reduced_word_of_w) const;

  // All elements ordered by length, then by reduced word. Throws GroupTooLarge
  // beyond `bound` elements.
  WeylTable enumerate(std::size_t bound = 2000000) const;
  // Subgroup generated by {s_i : i in I}, same ordering.
  std::vector<WeylElement> parabolic_subgroup(const std::vector<std::size_t>& I) const;

 private:
  RootDatum rd_;
  PositiveRootSet pos_;
  std::map<IntVec, std::size_t> root_index_;
  std::vector<WeylElement> simple_;
};

struct WeylTable {
  std::vector<WeylElement> elements;
  std::vector<std::size_t> lengths;
  std::vector<Word> words;
  // Poincare polynomial: poincare[k] = #{w : l(w) = k}.
  std::vector<std::size_t> poincare;

  std::size_t size() const { return elements.size(); }
};

std::string format_word(const Word& w);  // 1-based, e.g. "s1s2"; identity is "e"
Word parse_word(const std::string& s, std::size_t num_simple);

// alpha_k = sum over Phi^+_{s_k...s_1} - Phi^+_w for the reduced word
// s_L ... s_1 of w, where index 1 is the rightmost letter.
struct AlphaKSequence {
  std::vector<IntVec> alpha;  // alpha[k] for k = 0..L
  // step_roots[k] = alpha_k - alpha_{k+1} = s_1...s_k(beta) with s_{k+1} = s_beta, k = 0..L-1
  std::vector<IntVec> step_roots;
  std::vector<std::size_t> step_root_indices;  // indices into positive()
};
AlphaKSequence alpha_k_sequence(const WeylGroup& g, const WeylElement& w, const Word& word);

struct ParabolicData {
  std::vector<std::size_t> I;
  std::vector<WeylElement> levi_weyl;  // W_L
  WeylElement levi_longest;            // w_{L,0}
  std::vector<WeylElement> max_reps;   // W~_P, one per coset W_L w
  std::vector<WeylElement> min_reps;   // same cosets, minimal length
  bool length_law_holds = false;       // l(w_L w~) = l(w~) - l(w_L) everywhere
};
ParabolicData parabolic_reps(const WeylGroup& g, const std::vector<std::size_t>& I);

// {w_L w~ : w_L in W_L} has |W_L| elements, and these sets partition W as w~
// ranges over W~_P.
bool cell_decomposition_check(const WeylGroup& g, const ParabolicData& pd,
                              const WeylElement& w_tilde);
bool cell_decomposition_check(const WeylGroup& g, const ParabolicData& pd);

}  // namespace ordext
