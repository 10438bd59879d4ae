#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "gpd/algebra.hpp"

namespace gpd {

// Permutation of [n], one-line notation, 1-based: (*this)(i) = w_[i-1].
// Product convention is function composition: (u.compose(v))(i) = u(v(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation longest(int n);  // n n-1 ... 1
  // "2431" (single digits) or "2,4,3,1"
  static Permutation parse(const std::string& s);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  int length() const;  // inversion count
  Permutation compose(const Permutation& v) const;
  // w * s_a: swap the entries at positions a, a+1
  Permutation right_s(int a) const;
  // true iff length(w * s_a) < length(w), i.e. w(a) > w(a+1)
  bool right_descent(int a) const { return w_[a - 1] > w_[a]; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// Word in simple reflections, letters 1-based (letter a stands for s_a).
using Word = std::vector<int>;

Word parse_word(const std::string& s);  // "3,4,2,1,2,3"
std::string word_to_string(const Word& q);

// s_{Q1} * s_{Q2} * ... * s_{Qm} in S_n under the composition convention.
Permutation word_product(const Word& q, int n);

// 0-Hecke (Demazure) product: absorb letters that would shorten.
Permutation demazure_product(const Word& q, int n);

// beta_i = z_{u_i(a)} - z_{u_i(a+1)} with a = Q_i and u_i the product of the
// letters strictly before i.
std::vector<Polynomial> beta_roots(const Word& q, int n);

// u(1)...u(n) n+v(1)...n+v(n)
Permutation direct_sum(const Permutation& u, const Permutation& v);

// Reduced word for the k x n rectangle: for j = 1..n the run
// (s_{k+j-1}, ..., s_j).  rect_word(n, n) is the cut-the-deck word.
Word rect_word(int k, int n);
Word cut_deck_word(int n);

// The full right coset {w f : f in the subgroup generated by the listed s_i}.
std::set<Permutation> coset_elements(const Permutation& w,
                                     const std::set<int>& generators);

// All reduced words of w (exponential; intended for small test ranks).
std::vector<Word> reduced_words(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

// k x n 0/1 matrix with at most one 1 per row and per column.
class PartialPermutation {
 public:
  PartialPermutation(int k, int n, std::vector<std::vector<int>> m);
  static PartialPermutation parse(const std::string& rows);  // "10/00"
  static PartialPermutation of(const Permutation& w);        // full matrix

  int rows() const { return k_; }
  int cols() const { return n_; }
  int entry(int i, int j) const { return m_[i - 1][j - 1]; }  // 1-based

  friend bool operator==(const PartialPermutation&,
                         const PartialPermutation&) = default;

 private:
  int k_, n_;
  std::vector<std::vector<int>> m_;
};

// Completions of a k x n partial permutation inside S_{n+k}: all w' with
// w'(j) = i wherever w_ij = 1, and value i placed past position n for every
// row i of w with no 1.  This convention is fixed by the subword cross-check
// tests (see classes), with asymmetric 1x2 and 2x1 cases pinning the
// orientation.
std::vector<Permutation> completions(const PartialPermutation& w);

}  // namespace gpd
