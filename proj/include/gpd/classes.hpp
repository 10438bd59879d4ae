#pragma once

#include <set>
#include <vector>

#include "gpd/algebra.hpp"
#include "gpd/gpds.hpp"
#include "gpd/perms.hpp"

namespace gpd {

// Per-square tile weights multiplied over the grid.
//
// Equivariant (variables A, B, x_i, y_j):
//   c, v, h  ->  A + x_i - y_j
//   blank    ->  B - x_i + y_j
//   a, j, r  ->  A + B
//
// Modified (variables x_i, y_j):
//   c, v, h  ->  x_i - y_j
//   blank    ->  x_i - y_j + 1
//   a, j, r  ->  1
enum class WeightSystem { Equivariant, Modified };

Polynomial weight(const Gpd& g, WeightSystem ws);

// Sum of equivariant weights over all gpds of w on the n x n grid.
Polynomial gpd_polynomial(const Permutation& w, int nthreads = 1);

// gpd_polynomial(w) / (A+B)^n.  The division is exact; exact_div throws
// NotDivisible if that invariant is ever violated.
Polynomial lower_upper_class(const Permutation& w, int nthreads = 1);

// Subword sums for a word q in letters 1..n-1 acting on S_n.  Every subset
// of positions contributes, reduced or not; the i-th chosen position carries
// the root beta_i = z_{u_i(q_i)} - z_{u_i(q_i+1)} taken from the full-word
// prefix arrangement u_i (see beta_roots).
Polynomial csm_kl(const Word& q, const Permutation& w, int n);

// csm_kl(q, w, n) over the product of (1 + beta_i) for all positions of q.
// Kept unreduced: equality of these values is cross-multiplied equality.
RationalFunction ssm_restriction(const Word& q, const Permutation& w, int n);

// Numerator summed over the right coset w * <s_a : a in gens>.
RationalFunction ssm_parabolic(const Word& q, const Permutation& w, int n,
                               const std::set<int>& gens);

// Sum of modified weights over the gpds of a k x n partial permutation
// (row variables x_1..x_k, column variables y_1..y_n).
Polynomial csm_partial_permutation(const PartialPermutation& m,
                                   int nthreads = 1);

// Double Bruhat sum: a c tile in row i, column j contributes z_i - z_{n+j}
// and a tiles contribute 1.  The variables are attached to the sides of the
// square (east carries the row's label, north the column's) in the reference
// wiring where every square crosses; they are not the labels of the pipes the
// filling itself routes through the square.  That reading is forced by the
// subword identity: csm_double_bruhat(u, v) equals
// csm_kl(cut_deck_word(n), direct_sum(u, v), 2n), where position (i, j) of
// the grid carries the root z_i - z_{n+j}.
Polynomial csm_double_bruhat(const Permutation& u, const Permutation& v,
                             int nthreads = 1);

// For a full permutation the partial-permutation sum agrees with the
// substitution A -> 0, B -> -1 in gpd_polynomial(w) up to the global sign
// (-1)^(n^2 - length(w)).  Returns whether the two sides match.
bool csm_full_perm_check(const Permutation& w);

// Motivic subword sum.  Membership is by Demazure product of the chosen
// subword; position i carries labels p = u_i(q_i), q = u_i(q_i+1) from the
// full-word prefix arrangement and contributes
//   chosen, lengthening  ->  1 - z_q/z_p
//   chosen, absorbed     ->  (1 - t)(1 - z_q/z_p)
//   skipped              ->  (1 - t) z_q/z_p
Polynomial motivic_kl(const Word& q, const Permutation& w, int n);

// Multiplicative grid weight (Laurent in x_i, y_j, plus t); p and q as in
// csm_double_bruhat.  [..] below is an exponent of 0 or 1.
//   c      ->  t^[p>q] (1 - y_j/x_i)
//   v      ->  t (1 - y_j/x_i)
//   h      ->  1 - y_j/x_i
//   blank  ->  1 - t y_j/x_i
//   a      ->  (1 - t) (y_j/x_i)^[p<q]
//   j      ->  (1 - t) y_j/x_i
//   r      ->  1 - t
Polynomial ktheory_weight(const Gpd& g);

// Sum of ktheory_weight over all gpds of w.
Polynomial ktheory_sum(const Permutation& w, int nthreads = 1);

}  // namespace gpd
