#pragma once

#include "gpd/algebra.hpp"
#include "gpd/gpds.hpp"
#include "gpd/perms.hpp"

namespace gpd {

// (f - s_i f) / (x_i - x_{i+1}), where s_i swaps x_i and x_{i+1}.  The
// difference is always divisible, so NotDivisible here means a bug.
Polynomial divided_difference(const Polynomial& f, int i);

// Double Schubert polynomial: descend from S_{w0} = prod_{i+j<=n}(x_i - y_j)
// along ascents, S_w = dd_i(S_{w s_i}) when w(i) < w(i+1).  Memoized behind a
// mutex so concurrent callers are safe.
Polynomial double_schubert(const Permutation& w);

// Material for reporting a leading-form comparison, not just the verdict.
struct LeadingFormCheck {
  bool ok;
  long long got_degree, want_degree;
  Polynomial got_coeff, want_coeff;
};

// leading_form(G_w, B) == (n^2 - l(w), S_w(A+x_1..A+x_n, y_1..y_n))
LeadingFormCheck verify_b_leading(const Permutation& w, const Polynomial& gw);
LeadingFormCheck verify_b_leading(const Permutation& w);

// leading_form(G_w, A) == (n^2 - l(w), S_{w0 w w0}(B-x_n..B-x_1, -y_n..-y_1)),
// i.e. x_i -> B - x_{n+1-i} and y_j -> -y_{n+1-j}.
LeadingFormCheck verify_a_leading(const Permutation& w, const Polynomial& gw);
LeadingFormCheck verify_a_leading(const Permutation& w);

// Classic pipe dream: pipes confined to the NW triangle (strictly below the
// antidiagonal all squares blank, on the antidiagonal only j or blank) and no
// two pipes crossing twice.
bool is_cpd(const Gpd& g);

// Bumpless pipe dream: no a tiles and no two pipes crossing twice.
bool is_bpd(const Gpd& g);

}  // namespace gpd
