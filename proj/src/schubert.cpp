#include "gpd/schubert.hpp"

#include <map>
#include <mutex>

#include "gpd/classes.hpp"
#include "gpd/errors.hpp"

namespace gpd {

namespace {

Polynomial var(VarId v) { return Polynomial::variable(v); }

}  // namespace

Polynomial divided_difference(const Polynomial& f, int i) {
  std::map<VarId, Polynomial> swap_xi;
  swap_xi[VarId::x(i)] = var(VarId::x(i + 1));
  swap_xi[VarId::x(i + 1)] = var(VarId::x(i));
  Polynomial diff = f - substitute(f, swap_xi);
  if (diff.is_zero()) return Polynomial(0);
  return exact_div(diff, var(VarId::x(i)) - var(VarId::x(i + 1)));
}

Polynomial double_schubert(const Permutation& w) {
  static std::map<Permutation, Polynomial> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
  }
  int n = w.size();
  Polynomial result;
  if (w == Permutation::longest(n)) {
    result = 1;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j)
        result *= var(VarId::x(i)) - var(VarId::y(j));
  } else {
    int i = 1;
    while (w(i) > w(i + 1)) ++i;  // an ascent exists since w != w0
    result = divided_difference(double_schubert(w.right_s(i)), i);
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(w, std::move(result)).first->second;
}

namespace {

LeadingFormCheck compare(const Permutation& w, const Polynomial& gw, VarId v,
                         const Polynomial& want_coeff) {
  auto [d, c] = leading_form(gw, v);
  long long n = w.size();
  LeadingFormCheck r;
  r.got_degree = d;
  r.want_degree = n * n - w.length();
  r.got_coeff = c;
  r.want_coeff = want_coeff;
  r.ok = r.got_degree == r.want_degree && r.got_coeff == r.want_coeff;
  return r;
}

}  // namespace

LeadingFormCheck verify_b_leading(const Permutation& w, const Polynomial& gw) {
  int n = w.size();
  std::map<VarId, Polynomial> sub;
  for (int i = 1; i <= n; ++i)
    sub[VarId::x(i)] = var(VarId::a()) + var(VarId::x(i));
  return compare(w, gw, VarId::b(), substitute(double_schubert(w), sub));
}

LeadingFormCheck verify_b_leading(const Permutation& w) {
  return verify_b_leading(w, gpd_polynomial(w));
}

LeadingFormCheck verify_a_leading(const Permutation& w, const Polynomial& gw) {
  int n = w.size();
  Permutation w0 = Permutation::longest(n);
  Permutation conj = w0.compose(w).compose(w0);
  std::map<VarId, Polynomial> sub;
  for (int i = 1; i <= n; ++i) {
    sub[VarId::x(i)] = var(VarId::b()) - var(VarId::x(n + 1 - i));
    sub[VarId::y(i)] = -var(VarId::y(n + 1 - i));
  }
  return compare(w, gw, VarId::a(), substitute(double_schubert(conj), sub));
}

LeadingFormCheck verify_a_leading(const Permutation& w) {
  return verify_a_leading(w, gpd_polynomial(w));
}

bool is_cpd(const Gpd& g) {
  int n = g.rows;
  if (g.cols != n) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Tile t = g.tile(i, j);
      if (i + j > n + 1 && t != Tile::Blank) return false;
      if (i + j == n + 1 && t != Tile::J && t != Tile::Blank) return false;
    }
  for (const auto& [pipes, count] : crossing_counts(g))
    if (count >= 2) return false;
  return true;
}

bool is_bpd(const Gpd& g) {
  for (Tile t : g.tiles)
    if (t == Tile::A) return false;
  for (const auto& [pipes, count] : crossing_counts(g))
    if (count >= 2) return false;
  return true;
}

}  // namespace gpd
