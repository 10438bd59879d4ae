#include "gpd/classes.hpp"

#include <functional>
#include <map>
#include <utility>

#include "gpd/errors.hpp"

namespace gpd {

namespace {

Polynomial var(VarId v) { return Polynomial::variable(v); }

// x_i - y_j for the square in row i, column j (1-based)
Polynomial xy_diff(int i, int j) {
  return var(VarId::x(i)) - var(VarId::y(j));
}

// cache of (A+B)^k, grown on demand
const Polynomial& ab_power(std::vector<Polynomial>& cache, int k) {
  if (cache.empty()) cache.push_back(Polynomial(1));
  while (static_cast<int>(cache.size()) <= k)
    cache.push_back(cache.back() * (var(VarId::a()) + var(VarId::b())));
  return cache[k];
}

Polynomial equivariant_nonturn_product(const Gpd& g) {
  Polynomial prod = 1;
  for (int i = 1; i <= g.rows; ++i)
    for (int j = 1; j <= g.cols; ++j) {
      switch (g.tile(i, j)) {
        case Tile::C:
        case Tile::V:
        case Tile::H:
          prod *= var(VarId::a()) + xy_diff(i, j);
          break;
        case Tile::Blank:
          prod *= var(VarId::b()) - xy_diff(i, j);
          break;
        default:
          break;  // turn tiles handled via (A+B)^turns
      }
    }
  return prod;
}

// full-word prefix arrangement labels (u_i(a), u_i(a+1)) per position,
// matching the roots produced by beta_roots
std::vector<std::pair<int, int>> prefix_label_pairs(const Word& q, int n) {
  Permutation u = Permutation::identity(n);
  std::vector<std::pair<int, int>> out;
  out.reserve(q.size());
  for (int a : q) {
    if (a < 1 || a >= n)
      throw ValidationError("word letter out of range for rank " +
                            std::to_string(n));
    out.emplace_back(u(a), u(a + 1));
    u = u.right_s(a);
  }
  return out;
}

}  // namespace

Polynomial weight(const Gpd& g, WeightSystem ws) {
  if (ws == WeightSystem::Equivariant) {
    std::vector<Polynomial> cache;
    return equivariant_nonturn_product(g) * ab_power(cache, g.turn_count());
  }
  Polynomial prod = 1;
  for (int i = 1; i <= g.rows; ++i)
    for (int j = 1; j <= g.cols; ++j) {
      switch (g.tile(i, j)) {
        case Tile::C:
        case Tile::V:
        case Tile::H:
          prod *= xy_diff(i, j);
          break;
        case Tile::Blank:
          prod *= xy_diff(i, j) + 1;
          break;
        default:
          break;  // turn tiles weigh 1
      }
    }
  return prod;
}

Polynomial gpd_polynomial(const Permutation& w, int nthreads) {
  std::vector<Polynomial> cache;
  Polynomial total = 0;
  enumerate_parallel(standard_spec(w), nthreads, [&](const Gpd& g) {
    total += equivariant_nonturn_product(g) * ab_power(cache, g.turn_count());
  });
  return total;
}

Polynomial lower_upper_class(const Permutation& w, int nthreads) {
  std::vector<Polynomial> cache;
  return exact_div(gpd_polynomial(w, nthreads), ab_power(cache, w.size()));
}

Polynomial csm_kl(const Word& q, const Permutation& w, int n) {
  if (w.size() != n)
    throw ValidationError("csm_kl: target permutation has the wrong rank");
  auto betas = beta_roots(q, n);
  int m = static_cast<int>(q.size());
  Polynomial total = 0;
  std::function<void(int, const Permutation&, const Polynomial&)> go =
      [&](int i, const Permutation& c, const Polynomial& prod) {
        // at least length(c^-1 w) more letters are needed to reach w
        if (c.inverse().compose(w).length() > m - i) return;
        if (i == m) {
          total += prod;  // reached only when c == w
          return;
        }
        go(i + 1, c, prod);
        go(i + 1, c.right_s(q[i]), prod * betas[i]);
      };
  go(0, Permutation::identity(n), Polynomial(1));
  return total;
}

RationalFunction ssm_restriction(const Word& q, const Permutation& w, int n) {
  Polynomial den = 1;
  for (const auto& b : beta_roots(q, n)) den *= b + 1;
  return RationalFunction(csm_kl(q, w, n), den);
}

RationalFunction ssm_parabolic(const Word& q, const Permutation& w, int n,
                               const std::set<int>& gens) {
  Polynomial num = 0;
  for (const auto& u : coset_elements(w, gens)) num += csm_kl(q, u, n);
  Polynomial den = 1;
  for (const auto& b : beta_roots(q, n)) den *= b + 1;
  return RationalFunction(num, den);
}

Polynomial csm_partial_permutation(const PartialPermutation& m, int nthreads) {
  Polynomial total = 0;
  enumerate_parallel(partial_spec(m), nthreads,
                     [&](const Gpd& g) { total += weight(g, WeightSystem::Modified); });
  return total;
}

Polynomial csm_double_bruhat(const Permutation& u, const Permutation& v,
                             int nthreads) {
  int n = u.size();
  Polynomial total = 0;
  enumerate_parallel(dbru_spec(u, v), nthreads, [&](const Gpd& g) {
    Polynomial prod = 1;
    for (int i = 1; i <= g.rows; ++i)
      for (int j = 1; j <= g.cols; ++j)
        if (g.tile(i, j) == Tile::C)
          prod *= var(VarId::z(i)) - var(VarId::z(n + j));
    total += prod;
  });
  return total;
}

bool csm_full_perm_check(const Permutation& w) {
  Polynomial lhs = csm_partial_permutation(PartialPermutation::of(w));
  std::map<VarId, Polynomial> sub;
  sub[VarId::a()] = Polynomial(0);
  sub[VarId::b()] = Polynomial(-1);
  Polynomial rhs = substitute(gpd_polynomial(w), sub);
  long long n = w.size();
  if ((n * n - w.length()) % 2 != 0) rhs = Polynomial(0) - rhs;
  return lhs == rhs;
}

Polynomial motivic_kl(const Word& q, const Permutation& w, int n) {
  if (w.size() != n)
    throw ValidationError("motivic_kl: target permutation has the wrong rank");
  auto pairs = prefix_label_pairs(q, n);
  int m = static_cast<int>(q.size());
  Polynomial one(1);
  Polynomial t = var(VarId::t());
  std::vector<Polynomial> lengthening, absorbed, skipped;
  for (auto [p, qq] : pairs) {
    Polynomial ratio =
        Polynomial::term(1, Monomial::var(VarId::z(qq), 1) *
                                Monomial::var(VarId::z(p), -1));
    lengthening.push_back(one - ratio);
    absorbed.push_back((one - t) * (one - ratio));
    skipped.push_back((one - t) * ratio);
  }
  Polynomial total = 0;
  std::function<void(int, const Permutation&, const Polynomial&)> go =
      [&](int i, const Permutation& d, const Polynomial& prod) {
        if (d.length() > w.length()) return;  // the Demazure prefix only grows
        if (i == m) {
          if (d == w) total += prod;
          return;
        }
        go(i + 1, d, prod * skipped[i]);
        if (d.right_descent(q[i]))
          go(i + 1, d, prod * absorbed[i]);
        else
          go(i + 1, d.right_s(q[i]), prod * lengthening[i]);
      };
  go(0, Permutation::identity(n), Polynomial(1));
  return total;
}

Polynomial ktheory_weight(const Gpd& g) {
  Polynomial one(1);
  Polynomial t = var(VarId::t());
  Polynomial prod = 1;
  for (int i = 1; i <= g.rows; ++i)
    for (int j = 1; j <= g.cols; ++j) {
      Polynomial ratio =
          Polynomial::term(1, Monomial::var(VarId::y(j), 1) *
                                  Monomial::var(VarId::x(i), -1));
      int p = g.west_label(i, j), q = g.south_label(i, j);
      switch (g.tile(i, j)) {
        case Tile::C:
          prod *= p > q ? t * (one - ratio) : one - ratio;
          break;
        case Tile::V:
          prod *= t * (one - ratio);
          break;
        case Tile::H:
          prod *= one - ratio;
          break;
        case Tile::Blank:
          prod *= one - t * ratio;
          break;
        case Tile::A:
          prod *= p < q ? (one - t) * ratio : one - t;
          break;
        case Tile::J:
          prod *= (one - t) * ratio;
          break;
        case Tile::R:
          prod *= one - t;
          break;
      }
    }
  return prod;
}

Polynomial ktheory_sum(const Permutation& w, int nthreads) {
  Polynomial total = 0;
  enumerate_parallel(standard_spec(w), nthreads,
                     [&](const Gpd& g) { total += ktheory_weight(g); });
  return total;
}

}  // namespace gpd
