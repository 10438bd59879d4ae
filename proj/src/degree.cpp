#include "gpd/degree.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "gpd/gpds.hpp"

namespace gpd {

namespace {

InfeasibleSizeError budget_error(std::size_t budget) {
  return InfeasibleSizeError(
      budget, "frontier map would exceed " + std::to_string(budget) + " states");
}

BigInt two_pow(int e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

BigInt brute_degree(const Permutation& w) {
  int n = w.size();
  BigInt total = 0;
  enumerate(standard_spec(w),
            [&](const Gpd& g) { total += two_pow(g.turn_count() - n); });
  return total;
}

// Frontier state: slots 0..n-1 hold the label on each column's exposed north
// edge, slot n the pending east edge of the square just filled; 0 means blank.
using State = std::vector<std::uint8_t>;

BigInt dp_degree(const Permutation& w, std::size_t max_states) {
  int n = w.size();
  std::map<State, BigInt> layer;
  State init(n + 1, 0);
  init[n] = static_cast<std::uint8_t>(n);  // west label of the bottom row
  layer.emplace(std::move(init), 1);

  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      std::map<State, BigInt> next;
      for (const auto& [st, cnt] : layer) {
        auto push = [&](std::uint8_t north, std::uint8_t east, bool turn) {
          State s = st;
          s[j - 1] = north;
          s[n] = east;
          next[std::move(s)] += turn ? cnt * 2 : cnt;
          if (next.size() > max_states) throw budget_error(max_states);
        };
        std::uint8_t west = st[n], south = st[j - 1];
        if (west && south) {
          push(south, west, false);  // c
          push(west, south, true);   // a
        } else if (west) {
          push(0, west, false);  // h
          push(west, 0, true);   // j
        } else if (south) {
          push(south, 0, false);  // v
          push(0, south, true);   // r
        } else {
          push(0, 0, false);
        }
      }
      layer = std::move(next);
    }
    // east edge of row i must be blank; the next square reads row i-1's west
    std::map<State, BigInt> filtered;
    for (auto& [st, cnt] : layer) {
      if (st[n] != 0) continue;
      State s = st;
      if (i > 1) s[n] = static_cast<std::uint8_t>(i - 1);
      filtered.emplace(std::move(s), std::move(cnt));
    }
    layer = std::move(filtered);
  }

  State goal(n + 1, 0);
  Permutation wi = w.inverse();
  for (int j = 1; j <= n; ++j) goal[j - 1] = static_cast<std::uint8_t>(wi(j));
  BigInt total = 0;
  if (auto it = layer.find(goal); it != layer.end()) total = it->second;
  // every gpd has a distinct E->N turn per pipe, so 2^n divides each term
  if ((total & (two_pow(n) - 1)) != 0)
    throw std::logic_error("2-enumeration not divisible by 2^n");
  return total >> n;
}

}  // namespace

BigInt degree_Ew(const Permutation& w, DegreeMethod method,
                 std::size_t max_states) {
  if (w.size() > 250) throw budget_error(max_states);
  return method == DegreeMethod::Dp ? dp_degree(w, max_states)
                                    : brute_degree(w);
}

BigInt degree_commuting(int n, DegreeMethod method, std::size_t max_states) {
  return degree_Ew(Permutation::identity(n), method, max_states);
}

std::vector<BigInt> degree_terms(const Permutation& w) {
  int n = w.size();
  std::vector<BigInt> terms;
  enumerate(standard_spec(w), [&](const Gpd& g) {
    terms.push_back(two_pow(g.turn_count() - n));
  });
  std::sort(terms.begin(), terms.end());
  return terms;
}

}  // namespace gpd
