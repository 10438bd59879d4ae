#pragma once

#include <cstddef>
#include <vector>

#include "gpd/bigint.hpp"
#include "gpd/errors.hpp"
#include "gpd/perms.hpp"

namespace gpd {

enum class DegreeMethod { Brute, Dp };

inline constexpr std::size_t kDefaultMaxStates = 4'000'000;

// deg E_w = sum over gpds of w of 2^(turn tiles - n).
//
// Brute walks the enumerator.  Dp scans squares in the same bottom-row-first
// order but memoizes on the frontier: the north edge labels of the last
// filled square in each column plus the pending east edge, mapped to the
// running sum of 2^turns.  Both methods agree; Dp exists for identity
// boundaries past brute reach (n = 6 comfortably; far beyond that the state
// count grows like n! and the budget trips).
BigInt degree_Ew(const Permutation& w, DegreeMethod method = DegreeMethod::Brute,
                 std::size_t max_states = kDefaultMaxStates);

// Degree of the variety of commuting pairs of n-square matrices; equals
// degree_Ew at the identity of S_n.
BigInt degree_commuting(int n, DegreeMethod method = DegreeMethod::Brute,
                        std::size_t max_states = kDefaultMaxStates);

// The individual 2-powers, ascending.  Brute only.
std::vector<BigInt> degree_terms(const Permutation& w);

}  // namespace gpd
