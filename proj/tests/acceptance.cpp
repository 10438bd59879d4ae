// Acceptance gate: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any gating criterion fails.  Criterion 5's n=16 attempt is
// a stretch goal and never gates.  argv[1] = path to the tool binary
// (criterion 9 shells out to it).
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gpd/classes.hpp"
#include "gpd/degree.hpp"
#include "gpd/errors.hpp"
#include "gpd/gpds.hpp"
#include "gpd/perms.hpp"
#include "gpd/schubert.hpp"

using namespace gpd;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << idx << "] " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!ok) ++failures;
}

Polynomial V(VarId v) { return Polynomial::variable(v); }

std::map<VarId, BigInt> counting_point(int n) {
  std::map<VarId, BigInt> at;
  at[VarId::a()] = 1;
  at[VarId::b()] = 1;
  for (int i = 1; i <= n; ++i) {
    at[VarId::x(i)] = 0;
    at[VarId::y(i)] = 0;
  }
  return at;
}

// 1. |GPDs(1243)| = 45 and the five 2431 gpds, tile for tile.
void criterion_counts() {
  bool ok = count(standard_spec(Permutation::parse("1243"))) == 45;
  std::set<std::string> got;
  for (const auto& g : all_gpds(standard_spec(Permutation::parse("2431"))))
    got.insert(render(g));
  const std::set<std::string> want = {
      "caaj\nccj.\ncj..\nj...", "cacj\ncaj.\ncj..\nj...",
      "cajv\ncchj\ncj..\nj...", "cacj\ncjv.\nchj.\nj...",
      "cjvv\nchcj\nchj.\nj..."};
  ok = ok && got == want;
  report(1, "gpd counts and the five 2431 grids", ok);
}

std::vector<Permutation> leading_scope() {
  std::vector<Permutation> ws = all_permutations(3);
  ws.push_back(Permutation::parse("2431"));
  ws.push_back(Permutation::parse("1243"));
  return ws;
}

// 2. leading_form(G_w, B) = (n^2 - l(w), S_w(A+x, y)).
void criterion_b_leading() {
  bool ok = true;
  std::string detail;
  for (const auto& w : leading_scope()) {
    LeadingFormCheck c = verify_b_leading(w);
    if (!c.ok) {
      ok = false;
      detail = "first failure at w=" + w.to_string();
      break;
    }
  }
  report(2, "B-leading forms are the substituted Schubert polynomials", ok,
         detail);
}

// 3. leading_form(G_w, A), with the 4213 anchor for w = 2431.
void criterion_a_leading() {
  bool ok = true;
  std::string detail;
  for (const auto& w : leading_scope()) {
    LeadingFormCheck c = verify_a_leading(w);
    if (!c.ok) {
      ok = false;
      detail = "first failure at w=" + w.to_string();
      break;
    }
  }
  Polynomial anchor = (V(VarId::b()) - V(VarId::x(3)) + V(VarId::y(4))) *
                      (V(VarId::b()) - V(VarId::x(4)) + V(VarId::y(2))) *
                      (V(VarId::b()) - V(VarId::x(4)) + V(VarId::y(3))) *
                      (V(VarId::b()) - V(VarId::x(4)) + V(VarId::y(4)));
  LeadingFormCheck c = verify_a_leading(Permutation::parse("2431"));
  if (!(c.ok && c.got_degree == 12 && c.got_coeff == anchor)) {
    ok = false;
    detail = "2431 anchor mismatch";
  }
  report(3, "A-leading forms via the conjugated Schubert polynomials", ok,
         detail);
}

// 4. (A+B)^n divides G_w for every w in S4.
void criterion_divisibility() {
  bool ok = true;
  std::string detail;
  Polynomial abn = pow(V(VarId::a()) + V(VarId::b()), 4);
  for (const auto& w : all_permutations(4)) {
    try {
      Polynomial cls = exact_div(gpd_polynomial(w), abn);
      if (cls.is_zero()) {
        ok = false;
        detail = "zero quotient at w=" + w.to_string();
        break;
      }
    } catch (const NotDivisible&) {
      ok = false;
      detail = "not divisible at w=" + w.to_string();
      break;
    }
  }
  report(4, "(A+B)^4 divides G_w across S4", ok, detail);
}

// 5. Degrees: pinned n=3 value and multiset, dp = brute on S4, dp at n=6;
//    then the non-gating n=16 stretch.
void criterion_degrees() {
  bool ok = degree_commuting(3) == 31 &&
            degree_terms(Permutation::identity(3)) ==
                std::vector<BigInt>{1, 2, 2, 2, 4, 4, 8, 8};
  std::string detail;
  if (!ok) detail = "n=3 anchor failed";
  for (const auto& w : all_permutations(4)) {
    if (degree_Ew(w, DegreeMethod::Dp) != degree_Ew(w, DegreeMethod::Brute)) {
      ok = false;
      detail = "dp != brute at w=" + w.to_string();
      break;
    }
  }
  try {
    BigInt six = degree_commuting(6, DegreeMethod::Dp);
    if (six <= 0) {
      ok = false;
      detail = "n=6 nonpositive";
    }
  } catch (const InfeasibleSizeError&) {
    ok = false;
    detail = "n=6 exceeded the state budget";
  }
  report(5, "2-enumeration degrees (n=3 anchor, dp=brute, n=6)", ok, detail);

  // stretch: never gates.  walk upward so the largest feasible n is known
  const BigInt n16("815278888095264134748817907969883377273062182100128882631"
                   "9965501665");
  int achieved = 6;
  BigInt last = 0;
  std::string note;
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 7; n <= 16; ++n) {
    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (elapsed > 120) {
      note = "stopped by time guard before n=" + std::to_string(n);
      break;
    }
    try {
      last = degree_commuting(n, DegreeMethod::Dp);
      achieved = n;
    } catch (const InfeasibleSizeError& e) {
      note = "InfeasibleSize at n=" + std::to_string(n) + " (budget " +
             std::to_string(e.states) + " states)";
      break;
    }
  }
  if (achieved == 16) {
    report(5, "stretch: deg C_16 reproduced", last == n16, "non-gating");
    if (last != n16) --failures;  // stretch never gates
  } else {
    std::cout << "INFO  [5] stretch: largest feasible identity rank n="
              << achieved << ", deg=" << last << "; " << note
              << " (non-gating)\n";
  }
}

// 6. The 2x2 partial-permutation CSM, split into homogeneous components.
void criterion_csm_example() {
  Polynomial x1 = V(VarId::x(1)), x2 = V(VarId::x(2));
  Polynomial y1 = V(VarId::y(1)), y2 = V(VarId::y(2));
  Polynomial csm = csm_partial_permutation(PartialPermutation::parse("10/00"));
  auto comps = homogeneous_components(csm);
  bool ok = comps.size() == 3;
  if (ok) {
    ok = comps[0] ==
             std::pair<long long, Polynomial>{1, (x2 - y1) + (x1 - y2)} &&
         comps[1] == std::pair<long long, Polynomial>{
                         2, (x1 - y2) * (x2 - y2) + (x2 - y1) * (x2 - y2)} &&
         comps[2] == std::pair<long long, Polynomial>{
                         3, (x2 - y1) * (x2 - y2) * (x1 - y2)};
  }
  report(6, "2x2 partial-permutation CSM, all homogeneous components", ok);
}

// 7. The beta-root sequence of the six-letter example word.
void criterion_beta_roots() {
  auto z = [](int i) { return V(VarId::z(i)); };
  std::vector<Polynomial> want = {z(3) - z(4), z(3) - z(5), z(2) - z(4),
                                  z(1) - z(4), z(1) - z(2), z(1) - z(5)};
  report(7, "beta roots of 3,4,2,1,2,3 at n=5",
         beta_roots({3, 4, 2, 1, 2, 3}, 5) == want);
}

// 8. The cross-oracle property suites at their stated sizes.
void criterion_property_suites() {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };

  // csm_kl is independent of the chosen reduced word (all v in S4)
  {
    Word q0 = {1, 2, 1, 3, 2, 1};  // reduced word of the longest element
    std::vector<Word> words = reduced_words(Permutation::longest(4));
    for (const auto& v : all_permutations(4)) {
      Polynomial ref = csm_kl(q0, v, 4);
      for (const auto& q : words)
        if (csm_kl(q, v, 4) != ref) {
          fail("csm word-independence at v=" + v.to_string());
          break;
        }
      if (!ok) break;
    }
  }

  // ssm * prod(1 + beta_i) = csm_kl for all words of length <= 6 on {1,2,3}
  if (ok) {
    std::vector<Word> words = {{}};
    for (int len = 1; len <= 6 && ok; ++len) {
      std::vector<Word> next;
      for (const auto& q : words)
        for (int a = 1; a <= 3; ++a) {
          Word qq = q;
          qq.push_back(a);
          next.push_back(qq);
        }
      words = next;
      for (const auto& q : words) {
        if (!ok) break;
        Polynomial den = 1;
        for (const Polynomial& b : beta_roots(q, 4)) den *= b + 1;
        for (const auto& w : all_permutations(4)) {
          RationalFunction lhs = ssm_restriction(q, w, 4) ;
          if (!(lhs * den).equals(RationalFunction(csm_kl(q, w, 4), 1))) {
            fail("ssm identity at |q|=" + std::to_string(len));
            break;
          }
        }
      }
    }
  }

  // double Bruhat = subword oracle over all of S2 x S2
  if (ok) {
    for (const auto& u : all_permutations(2)) {
      for (const auto& v : all_permutations(2)) {
        Polynomial lhs = csm_double_bruhat(u, v);
        Polynomial rhs = csm_kl(cut_deck_word(2), direct_sum(u, v), 4);
        if (lhs != rhs) {
          fail("double Bruhat vs subword at (" + u.to_string() + "," +
               v.to_string() + ")");
          break;
        }
      }
      if (!ok) break;
    }
  }

  // full-permutation specialization check across S3
  if (ok)
    for (const auto& w : all_permutations(3))
      if (!csm_full_perm_check(w)) {
        fail("csm specialization at w=" + w.to_string());
        break;
      }

  // CPD/BPD restriction sums reproduce the leading forms on S3
  if (ok) {
    for (const auto& w : all_permutations(3)) {
      Polynomial cpd_sum, bpd_sum;
      for (const auto& g : all_gpds(standard_spec(w))) {
        Polynomial wt = weight(g, WeightSystem::Equivariant);
        if (is_cpd(g)) cpd_sum += wt;
        if (is_bpd(g)) bpd_sum += wt;
      }
      long long want = 9 - w.length();
      LeadingFormCheck b = verify_b_leading(w);
      LeadingFormCheck a = verify_a_leading(w);
      if (leading_form(cpd_sum, VarId::b()) !=
              std::pair<long long, Polynomial>{want, b.want_coeff} ||
          leading_form(bpd_sum, VarId::a()) !=
              std::pair<long long, Polynomial>{want, a.want_coeff}) {
        fail("restriction sums at w=" + w.to_string());
        break;
      }
    }
  }

  // degree = class at the counting point (S3)
  if (ok)
    for (const auto& w : all_permutations(3))
      if (degree_Ew(w) !=
          evaluate_int(lower_upper_class(w), counting_point(3))) {
        fail("degree vs class at w=" + w.to_string());
        break;
      }

  // motivic_kl is independent of the chosen reduced word (v in S3)
  if (ok) {
    std::vector<Word> words = reduced_words(Permutation::longest(3));
    for (const auto& v : all_permutations(3)) {
      Polynomial ref = motivic_kl({1, 2, 1}, v, 3);
      for (const auto& q : words)
        if (motivic_kl(q, v, 3) != ref) {
          fail("motivic word-independence at v=" + v.to_string());
          break;
        }
      if (!ok) break;
    }
  }

  report(8, "cross-oracle property suites", ok, detail);
}

// 9. Byte-determinism of the tool, including across --threads.
void criterion_determinism(const std::string& tool) {
  auto run = [&](const std::string& args) {
    std::string cmd = "'" + tool + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    if (p) {
      char buf[4096];
      for (size_t got; (got = fread(buf, 1, sizeof buf, p)) > 0;)
        out.append(buf, got);
      pclose(p);
    }
    return out;
  };
  const std::vector<std::string> cases = {
      "gpds --perm 2431", "gpds --perm 1243 --count", "gw --perm 2431",
      "class --perm 12", "schubert --perm 2431", "degree --n 3 --terms",
      "csm --matrix 10/00", "ssm --word 1 --perm 21", "ktheory --perm 21",
      "verify --n 2"};
  bool ok = true;
  std::string detail;
  for (const std::string& c : cases) {
    std::string first = run(c);
    if (first.empty() || first != run(c)) {
      ok = false;
      detail = "unstable: " + c;
      break;
    }
    std::string threaded = run(c + " --threads 2");
    std::string threaded3 = run(c + " --threads 3");
    if (c.find("schubert") == std::string::npos &&
        c.find("degree") == std::string::npos &&
        c.find("ssm") == std::string::npos) {
      if (threaded != first || threaded3 != first) {
        ok = false;
        detail = "thread-dependent: " + c;
        break;
      }
    }
  }
  report(9, "tool output byte-identical across runs and --threads", ok,
         detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-tool>\n";
    return 2;
  }
  criterion_counts();
  criterion_b_leading();
  criterion_a_leading();
  criterion_divisibility();
  criterion_degrees();
  criterion_csm_example();
  criterion_beta_roots();
  criterion_property_suites();
  criterion_determinism(argv[1]);
  if (failures) {
    std::cout << failures << " criterion(s) FAILED\n";
    return 1;
  }
  std::cout << "all acceptance criteria PASSED\n";
  return 0;
}
