#pragma once

// Exhaustive checks of the classification statements for a fixed prime. Each
// check returns a CheckResult; a failure always names a concrete partition.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pblock/abacus.hpp"
#include "pblock/block.hpp"
#include "pblock/hooks.hpp"
#include "pblock/mullineux.hpp"
#include "pblock/partition.hpp"

namespace pblock {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::optional<Partition> counterexample;
  std::string detail;
  double elapsed_ms = 0;
};

/// Collects the first failure of a check and any informational notes.
class Checker {
 public:
  explicit Checker(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  /// Records a failure unless `ok`; returns ok.
  bool expect(bool ok, const Partition& witness, const std::string& what) {
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.counterexample = witness;
      append(what + " at " + to_string(witness));
    }
    return ok;
  }

  void note(const std::string& text) { append(text); }
  bool ok() const { return result_.pass; }

  CheckResult finish() {
    result_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return result_;
  }

 private:
  void append(const std::string& text) {
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += text;
  }

  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

/// Partitions of every n in [0, max_n].
inline std::vector<Partition> partitions_up_to(int max_n) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_n; ++n)
    for (Partition& lambda : partitions_of(n)) out.push_back(std::move(lambda));
  return out;
}

inline std::string set_text(const std::vector<ThreePNotation>& ts) {
  std::string s = "{";
  for (std::size_t k = 0; k < ts.size(); ++k) s += (k ? " " : "") + format_notation(ts[k]);
  return s + "}";
}

// ---------------------------------------------------------------------------
// Irreducibility

/// The quotient JM test passes on the principal block exactly at (3p) and (1^{3p}).
inline CheckResult check_jm_classification(int p) {
  Checker c("jm-classification");
  const Partition row{3 * p};
  const Partition column(std::vector<int>(static_cast<std::size_t>(3 * p), 1));
  for (const Partition& lambda : enumerate_block(principal_block(p))) {
    const bool expected = lambda == row || lambda == column;
    if (!c.expect(is_jm_fayers(lambda, p) == expected, lambda,
                  expected ? "JM test rejects an irreducible label" : "JM test accepts a reducible label"))
      break;
  }
  return c.finish();
}

/// Direct and quotient JM tests agree on all partitions of n <= max_n.
inline CheckResult check_jm_oracles(int p, int max_n) {
  Checker c("jm-oracles");
  for (int n = 0; n <= max_n && c.ok(); ++n)
    for (const Partition& lambda : partitions_of(n))
      if (!c.expect(is_jm_direct(lambda, p) == is_jm_fayers(lambda, p), lambda, "JM tests disagree"))
        break;
  c.note("n <= " + std::to_string(max_n));
  return c.finish();
}

/// Expected irreducible sets of B_i in the standard notation.
inline std::vector<BeadNotation> expected_X(int i, int p) {
  if (i == 2) return {{2, {2, 2}}, {2, {2}}, {2, {1}}, {2, {2, 1}}};
  if (i == p) return {{2, {p, p}}, {2, {p, p - 1}}, {2, {p - 1}}, {2, {p - 1, p - 1}}};
  return {{2, {i, i}}, {2, {i - 1}}, {2, {i, i - 1}}};
}

inline CheckResult check_xi_sets(int p) {
  Checker c("xi-sets");
  for (int i = 2; i <= p && c.ok(); ++i) {
    std::set<Partition> computed;
    for (const Partition& lambda : irreducible_set_X(i, p)) computed.insert(lambda);
    std::set<Partition> expected;
    for (const BeadNotation& t : expected_X(i, p)) expected.insert(from_block_notation(t, i, p));
    for (const Partition& lambda : expected)
      c.expect(computed.count(lambda) == 1, lambda, "X_" + std::to_string(i) + " misses an expected member");
    for (const Partition& lambda : computed)
      c.expect(expected.count(lambda) == 1, lambda, "X_" + std::to_string(i) + " has an extra member");
  }
  return c.finish();
}

// ---------------------------------------------------------------------------
// Shapes in the principal block

inline bool regular_restricted(const Partition& lambda, int p) {
  return is_p_regular(lambda, p) && is_p_restricted(lambda, p);
}

/// The three regular-and-restricted families, read from the notation.
inline bool rr_form(const ThreePNotation& t, int p) {
  const auto& x = t.runners;
  if (x.size() == 2) return x[0] < x[1] && x[1] <= p - 1;
  if (x.size() != 3) return false;
  if (x[0] == x[1] && x[1] == x[2]) return false;
  if (x[0] == x[1] || x[1] == x[2]) {
    const int twice = x[1];
    const int once = x[0] == x[1] ? x[2] : x[0];
    return 2 <= once && once < twice;
  }
  const bool low = x[0] == 3 && x[1] == 2 && x[2] == 1;
  const bool high = x[0] == p && x[1] == p - 1 && x[2] == p - 2;
  return !low && !high;
}

/// Two weight-1 beads on runner i and one on runner j (i != j).
inline Partition double_single(int i, int j, int p) {
  std::vector<int> runners{i, i, j};
  std::sort(runners.begin(), runners.end(), std::greater<>());
  return from_3p_notation({3, runners}, p);
}

inline CheckResult check_prop31(int p) {
  Checker c("prop31");
  const int half = (p + 1) / 2;
  // (1) and (2): every pair of distinct runners.
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= p; ++j) {
      if (i == j) continue;
      const Partition two = angle(p, {i, j});
      c.expect(regular_restricted(two, p) == (i < j && j <= p - 1), two, "clause 1 for <i,j>");
      const Partition three = double_single(i, j, p);
      c.expect(regular_restricted(three, p) == (2 <= j && j < i), three, "clause 2 for <i,i,j>");
    }
  }
  // (3): distinct runners.
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j < i; ++j)
      for (int k = 1; k < j; ++k) {
        const Partition lambda = angle(p, {i, j, k});
        const bool excluded = (i == 3 && j == 2 && k == 1) || (i == p && j == p - 1 && k == p - 2);
        c.expect(regular_restricted(lambda, p) == !excluded, lambda, "clause 3 for <i,j,k>");
      }
  int printed_misses = 0;
  for (const Partition& lambda : enumerate_block(principal_block(p))) {
    const ThreePNotation t = to_3p_notation(lambda, p);
    const auto& x = t.runners;
    const bool regular = is_p_regular(lambda, p);
    const bool restricted = is_p_restricted(lambda, p);
    const bool hook = is_hook(lambda);
    c.expect(regular_restricted(lambda, p) == rr_form(t, p), lambda, "clause 4");
    // (5) with the middle runner (p+1)/2 and outer runners summing to p+1.
    bool self_form = x.size() == 2 && x[0] == half && x[1] == half;
    bool printed_form = self_form;
    for (int m = 1; m <= (p - 1) / 2; ++m) {
      self_form = self_form || t == ThreePNotation{3, {p + 1 - m, half, m}};
      printed_form = printed_form || t == ThreePNotation{3, {p - m, half, m}};
    }
    const bool self_conjugate = conjugate(lambda) == lambda;
    c.expect(self_conjugate == self_form, lambda, "clause 5");
    if (self_conjugate != printed_form) ++printed_misses;
    // (6)
    const bool double_hook = x.size() == 2 && x[0] == x[1];
    c.expect((!regular && !restricted) == double_hook, lambda, "clause 6");
    if (double_hook) {
      std::vector<int> parts{p + x[0]};
      parts.insert(parts.end(), static_cast<std::size_t>(2 * p - x[0]), 1);
      c.expect(lambda == Partition(parts), lambda, "clause 6 shape (p+i,1^{2p-i})");
    }
    // (7)
    const bool hook_form = x.size() == 1 || double_hook || (x.size() == 3 && x[0] == x[1] && x[1] == x[2]);
    c.expect(hook == hook_form, lambda, "clause 7");
    // (8)
    const bool form8 = (x.size() == 2 && x[1] == p && x[0] <= p - 1) ||
                       (x.size() == 2 && x[1] < x[0]) || t == ThreePNotation{3, {p, p - 1, p - 2}};
    c.expect((regular && !restricted && !hook) == form8, lambda, "clause 8");
    c.expect(classify_3p(t, p) == classify_partition(lambda, p), lambda, "notation classifier");
  }
  if (printed_misses > 0)
    c.note("self-conjugate outer runners sum to p+1; the form <p-m,(p+1)/2,m> misclassifies " +
           std::to_string(printed_misses) + " partitions");
  return c.finish();
}

inline CheckResult check_prop212(int p) {
  Checker c("prop212");
  auto both = [&](const Partition& lambda, int want_tau, int want_tau_p, const std::string& clause) {
    c.expect(tau(lambda) == want_tau, lambda, clause + " tau");
    c.expect(tau_p(lambda, p) == want_tau_p, lambda, clause + " tau_p");
  };
  for (int i = 1; i <= p - 1; ++i) {
    const bool edge = i == 1 || i == p - 1;
    both(angle(p, {i, p}), edge ? 2 : 3, edge ? 1 : 2, "clause 1");
  }
  for (int i = 2; i <= p; ++i) both(angle(p, {i, 1}), i >= 3 ? 3 : 2, 1, "clause 2");
  for (int j = 2; j <= p - 1; ++j) both(angle(p, {j + 1, j}), j == p - 1 ? 2 : 3, 2, "clause 3");
  for (int i = 4; i <= p; ++i)
    for (int j = 2; j <= i - 2; ++j) both(angle(p, {i, j}), i == p ? 3 : 4, 2, "clause 4");
  {
    const Partition low = angle(p, {2, 1});
    c.note("at j=1, <2,1> has tau=" + std::to_string(tau(low)) + " tau_p=" + std::to_string(tau_p(low, p)));
  }
  for (const Partition& lambda : enumerate_block(principal_block(p))) {
    if (!is_p_regular(lambda, p)) continue;
    const int normal = tau_p(lambda, p);
    if (p == 5) {
      c.expect(normal <= 2, lambda, "clause 5a");
      continue;
    }
    const auto& x = to_3p_notation(lambda, p).runners;
    const bool spread = x.size() == 3 && x[0] > x[1] && x[1] > x[2] && x[2] >= 2 &&
                        x[0] - x[1] >= 2 && x[1] - x[2] >= 2;
    c.expect(spread ? normal == 3 : normal <= 2, lambda, "clause 5b");
  }
  return c.finish();
}

/// Node removal into weight 2 keeping both properties, and normality away from <1,2>.
inline CheckResult check_lemma34(int p) {
  Checker c("lemma34");
  const Partition exception = angle(p, {1, 2});
  for (const Partition& lambda : enumerate_block(principal_block(p))) {
    if (!regular_restricted(lambda, p)) continue;
    const auto normal = normal_nodes(lambda, p);
    bool any = false, any_normal = false;
    for (const Node& a : removable_nodes(lambda)) {
      const Partition smaller = remove_node(lambda, a);
      if (p_weight(smaller, p) != 2 || !regular_restricted(smaller, p)) continue;
      any = true;
      if (std::find(normal.begin(), normal.end(), a) != normal.end()) any_normal = true;
    }
    c.expect(any, lambda, "no removable node into weight 2");
    c.expect(any_normal == (lambda != exception), lambda,
             lambda == exception ? "<1,2> has a suitable normal node" : "no suitable normal node");
    if (lambda != exception) {
      bool in_some = false;
      for (int i = 2; i <= p; ++i) in_some = in_some || in_Lambda(lambda, i, p);
      c.expect(in_some, lambda, "not in any Lambda_i with i >= 2");
    }
  }
  return c.finish();
}

// ---------------------------------------------------------------------------
// Mullineux map and parity

inline std::string symbol_text(const MullineuxSymbol& g) {
  std::string s = "(";
  for (std::size_t k = 0; k < g.a.size(); ++k) s += (k ? "," : "") + std::to_string(g.a[k]);
  s += ";";
  for (std::size_t k = 0; k < g.r.size(); ++k) s += (k ? "," : "") + std::to_string(g.r[k]);
  return s + ")";
}

/// Worked symbols and images for this prime.
inline CheckResult check_mullineux_examples(int p) {
  Checker c("mullineux-examples");
  const Partition lambda = angle(p, {p, p - 1, p - 3});
  const MullineuxSymbol g = mullineux_symbol(lambda, p);
  c.expect(g == MullineuxSymbol{{p + 1, p, p - 1}, {4, 3, 3}}, lambda, "symbol " + symbol_text(g));
  const MullineuxSymbol image = mullineux_image_symbol(g, p);
  c.expect(image == MullineuxSymbol{{p + 1, p, p - 1}, {p - 2, p - 3, p - 3}}, lambda,
           "image symbol " + symbol_text(image));
  const Partition expected = p == 5 ? angle(p, {3, 5}) : angle(p, {6, 5, 3});
  c.expect(mullineux(lambda, p) == expected, lambda, "image partition");
  if (p == 5) {
    const Partition low = angle(5, {3, 5});
    c.expect(mullineux_symbol(low, 5) == MullineuxSymbol{{6, 5, 4}, {3, 2, 2}}, low, "symbol of <3,5>");
    const Partition stair{5, 4, 3, 2, 1};
    c.expect(mullineux(stair, 5) == Partition{7, 5, 2, 1}, stair, "image of (5,4,3,2,1)");
    const std::vector<Partition> e{{8, 6, 1}, {6, 6, 1, 1, 1}, {6, 4, 2, 2, 1},
                                   {5, 5, 5},  {5, 5, 3, 1, 1}, {5, 4, 4, 2}};
    const std::set<Partition> me{{5, 5, 4, 1}, {7, 4, 2, 2}, {6, 5, 2, 1, 1},
                                 {9, 6},       {8, 5, 2},    {7, 6, 1, 1}};
    std::set<Partition> images;
    for (const Partition& x : e) images.insert(mullineux(x, 5));
    for (const Partition& x : e)
      c.expect(me.count(mullineux(x, 5)) == 1, x, "E-set image outside the listed set");
    c.expect(images == me, e.front(), "E-set images do not cover the listed set");
  }
  return c.finish();
}

/// m(m(lambda)) = lambda, size and regularity preserved, on n <= max_n.
inline CheckResult check_mullineux_involution(int p, int max_n) {
  Checker c("mullineux-involution");
  for (int n = 0; n <= max_n && c.ok(); ++n)
    for (const Partition& lambda : partitions_of(n)) {
      if (!is_p_regular(lambda, p)) continue;
      const Partition image = mullineux(lambda, p);
      if (!c.expect(image.size() == n && is_p_regular(image, p) && mullineux(image, p) == lambda, lambda,
                    "not an involution"))
        break;
    }
  c.note("n <= " + std::to_string(max_n));
  return c.finish();
}

/// Good-node compatibility on the regular partitions of the principal block.
inline CheckResult check_good_nodes(int p) {
  Checker c("good-node-compatibility");
  int skipped = 0;
  for (const Partition& lambda : enumerate_block(principal_block(p))) {
    if (!is_p_regular(lambda, p)) continue;
    const auto r = good_node_compatibility(lambda, p);
    skipped += r.skipped;
    c.expect(r.holds, lambda, "no matching good node in the image");
  }
  c.note(std::to_string(skipped) + " good nodes skipped with a p-singular remainder");
  return c.finish();
}

inline CheckResult check_mullineux_conformance(int p) {
  Checker c("mullineux-conformance");
  for (const CheckResult& part :
       {check_mullineux_examples(p), check_mullineux_involution(p, 25), check_good_nodes(p)}) {
    if (part.counterexample) c.expect(part.pass, *part.counterexample, part.name + ": " + part.detail);
    else if (!part.detail.empty()) c.note(part.name + ": " + part.detail);
  }
  return c.finish();
}

/// Parity flips under m on the regular partitions of the principal block.
inline CheckResult check_parity_flip(int p) {
  Checker c("parity-flip");
  for (const Partition& lambda : enumerate_block(principal_block(p))) {
    if (!is_p_regular(lambda, p)) continue;
    c.expect(parity(mullineux(lambda, p), p).sign != parity(lambda, p).sign, lambda,
             "m preserves parity");
  }
  return c.finish();
}

/// Parity equals that of the conjugate and does not depend on the order of
/// removal (`orders` random orders per partition, fixed seed).
inline CheckResult check_parity_invariance(int p, int max_n, int orders, std::uint32_t seed = 20240601u) {
  Checker c("parity-invariance");
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  };
  for (int n = 0; n <= max_n && c.ok(); ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const Parity base = parity(lambda, p);
      c.expect(base.sign == parity(conjugate(lambda), p).sign, lambda, "parity differs from the conjugate");
      for (int k = 0; k < orders; ++k)
        c.expect(parity_along(lambda, p, pick).sign == base.sign, lambda, "parity depends on removal order");
      if (!c.ok()) break;
    }
  c.note("n <= " + std::to_string(max_n) + ", " + std::to_string(orders) + " random orders each");
  return c.finish();
}

// ---------------------------------------------------------------------------
// Restriction to the blocks B_i

/// Members of Lambda_i, decreasing.
inline std::vector<Partition> lambda_set(int i, int p) {
  std::vector<Partition> out;
  for (Partition& lambda : enumerate_block(principal_block(p)))
    if (is_p_regular(lambda, p) && in_Lambda(lambda, i, p)) out.push_back(std::move(lambda));
  return out;
}

/// The table of images under Theta in the shifted notation.
inline CheckResult check_theta_values(int p) {
  Checker c("theta-values");
  auto expect_image = [&](const Partition& lambda, int s, const BeadNotation& want) {
    const Partition image = theta(lambda, s, p);
    const BeadNotation got = to_block_notation(image, s, p, BlockStyle::Shifted);
    c.expect(got == want, lambda,
             "Theta_" + std::to_string(s) + " gives " + format_notation(got) + ", expected " + format_notation(want));
  };
  for (int i = 3; i <= p - 1; ++i) {
    const Partition lambda = angle(p, {i, 1});
    expect_image(lambda, 2, {2, {i - 1}});
    expect_image(lambda, i, {2, {p, p - i + 2}});
    expect_image(lambda, i + 1, {2, {p, p - i + 1}});
  }
  for (int i = 4; i <= p - 1; ++i)
    for (int j = 2; j <= i - 2; ++j) {
      const Partition lambda = angle(p, {i, j});
      expect_image(lambda, j, {2, {i - j + 1}});
      expect_image(lambda, j + 1, {2, {i - j}});
      expect_image(lambda, i, {2, {p, p - (i - j) + 1}});
      expect_image(lambda, i + 1, {2, {p, p - (i - j)}});
    }
  return c.finish();
}

/// Theta_i is strictly increasing on Lambda_i and lands in B_i.
inline CheckResult check_theta_monotone(int p) {
  Checker c("theta-monotone");
  for (int i = 1; i <= p && c.ok(); ++i) {
    const auto members = lambda_set(i, p);
    const BlockLabel target = weight2_block(i, p);
    std::vector<Partition> images;
    for (const Partition& lambda : members) {
      images.push_back(theta(lambda, i, p));
      c.expect(in_block(images.back(), target), lambda, "Theta_" + std::to_string(i) + " leaves B_i");
    }
    for (std::size_t k = 0; k + 1 < members.size(); ++k)
      c.expect(images[k] > images[k + 1], members[k], "Theta_" + std::to_string(i) + " not increasing");
  }
  return c.finish();
}

/// Singularity is preserved by Theta_i on Lambda_i. The same comparison on
/// every partition with a removable bead on runner i is reported as a note.
inline CheckResult check_theta_singularity(int p) {
  Checker c("theta-singularity");
  int wider = 0;
  std::string first;
  for (const Partition& lambda : enumerate_block(principal_block(p))) {
    for (int i = 1; i <= p; ++i) {
      if (removable_beads_on(lambda, i, p).empty()) continue;
      const bool same = is_p_regular(lambda, p) == is_p_regular(theta(lambda, i, p), p);
      if (is_p_regular(lambda, p) && in_Lambda(lambda, i, p))
        c.expect(same, lambda, "Theta_" + std::to_string(i) + " changes singularity");
      if (!same && ++wider == 1) first = to_string(lambda) + " via runner " + std::to_string(i);
    }
  }
  if (wider > 0)
    c.note("outside Lambda_i singularity changes in " + std::to_string(wider) + " cases, first " + first);
  return c.finish();
}

inline CheckResult check_theta_table(int p) {
  Checker c("theta-table");
  for (const CheckResult& part : {check_theta_values(p), check_theta_monotone(p), check_theta_singularity(p)}) {
    if (part.counterexample) c.expect(part.pass, *part.counterexample, part.name + ": " + part.detail);
    else if (!part.detail.empty()) c.note(part.name + ": " + part.detail);
  }
  return c.finish();
}

/// Top and bottom partners of each member of X_i, in principal-block notation.
inline std::vector<std::pair<BeadNotation, std::pair<ThreePNotation, ThreePNotation>>> expected_filtrations(
    int i, int p) {
  using T = ThreePNotation;
  if (i == 2)
    return {{{2, {2, 2}}, {T{3, {2, 2, 2}}, T{3, {1, 1, 1}}}},
            {{2, {2}}, {T{3, {2, 2, 1}}, T{3, {2, 1, 1}}}},
            {{2, {1}}, {T{3, {2}}, T{3, {1}}}},
            {{2, {2, 1}}, {T{3, {2, 2}}, T{3, {1, 1}}}}};
  if (i == p)
    return {{{2, {p, p}}, {T{3, {p, p, p}}, T{3, {p - 1, p - 1, p - 1}}}},
            {{2, {p, p - 1}}, {T{3, {p, p}}, T{3, {p - 1, p - 1}}}},
            {{2, {p - 1}}, {T{3, {p}}, T{3, {p - 1}}}},
            {{2, {p - 1, p - 1}}, {T{3, {p, p - 1}}, T{3, {p - 1, p}}}}};
  return {{{2, {i, i}}, {T{3, {i, i, i}}, T{3, {i - 1, i - 1, i - 1}}}},
          {{2, {i - 1}}, {T{3, {i}}, T{3, {i - 1}}}},
          {{2, {i, i - 1}}, {T{3, {i, i}}, T{3, {i - 1, i - 1}}}}};
}

/// Partner counts (2 through B_i for i >= 2, 3 through B_1), the smaller
/// partner of <p,p-1>, and the filtrations of the irreducible members of B_i.
inline CheckResult check_partner_counts(int p) {
  Checker c("partner-counts");
  for (int i = 1; i <= p; ++i) {
    const std::size_t want = i == 1 ? 3 : 2;
    for (const Partition& reduced : enumerate_block(weight2_block(i, p))) {
      const auto ps = partners(reduced, i, p);
      c.expect(ps.size() == want, reduced, "B_" + std::to_string(i) + " has " + std::to_string(ps.size()) + " partners");
      for (const Partition& lambda : ps)
        c.expect(theta(lambda, i, p) == reduced, lambda, "partner does not restrict back");
    }
  }
  const Partition top = angle(p, {p, p - 1});
  const auto low = sigma(top, p, p);
  c.expect(low && *low == angle(p, {p - 1, p}), top, "sigma_p(<p,p-1>) is not <p-1,p>");
  for (int i = 2; i <= p; ++i)
    for (const auto& [reduced, pair] : expected_filtrations(i, p)) {
      const Partition base = from_block_notation(reduced, i, p);
      const auto ps = partners(base, i, p);
      const std::vector<Partition> want{from_3p_notation(pair.first, p), from_3p_notation(pair.second, p)};
      c.expect(ps == want, base, "filtration of " + format_notation(reduced) + " in B_" + std::to_string(i));
    }
  return c.finish();
}

// ---------------------------------------------------------------------------
// Loewy lengths

inline CheckResult check_loewy_partition(int p) {
  Checker c("loewy-partition");
  const auto block = enumerate_block(principal_block(p));
  std::map<int, std::set<Partition>> classes;
  for (const Partition& lambda : block) {
    const int len = loewy_length(lambda, p).length;
    c.expect(len >= 1 && len <= 4, lambda, "class out of range");
    classes[len].insert(lambda);
    c.expect(loewy_length(conjugate(lambda), p).length == len, lambda, "class differs from the conjugate");
  }
  std::size_t total = 0;
  for (const auto& [len, members] : classes) total += members.size();
  c.expect(total == block.size(), block.front(), "classes do not cover the block");

  const std::set<Partition> ones{Partition{3 * p}, Partition(std::vector<int>(static_cast<std::size_t>(3 * p), 1))};
  for (const Partition& lambda : block)
    c.expect(ones.count(lambda) == classes[1].count(lambda), lambda, "class 1 differs from {(3p),(1^3p)}");

  const auto t = loewy_two_set(p);
  std::set<Partition> two;
  for (const ThreePNotation& x : t) two.insert(from_3p_notation(x, p));
  c.expect(two.size() == t.size(), block.front(), "the pieces of T overlap");
  for (const Partition& lambda : block)
    c.expect(two.count(lambda) == classes[2].count(lambda), lambda, "class 2 differs from T");

  for (const Partition& lambda : block) {
    const ThreePNotation x = to_3p_notation(lambda, p);
    c.expect(rr_form(x, p) == (classes[4].count(lambda) == 1), lambda, "class 4 differs from the regular-restricted forms");
    const bool regular = is_p_regular(lambda, p), restricted = is_p_restricted(lambda, p);
    const bool three = !is_hook(lambda) &&
                       ((regular && !restricted && x != ThreePNotation{3, {p, p - 1}} &&
                         x != ThreePNotation{3, {p - 1, p}}) ||
                        (!regular && restricted && x != ThreePNotation{3, {2, 1, 1}} &&
                         x != ThreePNotation{3, {2, 2, 1}}));
    c.expect(three == (classes[3].count(lambda) == 1), lambda, "class 3 differs from its characterization");
  }
  const Partition corner = angle(p, {p, p - 1, p - 2});
  c.expect(loewy_length(corner, p).length == 3, corner, "<p,p-1,p-2> not in class 3");
  if (p == 5) {
    const Partition stair{5, 4, 3, 2, 1};
    c.expect(loewy_length(stair, 5).length == 4, stair, "(5,4,3,2,1) not in class 4");
  }
  c.note("sizes " + std::to_string(classes[1].size()) + "/" + std::to_string(classes[2].size()) + "/" +
         std::to_string(classes[3].size()) + "/" + std::to_string(classes[4].size()));
  return c.finish();
}

// ---------------------------------------------------------------------------
// Abacus against node combinatorics

/// Bead moves against node and hook removal, normal beads against normal
/// nodes, and bead-count independence of core, weight and quotient.
inline CheckResult check_abacus_nodes(int p, int max_n) {
  Checker c("abacus-nodes");
  for (int n = 0; n <= max_n && c.ok(); ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const int r = default_bead_count(lambda, p);
      const AbacusDisplay d = AbacusDisplay::from_partition(lambda, p, r);
      c.expect(d.to_partition() == lambda, lambda, "display does not decode");
      std::vector<Node> from_beads;
      for (int m : removable_beads(d)) {
        const Node a = node_of_bead(d, m);
        from_beads.push_back(a);
        c.expect(d.push_left(m).to_partition() == remove_node(lambda, a), lambda, "left move is not node removal");
        c.expect(residue(a, p) == runner_of(m, p) - 1, lambda, "node residue is not runner minus one");
      }
      std::sort(from_beads.begin(), from_beads.end());
      c.expect(from_beads == removable_nodes(lambda), lambda, "removable beads and nodes differ");
      std::vector<Node> normal;
      for (int m : normal_beads(d)) normal.push_back(node_of_bead(d, m));
      std::sort(normal.begin(), normal.end());
      c.expect(normal == normal_nodes(lambda, p), lambda, "normal beads and nodes differ");
      for (int m : d.beads())
        if (m > p && !d.occupied(m - p)) {
          const Partition up = d.push_up(m).to_partition();
          bool listed = false;
          for (const auto& h : rim_hook_removals(lambda, p)) listed = listed || h.result == up;
          c.expect(listed && up.size() == n - p, lambda, "up move is not a rim hook removal");
        }
      const auto q1 = p_quotient(lambda, p, r).components;
      const auto q2 = p_quotient(lambda, p, r + p).components;
      std::multiset<Partition> m1(q1.begin(), q1.end()), m2(q2.begin(), q2.end());
      c.expect(m1 == m2, lambda, "quotient multiset depends on the bead count");
      c.expect(pushed_up(d).to_partition() == pushed_up(AbacusDisplay::from_partition(lambda, p, r + p)).to_partition(),
               lambda, "core depends on the bead count");
      c.expect(p_quotient(lambda, p, r).size() == p_weight(lambda, p), lambda, "quotient size is not the weight");
      if (!c.ok()) break;
    }
  }
  c.note("n <= " + std::to_string(max_n));
  return c.finish();
}

inline CheckResult check_oracle_equivalence(int p) {
  Checker c("oracle-equivalence");
  for (const CheckResult& part : {check_jm_oracles(p, 28), check_abacus_nodes(p, 25)}) {
    if (part.counterexample) c.expect(part.pass, *part.counterexample, part.name + ": " + part.detail);
    else if (!part.detail.empty()) c.note(part.name + ": " + part.detail);
  }
  return c.finish();
}

// ---------------------------------------------------------------------------

inline const std::map<std::string, std::function<CheckResult(int)>>& named_checks() {
  static const std::map<std::string, std::function<CheckResult(int)>> checks{
      {"jm-classification", check_jm_classification},
      {"xi-sets", check_xi_sets},
      {"prop31", check_prop31},
      {"prop212", check_prop212},
      {"lemma34", check_lemma34},
      {"mullineux-conformance", check_mullineux_conformance},
      {"parity-flip",
       [](int p) {
         Checker c("parity-flip");
         for (const CheckResult& part : {check_parity_flip(p), check_parity_invariance(p, 25, 20)}) {
           if (part.counterexample) c.expect(part.pass, *part.counterexample, part.name + ": " + part.detail);
           else if (!part.detail.empty()) c.note(part.name + ": " + part.detail);
         }
         return c.finish();
       }},
      {"theta-table", check_theta_table},
      {"partner-counts", check_partner_counts},
      {"loewy-partition", check_loewy_partition},
      {"oracle-equivalence", check_oracle_equivalence},
  };
  return checks;
}

/// Runs the named checks (all when `names` is empty), ordered by name.
inline std::vector<CheckResult> run_checks(int p, const std::vector<std::string>& names = {}) {
  const auto& checks = named_checks();
  std::vector<std::string> chosen = names;
  if (chosen.empty())
    for (const auto& [name, fn] : checks) chosen.push_back(name);
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  std::vector<CheckResult> out;
  for (const std::string& name : chosen) {
    auto it = checks.find(name);
    if (it == checks.end()) throw std::invalid_argument("unknown check '" + name + "'");
    out.push_back(it->second(p));
  }
  return out;
}

}  // namespace pblock
