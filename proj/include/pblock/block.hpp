#pragma once

// Blocks of weight at most 3 around the principal block of the symmetric group
// on 3p letters: bead notation, enumeration, classification by notation,
// restriction maps to the weight-2 blocks B_i and the Loewy-length classifier.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pblock/abacus.hpp"
#include "pblock/hooks.hpp"
#include "pblock/partition.hpp"

namespace pblock {

/// Bead placement relative to a fixed display. The bead weights follow from
/// the number of runners listed and the total weight w: one runner carries a
/// bead of weight w; w runners carry beads of weight 1 (listed in decreasing
/// order); two runners with w = 3 carry weights 2 and 1 in that order.
struct BeadNotation {
  int weight = 0;
  std::vector<int> runners;

  friend bool operator==(const BeadNotation&, const BeadNotation&) = default;
  friend auto operator<=>(const BeadNotation&, const BeadNotation&) = default;
};

/// The notation of the principal block, on the display with three beads per
/// runner.
using ThreePNotation = BeadNotation;

inline std::vector<int> bead_weights(int weight, std::size_t count) {
  if (count == 1) return {weight};
  if (static_cast<int>(count) == weight) return std::vector<int>(count, 1);
  if (count == 2 && weight == 3) return {2, 1};
  throw std::invalid_argument("bead notation supports weights up to 3");
}

inline std::string format_notation(const BeadNotation& t) {
  std::string s = "<";
  for (std::size_t k = 0; k < t.runners.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(t.runners[k]);
  }
  return s + ">";
}

/// Accepts "<6,3>", "⟨6,3⟩" or "6,3". The weight is supplied by the caller.
inline BeadNotation parse_notation(std::string_view text, int weight) {
  std::string s(text);
  for (std::string_view bracket : {"⟨", "⟩"})
    for (auto at = s.find(bracket); at != std::string::npos; at = s.find(bracket))
      s.erase(at, bracket.size());
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '<' || c == '>' || c == ' '; }),
          s.end());
  BeadNotation t{weight, {}};
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string token = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad notation '" + std::string(text) + "'");
    t.runners.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  bead_weights(weight, t.runners.size());
  return t;
}

/// Per-runner bead weights of a display read against its pushed-up form: on
/// each runner, bottom bead first, the number of empty positions above it.
/// Unlike p_quotient this does not need p to divide the bead count.
inline std::vector<Partition> runner_quotient(const AbacusDisplay& d) {
  const int p = d.p();
  std::vector<Partition> out;
  for (int runner = 1; runner <= p; ++runner) {
    std::vector<int> parts;
    int beads_above = d.beads_on_runner(runner, 1, d.last_row());
    for (int m : d.beads()) {
      if (runner_of(m, p) != runner) continue;
      --beads_above;
      parts.push_back(row_of(m, p) - 1 - beads_above);
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

/// Notation of lambda on the display with r beads.
inline BeadNotation encode_notation(const Partition& lambda, int p, int r) {
  const auto quotient = runner_quotient(AbacusDisplay::from_partition(lambda, p, r));
  struct Bead {
    int weight;
    int runner;
  };
  std::vector<Bead> beads;
  for (int runner = 1; runner <= p; ++runner)
    for (int w : quotient[static_cast<std::size_t>(runner - 1)].parts()) beads.push_back({w, runner});
  std::sort(beads.begin(), beads.end(), [](const Bead& x, const Bead& y) {
    return x.weight != y.weight ? x.weight > y.weight : x.runner > y.runner;
  });
  BeadNotation t;
  for (const Bead& b : beads) {
    t.weight += b.weight;
    t.runners.push_back(b.runner);
  }
  if (t.runners.empty()) return t;
  if (bead_weights(t.weight, t.runners.size()) !=
      [&] {
        std::vector<int> ws;
        for (const Bead& b : beads) ws.push_back(b.weight);
        return ws;
      }())
    throw std::invalid_argument("bead weights have no short notation");
  return t;
}

/// Inverse of encode_notation for a block with the given core.
inline Partition decode_notation(const BeadNotation& t, const Partition& core, int p, int r) {
  std::vector<std::vector<int>> per_runner(static_cast<std::size_t>(p));
  if (!t.runners.empty()) {
    const auto weights = bead_weights(t.weight, t.runners.size());
    for (std::size_t k = 0; k < t.runners.size(); ++k) {
      const int runner = t.runners[k];
      if (runner < 1 || runner > p) throw std::invalid_argument("runner out of range");
      per_runner[static_cast<std::size_t>(runner - 1)].push_back(weights[k]);
    }
  }
  std::vector<Partition> quotient;
  for (auto& ws : per_runner) {
    std::sort(ws.begin(), ws.end(), std::greater<>());
    quotient.emplace_back(ws);
  }
  return display_from_quotient(core, p, r, quotient).to_partition();
}

/// A block given by its p-core and weight.
struct BlockLabel {
  int p = 0;
  Partition core;
  int weight = 0;

  int degree() const { return core.size() + p * weight; }
  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

/// Empty core, weight 3.
inline BlockLabel principal_block(int p) { return {p, {}, 3}; }

/// For 2 <= i <= p: core (i-1, 1^{p-i}) and weight 2. For i = 1: core
/// (p, 1^{p-1}) and weight 1.
inline BlockLabel weight2_block(int i, int p) {
  if (i < 1 || i > p) throw std::invalid_argument("block index must lie in [1, p]");
  std::vector<int> core;
  if (i == 1) {
    core.push_back(p);
    core.insert(core.end(), static_cast<std::size_t>(p - 1), 1);
    return {p, Partition(core), 1};
  }
  core.push_back(i - 1);
  core.insert(core.end(), static_cast<std::size_t>(p - i), 1);
  return {p, Partition(core), 2};
}

inline bool in_block(const Partition& lambda, const BlockLabel& b) {
  return lambda.size() == b.degree() && p_core(lambda, b.p) == b.core;
}

namespace detail {

/// All ways to write `total` as a p-tuple of partitions.
inline void quotient_tuples(int p, int total, std::vector<Partition>& cur,
                            const std::function<void(const std::vector<Partition>&)>& emit) {
  if (static_cast<int>(cur.size()) == p) {
    if (total == 0) emit(cur);
    return;
  }
  for (int size = total; size >= 0; --size) {
    for (const Partition& part : partitions_of(size)) {
      cur.push_back(part);
      quotient_tuples(p, total - size, cur, emit);
      cur.pop_back();
    }
  }
}

}  // namespace detail

/// Every partition in the block, built from its quotients and sorted
/// lexicographically decreasing.
inline std::vector<Partition> enumerate_block(const BlockLabel& b) {
  const int p = b.p;
  const int n = b.degree();
  const int r = (std::max(n, b.core.length()) + p - 1) / p * p;
  const AbacusDisplay base = pushed_up(AbacusDisplay::from_partition(b.core, p, r));
  std::vector<Partition> out;
  std::vector<Partition> cur;
  detail::quotient_tuples(p, b.weight, cur, [&](const std::vector<Partition>& q) {
    for (int runner = 1; runner <= p; ++runner)
      if (q[static_cast<std::size_t>(runner - 1)].length() >
          base.beads_on_runner(runner, 1, base.last_row()))
        return;
    out.push_back(display_from_quotient(b.core, p, r, q).to_partition());
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline void require_principal(const Partition& lambda, int p) {
  if (!in_block(lambda, principal_block(p)))
    throw std::invalid_argument("partition " + to_string(lambda) + " is not in the principal block");
}

inline ThreePNotation to_3p_notation(const Partition& lambda, int p) {
  require_principal(lambda, p);
  return encode_notation(lambda, p, 3 * p);
}

inline Partition from_3p_notation(const ThreePNotation& t, int p) {
  if (t.weight != 3) throw std::invalid_argument("principal block notation has weight 3");
  return decode_notation(t, {}, p, 3 * p);
}

/// Displays for B_i: Standard keeps 3p beads (runner counts 3^{i-2},4,2,3^{p-i});
/// Shifted uses 3p-i+1 beads (runner counts 2,3^{p-i},2^{i-2},3).
enum class BlockStyle { Standard, Shifted };

inline int block_bead_count(int i, int p, BlockStyle style) {
  if (style == BlockStyle::Shifted) {
    if (i < 2) throw std::invalid_argument("shifted notation needs 2 <= i <= p");
    return 3 * p - i + 1;
  }
  return 3 * p;
}

inline void require_weight2_block(const Partition& lambda, int i, int p) {
  if (!in_block(lambda, weight2_block(i, p)))
    throw std::invalid_argument("partition " + to_string(lambda) + " is not in block B" +
                                std::to_string(i));
}

inline BeadNotation to_block_notation(const Partition& lambda, int i, int p,
                                      BlockStyle style = BlockStyle::Standard) {
  require_weight2_block(lambda, i, p);
  return encode_notation(lambda, p, block_bead_count(i, p, style));
}

inline Partition from_block_notation(const BeadNotation& t, int i, int p,
                                     BlockStyle style = BlockStyle::Standard) {
  const BlockLabel b = weight2_block(i, p);
  if (t.weight != b.weight) throw std::invalid_argument("notation weight does not match the block");
  return decode_notation(t, b.core, p, block_bead_count(i, p, style));
}

/// Shorthand for building principal-block notation in code.
inline Partition angle(int p, std::initializer_list<int> runners) {
  return from_3p_notation({3, std::vector<int>(runners)}, p);
}

struct Classification {
  bool p_regular = false;
  bool p_restricted = false;
  bool self_conjugate = false;
  bool hook = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Read off the notation alone: which forms are regular, restricted,
/// self-conjugate or hooks.
inline Classification classify_3p(const ThreePNotation& t, int p) {
  const auto& x = t.runners;
  Classification c;
  const int half = (p + 1) / 2;
  if (x.size() == 1) {
    c.p_regular = true;
    c.hook = true;
  } else if (x.size() == 2) {
    const int i = x[0], j = x[1];
    if (i == j) {
      c.hook = true;
      c.self_conjugate = i == half;
    } else {
      c.p_regular = true;
      c.p_restricted = i < j && j <= p - 1;
    }
  } else {
    const int i = x[0], j = x[1], k = x[2];
    if (i == j && j == k) {
      c.p_restricted = true;
      c.hook = true;
    } else if (i == j || j == k) {
      const int twice = j;
      const int once = i == j ? k : i;
      c.p_restricted = true;
      c.p_regular = 2 <= once && once < twice;
    } else {
      // (3,2,1) is restricted only and (p,p-1,p-2) regular only.
      c.p_regular = !(i == 3 && j == 2 && k == 1);
      c.p_restricted = !(i == p && j == p - 1 && k == p - 2);
      c.self_conjugate = j == half && i + k == p + 1;
    }
  }
  return c;
}

inline Classification classify_partition(const Partition& lambda, int p) {
  return {is_p_regular(lambda, p), is_p_restricted(lambda, p), conjugate(lambda) == lambda,
          is_hook(lambda)};
}

/// Number of removable nodes.
inline int tau(const Partition& lambda) { return static_cast<int>(removable_nodes(lambda).size()); }
/// Number of normal nodes.
inline int tau_p(const Partition& lambda, int p) {
  return static_cast<int>(normal_nodes(lambda, p).size());
}

inline AbacusDisplay display_3p(const Partition& lambda, int p) {
  return AbacusDisplay::from_partition(lambda, p, 3 * p);
}

/// Removable beads on runner i of the display with three beads per runner.
inline std::vector<int> removable_beads_on(const Partition& lambda, int i, int p) {
  std::vector<int> out;
  for (int m : removable_beads(display_3p(lambda, p)))
    if (runner_of(m, p) == i) out.push_back(m);
  return out;
}

/// Pushes the removable bead on runner i one place left, removing the
/// removable (i-1)-node. The result lies in B_i.
inline Partition theta(const Partition& lambda, int i, int p) {
  require_principal(lambda, p);
  if (i < 1 || i > p) throw std::invalid_argument("runner out of range");
  const auto beads = removable_beads_on(lambda, i, p);
  if (beads.empty())
    throw std::invalid_argument("no removable bead on runner " + std::to_string(i));
  if (beads.size() > 1) throw std::logic_error("several removable beads on one runner");
  return display_3p(lambda, p).push_left(beads.front()).to_partition();
}

/// Partitions of the principal block restricting to lambda~ in B_i: those
/// obtained by adding an addable (i-1)-node. Lexicographically decreasing.
inline std::vector<Partition> partners(const Partition& reduced, int i, int p) {
  require_weight2_block(reduced, i, p);
  std::vector<Partition> out;
  for (const Node& b : addable_nodes(reduced))
    if (residue(b, p) == (i - 1) % p) out.push_back(add_node(reduced, b));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// The smaller partner of lambda through B_i, for 2 <= i <= p. Empty when
/// lambda has no removable bead on runner i or is itself the smaller one.
inline std::optional<Partition> sigma(const Partition& lambda, int i, int p) {
  if (i < 2 || i > p) throw std::invalid_argument("sigma needs 2 <= i <= p");
  require_principal(lambda, p);
  if (removable_beads_on(lambda, i, p).empty()) return std::nullopt;
  const auto ps = partners(theta(lambda, i, p), i, p);
  if (ps.size() == 2 && ps.front() == lambda) return ps.back();
  return std::nullopt;
}

/// p-regular lambda whose display with three beads per runner has a normal
/// bead on runner i.
inline bool in_Lambda(const Partition& lambda, int i, int p) {
  require_principal(lambda, p);
  if (!is_p_regular(lambda, p)) throw std::invalid_argument("partition is not p-regular");
  for (int m : normal_beads(display_3p(lambda, p)))
    if (runner_of(m, p) == i) return true;
  return false;
}

/// Partitions of B_i passing the quotient JM test, lexicographically decreasing.
inline std::vector<Partition> irreducible_set_X(int i, int p) {
  if (i < 2 || i > p) throw std::invalid_argument("X_i needs 2 <= i <= p");
  std::vector<Partition> out;
  for (Partition& lambda : enumerate_block(weight2_block(i, p)))
    if (is_jm_fayers(lambda, p)) out.push_back(std::move(lambda));
  return out;
}

/// Members of the set T, written in principal-block notation.
inline std::vector<ThreePNotation> loewy_two_set(int p) {
  std::vector<ThreePNotation> out;
  for (int i = 1; i <= p - 1; ++i) out.push_back({3, {i}});
  for (int i = 2; i <= p; ++i) out.push_back({3, {i, i, i}});
  for (int i = 1; i <= p; ++i) out.push_back({3, {i, i}});
  out.push_back({3, {p, p - 1}});
  out.push_back({3, {p - 1, p}});
  out.push_back({3, {2, 2, 1}});
  out.push_back({3, {2, 1, 1}});
  return out;
}

struct LoewyClass {
  int length = 0;
  /// Which rule of the classifier decided: "irreducible", "T1".."T4",
  /// "regular-restricted" or "remaining".
  std::string clause;
};

inline LoewyClass loewy_length(const Partition& lambda, int p) {
  const ThreePNotation t = to_3p_notation(lambda, p);
  const auto& x = t.runners;
  if (t == ThreePNotation{3, {p}} || t == ThreePNotation{3, {1, 1, 1}}) return {1, "irreducible"};
  if (x.size() == 1 && x[0] <= p - 1) return {2, "T1"};
  if (x.size() == 3 && x[0] == x[1] && x[1] == x[2] && x[0] >= 2) return {2, "T2"};
  if (x.size() == 2 && x[0] == x[1]) return {2, "T3"};
  for (const ThreePNotation& s : {ThreePNotation{3, {p, p - 1}}, ThreePNotation{3, {p - 1, p}},
                                  ThreePNotation{3, {2, 2, 1}}, ThreePNotation{3, {2, 1, 1}}})
    if (t == s) return {2, "T4"};
  if (is_p_regular(lambda, p) && is_p_restricted(lambda, p)) return {4, "regular-restricted"};
  return {3, "remaining"};
}

}  // namespace pblock
