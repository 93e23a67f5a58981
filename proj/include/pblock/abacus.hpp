#pragma once

// Abacus displays: beta-numbers, bead moves, cores and weights, p-quotients in
// the left-to-right and reordered numberings, pyramids, normal beads and the
// quotient form of the James-Mathas test.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pblock/partition.hpp"

namespace pblock {

/// Runner of position m, 1..p.
inline int runner_of(int m, int p) { return (m - 1) % p + 1; }
/// Row of position m, 1-based.
inline int row_of(int m, int p) { return (m - 1) / p + 1; }
/// Position in the given row and runner.
inline int position_of(int row, int runner, int p) { return (row - 1) * p + runner; }

/// A p-runner abacus with r beads at distinct positive positions.
class AbacusDisplay {
 public:
  AbacusDisplay(int p, std::vector<int> beads) : p_(p), beads_(std::move(beads)) {
    if (p < 2) throw std::invalid_argument("abacus needs p >= 2");
    std::sort(beads_.begin(), beads_.end(), std::greater<>());
    for (std::size_t k = 0; k < beads_.size(); ++k) {
      if (beads_[k] < 1) throw std::invalid_argument("bead positions are positive");
      if (k > 0 && beads_[k] == beads_[k - 1])
        throw std::invalid_argument("bead positions must be distinct");
    }
  }

  /// beta_i = lambda_i + r - i + 1 for i = 1..r.
  static AbacusDisplay from_partition(const Partition& lambda, int p, int r) {
    if (r < lambda.length())
      throw std::invalid_argument("bead count is smaller than the number of parts");
    std::vector<int> beads;
    beads.reserve(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) beads.push_back(lambda.part(i) + r - i + 1);
    return AbacusDisplay(p, std::move(beads));
  }

  Partition to_partition() const {
    std::vector<int> parts;
    const int r = bead_count();
    for (int i = 1; i <= r; ++i) {
      int part = beads_[static_cast<std::size_t>(i - 1)] - r + i - 1;
      if (part < 0) throw std::logic_error("abacus display does not decode");
      parts.push_back(part);
    }
    return Partition(std::move(parts));
  }

  int p() const { return p_; }
  int bead_count() const { return static_cast<int>(beads_.size()); }

  /// Occupied positions, decreasing (beta_1 first).
  const std::vector<int>& beads() const { return beads_; }

  std::vector<int> sorted_positions() const { return {beads_.rbegin(), beads_.rend()}; }

  bool occupied(int m) const {
    return std::binary_search(beads_.begin(), beads_.end(), m, std::greater<>());
  }

  /// Highest row holding a bead; 0 when there are none.
  int last_row() const { return beads_.empty() ? 0 : row_of(beads_.front(), p_); }

  int beads_on_runner(int runner, int from_row, int to_row) const {
    int count = 0;
    for (int m : beads_) {
      int row = row_of(m, p_);
      if (runner_of(m, p_) == runner && row >= from_row && row <= to_row) ++count;
    }
    return count;
  }

  /// Index i with beta_i = m, 1-based.
  int bead_index(int m) const {
    auto it = std::find(beads_.begin(), beads_.end(), m);
    if (it == beads_.end()) throw std::invalid_argument("position holds no bead");
    return static_cast<int>(it - beads_.begin()) + 1;
  }

  /// Moves the bead at m to the empty position to; returns the new display.
  AbacusDisplay moved(int m, int to) const {
    if (!occupied(m)) throw std::invalid_argument("position holds no bead");
    if (to < 1 || occupied(to)) throw std::invalid_argument("target position is not free");
    std::vector<int> beads = beads_;
    *std::find(beads.begin(), beads.end(), m) = to;
    return AbacusDisplay(p_, std::move(beads));
  }

  /// Bead m to m-1: removes a node.
  AbacusDisplay push_left(int m) const { return moved(m, m - 1); }
  /// Bead m to m+1: adds a node.
  AbacusDisplay push_right(int m) const { return moved(m, m + 1); }
  /// Bead m to m-p: removes a rim p-hook.
  AbacusDisplay push_up(int m) const { return moved(m, m - p_); }

  friend bool operator==(const AbacusDisplay&, const AbacusDisplay&) = default;

 private:
  int p_;
  std::vector<int> beads_;
};

/// Least multiple of p that is at least the number of parts.
inline int default_bead_count(const Partition& lambda, int p) {
  return (lambda.length() + p - 1) / p * p;
}

/// The node removed when the bead at m is pushed left.
inline Node node_of_bead(const AbacusDisplay& d, int m) {
  int i = d.bead_index(m);
  return {i, m - d.bead_count() + i - 1};
}

/// Beads at m > 1 with m-1 empty, increasing.
inline std::vector<int> removable_beads(const AbacusDisplay& d) {
  std::vector<int> out;
  for (int m : d.sorted_positions())
    if (m > 1 && !d.occupied(m - 1)) out.push_back(m);
  return out;
}

/// Beads at m with m+1 empty, increasing. Includes an improper bead whose move
/// creates a new row.
inline std::vector<int> addable_beads(const AbacusDisplay& d) {
  std::vector<int> out;
  for (int m : d.sorted_positions())
    if (!d.occupied(m + 1)) out.push_back(m);
  return out;
}

/// Beads with an empty position somewhere before them.
inline bool is_proper_bead(const AbacusDisplay& d, int m) {
  for (int x = 1; x < m; ++x)
    if (!d.occupied(x)) return true;
  return false;
}

/// Removable beads passing the runner-count test, increasing. For a bead in
/// row R on runner i >= 2: for every j >= 1, runner i has at least as many
/// beads as runner i-1 in rows R+1..R+j. On runner 1 the comparison is with
/// runner p in rows R..R+j-1.
inline std::vector<int> normal_beads(const AbacusDisplay& d) {
  const int p = d.p();
  const int last = d.last_row();
  std::vector<int> out;
  for (int m : removable_beads(d)) {
    const int runner = runner_of(m, p);
    const int row = row_of(m, p);
    bool normal = true;
    for (int j = 1; row + j <= last + 1 && normal; ++j) {
      int own = d.beads_on_runner(runner, row + 1, row + j);
      int other = runner >= 2 ? d.beads_on_runner(runner - 1, row + 1, row + j)
                              : d.beads_on_runner(p, row, row + j - 1);
      normal = own >= other;
    }
    if (normal) out.push_back(m);
  }
  return out;
}

/// Pushes every bead as far up its runner as it goes.
inline AbacusDisplay pushed_up(const AbacusDisplay& d) {
  const int p = d.p();
  std::vector<int> beads;
  for (int runner = 1; runner <= p; ++runner) {
    int count = d.beads_on_runner(runner, 1, d.last_row());
    for (int row = 1; row <= count; ++row) beads.push_back(position_of(row, runner, p));
  }
  return AbacusDisplay(p, std::move(beads));
}

inline Partition p_core(const Partition& lambda, int p) {
  return pushed_up(AbacusDisplay::from_partition(lambda, p, lambda.length())).to_partition();
}

inline int p_weight(const Partition& lambda, int p) {
  return (lambda.size() - p_core(lambda, p).size()) / p;
}

struct RimHookRemoval {
  Partition result;
  int leg = 0;
  /// Position of the bead pushed up, on a display with one bead per part.
  int bead = 0;
};

/// Every removable rim p-hook, by decreasing bead position (highest hand
/// first). The leg length is the number of beads strictly between m-p and m.
inline std::vector<RimHookRemoval> rim_hook_removals(const Partition& lambda, int p) {
  const AbacusDisplay d = AbacusDisplay::from_partition(lambda, p, lambda.length());
  std::vector<RimHookRemoval> out;
  for (int m : d.beads()) {
    if (m <= p || d.occupied(m - p)) continue;
    int leg = 0;
    for (int x = m - p + 1; x < m; ++x)
      if (d.occupied(x)) ++leg;
    out.push_back({d.push_up(m).to_partition(), leg, m});
  }
  return out;
}

enum class Numbering { LeftToRight, Reordered };

struct PQuotient {
  /// components[j-1] is the component on runner j of the chosen numbering.
  std::vector<Partition> components;
  Numbering numbering = Numbering::LeftToRight;

  int size() const {
    int total = 0;
    for (const auto& c : components) total += c.size();
    return total;
  }
  friend bool operator==(const PQuotient&, const PQuotient&) = default;
};

struct Pyramid {
  /// First empty positions of the pushed-up display, increasing.
  std::vector<int> q;
  /// sigma[j-1] = left-to-right runner carrying reordered label j.
  std::vector<int> sigma;
  /// B[k-1][l-1] = floor((q_l - q_k)/p) for k < l; zero elsewhere.
  std::vector<std::vector<int>> B;

  int b(int k, int l) const {
    return B[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
  }

  /// labels[i-1] = reordered label of left-to-right runner i.
  std::vector<int> labels() const {
    std::vector<int> out(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j)
      out[static_cast<std::size_t>(sigma[j] - 1)] = static_cast<int>(j) + 1;
    return out;
  }
};

inline void require_multiple(int p, int r) {
  if (r < 0 || r % p != 0)
    throw std::invalid_argument("bead count must be a multiple of p");
}

/// Left-to-right quotient. On each runner the beads are read bottom to top
/// and each contributes the number of empty positions above it.
inline PQuotient p_quotient(const Partition& lambda, int p, int r) {
  require_multiple(p, r);
  const AbacusDisplay d = AbacusDisplay::from_partition(lambda, p, r);
  PQuotient out;
  for (int runner = 1; runner <= p; ++runner) {
    std::vector<int> parts;
    int beads_above = d.beads_on_runner(runner, 1, d.last_row());
    for (int m : d.beads()) {
      if (runner_of(m, p) != runner) continue;
      --beads_above;
      parts.push_back(row_of(m, p) - 1 - beads_above);
    }
    out.components.emplace_back(std::move(parts));
  }
  return out;
}

inline Pyramid pyramid_of(const AbacusDisplay& d) {
  require_multiple(d.p(), d.bead_count());
  const int p = d.p();
  std::vector<std::pair<int, int>> firsts;  // (q, left-to-right runner)
  for (int runner = 1; runner <= p; ++runner) {
    int count = d.beads_on_runner(runner, 1, d.last_row());
    firsts.emplace_back(position_of(count + 1, runner, p), runner);
  }
  std::sort(firsts.begin(), firsts.end());
  Pyramid out;
  for (auto [q, runner] : firsts) {
    out.q.push_back(q);
    out.sigma.push_back(runner);
  }
  out.B.assign(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p), 0));
  for (int k = 1; k <= p; ++k)
    for (int l = k + 1; l <= p; ++l)
      out.B[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)] =
          (out.q[static_cast<std::size_t>(l - 1)] - out.q[static_cast<std::size_t>(k - 1)]) / p;
  return out;
}

struct ReorderedQuotient {
  PQuotient quotient;
  Pyramid pyramid;
};

inline ReorderedQuotient reordered_quotient(const Partition& lambda, int p, int r) {
  require_multiple(p, r);
  const PQuotient ltr = p_quotient(lambda, p, r);
  Pyramid pyr = pyramid_of(AbacusDisplay::from_partition(lambda, p, r));
  PQuotient re{{}, Numbering::Reordered};
  for (int runner : pyr.sigma)
    re.components.push_back(ltr.components[static_cast<std::size_t>(runner - 1)]);
  return {std::move(re), std::move(pyr)};
}

/// Rebuilds the display with the given core (pushed up, r beads) and
/// per-runner bead weights. For r a multiple of p these are the left-to-right
/// quotient.
inline AbacusDisplay display_from_quotient(const Partition& core, int p, int r,
                                           const std::vector<Partition>& quotient) {
  if (static_cast<int>(quotient.size()) != p)
    throw std::invalid_argument("quotient needs one component per runner");
  const AbacusDisplay base = pushed_up(AbacusDisplay::from_partition(core, p, r));
  std::vector<int> beads;
  for (int runner = 1; runner <= p; ++runner) {
    const int count = base.beads_on_runner(runner, 1, base.last_row());
    const Partition& comp = quotient[static_cast<std::size_t>(runner - 1)];
    if (comp.length() > count)
      throw std::invalid_argument("quotient component longer than its runner");
    // Bead k from the top sits in row k plus the weight of the matching part.
    for (int k = 1; k <= count; ++k)
      beads.push_back(position_of(k + comp.part(count - k + 1), runner, p));
  }
  return AbacusDisplay(p, std::move(beads));
}

/// Quotient form of the James-Mathas test, applied recursively to the
/// first and last reordered components.
inline bool is_jm_fayers(const Partition& lambda, int p) {
  if (lambda.empty()) return true;
  const int r = default_bead_count(lambda, p);
  const auto [mu, pyr] = reordered_quotient(lambda, p, r);
  const auto& c = mu.components;
  for (int i = 2; i <= p - 1; ++i)
    if (!c[static_cast<std::size_t>(i - 1)].empty()) return false;
  for (int k = 1; k <= p; ++k)
    for (int l = k + 1; l <= p; ++l)
      if (c[static_cast<std::size_t>(k - 1)].part(1) + c[static_cast<std::size_t>(l - 1)].length() >
          pyr.b(k, l) + 1)
        return false;
  const Partition& first = c.front();
  const Partition& last = c.back();
  if (!is_p_restricted(first, p) || !is_p_regular(last, p)) return false;
  return is_jm_fayers(first, p) && is_jm_fayers(last, p);
}

}  // namespace pblock
