#pragma once

// Mullineux symbols by p-rim stripping, the Mullineux map, partition parity and
// the good-node compatibility of the Mullineux map.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pblock/abacus.hpp"
#include "pblock/partition.hpp"

namespace pblock {

/// Columns (a_j; r_j): the size of the j-th p-rim removed and the number of
/// rows just before removing it.
struct MullineuxSymbol {
  std::vector<int> a;
  std::vector<int> r;

  int columns() const { return static_cast<int>(a.size()); }
  friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

struct RimStrip {
  /// Nodes taken from each row, top-down; every row loses at least one.
  std::vector<int> taken;
  Partition rest;
  int size = 0;
};

/// Removes the p-rim: the rim read from the top right, cut into segments of
/// p nodes, where each segment after the first starts at the end of the row
/// below the one in which the previous segment stopped.
inline RimStrip strip_p_rim(const Partition& lambda, int p) {
  RimStrip out;
  std::vector<int> rest = lambda.parts();
  int k = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    const int low = std::max(lambda.part(i + 1), 1);
    const int avail = lambda.part(i) - low + 1;
    const int take = std::min(avail, p - k);
    k += take;
    if (k == p) k = 0;
    out.taken.push_back(take);
    out.size += take;
    rest[static_cast<std::size_t>(i - 1)] -= take;
  }
  out.rest = Partition(std::move(rest));
  return out;
}

inline void require_p_regular(const Partition& lambda, int p) {
  if (!is_p_regular(lambda, p)) throw std::invalid_argument("partition is not p-regular");
}

inline MullineuxSymbol mullineux_symbol(const Partition& lambda, int p) {
  require_p_regular(lambda, p);
  MullineuxSymbol g;
  Partition cur = lambda;
  while (!cur.empty()) {
    RimStrip s = strip_p_rim(cur, p);
    g.a.push_back(s.size);
    g.r.push_back(cur.length());
    cur = std::move(s.rest);
  }
  return g;
}

namespace detail {

/// Every lambda with `rows` rows whose p-rim has `size` nodes and leaves mu.
inline std::vector<Partition> unstrip(const Partition& mu, int size, int rows, int p) {
  std::vector<Partition> out;
  if (mu.length() > rows) return out;
  std::vector<int> lam(static_cast<std::size_t>(rows + 1), 0);
  auto mu_at = [&](int i) { return mu.part(i); };
  // lam[i] has been fixed; k nodes of the current segment are used; total so far.
  auto rec = [&](auto&& self, int i, int k, int total) -> void {
    const int t = lam[static_cast<std::size_t>(i)] - mu_at(i);
    if (t < 1 || t > p - k || total + t > size) return;
    const int next_total = total + t;
    if (i == rows) {
      if ((t == p - k || mu_at(i) == 0) && next_total == size)
        out.emplace_back(std::vector<int>(lam.begin() + 1, lam.end()));
      return;
    }
    if (t < p - k) {
      lam[static_cast<std::size_t>(i + 1)] = mu_at(i) + 1;
      self(self, i + 1, k + t, next_total);
      return;
    }
    const int hi = std::min(mu_at(i) + 1, lam[static_cast<std::size_t>(i)]);
    for (int v = mu_at(i + 1) + 1; v <= hi; ++v) {
      lam[static_cast<std::size_t>(i + 1)] = v;
      self(self, i + 1, 0, next_total);
    }
  };
  for (int v = mu_at(1) + 1; v <= mu_at(1) + p; ++v) {
    lam[1] = v;
    rec(rec, 1, 0, 0);
  }
  return out;
}

}  // namespace detail

/// The p-regular partition with symbol g. Throws if there is none or the
/// symbol does not determine one.
inline Partition partition_from_symbol(const MullineuxSymbol& g, int p) {
  if (g.a.size() != g.r.size()) throw std::invalid_argument("symbol rows differ in length");
  std::vector<Partition> level{Partition{}};
  for (int j = g.columns() - 1; j >= 0; --j) {
    std::vector<Partition> next;
    for (const Partition& mu : level)
      for (Partition& lam : detail::unstrip(mu, g.a[static_cast<std::size_t>(j)],
                                            g.r[static_cast<std::size_t>(j)], p))
        if (is_p_regular(lam, p)) next.push_back(std::move(lam));
    level = std::move(next);
  }
  if (level.size() != 1)
    throw std::invalid_argument("symbol does not describe a unique p-regular partition");
  if (mullineux_symbol(level.front(), p) != g)
    throw std::logic_error("reconstructed partition has a different symbol");
  return level.front();
}

/// Image symbol (a_j; a_j - r_j + e_j) with e_j = 1 exactly when p does not
/// divide a_j.
inline MullineuxSymbol mullineux_image_symbol(const MullineuxSymbol& g, int p) {
  MullineuxSymbol out{g.a, {}};
  for (std::size_t j = 0; j < g.a.size(); ++j)
    out.r.push_back(g.a[j] - g.r[j] + (g.a[j] % p != 0 ? 1 : 0));
  return out;
}

inline Partition mullineux(const Partition& lambda, int p) {
  return partition_from_symbol(mullineux_image_symbol(mullineux_symbol(lambda, p), p), p);
}

struct Parity {
  int sign = 1;
  int total_leg = 0;
  friend bool operator==(const Parity& x, const Parity& y) { return x.sign == y.sign; }
};

/// Removes rim p-hooks until the core is reached, taking pick(count) among
/// the removals currently available (ordered by decreasing bead position).
inline Parity parity_along(const Partition& lambda, int p,
                           const std::function<std::size_t(std::size_t)>& pick) {
  Parity out;
  Partition cur = lambda;
  for (;;) {
    auto moves = rim_hook_removals(cur, p);
    if (moves.empty()) break;
    const std::size_t k = pick(moves.size());
    if (k >= moves.size()) throw std::out_of_range("removal choice out of range");
    out.total_leg += moves[k].leg;
    cur = std::move(moves[k].result);
  }
  out.sign = out.total_leg % 2 == 0 ? 1 : -1;
  return out;
}

/// Canonical order: always the hook with the highest hand.
inline Parity parity(const Partition& lambda, int p) {
  return parity_along(lambda, p, [](std::size_t) { return std::size_t{0}; });
}

struct CompatibilityResult {
  bool holds = true;
  int checked = 0;
  /// Good nodes A with lambda_A p-singular, where m(lambda_A) is undefined.
  int skipped = 0;
};

/// For every good node A of residue alpha with lambda_A p-regular, some good
/// node B of m(lambda) has residue -alpha and m(lambda_A) = m(lambda)_B.
inline CompatibilityResult good_node_compatibility(const Partition& lambda, int p) {
  const Partition image = mullineux(lambda, p);
  const auto image_good = good_nodes(image, p);
  CompatibilityResult out;
  for (const Node& a : good_nodes(lambda, p)) {
    const Partition smaller = remove_node(lambda, a);
    if (!is_p_regular(smaller, p)) {
      ++out.skipped;
      continue;
    }
    ++out.checked;
    const Partition target = mullineux(smaller, p);
    const int want = (p - residue(a, p)) % p;
    bool found = false;
    for (const Node& b : image_good)
      if (residue(b, p) == want && remove_node(image, b) == target) found = true;
    if (!found) out.holds = false;
  }
  return out;
}

inline bool check_good_node_compatibility(const Partition& lambda, int p) {
  return good_node_compatibility(lambda, p).holds;
}

}  // namespace pblock
