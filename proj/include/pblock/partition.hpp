#pragma once

// Integer partitions and node-level combinatorics: conjugation, dominance,
// p-regularity, residues, removable/addable/normal/good nodes.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pblock {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so two partitions compare equal iff they have
/// the same nonzero parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }

  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }

  /// The integer partitioned, |lambda|.
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool empty() const { return parts_.empty(); }

  /// 1-based part lookup; rows past the end read as 0.
  int part(int row) const {
    return (row >= 1 && row <= length()) ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Lexicographic order on the part sequences.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
  }

 private:
  std::vector<int> parts_;
};

/// A box (row, col) of a Young diagram, both 1-based.
struct Node {
  int row = 0;
  int col = 0;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// p-residue (col - row) mod p, in [0, p).
inline int residue(const Node& node, int p) {
  int r = (node.col - node.row) % p;
  return r < 0 ? r + p : r;
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return {};
  out.reserve(static_cast<std::size_t>(lambda.part(1)));
  for (int j = 1; j <= lambda.part(1); ++j) {
    int count = 0;
    for (int part : lambda.parts())
      if (part >= j) ++count;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

/// lambda dominates mu: every prefix sum of lambda is at least that of mu.
inline bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominance compares partitions of the same size");
  int rows = std::max(lambda.length(), mu.length());
  int a = 0, b = 0;
  for (int i = 1; i <= rows; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

inline bool strictly_dominates(const Partition& lambda, const Partition& mu) {
  return lambda != mu && dominates(lambda, mu);
}

inline std::strong_ordering lex_compare(const Partition& lambda, const Partition& mu) {
  return lambda <=> mu;
}

/// No p equal nonzero parts.
inline bool is_p_regular(const Partition& lambda, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  int run = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    run = (i > 1 && lambda.part(i) == lambda.part(i - 1)) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

/// Every consecutive difference lambda_i - lambda_{i+1} (with a trailing 0) is
/// below p. Equivalent to the conjugate being p-regular.
inline bool is_p_restricted(const Partition& lambda, int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) - lambda.part(i + 1) >= p) return false;
  return true;
}

/// Removable nodes, top-down.
inline std::vector<Node> removable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
  return out;
}

/// Addable nodes, top-down.
inline std::vector<Node> addable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (i == 1 || lambda.part(i) < lambda.part(i - 1)) out.push_back({i, lambda.part(i) + 1});
  return out;
}

inline bool is_removable(const Partition& lambda, const Node& node) {
  return node.row >= 1 && node.col == lambda.part(node.row) && node.col > 0 &&
         lambda.part(node.row + 1) < node.col;
}

inline bool is_addable(const Partition& lambda, const Node& node) {
  if (node.row < 1 || node.col != lambda.part(node.row) + 1) return false;
  return node.row == 1 || lambda.part(node.row - 1) >= node.col;
}

inline Partition remove_node(const Partition& lambda, const Node& node) {
  if (!is_removable(lambda, node))
    throw std::invalid_argument("node is not removable");
  std::vector<int> parts = lambda.parts();
  --parts[static_cast<std::size_t>(node.row - 1)];
  return Partition(std::move(parts));
}

inline Partition add_node(const Partition& lambda, const Node& node) {
  if (!is_addable(lambda, node))
    throw std::invalid_argument("node is not addable");
  std::vector<int> parts = lambda.parts();
  if (node.row > lambda.length())
    parts.push_back(1);
  else
    ++parts[static_cast<std::size_t>(node.row - 1)];
  return Partition(std::move(parts));
}

/// Normal nodes, top-down. A removable i-node A is normal when, reading the
/// i-nodes above A from A upwards, the addable ones never outnumber the
/// removable ones. This bracket scan is the greedy form of the injection
/// from addable i-nodes above A to removable i-nodes between them and A.
inline std::vector<Node> normal_nodes(const Partition& lambda, int p) {
  std::vector<Node> out;
  for (const Node& a : removable_nodes(lambda)) {
    const int res = residue(a, p);
    // Rows above a, nearest first. A row holds at most one i-node of each kind
    // for p >= 2 and removable/addable nodes in the same row differ in residue.
    int balance = 0;
    bool normal = true;
    for (int row = a.row - 1; row >= 1 && normal; --row) {
      Node rem{row, lambda.part(row)};
      Node add{row, lambda.part(row) + 1};
      if (is_removable(lambda, rem) && residue(rem, p) == res) ++balance;
      if (is_addable(lambda, add) && residue(add, p) == res) {
        if (balance == 0)
          normal = false;
        else
          --balance;
      }
    }
    if (normal) out.push_back(a);
  }
  return out;
}

/// The lowest normal node of each residue, top-down.
inline std::vector<Node> good_nodes(const Partition& lambda, int p) {
  const auto normal = normal_nodes(lambda, p);
  std::vector<Node> out;
  for (std::size_t k = 0; k < normal.size(); ++k) {
    bool lowest = true;
    for (std::size_t m = k + 1; m < normal.size(); ++m)
      if (residue(normal[m], p) == residue(normal[k], p)) lowest = false;
    if (lowest) out.push_back(normal[k]);
  }
  return out;
}

/// (i, 1^{n-i}) shapes, including the empty partition.
inline bool is_hook(const Partition& lambda) { return lambda.part(2) <= 1; }

/// All partitions of n, lexicographically decreasing.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Comma-separated parts; "-" for the empty partition.
inline std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string s;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(lambda.part(i));
  }
  return s;
}

/// Exponent form used in displays, e.g. (6,4,2^2,1^2); () when empty.
inline std::string to_compact_string(const Partition& lambda) {
  std::string s = "(";
  int i = 1;
  bool first = true;
  while (i <= lambda.length()) {
    int j = i;
    while (j + 1 <= lambda.length() && lambda.part(j + 1) == lambda.part(i)) ++j;
    if (!first) s += ',';
    first = false;
    s += std::to_string(lambda.part(i));
    if (j > i) s += '^' + std::to_string(j - i + 1);
    i = j + 1;
  }
  return s + ")";
}

/// Parses "6,4,2,2,1,1"; tokens may use exponents ("2^2"); "" and "-" give the
/// empty partition; surrounding parentheses are accepted.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') s += c;
  if (s.empty() || s == "-") return {};
  std::vector<int> parts;
  std::stringstream in(s);
  std::string token;
  auto to_int = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad partition token '" + t + "'");
    return std::stoi(t);
  };
  while (std::getline(in, token, ',')) {
    auto caret = token.find('^');
    int value = to_int(token.substr(0, caret));
    int reps = caret == std::string::npos ? 1 : to_int(token.substr(caret + 1));
    parts.insert(parts.end(), static_cast<std::size_t>(reps), value);
  }
  return Partition(std::move(parts));
}

}  // namespace pblock
