#pragma once

// Plain-text rendering of abacus displays, tableaux and Mullineux symbols.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "pblock/abacus.hpp"
#include "pblock/hooks.hpp"
#include "pblock/mullineux.hpp"

namespace pblock {

/// Runner numbers, a rule, then one line per row with ● for a bead and ○ for
/// a gap. `extra_rows` empty rows are appended below the last bead.
inline std::string render_abacus(const AbacusDisplay& d, int extra_rows = 0) {
  const int p = d.p();
  const int width = static_cast<int>(std::to_string(p).size()) + 1;
  auto cell = [&](const std::string& s) {
    return std::string(static_cast<std::size_t>(std::max(0, width - 1)), ' ') + s;
  };
  std::string out;
  for (int runner = 1; runner <= p; ++runner) {
    std::string label = std::to_string(runner);
    out += std::string(static_cast<std::size_t>(width - static_cast<int>(label.size())), ' ') + label;
  }
  out += '\n' + std::string(static_cast<std::size_t>(width * p), '-') + '\n';
  for (int row = 1; row <= d.last_row() + extra_rows; ++row) {
    for (int runner = 1; runner <= p; ++runner)
      out += cell(d.occupied(position_of(row, runner, p)) ? "●" : "○");
    out += '\n';
  }
  return out;
}

/// Left-justified rows of integers, columns padded to a common width.
inline std::string render_tableau(const Tableau& t) {
  std::size_t width = 1;
  for (const auto& row : t)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::string out;
  for (const auto& row : t) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string v = std::to_string(row[k]);
      if (k > 0) out += ' ';
      out += std::string(width - v.size(), ' ') + v;
    }
    out += '\n';
  }
  return out;
}

/// The two rows of the symbol, aligned.
inline std::string render_symbol(const MullineuxSymbol& g) {
  std::size_t width = 1;
  for (int v : g.a) width = std::max(width, std::to_string(v).size());
  for (int v : g.r) width = std::max(width, std::to_string(v).size());
  auto line = [&](const std::vector<int>& xs) {
    std::string s = "(";
    for (std::size_t k = 0; k < xs.size(); ++k) {
      std::string v = std::to_string(xs[k]);
      if (k > 0) s += ' ';
      s += std::string(width - v.size(), ' ') + v;
    }
    return s + ")\n";
  };
  return line(g.a) + line(g.r);
}

}  // namespace pblock
