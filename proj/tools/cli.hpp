#pragma once

// Command-line front end: inspect, enumerate and verify.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pblock/pblock.hpp"

namespace pblock::cli {

using nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(int p) {
  if (!is_prime(p)) throw UsageError("p = " + std::to_string(p) + " is not prime");
  if (p < 5) throw UsageError("p = " + std::to_string(p) + " refused: characteristic p >= 5 is assumed");
}

inline json parts_json(const Partition& lambda) { return lambda.parts(); }

inline json nodes_json(const std::vector<Node>& nodes) {
  json out = json::array();
  for (const Node& a : nodes) out.push_back({a.row, a.col});
  return out;
}

inline std::string nodes_text(const std::vector<Node>& nodes) {
  std::string s = "{";
  for (std::size_t k = 0; k < nodes.size(); ++k)
    s += (k ? ", " : "") + std::string("(") + std::to_string(nodes[k].row) + "," +
         std::to_string(nodes[k].col) + ")";
  return s + "}";
}

inline std::string quotient_text(const std::vector<Partition>& q) {
  std::string s = "[";
  for (std::size_t k = 0; k < q.size(); ++k) s += (k ? ", " : "") + to_compact_string(q[k]);
  return s + "]";
}

inline std::string ints_text(const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + std::to_string(xs[k]);
  return s + ")";
}

inline Partition parse_partition_arg(const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse partition: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

inline int cmd_inspect(const std::string& text, int p, bool as_json, bool provenance, std::ostream& out) {
  require_prime(p);
  const Partition lambda = parse_partition_arg(text);
  const int r = default_bead_count(lambda, p);
  const AbacusDisplay d = AbacusDisplay::from_partition(lambda, p, r);
  const auto ltr = p_quotient(lambda, p, r);
  const auto [re, pyr] = reordered_quotient(lambda, p, r);
  const bool regular = is_p_regular(lambda, p);
  const bool principal = in_block(lambda, principal_block(p));

  json j;
  j["partition"] = parts_json(lambda);
  j["n"] = lambda.size();
  j["conjugate"] = parts_json(conjugate(lambda));
  j["p_regular"] = regular;
  j["p_restricted"] = is_p_restricted(lambda, p);
  j["core"] = parts_json(p_core(lambda, p));
  j["weight"] = p_weight(lambda, p);
  j["abacus"] = {{"p", p}, {"r", r}, {"occupied", d.sorted_positions()}};
  json q = json::array(), qr = json::array();
  for (const auto& c : ltr.components) q.push_back(parts_json(c));
  for (const auto& c : re.components) qr.push_back(parts_json(c));
  j["quotient"] = q;
  j["reordered_quotient"] = qr;
  j["pyramid"] = {{"q", pyr.q}, {"sigma", pyr.sigma}, {"B", pyr.B}};
  j["hooks"] = hook_lengths(lambda);
  j["p_power"] = p_power_diagram(lambda, p);
  j["jm_direct"] = is_jm_direct(lambda, p);
  j["jm_fayers"] = is_jm_fayers(lambda, p);
  j["parity"] = parity(lambda, p).sign;
  j["removable_nodes"] = nodes_json(removable_nodes(lambda));
  j["normal_nodes"] = nodes_json(normal_nodes(lambda, p));
  j["good_nodes"] = nodes_json(good_nodes(lambda, p));
  if (regular) {
    const MullineuxSymbol g = mullineux_symbol(lambda, p);
    j["mullineux_symbol"] = {{"a", g.a}, {"r", g.r}};
    j["mullineux"] = parts_json(mullineux(lambda, p));
  }
  if (principal) {
    j["notation"] = format_notation(to_3p_notation(lambda, p));
    const LoewyClass lc = loewy_length(lambda, p);
    j["loewy"] = lc.length;
    if (provenance) j["provenance"] = lc.clause;
  }

  if (as_json) {
    out << json{{"p", p}, {"command", "inspect"}, {"results", json::array({j})}}.dump(2) << '\n';
    return kOk;
  }
  out << "partition   " << to_compact_string(lambda) << "  (n = " << lambda.size() << ")\n";
  out << "conjugate   " << to_compact_string(conjugate(lambda)) << '\n';
  out << "p-regular   " << (regular ? "yes" : "no") << "\np-restricted " << (is_p_restricted(lambda, p) ? "yes" : "no")
      << '\n';
  out << "core        " << to_compact_string(p_core(lambda, p)) << "\nweight      " << p_weight(lambda, p) << '\n';
  out << "abacus      r = " << r << '\n' << render_abacus(d, 1);
  out << "quotient    " << quotient_text(ltr.components) << '\n';
  out << "reordered   " << quotient_text(re.components) << '\n';
  out << "pyramid     q = " << ints_text(pyr.q) << ", sigma = " << ints_text(pyr.sigma) << '\n';
  for (int k = 1; k < p; ++k) {
    out << "            ";
    for (int l = k + 1; l <= p; ++l) out << pyr.b(k, l) << (l < p ? " " : "");
    out << '\n';
  }
  out << "hooks\n" << render_tableau(hook_lengths(lambda));
  out << "p-power\n" << render_tableau(p_power_diagram(lambda, p));
  out << "JM          direct " << (is_jm_direct(lambda, p) ? "yes" : "no") << ", quotient "
      << (is_jm_fayers(lambda, p) ? "yes" : "no") << '\n';
  out << "parity      " << (parity(lambda, p).sign > 0 ? "+1" : "-1") << '\n';
  out << "removable   " << nodes_text(removable_nodes(lambda)) << '\n';
  out << "normal      " << nodes_text(normal_nodes(lambda, p)) << '\n';
  out << "good        " << nodes_text(good_nodes(lambda, p)) << '\n';
  if (regular) {
    out << "symbol\n" << render_symbol(mullineux_symbol(lambda, p));
    out << "Mullineux   " << to_compact_string(mullineux(lambda, p)) << '\n';
  }
  if (principal) {
    const LoewyClass lc = loewy_length(lambda, p);
    out << "notation    " << format_notation(to_3p_notation(lambda, p)) << '\n';
    out << "Loewy       " << lc.length;
    if (provenance) out << "  [" << lc.clause << "]";
    out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct BlockSpec {
  BlockLabel label;
  int index = 0;  // 0 for the principal block
};

inline BlockSpec parse_block_spec(const std::string& spec, int p) {
  if (spec == "principal") return {principal_block(p), 0};
  if (spec.size() >= 2 && (spec[0] == 'B' || spec[0] == 'b') &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    const int i = std::stoi(spec.substr(1));
    if (i >= 1 && i <= p) return {weight2_block(i, p), i};
  }
  throw UsageError("block must be 'principal' or B<i> with 1 <= i <= p, got '" + spec + "'");
}

inline std::function<bool(const Partition&)> parse_filter(const std::string& filter, int p, bool principal) {
  if (filter.empty()) return [](const Partition&) { return true; };
  if (filter == "jm") return [p](const Partition& l) { return is_jm_fayers(l, p); };
  if (filter == "regular") return [p](const Partition& l) { return is_p_regular(l, p); };
  if (filter == "singular") return [p](const Partition& l) { return !is_p_regular(l, p); };
  if (filter == "restricted") return [p](const Partition& l) { return is_p_restricted(l, p); };
  if (filter == "rr") return [p](const Partition& l) { return is_p_regular(l, p) && is_p_restricted(l, p); };
  if (filter == "hook") return [](const Partition& l) { return is_hook(l); };
  if (filter == "selfconj") return [](const Partition& l) { return conjugate(l) == l; };
  if (filter.rfind("loewy=", 0) == 0) {
    if (!principal) throw UsageError("loewy filter applies to the principal block only");
    const std::string v = filter.substr(6);
    if (v.size() != 1 || v[0] < '1' || v[0] > '4') throw UsageError("loewy filter takes 1..4");
    const int want = v[0] - '0';
    return [p, want](const Partition& l) { return loewy_length(l, p).length == want; };
  }
  throw UsageError("unknown filter '" + filter +
                   "' (jm, regular, singular, restricted, rr, hook, selfconj, loewy=N)");
}

inline int cmd_enumerate(const std::string& spec, int p, const std::string& filter, bool as_json, bool provenance,
                         std::ostream& out) {
  require_prime(p);
  const BlockSpec block = parse_block_spec(spec, p);
  const bool principal = block.index == 0;
  const auto keep = parse_filter(filter, p, principal);
  json results = json::array();
  std::ostringstream text;
  int count = 0;
  for (const Partition& lambda : enumerate_block(block.label)) {
    if (!keep(lambda)) continue;
    ++count;
    const BeadNotation t = principal ? to_3p_notation(lambda, p) : to_block_notation(lambda, block.index, p);
    json row{{"partition", parts_json(lambda)},
             {"notation", format_notation(t)},
             {"p_regular", is_p_regular(lambda, p)},
             {"p_restricted", is_p_restricted(lambda, p)},
             {"jm", is_jm_fayers(lambda, p)}};
    text << to_compact_string(lambda) << "  " << format_notation(t) << "  reg=" << is_p_regular(lambda, p)
         << " res=" << is_p_restricted(lambda, p) << " jm=" << is_jm_fayers(lambda, p);
    if (principal) {
      const LoewyClass lc = loewy_length(lambda, p);
      row["loewy"] = lc.length;
      text << " loewy=" << lc.length;
      if (provenance) {
        row["provenance"] = lc.clause;
        text << " [" << lc.clause << "]";
      }
    }
    text << '\n';
    results.push_back(row);
  }
  if (as_json) {
    out << json{{"p", p}, {"command", "enumerate"}, {"block", spec}, {"results", results}}.dump(2) << '\n';
  } else {
    out << text.str() << count << " partitions\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

inline int cmd_verify(std::optional<int> p, const std::string& theorem, bool deep, bool as_json, std::ostream& out) {
  std::vector<int> primes;
  if (p) {
    require_prime(*p);
    primes.push_back(*p);
  } else {
    primes = {5, 7, 11};
    if (deep) primes.push_back(13);
  }
  std::vector<std::string> names;
  if (theorem != "all") {
    if (named_checks().count(theorem) == 0) {
      std::string known;
      for (const auto& [name, fn] : named_checks()) known += " " + name;
      throw UsageError("unknown theorem '" + theorem + "'; known:" + known);
    }
    names.push_back(theorem);
  }
  bool all_pass = true;
  json results = json::array();
  for (int q : primes) {
    for (const CheckResult& r : run_checks(q, names)) {
      all_pass = all_pass && r.pass;
      json row{{"p", q}, {"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"elapsed_ms", r.elapsed_ms}};
      row["counterexample"] = r.counterexample ? parts_json(*r.counterexample) : json(nullptr);
      if (!r.detail.empty()) row["detail"] = r.detail;
      results.push_back(row);
      if (!as_json) {
        out << "p=" << q << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (r.counterexample) out << "  counterexample " << to_string(*r.counterexample);
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << '\n';
      }
    }
  }
  if (as_json) {
    json pj = primes.size() == 1 ? json(primes.front()) : json(primes);
    out << json{{"p", pj}, {"command", "verify"}, {"results", results}}.dump(2) << '\n';
  }
  return all_pass ? kOk : kFailed;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition and abacus combinatorics for the principal block of the symmetric group on 3p letters"};
  app.require_subcommand(1);

  std::string partition_text, block_spec, filter, theorem = "all";
  int p = 0;
  std::optional<int> verify_p;
  bool as_json = false, deep = false, provenance = false;

  auto* inspect = app.add_subcommand("inspect", "Report everything known about one partition");
  inspect->add_option("partition", partition_text, "Parts separated by commas, e.g. 6,4,2,2,1,1; '-' for empty")
      ->required();
  inspect->add_option("--p", p, "Prime characteristic (>= 5)")->required();
  inspect->add_flag("--json", as_json, "Machine-readable output");
  inspect->add_flag("--provenance", provenance, "Name the rule that fixed the Loewy class");

  auto* enumerate = app.add_subcommand("enumerate", "List the partitions of a block");
  enumerate->add_option("block", block_spec, "principal or B<i>")->required();
  enumerate->add_option("--p", p, "Prime characteristic (>= 5)")->required();
  enumerate->add_option("--filter", filter, "jm, regular, singular, restricted, rr, hook, selfconj, loewy=N");
  enumerate->add_flag("--json", as_json, "Machine-readable output");
  enumerate->add_flag("--provenance", provenance, "Name the rule that fixed each Loewy class");

  auto* verify = app.add_subcommand("verify", "Run the exhaustive checks");
  verify->add_option("--p", verify_p, "Single prime; default runs 5, 7 and 11");
  verify->add_option("--theorem", theorem, "Check name or 'all'");
  verify->add_flag("--deep", deep, "Also run p = 13 when no prime is given");
  verify->add_flag("--json", as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  }

  try {
    if (*inspect) return cmd_inspect(partition_text, p, as_json, provenance, out);
    if (*enumerate) return cmd_enumerate(block_spec, p, filter, as_json, provenance, out);
    return cmd_verify(verify_p, theorem, deep, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace pblock::cli
