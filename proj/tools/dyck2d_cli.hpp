#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyck2d.hpp"

namespace dyck2d::cli {

namespace detail {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

inline RenderStyle picture_style(const std::string& format) {
  if (format == "glyph") return RenderStyle::glyph;
  if (format == "json") return RenderStyle::json;
  return RenderStyle::ascii;
}

inline void print_picture(std::ostream& out, const Picture& p, const std::string& format) {
  out << render_picture(p, picture_style(format)) << "\n";
}

}  // namespace detail

/// Runs one command. Exit status: 0 success, 1 when `classify --expect` fails,
/// 2 for usage or input errors.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Two-dimensional Dyck picture languages", "dyck2d"};
  app.require_subcommand(1);

  int k = 1;
  std::string file;
  std::string format;
  std::string strategy = "greedy";
  std::string expect;
  std::string name;
  std::string word;
  std::size_t budget = kDefaultCensusBudget;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t noose = 0;
  bool precedence = false;

  auto add_k = [&k](CLI::App* sub) {
    sub->add_option("--k", k, "number of corner quadruples")->check(CLI::Range(1, 65535));
  };
  auto add_file = [&file](CLI::App* sub) {
    sub->add_option("file", file, "picture file (stdin when omitted or '-')");
  };
  auto add_format = [&format](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_budget = [&budget](CLI::App* sub) {
    sub->add_option("--budget", budget, "maximum cells per enumerated picture");
  };

  auto* classify_cmd = app.add_subcommand("classify", "print DC/DQ/DN/DW membership as JSON");
  add_k(classify_cmd);
  add_file(classify_cmd);
  classify_cmd->add_option("--expect", expect, "exit 1 unless the picture is in this class")
      ->check(CLI::IsMember({"dc", "dq", "dn", "dw", "db"}));

  auto* graph_cmd = app.add_subcommand("graph", "export the matching graph");
  add_k(graph_cmd);
  add_file(graph_cmd);
  graph_cmd->add_flag("--precedence", precedence,
                      "export the precedence graph of a quaternate picture instead");

  auto* neutralize_cmd = app.add_subcommand("neutralize", "print a neutralization trace");
  add_k(neutralize_cmd);
  add_file(neutralize_cmd);
  neutralize_cmd->add_option("--strategy", strategy, "redex selection")
      ->check(CLI::IsMember({"greedy", "exhaustive"}));

  auto* census_cmd = app.add_subcommand("census", "count class members of one size");
  census_cmd->add_option("--rows", rows, "picture rows")->required();
  census_cmd->add_option("--cols", cols, "picture columns")->required();
  add_k(census_cmd);
  add_budget(census_cmd);
  add_format(census_cmd, {"json", "ascii"});

  auto* family_cmd = app.add_subcommand("family", "generate a constructive family member");
  family_cmd->add_option("--double-noose", noose, "double-noose picture p(h)")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* embed_cmd = app.add_subcommand("embed-row", "embed a row Dyck word as a third row");
  embed_cmd->add_option("word", word, "row Dyck word, e.g. abcd")->required();

  auto* search_cmd =
      app.add_subcommand("search-hamiltonian", "find crosswords whose graph is one circuit");
  search_cmd->add_option("--max-rows", rows, "largest row count")->required();
  search_cmd->add_option("--max-cols", cols, "largest column count")->required();
  add_k(search_cmd);
  add_budget(search_cmd);
  add_format(search_cmd, {"json", "ascii"});

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or print the reference pictures");
  fixtures_cmd->add_option("--name", name, "fixture to print");

  // Formats that depend on the verb.
  add_format(graph_cmd, {"dot", "json"});
  add_format(neutralize_cmd, {"ascii", "json"});
  for (auto* sub : {family_cmd, embed_cmd, fixtures_cmd}) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"ascii", "glyph", "json"}));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (format.empty()) {
    format = census_cmd->parsed() || search_cmd->parsed() ? "json"
             : graph_cmd->parsed()                        ? "dot"
                                                          : "ascii";
  }

  try {
    if (classify_cmd->parsed()) {
      const Picture p = parse_picture(detail::read_input(file, in), k);
      const ClassFlags f = classify(p);
      auto j = flags_to_json(f);
      const bool box_alphabet = !p.empty() && p.any_of(Role::Bullet);
      bool db = false;
      if (box_alphabet || expect == "db") {
        db = in_DB(p);
        j["in_db"] = db;
      }
      out << j.dump() << "\n";
      const bool ok = expect.empty() || (expect == "dc" && f.in_dc) ||
                      (expect == "dq" && f.in_dq) || (expect == "dn" && f.in_dn) ||
                      (expect == "dw" && f.in_dw) || (expect == "db" && db);
      return ok ? 0 : 1;
    }
    if (graph_cmd->parsed()) {
      const Picture p = parse_picture(detail::read_input(file, in), k);
      if (precedence) {
        out << priority_graph(p).to_dot();
        return 0;
      }
      const MatchingGraph g = matching_graph(p);
      const auto cs = circuits(g);
      if (format == "json") {
        out << graph_to_json(g, cs).dump(2) << "\n";
      } else {
        out << graph_to_dot(g, cs);
      }
      return 0;
    }
    if (neutralize_cmd->parsed()) {
      const Picture p = parse_picture(detail::read_input(file, in), k);
      const Strategy s = strategy == "exhaustive" ? Strategy::exhaustive : Strategy::greedy;
      const Decision dec = in_DN(p, s);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["member"] = dec.member;
        j["strategy"] = strategy;
        j["trace"] = trace_to_json(dec.trace);
        out << j.dump(2) << "\n";
        return 0;
      }
      Picture cur = p;
      for (std::size_t i = 0; i < dec.trace.size(); ++i) {
        const Domain& d = dec.trace[i].domain;
        cur = apply_step(cur, dec.trace[i]);
        out << "step " << i + 1 << ": (" << d.top << "," << d.left << "," << d.bottom << ","
            << d.right << ") index " << dec.trace[i].index << "\n"
            << render_picture(cur) << "\n\n";
      }
      out << "member: " << (dec.member ? "true" : "false") << " (" << dec.trace.size()
          << " steps)\n";
      return 0;
    }
    if (census_cmd->parsed()) {
      const Census c = census(rows, cols, k, budget);
      if (format == "json") {
        out << census_to_json(c).dump(2) << "\n";
      } else {
        out << census_to_table(c);
      }
      return 0;
    }
    if (family_cmd->parsed()) {
      detail::print_picture(out, double_noose(noose), format);
      return 0;
    }
    if (embed_cmd->parsed()) {
      detail::print_picture(out, embed_row(parse_word(word, 1)), format);
      return 0;
    }
    if (search_cmd->parsed()) {
      const auto found = hamiltonian_search(rows, cols, k, budget);
      if (format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const Picture& p : found) j.push_back(render_picture(p));
        out << j.dump(2) << "\n";
      } else {
        out << found.size() << " hamiltonian picture(s)\n";
        for (const Picture& p : found) out << "\n" << render_picture(p) << "\n";
      }
      return 0;
    }
    if (fixtures_cmd->parsed()) {
      const auto all = fixtures();
      if (name.empty()) {
        for (const auto& [key, pic] : all) out << key << "\n";
        return 0;
      }
      auto it = all.find(name);
      if (it == all.end()) throw detail::InputError("unknown fixture '" + name + "'");
      detail::print_picture(out, it->second, format);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const detail::InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace dyck2d::cli
