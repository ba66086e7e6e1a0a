// Copyright 2026 The leafdiam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 verification
// discrepancy, 2 invalid or infeasible input.

#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leafdiam/leafdiam.hpp"

namespace leafdiam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitInvalid = 2;

namespace detail {

inline constexpr Count kMaxWitnessOrder = 10'000'000;

inline TreePath parse_path(const std::string& text) {
  TreePath path;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 0 || v > 1'000'000'000) {
      throw Error(ErrorCode::kInvalidStem, "bad path entry \"" + item + "\"");
    }
    path.vertices.push_back(static_cast<Vertex>(v));
  }
  if (path.vertices.empty()) {
    throw Error(ErrorCode::kInvalidStem, "empty path");
  }
  return path;
}

inline Tree load_tree(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return read_tree(in);
  std::ifstream stream(file);
  if (!stream) {
    throw Error(ErrorCode::kParseError, "cannot open " + file);
  }
  return read_tree(stream);
}

inline void write_table(std::ostream& out, const ExtremalTable& table,
                        bool csv) {
  if (csv) {
    out << "n,d,min_leaves,max_leaves\n";
    for (const auto& [d, e] : table.by_diameter) {
      out << table.n << ',' << d << ',' << e.min << ',' << e.max << '\n';
    }
    out << "n,f,min_diam,max_diam\n";
    for (const auto& [f, e] : table.by_leaves) {
      out << table.n << ',' << f << ',' << e.min << ',' << e.max << '\n';
    }
    return;
  }
  out << "order " << table.n << "\n";
  out << "  diameter  min_leaves  max_leaves\n";
  for (const auto& [d, e] : table.by_diameter) {
    out << "  " << std::setw(8) << d << "  " << std::setw(10) << e.min << "  "
        << std::setw(10) << e.max << '\n';
  }
  out << "  leaves  min_diameter  max_diameter\n";
  for (const auto& [f, e] : table.by_leaves) {
    out << "  " << std::setw(6) << f << "  " << std::setw(12) << e.min << "  "
        << std::setw(12) << e.max << '\n';
  }
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal leaf/diameter trade-offs in trees", "leafdiam"};
  app.require_subcommand(1);

  // One integer-valued subcommand per closed form.
  struct Formula {
    const char* name;
    const char* key;
    const char* help;
    Count (*fn)(Count, Count);
    Count n = 0;
    Count key_value = 0;
  };
  std::vector<Formula> formulas = {
      {"min-leaves", "d", "minimum leaf count L(n,d)", &min_leaves},
      {"lesniak-bound", "d", "lower bound ceil(2(n-1)/d)", &lesniak_bound},
      {"max-leaves", "d", "maximum leaf count n-d+1", &max_leaves},
      {"min-diameter", "f", "minimum diameter D(n,f)", &min_diameter},
      {"max-diameter", "f", "maximum diameter n-f+1", &max_diameter},
  };
  std::vector<CLI::App*> formula_cmds;
  for (auto& f : formulas) {
    auto* sub = app.add_subcommand(f.name, f.help);
    sub->add_option("n", f.n, "order")->required();
    sub->add_option(f.key, f.key_value,
                    std::string(f.key) == "d" ? "diameter" : "leaf count")
        ->required();
    formula_cmds.push_back(sub);
  }

  auto* witness = app.add_subcommand("witness", "print an extremal tree");
  std::vector<Count> w_min_leaves, w_min_diameter, w_max_leaves,
      w_max_diameter;
  bool dot = false;
  witness->add_option("--min-leaves", w_min_leaves, "n d")->expected(2);
  witness->add_option("--min-diameter", w_min_diameter, "n f")->expected(2);
  witness->add_option("--max-leaves", w_max_leaves, "n d")->expected(2);
  witness->add_option("--max-diameter", w_max_diameter, "n f")->expected(2);
  witness->add_flag("--dot", dot, "emit Graphviz DOT instead of tree text");

  auto* spiderize_cmd =
      app.add_subcommand("spiderize", "rewire a tree into a spider");
  bool trace = false;
  std::string spiderize_file;
  spiderize_cmd->add_flag("--trace", trace, "append rewiring steps");
  spiderize_cmd->add_option("file", spiderize_file, "tree file (default stdin)");

  auto* check = app.add_subcommand("check-diametral",
                                   "test whether a path is diametral");
  std::string path_text;
  std::string check_file;
  check->add_option("--path", path_text, "comma-separated vertex ids")
      ->required();
  check->add_option("file", check_file, "tree file (default stdin)");

  auto* verify = app.add_subcommand(
      "verify", "check every formula against exhaustive enumeration");
  int max_n = 0;
  int jobs = 1;
  int cap = kDefaultOracleCap;
  verify->add_option("--max-n", max_n, "largest order")->required();
  verify->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--cap", cap, "raise the order cap (at most 11)");

  auto* table_cmd = app.add_subcommand("table", "exhaustive extremal table");
  int table_n = 0;
  bool csv = false;
  table_cmd->add_option("--n", table_n, "order")->required();
  table_cmd->add_flag("--csv", csv, "CSV output");
  table_cmd->add_option("--cap", cap, "raise the order cap (at most 11)");
  table_cmd->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"leafdiam"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    for (std::size_t i = 0; i < formulas.size(); ++i) {
      if (formula_cmds[i]->parsed()) {
        out << formulas[i].fn(formulas[i].n, formulas[i].key_value) << '\n';
        return kExitOk;
      }
    }

    if (witness->parsed()) {
      const int chosen = !w_min_leaves.empty() + !w_min_diameter.empty() +
                         !w_max_leaves.empty() + !w_max_diameter.empty();
      if (chosen != 1) {
        err << "error: witness needs exactly one of --min-leaves, "
               "--min-diameter, --max-leaves, --max-diameter\n";
        return kExitInvalid;
      }
      const auto& pair = !w_min_leaves.empty()     ? w_min_leaves
                         : !w_min_diameter.empty() ? w_min_diameter
                         : !w_max_leaves.empty()   ? w_max_leaves
                                                   : w_max_diameter;
      if (pair[0] > detail::kMaxWitnessOrder) {
        err << "error: order " << pair[0] << " exceeds "
            << detail::kMaxWitnessOrder << '\n';
        return kExitInvalid;
      }
      std::optional<Tree> tree;
      if (!w_min_leaves.empty()) {
        tree = spider_to_tree(min_leaf_spider(pair[0], pair[1]));
      } else if (!w_min_diameter.empty()) {
        tree = spider_to_tree(min_diameter_spider(pair[0], pair[1]));
      } else if (!w_max_leaves.empty()) {
        tree = max_leaf_tree(pair[0], pair[1]);
      } else {
        tree = max_diameter_tree(pair[0], pair[1]);
      }
      out << (dot ? write_dot(*tree) : write_tree(*tree));
      return kExitOk;
    }

    if (spiderize_cmd->parsed()) {
      const Tree tree = detail::load_tree(spiderize_file, in);
      const auto result = spiderize(tree);
      out << write_tree(result.result);
      if (trace) {
        for (const auto& s : result.steps) {
          out << "# step u=" << s.leaf << " b=" << s.big << " w=" << s.w
              << " z=" << s.z << " phi=" << s.potential_before << "->"
              << s.potential_after << '\n';
        }
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const auto path = detail::parse_path(path_text);
      const Tree tree = detail::load_tree(check_file, in);
      out << (is_diametral_by_lemma1(tree, path) ? "true" : "false") << '\n';
      return kExitOk;
    }

    if (cap > kDefaultOracleCap) {
      err << "warning: order cap raised to " << cap
          << "; enumeration grows as n^(n-2)\n";
    }
    const OracleOptions options{cap, jobs};

    if (verify->parsed()) {
      if (max_n < 2) {
        err << "error: --max-n must be at least 2\n";
        return kExitInvalid;
      }
      const auto report = verify_sweep(max_n, options);
      out << format_report(report);
      return report.ok() ? kExitOk : kExitDiscrepancy;
    }

    if (table_cmd->parsed()) {
      detail::write_table(out, build_table(table_n, options), csv);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace leafdiam::cli
