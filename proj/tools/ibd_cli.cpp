// Command-line front end: entropy summaries, divergence matrices, forward
// selection, redundancy reports and the property-verification harness.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ibd/csv.hpp"
#include "ibd/divergence.hpp"
#include "ibd/io.hpp"
#include "ibd/selection.hpp"
#include "ibd/spec_parse.hpp"
#include "ibd/verify.hpp"

namespace {

using ibd::Json;

/// Uniform view over the input kinds: a list of named categorical
/// variables with pairwise joint laws.
class VariableSet {
 public:
  static VariableSet from_path(const std::string& path, const std::string& format) {
    VariableSet v;
    if (format == "csv") {
      v.dataset_.emplace(ibd::load_dataset_csv(path));
      v.names_ = v.dataset_->columns();
    } else if (format == "joint-json") {
      v.joint_.emplace(ibd::load_joint(path));
      v.names_ = {"x", "y"};
    } else if (format == "triple-json") {
      v.marginals_.emplace(ibd::pairwise_marginals(ibd::load_triple(path)));
      v.names_ = {"x", "y", "z"};
    } else {
      throw ibd::ParseError("unknown --format '" + format +
                            "' (expected csv, joint-json or triple-json)");
    }
    return v;
  }

  const std::vector<std::string>& names() const { return names_; }

  ibd::InfoSummary pair_summary(std::size_t i, std::size_t j) const {
    if (dataset_) {
      const std::size_t xs[1] = {i}, ys[1] = {j};
      return ibd::summarize(ibd::empirical_joint(*dataset_, xs, ys));
    }
    if (joint_) {
      ibd::InfoSummary s = ibd::summarize(*joint_);
      return i <= j ? s : ibd::swapped(s);
    }
    auto pick = [&](std::size_t a, std::size_t b) -> const ibd::JointDistribution& {
      if (a == 0 && b == 1) return marginals_->xy;
      if (a == 0 && b == 2) return marginals_->xz;
      return marginals_->yz;
    };
    const bool flip = i > j;
    const ibd::InfoSummary s = ibd::summarize(pick(std::min(i, j), std::max(i, j)));
    return flip ? ibd::swapped(s) : s;
  }

  double entropy_of(std::size_t i) const { return pair_summary(i, i).h_x; }

 private:
  std::vector<std::string> names_;
  std::optional<ibd::Dataset> dataset_;
  std::optional<ibd::JointDistribution> joint_;
  std::optional<ibd::PairwiseMarginals> marginals_;
};

std::string csv_quote(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_number(double v) {
  std::ostringstream out;
  out << std::setprecision(9) << v;
  return out.str();
}

int run_entropy(const std::string& input, const std::string& format, ibd::LogBase base,
                const std::string& output) {
  const VariableSet vars = VariableSet::from_path(input, format);
  const std::size_t n = vars.names().size();
  std::vector<double> entropies(n);
  for (std::size_t i = 0; i < n; ++i) entropies[i] = vars.entropy_of(i);
  std::vector<std::tuple<std::size_t, std::size_t, ibd::InfoSummary>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j, vars.pair_summary(i, j));
  }
  auto disp = [&](double nats) { return ibd::display_value(nats, base); };

  if (output == "json") {
    Json doc;
    doc["base"] = base == ibd::LogBase::kNatural ? "e" : (base == ibd::LogBase::kTwo ? "2" : "10");
    Json cols = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      cols.push_back(Json{{"name", vars.names()[i]}, {"entropy", disp(entropies[i])}});
    }
    doc["columns"] = cols;
    Json out_pairs = Json::array();
    for (const auto& [i, j, s] : pairs) {
      out_pairs.push_back(Json{{"x", vars.names()[i]},
                               {"y", vars.names()[j]},
                               {"h_x", disp(s.h_x)},
                               {"h_y", disp(s.h_y)},
                               {"h_joint", disp(s.h_joint)},
                               {"h_x_given_y", disp(s.h_x_given_y)},
                               {"h_y_given_x", disp(s.h_y_given_x)},
                               {"mi", disp(s.mi)}});
    }
    doc["pairs"] = out_pairs;
    std::cout << doc.dump(2) << "\n";
  } else if (output == "csv") {
    std::cout << "column,entropy\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << csv_quote(vars.names()[i]) << "," << format_number(disp(entropies[i])) << "\n";
    }
    std::cout << "\nx,y,h_x,h_y,h_joint,h_x_given_y,h_y_given_x,mi\n";
    for (const auto& [i, j, s] : pairs) {
      std::cout << csv_quote(vars.names()[i]) << "," << csv_quote(vars.names()[j]) << ","
                << format_number(disp(s.h_x)) << "," << format_number(disp(s.h_y)) << ","
                << format_number(disp(s.h_joint)) << "," << format_number(disp(s.h_x_given_y))
                << "," << format_number(disp(s.h_y_given_x)) << "," << format_number(disp(s.mi))
                << "\n";
    }
  } else {
    std::cout << "Per-column entropy:\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << "  " << vars.names()[i] << ": " << format_number(disp(entropies[i])) << "\n";
    }
    std::cout << "Pairwise summaries (h_x h_y h_joint h_x|y h_y|x mi):\n";
    for (const auto& [i, j, s] : pairs) {
      std::cout << "  " << vars.names()[i] << " / " << vars.names()[j] << ": "
                << format_number(disp(s.h_x)) << " " << format_number(disp(s.h_y)) << " "
                << format_number(disp(s.h_joint)) << " " << format_number(disp(s.h_x_given_y))
                << " " << format_number(disp(s.h_y_given_x)) << " " << format_number(disp(s.mi))
                << "\n";
    }
  }
  return 0;
}

int run_matrix(const std::string& input, const std::string& format, const std::string& spec_text,
               double alpha, const std::string& output) {
  const ibd::ComplexitySpec spec = ibd::parse_complexity_spec(spec_text, alpha);
  const VariableSet vars = VariableSet::from_path(input, format);
  const std::size_t n = vars.names().size();
  std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double nib = ibd::evaluate(spec, vars.pair_summary(i, j)).nib;
      matrix[i][j] = nib;
      matrix[j][i] = nib;
    }
  }
  if (output == "json") {
    Json doc{{"spec", spec.display()}, {"normalized", true}, {"columns", vars.names()}};
    Json rows = Json::array();
    for (const auto& row : matrix) rows.push_back(row);
    doc["matrix"] = rows;
    std::cout << doc.dump(2) << "\n";
  } else if (output == "csv") {
    std::cout << "column";
    for (const auto& name : vars.names()) std::cout << "," << csv_quote(name);
    std::cout << "\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << csv_quote(vars.names()[i]);
      for (std::size_t j = 0; j < n; ++j) std::cout << "," << format_number(matrix[i][j]);
      std::cout << "\n";
    }
  } else {
    std::cout << "Normalized divergence matrix (" << spec.display() << "):\n";
    for (std::size_t i = 0; i < n; ++i) {
      std::cout << "  " << vars.names()[i] << ":";
      for (std::size_t j = 0; j < n; ++j) std::cout << " " << format_number(matrix[i][j]);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_select(const std::string& input, const std::string& format, const std::string& spec_text,
               double alpha, const std::string& target, std::size_t max_features,
               double min_improvement, const std::string& output) {
  if (format != "csv") throw ibd::ParseError("select requires --format csv");
  const ibd::ComplexitySpec spec = ibd::parse_complexity_spec(spec_text, alpha);
  const ibd::Dataset data = ibd::load_dataset_csv(input);
  const std::size_t limit = max_features == 0 ? data.column_count() - 1 : max_features;
  const ibd::SelectionTrace trace =
      ibd::forward_select(spec, data, target, limit, min_improvement, /*normalized=*/true);
  Json doc{{"target", target},
           {"spec", spec.display()},
           {"normalized", true},
           {"max_features", limit},
           {"min_improvement", min_improvement}};
  Json steps = Json::array();
  for (const ibd::SelectionStep& s : trace.steps) {
    steps.push_back(
        Json{{"column", s.column}, {"divergence", s.divergence}, {"accepted", s.accepted}});
  }
  doc["steps"] = steps;
  doc["selected"] = trace.selected;
  doc["stopping_reason"] = trace.stopping_reason;
  if (output == "text") {
    std::cout << "Selected:";
    for (const auto& c : trace.selected) std::cout << " " << c;
    std::cout << "\nStopping reason: " << trace.stopping_reason << "\n";
    for (const ibd::SelectionStep& s : trace.steps) {
      std::cout << "  " << (s.accepted ? "+" : "-") << " " << s.column << " "
                << format_number(s.divergence) << "\n";
    }
  } else {
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int run_redundancy(const std::string& input, const std::string& format,
                   const std::string& spec_text, double alpha, double threshold,
                   const std::string& output) {
  if (format != "csv") throw ibd::ParseError("redundancy requires --format csv");
  const ibd::ComplexitySpec spec = ibd::parse_complexity_spec(spec_text, alpha);
  const ibd::Dataset data = ibd::load_dataset_csv(input);
  const auto pairs = ibd::detect_redundant(spec, data, threshold);
  if (output == "json") {
    Json list = Json::array();
    for (const ibd::RedundantPair& p : pairs) {
      list.push_back(Json{{"col_a", p.col_a},
                          {"col_b", p.col_b},
                          {"divergence", p.divergence},
                          {"bound", p.impact_bound ? Json(*p.impact_bound) : Json(nullptr)}});
    }
    std::cout << Json{{"spec", spec.display()}, {"threshold", threshold}, {"pairs", list}}.dump(2)
              << "\n";
  } else {
    std::cout << "col_a,col_b,divergence,bound\n";
    for (const ibd::RedundantPair& p : pairs) {
      std::cout << csv_quote(p.col_a) << "," << csv_quote(p.col_b) << ","
                << format_number(p.divergence) << ","
                << (p.impact_bound ? format_number(*p.impact_bound) : "") << "\n";
    }
  }
  return 0;
}

int run_verify(std::uint64_t seed, long long trials) {
  ibd::VerifyOptions options;
  options.seed = seed;
  options.trials = trials;
  const auto checks = ibd::run_verification(options);
  std::cout << ibd::verification_report(options, checks).dump(2) << "\n";
  return ibd::has_proved_violations(checks) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-based divergences over categorical data"};
  app.require_subcommand(1);

  std::string input, format = "csv", output, spec_text = "I", target, base_text = "e";
  double alpha = 0.5, min_improvement = 0.0, threshold = 0.05;
  std::size_t max_features = 0;
  std::uint64_t seed = 1;
  long long trials = 1000;

  auto add_io = [&](CLI::App* cmd, const char* default_output) {
    cmd->add_option("--input", input, "input file")->required();
    cmd->add_option("--format", format, "csv | joint-json | triple-json")
        ->check(CLI::IsMember({"csv", "joint-json", "triple-json"}));
    output = default_output;
    cmd->add_option("--output", output, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_text,
                    "divergence spec: E | I | min | S[:a] | R[:a] | P[:a] | D[:a] | "
                    "convex:w*K+... | nconvex:w*K+...");
    cmd->add_option("--alpha", alpha, "alpha for specs written without one")
        ->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* entropy = app.add_subcommand("entropy", "per-column entropies and pair summaries");
  add_io(entropy, "text");
  entropy->add_option("--base", base_text, "display log base: e | 2 | 10")
      ->check(CLI::IsMember({"e", "2", "10"}));

  CLI::App* matrix = app.add_subcommand("matrix", "pairwise normalized divergence matrix");
  add_io(matrix, "text");
  add_spec(matrix);

  CLI::App* select = app.add_subcommand("select", "greedy forward covariate selection");
  add_io(select, "json");
  add_spec(select);
  select->add_option("--target", target, "target column")->required();
  select->add_option("--max-features", max_features, "0 = no limit");
  select->add_option("--min-improvement", min_improvement,
                     "smallest accepted drop of the normalized divergence")
      ->check(CLI::NonNegativeNumber);

  CLI::App* redundancy = app.add_subcommand("redundancy", "near-redundant column pairs");
  add_io(redundancy, "csv");
  add_spec(redundancy);
  redundancy->add_option("--threshold", threshold, "report pairs with divergence <= threshold")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand("verify", "run the property-verification harness");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--trials", trials, "trials per check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (entropy->parsed()) {
      return run_entropy(input, format, ibd::parse_log_base(base_text), output);
    }
    if (matrix->parsed()) return run_matrix(input, format, spec_text, alpha, output);
    if (select->parsed()) {
      return run_select(input, format, spec_text, alpha, target, max_features, min_improvement,
                        output);
    }
    if (redundancy->parsed()) {
      return run_redundancy(input, format, spec_text, alpha, threshold, output);
    }
    if (verify->parsed()) return run_verify(seed, trials);
  } catch (const ibd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
