#include "indepbound/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "indepbound/bounds.hpp"
#include "indepbound/constructions.hpp"
#include "indepbound/error.hpp"
#include "indepbound/hypergraph_io.hpp"
#include "indepbound/independence.hpp"
#include "indepbound/permutation.hpp"
#include "indepbound/report.hpp"
#include "indepbound/verification.hpp"

namespace indepbound::cli {
namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string family;
  std::size_t n = 1;
  int k = 3;
  std::size_t i = 0;
  std::size_t w = 1;
  std::optional<std::string> epsilon;
  std::optional<std::size_t> A;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::string format = "json";
  std::string out_path;
  std::size_t max_n = kDefaultAlphaCap;
  std::int64_t max_td = 10;
  // verify
  std::string suite = "all";
  std::size_t random_systems = 1000;
  // report
  std::size_t from = 1;
  std::size_t to = 1;
  std::size_t step = 1;
};

// INDEPBOUND_CAPS="n=40,td=11" raises the enumeration caps before flags apply.
void apply_env_caps(RunConfig& cfg) {
  const char* env = std::getenv("INDEPBOUND_CAPS");
  if (!env) return;
  std::stringstream items(env);
  std::string item;
  while (std::getline(items, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw input_error("INDEPBOUND_CAPS: expected key=value");
    std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      if (key == "n") cfg.max_n = std::stoul(value);
      else if (key == "td") cfg.max_td = std::stol(value);
      else throw input_error("INDEPBOUND_CAPS: unknown key '" + key + "' (expected n, td)");
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const input_error*>(&e)) throw;
      throw input_error("INDEPBOUND_CAPS: bad value for '" + key + "'");
    }
  }
}

void add_graph_options(CLI::App* cmd, RunConfig& cfg) {
  auto* input = cmd->add_option("--input", cfg.input, "Hypergraph file (.hg)");
  auto* family = cmd->add_option("--family", cfg.family,
                                 "bipartite-tower | i-unit | family-H | matched-biclique");
  input->excludes(family);
  cmd->add_option("--n", cfg.n, "Family size parameter n");
  cmd->add_option("--k", cfg.k, "Uniformity k (i-unit, family-H)");
  cmd->add_option("--i", cfg.i, "Unit index i (i-unit)");
  cmd->add_option("--w", cfg.w, "Growth multiplier w (family-H)");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "json | csv | text");
  cmd->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
}

Hypergraph load(const RunConfig& cfg) {
  if (!cfg.input.empty()) return read_hg_file(cfg.input);
  if (cfg.family.empty()) throw input_error("give --input PATH or --family NAME");
  FamilySpec spec;
  spec.family = FamilySpec::parse_kind(cfg.family);
  spec.n = cfg.n;
  spec.k = cfg.k;
  spec.i = cfg.i;
  spec.w = cfg.w;
  return build_family(spec);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw input_error("cannot write '" + cfg.out_path + "'");
  file << text;
}

std::size_t resolve_A(const RunConfig& cfg, const Hypergraph& h, std::ostream& err) {
  if (cfg.A) {
    if (*cfg.A < 1) throw input_error("--A must be at least 1");
    if (cfg.epsilon) err << "note: --A " << *cfg.A << " overrides --epsilon\n";
    return *cfg.A;
  }
  if (cfg.epsilon) return threshold_from_epsilon(h, parse_rational(*cfg.epsilon));
  return 1;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  Hypergraph h = load(cfg);
  CompareOptions options;
  options.epsilon = parse_rational(cfg.epsilon.value_or("1/2"));
  options.epsilon_given = cfg.epsilon.has_value();
  options.A = cfg.A;
  options.seed = cfg.seed;
  options.trials = cfg.trials.value_or(100);
  options.alpha_cap = cfg.max_n;
  emit(cfg, render(compare_bounds(h, options), parse_format(cfg.format)), out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.max_td = cfg.max_td;
  options.random_systems = cfg.random_systems;
  options.seed = cfg.seed;
  auto report = run_verification(cfg.suite, options);
  emit(cfg, render(report, parse_format(cfg.format)), out);
  return report.all_pass() ? kOk : kVerificationFailed;
}

int cmd_greedy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Hypergraph h = load(cfg);
  const std::size_t A = resolve_A(cfg, h, err);
  auto batch = run_trials(h, A, cfg.trials.value_or(100), cfg.seed);
  if (!is_independent(h, batch.best_set)) {
    err << "internal error: best set is not independent\n";
    return kVerificationFailed;
  }
  emit(cfg, render(batch, parse_format(cfg.format)), out);
  return kOk;
}

int cmd_alpha(const RunConfig& cfg, std::ostream& out) {
  Hypergraph h = load(cfg);
  auto witness = maximum_independent_set(h, cfg.max_n);
  if (!is_independent(h, witness)) throw std::logic_error("alpha witness is not independent");
  nlohmann::json doc{{"schema", kSchema}, {"k", h.k()}, {"n", h.n()}, {"m", h.m()},
                     {"alpha", witness.size()}, {"witness", witness}};
  nlohmann::json bounds{{"caro_tuza", to_string(caro_tuza(h))},
                        {"spencer_shape", to_string(spencer_bound(h, 1).value)},
                        {"caro_tuza_simplified_shape", to_string(caro_tuza_simplified(h, 1))}};
  if (h.k() == 2) bounds["caro_wei"] = to_string(caro_wei(h));
  doc["bounds"] = bounds;
  std::ostringstream text;
  switch (parse_format(cfg.format)) {
    case Format::json: text << doc.dump(2) << '\n'; break;
    case Format::csv:
      text << "quantity,value\nalpha," << witness.size() << '\n';
      for (auto& [key, value] : bounds.items()) text << key << ',' << value.get<std::string>() << '\n';
      break;
    case Format::text:
      text << "alpha = " << witness.size() << '\n';
      for (auto& [key, value] : bounds.items())
        text << "  " << key << " = " << value.get<std::string>() << '\n';
      break;
  }
  emit(cfg, text.str(), out);
  return kOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw input_error("construct needs --family NAME");
  Hypergraph h = load(cfg);
  std::ostringstream text;
  text << "# " << cfg.family << " n=" << cfg.n << " k=" << cfg.k << " i=" << cfg.i
       << " w=" << cfg.w << '\n';
  write_hg(text, h);
  emit(cfg, text.str(), out);
  return kOk;
}

// Degree-sequence vs average-degree bound across a family parameter sweep.
int cmd_report(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw input_error("report needs --family NAME");
  if (cfg.step < 1 || cfg.from > cfg.to) throw input_error("report needs --from <= --to, --step >= 1");
  const BigRational epsilon = parse_rational(cfg.epsilon.value_or("1/2"));
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t p = cfg.from; p <= cfg.to; p += cfg.step) {
    RunConfig one = cfg;
    if (FamilySpec::parse_kind(cfg.family) == FamilySpec::i_unit) one.i = p;
    else one.n = p;
    Hypergraph h = load(one);
    BoundFamily family = h.k() == 2 ? BoundFamily::triangle() : BoundFamily::linear_uniform();
    nlohmann::json row{{"param", p},
                       {"vertices", h.n()},
                       {"edges", h.m()},
                       {"average_degree", to_string(h.average_degree())},
                       {"family", family.name()}};
    try {
      auto seq = degree_sequence_bound(h, epsilon, 1, family);
      auto avg = average_degree_bound(h, 1, family);
      row["degree_sequence"] = to_string(seq);
      row["average_degree_bound"] = to_string(avg);
      row["ratio"] = to_string(seq / avg);
      row["exceeds_vertices"] = seq > HighPrecision(h.n());
    } catch (const undefined_error& e) {
      row["note"] = e.what();
    }
    rows.push_back(row);
  }
  std::ostringstream text;
  const std::vector<std::string> columns{"param", "vertices", "edges", "average_degree",
                                         "degree_sequence", "average_degree_bound", "ratio",
                                         "exceeds_vertices", "note"};
  auto cell = [](const nlohmann::json& row, const std::string& key) -> std::string {
    if (!row.contains(key)) return "";
    return row[key].is_string() ? row[key].get<std::string>() : row[key].dump();
  };
  switch (parse_format(cfg.format)) {
    case Format::json:
      text << nlohmann::json{{"schema", kSchema}, {"family", cfg.family},
                             {"epsilon", to_string(epsilon)}, {"c", "1"},
                             {"label", "shape-only"}, {"rows", rows}}
                  .dump(2)
           << '\n';
      break;
    case Format::csv:
    case Format::text: {
      const char sep = parse_format(cfg.format) == Format::csv ? ',' : '\t';
      for (std::size_t c = 0; c < columns.size(); ++c) text << (c ? std::string(1, sep) : "") << columns[c];
      text << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c)
          text << (c ? std::string(1, sep) : "")
               << (sep == ',' ? csv_field(cell(row, columns[c])) : cell(row, columns[c]));
        text << '\n';
      }
      break;
    }
  }
  emit(cfg, text.str(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    apply_env_caps(cfg);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Degree-sequence lower bounds on the independence number of k-uniform hypergraphs",
               "indepbound"};
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "Evaluate every applicable lower bound");
  auto* verify = app.add_subcommand("verify", "Run exact identity / probability / MPIE checks");
  auto* greedy = app.add_subcommand("greedy", "Random-order low-backward selection plus greedy");
  auto* alpha = app.add_subcommand("alpha", "Exact independence number by branch and bound");
  auto* construct = app.add_subcommand("construct", "Write an extremal family as .hg");
  auto* report = app.add_subcommand("report", "Degree-sequence / average-degree ratio table");

  for (auto* cmd : {bounds, greedy, alpha, construct, report}) add_graph_options(cmd, cfg);
  for (auto* cmd : {bounds, verify, greedy, alpha, construct, report}) add_output_options(cmd, cfg);
  for (auto* cmd : {bounds, greedy, report}) {
    cmd->add_option("--epsilon", cfg.epsilon, "Threshold exponent: A = ceil(D^epsilon)");
  }
  for (auto* cmd : {bounds, greedy}) {
    cmd->add_option("--A", cfg.A, "Backward-edge threshold A (wins over --epsilon)");
    cmd->add_option("--trials", cfg.trials, "Number of random orders (default 100)");
  }
  for (auto* cmd : {bounds, greedy, verify}) cmd->add_option("--seed", cfg.seed, "PRNG seed (default 0)");
  for (auto* cmd : {bounds, alpha}) cmd->add_option("--max-n", cfg.max_n, "Exact alpha cap on n");
  verify->add_option("--max-td", cfg.max_td, "Largest t*d enumerated (default 10)");
  verify->add_option("--suite", cfg.suite, "identities | probability | mpie | all");
  verify->add_option("--random", cfg.random_systems, "Random set systems for the mpie suite");
  report->add_option("--from", cfg.from, "First sweep parameter");
  report->add_option("--to", cfg.to, "Last sweep parameter");
  report->add_option("--step", cfg.step, "Sweep step");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*bounds) return cmd_bounds(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*greedy) return cmd_greedy(cfg, out, err);
    if (*alpha) return cmd_alpha(cfg, out);
    if (*construct) return cmd_construct(cfg, out);
    if (*report) return cmd_report(cfg, out);
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const undefined_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace indepbound::cli
