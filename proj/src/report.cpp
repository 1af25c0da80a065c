#include "indepbound/report.hpp"

#include <sstream>

#include "indepbound/error.hpp"

namespace indepbound {

using nlohmann::json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string params_string(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

std::string fixed(double x) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << x;
  return out.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw input_error("unknown format '" + name + "' (expected json, csv, text)");
}

json to_json(const BoundReport& r) {
  json bounds = json::array();
  for (const auto& b : r.bounds) {
    json rec{{"name", b.name}, {"params", b.params}, {"value", b.value}, {"label", b.label},
             {"applicable", b.applicable}};
    if (!b.note.empty()) rec["note"] = b.note;
    bounds.push_back(std::move(rec));
  }
  json ratios = json::array();
  for (const auto& x : r.ratios)
    ratios.push_back({{"family", x.family},
                      {"degree_sequence", x.degree_sequence},
                      {"average_degree", x.average_degree},
                      {"ratio", x.ratio}});
  json out{{"schema", kSchema},
           {"hypergraph",
            {{"k", r.k}, {"n", r.n}, {"m", r.m}, {"average_degree", to_string(r.average_degree)},
             {"linear", r.linear}}},
           {"bounds", bounds},
           {"ratios", ratios},
           {"pipeline",
            {{"A", r.A}, {"A_source", r.A_source}, {"seed", r.seed}, {"trials", r.trials},
             {"best_independent_set", r.heuristic_alpha}, {"mean_selected", fixed(r.mean_selected)}}}};
  out["pipeline"]["expected_selected"] =
      r.expected_selected ? json(to_string(*r.expected_selected)) : json(nullptr);
  out["exact_alpha"] = r.exact_alpha ? json(*r.exact_alpha) : json(nullptr);
  if (!r.alpha_note.empty()) out["alpha_note"] = r.alpha_note;
  return out;
}

json to_json(const TrialBatch& b) {
  json out{{"schema", kSchema},
           {"seed", b.seed},
           {"trials", b.trials},
           {"A", b.A},
           {"linear", b.linear},
           {"mean_selected", fixed(b.mean_selected)},
           {"stderr_selected", fixed(b.stderr_selected)},
           {"mean_internal_edges", fixed(b.mean_internal_edges)},
           {"mean_final", fixed(b.mean_final)},
           {"best_size", b.max_final},
           {"best_set", b.best_set}};
  if (b.expected_selected) {
    out["expected_selected"] = to_string(*b.expected_selected);
    out["expected_selected_decimal"] = to_string(to_high_precision(*b.expected_selected), 12);
    out["expectation_check"] = "linear";
  } else {
    out["expected_selected"] = nullptr;
    out["expectation_check"] = "skipped: hypergraph is not linear";
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json rec{{"name", c.name}, {"params", c.params}, {"pass", c.pass}};
    if (!c.lhs.empty()) rec["lhs"] = c.lhs;
    if (!c.rhs.empty()) rec["rhs"] = c.rhs;
    if (!c.note.empty()) rec["note"] = c.note;
    checks.push_back(std::move(rec));
  }
  return {{"schema", kSchema}, {"suite", r.suite},     {"checks", checks},
          {"passed", r.passed()}, {"failed", r.failed()}, {"all_pass", r.all_pass()}};
}

std::string render(const BoundReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: out << to_json(r).dump(2) << '\n'; break;
    case Format::csv:
      out << "name,params,value,label,applicable,note\n";
      for (const auto& b : r.bounds)
        out << csv_field(b.name) << ',' << csv_field(params_string(b.params)) << ','
            << csv_field(b.value) << ',' << b.label << ',' << (b.applicable ? "true" : "false")
            << ',' << csv_field(b.note) << '\n';
      for (const auto& x : r.ratios)
        out << csv_field("ratio/" + x.family) << ",," << csv_field(x.ratio) << ",shape-only,true,\n";
      break;
    case Format::text:
      out << "k=" << r.k << " n=" << r.n << " m=" << r.m
          << " D=" << to_string(r.average_degree) << (r.linear ? " linear" : "") << '\n';
      for (const auto& b : r.bounds) {
        out << "  " << b.name;
        if (!b.params.empty()) out << " [" << params_string(b.params) << "]";
        out << " = " << (b.value.empty() ? "n/a" : b.value) << "  (" << b.label
            << (b.applicable ? "" : ", not applicable") << ")";
        if (!b.note.empty()) out << "  " << b.note;
        out << '\n';
      }
      for (const auto& x : r.ratios) out << "  ratio " << x.family << " = " << x.ratio << '\n';
      out << "  A=" << r.A << " (" << r.A_source << ") seed=" << r.seed
          << " trials=" << r.trials << '\n';
      if (r.exact_alpha) out << "  alpha = " << *r.exact_alpha << '\n';
      else if (!r.alpha_note.empty()) out << "  alpha: " << r.alpha_note << '\n';
      break;
  }
  return out.str();
}

std::string render(const TrialBatch& b, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: out << to_json(b).dump(2) << '\n'; break;
    case Format::csv:
      out << "trial,selected,internal_edges,final_size\n";
      for (std::size_t i = 0; i < b.records.size(); ++i)
        out << i << ',' << b.records[i].selected << ',' << b.records[i].internal_edges << ','
            << b.records[i].final_size << '\n';
      break;
    case Format::text: {
      out << "A=" << b.A << " seed=" << b.seed << " trials=" << b.trials << '\n'
          << "mean |I| = " << fixed(b.mean_selected) << " +- " << fixed(b.stderr_selected);
      if (b.expected_selected)
        out << " (expected " << to_string(to_high_precision(*b.expected_selected), 12) << ")";
      else
        out << " (expectation check skipped: not linear)";
      out << "\nbest independent set (" << b.max_final << "):";
      for (auto v : b.best_set) out << ' ' << v;
      out << '\n';
      break;
    }
  }
  return out.str();
}

std::string render(const VerificationReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: out << to_json(r).dump(2) << '\n'; break;
    case Format::csv:
      out << "name,params,pass,lhs,rhs,note\n";
      for (const auto& c : r.checks)
        out << csv_field(c.name) << ',' << csv_field(params_string(c.params)) << ','
            << (c.pass ? "true" : "false") << ',' << csv_field(c.lhs) << ',' << csv_field(c.rhs)
            << ',' << csv_field(c.note) << '\n';
      break;
    case Format::text:
      for (const auto& c : r.checks)
        if (!c.pass)
          out << "FAIL " << c.name << " [" << params_string(c.params) << "] lhs=" << c.lhs
              << " rhs=" << c.rhs << '\n';
      out << r.suite << ": " << r.passed() << " passed, " << r.failed() << " failed\n";
      break;
  }
  return out.str();
}

}  // namespace indepbound
