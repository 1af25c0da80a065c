#include "indepbound/hypergraph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "indepbound/error.hpp"

namespace indepbound {
namespace {

std::vector<std::uint64_t> parse_ids(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::istringstream tokens(line);
  std::string tok;
  while (tokens >> tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw input_error("line " + std::to_string(line_no) + ": '" + tok +
                        "' is not a non-negative integer");
    out.push_back(value);
  }
  return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t k = 0, n = 0, m = 0;
  std::vector<vertex_id> flat;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto ids = parse_ids(line, line_no);
    if (ids.empty()) continue;
    if (!have_header) {
      if (ids.size() != 3)
        throw input_error("line " + std::to_string(line_no) + ": header must be `k n m`");
      k = ids[0];
      n = ids[1];
      m = ids[2];
      if (k < 1) throw input_error("line " + std::to_string(line_no) + ": k must be >= 1");
      if (n > 0xFFFFFFFFull) throw input_error("vertex count too large");
      flat.reserve(k * m);
      have_header = true;
      continue;
    }
    if (ids.size() != k)
      throw input_error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(k) + " vertex ids, got " + std::to_string(ids.size()));
    if (seen == m)
      throw input_error("line " + std::to_string(line_no) + ": more than m = " +
                        std::to_string(m) + " edges");
    for (auto id : ids) {
      if (id >= n)
        throw input_error("line " + std::to_string(line_no) + ": vertex id " +
                          std::to_string(id) + " out of range [0, " + std::to_string(n) + ")");
      flat.push_back(static_cast<vertex_id>(id));
    }
    ++seen;
  }
  if (!have_header) throw input_error("missing `k n m` header");
  if (seen != m)
    throw input_error("header announces " + std::to_string(m) + " edges, found " +
                      std::to_string(seen));
  return Hypergraph::from_flat(static_cast<int>(k), n, std::move(flat));
}

Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.k() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (std::size_t e = 0; e < h.m(); ++e) {
    auto ed = h.edge(e);
    for (std::size_t j = 0; j < ed.size(); ++j) out << (j ? " " : "") << ed[j];
    out << '\n';
  }
}

void write_hg_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  write_hg(out, h);
}

}  // namespace indepbound
