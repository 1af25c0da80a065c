#pragma once

#include <iosfwd>
#include <string>

#include "indepbound/hypergraph.hpp"

namespace indepbound {

// ".hg" text format: a header line `k n m`, then m lines of k 0-based vertex
// ids. Everything from '#' to end of line is a comment; blank lines are
// ignored. Throws input_error with a line number on malformed input.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg_file(const std::string& path, const Hypergraph& h);

}  // namespace indepbound
