#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "pmc/multigraph.hpp"

namespace pmc {

// Canonical JSON graph format:
//   {"num_vertices": N, "edges": [[u,v], ...]}
// with 0-based ids; a repeated pair means a parallel edge. Extra top-level
// keys (e.g. a "meta" block) are ignored on read. Loops and out-of-range
// ids are rejected with a diagnostic naming the offending edge entry.
MultiGraph graph_from_json(const nlohmann::json& j);
MultiGraph read_graph_json(std::istream& in, const std::string& source_name = "<input>");
nlohmann::ordered_json graph_to_json(const MultiGraph& g);

// Text edge-list format: first line "p <N> <M>", then M lines "u v".
// Diagnostics name the offending line number.
MultiGraph read_graph_text(std::istream& in, const std::string& source_name = "<input>");
void write_graph_text(std::ostream& out, const MultiGraph& g);

// Reads either format, deciding by the first non-whitespace byte
// ('{' selects JSON).
MultiGraph read_graph_auto(std::istream& in, const std::string& source_name = "<input>");
MultiGraph read_graph_file(const std::string& path);

// 2-space-indented rendering that keeps primitive arrays (edge pairs,
// vertex lists) on compact lines instead of one number per line.
std::string render_json(const nlohmann::ordered_json& doc);

}  // namespace pmc
