#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "gcol/graph.hpp"
#include "gcol/witness.hpp"

namespace gcol {

enum class GraphFormat { dimacs, edgelist };

/// DIMACS: `c` comment lines, one `p edge n m` header, `e u v` lines with
/// 1-based ids. Edgelist: `u v` per line, 0-based, `#` comments;
/// declared_n overrides the inferred vertex count. Duplicate edges
/// collapse; self-loops and malformed lines throw with the line number.
Graph parse_graph(std::istream& in, GraphFormat format, std::optional<int> declared_n = {});

void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

/// Witness JSON:
///   {"kind":"pgw","k":int,"classes":[[int,...],...]}
///   {"kind":"gw","k":int,"tree_labels":[int,...],"omega":[int,...]}
/// tree_labels follow the canonical preorder of build_grundy_tree(k).
std::string witness_to_json(const PartialGrundyWitness& w);
std::string witness_to_json(const GrundyWitness& w);

using AnyWitness = std::variant<PartialGrundyWitness, GrundyWitness>;

/// Parse either witness kind; n is the host vertex count. Throws
/// std::invalid_argument on malformed documents (wrong labels, vertex ids
/// out of range, wrong node count).
AnyWitness witness_from_json(const std::string& text, int n);

} // namespace gcol
