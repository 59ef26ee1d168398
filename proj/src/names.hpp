#ifndef KCOVER_NAMES_HPP
#define KCOVER_NAMES_HPP

#include <string>

#include "graph.hpp"

namespace kcover {

/// Build a graph from a name in the corpus grammar:
///
///   Name    := Base [ "-" Pattern ]
///   Base    := "K" n [ "," n ]
///   Pattern := join ( ("∪"|"u") join )*        disjoint union
///   join    := term ( ("∨"|"v") term )*        one-vertex join
///   term    := [ count ] atom                  count disjoint copies
///   atom    := "K" n [ "," n ] | "(" Pattern ")"
///
/// Examples: "K8-K3", "K8-(K1,2u2K2)", "K9-2K2", "K8-(K3vK2)".
/// The pattern is placed on the lowest-indexed base vertices, terms left
/// to right; a join identifies the last vertex of its left operand with
/// the first vertex of its right operand; stars K1,m put the center
/// first. Throws std::invalid_argument on malformed names or patterns
/// that do not fit the base.
Graph parse_name(const std::string& name);

/// True if the text plausibly starts a grammar name ("K" + digit);
/// graph6 strings never match (their bytes are all >= '?').
bool looks_like_name(const std::string& text);

}  // namespace kcover

#endif
