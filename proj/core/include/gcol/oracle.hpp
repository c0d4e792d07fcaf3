#pragma once

#include <optional>

#include "gcol/graph.hpp"
#include "gcol/witness.hpp"

namespace gcol {

/// Exact Grundy number by exhausting colorings that are proper, gap-free,
/// and where every vertex colored z has a neighbor in each class below z
/// (exactly the first-fit-reachable colorings). Guard: n <= 10.
int oracle_grundy(const Graph& g);

/// Exact Grundy number as the max of first_fit over all n! orderings.
/// Independent cross-check for oracle_grundy. Guard: n <= 10.
int oracle_grundy_by_orderings(const Graph& g);

/// Exact partial Grundy number by exhausting vertex labelings with classes
/// 1..k plus a "not in witness" label, requiring each class independent
/// and dominated. Guard: n <= 10.
int oracle_partial_grundy(const Graph& g);

/// Does g contain K_{i,j} as a (not necessarily induced) subgraph?
/// Guard: n <= 16.
bool oracle_has_kij(const Graph& g, int i, int j);

/// Exhaustive search for a k-partial-Grundy witness with the small-witness
/// size profile |X_i| <= k-i+1. Returns a verified witness or nullopt.
/// Guard: n <= 10.
std::optional<PartialGrundyWitness> brute_force_small_pgw(const Graph& g, int k);

} // namespace gcol
