#pragma once

#include "chaingroup/classify.hpp"

#include <cstdint>
#include <functional>
#include <map>

namespace chaingroup {

/// Census bound currently in force: kDefaultCensusLimit unless the
/// environment variable CHAINGROUP_MAX_N raises it (hard ceiling n = 8).
int census_limit();

/// Edges of K_n in lexicographic order; forests are represented as bit masks
/// over this list.
std::vector<Edge> complete_graph_edges(int n);
std::vector<Edge> edges_from_mask(int n, std::uint32_t mask);
Forest forest_from_mask(int n, std::uint32_t mask);

/// All acyclic subsets of K_n's edges, exactly once each, by backtracking
/// over the edges in lexicographic order with union-find pruning. The vector
/// order is the enumeration order. Throws LimitExceeded outside
/// 1 <= n <= census_limit().
std::vector<std::uint32_t> labeled_forest_masks(int n);

/// Visit every labeled forest on [n] in enumeration order.
void enumerate_labeled_forests(int n, const std::function<void(const Forest &)> &visit);

/// Labeled trees on [n] indexed by Pruefer sequence; index < n^(n-2)
/// (n = 1, 2 each have exactly one tree).
std::uint64_t labeled_tree_count(int n);
Forest tree_from_index(int n, std::uint64_t index);

struct ClassTally {
    std::uint64_t count = 0;
    std::uint64_t first_index = 0;        // enumeration index of the example
    std::vector<Edge> example;            // earliest forest of the class
};

struct CensusReport {
    int n = 0;
    std::uint64_t total = 0;
    int parallelism = 1;
    std::map<GroupClass, ClassTally> tally;

    friend bool operator==(const CensusReport &, const CensusReport &);
};

/// Classify every labeled forest on [n]. The report is a deterministic
/// function of n alone: aggregation is a commutative merge followed by
/// canonical sorting, so any thread count yields identical output.
CensusReport run_census(int n, int parallelism, std::size_t cap = kDefaultEnumerationCap);

/// Single-threaded reference implementation of the same census; kept for
/// testing the parallel kernel against and for benchmarking.
CensusReport run_census_serial(int n, std::size_t cap = kDefaultEnumerationCap);

} // namespace chaingroup
