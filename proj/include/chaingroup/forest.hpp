#pragma once

#include "chaingroup/perm.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace chaingroup {

/// Unordered edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

/// A labeled forest: an acyclic simple graph on the vertices 1..n.
/// Immutable after construction; every operation on forests is a pure
/// function, so values are safe to share between threads.
class Forest {
public:
    /// Validates the edge set: endpoints in range, no self-loops, no
    /// duplicates, acyclic. Edge pairs may arrive in either orientation.
    Forest(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<int> &neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Forest file format: "n <N>" then "e <u> <v>" lines, edges sorted.
    std::string to_file_string() const;

    friend bool operator==(const Forest &, const Forest &);
    friend std::strong_ordering operator<=>(const Forest &, const Forest &);

private:
    int n_;
    std::vector<Edge> edges_;                   // sorted lexicographically, u < v
    std::vector<std::vector<int>> adjacency_;   // sorted neighbor lists
};

/// A path: a sequence of distinct vertices with consecutive ones adjacent in
/// the owning forest. length() counts edges.
struct Path {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const Path &, const Path &) = default;
    friend std::strong_ordering operator<=>(const Path &, const Path &) = default;
};

/// Parse the forest file format. Lines starting with '#' and blank lines are
/// ignored; the first content line must be "n <N>", and every edge line
/// "e <u> <v>" must satisfy 1 <= u < v <= N.
Forest parse_forest(const std::string &text);

/// Connected components as sorted vertex sets, listed by smallest element;
/// a partition of [n] including singletons.
std::vector<std::vector<int>> components(const Forest &f);

struct DegreeProfile {
    std::vector<int> degree;           // degree[v-1]
    std::vector<int> leaves;           // degree exactly 1, ascending
    std::vector<int> branch_vertices;  // degree >= 3, ascending
};
DegreeProfile degree_profile(const Forest &f);

/// The unique path between two vertices of the same component, oriented from
/// `from` to `to`. Throws NotASubgraph if they are in different components.
Path tree_path(const Forest &f, int from, int to);

/// All maximal paths: per component with at least two vertices, one path per
/// unordered pair of leaves. Each path starts at its smaller endpoint and the
/// list is sorted lexicographically. Single-vertex components contribute
/// nothing.
std::vector<Path> maximal_paths(const Forest &f);

/// Apply a vertex relabeling: edge {u,v} becomes {pi(u), pi(v)}.
Forest relabel(const Forest &f, const Permutation &pi);

/// Concatenate forests, shifting the labels of each part by the sizes of the
/// parts before it.
Forest disjoint_union(const std::vector<Forest> &parts);

/// `embedding[i-1]` maps vertex i of `sub` into `sup`. Requires an injective
/// map carrying edges to edges (else NotASubgraph). True iff every leaf of
/// `sub` lands on a leaf of `sup`.
bool is_extended_subforest(const Forest &sub, const std::vector<int> &embedding, const Forest &sup);

} // namespace chaingroup
