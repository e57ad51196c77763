#include "chaingroup/forest.hpp"

#include "chaingroup/errors.hpp"

#include <algorithm>
#include <sstream>

namespace chaingroup {

namespace {

// Minimal union-find for acyclicity checks.
struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i)
            parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // Returns false if x and y were already connected.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
        return true;
    }
};

} // namespace

Forest::Forest(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1)
        throw LabelOutOfRange("vertex count must be positive, got " + std::to_string(n));
    for (auto &e : edges) {
        if (e.first == e.second)
            throw SelfLoop("self-loop at vertex " + std::to_string(e.first));
        if (e.first > e.second)
            std::swap(e.first, e.second);
        if (e.first < 1 || e.second > n)
            throw LabelOutOfRange("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                  "} outside 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw DuplicateEdge("duplicate edge in edge set");
    DisjointSet ds(n);
    for (const auto &e : edges)
        if (!ds.unite(e.first - 1, e.second - 1))
            throw CycleDetected("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                "} closes a cycle");
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto &e : edges_) {
        adjacency_[static_cast<std::size_t>(e.first - 1)].push_back(e.second);
        adjacency_[static_cast<std::size_t>(e.second - 1)].push_back(e.first);
    }
    for (auto &nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

std::string Forest::to_file_string() const {
    std::ostringstream out;
    out << "n " << n_ << '\n';
    for (const auto &e : edges_)
        out << "e " << e.first << ' ' << e.second << '\n';
    return out.str();
}

bool operator==(const Forest &a, const Forest &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
}

std::strong_ordering operator<=>(const Forest &a, const Forest &b) {
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    return a.edges_ <=> b.edges_;
}

Forest parse_forest(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (n < 0) {
            long long value = 0;
            if (tag != "n" || !(fields >> value) || value < 1)
                throw ParseError("expected 'n <N>' as first content line" + where);
            std::string rest;
            if (fields >> rest)
                throw ParseError("trailing text after vertex count" + where);
            n = static_cast<int>(value);
            continue;
        }
        if (tag != "e")
            throw ParseError("expected 'e <u> <v>'" + where);
        long long u = 0, v = 0;
        if (!(fields >> u >> v))
            throw ParseError("malformed edge line" + where);
        std::string rest;
        if (fields >> rest)
            throw ParseError("trailing text after edge" + where);
        if (u == v)
            throw SelfLoop("self-loop at vertex " + std::to_string(u) + where);
        if (u < 1 || v < 1 || u > n || v > n)
            throw LabelOutOfRange("edge endpoint outside 1.." + std::to_string(n) + where);
        if (u > v)
            throw ParseError("edge endpoints must satisfy u < v" + where);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw ParseError("missing 'n <N>' line");
    return Forest(n, std::move(edges));
}

std::vector<std::vector<int>> components(const Forest &f) {
    const int n = f.vertex_count();
    DisjointSet ds(n);
    for (const auto &e : f.edges())
        ds.unite(e.first - 1, e.second - 1);
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        parts[static_cast<std::size_t>(ds.find(v - 1))].push_back(v);
    std::vector<std::vector<int>> result;
    for (auto &part : parts)
        if (!part.empty())
            result.push_back(std::move(part));
    return result;
}

DegreeProfile degree_profile(const Forest &f) {
    DegreeProfile profile;
    profile.degree.resize(static_cast<std::size_t>(f.vertex_count()));
    for (int v = 1; v <= f.vertex_count(); ++v) {
        const int d = f.degree(v);
        profile.degree[static_cast<std::size_t>(v - 1)] = d;
        if (d == 1)
            profile.leaves.push_back(v);
        else if (d >= 3)
            profile.branch_vertices.push_back(v);
    }
    return profile;
}

Path tree_path(const Forest &f, int from, int to) {
    const int n = f.vertex_count();
    if (from < 1 || from > n || to < 1 || to > n)
        throw LabelOutOfRange("path endpoint outside 1.." + std::to_string(n));
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    parent[static_cast<std::size_t>(from - 1)] = from;  // root marks itself
    std::vector<int> stack{from};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (u == to)
            break;
        for (int w : f.neighbors(u))
            if (parent[static_cast<std::size_t>(w - 1)] == 0) {
                parent[static_cast<std::size_t>(w - 1)] = u;
                stack.push_back(w);
            }
    }
    if (parent[static_cast<std::size_t>(to - 1)] == 0)
        throw NotASubgraph("vertices " + std::to_string(from) + " and " + std::to_string(to) +
                           " are in different components");
    Path path;
    for (int v = to; v != from; v = parent[static_cast<std::size_t>(v - 1)])
        path.vertices.push_back(v);
    path.vertices.push_back(from);
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

std::vector<Path> maximal_paths(const Forest &f) {
    std::vector<Path> paths;
    for (const auto &component : components(f)) {
        if (component.size() < 2)
            continue;
        std::vector<int> leaves;
        for (int v : component)
            if (f.degree(v) == 1)
                leaves.push_back(v);
        // In a tree the maximal paths are exactly the leaf-to-leaf paths.
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = i + 1; j < leaves.size(); ++j)
                paths.push_back(tree_path(f, leaves[i], leaves[j]));
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

Forest relabel(const Forest &f, const Permutation &pi) {
    if (pi.degree() != f.vertex_count())
        throw SizeMismatch("relabeling degree " + std::to_string(pi.degree()) +
                           " does not match vertex count " + std::to_string(f.vertex_count()));
    std::vector<Edge> edges;
    edges.reserve(f.edges().size());
    for (const auto &e : f.edges())
        edges.emplace_back(pi(e.first), pi(e.second));
    return Forest(f.vertex_count(), std::move(edges));
}

Forest disjoint_union(const std::vector<Forest> &parts) {
    int total = 0;
    std::vector<Edge> edges;
    for (const auto &part : parts) {
        for (const auto &e : part.edges())
            edges.emplace_back(e.first + total, e.second + total);
        total += part.vertex_count();
    }
    if (total == 0)
        throw InvalidSpec("disjoint union of zero forests");
    return Forest(total, std::move(edges));
}

bool is_extended_subforest(const Forest &sub, const std::vector<int> &embedding, const Forest &sup) {
    if (static_cast<int>(embedding.size()) != sub.vertex_count())
        throw NotASubgraph("embedding size does not match subforest vertex count");
    std::vector<char> hit(static_cast<std::size_t>(sup.vertex_count()), 0);
    for (int image : embedding) {
        if (image < 1 || image > sup.vertex_count())
            throw NotASubgraph("embedding image " + std::to_string(image) + " out of range");
        if (hit[static_cast<std::size_t>(image - 1)])
            throw NotASubgraph("embedding is not injective");
        hit[static_cast<std::size_t>(image - 1)] = 1;
    }
    for (const auto &e : sub.edges()) {
        const int u = embedding[static_cast<std::size_t>(e.first - 1)];
        const int v = embedding[static_cast<std::size_t>(e.second - 1)];
        const auto &nbrs = sup.neighbors(u);
        if (!std::binary_search(nbrs.begin(), nbrs.end(), v))
            throw NotASubgraph("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                               "} is not carried to an edge");
    }
    for (int v = 1; v <= sub.vertex_count(); ++v)
        if (sub.degree(v) == 1 && sup.degree(embedding[static_cast<std::size_t>(v - 1)]) != 1)
            return false;
    return true;
}

} // namespace chaingroup
