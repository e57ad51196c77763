#include "chaingroup/census.hpp"

#include "chaingroup/errors.hpp"

#include <algorithm>
#include <cstdlib>

#include <omp.h>

namespace chaingroup {

int census_limit() {
    static const int limit = [] {
        if (const char *raw = std::getenv("CHAINGROUP_MAX_N")) {
            const int requested = std::atoi(raw);
            if (requested > kDefaultCensusLimit)
                return std::min(requested, kHardCensusLimit);
        }
        return kDefaultCensusLimit;
    }();
    return limit;
}

std::vector<Edge> complete_graph_edges(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return edges;
}

std::vector<Edge> edges_from_mask(int n, std::uint32_t mask) {
    const auto all = complete_graph_edges(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (mask & (std::uint32_t{1} << i))
            edges.push_back(all[i]);
    return edges;
}

Forest forest_from_mask(int n, std::uint32_t mask) {
    return Forest(n, edges_from_mask(n, mask));
}

namespace {

void check_census_bound(int n) {
    if (n < 1 || n > census_limit())
        throw LimitExceeded("census bound is 1 <= n <= " + std::to_string(census_limit()) +
                            " (raise with CHAINGROUP_MAX_N), got n = " + std::to_string(n));
}

struct MaskEnumerator {
    const std::vector<Edge> &edges;
    std::vector<int> root;  // union-find over 0..n-1, path-compressed copies on branch
    std::vector<std::uint32_t> out;

    int find(std::vector<int> &parent, int x) const {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }

    void walk(std::size_t index, std::uint32_t mask, std::vector<int> parent) {
        if (index == edges.size()) {
            out.push_back(mask);
            return;
        }
        // exclude first, so enumeration starts from the empty forest
        walk(index + 1, mask, parent);
        const int a = find(parent, edges[index].first - 1);
        const int b = find(parent, edges[index].second - 1);
        if (a == b)
            return;  // would close a cycle; prune the include branch
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        walk(index + 1, mask | (std::uint32_t{1} << index), std::move(parent));
    }
};

} // namespace

std::vector<std::uint32_t> labeled_forest_masks(int n) {
    check_census_bound(n);
    const auto edges = complete_graph_edges(n);
    MaskEnumerator enumerator{edges, {}, {}};
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        parent[static_cast<std::size_t>(i)] = i;
    enumerator.walk(0, 0, std::move(parent));
    return enumerator.out;
}

void enumerate_labeled_forests(int n, const std::function<void(const Forest &)> &visit) {
    for (std::uint32_t mask : labeled_forest_masks(n))
        visit(forest_from_mask(n, mask));
}

std::uint64_t labeled_tree_count(int n) {
    if (n < 1)
        throw LimitExceeded("tree enumeration needs n >= 1");
    if (n <= 2)
        return 1;
    std::uint64_t count = 1;
    for (int i = 0; i < n - 2; ++i)
        count *= static_cast<std::uint64_t>(n);
    return count;
}

Forest tree_from_index(int n, std::uint64_t index) {
    if (index >= labeled_tree_count(n))
        throw LimitExceeded("tree index out of range");
    if (n == 1)
        return Forest(1, {});
    if (n == 2)
        return Forest(2, {{1, 2}});
    // Decode the index as a Pruefer sequence, least significant digit first.
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto &digit : seq) {
        digit = static_cast<int>(index % static_cast<std::uint64_t>(n)) + 1;
        index /= static_cast<std::uint64_t>(n);
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : seq)
        ++degree[static_cast<std::size_t>(v - 1)];
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int leaf_scan = 1;
    int leaf = 0;
    auto next_leaf = [&] {
        while (degree[static_cast<std::size_t>(leaf_scan - 1)] != 1 ||
               used[static_cast<std::size_t>(leaf_scan - 1)])
            ++leaf_scan;
        return leaf_scan;
    };
    leaf = next_leaf();
    for (int v : seq) {
        edges.emplace_back(leaf, v);
        used[static_cast<std::size_t>(leaf - 1)] = 1;
        if (--degree[static_cast<std::size_t>(v - 1)] == 1 && v < leaf_scan)
            leaf = v;  // v became the smallest available leaf
        else
            leaf = next_leaf();
    }
    int last_a = 0, last_b = 0;
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v - 1)] && degree[static_cast<std::size_t>(v - 1)] == 1) {
            if (last_a == 0)
                last_a = v;
            else
                last_b = v;
        }
    edges.emplace_back(last_a, last_b);
    return Forest(n, edges);
}

namespace {

using Tally = std::map<GroupClass, ClassTally>;

void tally_forest(Tally &tally, int n, std::uint64_t index, std::uint32_t mask, std::size_t cap) {
    const Forest forest = forest_from_mask(n, static_cast<std::uint32_t>(mask));
    const GroupClass cls = identify(chain_group(forest), cap);
    auto [it, inserted] = tally.try_emplace(cls);
    auto &entry = it->second;
    ++entry.count;
    if (inserted || index < entry.first_index) {
        entry.first_index = index;
        entry.example = forest.edges();
    }
}

void merge_tallies(Tally &into, const Tally &from) {
    for (const auto &[cls, entry] : from) {
        auto [it, inserted] = into.try_emplace(cls, entry);
        if (inserted)
            continue;
        it->second.count += entry.count;
        if (entry.first_index < it->second.first_index) {
            it->second.first_index = entry.first_index;
            it->second.example = entry.example;
        }
    }
}

} // namespace

bool operator==(const CensusReport &a, const CensusReport &b) {
    if (a.n != b.n || a.total != b.total || a.tally.size() != b.tally.size())
        return false;
    for (auto ia = a.tally.begin(), ib = b.tally.begin(); ia != a.tally.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second.count != ib->second.count ||
            ia->second.example != ib->second.example)
            return false;
    return true;
}

CensusReport run_census(int n, int parallelism, std::size_t cap) {
    check_census_bound(n);
    if (parallelism < 1)
        parallelism = omp_get_max_threads();
    const auto masks = labeled_forest_masks(n);

    std::vector<Tally> shards(static_cast<std::size_t>(parallelism));
#pragma omp parallel num_threads(parallelism)
    {
        Tally &shard = shards[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(masks.size()); ++i)
            tally_forest(shard, n, static_cast<std::uint64_t>(i), masks[static_cast<std::size_t>(i)], cap);
    }

    CensusReport report;
    report.n = n;
    report.total = masks.size();
    report.parallelism = parallelism;
    for (const auto &shard : shards)
        merge_tallies(report.tally, shard);
    return report;
}

CensusReport run_census_serial(int n, std::size_t cap) {
    check_census_bound(n);
    const auto masks = labeled_forest_masks(n);
    CensusReport report;
    report.n = n;
    report.total = masks.size();
    report.parallelism = 1;
    for (std::size_t i = 0; i < masks.size(); ++i)
        tally_forest(report.tally, n, i, masks[i], cap);
    return report;
}

} // namespace chaingroup
