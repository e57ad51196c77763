#pragma once

#include "chaingroup/config.hpp"
#include "chaingroup/natural.hpp"
#include "chaingroup/perm.hpp"

#include <optional>
#include <random>
#include <vector>

namespace chaingroup {

/// A finitely generated permutation group on the points 1..n.
///
/// Construction runs a deterministic (non-randomized) Schreier-Sims pass and
/// stores a stabilizer chain: base points, strong generators per level, and
/// full transversals. Base points are the smallest points moved by the
/// generators needing them, and Schreier generators are sifted eagerly, so
/// the chain is reproducible from the generator order alone.
///
/// A constructed PermGroup is immutable; all queries are const and safe to
/// run concurrently from many threads.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation> &generators() const { return generators_; }

    /// Exact order: the product of the orbit sizes along the chain.
    const Natural &order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    /// Membership by sifting through the chain.
    bool contains(const Permutation &p) const;

    /// All generator pairs commute (equivalent to group commutativity).
    bool is_abelian() const;

    /// Orbit partition of [n] under the group action; parts are sorted and
    /// listed by smallest element.
    std::vector<std::vector<int>> orbits() const;

    /// Points moved by some element (union of the non-singleton orbits).
    std::vector<int> support() const;

    /// Whether the support forms a single orbit. Empty support counts as false.
    bool is_transitive_on_support() const;

    /// Complete element list by breadth-first closure under right
    /// multiplication by the generators, in discovery order. Independent of
    /// the stabilizer chain, so it can serve as an order oracle. Returns
    /// nullopt once more than `cap` elements have been found.
    std::optional<std::vector<Permutation>> elements(std::size_t cap = kDefaultEnumerationCap) const;

    /// Base points of the stabilizer chain, in order.
    std::vector<int> base() const;

    /// Uniformly distributed random element, drawn through the transversals.
    Permutation random_element(std::mt19937_64 &rng) const;

private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> gens;  // strong generators fixing all earlier base points
        std::vector<int> orbit;         // BFS discovery order, orbit[0] == base_point
        std::vector<std::optional<Permutation>> transversal;  // by point-1; u maps base_point to point
    };

    void build_chain();
    void recompute_orbit(Level &level) const;
    // Sift from `start`; returns the residue and the level index where
    // sifting stopped (levels_.size() if it ran off the end).
    std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t start) const;
    void append_level(int base_point);

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
    Natural order_ = 1;
};

/// Group generated by { pi g pi^-1 : g generator }. Same order as g.
PermGroup conjugate_group(const PermGroup &g, const Permutation &pi);

} // namespace chaingroup
