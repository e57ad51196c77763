#pragma once

#include "chaingroup/family.hpp"
#include "chaingroup/forest.hpp"
#include "chaingroup/perm_group.hpp"

#include <optional>

namespace chaingroup {

/// Recognized isomorphism type of a permutation group. Tags are resolved in
/// a fixed priority order (Trivial, abelian classes, Symmetric, Alternating,
/// Dihedral, Other) so overlapping small cases have one canonical answer:
/// the abelian tag wins when the group is abelian (S2, A3), and Symmetric
/// wins over Dihedral for S3 = D6. Symmetric/Alternating are recognized on
/// the support, so padding with fixed points does not change the class.
struct GroupClass {
    enum class Tag { Trivial, Cyclic, ProductOfCyclics, Alternating, Symmetric, Dihedral, Other };

    Tag tag = Tag::Trivial;
    /// Cyclic: {m}. ProductOfCyclics: invariant factors m_1 | ... | m_k.
    /// Alternating/Symmetric: {k} (support size). Dihedral: {2m} (order).
    std::vector<long long> params;
    Natural order = 1;
    bool abelian = true;
    bool transitive = false;  // on the support

    std::string to_string() const;

    friend bool operator==(const GroupClass &, const GroupClass &) = default;
    friend bool operator<(const GroupClass &a, const GroupClass &b);
};

/// Cycles of the canonical maximal paths, in maximal_paths order. These are
/// the generators of the chain group.
std::vector<Permutation> chain_generators(const Forest &f);

/// The chain group: the subgroup of S_n generated by one cycle per maximal
/// path of the forest.
PermGroup chain_group(const Forest &f);

/// Recognize the group class. `cap` bounds the element enumerations used for
/// the abelian and dihedral recognizers; groups that are none of the named
/// classes (or too large to test for dihedrality) land in Other.
GroupClass identify(const PermGroup &g, std::size_t cap = kDefaultEnumerationCap);

/// Invariant factors m_1 | m_2 | ... | m_k of a finite abelian group,
/// recovered from the element-order statistics of the enumerated group.
/// Throws NotAbelian / CapExceeded.
std::vector<long long> abelian_invariants(const PermGroup &g, std::size_t cap = kDefaultEnumerationCap);

/// Whether g is dihedral of order 2m. For m >= 3 this searches for a
/// rotation r of order m and an involution s with s r s^-1 = r^-1 that
/// together generate g; m = 1 matches Z2 and m = 2 the Klein four-group.
/// Throws CapExceeded when |g| = 2m exceeds the enumeration cap.
bool is_dihedral(const PermGroup &g, long long m, std::size_t cap = kDefaultEnumerationCap);

struct MaxAbelianOrder {
    Natural order;
    std::vector<FamilySpec> witnesses;  // forests whose chain groups attain it
};

/// Largest order of an abelian subgroup of S_n: 3^k for n = 3k, 2*3^k for
/// n = 3k+2, 4*3^(k-1) for n = 3k+1 (with two witness shapes), and 1, 2 for
/// n = 1, 2.
MaxAbelianOrder max_abelian_order(int n);

/// For a tree with exactly one degree-3 vertex and all other degrees <= 2:
/// if some leaf sits at even distance from the branch vertex, the composite
/// of the two maximal-path cycles oriented into that leaf is a full n-cycle.
/// Returns that product, or nullopt when the tree has no such leaf or is not
/// of this shape.
std::optional<Permutation> full_cycle_witness(const Forest &f);

struct FullCycleResult {
    bool found = false;
    std::optional<Permutation> witness;
};

/// Search for an n-cycle in g: first via the structural witness when the
/// spider-shaped forest is supplied, then by exhaustive enumeration when the
/// order is within `cap`, finally by seeded random sampling through the
/// stabilizer chain. Throws CapExceeded only when sampling fails and the
/// order exceeds the cap (the answer is then unknown).
FullCycleResult contains_full_cycle(const PermGroup &g, const Forest *structure = nullptr,
                                    std::size_t cap = kDefaultEnumerationCap,
                                    std::uint64_t seed = kDefaultSeed);

} // namespace chaingroup
