#pragma once

#include "chaingroup/forest.hpp"

#include <string>
#include <variant>
#include <vector>

namespace chaingroup {

struct FamilySpec;

/// Path graph 1-2-...-n (n >= 1; n = 1 is a single vertex).
struct PathGraphSpec { int n; };

/// Star K_{1,n-1}: center 1, leaves 2..n (n >= 2).
struct StarSpec { int n; };

/// Antenna on n >= 4 vertices: hub 3 adjacent to the leaves 1 and 2 and to
/// the tail 3-4-...-n.
struct AntennaSpec { int n; };

/// One hub (vertex 1) with pendant paths of the given lengths, labeled leg by
/// leg in increasing order.
struct SpiderSpec { std::vector<int> legs; };

/// A forest whose chain group is an abelian subgroup of S_n of maximum order:
/// k 3-vertex paths when n = 3k; k 3-vertex paths plus a 2-vertex path when
/// n = 3k+2; for n = 3k+1, variant 'A' is k-1 3-vertex paths plus a 4-vertex
/// path and variant 'B' is k-1 3-vertex paths plus two 2-vertex paths.
struct MaxAbelianWitnessSpec {
    int n;
    char variant = 'A';
};

/// One tree arm: an odd-length stem from the hub, ending in a vertex that
/// carries `tip_leaves` pendant leaves (so every arm leaf sits at even
/// distance from the hub).
struct OddDistanceArm {
    int stem;
    int tip_leaves;
};

/// Hub (vertex 1) with two pendant leaves (2 and 3) forming a maximal path of
/// length two, plus at least one arm; all leaves outside that path are at even
/// distance from the hub.
struct OddDistanceTreeSpec { std::vector<OddDistanceArm> arms; };

struct DisjointUnionSpec { std::vector<FamilySpec> parts; };

struct FamilySpec {
    std::variant<PathGraphSpec, StarSpec, AntennaSpec, SpiderSpec,
                 MaxAbelianWitnessSpec, OddDistanceTreeSpec, DisjointUnionSpec>
        value;

    std::string to_string() const;
};

/// Build the forest described by a FamilySpec. Throws InvalidSpec when the
/// parameters are out of bounds.
Forest make_family(const FamilySpec &spec);

/// Parse the compact inline form used by the CLI, e.g. "path:5", "star:6",
/// "antenna:7", "spider:1,2,3", "maxabelian:7,B", "odddist:1,4,1,1,1,1"
/// (stem,tips pairs).
FamilySpec parse_family_spec(const std::string &token);

} // namespace chaingroup
