#include "chaingroup/classify.hpp"

#include "chaingroup/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chaingroup {

namespace {

std::vector<long long> prime_factors(unsigned long long value) {
    std::vector<long long> primes;
    for (unsigned long long p = 2; p * p <= value; ++p)
        if (value % p == 0) {
            primes.push_back(static_cast<long long>(p));
            while (value % p == 0)
                value /= p;
        }
    if (value > 1)
        primes.push_back(static_cast<long long>(value));
    return primes;
}

} // namespace

std::string GroupClass::to_string() const {
    std::ostringstream out;
    switch (tag) {
    case Tag::Trivial:
        return "Trivial";
    case Tag::Cyclic:
        out << "Cyclic(" << params[0] << ')';
        break;
    case Tag::ProductOfCyclics: {
        out << "ProductOfCyclics[";
        for (std::size_t i = 0; i < params.size(); ++i)
            out << (i ? "," : "") << params[i];
        out << ']';
        break;
    }
    case Tag::Alternating:
        out << "Alternating(" << params[0] << ')';
        break;
    case Tag::Symmetric:
        out << "Symmetric(" << params[0] << ')';
        break;
    case Tag::Dihedral:
        out << "Dihedral(" << params[0] << ')';
        break;
    case Tag::Other:
        out << "Other(order=" << order.str() << ')';
        break;
    }
    return out.str();
}

bool operator<(const GroupClass &a, const GroupClass &b) {
    if (a.tag != b.tag)
        return static_cast<int>(a.tag) < static_cast<int>(b.tag);
    if (a.params != b.params)
        return a.params < b.params;
    if (a.order != b.order)
        return a.order < b.order;
    if (a.abelian != b.abelian)
        return a.abelian < b.abelian;
    return a.transitive < b.transitive;
}

std::vector<Permutation> chain_generators(const Forest &f) {
    std::vector<Permutation> gens;
    for (const auto &path : maximal_paths(f))
        gens.push_back(Permutation::from_cycles(f.vertex_count(), {path.vertices}));
    return gens;
}

PermGroup chain_group(const Forest &f) {
    return PermGroup(f.vertex_count(), chain_generators(f));
}

std::vector<long long> abelian_invariants(const PermGroup &g, std::size_t cap) {
    if (!g.is_abelian())
        throw NotAbelian("group is not abelian");
    const auto elems = g.elements(cap);
    if (!elems)
        throw CapExceeded("abelian group larger than enumeration cap " + std::to_string(cap));
    const auto order = static_cast<unsigned long long>(elems->size());
    if (order == 1)
        return {};

    // Recover each p-primary type from element-order statistics: the number
    // of x with ord(x) | p^j is p^(sum_i min(j, l_i)) over the type
    // exponents l_i, so consecutive log_p differences count the parts >= j.
    std::map<long long, std::vector<int>> types;  // prime -> exponents, descending
    for (long long p : prime_factors(order)) {
        std::vector<int> parts_ge;  // parts_ge[j-1] = number of exponents >= j
        int prev_log = 0;
        for (long long pj = p;; pj *= p) {
            unsigned long long count = 0;
            for (const auto &e : *elems)
                if (pj % e.order() == 0)
                    ++count;
            int log = 0;
            for (unsigned long long c = count; c > 1; c /= static_cast<unsigned long long>(p))
                ++log;
            const int diff = log - prev_log;
            if (diff <= 0)
                break;
            parts_ge.push_back(diff);
            prev_log = log;
        }
        std::vector<int> type;
        if (!parts_ge.empty())
            for (int i = 1; i <= parts_ge[0]; ++i) {
                int exponent = 0;
                for (std::size_t j = 0; j < parts_ge.size(); ++j)
                    if (parts_ge[j] >= i)
                        exponent = static_cast<int>(j) + 1;
                type.push_back(exponent);
            }
        types[p] = std::move(type);
    }

    std::size_t ranks = 0;
    for (const auto &[p, type] : types)
        ranks = std::max(ranks, type.size());
    std::vector<long long> factors;  // built largest first
    for (std::size_t i = 0; i < ranks; ++i) {
        long long factor = 1;
        for (const auto &[p, type] : types)
            if (i < type.size())
                for (int e = 0; e < type[i]; ++e)
                    factor *= p;
        factors.push_back(factor);
    }
    std::reverse(factors.begin(), factors.end());  // m_1 | m_2 | ... | m_k
    return factors;
}

bool is_dihedral(const PermGroup &g, long long m, std::size_t cap) {
    if (m < 1)
        return false;
    const Natural target = Natural(2) * m;
    if (g.order() != target)
        return false;
    if (target > cap)
        throw CapExceeded("dihedral test of order " + target.str() + " exceeds cap " + std::to_string(cap));
    const auto elems = *g.elements(cap);
    if (m == 1)
        return true;  // order 2 forces Z2 = D2
    if (m == 2) {
        // D4 is the Klein four-group; Z4 does not qualify.
        for (const auto &e : elems)
            if (!e.is_identity() && e.order() != 2)
                return false;
        return true;
    }
    std::vector<const Permutation *> rotations, involutions;
    for (const auto &e : elems) {
        const long long ord = e.order();
        if (ord == m)
            rotations.push_back(&e);
        if (ord == 2)
            involutions.push_back(&e);
    }
    // A dihedral group of order 2m has at least m involutions.
    if (static_cast<long long>(involutions.size()) < m)
        return false;
    for (const auto *r : rotations) {
        const Permutation r_inv = r->inverse();
        for (const auto *s : involutions)
            if (conjugate(*s, *r) == r_inv &&
                PermGroup(g.degree(), {*r, *s}).order() == target)
                return true;
    }
    return false;
}

GroupClass identify(const PermGroup &g, std::size_t cap) {
    GroupClass cls;
    cls.order = g.order();
    cls.abelian = g.is_abelian();
    cls.transitive = g.is_transitive_on_support();

    if (cls.order == 1) {
        cls.tag = GroupClass::Tag::Trivial;
        return cls;
    }

    if (cls.abelian) {
        if (cls.order > cap) {
            cls.tag = GroupClass::Tag::Other;  // beyond the enumeration budget
            return cls;
        }
        auto factors = abelian_invariants(g, cap);
        std::size_t moved_orbits = 0;
        for (const auto &orbit : g.orbits())
            if (orbit.size() >= 2)
                ++moved_orbits;
        if (factors.size() == 1 && moved_orbits == 1) {
            cls.tag = GroupClass::Tag::Cyclic;
            cls.params = {factors[0]};
        } else {
            cls.tag = GroupClass::Tag::ProductOfCyclics;
            cls.params = std::move(factors);
        }
        return cls;
    }

    const auto sup = g.support();
    const auto k = static_cast<int>(sup.size());

    if (cls.transitive && cls.order == factorial(k)) {
        bool has_odd = false;
        for (const auto &s : g.generators())
            if (s.parity() < 0) {
                has_odd = true;
                break;
            }
        if (has_odd) {
            cls.tag = GroupClass::Tag::Symmetric;
            cls.params = {k};
            return cls;
        }
    }

    if (k >= 3 && cls.order * 2 == factorial(k)) {
        bool all_even = true;
        for (const auto &s : g.generators())
            if (s.parity() < 0) {
                all_even = false;
                break;
            }
        if (all_even) {
            bool generates_alternating = true;
            for (int i = 2; i < k && generates_alternating; ++i)
                generates_alternating =
                    g.contains(Permutation::from_cycles(g.degree(), {{sup[0], sup[1], sup[static_cast<std::size_t>(i)]}}));
            if (generates_alternating) {
                cls.tag = GroupClass::Tag::Alternating;
                cls.params = {k};
                return cls;
            }
        }
    }

    if (cls.order % 2 == 0 && cls.order <= cap) {
        const long long m = (cls.order / 2).convert_to<long long>();
        if (m >= 3 && is_dihedral(g, m, cap)) {
            cls.tag = GroupClass::Tag::Dihedral;
            cls.params = {2 * m};
            return cls;
        }
    }

    cls.tag = GroupClass::Tag::Other;
    return cls;
}

MaxAbelianOrder max_abelian_order(int n) {
    if (n < 1)
        throw InvalidSpec("max abelian order needs n >= 1");
    MaxAbelianOrder result;
    if (n == 1) {
        result.order = 1;
        result.witnesses = {FamilySpec{MaxAbelianWitnessSpec{1, 'A'}}};
        return result;
    }
    const int k = n / 3;
    switch (n % 3) {
    case 0:
        result.order = natural_pow(3, k);
        result.witnesses = {FamilySpec{MaxAbelianWitnessSpec{n, 'A'}}};
        break;
    case 2:
        result.order = 2 * natural_pow(3, k);
        result.witnesses = {FamilySpec{MaxAbelianWitnessSpec{n, 'A'}}};
        break;
    default:
        result.order = 4 * natural_pow(3, k - 1);
        result.witnesses = {FamilySpec{MaxAbelianWitnessSpec{n, 'A'}},
                            FamilySpec{MaxAbelianWitnessSpec{n, 'B'}}};
        break;
    }
    return result;
}

std::optional<Permutation> full_cycle_witness(const Forest &f) {
    if (components(f).size() != 1)
        return std::nullopt;
    const auto profile = degree_profile(f);
    if (profile.branch_vertices.size() != 1 || f.degree(profile.branch_vertices[0]) != 3)
        return std::nullopt;
    const int hub = profile.branch_vertices[0];
    if (profile.leaves.size() != 3)
        return std::nullopt;
    int even_leaf = 0;
    for (int leaf : profile.leaves)
        if (tree_path(f, hub, leaf).length() % 2 == 0) {
            even_leaf = leaf;
            break;
        }
    if (even_leaf == 0)
        return std::nullopt;
    std::vector<int> starts;
    for (int leaf : profile.leaves)
        if (leaf != even_leaf)
            starts.push_back(leaf);
    const auto first = tree_path(f, starts[0], even_leaf);
    const auto second = tree_path(f, starts[1], even_leaf);
    const int n = f.vertex_count();
    return compose(Permutation::from_cycles(n, {first.vertices}),
                   Permutation::from_cycles(n, {second.vertices}));
}

FullCycleResult contains_full_cycle(const PermGroup &g, const Forest *structure, std::size_t cap,
                                    std::uint64_t seed) {
    const int n = g.degree();
    const std::vector<int> full{n};
    if (structure && structure->vertex_count() == n) {
        const auto witness = full_cycle_witness(*structure);
        if (witness && witness->cycle_type() == full && g.contains(*witness))
            return {true, witness};
    }
    if (g.order() <= cap) {
        for (const auto &e : *g.elements(cap))
            if (e.cycle_type() == full)
                return {true, e};
        return {false, std::nullopt};
    }
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 2000; ++trial) {
        Permutation e = g.random_element(rng);
        if (e.cycle_type() == full)
            return {true, std::move(e)};
    }
    throw CapExceeded("no structural witness and group order " + g.order().str() +
                      " exceeds enumeration cap " + std::to_string(cap));
}

} // namespace chaingroup
