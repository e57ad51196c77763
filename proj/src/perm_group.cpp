#include "chaingroup/perm_group.hpp"

#include "chaingroup/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace chaingroup {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto &g : generators_)
        if (g.degree() != degree_)
            throw SizeMismatch("generator degree " + std::to_string(g.degree()) +
                               " does not match group degree " + std::to_string(degree_));
    build_chain();
}

void PermGroup::append_level(int base_point) {
    Level level;
    level.base_point = base_point;
    level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
    levels_.push_back(std::move(level));
}

void PermGroup::recompute_orbit(Level &level) const {
    level.orbit.clear();
    std::fill(level.transversal.begin(), level.transversal.end(), std::nullopt);
    level.orbit.push_back(level.base_point);
    level.transversal[static_cast<std::size_t>(level.base_point - 1)] = Permutation(degree_);
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
        const int p = level.orbit[i];
        for (const auto &g : level.gens) {
            const int q = g(p);
            auto &slot = level.transversal[static_cast<std::size_t>(q - 1)];
            if (!slot) {
                slot = compose(g, *level.transversal[static_cast<std::size_t>(p - 1)]);
                level.orbit.push_back(q);
            }
        }
    }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
        const Level &level = levels_[l];
        const int image = p(level.base_point);
        const auto &rep = level.transversal[static_cast<std::size_t>(image - 1)];
        if (!rep)
            return {std::move(p), l};
        p = compose(rep->inverse(), p);
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::build_chain() {
    // Seed the base so that every non-identity generator moves a base point,
    // extending with the smallest point moved by the still-unanchored set.
    std::vector<const Permutation *> pending;
    for (const auto &g : generators_)
        if (!g.is_identity())
            pending.push_back(&g);
    while (!pending.empty()) {
        int next_base = degree_ + 1;
        for (const auto *g : pending)
            next_base = std::min(next_base, g->smallest_moved_point());
        append_level(next_base);
        std::vector<const Permutation *> still_pending;
        for (const auto *g : pending)
            if ((*g)(next_base) == next_base)
                still_pending.push_back(g);
        pending = std::move(still_pending);
    }
    // A generator belongs to every level whose base prefix it fixes.
    for (const auto &g : generators_) {
        if (g.is_identity())
            continue;
        for (auto &level : levels_) {
            level.gens.push_back(g);
            if (g(level.base_point) != level.base_point)
                break;
        }
    }

    if (levels_.empty()) {
        order_ = 1;
        return;
    }

    // Verify levels bottom-up; a surviving Schreier generator is added as a
    // strong generator and verification restarts at the level it reaches.
    std::size_t i = levels_.size();
    while (i-- > 0) {
        Level &level = levels_[i];
        recompute_orbit(level);
        bool descended = false;
        for (std::size_t oi = 0; oi < level.orbit.size() && !descended; ++oi) {
            const int p = level.orbit[oi];
            const auto &u_p = *level.transversal[static_cast<std::size_t>(p - 1)];
            for (const auto &s : level.gens) {
                const int q = s(p);
                const Permutation w = compose(s, u_p);
                const auto &u_q = *level.transversal[static_cast<std::size_t>(q - 1)];
                if (w == u_q)
                    continue;
                auto [residue, j] = sift(compose(u_q.inverse(), w), i + 1);
                if (residue.is_identity())
                    continue;
                if (j == levels_.size())
                    append_level(residue.smallest_moved_point());
                for (std::size_t l = i + 1; l <= j; ++l)
                    levels_[l].gens.push_back(residue);
                i = j + 1;  // loop decrement re-enters at level j
                descended = true;
                break;
            }
        }
        if (descended)
            continue;
    }

    order_ = 1;
    for (const auto &level : levels_)
        order_ *= static_cast<unsigned long long>(level.orbit.size());
}

bool PermGroup::contains(const Permutation &p) const {
    if (p.degree() != degree_)
        throw SizeMismatch("membership test with degree " + std::to_string(p.degree()) +
                           " in group of degree " + std::to_string(degree_));
    auto [residue, level] = sift(p, 0);
    (void)level;
    return residue.is_identity();
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (compose(generators_[i], generators_[j]) != compose(generators_[j], generators_[i]))
                return false;
    return true;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i)
        parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto &g : generators_)
        for (int i = 1; i <= degree_; ++i) {
            const int a = find(i - 1), b = find(g(i) - 1);
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i)
        parts[static_cast<std::size_t>(find(i))].push_back(i + 1);
    std::vector<std::vector<int>> result;
    for (auto &part : parts)
        if (!part.empty())
            result.push_back(std::move(part));
    return result;
}

std::vector<int> PermGroup::support() const {
    std::vector<char> moved(static_cast<std::size_t>(degree_), 0);
    for (const auto &g : generators_)
        for (int i = 1; i <= degree_; ++i)
            if (g(i) != i)
                moved[static_cast<std::size_t>(i - 1)] = 1;
    std::vector<int> result;
    for (int i = 1; i <= degree_; ++i)
        if (moved[static_cast<std::size_t>(i - 1)])
            result.push_back(i);
    return result;
}

bool PermGroup::is_transitive_on_support() const {
    const auto sup = support();
    if (sup.empty())
        return false;
    for (const auto &orbit : orbits())
        if (orbit.front() == sup.front())
            return orbit == sup;
    return false;
}

std::optional<std::vector<Permutation>> PermGroup::elements(std::size_t cap) const {
    std::vector<Permutation> found;
    std::set<std::vector<int>> seen;
    std::deque<std::size_t> queue;
    found.emplace_back(degree_);
    seen.insert(found.back().images());
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        for (const auto &g : generators_) {
            Permutation next = compose(found[idx], g);
            if (seen.insert(next.images()).second) {
                if (found.size() >= cap)
                    return std::nullopt;
                found.push_back(std::move(next));
                queue.push_back(found.size() - 1);
            }
        }
    }
    return found;
}

std::vector<int> PermGroup::base() const {
    std::vector<int> result;
    for (const auto &level : levels_)
        result.push_back(level.base_point);
    return result;
}

Permutation PermGroup::random_element(std::mt19937_64 &rng) const {
    Permutation acc(degree_);
    for (const auto &level : levels_) {
        std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
        const int point = level.orbit[pick(rng)];
        acc = compose(acc, *level.transversal[static_cast<std::size_t>(point - 1)]);
    }
    return acc;
}

PermGroup conjugate_group(const PermGroup &g, const Permutation &pi) {
    if (pi.degree() != g.degree())
        throw SizeMismatch("conjugating degree " + std::to_string(g.degree()) +
                           " group by degree " + std::to_string(pi.degree()) + " permutation");
    std::vector<Permutation> gens;
    gens.reserve(g.generators().size());
    for (const auto &s : g.generators())
        gens.push_back(conjugate(pi, s));
    return PermGroup(g.degree(), std::move(gens));
}

} // namespace chaingroup
