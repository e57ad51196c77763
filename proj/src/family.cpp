#include "chaingroup/family.hpp"

#include "chaingroup/errors.hpp"

#include <sstream>

namespace chaingroup {

namespace {

Forest make_path(int n) {
    if (n < 1)
        throw InvalidSpec("path graph needs n >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    return Forest(n, std::move(edges));
}

Forest make_star(int n) {
    if (n < 2)
        throw InvalidSpec("star needs n >= 2");
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v)
        edges.emplace_back(1, v);
    return Forest(n, std::move(edges));
}

Forest make_antenna(int n) {
    if (n < 4)
        throw InvalidSpec("antenna needs n >= 4");
    std::vector<Edge> edges{{1, 3}, {2, 3}};
    for (int v = 3; v < n; ++v)
        edges.emplace_back(v, v + 1);
    return Forest(n, std::move(edges));
}

Forest make_spider(const std::vector<int> &legs) {
    if (legs.empty())
        throw InvalidSpec("spider needs at least one leg");
    std::vector<Edge> edges;
    int next = 2;
    for (int leg : legs) {
        if (leg < 1)
            throw InvalidSpec("spider legs must have length >= 1");
        int prev = 1;
        for (int i = 0; i < leg; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Forest(next - 1, std::move(edges));
}

Forest make_max_abelian_witness(int n, char variant) {
    if (n < 1)
        throw InvalidSpec("witness needs n >= 1");
    if (variant != 'A' && variant != 'B')
        throw InvalidSpec("witness variant must be 'A' or 'B'");
    if (variant == 'B' && n % 3 != 1)
        throw InvalidSpec("witness variant 'B' exists only for n = 3k+1");
    std::vector<Forest> parts;
    const int k = n / 3;
    switch (n % 3) {
    case 0:
        for (int i = 0; i < k; ++i)
            parts.push_back(make_path(3));
        break;
    case 2:
        for (int i = 0; i < k; ++i)
            parts.push_back(make_path(3));
        parts.push_back(make_path(2));
        break;
    default:  // n = 3k+1
        if (n == 1)
            return make_path(1);
        for (int i = 0; i < k - 1; ++i)
            parts.push_back(make_path(3));
        if (variant == 'A') {
            parts.push_back(make_path(4));
        } else {
            parts.push_back(make_path(2));
            parts.push_back(make_path(2));
        }
        break;
    }
    return disjoint_union(parts);
}

Forest make_odd_distance_tree(const std::vector<OddDistanceArm> &arms) {
    if (arms.empty())
        throw InvalidSpec("odd-distance tree needs at least one arm");
    std::vector<Edge> edges{{1, 2}, {1, 3}};
    int next = 4;
    for (const auto &arm : arms) {
        if (arm.stem < 1 || arm.stem % 2 == 0)
            throw InvalidSpec("arm stems must be odd and >= 1");
        if (arm.tip_leaves < 1)
            throw InvalidSpec("arms need at least one tip leaf");
        int prev = 1;
        for (int i = 0; i < arm.stem; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        for (int i = 0; i < arm.tip_leaves; ++i)
            edges.emplace_back(prev, next++);
    }
    return Forest(next - 1, std::move(edges));
}

} // namespace

Forest make_family(const FamilySpec &spec) {
    return std::visit(
        [](const auto &s) -> Forest {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathGraphSpec>)
                return make_path(s.n);
            else if constexpr (std::is_same_v<T, StarSpec>)
                return make_star(s.n);
            else if constexpr (std::is_same_v<T, AntennaSpec>)
                return make_antenna(s.n);
            else if constexpr (std::is_same_v<T, SpiderSpec>)
                return make_spider(s.legs);
            else if constexpr (std::is_same_v<T, MaxAbelianWitnessSpec>)
                return make_max_abelian_witness(s.n, s.variant);
            else if constexpr (std::is_same_v<T, OddDistanceTreeSpec>)
                return make_odd_distance_tree(s.arms);
            else {
                std::vector<Forest> parts;
                for (const auto &part : s.parts)
                    parts.push_back(make_family(part));
                return disjoint_union(parts);
            }
        },
        spec.value);
}

std::string FamilySpec::to_string() const {
    return std::visit(
        [](const auto &s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            std::ostringstream out;
            if constexpr (std::is_same_v<T, PathGraphSpec>)
                out << "path:" << s.n;
            else if constexpr (std::is_same_v<T, StarSpec>)
                out << "star:" << s.n;
            else if constexpr (std::is_same_v<T, AntennaSpec>)
                out << "antenna:" << s.n;
            else if constexpr (std::is_same_v<T, SpiderSpec>) {
                out << "spider:";
                for (std::size_t i = 0; i < s.legs.size(); ++i)
                    out << (i ? "," : "") << s.legs[i];
            } else if constexpr (std::is_same_v<T, MaxAbelianWitnessSpec>)
                out << "maxabelian:" << s.n << ',' << s.variant;
            else if constexpr (std::is_same_v<T, OddDistanceTreeSpec>) {
                out << "odddist:";
                for (std::size_t i = 0; i < s.arms.size(); ++i)
                    out << (i ? "," : "") << s.arms[i].stem << ',' << s.arms[i].tip_leaves;
            } else {
                out << "union(";
                for (std::size_t i = 0; i < s.parts.size(); ++i)
                    out << (i ? " " : "") << s.parts[i].to_string();
                out << ')';
            }
            return out.str();
        },
        value);
}

FamilySpec parse_family_spec(const std::string &token) {
    const auto colon = token.find(':');
    const std::string name = token.substr(0, colon);
    std::vector<std::string> fields;
    if (colon != std::string::npos) {
        std::istringstream rest(token.substr(colon + 1));
        std::string field;
        while (std::getline(rest, field, ','))
            fields.push_back(field);
    }
    auto as_int = [&](const std::string &s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size())
                throw std::invalid_argument(s);
            return v;
        } catch (const std::exception &) {
            throw InvalidSpec("bad number '" + s + "' in family spec '" + token + "'");
        }
    };
    auto expect_fields = [&](std::size_t k) {
        if (fields.size() != k)
            throw InvalidSpec("family spec '" + token + "' needs " + std::to_string(k) + " parameter(s)");
    };
    if (name == "path") {
        expect_fields(1);
        return {PathGraphSpec{as_int(fields[0])}};
    }
    if (name == "star") {
        expect_fields(1);
        return {StarSpec{as_int(fields[0])}};
    }
    if (name == "antenna") {
        expect_fields(1);
        return {AntennaSpec{as_int(fields[0])}};
    }
    if (name == "spider") {
        if (fields.empty())
            throw InvalidSpec("spider needs leg lengths, e.g. spider:1,2,3");
        SpiderSpec s;
        for (const auto &f : fields)
            s.legs.push_back(as_int(f));
        return {std::move(s)};
    }
    if (name == "maxabelian") {
        if (fields.size() == 1)
            return {MaxAbelianWitnessSpec{as_int(fields[0]), 'A'}};
        expect_fields(2);
        if (fields[1] != "A" && fields[1] != "B")
            throw InvalidSpec("maxabelian variant must be A or B");
        return {MaxAbelianWitnessSpec{as_int(fields[0]), fields[1][0]}};
    }
    if (name == "odddist") {
        if (fields.empty() || fields.size() % 2 != 0)
            throw InvalidSpec("odddist needs stem,tips pairs, e.g. odddist:1,4,1,1");
        OddDistanceTreeSpec s;
        for (std::size_t i = 0; i < fields.size(); i += 2)
            s.arms.push_back({as_int(fields[i]), as_int(fields[i + 1])});
        return {std::move(s)};
    }
    throw InvalidSpec("unknown family '" + name + "'");
}

} // namespace chaingroup
