#include "chaingroup/perm.hpp"

#include "chaingroup/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chaingroup {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(std::max(degree, 0))) {
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images) {
        if (v < 1 || v > n)
            throw PointOutOfRange("image " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw RepeatedPoint("image " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>> &cycles) {
    Permutation p(degree);
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    for (const auto &cyc : cycles) {
        for (int v : cyc) {
            if (v < 1 || v > degree)
                throw PointOutOfRange("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(v - 1)])
                throw RepeatedPoint("point " + std::to_string(v) + " repeated across cycles");
            used[static_cast<std::size_t>(v - 1)] = 1;
        }
        const std::size_t m = cyc.size();
        for (std::size_t i = 0; i < m; ++i)
            p.images_[static_cast<std::size_t>(cyc[i] - 1)] = cyc[(i + 1) % m];
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[static_cast<std::size_t>(i - 1)] != i)
            return false;
    return true;
}

int Permutation::smallest_moved_point() const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[static_cast<std::size_t>(i - 1)] != i)
            return i;
    return 0;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= degree(); ++i)
        inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i - 1)] - 1)] = i;
    return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::power(long long e) const {
    if (e < 0)
        return inverse().power(-e);
    Permutation acc(degree());
    Permutation base = *this;
    while (e > 0) {
        if (e & 1)
            acc = compose(acc, base);
        base = compose(base, base);
        e >>= 1;
    }
    return acc;
}

long long Permutation::order() const {
    long long ord = 1;
    for (const auto &cyc : cycles())
        ord = std::lcm(ord, static_cast<long long>(cyc.size()));
    return ord;
}

int Permutation::parity() const {
    int cycle_count = 0;  // including fixed points
    std::vector<char> seen(images_.size(), 0);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)])
            continue;
        ++cycle_count;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = images_[static_cast<std::size_t>(j - 1)])
            seen[static_cast<std::size_t>(j - 1)] = 1;
    }
    return (degree() - cycle_count) % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> result;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)] || images_[static_cast<std::size_t>(i - 1)] == i)
            continue;
        std::vector<int> cyc;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = images_[static_cast<std::size_t>(j - 1)]) {
            seen[static_cast<std::size_t>(j - 1)] = 1;
            cyc.push_back(j);
        }
        result.push_back(std::move(cyc));
    }
    // Scanning from the smallest point already yields min-first cycles in
    // min-sorted order.
    return result;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    for (const auto &cyc : cycles())
        type.push_back(static_cast<int>(cyc.size()));
    std::sort(type.begin(), type.end());
    return type;
}

std::string Permutation::cycle_string() const {
    const auto cycs = cycles();
    if (cycs.empty())
        return "()";
    std::ostringstream out;
    for (const auto &cyc : cycs) {
        out << '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i)
                out << ' ';
            out << cyc[i];
        }
        out << ')';
    }
    return out.str();
}

Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.degree() != q.degree())
        throw SizeMismatch("composing permutations of degree " + std::to_string(p.degree()) +
                           " and " + std::to_string(q.degree()));
    std::vector<int> images(static_cast<std::size_t>(p.degree()));
    for (int x = 1; x <= p.degree(); ++x)
        images[static_cast<std::size_t>(x - 1)] = p(q(x));
    return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation &pi, const Permutation &p) {
    return compose(compose(pi, p), pi.inverse());
}

} // namespace chaingroup
