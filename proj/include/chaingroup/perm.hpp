#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chaingroup {

/// A permutation of the points 1..n, stored as an image table.
///
/// Composition is right-to-left throughout: (p * q)(x) = p(q(x)), i.e. the
/// right factor is applied first. This convention is normative for the whole
/// library and is pinned by golden tests of worked products.
class Permutation {
public:
    /// Identity on `degree` points.
    explicit Permutation(int degree);

    /// Build from an image table: images[i-1] is the image of point i.
    static Permutation from_images(std::vector<int> images);

    /// Build from disjoint cycles written with 1-based points; unlisted
    /// points are fixed. Throws PointOutOfRange / RepeatedPoint.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>> &cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point - 1]; }
    const std::vector<int> &images() const { return images_; }

    bool is_identity() const;
    bool moves(int point) const { return images_[point - 1] != point; }
    int smallest_moved_point() const;  // 0 if identity

    Permutation inverse() const;
    Permutation power(long long e) const;  // e may be negative

    /// Order as lcm of cycle lengths (fits in 64 bits for the degrees here).
    long long order() const;

    /// +1 for even, -1 for odd: (-1)^(degree - number of cycles incl. fixed points).
    int parity() const;

    /// Disjoint cycles of length >= 2; each cycle starts with its minimal
    /// element and cycles are sorted by minimal element.
    std::vector<std::vector<int>> cycles() const;

    /// Ascending multiset of cycle lengths >= 2.
    std::vector<int> cycle_type() const;

    /// Canonical cycle notation, e.g. "(1 2 4)(3 5)"; identity is "()".
    std::string cycle_string() const;

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend std::strong_ordering operator<=>(const Permutation &, const Permutation &) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

    friend Permutation compose(const Permutation &, const Permutation &);

    std::vector<int> images_;
};

/// p * q applies q first: (p*q)(x) = p(q(x)). Throws SizeMismatch.
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) { return compose(p, q); }

/// pi * p * pi^-1. Satisfies pi (i1 ... im) pi^-1 = (pi(i1) ... pi(im)).
Permutation conjugate(const Permutation &pi, const Permutation &p);

} // namespace chaingroup
