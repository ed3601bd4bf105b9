#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace spinlab {

/// Bijection of {0, ..., N-1}. Composition is functional: (p * q)(i) = p(q(i)).
class Permutation {
public:
    Permutation() = default;
    /// Throws AlgebraError unless `images` is a bijection of {0..N-1}.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    /// The cycle a0 -> a1 -> ... -> a_{k-1} -> a0.
    static Permutation cycle(int n, const std::vector<int>& elements);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    /// 0 for even, 1 for odd.
    int parity() const;
    Permutation inverse() const;
    /// Extends by fixed points to act on {0..n-1}.
    Permutation widened(int n) const;
    /// Disjoint cycles of length >= 2, each starting at its smallest element,
    /// ordered by smallest element.
    std::vector<std::vector<int>> cycles() const;

    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& p, const Permutation& q) { return p.images_ <=> q.images_; }

    /// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
    std::string to_string() const;

private:
    std::vector<int> images_;
};

} // namespace spinlab
