#include "spinlab/permutation.hpp"

#include "spinlab/errors.hpp"

#include <numeric>
#include <sstream>

namespace spinlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw AlgebraError("Permutation: images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b)
{
    if (a == b) throw AlgebraError("Permutation: transposition needs distinct points");
    return cycle(n, {a, b});
}

Permutation Permutation::cycle(int n, const std::vector<int>& elements)
{
    Permutation p = identity(n);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int e : elements) {
        if (e < 0 || e >= n) throw AlgebraError("Permutation: cycle element out of range");
        if (seen[static_cast<std::size_t>(e)]) throw AlgebraError("Permutation: repeated cycle element");
        seen[static_cast<std::size_t>(e)] = true;
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
        p.images_[static_cast<std::size_t>(elements[i])] = elements[(i + 1) % elements.size()];
    return p;
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

int Permutation::parity() const
{
    int p = 0;
    for (const auto& c : cycles()) p += static_cast<int>(c.size()) - 1;
    return p % 2;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    Permutation out;
    out.images_ = std::move(inv);
    return out;
}

Permutation Permutation::widened(int n) const
{
    if (n < size()) throw AlgebraError("Permutation: cannot narrow");
    Permutation out = identity(n);
    std::copy(images_.begin(), images_.end(), out.images_.begin());
    return out;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> c;
        for (int v = start; !seen[static_cast<std::size_t>(v)]; v = images_[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            c.push_back(v);
        }
        if (c.size() >= 2) out.push_back(std::move(c));
    }
    return out;
}

Permutation operator*(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size()) throw AlgebraError("Permutation: size mismatch");
    Permutation out;
    out.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < p.images_.size(); ++i)
        out.images_[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
    return out;
}

std::string Permutation::to_string() const
{
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream out;
    for (const auto& c : cs) {
        out << "(";
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << ")";
    }
    return out.str();
}

} // namespace spinlab
