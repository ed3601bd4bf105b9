#pragma once

// Independent reference computations used by the unit tests and the
// acceptance runner.

#include "spinlab/complex.hpp"
#include "spinlab/homology.hpp"
#include "spinlab/spin.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace spinlab::testing {

inline int plain_gf2_rank(std::vector<std::vector<int>> m)
{
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && m[r][c])
                for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

// Mod-2 Betti numbers of the triangulation's own cell structure: k-cells are
// face classes, the boundary drops one vertex at a time.
inline std::vector<int> simplicial_betti_mod2(const DeltaComplex& dc)
{
    const int n = dc.dimension;
    std::vector<std::vector<std::vector<FaceRef>>> cells;
    for (int k = 0; k <= n; ++k) cells.push_back(face_classes(dc, k));
    auto class_of = [&](int k, FaceRef f) {
        for (std::size_t i = 0; i < cells[static_cast<std::size_t>(k)].size(); ++i)
            for (const auto& m : cells[static_cast<std::size_t>(k)][i])
                if (m.simplex == f.simplex && m.mask == f.mask) return i;
        throw std::logic_error("face not found");
    };
    std::vector<int> boundary_rank(static_cast<std::size_t>(n + 2), 0);
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> m(cells[static_cast<std::size_t>(k)].size(),
                                        std::vector<int>(cells[static_cast<std::size_t>(k - 1)].size(), 0));
        for (std::size_t i = 0; i < m.size(); ++i) {
            const FaceRef rep = cells[static_cast<std::size_t>(k)][i].front();
            for (int v = 0; v <= n; ++v)
                if ((rep.mask >> v) & 1u) m[i][class_of(k - 1, {rep.simplex, rep.mask & ~(1u << v)})] ^= 1;
        }
        boundary_rank[static_cast<std::size_t>(k)] = plain_gf2_rank(m);
    }
    std::vector<int> betti;
    for (int k = 0; k <= n; ++k)
        betti.push_back(static_cast<int>(cells[static_cast<std::size_t>(k)].size()) - boundary_rank[static_cast<std::size_t>(k)] -
                        boundary_rank[static_cast<std::size_t>(k + 1)]);
    return betti;
}

inline BitVector bits_of_index(std::uint64_t x, std::size_t n)
{
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>((x >> i) & 1u);
    return v;
}

inline BitVector xor_of(BitVector a, const BitVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}

inline DeltaComplex random_relabel(const DeltaComplex& dc, std::mt19937& rng)
{
    std::vector<int> smap(static_cast<std::size_t>(dc.simplex_count()));
    std::iota(smap.begin(), smap.end(), 0);
    std::shuffle(smap.begin(), smap.end(), rng);
    std::vector<Permutation> vmaps;
    for (int s = 0; s < dc.simplex_count(); ++s) {
        std::vector<int> p(static_cast<std::size_t>(dc.dimension + 1));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        vmaps.emplace_back(p);
    }
    return relabel(dc, smap, vmaps);
}

inline Permutation random_permutation(int rank, bool even, std::mt19937& rng)
{
    std::vector<int> p(static_cast<std::size_t>(rank));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    if (even && Permutation(p).parity() == 1) std::swap(p[0], p[1]);
    return Permutation(p);
}

inline LiftedPermutation random_lift(int rank, bool even, std::mt19937& rng)
{
    const LiftedPermutation x = canonical_lift(random_permutation(rank, even, rng));
    return rng() % 2 ? -x : x;
}

inline GaugeElement random_gauge(const SpinContext& ctx, std::mt19937& rng)
{
    GaugeElement g;
    for (int s = 0; s < ctx.simplex_count(); ++s) g.simplex.push_back(random_lift(ctx.dimension + 1, true, rng));
    for (int f = 0; f < ctx.facet_count(); ++f) g.facet.push_back(random_lift(ctx.dimension, false, rng));
    return g;
}

/// Gauge element that is -1 exactly where the bits say: simplices first, then
/// facet classes.
inline GaugeElement sign_gauge(const SpinContext& ctx, std::uint64_t bits)
{
    GaugeElement g = gauge_identity(ctx);
    std::size_t k = 0;
    for (auto& x : g.simplex)
        if ((bits >> k++) & 1u) x = -x;
    for (auto& x : g.facet)
        if ((bits >> k++) & 1u) x = -x;
    return g;
}

/// Sign vector of a trivialization with canonical frames and canonical
/// motions, read off against the canonical trivialization with no flips.
inline BitVector read_signs(const SpinContext& ctx, const CombinatorialTrivialization& t)
{
    const CombinatorialTrivialization base = canonical_trivialization(ctx);
    BitVector s(static_cast<std::size_t>(ctx.facet_count()));
    for (std::size_t f = 0; f < s.size(); ++f) {
        const auto& p = t.paths[f];
        const auto& q = base.paths[f];
        const bool b1_flipped = p.b1 == -q.b1;
        const bool b2_flipped = p.b2 == -q.b2;
        if (!(b1_flipped || p.b1 == q.b1) || !(b2_flipped || p.b2 == q.b2))
            throw std::logic_error("path is not a signed canonical path");
        s[f] = static_cast<std::uint8_t>(b1_flipped != b2_flipped);
    }
    return s;
}

/// Result of the exhaustive count: sign vectors that extend over the 2-skeleton on every
/// circuit, the sign changes reachable by central simplex gauges, and the
/// number of classes.
struct BruteForceSpin {
    std::vector<BitVector> valid;
    std::set<BitVector> gauge_image;
    std::size_t classes = 0;
    bool closed_under_gauge = true;
};

inline BruteForceSpin brute_force_spin(const SpinContext& ctx)
{
    BruteForceSpin out;
    const std::size_t nf = static_cast<std::size_t>(ctx.facet_count());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << nf); ++x) {
        const BitVector s = bits_of_index(x, nf);
        if (extends_over_two_skeleton(ctx, canonical_trivialization(ctx, s))) out.valid.push_back(s);
    }
    const CombinatorialTrivialization base = canonical_trivialization(ctx);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << ctx.simplex_count()); ++x)
        out.gauge_image.insert(read_signs(ctx, apply_gauge(ctx, sign_gauge(ctx, x), base)));
    const std::set<BitVector> valid(out.valid.begin(), out.valid.end());
    for (const auto& s : out.valid)
        for (const auto& g : out.gauge_image)
            if (!valid.count(xor_of(s, g))) out.closed_under_gauge = false;
    if (!out.gauge_image.empty()) out.classes = out.valid.size() / out.gauge_image.size();
    return out;
}

/// Least member of the coset s + (gauge image).
inline BitVector class_representative(const BitVector& s, const std::set<BitVector>& gauge_image)
{
    BitVector best = s;
    for (const auto& g : gauge_image) best = std::min(best, xor_of(s, g));
    return best;
}

} // namespace spinlab::testing
