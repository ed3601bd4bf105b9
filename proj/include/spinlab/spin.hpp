#pragma once

#include "spinlab/binary_group.hpp"
#include "spinlab/complex.hpp"
#include "spinlab/homology.hpp"

#include <string>
#include <vector>

namespace spinlab {

/// Per-facet data in chart coordinates: the charts of an oriented complex
/// make every gluing odd.
struct FacetChart {
    int simplex1 = 0;
    int simplex2 = 0;
    /// Opposite vertices of the facet on each side, in chart coordinates.
    int vertex1 = 0;
    int vertex2 = 0;
    /// Gluing map from side 1 to side 2 in chart coordinates.
    Permutation phi;
    /// Face inclusions extended to the whole simplex: f1 sends 0..n-1 onto the
    /// facet in increasing order and n to vertex1; f2 = phi * f1.
    Permutation f1;
    Permutation f2;
};

/// Everything the spin computations need about an oriented complex.
struct SpinContext {
    int dimension = 0;
    DualSkeleton skeleton;
    DualCochains cochains;
    std::vector<FacetChart> facets;
    /// Embedding of W at each circuit step, in chart coordinates (even).
    std::vector<std::vector<Permutation>> embeddings;

    int simplex_count() const { return skeleton.simplex_count; }
    int facet_count() const { return static_cast<int>(facets.size()); }
};

/// Throws NonOrientableError (quoting the odd cycle) for non-orientable input
/// and ValidationError for invalid input.
SpinContext make_spin_context(const DeltaComplex& dc);

/// A lift of a 2-part rigid motion across one facet class.
struct CombinatorialPath {
    LiftedPermutation b1;
    LiftedPermutation b2;

    friend bool operator==(const CombinatorialPath&, const CombinatorialPath&) = default;
};

struct CombinatorialTrivialization {
    /// Frame of each simplex, stored as its even extension.
    std::vector<Permutation> frames;
    /// One path per facet class.
    std::vector<CombinatorialPath> paths;

    friend bool operator==(const CombinatorialTrivialization&, const CombinatorialTrivialization&) = default;
};

/// Empty string if every frame is even and every path is a lifted rigid
/// motion between the frames; otherwise a description of the first failure.
std::string check_trivialization(const SpinContext& ctx, const CombinatorialTrivialization& t);

/// Identity frames; b1 is the canonical lift of the identity if the facet's
/// opposite vertex is n-1 or n, else of the 3-cycle vertex -> n-1 -> n; b2 is
/// the canonical lift of the even map agreeing with phi * b1 on the frame.
/// signs[F] = 1 negates b1 of facet class F.
CombinatorialTrivialization canonical_trivialization(const SpinContext& ctx, const BitVector& signs = {});

/// One element of the cover of the even group per simplex and one element of
/// the cover of Sym(n) (acting on 0..n-1) per facet class.
struct GaugeElement {
    std::vector<LiftedPermutation> simplex;
    std::vector<LiftedPermutation> facet;
};

GaugeElement gauge_identity(const SpinContext& ctx);
GaugeElement gauge_product(const GaugeElement& g, const GaugeElement& h);
/// The vertex of the facet (in facet coordinates 0..n-1) missed by the frame
/// pushed into it.
int missed_facet_vertex(const SpinContext& ctx, const CombinatorialTrivialization& t, int facet);
/// Throws InternalError if the result is not a trivialization.
CombinatorialTrivialization apply_gauge(const SpinContext& ctx, const GaugeElement& g, const CombinatorialTrivialization& t);

/// Transition map in W coordinates from the local data: the two motions
/// across the facet as seen from this step, the embeddings of W here and at
/// the next step, and the frame of this simplex.
LiftedPermutation transition_map(const LiftedPermutation& b1, const LiftedPermutation& b2, const Permutation& w_here,
                                 const Permutation& w_next, const Permutation& frame);
/// Transition map at `position` of circuit `circuit`.
LiftedPermutation transition_map(const SpinContext& ctx, int circuit, int position, const CombinatorialTrivialization& t);

/// F_m ... F_1 for the circuit; throws InternalError if it is not central.
CentralSign circuit_obstruction(const SpinContext& ctx, int circuit, const CombinatorialTrivialization& t);
/// 0 on circuits whose product is -1 (the trivialization extends there).
BitVector w2_cochain(const SpinContext& ctx, const CombinatorialTrivialization& t);
bool extends_over_two_skeleton(const SpinContext& ctx, const CombinatorialTrivialization& t);

struct SpinStructureSet {
    bool exists = false;
    /// The w2 cochain of the canonical trivialization.
    BitVector w2;
    /// Sign vector of one spin structure (feasible only).
    BitVector base_signs;
    /// Cocycles whose classes form a basis of H^1(N; Z/2).
    std::vector<BitVector> h1_basis;
    /// Basis of the image of d0: sign changes produced by simplex gauges.
    std::vector<BitVector> gauge_basis;
    /// log2 of the number of spin structures.
    std::size_t log2_count = 0;
    Integer count = 0;
    /// Infeasible only: a mod-2 cycle of dual 2-cells on which w2 is odd.
    BitVector certificate;
};

SpinStructureSet solve_spin_structures(const SpinContext& ctx);

/// Sign vector of the structure moved by the 1-cocycle omega. Throws
/// AlgebraError if omega is not a cocycle.
BitVector act_h1(const SpinContext& ctx, const BitVector& signs, const BitVector& omega);

/// Sign vector of the canonical trivialization in the gauge orbit of t, up to
/// the image of d0.
BitVector canonical_signs(const SpinContext& ctx, const CombinatorialTrivialization& t);
/// Whether two sign vectors differ by a simplex gauge.
bool same_gauge_class(const SpinContext& ctx, const BitVector& a, const BitVector& b);
bool homotopic(const SpinContext& ctx, const CombinatorialTrivialization& t1, const CombinatorialTrivialization& t2);

} // namespace spinlab
