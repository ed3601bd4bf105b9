#pragma once

#include "spinlab/permutation.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinlab {

/// Facet i of the owning simplex is attached to facet perm(i) of `simplex`,
/// vertex v going to vertex perm(v).
struct Gluing {
    int simplex = 0;
    Permutation perm;

    friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// Unordered delta complex: n-simplices glued along facets.
struct DeltaComplex {
    int dimension = 0;
    /// gluings[s][i] for simplex s and facet i in 0..n.
    std::vector<std::vector<std::optional<Gluing>>> gluings;

    int simplex_count() const { return static_cast<int>(gluings.size()); }
    /// Throws ValidationError if facet i of s is unglued.
    const Gluing& gluing(int s, int i) const;

    friend bool operator==(const DeltaComplex&, const DeltaComplex&) = default;
};

/// Shape checks only: field types, ranges, bijective vertex maps.
DeltaComplex complex_from_json(const nlohmann::json& document);
/// Full check of a closed triangulation: involutive gluings, no facet glued to
/// itself, every codim-2 link a single circle along which the face returns to
/// itself unpermuted, every codim-3 link an oriented 2-sphere.
void validate(const DeltaComplex& dc);
DeltaComplex parse_and_validate(std::string_view text);
nlohmann::json to_json(const DeltaComplex& dc);
/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string serialize(const DeltaComplex& dc);

/// Renames simplex s to simplex_map[s] and relabels the vertices of simplex s
/// by vertex_maps[s] (old vertex v becomes vertex_maps[s](v)).
DeltaComplex relabel(const DeltaComplex& dc, const std::vector<int>& simplex_map,
                     const std::vector<Permutation>& vertex_maps);

/// A face of a simplex, as the bit mask of its vertices.
struct FaceRef {
    int simplex = 0;
    std::uint32_t mask = 0;

    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// Faces of the given dimension, grouped by identification. Members are
/// sorted; classes are ordered by their least member, comparing simplex first
/// and then the ascending list of vertices not in the face.
std::vector<std::vector<FaceRef>> face_classes(const DeltaComplex& dc, int face_dimension);

/// A glued facet pair. Side 1 is the lexicographically smaller (simplex, facet).
struct FacetClass {
    int id = 0;
    int simplex1 = 0;
    int facet1 = 0;
    int simplex2 = 0;
    int facet2 = 0;
    /// Vertex map from side 1 to side 2.
    Permutation map;
};

std::vector<FacetClass> facet_classes(const DeltaComplex& dc);

/// One stop of the walk around a codim-2 face W.
struct CircuitStep {
    int simplex = 0;
    /// Extension of the inclusion of W: positions 0..n-2 go to W's vertices in
    /// W's own order, n-1 and n go to the two remaining vertices so that the
    /// edge w(n-1) -> w(n) is the positive direction of the normal circle.
    Permutation embedding;
    /// The facet crossed when leaving this simplex: the one opposite w(n-1).
    int exit_facet = 0;
    int facet_class = 0;
    /// +1 if the walk crosses the facet class from side 1 to side 2.
    int direction = 1;
};

struct Codim2Circuit {
    int id = 0;
    std::vector<CircuitStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
};

/// Circuits of all codim-2 classes, in face_classes order. With charts, the
/// walk starts so that chart[s]^-1 * embedding is even, which makes every
/// embedding even in chart coordinates when the charts orient the complex.
std::vector<Codim2Circuit> codim2_circuits(const DeltaComplex& dc, const std::vector<Permutation>* charts = nullptr);

struct OrientationResult {
    bool orientable = false;
    /// +1 / -1 per simplex; realizes w1 == 0 when orientable.
    std::vector<int> simplex_sign;
    /// Per facet class: 0 if the gluing is compatible with the signs.
    std::vector<std::uint8_t> w1;
    /// Non-orientable only: a closed walk in the dual 1-skeleton, as the
    /// simplices visited and the facet classes crossed, with odd w1 sum.
    std::vector<int> certificate_simplices;
    std::vector<int> certificate_facets;
};

OrientationResult orient_and_w1(const DeltaComplex& dc);

/// Charts making every gluing odd: identity for positively signed simplices,
/// the transposition (0 1) otherwise.
std::vector<Permutation> orientation_charts(const OrientationResult& orientation, int dimension);

struct Codim3Link {
    int id = 0;
    /// Corners (simplex, mask of the three vertices not in U).
    std::vector<FaceRef> triangles;
    int vertices = 0;
    int edges = 0;
    int euler_characteristic() const { return vertices - edges + static_cast<int>(triangles.size()); }
    /// Signed incidence of each codim-2 circuit on the boundary of the dual 3-cell.
    std::map<int, int> incidence;
    /// Unsigned incidence count mod 2.
    std::map<int, int> incidence_mod2;
};

/// Throws ValidationError if some link is not an oriented 2-sphere.
std::vector<Codim3Link> codim3_links(const DeltaComplex& dc, const std::vector<Codim2Circuit>& circuits);

struct DualSkeleton {
    int dimension = 0;
    int simplex_count = 0;
    OrientationResult orientation;
    /// Empty unless orientable.
    std::vector<Permutation> charts;
    std::vector<FacetClass> facets;
    std::vector<Codim2Circuit> circuits;
    std::vector<Codim3Link> links;

    /// Facet class id of (simplex, facet).
    std::vector<std::vector<int>> facet_class_of;
};

/// Assembles all four layers. Circuits are oriented by the charts when the
/// complex is orientable.
DualSkeleton dual_skeleton(const DeltaComplex& dc);

} // namespace spinlab
