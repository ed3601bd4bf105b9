#pragma once

#include "spinlab/binary_group.hpp"
#include "spinlab/quaternion.hpp"

#include <map>
#include <string>
#include <vector>

namespace spinlab {

/// One quaternion for the Spin(3) model, a (left, right) pair for Spin(4).
using ModelElement = std::vector<Quaternion>;

/// Finite group of unit quaternions (or pairs of them) given by an explicit list.
struct UnitQuaternionGroup {
    std::string name;
    int radicand = 2;
    int components = 1;
    std::vector<ModelElement> elements;
};

/// The 48 unit quaternions preserving a tetrahedron and its negative.
UnitQuaternionGroup build_sigma4_model();
/// The 120 pairs acting on the regular 4-simplex by q1 v q2^-1.
UnitQuaternionGroup build_a5_model();

ModelElement model_product(const ModelElement& x, const ModelElement& y);
ModelElement model_identity(const UnitQuaternionGroup& group);
/// Least m >= 1 with x^m = 1; throws AlgebraError if none is found below `limit`.
int model_element_order(const ModelElement& x, int limit = 1000);

struct ClosureReport {
    bool closed = false;
    bool has_inverses = false;
    bool unit_norm = false;
    bool contains_minus_one = false;
    std::size_t center_size = 0;
    std::string detail;

    bool ok() const { return closed && has_inverses && unit_norm && contains_minus_one; }
};

ClosureReport verify_closure(const UnitQuaternionGroup& group);

std::map<int, int> order_histogram(const UnitQuaternionGroup& group);
std::map<int, int> order_histogram(const std::vector<LiftedPermutation>& cover);

struct IsomorphismReport {
    bool found = false;
    std::string detail;
    /// Images of the generators used for the search.
    std::vector<LiftedPermutation> generators;
    std::vector<ModelElement> generator_images;
    /// image[i] is the index in the model of the image of cover[i].
    std::vector<std::size_t> image;
};

/// Generators used by default: [0 1] and [1 2 3] for the full cover of Sym(4),
/// [0 1 2] and [0 1 2 3 4] for the even cover on five letters.
std::vector<LiftedPermutation> default_generators(const std::vector<LiftedPermutation>& cover);

/// Searches for an isomorphism cover -> model: tries every assignment of the
/// generators to model elements of the same orders, extends along the Cayley
/// graph, and checks the full multiplication table.
IsomorphismReport verify_model_isomorphism(const UnitQuaternionGroup& model, const std::vector<LiftedPermutation>& cover);
IsomorphismReport verify_model_isomorphism(const UnitQuaternionGroup& model, const std::vector<LiftedPermutation>& cover,
                                           const std::vector<LiftedPermutation>& generators);

} // namespace spinlab
