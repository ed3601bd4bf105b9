#pragma once

#include "spinlab/binary_group.hpp"
#include "spinlab/complex.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spinlab {

/// Classical invariants a builtin is expected to have.
struct ExpectedInvariants {
    bool orientable = true;
    int h1_rank_mod2 = 0;
    /// Number of spin structures; 0 when none exist or the complex is not orientable.
    int spin_count = 0;
    bool spinc_exists = false;
    int h2_free_rank = 0;
    std::vector<int> h2_torsion;
};

struct NamedComplex {
    std::string name;
    DeltaComplex complex;
    ExpectedInvariants expected;
};

/// torus2, klein, sphere(n) for 2 <= n <= 6 (also spelled sphereN),
/// s3_two_tet, rp3_two_tet, t3_six_tet. Throws ValidationError for other names.
NamedComplex builtin(std::string_view name);
/// Canonical names, in a fixed order.
std::vector<std::string> builtin_names();

/// Five triangles around a vertex with the framing data of the worked example,
/// already expressed in the coordinates of the vertex (all embeddings are the
/// identity).
struct PentagonPatch {
    std::vector<Permutation> embeddings;
    std::vector<Permutation> frames;
    std::vector<LiftedPermutation> b1;
    std::vector<LiftedPermutation> b2;
};

PentagonPatch pentagon_patch();

} // namespace spinlab
