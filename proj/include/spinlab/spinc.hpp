#pragma once

#include "spinlab/homology.hpp"
#include "spinlab/spin.hpp"

#include <optional>
#include <vector>

namespace spinlab {

/// An integral 2-cochain (one value per codim-2 circuit) together with a sign
/// vector over facet classes; the trivialization is the canonical one with
/// those B_1 signs.
struct SpinCStructure {
    IntVector beta;
    BitVector signs;

    friend bool operator==(const SpinCStructure&, const SpinCStructure&) = default;
};

struct SpinCCheck {
    /// Circuit products F_m ... F_1.
    std::vector<CentralSign> products;
    /// Whether each product equals (-1)^(1 + beta(W)).
    std::vector<bool> pass;
    bool all_pass = true;
};

/// Whether a circuit product equals (-1)^(1 + beta).
bool twisted_condition_holds(CentralSign product, const Integer& beta);

/// Throws AlgebraError if beta has the wrong length or is not a cocycle.
SpinCCheck spinc_check(const SpinContext& ctx, const CombinatorialTrivialization& t, const IntVector& beta);

struct SpinCResult {
    bool exists = false;
    BocksteinResult w3;
    CohomologyGroup h2;
    /// Valid only when exists.
    SpinCStructure structure;
};

SpinCResult find_spinc(const SpinContext& ctx);

/// A sign vector making (beta, signs) a spin-c structure, if one exists.
/// Throws AlgebraError if beta is not a cocycle.
std::optional<SpinCStructure> spinc_for_beta(const SpinContext& ctx, const IntVector& beta);

/// The H^2(N; Z) action: beta + 2c with the same signs. Throws AlgebraError
/// if c is not a cocycle.
SpinCStructure act_h2(const SpinContext& ctx, const SpinCStructure& s, const IntVector& c);
/// beta + c with the signs re-solved. Throws AlgebraError when c is not a
/// cocycle or its reduction is not a mod-2 coboundary (no signs fit).
SpinCStructure shift_beta(const SpinContext& ctx, const SpinCStructure& s, const IntVector& c);

/// Equivalence generated by simplex gauges on the signs and by
/// (beta, s) ~ (beta + d1 g, s + g mod 2) for integral 1-cochains g.
bool spinc_equivalent(const SpinContext& ctx, const SpinCStructure& a, const SpinCStructure& b);

/// One representative per class in the H^2 orbit of s. Throws AlgebraError if
/// H^2(N; Z) is infinite.
std::vector<SpinCStructure> spinc_orbit(const SpinContext& ctx, const SpinCStructure& s);

} // namespace spinlab
