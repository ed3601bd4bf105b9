#include "spinlab/corpus.hpp"

#include "spinlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace spinlab {

namespace {

struct Entry {
    int simplex;
    std::vector<int> perm;
};

DeltaComplex table(int n, const std::vector<std::vector<Entry>>& rows)
{
    DeltaComplex dc;
    dc.dimension = n;
    for (const auto& row : rows) {
        std::vector<std::optional<Gluing>> r;
        for (const auto& e : row) r.push_back(Gluing{e.simplex, Permutation(e.perm)});
        dc.gluings.push_back(std::move(r));
    }
    return dc;
}

// Square ABCD cut along AC into (A,B,C) and (A,C,D); opposite sides
// identified by translation.
DeltaComplex torus2()
{
    return table(2, {{{1, {1, 0, 2}}, {1, {0, 2, 1}}, {1, {2, 1, 0}}},
                     {{0, {2, 1, 0}}, {0, {1, 0, 2}}, {0, {0, 2, 1}}}});
}

// Same square with AB glued to DC reversed.
DeltaComplex klein()
{
    return table(2, {{{1, {1, 0, 2}}, {1, {0, 2, 1}}, {1, {1, 2, 0}}},
                     {{0, {2, 0, 1}}, {0, {1, 0, 2}}, {0, {0, 2, 1}}}});
}

DeltaComplex double_simplex(int n)
{
    std::vector<int> id(static_cast<std::size_t>(n + 1));
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<Entry>> rows(2);
    for (int i = 0; i <= n; ++i) {
        rows[0].push_back({1, id});
        rows[1].push_back({0, id});
    }
    return table(n, rows);
}

DeltaComplex rp3_two_tet()
{
    return table(3, {{{0, {1, 3, 0, 2}}, {0, {2, 0, 3, 1}}, {1, {2, 1, 0, 3}}, {1, {0, 3, 2, 1}}},
                     {{0, {2, 1, 0, 3}}, {0, {0, 3, 2, 1}}, {1, {0, 1, 3, 2}}, {1, {0, 1, 3, 2}}}});
}

// The unit cube split into the six tetrahedra 0, e_a, e_a + e_b, (1,1,1), one
// per ordering (a, b, c) of the axes, with opposite cube faces identified.
DeltaComplex t3_six_tet()
{
    std::vector<std::vector<int>> orders;
    std::vector<int> p{0, 1, 2};
    do orders.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](std::vector<int> q) {
        return static_cast<int>(std::find(orders.begin(), orders.end(), q) - orders.begin());
    };
    std::vector<std::vector<Entry>> rows;
    for (const auto& o : orders) {
        const int a = o[0], b = o[1], c = o[2];
        rows.push_back({
            // Opposite the origin: the face x_a = 1, shifted by -e_a.
            {index({b, c, a}), {3, 0, 1, 2}},
            // Opposite e_a: shared with the tetrahedron that swaps a and b.
            {index({b, a, c}), {0, 1, 2, 3}},
            // Opposite e_a + e_b: shared with the one that swaps b and c.
            {index({a, c, b}), {0, 1, 2, 3}},
            // Opposite (1,1,1): the face x_c = 0, shifted by +e_c.
            {index({c, a, b}), {1, 2, 3, 0}},
        });
    }
    return table(3, rows);
}

int sphere_dimension(std::string_view name)
{
    std::string digits;
    if (name.starts_with("sphere(") && name.ends_with(")"))
        digits = std::string(name.substr(7, name.size() - 8));
    else if (name.starts_with("sphere"))
        digits = std::string(name.substr(6));
    if (digits.size() != 1 || digits[0] < '2' || digits[0] > '6') return -1;
    return digits[0] - '0';
}

} // namespace

NamedComplex builtin(std::string_view name)
{
    NamedComplex out;
    out.name = std::string(name);
    ExpectedInvariants& e = out.expected;
    if (name == "torus2") {
        out.complex = torus2();
        e = {true, 2, 4, true, 1, {}};
    } else if (name == "klein") {
        out.complex = klein();
        e = {false, 2, 0, false, 0, {}};
    } else if (name == "s3_two_tet") {
        out.complex = double_simplex(3);
        e = {true, 0, 1, true, 0, {}};
    } else if (name == "rp3_two_tet") {
        out.complex = rp3_two_tet();
        e = {true, 1, 2, true, 0, {2}};
    } else if (name == "t3_six_tet") {
        out.complex = t3_six_tet();
        e = {true, 3, 8, true, 3, {}};
    } else if (const int n = sphere_dimension(name); n > 0) {
        out.name = "sphere(" + std::to_string(n) + ")";
        out.complex = double_simplex(n);
        e = {true, 0, 1, true, n == 2 ? 1 : 0, {}};
    } else {
        throw ValidationError("unknown builtin \"" + std::string(name) + "\"", "corpus");
    }
    validate(out.complex);
    return out;
}

std::vector<std::string> builtin_names()
{
    return {"torus2", "klein", "sphere(2)", "sphere(3)", "sphere(4)", "sphere(5)", "sphere(6)",
            "s3_two_tet", "rp3_two_tet", "t3_six_tet"};
}

PentagonPatch pentagon_patch()
{
    PentagonPatch p;
    const Permutation id = Permutation::identity(3);
    const Permutation points_at_1 = Permutation::cycle(3, {0, 1, 2});
    p.embeddings.assign(5, id);
    p.frames = {points_at_1, points_at_1, id, id, points_at_1};
    const LiftedPermutation ccw = cycle_lift({0, 1, 2}, 3);
    const LiftedPermutation cw = cycle_lift({2, 1, 0}, 3);
    const LiftedPermutation one = LiftedPermutation::identity(3);
    p.b1 = {ccw, cw, one, cw, ccw};
    p.b2.assign(5, one);
    return p;
}

} // namespace spinlab
