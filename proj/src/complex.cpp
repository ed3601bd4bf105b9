#include "spinlab/complex.hpp"

#include "spinlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace spinlab {

namespace {

std::string at(int s, int i)
{
    return "simplex " + std::to_string(s) + ", facet " + std::to_string(i);
}

std::string at_simplex(int s)
{
    return "simplex " + std::to_string(s);
}

std::uint32_t full_mask(int n)
{
    return (std::uint32_t{1} << (n + 1)) - 1;
}

std::vector<int> bits_of(std::uint32_t mask)
{
    std::vector<int> out;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::uint32_t image_mask(const Permutation& p, std::uint32_t mask)
{
    std::uint32_t out = 0;
    for (int v : bits_of(mask)) out |= std::uint32_t{1} << p(v);
    return out;
}

// Order on faces: simplex, then ascending list of vertices not in the face.
bool face_less(const FaceRef& a, const FaceRef& b, int n)
{
    if (a.simplex != b.simplex) return a.simplex < b.simplex;
    return bits_of(full_mask(n) & ~a.mask) < bits_of(full_mask(n) & ~b.mask);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

void check_shape(const DeltaComplex& dc)
{
    if (dc.dimension < 2) throw ValidationError("dimension must be at least 2", "dimension");
    if (dc.dimension > 8) throw ValidationError("dimension above 8 is not supported", "dimension");
    if (dc.gluings.empty()) throw ValidationError("complex has no simplices", "simplices");
    for (int s = 0; s < dc.simplex_count(); ++s) {
        const auto& row = dc.gluings[static_cast<std::size_t>(s)];
        if (static_cast<int>(row.size()) != dc.dimension + 1)
            throw ValidationError("expected " + std::to_string(dc.dimension + 1) + " facets", at_simplex(s));
        for (int i = 0; i <= dc.dimension; ++i) {
            const auto& g = row[static_cast<std::size_t>(i)];
            if (!g) continue;
            if (g->simplex < 0 || g->simplex >= dc.simplex_count())
                throw ValidationError("target simplex out of range", at(s, i));
            if (g->perm.size() != dc.dimension + 1) throw ValidationError("vertex map has the wrong length", at(s, i));
        }
    }
}

} // namespace

const Gluing& DeltaComplex::gluing(int s, int i) const
{
    const auto& g = gluings.at(static_cast<std::size_t>(s)).at(static_cast<std::size_t>(i));
    if (!g) throw ValidationError("facet is unglued (boundary is not supported)", at(s, i));
    return *g;
}

DeltaComplex complex_from_json(const nlohmann::json& document)
{
    if (!document.is_object()) throw ValidationError("document must be a JSON object", "document");
    for (const char* key : {"dimension", "simplices", "gluings"})
        if (!document.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"", "document");
    if (!document["dimension"].is_number_integer()) throw ValidationError("must be an integer", "dimension");
    if (!document["simplices"].is_number_integer()) throw ValidationError("must be an integer", "simplices");
    if (!document["gluings"].is_array()) throw ValidationError("must be an array", "gluings");
    DeltaComplex dc;
    dc.dimension = document["dimension"].get<int>();
    const int count = document["simplices"].get<int>();
    const auto& rows = document["gluings"];
    if (dc.dimension < 2) throw ValidationError("dimension must be at least 2", "dimension");
    if (dc.dimension > 8) throw ValidationError("dimension above 8 is not supported", "dimension");
    if (count < 1) throw ValidationError("need at least one simplex", "simplices");
    if (static_cast<int>(rows.size()) != count)
        throw ValidationError("expected " + std::to_string(count) + " rows", "gluings");
    for (int s = 0; s < count; ++s) {
        const auto& row = rows[static_cast<std::size_t>(s)];
        const std::string where = "gluings[" + std::to_string(s) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != dc.dimension + 1)
            throw ValidationError("expected an array of " + std::to_string(dc.dimension + 1) + " entries", where);
        std::vector<std::optional<Gluing>> out_row;
        for (int i = 0; i <= dc.dimension; ++i) {
            const auto& entry = row[static_cast<std::size_t>(i)];
            const std::string loc = where + "[" + std::to_string(i) + "]";
            if (entry.is_null()) {
                out_row.emplace_back();
                continue;
            }
            if (!entry.is_object() || !entry.contains("simplex") || !entry.contains("perm"))
                throw ValidationError("expected null or {\"simplex\", \"perm\"}", loc);
            if (!entry["simplex"].is_number_integer()) throw ValidationError("simplex must be an integer", loc);
            const int t = entry["simplex"].get<int>();
            if (t < 0 || t >= count) throw ValidationError("target simplex out of range", loc);
            const auto& perm = entry["perm"];
            if (!perm.is_array() || static_cast<int>(perm.size()) != dc.dimension + 1)
                throw ValidationError("perm must list " + std::to_string(dc.dimension + 1) + " vertices", loc);
            std::vector<int> images;
            for (const auto& v : perm) {
                if (!v.is_number_integer()) throw ValidationError("perm entries must be integers", loc);
                images.push_back(v.get<int>());
            }
            try {
                out_row.push_back(Gluing{t, Permutation(images)});
            } catch (const AlgebraError&) {
                throw ValidationError("perm is not a bijection of the vertices", loc);
            }
        }
        dc.gluings.push_back(std::move(out_row));
    }
    return dc;
}

void validate(const DeltaComplex& dc)
{
    check_shape(dc);
    const int n = dc.dimension;
    for (int s = 0; s < dc.simplex_count(); ++s)
        for (int i = 0; i <= n; ++i) (void)dc.gluing(s, i);
    for (int s = 0; s < dc.simplex_count(); ++s) {
        for (int i = 0; i <= n; ++i) {
            const Gluing& g = dc.gluing(s, i);
            const int j = g.perm(i);
            if (g.simplex == s && j == i) throw ValidationError("facet is glued to itself", at(s, i));
            const auto& back = dc.gluings[static_cast<std::size_t>(g.simplex)][static_cast<std::size_t>(j)];
            if (!back || back->simplex != s || back->perm != g.perm.inverse())
                throw ValidationError("gluing is not involutive: the entry at " + at(g.simplex, j) + " does not map back",
                                      at(s, i));
        }
    }
    const auto circuits = codim2_circuits(dc);
    if (n >= 3) (void)codim3_links(dc, circuits);
}

DeltaComplex parse_and_validate(std::string_view text)
{
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
    DeltaComplex dc = complex_from_json(document);
    validate(dc);
    return dc;
}

nlohmann::json to_json(const DeltaComplex& dc)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : dc.gluings) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& g : row) {
            if (!g) {
                r.push_back(nullptr);
                continue;
            }
            r.push_back({{"perm", g->perm.images()}, {"simplex", g->simplex}});
        }
        rows.push_back(std::move(r));
    }
    return {{"dimension", dc.dimension}, {"gluings", std::move(rows)}, {"simplices", dc.simplex_count()}};
}

std::string serialize(const DeltaComplex& dc)
{
    return to_json(dc).dump(2) + "\n";
}

DeltaComplex relabel(const DeltaComplex& dc, const std::vector<int>& simplex_map,
                     const std::vector<Permutation>& vertex_maps)
{
    const int count = dc.simplex_count();
    if (static_cast<int>(simplex_map.size()) != count || static_cast<int>(vertex_maps.size()) != count)
        throw ValidationError("relabel: map sizes do not match the simplex count");
    DeltaComplex out;
    out.dimension = dc.dimension;
    out.gluings.assign(static_cast<std::size_t>(count),
                       std::vector<std::optional<Gluing>>(static_cast<std::size_t>(dc.dimension + 1)));
    for (int s = 0; s < count; ++s) {
        const Permutation& vs = vertex_maps[static_cast<std::size_t>(s)];
        for (int i = 0; i <= dc.dimension; ++i) {
            const auto& g = dc.gluings[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
            if (!g) continue;
            const Permutation& vt = vertex_maps[static_cast<std::size_t>(g->simplex)];
            out.gluings[static_cast<std::size_t>(simplex_map[static_cast<std::size_t>(s)])][static_cast<std::size_t>(vs(i))] =
                Gluing{simplex_map[static_cast<std::size_t>(g->simplex)], vt * g->perm * vs.inverse()};
        }
    }
    return out;
}

std::vector<std::vector<FaceRef>> face_classes(const DeltaComplex& dc, int face_dimension)
{
    const int n = dc.dimension;
    if (face_dimension < 0 || face_dimension > n) return {};
    const std::uint32_t masks = std::uint32_t{1} << (n + 1);
    const int count = dc.simplex_count();
    auto id = [&](int s, std::uint32_t mask) { return s * static_cast<int>(masks) + static_cast<int>(mask); };
    UnionFind uf(static_cast<std::size_t>(count) * masks);
    for (int s = 0; s < count; ++s) {
        for (int i = 0; i <= n; ++i) {
            const auto& g = dc.gluings[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
            if (!g) continue;
            for (std::uint32_t mask = 1; mask < masks; ++mask) {
                if (std::popcount(mask) != face_dimension + 1 || (mask >> i) & 1u) continue;
                uf.unite(id(s, mask), id(g->simplex, image_mask(g->perm, mask)));
            }
        }
    }
    std::map<int, std::vector<FaceRef>> groups;
    for (int s = 0; s < count; ++s)
        for (std::uint32_t mask = 1; mask < masks; ++mask)
            if (std::popcount(mask) == face_dimension + 1) groups[uf.find(id(s, mask))].push_back({s, mask});
    std::vector<std::vector<FaceRef>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end(), [n](const FaceRef& a, const FaceRef& b) { return face_less(a, b, n); });
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [n](const auto& a, const auto& b) { return face_less(a.front(), b.front(), n); });
    return out;
}

std::vector<FacetClass> facet_classes(const DeltaComplex& dc)
{
    std::vector<FacetClass> out;
    std::set<std::pair<int, int>> seen;
    for (int s = 0; s < dc.simplex_count(); ++s) {
        for (int i = 0; i <= dc.dimension; ++i) {
            if (seen.count({s, i})) continue;
            const Gluing& g = dc.gluing(s, i);
            const int j = g.perm(i);
            seen.insert({s, i});
            seen.insert({g.simplex, j});
            out.push_back({static_cast<int>(out.size()), s, i, g.simplex, j, g.perm});
        }
    }
    return out;
}

namespace {

std::vector<std::vector<int>> facet_class_table(const DeltaComplex& dc, const std::vector<FacetClass>& facets)
{
    std::vector<std::vector<int>> table(static_cast<std::size_t>(dc.simplex_count()),
                                        std::vector<int>(static_cast<std::size_t>(dc.dimension + 1), -1));
    for (const auto& f : facets) {
        table[static_cast<std::size_t>(f.simplex1)][static_cast<std::size_t>(f.facet1)] = f.id;
        table[static_cast<std::size_t>(f.simplex2)][static_cast<std::size_t>(f.facet2)] = f.id;
    }
    return table;
}

} // namespace

std::vector<Codim2Circuit> codim2_circuits(const DeltaComplex& dc, const std::vector<Permutation>* charts)
{
    const int n = dc.dimension;
    const auto facets = facet_classes(dc);
    const auto facet_of = facet_class_table(dc, facets);
    const auto classes = face_classes(dc, n - 2);
    const Permutation swap_last = Permutation::transposition(n + 1, n - 1, n);
    std::vector<Codim2Circuit> out;
    for (const auto& members : classes) {
        const FaceRef start = members.front();
        std::vector<int> images = bits_of(start.mask);
        for (int v : bits_of(full_mask(n) & ~start.mask)) images.push_back(v);
        Permutation w(images);
        if (charts && (charts->at(static_cast<std::size_t>(start.simplex)).inverse() * w).parity() == 1)
            w = w * swap_last;

        Codim2Circuit circuit;
        circuit.id = static_cast<int>(out.size());
        std::set<std::pair<int, std::uint32_t>> visited;
        int s = start.simplex;
        const std::string where = "codim-2 face at simplex " + std::to_string(start.simplex);
        while (true) {
            const std::uint32_t corner = image_mask(w, full_mask(n) & ~((std::uint32_t{1} << (n - 1)) - 1));
            if (!visited.insert({s, corner}).second)
                throw ValidationError("codim-2 face is identified with itself by a nontrivial permutation", where);
            const int exit = w(n - 1);
            const Gluing& g = dc.gluing(s, exit);
            const int fc = facet_of[static_cast<std::size_t>(s)][static_cast<std::size_t>(exit)];
            const FacetClass& f = facets[static_cast<std::size_t>(fc)];
            const int direction = (f.simplex1 == s && f.facet1 == exit) ? 1 : -1;
            circuit.steps.push_back({s, w, exit, fc, direction});
            w = g.perm * w * swap_last;
            s = g.simplex;
            if (s == start.simplex && w == circuit.steps.front().embedding) break;
        }
        if (visited.size() != members.size())
            throw ValidationError("link of codim-2 face is not a single circle", where);
        out.push_back(std::move(circuit));
    }
    return out;
}

OrientationResult orient_and_w1(const DeltaComplex& dc)
{
    const int count = dc.simplex_count();
    const auto facets = facet_classes(dc);
    const auto facet_of = facet_class_table(dc, facets);
    OrientationResult r;
    r.simplex_sign.assign(static_cast<std::size_t>(count), 0);
    std::vector<int> parent(static_cast<std::size_t>(count), -1);
    std::vector<int> parent_facet(static_cast<std::size_t>(count), -1);
    for (int root = 0; root < count; ++root) {
        if (r.simplex_sign[static_cast<std::size_t>(root)] != 0) continue;
        r.simplex_sign[static_cast<std::size_t>(root)] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int s = queue.front();
            queue.pop_front();
            for (int i = 0; i <= dc.dimension; ++i) {
                const Gluing& g = dc.gluing(s, i);
                if (r.simplex_sign[static_cast<std::size_t>(g.simplex)] != 0) continue;
                const int sgn = g.perm.parity() == 0 ? 1 : -1;
                r.simplex_sign[static_cast<std::size_t>(g.simplex)] = -r.simplex_sign[static_cast<std::size_t>(s)] * sgn;
                parent[static_cast<std::size_t>(g.simplex)] = s;
                parent_facet[static_cast<std::size_t>(g.simplex)] = facet_of[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
                queue.push_back(g.simplex);
            }
        }
    }
    r.w1.assign(facets.size(), 0);
    int bad = -1;
    for (const auto& f : facets) {
        const int sgn = f.map.parity() == 0 ? 1 : -1;
        const int product = r.simplex_sign[static_cast<std::size_t>(f.simplex1)] *
                            r.simplex_sign[static_cast<std::size_t>(f.simplex2)] * sgn;
        r.w1[static_cast<std::size_t>(f.id)] = product == -1 ? 0 : 1;
        if (product != -1 && bad < 0) bad = f.id;
    }
    r.orientable = bad < 0;
    if (r.orientable) return r;

    // Closed walk: s1 -> (tree) -> common ancestor -> (tree) -> s2 -> bad facet -> s1.
    const FacetClass& f = facets[static_cast<std::size_t>(bad)];
    auto path_to_root = [&](int s) {
        std::vector<int> p{s};
        while (parent[static_cast<std::size_t>(p.back())] >= 0) p.push_back(parent[static_cast<std::size_t>(p.back())]);
        return p;
    };
    std::vector<int> a = path_to_root(f.simplex1);
    std::vector<int> b = path_to_root(f.simplex2);
    while (a.size() >= 2 && b.size() >= 2 && a[a.size() - 2] == b[b.size() - 2]) {
        a.pop_back();
        b.pop_back();
    }
    // a and b now end at the common ancestor.
    for (std::size_t k = 0; k < a.size(); ++k) {
        r.certificate_simplices.push_back(a[k]);
        if (k + 1 < a.size()) r.certificate_facets.push_back(parent_facet[static_cast<std::size_t>(a[k])]);
    }
    for (std::size_t k = b.size() - 1; k-- > 0;) {
        r.certificate_facets.push_back(parent_facet[static_cast<std::size_t>(b[k])]);
        r.certificate_simplices.push_back(b[k]);
    }
    r.certificate_facets.push_back(bad);
    return r;
}

std::vector<Permutation> orientation_charts(const OrientationResult& orientation, int dimension)
{
    std::vector<Permutation> charts;
    for (int sign : orientation.simplex_sign)
        charts.push_back(sign > 0 ? Permutation::identity(dimension + 1) : Permutation::transposition(dimension + 1, 0, 1));
    return charts;
}

std::vector<Codim3Link> codim3_links(const DeltaComplex& dc, const std::vector<Codim2Circuit>& circuits)
{
    const int n = dc.dimension;
    if (n < 3) return {};
    std::map<std::pair<int, std::uint32_t>, std::pair<int, int>> corner_step;
    for (const auto& c : circuits) {
        for (int k = 0; k < c.length(); ++k) {
            const auto& st = c.steps[static_cast<std::size_t>(k)];
            const std::uint32_t excluded = (std::uint32_t{1} << st.embedding(n - 1)) | (std::uint32_t{1} << st.embedding(n));
            corner_step[{st.simplex, excluded}] = {c.id, k};
        }
    }

    std::vector<Codim3Link> out;
    for (const auto& members : face_classes(dc, n - 3)) {
        Codim3Link link;
        link.id = static_cast<int>(out.size());
        const std::string where = "codim-3 face at simplex " + std::to_string(members.front().simplex);
        std::map<FaceRef, int> index;
        for (const auto& m : members) {
            const FaceRef tri{m.simplex, full_mask(n) & ~m.mask};
            index.emplace(tri, static_cast<int>(link.triangles.size()));
            link.triangles.push_back(tri);
        }
        const std::size_t nt = link.triangles.size();
        // Cyclic orientation and the transported order of U's vertices.
        std::vector<std::vector<int>> orient(nt);
        std::vector<std::vector<int>> u_order(nt);
        // Link vertex slots: triangle * 3 + position in ascending vertex list.
        UnionFind uf(nt * 3);
        auto slot = [&](int tri, int vertex) {
            const auto vs = bits_of(link.triangles[static_cast<std::size_t>(tri)].mask);
            return tri * 3 + static_cast<int>(std::find(vs.begin(), vs.end(), vertex) - vs.begin());
        };
        orient[0] = bits_of(link.triangles[0].mask);
        u_order[0] = bits_of(members.front().mask);
        std::deque<int> queue{0};
        std::vector<bool> seen(nt, false);
        seen[0] = true;
        while (!queue.empty()) {
            const int a = queue.front();
            queue.pop_front();
            const FaceRef& ta = link.triangles[static_cast<std::size_t>(a)];
            const auto& oa = orient[static_cast<std::size_t>(a)];
            for (int k = 0; k < 3; ++k) {
                // Edge oa[k] -> oa[k+1], opposite vertex oa[k+2], lies in facet oa[k+2].
                const int p = oa[static_cast<std::size_t>(k)];
                const int q = oa[static_cast<std::size_t>((k + 1) % 3)];
                const int r = oa[static_cast<std::size_t>((k + 2) % 3)];
                const Gluing& g = dc.gluing(ta.simplex, r);
                const FaceRef tb{g.simplex, image_mask(g.perm, ta.mask)};
                const auto it = index.find(tb);
                if (it == index.end()) throw InternalError("codim-3 link: glued corner outside its class");
                const int b = it->second;
                uf.unite(slot(a, p), slot(b, g.perm(p)));
                uf.unite(slot(a, q), slot(b, g.perm(q)));
                std::vector<int> ob{g.perm(q), g.perm(p), g.perm(r)};
                std::vector<int> ub;
                for (int v : u_order[static_cast<std::size_t>(a)]) ub.push_back(g.perm(v));
                if (!seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = true;
                    orient[static_cast<std::size_t>(b)] = ob;
                    u_order[static_cast<std::size_t>(b)] = ub;
                    queue.push_back(b);
                    continue;
                }
                const auto& cur = orient[static_cast<std::size_t>(b)];
                const auto pos = std::find(cur.begin(), cur.end(), ob[0]) - cur.begin();
                if (cur[static_cast<std::size_t>((pos + 1) % 3)] != ob[1])
                    throw ValidationError("link of codim-3 face is not orientable", where);
                if (u_order[static_cast<std::size_t>(b)] != ub)
                    throw ValidationError("codim-3 face is identified with itself by a nontrivial permutation", where);
            }
        }
        std::set<int> vertex_classes;
        for (std::size_t x = 0; x < nt * 3; ++x) vertex_classes.insert(uf.find(static_cast<int>(x)));
        link.vertices = static_cast<int>(vertex_classes.size());
        link.edges = static_cast<int>(nt * 3 / 2);
        if (link.euler_characteristic() != 2)
            throw ValidationError("link of codim-3 face is not a 2-sphere (Euler characteristic " +
                                      std::to_string(link.euler_characteristic()) + ")",
                                  where);

        // One sign per link vertex, read off at every triangle around it.
        std::map<int, int> vertex_sign;
        std::map<int, int> vertex_circuit;
        for (std::size_t t = 0; t < nt; ++t) {
            const FaceRef& tri = link.triangles[t];
            const auto& o = orient[t];
            for (int k = 0; k < 3; ++k) {
                const int p = o[static_cast<std::size_t>(k)];
                const int pred = o[static_cast<std::size_t>((k + 2) % 3)];
                const std::uint32_t excluded = tri.mask & ~(std::uint32_t{1} << p);
                const auto it = corner_step.find({tri.simplex, excluded});
                if (it == corner_step.end()) throw InternalError("codim-3 link: corner missing from the circuits");
                const auto& [cid, step] = it->second;
                const auto& st = circuits[static_cast<std::size_t>(cid)].steps[static_cast<std::size_t>(step)];
                const int eps = st.embedding(n) == pred ? 1 : -1;
                const int v = uf.find(slot(static_cast<int>(t), p));
                const auto [sit, fresh] = vertex_sign.emplace(v, eps);
                if (!fresh && sit->second != eps) throw InternalError("codim-3 link: circuit direction disagrees around a vertex");
                vertex_circuit[v] = cid;
            }
        }
        for (const auto& [v, eps] : vertex_sign) {
            const int cid = vertex_circuit[v];
            link.incidence[cid] += eps;
            link.incidence_mod2[cid] = (link.incidence_mod2[cid] + 1) % 2;
        }
        out.push_back(std::move(link));
    }
    return out;
}

DualSkeleton dual_skeleton(const DeltaComplex& dc)
{
    validate(dc);
    DualSkeleton sk;
    sk.dimension = dc.dimension;
    sk.simplex_count = dc.simplex_count();
    sk.orientation = orient_and_w1(dc);
    if (sk.orientation.orientable) sk.charts = orientation_charts(sk.orientation, dc.dimension);
    sk.facets = facet_classes(dc);
    sk.facet_class_of = facet_class_table(dc, sk.facets);
    sk.circuits = codim2_circuits(dc, sk.orientation.orientable ? &sk.charts : nullptr);
    sk.links = codim3_links(dc, sk.circuits);
    return sk;
}

} // namespace spinlab
