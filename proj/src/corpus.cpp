#include "tg/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tg/io.hpp"

namespace tg::corpus {

namespace {

IntVector basis_vec(int n, int i, int sign = 1)
{
    IntVector v(n, 0);
    v[i] = sign;
    return v;
}

RawGraph::RawEdge edge(std::string id, std::string a, std::string b, IntVector from,
                       IntVector to)
{
    return {std::move(id), std::move(a), std::move(b), std::move(from), std::move(to)};
}

}  // namespace

TorusGraph fig1a()
{
    RawGraph raw;
    raw.n = 2;
    raw.vertex_ids = {"p", "q"};
    raw.edges.push_back(edge("e", "p", "q", basis_vec(2, 0), basis_vec(2, 0)));
    raw.edges.push_back(edge("g", "p", "q", basis_vec(2, 1), basis_vec(2, 1)));
    return TorusGraph::validate(raw);
}

TorusGraph fig1b()
{
    RawGraph raw;
    raw.n = 3;
    raw.vertex_ids = {"p", "q"};
    raw.edges.push_back(edge("e", "p", "q", basis_vec(3, 0), basis_vec(3, 0)));
    raw.edges.push_back(edge("g", "p", "q", basis_vec(3, 1), basis_vec(3, 1)));
    raw.edges.push_back(edge("h", "p", "q", basis_vec(3, 2), basis_vec(3, 2)));
    return TorusGraph::validate(raw);
}

TorusGraph k4_rp2()
{
    RawGraph raw;
    raw.n = 3;
    raw.vertex_ids = {"p1", "p2", "p3", "p4"};
    auto both = [&](std::string id, std::string a, std::string b, int i) {
        raw.edges.push_back(edge(std::move(id), std::move(a), std::move(b), basis_vec(3, i),
                                 basis_vec(3, i)));
    };
    both("p1p2", "p1", "p2", 0);
    both("p3p4", "p3", "p4", 0);
    both("p1p3", "p1", "p3", 1);
    both("p2p4", "p2", "p4", 1);
    both("p1p4", "p1", "p4", 2);
    both("p2p3", "p2", "p3", 2);
    return TorusGraph::validate(raw);
}

TorusGraph cube()
{
    RawGraph raw;
    raw.n = 3;
    auto name = [](int m) {
        std::string s = "v";
        for (int d = 0; d < 3; ++d) s += char('0' + ((m >> d) & 1));
        return s;
    };
    for (int m = 0; m < 8; ++m) raw.vertex_ids.push_back(name(m));
    for (int m = 0; m < 8; ++m)
        for (int d = 0; d < 3; ++d) {
            if ((m >> d) & 1) continue;
            int w = m | (1 << d);
            raw.edges.push_back(edge("d" + std::to_string(d + 1) + "_" + name(m), name(m),
                                     name(w), basis_vec(3, d, 1), basis_vec(3, d, -1)));
        }
    return TorusGraph::validate(raw);
}

SimplicialPoset complex_from_facets(const std::vector<std::string>& vertices,
                                    const std::vector<std::vector<std::string>>& facets)
{
    std::map<std::string, int> vnum;
    for (size_t i = 0; i < vertices.size(); ++i) vnum[vertices[i]] = int(i);
    auto id_of = [&](std::vector<std::string> vs) {
        std::sort(vs.begin(), vs.end(), [&](const std::string& a, const std::string& b) {
            return vnum.at(a) < vnum.at(b);
        });
        std::string id;
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) id += ",";
            id += vs[i];
        }
        return id;
    };
    std::set<std::vector<std::string>> faces;  // sorted by vertex number
    for (const auto& f : facets) {
        std::vector<std::string> s = f;
        std::sort(s.begin(), s.end(), [&](const std::string& a, const std::string& b) {
            return vnum.at(a) < vnum.at(b);
        });
        for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
            std::vector<std::string> sub;
            for (size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i)) sub.push_back(s[i]);
            faces.insert(sub);
        }
    }
    std::vector<std::vector<std::string>> ordered(faces.begin(), faces.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::map<std::string, int> index;
    std::vector<SimplicialPoset::Elem> elems;
    int rank_max = 0;
    for (const auto& f : ordered) {
        std::string id = id_of(f);
        index[id] = int(elems.size());
        elems.push_back({id, int(f.size()), {}});
        rank_max = std::max<int>(rank_max, int(f.size()));
    }
    for (const auto& f : ordered) {
        if (f.size() < 2) continue;
        auto& el = elems[index.at(id_of(f))];
        for (size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<std::string> sub;
            for (size_t i = 0; i < f.size(); ++i)
                if (i != drop) sub.push_back(f[i]);
            el.covers.push_back(index.at(id_of(sub)));
        }
    }
    return SimplicialPoset::validate(rank_max, std::move(elems));
}

SimplicialPoset two_segments()
{
    std::vector<SimplicialPoset::Elem> elems = {
        {"e", 1, {}}, {"g", 1, {}}, {"p", 2, {0, 1}}, {"q", 2, {0, 1}}};
    return SimplicialPoset::validate(2, std::move(elems));
}

SimplicialPoset two_triangles()
{
    std::vector<SimplicialPoset::Elem> elems = {
        {"a", 1, {}},        {"b", 1, {}},        {"c", 1, {}},
        {"ab", 2, {0, 1}},   {"bc", 2, {1, 2}},   {"ca", 2, {0, 2}},
        {"T1", 3, {3, 4, 5}}, {"T2", 3, {3, 4, 5}}};
    return SimplicialPoset::validate(3, std::move(elems));
}

SimplicialPoset rp2_3vertex()
{
    // Simplicial cell decomposition of RP^2 with 3 vertices: every pair of
    // vertices is joined by two edges, four triangles fill the square with
    // identified opposite boundary edges.
    std::vector<SimplicialPoset::Elem> elems = {
        {"p", 1, {}},  // 0
        {"q", 1, {}},  // 1
        {"r", 1, {}},  // 2
        {"pqA", 2, {0, 1}},  // 3
        {"pqB", 2, {0, 1}},  // 4
        {"qr1", 2, {1, 2}},  // 5
        {"qr2", 2, {1, 2}},  // 6
        {"pr1", 2, {0, 2}},  // 7
        {"pr2", 2, {0, 2}},  // 8
        {"Tbottom", 3, {3, 5, 7}},
        {"Tright", 3, {4, 7, 6}},
        {"Ttop", 3, {3, 8, 6}},
        {"Tleft", 3, {4, 5, 8}}};
    return SimplicialPoset::validate(3, std::move(elems));
}

SimplicialPoset rp2_6vertex()
{
    std::vector<std::string> verts = {"1", "2", "3", "4", "5", "6"};
    std::vector<std::vector<std::string>> facets = {
        {"1", "2", "4"}, {"1", "2", "5"}, {"1", "3", "4"}, {"1", "3", "6"}, {"1", "5", "6"},
        {"2", "3", "5"}, {"2", "3", "6"}, {"2", "4", "5"}, {"3", "4", "6"}, {"4", "5", "6"}};
    return complex_from_facets(verts, facets);
}

SimplicialPoset bipyramid()
{
    std::vector<std::string> verts = {"N", "S", "a", "b", "c"};
    std::vector<std::vector<std::string>> facets = {{"N", "a", "b"}, {"N", "b", "c"},
                                                    {"N", "c", "a"}, {"S", "a", "b"},
                                                    {"S", "b", "c"}, {"S", "c", "a"}};
    return complex_from_facets(verts, facets);
}

SimplicialPoset bipyramid_glued()
{
    std::vector<SimplicialPoset::Elem> elems = {
        {"w", 1, {}},  // 0
        {"a", 1, {}},  // 1
        {"b", 1, {}},  // 2
        {"c", 1, {}},  // 3
        {"wa1", 2, {0, 1}},  // 4
        {"wa2", 2, {0, 1}},  // 5
        {"wb1", 2, {0, 2}},  // 6
        {"wb2", 2, {0, 2}},  // 7
        {"wc1", 2, {0, 3}},  // 8
        {"wc2", 2, {0, 3}},  // 9
        {"ab", 2, {1, 2}},   // 10
        {"bc", 2, {2, 3}},   // 11
        {"ca", 2, {1, 3}},   // 12
        {"Nab", 3, {4, 6, 10}},
        {"Nbc", 3, {6, 8, 11}},
        {"Nca", 3, {8, 4, 12}},
        {"Sab", 3, {5, 7, 10}},
        {"Sbc", 3, {7, 9, 11}},
        {"Sca", 3, {9, 5, 12}}};
    return SimplicialPoset::validate(3, std::move(elems));
}

SimplicialPoset boundary_simplex(int n)
{
    if (n < 1) throw validation_error("boundary_simplex: n >= 1 required");
    std::vector<std::string> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(std::string(1, char('a' + i)));
    std::vector<std::vector<std::string>> facets;
    for (int drop = 0; drop <= n; ++drop) {
        std::vector<std::string> f;
        for (int i = 0; i <= n; ++i)
            if (i != drop) f.push_back(verts[i]);
        facets.push_back(std::move(f));
    }
    return complex_from_facets(verts, facets);
}

SimplicialPoset full_simplex(int n)
{
    std::vector<std::string> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(std::string(1, char('a' + i)));
    return complex_from_facets(verts, {verts});
}

SimplicialPoset double_simplex(int n)
{
    // two n-simplices glued along their entire boundaries
    SimplicialPoset bd = boundary_simplex(n);
    std::vector<SimplicialPoset::Elem> elems;
    for (int i = 0; i < bd.size(); ++i) elems.push_back(bd.elem(i));
    std::vector<int> top_covers;
    for (int i = 0; i < bd.size(); ++i)
        if (bd.elem(i).rank == n) top_covers.push_back(i);
    elems.push_back({"T1", n + 1, top_covers});
    elems.push_back({"T2", n + 1, top_covers});
    return SimplicialPoset::validate(n + 1, std::move(elems));
}

void write_corpus_files(const std::string& dir)
{
    auto gpath = [&](const std::string& name) { return dir + "/" + name + ".json"; };
    save_graph(fig1a(), gpath("fig1a"));
    save_graph(fig1b(), gpath("fig1b"));
    save_graph(k4_rp2(), gpath("k4-rp2"));
    save_graph(cube(), gpath("fig3-edge-blowup"));
    save_graph(fig1b(), gpath("fig4-vertex-blowup"));
    save_poset(two_segments(), gpath("two-segments"));
    save_poset(two_triangles(), gpath("two-triangles"));
    save_poset(rp2_3vertex(), gpath("rp2-3vertex"));
    save_poset(rp2_6vertex(), gpath("rp2-6vertex"));
    save_poset(bipyramid(), gpath("bipyramid"));
    save_poset(bipyramid_glued(), gpath("bipyramid-glued"));
}

}  // namespace tg::corpus
