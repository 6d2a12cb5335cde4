#include "tg/blowup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tg {

namespace {

IntVector vec_sub(const IntVector& a, const IntVector& b)
{
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::string tilde(const std::string& vertex, int j)
{
    return vertex + "~" + std::to_string(j);
}

// For each vertex p of F, the normal halves at p indexed by the facets
// containing F: facet j determines the unique half at p outside it.
struct NormalIndexing {
    std::vector<GraphFace> facets;                 // the n-k facets containing F, sorted
    std::map<int, std::vector<Half>> normal_at;    // p -> half for facet j at position j
};

NormalIndexing normal_indexing(const TorusGraph& G, const GraphFace& F)
{
    NormalIndexing N;
    const int n = G.n();
    for (const GraphFace& W : enumerate_faces(G))
        if (W.dim == n - 1 && W.contains(F)) N.facets.push_back(W);
    if (int(N.facets.size()) != n - F.dim)
        throw validation_error("blow_up: face is contained in " +
                               std::to_string(N.facets.size()) + " facets, expected " +
                               std::to_string(n - F.dim));
    for (int p : F.verts) {
        std::vector<Half> idx;
        std::set<Half> seen;
        for (const GraphFace& W : N.facets) {
            std::set<int> we(W.edges.begin(), W.edges.end());
            Half found = -1;
            for (Half h : G.halves_at(p))
                if (!we.count(edge_of(h))) {
                    if (found >= 0)
                        throw validation_error("blow_up: facet omits two edges at vertex '" +
                                               G.vertex_id(p) + "'");
                    found = h;
                }
            if (found < 0)
                throw validation_error("blow_up: facet omits no edge at vertex '" +
                                       G.vertex_id(p) + "'");
            std::set<int> fe(F.edges.begin(), F.edges.end());
            if (fe.count(edge_of(found)))
                throw internal_error("blow_up: normal direction lies inside the face");
            if (!seen.insert(found).second)
                throw validation_error("blow_up: facet indexing of normal directions at '" +
                                       G.vertex_id(p) + "' is not a bijection");
            idx.push_back(found);
        }
        N.normal_at[p] = std::move(idx);
    }
    return N;
}

}  // namespace

BlowUpResult blow_up(const TorusGraph& G, const GraphFace& F)
{
    const int n = G.n();
    const int k = F.dim;
    if (k >= n) throw validation_error("blow_up: cannot blow up the whole graph");

    BlowUpResult R{G, {}};
    R.down.k = k;
    if (k == n - 1) {
        for (int v = 0; v < G.num_vertices(); ++v)
            R.down.vertex_map[G.vertex_id(v)] = G.vertex_id(v);
        R.down.exceptional = F;
        R.down.identity = true;
        return R;
    }

    NormalIndexing N = normal_indexing(G, F);
    const int copies = n - k;
    std::set<int> fverts(F.verts.begin(), F.verts.end());
    std::set<int> fedges(F.edges.begin(), F.edges.end());

    RawGraph raw;
    raw.n = n;
    for (int v = 0; v < G.num_vertices(); ++v) {
        if (fverts.count(v)) {
            for (int j = 0; j < copies; ++j) {
                raw.vertex_ids.push_back(tilde(G.vertex_id(v), j));
                R.down.vertex_map[tilde(G.vertex_id(v), j)] = G.vertex_id(v);
            }
        } else {
            raw.vertex_ids.push_back(G.vertex_id(v));
            R.down.vertex_map[G.vertex_id(v)] = G.vertex_id(v);
        }
    }

    // index of the normal direction a given half occupies at its tail
    auto normal_index = [&](Half h) {
        const auto& idx = N.normal_at.at(G.tail(h));
        for (int j = 0; j < copies; ++j)
            if (idx[j] == h) return j;
        throw internal_error("blow_up: half is not a normal direction");
    };

    std::vector<std::string> exc_verts;
    std::vector<std::string> exc_edges;

    for (int e = 0; e < G.num_edges(); ++e) {
        Half h = 2 * e;
        int x = G.tail(h), y = G.head(h);
        bool fx = fverts.count(x), fy = fverts.count(y);
        if (fedges.count(e)) {
            // type (b): one copy per normal index
            for (int j = 0; j < copies; ++j) {
                RawGraph::RawEdge re;
                re.id = G.edge_id(e) + "~" + std::to_string(j);
                re.from = tilde(G.vertex_id(x), j);
                re.to = tilde(G.vertex_id(y), j);
                re.alpha_from = G.alpha(h);
                re.alpha_to = G.alpha(reverse_half(h));
                raw.edges.push_back(std::move(re));
                exc_edges.push_back(G.edge_id(e) + "~" + std::to_string(j));
            }
        } else {
            // types (c) and (d): the edge survives, endpoints inside F move
            // to the copy matching the edge's normal index there
            RawGraph::RawEdge re;
            re.id = G.edge_id(e);
            re.from = fx ? tilde(G.vertex_id(x), normal_index(h)) : G.vertex_id(x);
            re.to = fy ? tilde(G.vertex_id(y), normal_index(reverse_half(h))) : G.vertex_id(y);
            re.alpha_from = G.alpha(h);
            re.alpha_to = G.alpha(reverse_half(h));
            raw.edges.push_back(std::move(re));
        }
    }
    // type (a): the exceptional directions at each blown-up vertex
    for (int p : F.verts) {
        const auto& idx = N.normal_at.at(p);
        for (int i = 0; i < copies; ++i) {
            exc_verts.push_back(tilde(G.vertex_id(p), i));
            for (int j = i + 1; j < copies; ++j) {
                RawGraph::RawEdge re;
                re.id = G.vertex_id(p) + "~" + std::to_string(i) + "," + std::to_string(j);
                re.from = tilde(G.vertex_id(p), i);
                re.to = tilde(G.vertex_id(p), j);
                re.alpha_from = vec_sub(G.alpha(idx[j]), G.alpha(idx[i]));
                re.alpha_to = vec_sub(G.alpha(idx[i]), G.alpha(idx[j]));
                raw.edges.push_back(std::move(re));
                exc_edges.push_back(re.id);
            }
        }
    }

    R.graph = TorusGraph::validate(raw);
    GraphFace exc;
    exc.dim = n - 1;
    for (const std::string& id : exc_verts) exc.verts.push_back(R.graph.vertex_index(id));
    for (const std::string& id : exc_edges) exc.edges.push_back(R.graph.edge_index(id));
    std::sort(exc.verts.begin(), exc.verts.end());
    std::sort(exc.edges.begin(), exc.edges.end());
    // the exceptional set must close up as a face
    {
        int p0 = exc.verts[0];
        std::vector<Half> seed;
        std::set<int> ee(exc.edges.begin(), exc.edges.end());
        for (Half h : R.graph.halves_at(p0))
            if (ee.count(edge_of(h))) seed.push_back(h);
        GraphFace check = face_from_seed(R.graph, p0, seed);
        if (!(check == exc))
            throw internal_error("blow_up: exceptional set is not connection-invariant");
    }
    R.down.exceptional = std::move(exc);
    return R;
}

CohomologyClass pullback(const TorusGraph& G, const TorusGraph& Gt, const BlowDownMap& b,
                         const CohomologyClass& f)
{
    auto rep = is_cohomology_class(G, f);
    if (!rep.ok)
        throw validation_error("pullback: input violates the congruence on edge '" +
                               G.edge_id(rep.failing_edge) + "'");
    CohomologyClass out = class_zero(Gt);
    for (int v = 0; v < Gt.num_vertices(); ++v) {
        const std::string& old_id = b.vertex_map.at(Gt.vertex_id(v));
        out.value[v] = f.value[G.vertex_index(old_id)];
    }
    auto rep2 = is_cohomology_class(Gt, out);
    if (!rep2.ok)
        throw internal_error("pullback: image violates the congruence on edge '" +
                             Gt.edge_id(rep2.failing_edge) + "'");
    return out;
}

GraphFace face_correspondence(const TorusGraph& G, const TorusGraph& Gt,
                              const BlowDownMap& b, const GraphFace& F,
                              const GraphFace& H)
{
    if (F.contains(H))
        throw validation_error("face_correspondence: face lies inside the blown-up face");
    if (b.identity) return H;
    std::set<int> fverts(F.verts.begin(), F.verts.end());
    std::set<int> fedges(F.edges.begin(), F.edges.end());
    std::set<int> hedges(H.edges.begin(), H.edges.end());

    int outside = -1;
    for (int v : H.verts)
        if (!fverts.count(v)) {
            outside = v;
            break;
        }
    if (outside >= 0) {
        // seed at a vertex untouched by the blow-up; all edges of H there
        // keep their ids
        int x = Gt.vertex_index(G.vertex_id(outside));
        std::vector<Half> seed;
        for (Half h : G.halves_at(outside)) {
            if (!hedges.count(edge_of(h))) continue;
            int et = Gt.edge_index(G.edge_id(edge_of(h)));
            Half ht = (Gt.tail(2 * et) == x) ? 2 * et : 2 * et + 1;
            if (Gt.tail(ht) != x) throw internal_error("face_correspondence: lost edge end");
            seed.push_back(ht);
        }
        GraphFace W = face_from_seed(Gt, x, seed);
        if (W.dim != H.dim) throw internal_error("face_correspondence: dimension changed");
        return W;
    }

    // every vertex of H lies in F; seed at one blown-up copy
    NormalIndexing N = normal_indexing(G, F);
    int p = H.verts[0];
    const auto& idx = N.normal_at.at(p);
    std::vector<int> J;
    for (int j = 0; j < int(idx.size()); ++j)
        if (hedges.count(edge_of(idx[j]))) J.push_back(j);
    if (J.empty()) throw internal_error("face_correspondence: face has no normal direction");
    int j0 = J[0];
    int pt = Gt.vertex_index(tilde(G.vertex_id(p), j0));
    std::vector<Half> seed;
    auto add_half_of_edge = [&](const std::string& edge_id) {
        int et = Gt.edge_index(edge_id);
        Half ht = (Gt.tail(2 * et) == pt) ? 2 * et : 2 * et + 1;
        if (Gt.tail(ht) != pt) throw internal_error("face_correspondence: misplaced edge");
        seed.push_back(ht);
    };
    add_half_of_edge(G.edge_id(edge_of(idx[j0])));  // the lifted normal edge
    for (size_t a = 1; a < J.size(); ++a) {
        int lo = std::min(j0, J[a]), hi = std::max(j0, J[a]);
        add_half_of_edge(G.vertex_id(p) + "~" + std::to_string(lo) + "," + std::to_string(hi));
    }
    for (Half h : G.halves_at(p))
        if (hedges.count(edge_of(h)) && fedges.count(edge_of(h)))
            add_half_of_edge(G.edge_id(edge_of(h)) + "~" + std::to_string(j0));
    GraphFace W = face_from_seed(Gt, pt, seed);
    if (W.dim != H.dim) throw internal_error("face_correspondence: dimension changed");
    return W;
}

bool verify_thom_pullback(const TorusGraph& G, const GraphFace& F)
{
    BlowUpResult B = blow_up(G, F);
    const TorusGraph& Gt = B.graph;
    for (const GraphFace& W : enumerate_faces(G)) {
        if (W.dim != G.n() - 1) continue;
        CohomologyClass lhs = pullback(G, Gt, B.down, thom_class(G, W));
        CohomologyClass rhs;
        if (B.down.identity) {
            rhs = thom_class(Gt, W);
        } else {
            GraphFace Wt = face_correspondence(G, Gt, B.down, F, W);
            rhs = thom_class(Gt, Wt);
            if (W.contains(F))
                rhs = class_add(rhs, thom_class(Gt, B.down.exceptional));
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

StellarCorrespondence stellar_correspondence(const TorusGraph& G, const GraphFace& F)
{
    StellarCorrespondence out;
    BlowUpResult B = blow_up(G, F);
    const TorusGraph& Gt = B.graph;
    FacePoset FPG = face_poset(G);
    FacePoset FPT = face_poset(Gt);
    const int el_F = FPG.element_of.at(face_id(G, F));

    StellarResult st = stellar_subdivide(FPG.poset, el_F);
    if (st.poset.size() != FPT.poset.size() || st.poset.rank_max() != FPT.poset.rank_max())
        return out;

    // canonical match: surviving faces through the blow-down, new cells
    // through their (rho, eta) provenance
    std::map<std::string, std::string> iso;
    for (int i = 0; i < st.poset.size(); ++i) {
        const std::string& id = st.poset.elem(i).id;
        auto pv = st.provenance.find(id);
        if (pv == st.provenance.end()) {
            // surviving face H of G
            const GraphFace& H = FPG.face_of.at(FPG.element_of.at(id));
            iso[id] = face_id(Gt, face_correspondence(G, Gt, B.down, F, H));
            continue;
        }
        const auto& [rho_id, eta_id] = pv->second;
        if (rho_id.empty()) {
            iso[id] = face_id(Gt, B.down.exceptional);
            continue;
        }
        if (B.down.identity) {
            // facet blow-up: the graph is unchanged and the new cell (rho,
            // eta) is the old cell eta itself
            iso[id] = eta_id;
            continue;
        }
        const GraphFace& H = FPG.face_of.at(FPG.element_of.at(rho_id));
        const GraphFace& K = FPG.face_of.at(FPG.element_of.at(eta_id));
        // the face of the blow-up inside the exceptional facet sitting over
        // the component K of F and H
        NormalIndexing N = normal_indexing(G, F);
        std::set<int> hedges(H.edges.begin(), H.edges.end());
        std::set<int> kedges(K.edges.begin(), K.edges.end());
        int p = K.verts[0];
        const auto& idx = N.normal_at.at(p);
        std::vector<int> J;
        for (int j = 0; j < int(idx.size()); ++j)
            if (hedges.count(edge_of(idx[j]))) J.push_back(j);
        if (J.empty())
            throw internal_error("stellar_correspondence: component without directions");
        int j0 = J[0];
        int pt = Gt.vertex_index(tilde(G.vertex_id(p), j0));
        std::vector<Half> seed;
        auto add_half_of_edge = [&](const std::string& edge_id) {
            int et = Gt.edge_index(edge_id);
            Half ht = (Gt.tail(2 * et) == pt) ? 2 * et : 2 * et + 1;
            seed.push_back(ht);
        };
        for (size_t a = 1; a < J.size(); ++a) {
            int lo = std::min(j0, J[a]), hi = std::max(j0, J[a]);
            add_half_of_edge(G.vertex_id(p) + "~" + std::to_string(lo) + "," +
                             std::to_string(hi));
        }
        for (Half h : G.halves_at(p))
            if (kedges.count(edge_of(h)))
                add_half_of_edge(G.edge_id(edge_of(h)) + "~" + std::to_string(j0));
        GraphFace W = face_from_seed(Gt, pt, seed);
        iso[id] = face_id(Gt, W);
    }

    // verify the match is a rank- and cover-preserving bijection
    {
        std::set<std::string> used;
        for (auto& [a, b] : iso) {
            (void)a;
            if (!used.insert(b).second) return out;
        }
        for (int i = 0; i < st.poset.size(); ++i) {
            int qi = FPT.poset.index_of(iso.at(st.poset.elem(i).id));
            if (qi < 0) return out;
            if (FPT.poset.elem(qi).rank != st.poset.elem(i).rank) return out;
            std::set<std::string> qcov;
            for (int c : FPT.poset.elem(qi).covers) qcov.insert(FPT.poset.elem(c).id);
            for (int c : st.poset.elem(i).covers)
                if (!qcov.count(iso.at(st.poset.elem(c).id))) return out;
            if (qcov.size() != st.poset.elem(i).covers.size()) return out;
        }
    }
    out.poset_iso_ok = true;
    out.iso = iso;

    if (!is_simplicial_complex(star(FPG.poset, el_F))) return out;
    out.beta_checked = true;

    BetaMap beta = beta_map(FPG.poset, el_F);
    auto transfer = [&](const RingElement& x) {
        RingElement y;
        for (const auto& [m, c] : x.terms) {
            ChainMonomial mm;
            for (auto [e, a] : m.factors) {
                const std::string& tid = iso.at(beta.target.elem(e).id);
                mm.factors.push_back({FPT.poset.require(tid), a});
            }
            std::sort(mm.factors.begin(), mm.factors.end(),
                      [&](const auto& x1, const auto& x2) {
                          return std::make_pair(FPT.poset.elem(x1.first).rank, x1.first) <
                                 std::make_pair(FPT.poset.elem(x2.first).rank, x2.first);
                      });
            y.add_term(mm, c);
        }
        return y;
    };

    for (int d = 0; d <= G.n(); ++d) {
        for (const ChainMonomial& m : chain_monomials_of_degree(FPG.poset, d)) {
            RingElement x;
            x.terms.emplace(m, 1);
            CohomologyClass via_beta = thom_evaluate(Gt, FPT, transfer(beta.apply(x)));
            CohomologyClass via_pullback =
                pullback(G, Gt, B.down, thom_evaluate(G, FPG, x));
            if (!(via_beta == via_pullback)) return out;
        }
    }
    out.beta_matches = true;
    return out;
}

}  // namespace tg
