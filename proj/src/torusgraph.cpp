#include "tg/torusgraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tg {

namespace {

// v == c * w for some integer c?
bool is_int_multiple(const IntVector& v, const IntVector& w)
{
    int piv = -1;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) {
            piv = int(i);
            break;
        }
    if (piv < 0) throw internal_error("is_int_multiple: zero modulus");
    if (v[piv] % w[piv] != 0) return false;
    Int c = v[piv] / w[piv];
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != c * w[i]) return false;
    return true;
}

IntVector vec_sub(const IntVector& a, const IntVector& b)
{
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

int TorusGraph::vertex_index(const std::string& id) const
{
    auto it = vindex_.find(id);
    if (it == vindex_.end()) throw validation_error("graph: no vertex '" + id + "'");
    return it->second;
}

int TorusGraph::edge_index(const std::string& id) const
{
    auto it = eindex_.find(id);
    if (it == eindex_.end()) throw validation_error("graph: no edge '" + id + "'");
    return it->second;
}

int TorusGraph::tail(Half h) const
{
    const Edge& e = edges_[edge_of(h)];
    return (h & 1) ? e.w : e.v;
}

const IntVector& TorusGraph::alpha(Half h) const
{
    const Edge& e = edges_[edge_of(h)];
    return (h & 1) ? e.alpha_wv : e.alpha_vw;
}

Half TorusGraph::connection(Half h, Half at_tail) const
{
    return theta_[h].at(at_tail);
}

RawGraph TorusGraph::to_raw() const
{
    RawGraph raw;
    raw.n = n_;
    raw.vertex_ids = vertex_ids_;
    for (const Edge& e : edges_)
        raw.edges.push_back({e.id, vertex_ids_[e.v], vertex_ids_[e.w], e.alpha_vw, e.alpha_wv});
    return raw;
}

TorusGraph TorusGraph::validate(const RawGraph& raw)
{
    TorusGraph G;
    G.n_ = raw.n;
    if (raw.n < 1) throw validation_error("graph: rank n must be at least 1");
    G.vertex_ids_ = raw.vertex_ids;
    for (int v = 0; v < int(G.vertex_ids_.size()); ++v) {
        if (G.vertex_ids_[v].empty()) throw validation_error("graph: empty vertex id");
        if (!G.vindex_.emplace(G.vertex_ids_[v], v).second)
            throw validation_error("graph: duplicate vertex id '" + G.vertex_ids_[v] + "'");
    }
    if (G.vertex_ids_.empty()) throw validation_error("graph: no vertices");

    for (const auto& re : raw.edges) {
        Edge e;
        e.id = re.id;
        if (e.id.empty()) throw validation_error("graph: empty edge id");
        e.v = G.vertex_index(re.from);
        e.w = G.vertex_index(re.to);
        if (e.v == e.w) throw validation_error("graph: loop at vertex '" + re.from + "'");
        if (int(re.alpha_from.size()) != raw.n || int(re.alpha_to.size()) != raw.n)
            throw validation_error("graph: axial value of edge '" + e.id + "' has wrong length");
        e.alpha_vw = re.alpha_from;
        e.alpha_wv = re.alpha_to;
        if (!G.eindex_.emplace(e.id, int(G.edges_.size())).second)
            throw validation_error("graph: duplicate edge id '" + e.id + "'");
        G.edges_.push_back(std::move(e));
    }

    G.at_.assign(G.vertex_ids_.size(), {});
    for (int e = 0; e < int(G.edges_.size()); ++e) {
        G.at_[G.edges_[e].v].push_back(2 * e);
        G.at_[G.edges_[e].w].push_back(2 * e + 1);
    }
    for (int v = 0; v < int(G.vertex_ids_.size()); ++v)
        if (int(G.at_[v].size()) != raw.n)
            throw validation_error("graph: vertex '" + G.vertex_ids_[v] + "' has valence " +
                                   std::to_string(G.at_[v].size()) + ", expected " +
                                   std::to_string(raw.n));

    // connectivity
    {
        std::set<int> seen{0};
        std::vector<int> queue{0};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (Half h : G.at_[v]) {
                int w = G.tail(reverse_half(h));
                if (seen.insert(w).second) queue.push_back(w);
            }
        }
        if (seen.size() != G.vertex_ids_.size())
            throw validation_error("graph: not connected");
    }

    // sign condition alpha(rev e) = +-alpha(e), nonzero
    for (const Edge& e : G.edges_) {
        bool zero_vw = std::all_of(e.alpha_vw.begin(), e.alpha_vw.end(),
                                   [](const Int& x) { return x == 0; });
        if (zero_vw)
            throw validation_error("graph: zero axial value on edge '" + e.id + "'");
        bool plus = e.alpha_wv == e.alpha_vw;
        bool minus = e.alpha_wv == vec_sub(IntVector(e.alpha_vw.size(), 0), e.alpha_vw);
        if (!plus && !minus)
            throw validation_error("graph: sign condition fails on edge '" + e.id +
                                   "': reversed value is neither +alpha nor -alpha");
    }

    // basis condition at every vertex
    for (int v = 0; v < int(G.vertex_ids_.size()); ++v) {
        std::vector<IntVector> vals;
        for (Half h : G.at_[v]) vals.push_back(G.alpha(h));
        if (!is_lattice_basis(vals))
            throw validation_error("graph: axial values at vertex '" + G.vertex_ids_[v] +
                                   "' do not form a lattice basis");
    }

    // infer the connection: theta_h(a) is the unique half b at the head with
    // alpha(b) = alpha(a) mod alpha(h)
    G.theta_.assign(2 * G.edges_.size(), {});
    for (Half h = 0; h < int(2 * G.edges_.size()); ++h) {
        int p = G.tail(h), q = G.tail(reverse_half(h));
        const IntVector& mod = G.alpha(h);
        std::map<Half, Half>& th = G.theta_[h];
        std::set<Half> used;
        for (Half a : G.at_[p]) {
            if (a == h) {
                th[a] = reverse_half(h);
                used.insert(reverse_half(h));
                continue;
            }
            Half found = -1;
            for (Half b : G.at_[q]) {
                if (b == reverse_half(h)) continue;
                if (is_int_multiple(vec_sub(G.alpha(b), G.alpha(a)), mod)) {
                    if (found >= 0)
                        throw validation_error(
                            "graph: connection along edge '" + G.edges_[edge_of(h)].id +
                            "' is ambiguous for edge '" + G.edges_[edge_of(a)].id +
                            "' at vertex '" + G.vertex_ids_[p] + "'");
                    found = b;
                }
            }
            if (found < 0)
                throw validation_error("graph: no connection image along edge '" +
                                       G.edges_[edge_of(h)].id + "' for edge '" +
                                       G.edges_[edge_of(a)].id + "' at vertex '" +
                                       G.vertex_ids_[p] + "'");
            if (!used.insert(found).second)
                throw validation_error("graph: connection along edge '" +
                                       G.edges_[edge_of(h)].id + "' is not a bijection");
            th[a] = found;
        }
    }
    // theta_{rev e} must invert theta_e
    for (Half h = 0; h < int(2 * G.edges_.size()); ++h)
        for (auto [a, b] : G.theta_[h])
            if (G.theta_[reverse_half(h)].at(b) != a)
                throw validation_error("graph: connection along edge '" +
                                       G.edges_[edge_of(h)].id + "' is not inverse-compatible");
    return G;
}

bool GraphFace::contains(const GraphFace& other) const
{
    return std::includes(verts.begin(), verts.end(), other.verts.begin(), other.verts.end()) &&
           std::includes(edges.begin(), edges.end(), other.edges.begin(), other.edges.end());
}

bool GraphFace::operator<(const GraphFace& o) const
{
    return std::tie(dim, verts, edges) < std::tie(o.dim, o.verts, o.edges);
}

std::string face_id(const TorusGraph& G, const GraphFace& F)
{
    std::string id;
    for (size_t i = 0; i < F.verts.size(); ++i) {
        if (i) id += ",";
        id += G.vertex_id(F.verts[i]);
    }
    if (!F.edges.empty()) {
        id += "|";
        for (size_t i = 0; i < F.edges.size(); ++i) {
            if (i) id += ",";
            id += G.edge_id(F.edges[i]);
        }
    }
    return id;
}

GraphFace face_from_seed(const TorusGraph& G, int p, const std::vector<Half>& seed)
{
    for (Half h : seed)
        if (G.tail(h) != p) throw validation_error("face_from_seed: seed half not at p");
    std::map<int, std::set<Half>> halves;  // vertex -> face halves there
    halves[p] = std::set<Half>(seed.begin(), seed.end());
    if (halves[p].size() != seed.size())
        throw validation_error("face_from_seed: repeated seed halves");
    std::vector<int> queue{p};
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        std::set<Half> hu = halves[u];
        for (Half h : hu) {
            int w = G.tail(reverse_half(h));
            std::set<Half> img;
            for (Half a : hu) img.insert(G.connection(h, a));
            auto it = halves.find(w);
            if (it == halves.end()) {
                halves[w] = img;
                queue.push_back(w);
            } else if (it->second != img) {
                throw internal_error("face_from_seed: transport monodromy mismatch");
            }
        }
    }
    GraphFace F;
    F.dim = int(seed.size());
    std::set<int> edges;
    for (auto& [v, hs] : halves) {
        F.verts.push_back(v);
        for (Half h : hs) edges.insert(edge_of(h));
    }
    std::sort(F.verts.begin(), F.verts.end());
    F.edges.assign(edges.begin(), edges.end());
    return F;
}

GraphFace whole_graph_face(const TorusGraph& G)
{
    GraphFace F;
    F.dim = G.n();
    for (int v = 0; v < G.num_vertices(); ++v) F.verts.push_back(v);
    for (int e = 0; e < G.num_edges(); ++e) F.edges.push_back(e);
    return F;
}

std::vector<GraphFace> enumerate_faces(const TorusGraph& G)
{
    std::set<GraphFace> faces;
    const int n = G.n();
    for (int v = 0; v < G.num_vertices(); ++v) {
        const auto& at = G.halves_at(v);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Half> seed;
            for (int k = 0; k < n; ++k)
                if (mask & (1u << k)) seed.push_back(at[k]);
            faces.insert(face_from_seed(G, v, seed));
        }
    }
    return std::vector<GraphFace>(faces.begin(), faces.end());
}

FacePoset face_poset(const TorusGraph& G)
{
    const int n = G.n();
    std::vector<GraphFace> all = enumerate_faces(G);
    FacePoset FP;
    std::vector<SimplicialPoset::Elem> elems;
    for (const GraphFace& F : all) {
        if (F.dim == n) continue;  // the whole graph is the implicit bottom
        FP.element_of[face_id(G, F)] = int(FP.face_of.size());
        FP.face_of.push_back(F);
        elems.push_back({face_id(G, F), n - F.dim, {}});
    }
    for (size_t i = 0; i < FP.face_of.size(); ++i)
        for (size_t j = 0; j < FP.face_of.size(); ++j) {
            // element i covers element j when face j is one dimension up and
            // contains face i (order is reversed inclusion)
            if (FP.face_of[j].dim == FP.face_of[i].dim + 1 &&
                FP.face_of[j].contains(FP.face_of[i]))
                elems[i].covers.push_back(int(j));
        }
    FP.poset = SimplicialPoset::validate(n, std::move(elems));
    // poset element order coincides with construction order (sorted ids not
    // required by validate); keep maps aligned
    return FP;
}

CohomologyClass class_zero(const TorusGraph& G, int)
{
    CohomologyClass c;
    c.value.assign(G.num_vertices(), Poly::zero(G.n()));
    return c;
}

CohomologyClass class_constant(const TorusGraph& G, const Poly& f)
{
    CohomologyClass c;
    c.value.assign(G.num_vertices(), f);
    return c;
}

CohomologyClass class_add(const CohomologyClass& a, const CohomologyClass& b)
{
    CohomologyClass c = a;
    for (size_t i = 0; i < c.value.size(); ++i) c.value[i] = add(c.value[i], b.value[i]);
    return c;
}

CohomologyClass class_mul(const CohomologyClass& a, const CohomologyClass& b)
{
    CohomologyClass c = a;
    for (size_t i = 0; i < c.value.size(); ++i) c.value[i] = mul(c.value[i], b.value[i]);
    return c;
}

CohomologyClass thom_class(const TorusGraph& G, const GraphFace& F)
{
    CohomologyClass c = class_zero(G);
    std::set<int> inface(F.edges.begin(), F.edges.end());
    for (int v : F.verts) {
        Poly prod = Poly::constant(G.n(), 1);
        for (Half h : G.halves_at(v))
            if (!inface.count(edge_of(h))) prod = mul(prod, Poly::linear(G.alpha(h)));
        c.value[v] = prod;
    }
    return c;
}

CocheckReport is_cohomology_class(const TorusGraph& G, const CohomologyClass& f)
{
    CocheckReport rep;
    if (int(f.value.size()) != G.num_vertices())
        throw validation_error("is_cohomology_class: wrong number of vertex values");
    for (int e = 0; e < G.num_edges(); ++e) {
        Half h = 2 * e;
        LinearForm l{G.alpha(h)};
        if (!congruent_mod_linear(f.value[G.tail(h)], f.value[G.head(h)], l)) {
            rep.failing_edge = e;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

std::vector<GraphFace> face_intersection_components(const TorusGraph& G, const GraphFace& A,
                                                    const GraphFace& B)
{
    std::vector<int> verts, edges;
    std::set_intersection(A.verts.begin(), A.verts.end(), B.verts.begin(), B.verts.end(),
                          std::back_inserter(verts));
    std::set_intersection(A.edges.begin(), A.edges.end(), B.edges.begin(), B.edges.end(),
                          std::back_inserter(edges));
    std::set<int> vs(verts.begin(), verts.end()), es(edges.begin(), edges.end());
    std::vector<GraphFace> comps;
    std::set<int> seen;
    for (int root : verts) {
        if (seen.count(root)) continue;
        std::set<int> cv, ce;
        std::vector<int> queue{root};
        seen.insert(root);
        cv.insert(root);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (Half h : G.halves_at(u)) {
                if (!es.count(edge_of(h))) continue;
                ce.insert(edge_of(h));
                int w = G.tail(reverse_half(h));
                if (vs.count(w) && seen.insert(w).second) {
                    cv.insert(w);
                    queue.push_back(w);
                }
            }
        }
        GraphFace F;
        F.verts.assign(cv.begin(), cv.end());
        F.edges.assign(ce.begin(), ce.end());
        int valence = 0;
        for (Half h : G.halves_at(root))
            if (ce.count(edge_of(h))) ++valence;
        F.dim = valence;
        comps.push_back(std::move(F));
    }
    return comps;
}

std::optional<GraphFace> face_join(const TorusGraph& G, const GraphFace& A, const GraphFace& B)
{
    std::vector<GraphFace> sup;
    for (const GraphFace& F : enumerate_faces(G))
        if (F.contains(A) && F.contains(B)) sup.push_back(F);
    std::vector<GraphFace> minimal;
    for (const GraphFace& F : sup) {
        bool is_min = true;
        for (const GraphFace& H : sup)
            if (!(H == F) && F.contains(H)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(F);
    }
    if (minimal.size() == 1) return minimal[0];
    if (minimal.empty()) return std::nullopt;
    throw internal_error("face_join: minimal common superface is not unique");
}

bool thom_relation_check(const TorusGraph& G, const GraphFace& A, const GraphFace& B)
{
    CohomologyClass lhs = class_mul(thom_class(G, A), thom_class(G, B));
    std::vector<GraphFace> comps = face_intersection_components(G, A, B);
    CohomologyClass rhs = class_zero(G);
    if (!comps.empty()) {
        auto J = face_join(G, A, B);
        if (!J)
            throw internal_error("thom_relation: non-empty intersection without a join");
        CohomologyClass sum = class_zero(G);
        for (const GraphFace& E : comps) sum = class_add(sum, thom_class(G, E));
        rhs = class_mul(thom_class(G, *J), sum);
    }
    return lhs == rhs;
}

namespace {

void monomials_rec(int nvars, int d, int pos, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out)
{
    if (pos == nvars - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[pos] = k;
        monomials_rec(nvars, d - k, pos + 1, cur, out);
    }
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int d)
{
    std::vector<std::vector<int>> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(nvars);
    monomials_rec(nvars, d, 0, cur, out);
    return out;
}

// The edge congruence system for degree d: rows constrain the coefficient
// vector (vertex-major, monomial-minor) of a candidate class.
IntMatrix congruence_matrix(const TorusGraph& G, int d)
{
    const int n = G.n();
    std::vector<std::vector<int>> mons = monomials_of_degree(n, d);
    const int N = int(mons.size());
    const int V = G.num_vertices();

    std::vector<std::vector<int>> targets;  // monomials with first exponent 0
    for (const auto& m : mons)
        if (m[0] == 0) targets.push_back(m);
    std::map<std::vector<int>, int> tindex;
    for (size_t i = 0; i < targets.size(); ++i) tindex[targets[i]] = int(i);
    const int T = int(targets.size());

    IntMatrix A(T * G.num_edges(), V * N);
    for (int e = 0; e < G.num_edges(); ++e) {
        Half h = 2 * e;
        int v = G.tail(h), w = G.head(h);
        IntMatrix M = extend_primitive(G.alpha(h));
        IntMatrix Minv = unimodular_inverse(M);
        for (int mi = 0; mi < N; ++mi) {
            Poly mono(n);
            mono.terms.emplace(mons[mi], 1);
            Poly img = substitute_linear(mono, Minv);
            for (const auto& [expo, c] : img.terms) {
                if (expo[0] != 0) continue;
                int row = T * e + tindex.at(expo);
                A.at(row, v * N + mi) += c;
                A.at(row, w * N + mi) -= c;
            }
        }
    }
    return A;
}

}  // namespace

Int graded_cohomology_rank(const TorusGraph& G, int d)
{
    if (d < 0) throw validation_error("graded_cohomology_rank: negative degree");
    if (d == 0) return 1;
    IntMatrix A = congruence_matrix(G, d);
    return Int(A.cols - rank_over_q(A));
}

CohomologyClass thom_evaluate(const TorusGraph& G, const FacePoset& FP, const RingElement& x)
{
    CohomologyClass out = class_zero(G);
    for (const auto& [m, c] : x.terms) {
        CohomologyClass prod = class_constant(G, Poly::constant(G.n(), 1));
        for (auto [el, a] : m.factors) {
            CohomologyClass tf = thom_class(G, FP.face_of.at(el));
            for (int i = 0; i < a; ++i) prod = class_mul(prod, tf);
        }
        CohomologyClass scaled = prod;
        for (auto& poly : scaled.value) poly = mul_scalar(poly, c);
        out = class_add(out, scaled);
    }
    return out;
}

bool phi_iso_check(const TorusGraph& G, int d)
{
    if (d == 0) return true;
    FacePoset FP = face_poset(G);
    Int hf = hilbert_function(FP.poset, d);

    IntMatrix A = congruence_matrix(G, d);
    Int kernel_rank = Int(A.cols - rank_over_q(A));
    if (kernel_rank != hf) return false;

    const int n = G.n();
    std::vector<std::vector<int>> mons = monomials_of_degree(n, d);
    std::map<std::vector<int>, int> mindex;
    for (size_t i = 0; i < mons.size(); ++i) mindex[mons[i]] = int(i);
    const int N = int(mons.size());

    std::vector<ChainMonomial> basis = chain_monomials_of_degree(FP.poset, d);
    IntMatrix C(int(basis.size()), G.num_vertices() * N);
    for (size_t r = 0; r < basis.size(); ++r) {
        RingElement x;
        x.terms.emplace(basis[r], 1);
        CohomologyClass cls = thom_evaluate(G, FP, x);
        for (int v = 0; v < G.num_vertices(); ++v)
            for (const auto& [expo, c] : cls.value[v].terms)
                C.at(int(r), v * N + mindex.at(expo)) = c;
    }
    // every Thom product must actually satisfy the congruences
    for (int r = 0; r < C.rows; ++r)
        for (int i = 0; i < A.rows; ++i) {
            Int s = 0;
            for (int j = 0; j < A.cols; ++j) s += A.at(i, j) * C.at(r, j);
            if (s != 0) return false;
        }
    auto snf = smith_normal_form(C);
    if (Int(snf.rank()) != kernel_rank) return false;
    for (const Int& dv : snf.divisors())
        if (dv != 1) return false;
    return true;
}

GraphOrientation orientation(const TorusGraph& G)
{
    GraphOrientation R;
    std::vector<int> sign(G.num_vertices(), 0), parent(G.num_vertices(), -1);
    sign[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (Half h : G.halves_at(v)) {
            int w = G.head(h);
            bool flip = G.alpha(reverse_half(h)) == G.alpha(h);  // +alpha forces o(p) = -o(q)
            int need = flip ? -sign[v] : sign[v];
            if (sign[w] == 0) {
                sign[w] = need;
                parent[w] = v;
                queue.push_back(w);
            } else if (sign[w] != need) {
                // odd cycle witness: paths to the root plus the closing edge
                std::vector<std::string> cyc;
                for (int u = v; u != -1; u = parent[u]) cyc.push_back(G.vertex_id(u));
                std::reverse(cyc.begin(), cyc.end());
                std::vector<std::string> back;
                for (int u = w; u != -1; u = parent[u]) back.push_back(G.vertex_id(u));
                cyc.insert(cyc.end(), back.begin(), back.end());
                R.orientable = false;
                R.odd_cycle = std::move(cyc);
                return R;
            }
        }
    }
    R.orientable = true;
    for (int v = 0; v < G.num_vertices(); ++v) R.sign[G.vertex_id(v)] = sign[v];
    return R;
}

Int euler_number(const TorusGraph& G, const GraphFace& F)
{
    Int chi = 0;
    for (const GraphFace& H : enumerate_faces(G))
        if (F.contains(H)) chi += (H.dim % 2 == 0) ? 1 : -1;
    return chi;
}

GraphDS ds_graph_check(const TorusGraph& G)
{
    const int n = G.n();
    GraphDS r;
    FacePoset FP = face_poset(G);
    FHVector fh = fh_vector(FP.poset);
    r.lhs.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) r.lhs[i] = fh.h[n - i] - fh.h[i];
    r.rhs.assign(n + 1, 0);
    for (const GraphFace& F : enumerate_faces(G)) {
        Int w = 1 - euler_number(G, F);
        if (w == 0) continue;
        // (t-1)^{dim F}
        std::vector<Int> pw{1};
        for (int k = 0; k < F.dim; ++k) {
            std::vector<Int> nx(pw.size() + 1, 0);
            for (size_t i = 0; i < pw.size(); ++i) {
                nx[i] += -pw[i];
                nx[i + 1] += pw[i];
            }
            pw = std::move(nx);
        }
        for (size_t i = 0; i < pw.size(); ++i) r.rhs[i] += w * pw[i];
    }
    r.equal = (r.lhs == r.rhs);
    return r;
}

TorusGraph graph_from_poset(const SimplicialPoset& P, const std::vector<LinearElement>& lambda)
{
    auto pm = is_pseudomanifold(P);
    if (!pm.ok)
        throw validation_error("graph_from_poset: not a pseudomanifold: " + pm.witness);
    auto ls = lsop_check(P, lambda, Coeffs::integers());
    if (!ls.ok)
        throw validation_error(
            "graph_from_poset: lambda is not an lsop over Z (fails at '" +
            (ls.failing >= 0 ? P.elem(ls.failing).id : std::string("?")) + "')");
    const int n = P.rank_max();

    RawGraph raw;
    raw.n = n;
    std::vector<int> tops = P.elements_of_rank(n);
    std::map<int, int> top_pos;
    for (int t : tops) {
        top_pos[t] = int(raw.vertex_ids.size());
        raw.vertex_ids.push_back(P.elem(t).id);
    }

    // lambda vector of a poset vertex: (coefficient in theta_1, ..., theta_n)
    auto lambda_vec = [&](int vert) {
        IntVector lv(n, 0);
        for (int j = 0; j < n; ++j) {
            auto it = lambda[j].coeffs.find(vert);
            if (it != lambda[j].coeffs.end()) lv[j] = it->second;
        }
        return lv;
    };
    // dual basis at a top simplex, one covector per atom
    std::map<int, std::vector<IntVector>> dual_at;
    for (int t : tops) {
        std::vector<IntVector> lam;
        for (int a : P.atoms(t)) lam.push_back(lambda_vec(a));
        dual_at[t] = dual_basis(lam);
    }

    std::vector<int> walls = n >= 2 ? P.elements_of_rank(n - 1)
                                    : std::vector<int>{SimplicialPoset::bottom};
    for (int w : walls) {
        std::vector<int> above;
        for (int t : tops)
            if (w == SimplicialPoset::bottom || P.leq(w, t)) above.push_back(t);
        if (above.size() != 2) throw internal_error("graph_from_poset: wall degree != 2");
        int s0 = above[0], s1 = above[1];
        auto alpha_from = [&](int t) {
            const std::vector<int>& at = P.atoms(t);
            std::set<int> ws;
            if (w != SimplicialPoset::bottom)
                ws.insert(P.atoms(w).begin(), P.atoms(w).end());
            int pos = -1;
            for (size_t k = 0; k < at.size(); ++k)
                if (!ws.count(at[k])) {
                    if (pos >= 0) throw internal_error("graph_from_poset: wall omits 2 atoms");
                    pos = int(k);
                }
            if (pos < 0) throw internal_error("graph_from_poset: wall omits no atom");
            return dual_at.at(t)[pos];
        };
        RawGraph::RawEdge e;
        e.id = (w == SimplicialPoset::bottom) ? "0" : P.elem(w).id;
        e.from = P.elem(s0).id;
        e.to = P.elem(s1).id;
        e.alpha_from = alpha_from(s0);
        e.alpha_to = alpha_from(s1);
        raw.edges.push_back(std::move(e));
    }
    return TorusGraph::validate(raw);
}

std::vector<LinearElement> constant_lsop(const TorusGraph& G, const FacePoset& FP)
{
    const int n = G.n();
    std::vector<LinearElement> theta(n);
    std::map<int, IntVector> assigned;  // poset element (facet) -> lambda vector
    for (int v = 0; v < G.num_vertices(); ++v) {
        const auto& at = G.halves_at(v);
        std::vector<IntVector> vals;
        for (Half h : at) vals.push_back(G.alpha(h));
        std::vector<IntVector> dual = dual_basis(vals);
        for (size_t k = 0; k < at.size(); ++k) {
            // the facet through v whose Thom class at v is alpha(at[k])
            std::vector<Half> seed;
            for (size_t m = 0; m < at.size(); ++m)
                if (m != k) seed.push_back(at[m]);
            GraphFace facet = face_from_seed(G, v, seed);
            int el = FP.element_of.at(face_id(G, facet));
            auto it = assigned.find(el);
            if (it == assigned.end()) {
                assigned[el] = dual[k];
            } else if (it->second != dual[k]) {
                throw internal_error(
                    "constant_lsop: inconsistent facet coefficients between vertices");
            }
        }
    }
    for (auto& [el, lv] : assigned)
        for (int j = 0; j < n; ++j)
            if (lv[j] != 0) theta[j].coeffs[el] = lv[j];
    return theta;
}

std::optional<std::map<std::string, std::string>> graph_isomorphic(const TorusGraph& A,
                                                                   const TorusGraph& B)
{
    if (A.n() != B.n() || A.num_vertices() != B.num_vertices() ||
        A.num_edges() != B.num_edges())
        return std::nullopt;
    const int V = A.num_vertices();

    // multiset of (alpha out, alpha in) pairs between two vertices
    auto edge_profile = [](const TorusGraph& G, int v, int w) {
        std::multiset<std::pair<IntVector, IntVector>> s;
        for (Half h : G.halves_at(v))
            if (G.head(h) == w) s.insert({G.alpha(h), G.alpha(reverse_half(h))});
        return s;
    };

    std::vector<int> match(V, -1), rmatch(V, -1);
    auto consistent = [&](int va, int vb) {
        for (int u = 0; u < V; ++u) {
            if (match[u] < 0) continue;
            if (edge_profile(A, va, u) != edge_profile(B, vb, match[u])) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int va) -> bool {
        if (va == V) return true;
        for (int vb = 0; vb < V; ++vb) {
            if (rmatch[vb] >= 0 || !consistent(va, vb)) continue;
            match[va] = vb;
            rmatch[vb] = va;
            if (self(self, va + 1)) return true;
            match[va] = -1;
            rmatch[vb] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (int v = 0; v < V; ++v) out[A.vertex_id(v)] = B.vertex_id(match[v]);
    return out;
}

}  // namespace tg
