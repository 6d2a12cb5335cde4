#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tg/facering.hpp"
#include "tg/polyring.hpp"
#include "tg/sposet.hpp"

namespace tg {

// Directed edge half: 2*edge + 0 runs ends[0] -> ends[1], +1 the reverse.
using Half = int;
inline Half reverse_half(Half h) { return h ^ 1; }
inline int edge_of(Half h) { return h >> 1; }

struct RawGraph {
    int n = 0;
    std::vector<std::string> vertex_ids;
    struct RawEdge {
        std::string id;
        std::string from, to;
        IntVector alpha_from, alpha_to;  // axial value of each directed half
    };
    std::vector<RawEdge> edges;
};

// Validated torus graph: n-valent, connected, axial values form a lattice
// basis at every vertex, connection inferred from the congruence condition.
class TorusGraph {
public:
    static TorusGraph validate(const RawGraph& raw);

    int n() const { return n_; }
    int num_vertices() const { return int(vertex_ids_.size()); }
    int num_edges() const { return int(edges_.size()); }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    int vertex_index(const std::string& id) const;
    const std::string& edge_id(int e) const { return edges_[e].id; }
    int edge_index(const std::string& id) const;

    int tail(Half h) const;                 // i(e)
    int head(Half h) const { return tail(reverse_half(h)); }
    const IntVector& alpha(Half h) const;   // axial value of the directed half
    const std::vector<Half>& halves_at(int v) const { return at_[v]; }

    // theta_h maps halves at tail(h) to halves at head(h)
    Half connection(Half h, Half at_tail) const;

    RawGraph to_raw() const;

private:
    int n_ = 0;
    std::vector<std::string> vertex_ids_;
    struct Edge {
        std::string id;
        int v = 0, w = 0;
        IntVector alpha_vw, alpha_wv;
    };
    std::vector<Edge> edges_;
    std::vector<std::vector<Half>> at_;               // halves with given tail
    std::vector<std::map<Half, Half>> theta_;         // per half
    std::map<std::string, int> vindex_, eindex_;

    friend TorusGraph graph_like(const TorusGraph&);
};

// Connected k-valent subgraph invariant under the connection.
struct GraphFace {
    int dim = 0;
    std::vector<int> verts;   // sorted vertex indices
    std::vector<int> edges;   // sorted edge indices

    bool contains(const GraphFace& other) const;  // other subset of this
    bool operator==(const GraphFace&) const = default;
    bool operator<(const GraphFace& o) const;
};

std::string face_id(const TorusGraph& G, const GraphFace& F);

// The unique face spanned by the given edge halves at p (breadth-first
// transport along the connection).
GraphFace face_from_seed(const TorusGraph& G, int p, const std::vector<Half>& seed);

// All faces of all dimensions 0..n, deduplicated and sorted; the last one of
// dimension n is the whole graph.
std::vector<GraphFace> enumerate_faces(const TorusGraph& G);

GraphFace whole_graph_face(const TorusGraph& G);

// Faces ordered by reversed inclusion; the whole graph is the implicit
// bottom.  Also returns the face of each poset element.
struct FacePoset {
    SimplicialPoset poset;
    std::vector<GraphFace> face_of;            // by poset element index
    std::map<std::string, int> element_of;     // face id -> poset index
};
FacePoset face_poset(const TorusGraph& G);

// Vertex-indexed polynomial family subject to the edge congruences.
struct CohomologyClass {
    std::vector<Poly> value;  // per vertex

    bool operator==(const CohomologyClass&) const = default;
};

CohomologyClass class_zero(const TorusGraph& G, int degree_hint = 0);
CohomologyClass class_constant(const TorusGraph& G, const Poly& f);
CohomologyClass class_add(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass class_mul(const CohomologyClass& a, const CohomologyClass& b);

// Thom class of F: at p in F the product of the axial values of the edge
// halves at p outside F, zero elsewhere; tau of the whole graph is 1.
CohomologyClass thom_class(const TorusGraph& G, const GraphFace& F);

struct CocheckReport {
    bool ok = false;
    int failing_edge = -1;
};
CocheckReport is_cohomology_class(const TorusGraph& G, const CohomologyClass& f);

// tau_G tau_H = tau_{G v H} * sum of tau over connected components of the
// intersection; checks the identity vertexwise.
bool thom_relation_check(const TorusGraph& G, const GraphFace& A, const GraphFace& B);

// Connected components of the intersection subgraph (each one is a face).
std::vector<GraphFace> face_intersection_components(const TorusGraph& G, const GraphFace& A,
                                                    const GraphFace& B);

// Minimal common superface; empty when the intersection is empty and no
// unique minimal superface exists.
std::optional<GraphFace> face_join(const TorusGraph& G, const GraphFace& A,
                                   const GraphFace& B);

// Z-rank of the degree-2d graded piece of H*_T, via the kernel of the edge
// congruence system.
Int graded_cohomology_rank(const TorusGraph& G, int d);

// The face-ring comparison of Theorem "isomorphic to the face ring": the
// kernel rank equals the Hilbert function and the Thom monomial images span
// the kernel lattice (all Smith divisors 1).
bool phi_iso_check(const TorusGraph& G, int d);

// Evaluate a face-ring element as a cohomology class, v_F -> tau_F.
CohomologyClass thom_evaluate(const TorusGraph& G, const FacePoset& FP,
                              const RingElement& x);

struct GraphOrientation {
    bool orientable = false;
    std::map<std::string, int> sign;       // vertex id -> +-1
    std::vector<std::string> odd_cycle;    // witness when non-orientable
};
GraphOrientation orientation(const TorusGraph& G);

// sum over faces H of F of (-1)^{dim H}, F included.
Int euler_number(const TorusGraph& G, const GraphFace& F);

// Dehn-Sommerville for graphs: lhs from the face poset h-vector, rhs the
// weighted sum of (t-1)^{dim F} over all faces including the whole graph.
struct GraphDS {
    std::vector<Int> lhs, rhs;
    bool equal = false;
};
GraphDS ds_graph_check(const TorusGraph& G);

// The canonical torus graph of a pseudomanifold with an lsop; vertices are
// the top simplices, edge multiplicities the rank n-1 meets, axial values
// the dual bases of the lsop coefficient vectors.
TorusGraph graph_from_poset(const SimplicialPoset& P, const std::vector<LinearElement>& lambda);

// The lsop carried by the constant map H*(BT) -> H*_T: coefficients of each
// t_j over the facet classes, read off at any vertex and checked at all.
std::vector<LinearElement> constant_lsop(const TorusGraph& G, const FacePoset& FP);

// Torus graph isomorphism with exact axial match: bijection of vertices and
// edges with alpha carried over verbatim.
std::optional<std::map<std::string, std::string>> graph_isomorphic(const TorusGraph& A,
                                                                   const TorusGraph& B);

}  // namespace tg
