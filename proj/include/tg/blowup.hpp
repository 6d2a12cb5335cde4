#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tg/torusgraph.hpp"

namespace tg {

// Blow-down data: every new vertex p~i maps to p, old vertices map to
// themselves; the exceptional facet replaces the blown-up face.
struct BlowDownMap {
    std::map<std::string, std::string> vertex_map;  // new id -> old id
    GraphFace exceptional;                          // the new facet, in the new graph
    int k = 0;                                      // dimension of the blown-up face
    bool identity = false;                          // facet blow-up, graph unchanged
};

struct BlowUpResult {
    TorusGraph graph;
    BlowDownMap down;
};

// Blow up the face F (dim k <= n-1).  Vertices of F split into n-k copies
// indexed by the facets containing F; new edges carry differences of the
// normal axial values.  Blowing up a facet returns the graph unchanged.
BlowUpResult blow_up(const TorusGraph& G, const GraphFace& F);

// (b* f)(v~) = f(b(v~)); the result is checked against the congruences.
CohomologyClass pullback(const TorusGraph& G, const TorusGraph& Gt, const BlowDownMap& b,
                         const CohomologyClass& f);

// The unique face of the blown-up graph over H (H not inside the blown face).
GraphFace face_correspondence(const TorusGraph& G, const TorusGraph& Gt,
                              const BlowDownMap& b, const GraphFace& F,
                              const GraphFace& H);

// For every facet W of G: pullback(tau_W) equals tau_{F~} + tau_{W~} when
// F is inside W and tau_{W~} otherwise.
bool verify_thom_pullback(const TorusGraph& G, const GraphFace& F);

// The blow-up / stellar-subdivision dictionary: the face poset of the
// blow-up is isomorphic to the stellar subdivision of the face poset at the
// element of F, matching the exceptional facet with the new vertex; when the
// star of that element is a simplicial complex, the blow-down pullback
// agrees with the face-ring map beta on chain monomials of degree <= 2n.
struct StellarCorrespondence {
    bool poset_iso_ok = false;
    bool beta_checked = false;   // star was a complex, beta comparison ran
    bool beta_matches = false;
    std::map<std::string, std::string> iso;  // stellar element id -> face id in the blow-up
};

StellarCorrespondence stellar_correspondence(const TorusGraph& G, const GraphFace& F);

}  // namespace tg
