#pragma once

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tg/common.hpp"

namespace tg {

// A finite simplicial poset: unique implicit bottom element (index -1) plus
// explicitly stored elements of rank >= 1.  Every lower interval [0,s] is a
// boolean lattice; rank s = number of atoms below s.  Immutable once built.
class SimplicialPoset {
public:
    struct Elem {
        std::string id;
        int rank = 0;
        std::vector<int> covers;  // indices of covered elements (rank-1 lower); empty means covers 0
    };

    static constexpr int bottom = -1;

    // Validates all invariants; throws validation_error with the offending
    // element named otherwise.
    static SimplicialPoset validate(int rank_max, std::vector<Elem> elems);

    int rank_max() const { return rank_max_; }
    int size() const { return int(elems_.size()); }  // without the bottom
    const Elem& elem(int i) const { return elems_[i]; }
    const std::vector<Elem>& elems() const { return elems_; }
    int index_of(const std::string& id) const;  // -1 if absent
    int require(const std::string& id) const;   // throws if absent

    bool leq(int a, int b) const;  // a <= b; bottom handled
    const std::vector<int>& atoms(int i) const { return atoms_[i]; }
    std::vector<int> elements_of_rank(int r) const;
    std::vector<int> upper_set(int i) const;  // all j >= i, ascending
    std::vector<int> maximal_elements() const;

    // Minimal common upper bounds / maximal common lower bounds.  bottom is a
    // legal argument and member (meet sets may be {bottom}).
    std::vector<int> join_set(int a, int b) const;
    std::vector<int> meet_set(int a, int b) const;

    std::vector<int> f_vector() const;  // f[i] = #elements of rank i, f[0] = 1

private:
    int rank_max_ = 0;
    std::vector<Elem> elems_;
    std::vector<boost::dynamic_bitset<>> below_;  // below_[i] = {j : j <= i}, j explicit
    std::vector<std::vector<int>> atoms_;
    std::map<std::string, int> index_;
};

struct FHVector {
    std::vector<Int> f;  // f[0] = f_{-1} = 1, ..., f[n] = f_{n-1}
    std::vector<Int> h;  // h[0..n]
};

// h from f via  sum h_i t^{n-i} = sum f_{i-1} (t-1)^{n-i}.
FHVector fh_vector(const SimplicialPoset& P);

// True iff every join set has at most one element.
bool is_simplicial_complex(const SimplicialPoset& P);

// chi(P_{>=s}) = sum over tau >= s of (-1)^{rank tau - 1}; s may be bottom.
Int chi_upper(const SimplicialPoset& P, int s);

// Both sides of the generalized Dehn-Sommerville identity, as coefficient
// vectors in t (index = power).  lhs = sum (h_{n-i} - h_i) t^i; rhs is the
// weighted sum of (t-1)-powers over all elements including the bottom.
struct DehnSommerville {
    std::vector<Int> lhs, rhs;
    bool equal = false;
    std::vector<Int> defect;  // h_{n-i} - h_i for i = 0..n
};
DehnSommerville dehn_sommerville(const SimplicialPoset& P);

// Subposets (lower sets), with element ids preserved.
SimplicialPoset star(const SimplicialPoset& P, int s);
SimplicialPoset boundary_star(const SimplicialPoset& P, int s);
SimplicialPoset link(const SimplicialPoset& P, int s);

// Stellar subdivision at s (any element != bottom).  New cells are indexed by
// pairs (rho, eta) with s not<= rho and eta a minimal common upper bound of s
// and rho; when the star of s is a simplicial complex this is exactly the
// cone over the star boundary.  Ids of surviving elements are unchanged.
struct StellarResult {
    SimplicialPoset poset;
    std::string new_vertex_id;
    // id of each new element -> (rho id or "" for bottom, eta id)
    std::map<std::string, std::pair<std::string, std::string>> provenance;
};
StellarResult stellar_subdivide(const SimplicialPoset& P, int s);

// Stellar subdivisions at all original elements, by descending rank (n down
// to 2), ids in lexicographic order within a rank.
SimplicialPoset barycentric_subdivide(const SimplicialPoset& P);

// Order complex of P minus bottom: vertices = elements, simplices = chains.
// Element ids are the chain ids joined by '<'.
SimplicialPoset order_complex(const SimplicialPoset& P);

struct PseudomanifoldReport {
    bool ok = false;
    std::string witness;  // failing element or disconnection note
};
PseudomanifoldReport is_pseudomanifold(const SimplicialPoset& P);

// Orientation of a pseudomanifold: signs on top elements, adjacent tops
// (sharing a rank n-1 element) get opposite induced orientations on the
// shared wall; empty optional when non-orientable.
std::optional<std::map<std::string, int>> orient_pseudomanifold(const SimplicialPoset& P);

// Rank-preserving, cover-respecting bijection search.  `forced` pins chosen
// P-ids to Q-ids.  Returns the witness map P id -> Q id if isomorphic.
std::optional<std::map<std::string, std::string>> poset_isomorphic(
    const SimplicialPoset& P, const SimplicialPoset& Q,
    const std::map<std::string, std::string>& forced = {});

}  // namespace tg
