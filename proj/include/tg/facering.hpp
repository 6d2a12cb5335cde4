#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tg/polyring.hpp"
#include "tg/sposet.hpp"

namespace tg {

// Monomial along a chain t1 < t2 < ... < tk of poset elements, exponents >= 1.
// Cohomological degree = sum of 2 * a_i * rank(t_i).  This is the additive
// normal form of the face ring.
struct ChainMonomial {
    std::vector<std::pair<int, int>> factors;  // (element index, exponent), ascending rank

    int cohom_degree(const SimplicialPoset& P) const;
    bool operator<(const ChainMonomial& o) const { return factors < o.factors; }
    bool operator==(const ChainMonomial&) const = default;
};

// Face ring element in chain-monomial normal form over Z.
struct RingElement {
    std::map<ChainMonomial, Int> terms;

    static RingElement zero() { return {}; }
    static RingElement one();  // the empty chain monomial
    static RingElement generator(int elem, const Int& coeff = 1);
    bool is_zero() const { return terms.empty(); }
    void add_term(const ChainMonomial& m, const Int& c);
    bool operator==(const RingElement&) const = default;
};

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_sub(const RingElement& x, const RingElement& y);
RingElement ring_scale(const RingElement& x, const Int& c);

// Product reduced to chain normal form via the straightening relation
// v_s v_t = v_{s^t} * sum_{e in s v t} v_e.  The deterministic schedule
// rewrites the first incomparable adjacent pair of the rank-sorted factor
// list; an optional chooser overrides the pair selection (used to confirm
// confluence under randomized schedules).
RingElement straighten_mul(const SimplicialPoset& P, const RingElement& x,
                           const RingElement& y,
                           const std::function<size_t(size_t)>& choose_pair = {});

RingElement ring_pow(const SimplicialPoset& P, const RingElement& x, int k);

// Restriction s_sigma: kills chain monomials with a factor not below sigma;
// a factor (t, a) maps to (prod of the vertex variables of t)^a.  Variables
// of the result are the atoms of sigma in sorted order.
Poly restriction(const SimplicialPoset& P, const RingElement& x, int sigma);

// Componentwise restriction to all maximal elements.
std::vector<std::pair<int, Poly>> global_restriction(const SimplicialPoset& P,
                                                     const RingElement& x);

// Number of chain monomials of cohomological degree 2d.
Int hilbert_function(const SimplicialPoset& P, int d);

// All chain monomials of cohomological degree 2d, sorted.
std::vector<ChainMonomial> chain_monomials_of_degree(const SimplicialPoset& P, int d);

// Degree-two element: integer coefficients over the rank-1 elements.
struct LinearElement {
    std::map<int, Int> coeffs;  // vertex index -> coefficient

    RingElement as_ring_element() const;
};

struct LsopReport {
    bool ok = false;
    int failing = -2;  // element index where restrictions fail to generate
};

// theta is an lsop iff for every sigma the restrictions generate the degree
// one part of the restricted polynomial ring: full rank over a field,
// surjective over Z (all Smith divisors 1).
LsopReport lsop_check(const SimplicialPoset& P, const std::vector<LinearElement>& theta,
                      const Coeffs& k);

// Dimension of the degree-2d graded piece of k[P]/(theta_1..theta_n) over a
// field, by exact linear algebra on the chain-monomial basis.
Int quotient_graded_dim(const SimplicialPoset& P, const std::vector<LinearElement>& theta,
                        int d, const Coeffs& k);

// The induced map k[P] -> k[stellar_subdivide(P, sigma)] of the stellar
// subdivision, defined when the star of sigma is a simplicial complex:
// v_t -> v_t outside the star, vertices of sigma -> v + v_i, other vertices
// fixed, higher generators in the star expanded through vertex products.
struct BetaMap {
    const SimplicialPoset* source = nullptr;
    SimplicialPoset target;
    std::string new_vertex_id;
    std::map<std::string, std::pair<std::string, std::string>> provenance;
    std::vector<RingElement> generator_images;  // indexed by source element

    RingElement apply(const RingElement& x) const;
};

BetaMap beta_map(const SimplicialPoset& P, int sigma);

std::string to_string(const SimplicialPoset& P, const RingElement& x);

// Parse "v[id]*v[id2]^2 - 3*v[id3]" style expressions.
RingElement parse_ring_element(const SimplicialPoset& P, const std::string& text);

}  // namespace tg
