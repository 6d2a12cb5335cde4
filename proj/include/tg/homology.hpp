#pragma once

#include <string>
#include <vector>

#include "tg/sposet.hpp"

namespace tg {

// Reduced simplicial homology, one entry per dimension -1..dim.
struct HomologyGroups {
    Coeffs coeffs;
    int dim = -1;
    std::vector<int> betti;               // betti[d+1] = rank of H~_d
    std::vector<std::vector<Int>> torsion;  // torsion[d+1]; empty over a field

    int betti_of(int d) const { return (d + 1 < int(betti.size()) && d >= -1) ? betti[d + 1] : 0; }
    const std::vector<Int>& torsion_of(int d) const;
    bool reduced_trivial_below(int top_dim) const;  // H~_d = 0 for all d < top_dim
};

// Vertex-set view of a poset that is a simplicial complex.
struct ComplexView {
    int nverts = 0;
    std::vector<std::string> vertex_ids;
    std::vector<std::vector<std::vector<int>>> faces;  // faces[d] = sorted vertex lists

    static ComplexView from_poset(const SimplicialPoset& P);
    int dim() const { return int(faces.size()) - 1; }
};

HomologyGroups homology(const ComplexView& K, const Coeffs& coeffs);
HomologyGroups homology(const SimplicialPoset& P, const Coeffs& coeffs);

// Cohen-Macaulay test in the Reisner/Munkres form: with K the barycentric
// subdivision of P, every link (including the link of the empty simplex,
// i.e. K itself) must have vanishing reduced homology below its dimension.
// The paper states the criterion through relative cohomology at points; the
// link reformulation used here is the classical equivalent statement.
struct CMWitness {
    std::string simplex;  // "{}" for the empty simplex
    int dimension = 0;    // homology dimension that fails to vanish
    std::string group;    // rendering of the offending group
};

struct CMReport {
    bool is_cm = false;
    std::vector<CMWitness> witnesses;
};

CMReport cm_check(const SimplicialPoset& P, const Coeffs& coeffs);

std::string group_to_string(const HomologyGroups& H, int d);

}  // namespace tg
