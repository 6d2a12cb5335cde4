#pragma once

#include <string>
#include <vector>

#include "tg/sposet.hpp"
#include "tg/torusgraph.hpp"

namespace tg::corpus {

// The bundled example graphs.
TorusGraph fig1a();      // 2-valent, two vertices, both edges labelled t1/t2
TorusGraph fig1b();      // 3-valent, two vertices, edges t1/t2/t3
TorusGraph k4_rp2();     // complete graph on 4 vertices, non-orientable
TorusGraph cube();       // 3-cube with signed coordinate labels

// The bundled example posets.
SimplicialPoset two_segments();     // face poset shape of fig1a
SimplicialPoset two_triangles();    // face poset shape of fig1b
SimplicialPoset rp2_3vertex();      // 3-vertex simplicial cell RP^2
SimplicialPoset rp2_6vertex();      // minimal RP^2 triangulation
SimplicialPoset bipyramid();        // triangle bipyramid sphere
SimplicialPoset bipyramid_glued();  // apexes identified, pseudomanifold
SimplicialPoset boundary_simplex(int n);  // boundary of the n-simplex, rank n
SimplicialPoset full_simplex(int n);      // the n-simplex with its top cell
SimplicialPoset double_simplex(int n);    // two n-simplices glued along boundaries

// Simplicial complex from its facet list (vertex names, facets as vertex
// name lists); element ids are sorted vertex names joined by commas.
SimplicialPoset complex_from_facets(const std::vector<std::string>& vertices,
                                    const std::vector<std::vector<std::string>>& facets);

// Write all corpus files (fig1a.json, ... ) into a directory.
void write_corpus_files(const std::string& dir);

}  // namespace tg::corpus
