// Command line front end: torus graphs, simplicial posets, face rings,
// homology and blow-ups over the documented JSON file formats.
//
// Exit codes: 0 success, 1 input or validation error, 2 a checked
// mathematical property failed.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <json.hpp>

#include "tg/blowup.hpp"
#include "tg/corpus.hpp"
#include "tg/homology.hpp"
#include "tg/io.hpp"

using nlohmann::ordered_json;
using namespace tg;

namespace {

bool g_json = false;

// resolve a path argument, falling back to $CORPUS_DIR/<name>.json
std::string resolve(const std::string& arg)
{
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return arg;
    if (const char* dir = std::getenv("CORPUS_DIR")) {
        std::string p = std::string(dir) + "/" + arg + ".json";
        if (fs::exists(p)) return p;
        p = std::string(dir) + "/" + arg;
        if (fs::exists(p)) return p;
    }
    return arg;  // let the loader report the failure
}

Coeffs parse_coeffs(const std::string& s)
{
    if (s == "z") return Coeffs::integers();
    if (s == "q") return Coeffs::rationals();
    if (s.rfind("fp:", 0) == 0) {
        long p = std::stol(s.substr(3));
        if (p < 2) throw validation_error("coefficient field: prime must be >= 2");
        return Coeffs::prime_field(p);
    }
    throw validation_error("coefficient flag must be z, q or fp:<prime>");
}

void emit(const ordered_json& payload, const std::string& text)
{
    if (g_json)
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

std::string ints_to_string(const std::vector<Int>& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

ordered_json ints_to_json(const std::vector<Int>& v)
{
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

// face selector "vertex" or "vertex:edge1,edge2"
GraphFace select_face(const TorusGraph& G, const std::string& seed)
{
    std::string vert = seed;
    std::vector<std::string> edge_ids;
    auto colon = seed.find(':');
    if (colon != std::string::npos) {
        vert = seed.substr(0, colon);
        std::string rest = seed.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            if (comma > pos) edge_ids.push_back(rest.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }
    int p = G.vertex_index(vert);
    std::vector<Half> halves;
    for (const std::string& eid : edge_ids) {
        int e = G.edge_index(eid);
        Half h = (G.tail(2 * e) == p) ? 2 * e : 2 * e + 1;
        if (G.tail(h) != p)
            throw validation_error("face seed: edge '" + eid + "' is not incident to '" +
                                   vert + "'");
        halves.push_back(h);
    }
    return face_from_seed(G, p, halves);
}

std::vector<LinearElement> parse_lambda(const SimplicialPoset& P,
                                        const std::vector<std::string>& specs)
{
    // each spec "vertex:c1,c2,...,cn" gives the lambda covector of a vertex
    const int n = P.rank_max();
    std::vector<LinearElement> theta(n);
    for (const std::string& s : specs) {
        auto colon = s.find(':');
        if (colon == std::string::npos)
            throw validation_error("lambda spec must look like vertex:c1,...,cn");
        int v = P.require(s.substr(0, colon));
        std::string rest = s.substr(colon + 1);
        std::vector<Int> cs;
        size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            cs.push_back(Int(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if (int(cs.size()) != n)
            throw validation_error("lambda spec for '" + s.substr(0, colon) + "' needs " +
                                   std::to_string(n) + " coefficients");
        for (int j = 0; j < n; ++j)
            if (cs[j] != 0) theta[j].coeffs[v] = cs[j];
    }
    return theta;
}

int run(int argc, char** argv)
{
    CLI::App app{"exact computations with torus graphs and simplicial posets"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine readable output");

    int exit_code = 0;

    // ---------------- graph ----------------
    auto* graph = app.add_subcommand("graph", "torus graph operations");
    graph->require_subcommand(1);
    std::string gfile, gseed, gout, gclass, gcoeffs = "z";
    int gdegree = 0;
    bool gcheckphi = false;
    std::vector<std::string> glambda;

    auto* gv = graph->add_subcommand("validate", "check the torus graph axioms");
    gv->add_option("file", gfile)->required();
    gv->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        ordered_json j{{"valid", true}, {"n", G.n()}, {"vertices", G.num_vertices()},
                       {"edges", G.num_edges()}};
        emit(j, "valid torus graph, n=" + std::to_string(G.n()) + ", vertices=" +
                    std::to_string(G.num_vertices()) + ", edges=" +
                    std::to_string(G.num_edges()) + "\n");
    });

    auto* gf = graph->add_subcommand("faces", "enumerate all faces");
    gf->add_option("file", gfile)->required();
    gf->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        ordered_json arr = ordered_json::array();
        std::string text;
        for (const GraphFace& F : enumerate_faces(G)) {
            arr.push_back({{"dim", F.dim}, {"id", face_id(G, F)}});
            text += "dim " + std::to_string(F.dim) + "  " + face_id(G, F) + "\n";
        }
        emit(ordered_json{{"faces", arr}}, text);
    });

    auto* gp = graph->add_subcommand("face-poset", "face poset of the graph");
    gp->add_option("file", gfile)->required();
    gp->add_option("--output", gout, "write the poset to a file");
    gp->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        FacePoset FP = face_poset(G);
        std::string text = poset_to_json_text(FP.poset);
        if (!gout.empty()) {
            save_poset(FP.poset, gout);
            emit(ordered_json{{"written", gout}}, "written " + gout + "\n");
        } else {
            emit(ordered_json::parse(text), text);
        }
    });

    auto* gt = graph->add_subcommand("thom", "Thom class of a face");
    gt->add_option("file", gfile)->required();
    gt->add_option("--face-seed", gseed, "vertex or vertex:edge,edge,...")->required();
    gt->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        GraphFace F = select_face(G, gseed);
        CohomologyClass c = thom_class(G, F);
        ordered_json vals;
        std::string text = "thom class of " + face_id(G, F) + "\n";
        for (int v = 0; v < G.num_vertices(); ++v) {
            vals[G.vertex_id(v)] = to_string(c.value[v]);
            text += "  " + G.vertex_id(v) + ": " + to_string(c.value[v]) + "\n";
        }
        emit(ordered_json{{"face", face_id(G, F)}, {"values", vals}}, text);
    });

    auto* gc = graph->add_subcommand("cocheck", "test a vertex->polynomial map");
    gc->add_option("file", gfile)->required();
    gc->add_option("--class", gclass, "p=t1+t2;q=0 style assignment")->required();
    gc->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        CohomologyClass f = class_zero(G);
        size_t pos = 0;
        while (pos < gclass.size()) {
            auto semi = gclass.find(';', pos);
            if (semi == std::string::npos) semi = gclass.size();
            std::string part = gclass.substr(pos, semi - pos);
            auto eq = part.find('=');
            if (eq == std::string::npos)
                throw validation_error("class spec must be vertex=poly;vertex=poly");
            f.value[G.vertex_index(part.substr(0, eq))] =
                parse_poly(part.substr(eq + 1), G.n());
            pos = semi + 1;
        }
        CocheckReport rep = is_cohomology_class(G, f);
        if (rep.ok) {
            emit(ordered_json{{"is_class", true}}, "cohomology class: yes\n");
        } else {
            emit(ordered_json{{"is_class", false}, {"failing_edge", G.edge_id(rep.failing_edge)}},
                 "cohomology class: no, fails on edge " + G.edge_id(rep.failing_edge) + "\n");
            exit_code = 2;
        }
    });

    auto* gr = graph->add_subcommand("rank", "graded rank of the equivariant cohomology");
    gr->add_option("file", gfile)->required();
    gr->add_option("--degree", gdegree, "algebraic degree d (cohomological 2d)")->required();
    gr->add_flag("--check-phi", gcheckphi, "also check the face ring comparison");
    gr->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        Int rank = graded_cohomology_rank(G, gdegree);
        FacePoset FP = face_poset(G);
        Int hf = hilbert_function(FP.poset, gdegree);
        ordered_json j{{"degree", gdegree}, {"rank", rank.str()}, {"hilbert", hf.str()}};
        std::string text = "degree " + std::to_string(gdegree) + ": rank " + rank.str() +
                           ", hilbert " + hf.str() + "\n";
        if (gcheckphi) {
            bool ok = phi_iso_check(G, gdegree);
            j["phi_iso"] = ok;
            text += std::string("face ring comparison: ") + (ok ? "ok" : "FAILED") + "\n";
            if (!ok) exit_code = 2;
        }
        emit(j, text);
    });

    auto* go = graph->add_subcommand("orient", "orientation or witness cycle");
    go->add_option("file", gfile)->required();
    go->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        GraphOrientation o = orientation(G);
        if (o.orientable) {
            ordered_json signs;
            std::string text = "orientable\n";
            for (auto& [v, s] : o.sign) {
                signs[v] = s;
                text += "  " + v + ": " + (s > 0 ? "+1" : "-1") + "\n";
            }
            emit(ordered_json{{"orientable", true}, {"signs", signs}}, text);
        } else {
            ordered_json j{{"orientable", false}, {"odd_cycle", o.odd_cycle}};
            std::string text = "non-orientable, odd cycle:";
            for (auto& v : o.odd_cycle) text += " " + v;
            emit(j, text + "\n");
        }
    });

    auto* ge = graph->add_subcommand("euler", "Euler number of a face");
    ge->add_option("file", gfile)->required();
    ge->add_option("--face-seed", gseed)->required();
    ge->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        GraphFace F = select_face(G, gseed);
        Int chi = euler_number(G, F);
        emit(ordered_json{{"face", face_id(G, F)}, {"euler", chi.str()}},
             "euler(" + face_id(G, F) + ") = " + chi.str() + "\n");
    });

    auto* gds = graph->add_subcommand("ds", "Dehn-Sommerville for the graph");
    gds->add_option("file", gfile)->required();
    gds->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        GraphDS r = ds_graph_check(G);
        ordered_json j{{"lhs", ints_to_json(r.lhs)}, {"rhs", ints_to_json(r.rhs)},
                       {"equal", r.equal}};
        emit(j, "lhs " + ints_to_string(r.lhs) + "\nrhs " + ints_to_string(r.rhs) + "\n" +
                    (r.equal ? "equal\n" : "NOT EQUAL\n"));
        if (!r.equal) exit_code = 2;
    });

    auto* gfp = graph->add_subcommand("from-poset", "torus graph of a pseudomanifold");
    gfp->add_option("file", gfile)->required();
    gfp->add_option("--lambda", glambda, "vertex:c1,...,cn covector, repeatable")->required();
    gfp->add_option("--output", gout);
    gfp->callback([&] {
        SimplicialPoset P = load_poset(resolve(gfile));
        TorusGraph G = graph_from_poset(P, parse_lambda(P, glambda));
        std::string text = graph_to_json_text(G);
        if (!gout.empty()) {
            save_graph(G, gout);
            emit(ordered_json{{"written", gout}}, "written " + gout + "\n");
        } else {
            emit(ordered_json::parse(text), text);
        }
    });

    auto* gcl = graph->add_subcommand("constant-lsop", "lsop carried by the constant map");
    gcl->add_option("file", gfile)->required();
    gcl->callback([&] {
        TorusGraph G = load_graph(resolve(gfile));
        FacePoset FP = face_poset(G);
        std::vector<LinearElement> theta = constant_lsop(G, FP);
        ordered_json arr = ordered_json::array();
        std::string text;
        for (size_t j = 0; j < theta.size(); ++j) {
            RingElement x = theta[j].as_ring_element();
            arr.push_back(to_string(FP.poset, x));
            text += "t" + std::to_string(j + 1) + " -> " + to_string(FP.poset, x) + "\n";
        }
        emit(ordered_json{{"lsop", arr}}, text);
    });

    // ---------------- poset ----------------
    auto* poset = app.add_subcommand("poset", "simplicial poset operations");
    poset->require_subcommand(1);
    std::string pfile, pfile2, psimplex, pout;

    auto* pv = poset->add_subcommand("validate", "check the simplicial poset axioms");
    pv->add_option("file", pfile)->required();
    pv->callback([&] {
        SimplicialPoset P = load_poset(resolve(pfile));
        emit(ordered_json{{"valid", true}, {"rank", P.rank_max()}, {"elements", P.size()}},
             "valid simplicial poset, rank " + std::to_string(P.rank_max()) + ", " +
                 std::to_string(P.size()) + " elements\n");
    });

    auto* pfh = poset->add_subcommand("fh", "f- and h-vectors");
    pfh->add_option("file", pfile)->required();
    pfh->callback([&] {
        SimplicialPoset P = load_poset(resolve(pfile));
        FHVector fh = fh_vector(P);
        emit(ordered_json{{"f", ints_to_json(fh.f)}, {"h", ints_to_json(fh.h)}},
             "f = " + ints_to_string(fh.f) + "\nh = " + ints_to_string(fh.h) + "\n");
    });

    auto* pds = poset->add_subcommand("ds", "Dehn-Sommerville identity");
    pds->add_option("file", pfile)->required();
    pds->callback([&] {
        SimplicialPoset P = load_poset(resolve(pfile));
        DehnSommerville r = dehn_sommerville(P);
        ordered_json j{{"lhs", ints_to_json(r.lhs)}, {"rhs", ints_to_json(r.rhs)},
                       {"equal", r.equal}, {"defect", ints_to_json(r.defect)}};
        emit(j, "lhs " + ints_to_string(r.lhs) + "\nrhs " + ints_to_string(r.rhs) + "\n" +
                    (r.equal ? "equal\n" : "NOT EQUAL\n"));
        if (!r.equal) exit_code = 2;
    });

    auto subposet_cmd = [&](const char* name, const char* help,
                            SimplicialPoset (*fn)(const SimplicialPoset&, int)) {
        auto* c = poset->add_subcommand(name, help);
        c->add_option("file", pfile)->required();
        c->add_option("--simplex", psimplex)->required();
        c->add_option("--output", pout);
        c->callback([&, fn] {
            SimplicialPoset P = load_poset(resolve(pfile));
            SimplicialPoset S = fn(P, P.require(psimplex));
            std::string text = poset_to_json_text(S);
            if (!pout.empty()) {
                save_poset(S, pout);
                emit(ordered_json{{"written", pout}}, "written " + pout + "\n");
            } else {
                emit(ordered_json::parse(text), text);
            }
        });
    };
    subposet_cmd("star", "star of a simplex", +[](const SimplicialPoset& P, int s) {
        return star(P, s);
    });
    subposet_cmd("link", "link of a simplex", +[](const SimplicialPoset& P, int s) {
        return link(P, s);
    });
    subposet_cmd("stellar", "stellar subdivision", +[](const SimplicialPoset& P, int s) {
        return stellar_subdivide(P, s).poset;
    });

    auto whole_cmd = [&](const char* name, const char* help,
                         SimplicialPoset (*fn)(const SimplicialPoset&)) {
        auto* c = poset->add_subcommand(name, help);
        c->add_option("file", pfile)->required();
        c->add_option("--output", pout);
        c->callback([&, fn] {
            SimplicialPoset P = load_poset(resolve(pfile));
            SimplicialPoset S = fn(P);
            std::string text = poset_to_json_text(S);
            if (!pout.empty()) {
                save_poset(S, pout);
                emit(ordered_json{{"written", pout}}, "written " + pout + "\n");
            } else {
                emit(ordered_json::parse(text), text);
            }
        });
    };
    whole_cmd("barycentric", "barycentric subdivision", +[](const SimplicialPoset& P) {
        return barycentric_subdivide(P);
    });
    whole_cmd("order-complex", "order complex of the poset", +[](const SimplicialPoset& P) {
        return order_complex(P);
    });

    auto* ppm = poset->add_subcommand("pseudomanifold", "pseudomanifold test");
    ppm->add_option("file", pfile)->required();
    ppm->callback([&] {
        SimplicialPoset P = load_poset(resolve(pfile));
        PseudomanifoldReport r = is_pseudomanifold(P);
        emit(ordered_json{{"pseudomanifold", r.ok}, {"witness", r.witness}},
             r.ok ? "pseudomanifold: yes\n" : "pseudomanifold: no (" + r.witness + ")\n");
    });

    auto* piso = poset->add_subcommand("iso", "poset isomorphism test");
    piso->add_option("file", pfile)->required();
    piso->add_option("file2", pfile2)->required();
    piso->callback([&] {
        SimplicialPoset P = load_poset(resolve(pfile));
        SimplicialPoset Q = load_poset(resolve(pfile2));
        auto m = poset_isomorphic(P, Q);
        if (m) {
            ordered_json wm;
            std::string text = "isomorphic\n";
            for (auto& [a, b] : *m) {
                wm[a] = b;
                text += "  " + a + " -> " + b + "\n";
            }
            emit(ordered_json{{"isomorphic", true}, {"witness", wm}}, text);
        } else {
            emit(ordered_json{{"isomorphic", false}}, "not isomorphic\n");
            exit_code = 2;
        }
    });

    // ---------------- ring ----------------
    auto* ring = app.add_subcommand("ring", "face ring operations");
    ring->require_subcommand(1);
    std::string rfile, rexpr, rsimplex, rcoeffs = "z";
    int rdegree = 0;
    std::vector<std::string> rlambda;

    auto* rm = ring->add_subcommand("mul", "normal form of an expression");
    rm->add_option("file", rfile)->required();
    rm->add_option("--expr", rexpr)->required();
    rm->callback([&] {
        SimplicialPoset P = load_poset(resolve(rfile));
        RingElement x = parse_ring_element(P, rexpr);
        emit(ordered_json{{"normal_form", to_string(P, x)}}, to_string(P, x) + "\n");
    });

    auto* rr = ring->add_subcommand("restrict", "restriction to a simplex");
    rr->add_option("file", rfile)->required();
    rr->add_option("--expr", rexpr)->required();
    rr->add_option("--simplex", rsimplex)->required();
    rr->callback([&] {
        SimplicialPoset P = load_poset(resolve(rfile));
        RingElement x = parse_ring_element(P, rexpr);
        int s = P.require(rsimplex);
        Poly f = restriction(P, x, s);
        std::string vars;
        for (size_t i = 0; i < P.atoms(s).size(); ++i) {
            if (i) vars += ",";
            vars += "x" + std::to_string(i + 1) + "=" + P.elem(P.atoms(s)[i]).id;
        }
        emit(ordered_json{{"restriction", to_string(f, "x")}, {"variables", vars}},
             to_string(f, "x") + "   [" + vars + "]\n");
    });

    auto* rh = ring->add_subcommand("hilbert", "Hilbert function values");
    rh->add_option("file", rfile)->required();
    rh->add_option("--degree", rdegree, "maximum algebraic degree")->required();
    rh->callback([&] {
        SimplicialPoset P = load_poset(resolve(rfile));
        ordered_json arr = ordered_json::array();
        std::string text;
        for (int d = 0; d <= rdegree; ++d) {
            Int hf = hilbert_function(P, d);
            arr.push_back(hf.str());
            text += "HF(" + std::to_string(d) + ") = " + hf.str() + "\n";
        }
        emit(ordered_json{{"hilbert", arr}}, text);
    });

    auto* rl = ring->add_subcommand("lsop-check", "linear system of parameters test");
    rl->add_option("file", rfile)->required();
    rl->add_option("--lambda", rlambda)->required();
    rl->add_option("--coeffs", rcoeffs);
    rl->callback([&] {
        SimplicialPoset P = load_poset(resolve(rfile));
        LsopReport rep = lsop_check(P, parse_lambda(P, rlambda), parse_coeffs(rcoeffs));
        if (rep.ok) {
            emit(ordered_json{{"lsop", true}}, "lsop: yes\n");
        } else {
            std::string w = rep.failing >= 0 ? P.elem(rep.failing).id : "?";
            emit(ordered_json{{"lsop", false}, {"failing", w}},
                 "lsop: no, restrictions fail at " + w + "\n");
            exit_code = 2;
        }
    });

    auto* rb = ring->add_subcommand("beta", "stellar subdivision ring map");
    rb->add_option("file", rfile)->required();
    rb->add_option("--simplex", rsimplex)->required();
    rb->add_option("--expr", rexpr)->required();
    rb->callback([&] {
        SimplicialPoset P = load_poset(resolve(rfile));
        BetaMap beta = beta_map(P, P.require(rsimplex));
        RingElement x = parse_ring_element(P, rexpr);
        RingElement y = beta.apply(x);
        emit(ordered_json{{"image", to_string(beta.target, y)},
                          {"new_vertex", beta.new_vertex_id}},
             to_string(beta.target, y) + "\n");
    });

    auto* rq = ring->add_subcommand("quotient-dim", "graded dimension modulo an lsop");
    rq->add_option("file", rfile)->required();
    rq->add_option("--lambda", rlambda)->required();
    rq->add_option("--degree", rdegree)->required();
    rq->add_option("--coeffs", rcoeffs, "field: q or fp:<prime>");
    rq->callback([&] {
        SimplicialPoset P = load_poset(resolve(rfile));
        Coeffs k = parse_coeffs(rcoeffs == "z" ? "q" : rcoeffs);
        Int dim = quotient_graded_dim(P, parse_lambda(P, rlambda), rdegree, k);
        emit(ordered_json{{"degree", rdegree}, {"dim", dim.str()}},
             "dim_" + k.name() + " (k[P]/theta)_" + std::to_string(2 * rdegree) + " = " +
                 dim.str() + "\n");
    });

    // ---------------- homology ----------------
    auto* hom = app.add_subcommand("homology", "simplicial homology and CM tests");
    hom->require_subcommand(1);
    std::string hfile, hcoeffs = "z";

    auto* hc = hom->add_subcommand("compute", "reduced homology of a complex");
    hc->add_option("file", hfile)->required();
    hc->add_option("--coeffs", hcoeffs);
    hc->callback([&] {
        SimplicialPoset P = load_poset(resolve(hfile));
        HomologyGroups H = homology(P, parse_coeffs(hcoeffs));
        ordered_json arr = ordered_json::array();
        std::string text;
        for (int d = 0; d <= H.dim; ++d) {
            arr.push_back({{"dim", d}, {"group", group_to_string(H, d)}});
            text += "H~_" + std::to_string(d) + " = " + group_to_string(H, d) + "\n";
        }
        emit(ordered_json{{"coeffs", parse_coeffs(hcoeffs).name()}, {"groups", arr}}, text);
    });

    auto* hm = hom->add_subcommand("cm", "Cohen-Macaulay test through links");
    hm->add_option("file", hfile)->required();
    hm->add_option("--coeffs", hcoeffs);
    hm->callback([&] {
        SimplicialPoset P = load_poset(resolve(hfile));
        CMReport rep = cm_check(P, parse_coeffs(hcoeffs));
        if (rep.is_cm) {
            emit(ordered_json{{"cohen_macaulay", true}}, "Cohen-Macaulay\n");
        } else {
            ordered_json ws = ordered_json::array();
            std::string text = "not Cohen-Macaulay\n";
            for (const auto& w : rep.witnesses) {
                ws.push_back({{"simplex", w.simplex}, {"dimension", w.dimension},
                              {"group", w.group}});
                text += "  link of " + w.simplex + ": H~_" + std::to_string(w.dimension) +
                        " = " + w.group + "\n";
            }
            emit(ordered_json{{"cohen_macaulay", false}, {"witnesses", ws}}, text);
        }
    });

    // ---------------- blowup ----------------
    auto* blow = app.add_subcommand("blowup", "blow-ups of torus graphs");
    blow->require_subcommand(1);
    std::string bfile, bseed, bout;

    auto* ba = blow->add_subcommand("apply", "blow up a face");
    ba->add_option("file", bfile)->required();
    ba->add_option("--face-seed", bseed)->required();
    ba->add_option("--output", bout);
    ba->callback([&] {
        TorusGraph G = load_graph(resolve(bfile));
        BlowUpResult B = blow_up(G, select_face(G, bseed));
        ordered_json vm;
        for (auto& [a, b] : B.down.vertex_map) vm[a] = b;
        ordered_json j{{"graph", ordered_json::parse(graph_to_json_text(B.graph))},
                       {"vertex_map", vm},
                       {"exceptional", face_id(B.graph, B.down.exceptional)}};
        std::string text = graph_to_json_text(B.graph) + "exceptional facet: " +
                           face_id(B.graph, B.down.exceptional) + "\n";
        if (!bout.empty()) {
            save_graph(B.graph, bout);
            text = "written " + bout + "\nexceptional facet: " +
                   face_id(B.graph, B.down.exceptional) + "\n";
        }
        emit(j, text);
    });

    auto* bv = blow->add_subcommand("verify", "Thom class pullback identities");
    bv->add_option("file", bfile)->required();
    bv->add_option("--face-seed", bseed)->required();
    bv->callback([&] {
        TorusGraph G = load_graph(resolve(bfile));
        bool ok = verify_thom_pullback(G, select_face(G, bseed));
        emit(ordered_json{{"thom_pullback", ok}},
             std::string("thom pullback identities: ") + (ok ? "ok" : "FAILED") + "\n");
        if (!ok) exit_code = 2;
    });

    auto* bc = blow->add_subcommand("correspondence", "blow-up vs stellar subdivision");
    bc->add_option("file", bfile)->required();
    bc->add_option("--face-seed", bseed)->required();
    bc->callback([&] {
        TorusGraph G = load_graph(resolve(bfile));
        StellarCorrespondence sc = stellar_correspondence(G, select_face(G, bseed));
        ordered_json j{{"poset_iso", sc.poset_iso_ok},
                       {"beta_checked", sc.beta_checked},
                       {"beta_matches", sc.beta_matches}};
        std::string text = std::string("face poset matches stellar subdivision: ") +
                           (sc.poset_iso_ok ? "yes" : "NO") + "\n";
        if (sc.beta_checked)
            text += std::string("beta agrees with the pullback: ") +
                    (sc.beta_matches ? "yes" : "NO") + "\n";
        emit(j, text);
        if (!sc.poset_iso_ok || (sc.beta_checked && !sc.beta_matches)) exit_code = 2;
    });

    // ---------------- corpus ----------------
    auto* corpus_cmd = app.add_subcommand("write-corpus", "write the bundled examples");
    std::string cdir;
    corpus_cmd->add_option("dir", cdir)->required();
    corpus_cmd->callback([&] {
        corpus::write_corpus_files(cdir);
        emit(ordered_json{{"written", cdir}}, "corpus written to " + cdir + "\n");
    });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
