#include "tg/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tg/exactla.hpp"

namespace tg {

const std::vector<Int>& HomologyGroups::torsion_of(int d) const
{
    static const std::vector<Int> none;
    if (d + 1 < int(torsion.size()) && d >= -1) return torsion[d + 1];
    return none;
}

bool HomologyGroups::reduced_trivial_below(int top_dim) const
{
    for (int d = -1; d < top_dim; ++d)
        if (betti_of(d) != 0 || !torsion_of(d).empty()) return false;
    return true;
}

ComplexView ComplexView::from_poset(const SimplicialPoset& P)
{
    if (!is_simplicial_complex(P))
        throw validation_error("homology: poset is not a simplicial complex");
    ComplexView K;
    std::vector<int> verts = P.elements_of_rank(1);
    K.nverts = int(verts.size());
    std::map<int, int> vid;
    for (int i = 0; i < K.nverts; ++i) {
        vid[verts[i]] = i;
        K.vertex_ids.push_back(P.elem(verts[i]).id);
    }
    K.faces.assign(std::max(P.rank_max(), 0), {});
    for (int i = 0; i < P.size(); ++i) {
        std::vector<int> vs;
        for (int a : P.atoms(i)) vs.push_back(vid.at(a));
        std::sort(vs.begin(), vs.end());
        K.faces[P.elem(i).rank - 1].push_back(std::move(vs));
    }
    for (auto& level : K.faces) std::sort(level.begin(), level.end());
    return K;
}

namespace {

// boundary matrix C_d -> C_{d-1}; for d = 0 the augmentation row
IntMatrix boundary_matrix(const ComplexView& K, int d)
{
    const auto& top = K.faces[d];
    if (d == 0) {
        IntMatrix B(1, int(top.size()));
        for (size_t j = 0; j < top.size(); ++j) B.at(0, int(j)) = 1;
        return B;
    }
    const auto& low = K.faces[d - 1];
    std::map<std::vector<int>, int> row;
    for (size_t i = 0; i < low.size(); ++i) row[low[i]] = int(i);
    IntMatrix B(int(low.size()), int(top.size()));
    for (size_t j = 0; j < top.size(); ++j) {
        const auto& f = top[j];
        for (size_t k = 0; k < f.size(); ++k) {
            std::vector<int> sub;
            for (size_t m = 0; m < f.size(); ++m)
                if (m != k) sub.push_back(f[m]);
            B.at(row.at(sub), int(j)) = (k % 2 == 0) ? 1 : -1;
        }
    }
    return B;
}

}  // namespace

HomologyGroups homology(const ComplexView& K, const Coeffs& coeffs)
{
    HomologyGroups H;
    H.coeffs = coeffs;
    H.dim = K.dim();
    const int top = K.dim();
    H.betti.assign(top + 2, 0);
    H.torsion.assign(top + 2, {});
    if (top < 0) {
        // the empty complex: H~_{-1} has rank 1
        H.betti.assign(1, 1);
        H.torsion.assign(1, {});
        return H;
    }

    // ranks of boundary maps d = 0..top (+ zero map above top)
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<Int>> divisors(top + 2);
    for (int d = 0; d <= top; ++d) {
        IntMatrix B = boundary_matrix(K, d);
        if (coeffs.kind == Coeffs::Z) {
            auto snf = smith_normal_form(B);
            rank[d] = snf.rank();
            divisors[d] = snf.divisors();
        } else {
            rank[d] = rank_over(B, coeffs);
        }
    }
    // chain dimensions, augmented complex: C_{-1} has dimension 1
    auto cdim = [&](int d) {
        if (d == -1) return 1;
        if (d < -1 || d > top) return 0;
        return int(K.faces[d].size());
    };
    for (int d = -1; d <= top; ++d) {
        int rk_d = (d >= 0) ? rank[d] : 0;        // rank of boundary out of C_d
        int rk_up = (d + 1 <= top) ? rank[d + 1] : 0;
        H.betti[d + 1] = cdim(d) - rk_d - rk_up;
        if (coeffs.kind == Coeffs::Z && d + 1 <= top)
            for (const Int& dv : divisors[d + 1])
                if (dv > 1) H.torsion[d + 1].push_back(dv);
    }
    return H;
}

HomologyGroups homology(const SimplicialPoset& P, const Coeffs& coeffs)
{
    return homology(ComplexView::from_poset(P), coeffs);
}

namespace {

ComplexView link_of(const ComplexView& K, const std::vector<int>& simplex)
{
    std::set<std::vector<int>> in;
    for (const auto& level : K.faces)
        for (const auto& f : level) in.insert(f);
    std::set<int> sv(simplex.begin(), simplex.end());

    ComplexView L;
    L.nverts = K.nverts;
    L.vertex_ids = K.vertex_ids;
    std::vector<std::vector<std::vector<int>>> faces;
    for (const auto& level : K.faces)
        for (const auto& f : level) {
            bool disjoint = std::none_of(f.begin(), f.end(), [&](int v) { return sv.count(v); });
            if (!disjoint) continue;
            std::vector<int> uni = f;
            uni.insert(uni.end(), simplex.begin(), simplex.end());
            std::sort(uni.begin(), uni.end());
            if (!in.count(uni)) continue;
            int d = int(f.size()) - 1;
            if (d >= int(faces.size())) faces.resize(d + 1);
            faces[d].push_back(f);
        }
    L.faces = std::move(faces);
    return L;
}

std::string simplex_name(const ComplexView& K, const std::vector<int>& s)
{
    if (s.empty()) return "{}";
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += K.vertex_ids[s[i]];
    }
    return out + "}";
}

}  // namespace

std::string group_to_string(const HomologyGroups& H, int d)
{
    std::ostringstream out;
    int b = H.betti_of(d);
    const auto& tor = H.torsion_of(d);
    if (b == 0 && tor.empty()) return "0";
    bool first = true;
    auto sep = [&]() {
        if (!first) out << " + ";
        first = false;
    };
    if (b > 0) {
        sep();
        out << H.coeffs.name();
        if (b > 1) out << "^" << b;
    }
    for (const Int& t : tor) {
        sep();
        out << "Z/" << t.str();
    }
    return out.str();
}

CMReport cm_check(const SimplicialPoset& P, const Coeffs& coeffs)
{
    SimplicialPoset K = barycentric_subdivide(P);
    ComplexView KV = ComplexView::from_poset(K);

    CMReport rep;
    std::vector<std::vector<int>> simplices;
    simplices.push_back({});  // the empty simplex
    for (const auto& level : KV.faces)
        for (const auto& f : level) simplices.push_back(f);

    for (const auto& s : simplices) {
        ComplexView L = link_of(KV, s);
        int ld = L.dim();
        if (ld <= 0) continue;  // nothing below the top dimension to check
        HomologyGroups H = homology(L, coeffs);
        for (int d = -1; d < ld; ++d) {
            if (H.betti_of(d) == 0 && H.torsion_of(d).empty()) continue;
            rep.witnesses.push_back({simplex_name(KV, s), d, group_to_string(H, d)});
        }
    }
    rep.is_cm = rep.witnesses.empty();
    return rep;
}

}  // namespace tg
