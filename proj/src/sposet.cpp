#include "tg/sposet.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tg {

namespace {

std::vector<Int> poly_mul1(const std::vector<Int>& a, const std::vector<Int>& b)
{
    std::vector<Int> c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// (t-1)^k as coefficient vector, index = power of t
std::vector<Int> t_minus_1_pow(int k)
{
    std::vector<Int> r{1};
    const std::vector<Int> base{-1, 1};
    for (int i = 0; i < k; ++i) r = poly_mul1(r, base);
    return r;
}

}  // namespace

SimplicialPoset SimplicialPoset::validate(int rank_max, std::vector<Elem> elems)
{
    SimplicialPoset P;
    P.rank_max_ = rank_max;
    P.elems_ = std::move(elems);
    const int m = int(P.elems_.size());

    int max_rank_seen = 0;
    for (int i = 0; i < m; ++i) {
        const Elem& e = P.elems_[i];
        if (e.id.empty()) throw validation_error("poset: element with empty id");
        if (!P.index_.emplace(e.id, i).second)
            throw validation_error("poset: duplicate element id '" + e.id + "'");
        if (e.rank < 1 || e.rank > rank_max)
            throw validation_error("poset: element '" + e.id + "' has rank " +
                                   std::to_string(e.rank) + " outside 1.." +
                                   std::to_string(rank_max));
        max_rank_seen = std::max(max_rank_seen, e.rank);
    }
    if (m > 0 && max_rank_seen != rank_max)
        throw validation_error("poset: rank_max is " + std::to_string(rank_max) +
                               " but the largest element rank is " +
                               std::to_string(max_rank_seen));
    if (m == 0 && rank_max != 0)
        throw validation_error("poset: empty poset must have rank_max 0");

    for (int i = 0; i < m; ++i) {
        const Elem& e = P.elems_[i];
        for (int c : e.covers) {
            if (c < 0 || c >= m)
                throw validation_error("poset: element '" + e.id + "' covers a missing element");
            if (P.elems_[c].rank != e.rank - 1)
                throw validation_error("poset: cover pair ('" + P.elems_[c].id + "','" + e.id +
                                       "') does not drop rank by one");
        }
        if (e.rank == 1 && !e.covers.empty())
            throw validation_error("poset: rank-1 element '" + e.id +
                                   "' must cover only the bottom");
    }

    // order by transitive closure, in rank order
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return P.elems_[a].rank < P.elems_[b].rank;
    });
    P.below_.assign(m, boost::dynamic_bitset<>(m));
    for (int i : order) {
        P.below_[i].set(i);
        for (int c : P.elems_[i].covers) P.below_[i] |= P.below_[c];
    }

    P.atoms_.assign(m, {});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (P.elems_[j].rank == 1 && P.below_[i][j]) P.atoms_[i].push_back(j);

    // boolean lower intervals: |atoms| = rank, and the atom-set map is a
    // bijection from [0,s] onto the power set of atoms(s)
    for (int i = 0; i < m; ++i) {
        const Elem& e = P.elems_[i];
        if (int(P.atoms_[i].size()) != e.rank)
            throw validation_error("poset: element '" + e.id + "' has rank " +
                                   std::to_string(e.rank) + " but " +
                                   std::to_string(P.atoms_[i].size()) + " atoms");
        std::set<std::vector<int>> seen;
        seen.insert({});  // the bottom
        int count = 1;
        for (int j = 0; j < m; ++j) {
            if (!P.below_[i][j]) continue;
            if (!seen.insert(P.atoms_[j]).second)
                throw validation_error("poset: lower interval of '" + e.id +
                                       "' is not boolean (repeated atom set below it)");
            ++count;
        }
        if (count != (1 << e.rank))
            throw validation_error("poset: lower interval of '" + e.id + "' has " +
                                   std::to_string(count) + " elements, expected 2^" +
                                   std::to_string(e.rank));
    }
    return P;
}

int SimplicialPoset::index_of(const std::string& id) const
{
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int SimplicialPoset::require(const std::string& id) const
{
    int i = index_of(id);
    if (i < 0) throw validation_error("poset: no element with id '" + id + "'");
    return i;
}

bool SimplicialPoset::leq(int a, int b) const
{
    if (a == bottom) return true;
    if (b == bottom) return false;
    return below_[b][a];
}

std::vector<int> SimplicialPoset::elements_of_rank(int r) const
{
    std::vector<int> v;
    for (int i = 0; i < size(); ++i)
        if (elems_[i].rank == r) v.push_back(i);
    return v;
}

std::vector<int> SimplicialPoset::upper_set(int i) const
{
    std::vector<int> v;
    for (int j = 0; j < size(); ++j)
        if (leq(i, j)) v.push_back(j);
    return v;
}

std::vector<int> SimplicialPoset::maximal_elements() const
{
    std::vector<int> v;
    for (int i = 0; i < size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < size() && maximal; ++j)
            if (j != i && leq(i, j)) maximal = false;
        if (maximal) v.push_back(i);
    }
    return v;
}

std::vector<int> SimplicialPoset::join_set(int a, int b) const
{
    std::vector<int> ub;
    for (int c = 0; c < size(); ++c)
        if (leq(a, c) && leq(b, c)) ub.push_back(c);
    std::vector<int> minimal;
    for (int c : ub) {
        bool is_min = true;
        for (int d : ub)
            if (d != c && leq(d, c)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(c);
    }
    return minimal;
}

std::vector<int> SimplicialPoset::meet_set(int a, int b) const
{
    std::vector<int> lb;
    for (int c = 0; c < size(); ++c)
        if (leq(c, a) && leq(c, b)) lb.push_back(c);
    std::vector<int> maximal;
    for (int c : lb) {
        bool is_max = true;
        for (int d : lb)
            if (d != c && leq(c, d)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(c);
    }
    if (maximal.empty()) maximal.push_back(bottom);
    return maximal;
}

std::vector<int> SimplicialPoset::f_vector() const
{
    std::vector<int> f(rank_max_ + 1, 0);
    f[0] = 1;
    for (const Elem& e : elems_) ++f[e.rank];
    return f;
}

FHVector fh_vector(const SimplicialPoset& P)
{
    const int n = P.rank_max();
    FHVector r;
    std::vector<int> f = P.f_vector();
    r.f.assign(f.begin(), f.end());
    std::vector<Int> acc(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        std::vector<Int> term = t_minus_1_pow(n - i);
        for (size_t k = 0; k < term.size(); ++k) acc[k] += r.f[i] * term[k];
    }
    r.h.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) r.h[i] = acc[n - i];
    return r;
}

bool is_simplicial_complex(const SimplicialPoset& P)
{
    for (int a = 0; a < P.size(); ++a)
        for (int b = a + 1; b < P.size(); ++b)
            if (P.join_set(a, b).size() > 1) return false;
    return true;
}

Int chi_upper(const SimplicialPoset& P, int s)
{
    Int chi = 0;
    auto sign = [](int rank) { return ((rank - 1) % 2 + 2) % 2 == 0 ? 1 : -1; };
    if (s == SimplicialPoset::bottom) chi += sign(0);
    for (int j = 0; j < P.size(); ++j)
        if (P.leq(s, j)) chi += sign(P.elem(j).rank);
    return chi;
}

DehnSommerville dehn_sommerville(const SimplicialPoset& P)
{
    const int n = P.rank_max();
    DehnSommerville r;
    FHVector fh = fh_vector(P);
    r.defect.assign(n + 1, 0);
    r.lhs.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        r.defect[i] = fh.h[n - i] - fh.h[i];
        r.lhs[i] = r.defect[i];
    }
    r.rhs.assign(n + 1, 0);
    const Int sgn_n = (n % 2 == 0) ? 1 : -1;
    auto add_term = [&](int rank, const Int& chi) {
        Int w = 1 + sgn_n * chi;
        if (w == 0) return;
        std::vector<Int> pw = t_minus_1_pow(n - rank);
        for (size_t k = 0; k < pw.size(); ++k) r.rhs[k] += w * pw[k];
    };
    add_term(0, chi_upper(P, SimplicialPoset::bottom));
    for (int i = 0; i < P.size(); ++i) add_term(P.elem(i).rank, chi_upper(P, i));
    r.equal = (r.lhs == r.rhs);
    return r;
}

namespace {

// Build the induced poset on a lower subset of P's elements, ids preserved.
SimplicialPoset induced_lower_set(const SimplicialPoset& P, const std::vector<bool>& in)
{
    std::vector<int> newindex(P.size(), -1);
    std::vector<SimplicialPoset::Elem> elems;
    int rank_max = 0;
    for (int i = 0; i < P.size(); ++i) {
        if (!in[i]) continue;
        newindex[i] = int(elems.size());
        elems.push_back({P.elem(i).id, P.elem(i).rank, {}});
        rank_max = std::max(rank_max, P.elem(i).rank);
    }
    for (int i = 0; i < P.size(); ++i) {
        if (!in[i]) continue;
        for (int c : P.elem(i).covers) {
            if (newindex[c] < 0)
                throw internal_error("induced_lower_set: subset is not a lower set");
            elems[newindex[i]].covers.push_back(newindex[c]);
        }
    }
    return SimplicialPoset::validate(rank_max, std::move(elems));
}

}  // namespace

SimplicialPoset star(const SimplicialPoset& P, int s)
{
    std::vector<bool> in(P.size());
    for (int t = 0; t < P.size(); ++t) in[t] = !P.join_set(s, t).empty();
    return induced_lower_set(P, in);
}

SimplicialPoset boundary_star(const SimplicialPoset& P, int s)
{
    if (s == SimplicialPoset::bottom)
        throw validation_error("boundary_star: s must not be the bottom");
    std::vector<bool> in(P.size());
    for (int t = 0; t < P.size(); ++t)
        in[t] = !P.leq(s, t) && !P.join_set(s, t).empty();
    return induced_lower_set(P, in);
}

SimplicialPoset link(const SimplicialPoset& P, int s)
{
    if (s == SimplicialPoset::bottom)
        throw validation_error("link: s must not be the bottom");
    std::vector<bool> in(P.size());
    for (int t = 0; t < P.size(); ++t) {
        auto meets = P.meet_set(s, t);
        in[t] = !P.join_set(s, t).empty() &&
                meets.size() == 1 && meets[0] == SimplicialPoset::bottom;
    }
    return induced_lower_set(P, in);
}

namespace {

// The unique element of join_set(s, rho) lying below ub.
int unique_join_below(const SimplicialPoset& P, int s, int rho, int ub)
{
    int found = -2;
    for (int j : P.join_set(s, rho))
        if (P.leq(j, ub)) {
            if (found != -2) throw internal_error("stellar: join below upper bound not unique");
            found = j;
        }
    if (found == -2) throw internal_error("stellar: no join element below upper bound");
    return found;
}

}  // namespace

StellarResult stellar_subdivide(const SimplicialPoset& P, int s)
{
    if (s == SimplicialPoset::bottom)
        throw validation_error("stellar_subdivide: cannot subdivide at the bottom");
    const std::string vs = "v@" + P.elem(s).id;

    std::vector<SimplicialPoset::Elem> elems;
    std::map<int, int> old2new;  // surviving old index -> new index
    for (int i = 0; i < P.size(); ++i) {
        if (P.leq(s, i)) continue;
        old2new[i] = int(elems.size());
        elems.push_back({P.elem(i).id, P.elem(i).rank, {}});
    }
    for (auto [i, ni] : old2new)
        for (int c : P.elem(i).covers) elems[ni].covers.push_back(old2new.at(c));

    // new cells (rho, eta): rho survives or is the bottom, eta in join(s, rho)
    std::map<std::pair<int, int>, int> cell_index;
    StellarResult out;
    auto cell_id = [&](int rho, int eta, size_t join_size) {
        if (rho == SimplicialPoset::bottom) return vs;
        std::string id = P.elem(rho).id + "*" + vs;
        if (join_size > 1) id += "@" + P.elem(eta).id;
        return id;
    };
    std::vector<std::pair<int, int>> cells;  // (rho, eta)
    {
        auto add_cells_for = [&](int rho) {
            auto js = P.join_set(s, rho);
            for (int eta : js) {
                cell_index[{rho, eta}] = int(elems.size());
                int rk = (rho == SimplicialPoset::bottom ? 0 : P.elem(rho).rank) + 1;
                std::string id = cell_id(rho, eta, js.size());
                elems.push_back({id, rk, {}});
                cells.emplace_back(rho, eta);
                out.provenance[id] = {
                    rho == SimplicialPoset::bottom ? std::string() : P.elem(rho).id,
                    P.elem(eta).id};
            }
        };
        add_cells_for(SimplicialPoset::bottom);
        for (auto [i, ni] : old2new) {
            (void)ni;
            if (!P.join_set(s, i).empty()) add_cells_for(i);
        }
    }
    for (auto [rho, eta] : cells) {
        int ni = cell_index.at({rho, eta});
        if (rho == SimplicialPoset::bottom) continue;  // the new vertex covers only 0
        elems[ni].covers.push_back(old2new.at(rho));
        if (P.elem(rho).rank == 1) {
            elems[ni].covers.push_back(cell_index.at({SimplicialPoset::bottom, s}));
        } else {
            for (int rho2 : P.elem(rho).covers) {
                int eta2 = unique_join_below(P, s, rho2, eta);
                elems[ni].covers.push_back(cell_index.at({rho2, eta2}));
            }
        }
    }

    int rank_max = 0;
    for (const auto& e : elems) rank_max = std::max(rank_max, e.rank);
    out.poset = SimplicialPoset::validate(rank_max, std::move(elems));
    out.new_vertex_id = vs;
    return out;
}

SimplicialPoset barycentric_subdivide(const SimplicialPoset& P)
{
    SimplicialPoset cur = P;
    for (int r = P.rank_max(); r >= 2; --r) {
        std::vector<std::string> ids;
        for (int i = 0; i < P.size(); ++i)
            if (P.elem(i).rank == r) ids.push_back(P.elem(i).id);
        std::sort(ids.begin(), ids.end());
        for (const std::string& id : ids) {
            int s = cur.index_of(id);
            if (s < 0) throw internal_error("barycentric: original element vanished early");
            cur = stellar_subdivide(cur, s).poset;
        }
    }
    return cur;
}

SimplicialPoset order_complex(const SimplicialPoset& P)
{
    // chains of explicit elements, each chain one simplex
    std::vector<std::vector<int>> chains;
    std::vector<int> stack;
    auto extend = [&](auto&& self, int last) -> void {
        chains.push_back(stack);
        for (int j = 0; j < P.size(); ++j) {
            if (j == last || !P.leq(last, j)) continue;
            stack.push_back(j);
            self(self, j);
            stack.pop_back();
        }
    };
    for (int i = 0; i < P.size(); ++i) {
        stack = {i};
        extend(extend, i);
    }
    auto chain_id = [&](const std::vector<int>& ch) {
        std::string id;
        for (size_t k = 0; k < ch.size(); ++k) {
            if (k) id += '<';
            id += P.elem(ch[k]).id;
        }
        return id;
    };
    std::map<std::string, int> index;
    std::vector<SimplicialPoset::Elem> elems;
    int rank_max = 0;
    for (const auto& ch : chains) {
        std::string id = chain_id(ch);
        index[id] = int(elems.size());
        elems.push_back({id, int(ch.size()), {}});
        rank_max = std::max<int>(rank_max, int(ch.size()));
    }
    for (const auto& ch : chains) {
        if (ch.size() < 2) continue;
        int me = index.at(chain_id(ch));
        for (size_t drop = 0; drop < ch.size(); ++drop) {
            std::vector<int> sub;
            for (size_t k = 0; k < ch.size(); ++k)
                if (k != drop) sub.push_back(ch[k]);
            elems[me].covers.push_back(index.at(chain_id(sub)));
        }
    }
    return SimplicialPoset::validate(rank_max, std::move(elems));
}

PseudomanifoldReport is_pseudomanifold(const SimplicialPoset& P)
{
    const int n = P.rank_max();
    PseudomanifoldReport r;
    if (P.size() == 0 || n < 1) {
        r.witness = "empty poset";
        return r;
    }
    for (int i : P.maximal_elements())
        if (P.elem(i).rank != n) {
            r.witness = "not pure: maximal element '" + P.elem(i).id + "' has rank " +
                        std::to_string(P.elem(i).rank);
            return r;
        }
    std::vector<int> tops = P.elements_of_rank(n);
    // walls: rank n-1 elements (the bottom itself when n = 1)
    std::vector<int> walls =
        n == 1 ? std::vector<int>{SimplicialPoset::bottom} : P.elements_of_rank(n - 1);
    std::map<int, std::vector<int>> wall_tops;
    for (int w : walls) {
        std::vector<int>& above = wall_tops[w];
        for (int t : tops)
            if (w == SimplicialPoset::bottom ? true : (P.leq(w, t) && w != t)) above.push_back(t);
        if (above.size() != 2) {
            r.witness = "wall '" +
                        (w == SimplicialPoset::bottom ? std::string("0") : P.elem(w).id) +
                        "' lies under " + std::to_string(above.size()) +
                        " top elements, expected 2";
            return r;
        }
    }
    // strong connectivity through walls
    std::map<int, std::vector<int>> adj;
    for (auto& [w, ab] : wall_tops) {
        (void)w;
        adj[ab[0]].push_back(ab[1]);
        adj[ab[1]].push_back(ab[0]);
    }
    std::set<int> seen;
    std::vector<int> queue{tops[0]};
    seen.insert(tops[0]);
    while (!queue.empty()) {
        int t = queue.back();
        queue.pop_back();
        for (int u : adj[t])
            if (seen.insert(u).second) queue.push_back(u);
    }
    if (seen.size() != tops.size()) {
        for (int t : tops)
            if (!seen.count(t)) {
                r.witness = "top element '" + P.elem(t).id +
                            "' is not reachable through rank n-1 walls";
                return r;
            }
    }
    r.ok = true;
    return r;
}

std::optional<std::map<std::string, int>> orient_pseudomanifold(const SimplicialPoset& P)
{
    auto rep = is_pseudomanifold(P);
    if (!rep.ok) throw validation_error("orient: not a pseudomanifold: " + rep.witness);
    const int n = P.rank_max();
    std::vector<int> tops = P.elements_of_rank(n);
    std::map<int, int> sign;  // top index -> +-1

    // induced sign of a wall w in the boundary of top t: position of the
    // omitted atom in the sorted atom list of t
    auto rel = [&](int w, int t) {
        const std::vector<int>& at = P.atoms(t);
        std::set<int> ws;
        if (w != SimplicialPoset::bottom)
            ws.insert(P.atoms(w).begin(), P.atoms(w).end());
        int pos = -1;
        for (size_t k = 0; k < at.size(); ++k)
            if (!ws.count(at[k])) {
                if (pos >= 0) throw internal_error("orient: wall omits several atoms");
                pos = int(k);
            }
        if (pos < 0) throw internal_error("orient: wall omits no atom");
        return pos % 2 == 0 ? 1 : -1;
    };

    std::vector<int> walls =
        n == 1 ? std::vector<int>{SimplicialPoset::bottom} : P.elements_of_rank(n - 1);
    std::map<int, std::array<int, 2>> wall_pair;
    for (int w : walls) {
        std::array<int, 2> pr{-1, -1};
        int c = 0;
        for (int t : tops)
            if (w == SimplicialPoset::bottom || P.leq(w, t)) pr[c++] = t;
        wall_pair[w] = pr;
    }
    sign[tops[0]] = 1;
    std::vector<int> queue{tops[0]};
    std::map<int, std::vector<int>> incident;  // top -> walls
    for (auto& [w, pr] : wall_pair) {
        incident[pr[0]].push_back(w);
        incident[pr[1]].push_back(w);
    }
    while (!queue.empty()) {
        int t = queue.back();
        queue.pop_back();
        for (int w : incident[t]) {
            auto [a, b] = wall_pair[w];
            int other = (a == t) ? b : a;
            // o(t) * rel(w,t) = -o(other) * rel(w,other)
            int need = -sign[t] * rel(w, t) * rel(w, other);
            auto it = sign.find(other);
            if (it == sign.end()) {
                sign[other] = need;
                queue.push_back(other);
            } else if (it->second != need) {
                return std::nullopt;
            }
        }
    }
    std::map<std::string, int> out;
    for (auto [t, sg] : sign) out[P.elem(t).id] = sg;
    return out;
}

namespace {

struct HasseGraph {
    std::vector<std::vector<int>> down, up;
    std::vector<long> color;
};

HasseGraph hasse(const SimplicialPoset& P)
{
    HasseGraph g;
    g.down.resize(P.size());
    g.up.resize(P.size());
    for (int i = 0; i < P.size(); ++i)
        for (int c : P.elem(i).covers) {
            g.down[i].push_back(c);
            g.up[c].push_back(i);
        }
    g.color.assign(P.size(), 0);
    for (int i = 0; i < P.size(); ++i) g.color[i] = P.elem(i).rank;
    return g;
}

// one round of color refinement across both graphs with a shared dictionary
bool refine(HasseGraph& a, HasseGraph& b)
{
    using Key = std::tuple<long, std::vector<long>, std::vector<long>>;
    std::map<Key, long> dict;
    auto key_of = [](const HasseGraph& g, int i) {
        std::vector<long> dn, up;
        for (int j : g.down[i]) dn.push_back(g.color[j]);
        for (int j : g.up[i]) up.push_back(g.color[j]);
        std::sort(dn.begin(), dn.end());
        std::sort(up.begin(), up.end());
        return Key{g.color[i], dn, up};
    };
    std::vector<Key> ka(a.color.size()), kb(b.color.size());
    for (size_t i = 0; i < a.color.size(); ++i) ka[i] = key_of(a, int(i));
    for (size_t i = 0; i < b.color.size(); ++i) kb[i] = key_of(b, int(i));
    for (const auto& k : ka) dict.emplace(k, long(dict.size()));
    for (const auto& k : kb) dict.emplace(k, long(dict.size()));
    bool changed = false;
    for (size_t i = 0; i < a.color.size(); ++i) {
        long nc = dict.at(ka[i]);
        if (nc != a.color[i]) changed = true;
        a.color[i] = nc;
    }
    for (size_t i = 0; i < b.color.size(); ++i) {
        long nc = dict.at(kb[i]);
        if (nc != b.color[i]) changed = true;
        b.color[i] = nc;
    }
    return changed;
}

}  // namespace

std::optional<std::map<std::string, std::string>> poset_isomorphic(
    const SimplicialPoset& P, const SimplicialPoset& Q,
    const std::map<std::string, std::string>& forced)
{
    if (P.size() != Q.size() || P.rank_max() != Q.rank_max()) return std::nullopt;
    HasseGraph a = hasse(P), b = hasse(Q);
    while (refine(a, b)) {}
    std::map<long, int> ca, cb;
    for (long c : a.color) ++ca[c];
    for (long c : b.color) ++cb[c];
    if (ca != cb) return std::nullopt;

    const int m = P.size();
    std::vector<int> match(m, -1), rmatch(m, -1);
    for (auto& [pid, qid] : forced) {
        int pi = P.require(pid), qi = Q.require(qid);
        if (a.color[pi] != b.color[qi]) return std::nullopt;
        match[pi] = qi;
        rmatch[qi] = pi;
    }

    // candidate lists per element, most constrained first
    std::vector<int> vertices;
    for (int i = 0; i < m; ++i)
        if (match[i] < 0) vertices.push_back(i);
    std::sort(vertices.begin(), vertices.end(),
              [&](int x, int y) { return ca[a.color[x]] < ca[a.color[y]]; });

    auto consistent = [&](int pi, int qi) {
        if (a.color[pi] != b.color[qi]) return false;
        auto check_side = [&](const std::vector<int>& pn, const std::vector<int>& qn) {
            // assigned neighbours must map onto neighbours, bijectively
            std::set<int> qset(qn.begin(), qn.end());
            for (int x : pn)
                if (match[x] >= 0 && !qset.count(match[x])) return false;
            std::set<int> pset(pn.begin(), pn.end());
            for (int y : qn)
                if (rmatch[y] >= 0 && !pset.count(rmatch[y])) return false;
            return true;
        };
        return check_side(a.down[pi], b.down[qi]) && check_side(a.up[pi], b.up[qi]);
    };

    auto dfs = [&](auto&& self, size_t k) -> bool {
        if (k == vertices.size()) return true;
        int pi = vertices[k];
        for (int qi = 0; qi < m; ++qi) {
            if (rmatch[qi] >= 0 || !consistent(pi, qi)) continue;
            match[pi] = qi;
            rmatch[qi] = pi;
            if (self(self, k + 1)) return true;
            match[pi] = -1;
            rmatch[qi] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (int i = 0; i < m; ++i) out[P.elem(i).id] = Q.elem(match[i]).id;
    return out;
}

}  // namespace tg
