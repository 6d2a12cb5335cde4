#include "tg/facering.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tg {

int ChainMonomial::cohom_degree(const SimplicialPoset& P) const
{
    int d = 0;
    for (auto [e, a] : factors) d += 2 * a * P.elem(e).rank;
    return d;
}

RingElement RingElement::one()
{
    RingElement x;
    x.terms.emplace(ChainMonomial{}, 1);
    return x;
}

RingElement RingElement::generator(int elem, const Int& coeff)
{
    RingElement x;
    if (coeff != 0) x.terms.emplace(ChainMonomial{{{elem, 1}}}, coeff);
    return x;
}

void RingElement::add_term(const ChainMonomial& m, const Int& c)
{
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

RingElement ring_add(const RingElement& x, const RingElement& y)
{
    RingElement r = x;
    for (const auto& [m, c] : y.terms) r.add_term(m, c);
    return r;
}

RingElement ring_sub(const RingElement& x, const RingElement& y)
{
    RingElement r = x;
    for (const auto& [m, c] : y.terms) r.add_term(m, -c);
    return r;
}

RingElement ring_scale(const RingElement& x, const Int& c)
{
    RingElement r;
    if (c == 0) return r;
    for (const auto& [m, cf] : x.terms) r.terms.emplace(m, cf * c);
    return r;
}

namespace {

using Factors = std::vector<std::pair<int, int>>;  // (elem, exponent)

// keep factors ordered by (rank, element); merge exponents of equal elements
void insert_factor(const SimplicialPoset& P, Factors& f, int elem, int expo)
{
    auto key = std::make_pair(P.elem(elem).rank, elem);
    auto it = std::find_if(f.begin(), f.end(), [&](const auto& pr) {
        return std::make_pair(P.elem(pr.first).rank, pr.first) >= key;
    });
    if (it != f.end() && it->first == elem) {
        it->second += expo;
    } else {
        f.insert(it, {elem, expo});
    }
}

// positions i such that factors i and i+1 are incomparable
std::vector<size_t> incomparable_positions(const SimplicialPoset& P, const Factors& f)
{
    std::vector<size_t> pos;
    for (size_t i = 0; i + 1 < f.size(); ++i)
        if (!P.leq(f[i].first, f[i + 1].first)) pos.push_back(i);
    return pos;
}

}  // namespace

RingElement straighten_mul(const SimplicialPoset& P, const RingElement& x,
                           const RingElement& y,
                           const std::function<size_t(size_t)>& choose_pair)
{
    RingElement result;
    std::vector<std::pair<Factors, Int>> work;
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            Factors f = mx.factors;
            for (auto [e, a] : my.factors) insert_factor(P, f, e, a);
            work.emplace_back(std::move(f), cx * cy);
        }

    while (!work.empty()) {
        auto [f, c] = std::move(work.back());
        work.pop_back();
        std::vector<size_t> pos = incomparable_positions(P, f);
        if (pos.empty()) {
            result.add_term(ChainMonomial{f}, c);
            continue;
        }
        size_t pick = pos[choose_pair ? choose_pair(pos.size()) % pos.size() : 0];
        int s = f[pick].first, t = f[pick + 1].first;
        std::vector<int> joins = P.join_set(s, t);
        if (joins.empty()) continue;  // v_s v_t = 0
        std::vector<int> meets = P.meet_set(s, t);
        if (meets.size() != 1)
            throw internal_error("straighten: meet not unique although join is non-empty");
        int meet = meets[0];

        Factors base = f;
        auto drop_one = [&](int elem) {
            for (auto it = base.begin(); it != base.end(); ++it)
                if (it->first == elem) {
                    if (--it->second == 0) base.erase(it);
                    return;
                }
            throw internal_error("straighten: factor vanished");
        };
        drop_one(s);
        drop_one(t);
        if (meet != SimplicialPoset::bottom) insert_factor(P, base, meet, 1);
        for (int eta : joins) {
            Factors g = base;
            insert_factor(P, g, eta, 1);
            work.emplace_back(std::move(g), c);
        }
    }
    return result;
}

RingElement ring_pow(const SimplicialPoset& P, const RingElement& x, int k)
{
    if (k < 0) throw validation_error("ring_pow: negative exponent");
    RingElement r = RingElement::one();
    for (int i = 0; i < k; ++i) r = straighten_mul(P, r, x);
    return r;
}

Poly restriction(const SimplicialPoset& P, const RingElement& x, int sigma)
{
    static const std::vector<int> empty;
    const std::vector<int>& vars =
        sigma == SimplicialPoset::bottom ? empty : P.atoms(sigma);
    std::map<int, int> var_of;
    for (size_t k = 0; k < vars.size(); ++k) var_of[vars[k]] = int(k);

    Poly r(int(vars.size()));
    for (const auto& [m, c] : x.terms) {
        bool alive = true;
        std::vector<int> expo(vars.size(), 0);
        for (auto [e, a] : m.factors) {
            if (!P.leq(e, sigma)) {
                alive = false;
                break;
            }
            for (int v : P.atoms(e)) expo[var_of.at(v)] += a;
        }
        if (alive) r.add_term(expo, c);
    }
    return r;
}

std::vector<std::pair<int, Poly>> global_restriction(const SimplicialPoset& P,
                                                     const RingElement& x)
{
    std::vector<std::pair<int, Poly>> out;
    for (int s : P.maximal_elements()) out.emplace_back(s, restriction(P, x, s));
    return out;
}

Int hilbert_function(const SimplicialPoset& P, int d)
{
    if (d < 0) throw validation_error("hilbert_function: negative degree");
    if (d == 0) return 1;
    // count[e][w] = chain monomials of weight w whose top factor is e
    std::vector<std::vector<Int>> count(P.size(), std::vector<Int>(d + 1, 0));
    // process by ascending rank so lower tops are ready
    std::vector<int> order(P.size());
    for (int i = 0; i < P.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return P.elem(a).rank < P.elem(b).rank; });
    for (int e : order) {
        const int rk = P.elem(e).rank;
        for (int w = rk; w <= d; ++w) {
            Int c = 0;
            for (int a = 1; a * rk <= w; ++a) {
                int rem = w - a * rk;
                if (rem == 0) c += 1;
                for (int r = 0; r < P.size(); ++r)
                    if (r != e && P.leq(r, e) && rem >= 1) c += count[r][rem];
            }
            count[e][w] = c;
        }
    }
    Int total = 0;
    for (int e = 0; e < P.size(); ++e) total += count[e][d];
    return total;
}

std::vector<ChainMonomial> chain_monomials_of_degree(const SimplicialPoset& P, int d)
{
    std::vector<ChainMonomial> out;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    Factors cur;
    auto rec = [&](auto&& self, int last, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(ChainMonomial{cur});
            return;
        }
        for (int e = 0; e < P.size(); ++e) {
            if (last >= 0 && (e == last || !P.leq(last, e))) continue;
            int rk = P.elem(e).rank;
            for (int a = 1; a * rk <= remaining; ++a) {
                cur.push_back({e, a});
                self(self, e, remaining - a * rk);
                cur.pop_back();
            }
        }
    };
    rec(rec, -1, d);
    std::sort(out.begin(), out.end());
    return out;
}

RingElement LinearElement::as_ring_element() const
{
    RingElement x;
    for (const auto& [v, c] : coeffs)
        if (c != 0) x.add_term(ChainMonomial{{{v, 1}}}, c);
    return x;
}

LsopReport lsop_check(const SimplicialPoset& P, const std::vector<LinearElement>& theta,
                      const Coeffs& k)
{
    const int n = P.rank_max();
    if (int(theta.size()) != n)
        throw validation_error("lsop_check: expected " + std::to_string(n) + " elements, got " +
                               std::to_string(theta.size()));
    for (const auto& th : theta)
        for (const auto& [v, c] : th.coeffs) {
            (void)c;
            if (v < 0 || v >= P.size() || P.elem(v).rank != 1)
                throw validation_error("lsop_check: linear element supported off the vertices");
        }
    LsopReport rep;
    for (int s = 0; s < P.size(); ++s) {
        const std::vector<int>& at = P.atoms(s);
        IntMatrix A(n, int(at.size()));
        for (int j = 0; j < n; ++j)
            for (size_t i = 0; i < at.size(); ++i) {
                auto it = theta[j].coeffs.find(at[i]);
                if (it != theta[j].coeffs.end()) A.at(j, int(i)) = it->second;
            }
        bool ok;
        if (k.kind == Coeffs::Z) {
            auto div = smith_normal_form(A).divisors();
            ok = int(div.size()) == int(at.size()) &&
                 std::all_of(div.begin(), div.end(), [](const Int& d) { return d == 1; });
        } else {
            ok = rank_over(A, k) == int(at.size());
        }
        if (!ok) {
            rep.failing = s;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

Int quotient_graded_dim(const SimplicialPoset& P, const std::vector<LinearElement>& theta,
                        int d, const Coeffs& k)
{
    if (!k.is_field())
        throw validation_error("quotient_graded_dim: field coefficients required");
    if (!lsop_check(P, theta, k).ok)
        throw validation_error("quotient_graded_dim: theta is not an lsop");
    std::vector<ChainMonomial> basis = chain_monomials_of_degree(P, d);
    if (d == 0) return 1;
    std::map<ChainMonomial, int> col;
    for (size_t i = 0; i < basis.size(); ++i) col[basis[i]] = int(i);

    std::vector<ChainMonomial> lower = chain_monomials_of_degree(P, d - 1);
    std::vector<std::vector<Int>> rows;
    for (const auto& th : theta) {
        RingElement t = th.as_ring_element();
        for (const auto& m : lower) {
            RingElement mm;
            mm.terms.emplace(m, 1);
            RingElement prod = straighten_mul(P, t, mm);
            std::vector<Int> row(basis.size(), 0);
            for (const auto& [mono, c] : prod.terms) row[col.at(mono)] = c;
            rows.push_back(std::move(row));
        }
    }
    IntMatrix A(int(rows.size()), int(basis.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) A.at(int(i), int(j)) = rows[i][j];
    return Int(int(basis.size()) - rank_over(A, k));
}

RingElement BetaMap::apply(const RingElement& x) const
{
    RingElement out;
    for (const auto& [m, c] : x.terms) {
        RingElement prod = RingElement::one();
        for (auto [e, a] : m.factors)
            for (int i = 0; i < a; ++i)
                prod = straighten_mul(target, prod, generator_images.at(e));
        out = ring_add(out, ring_scale(prod, c));
    }
    return out;
}

BetaMap beta_map(const SimplicialPoset& P, int sigma)
{
    if (sigma == SimplicialPoset::bottom)
        throw validation_error("beta_map: sigma must not be the bottom");
    if (!is_simplicial_complex(star(P, sigma)))
        throw validation_error("beta_map: the star of '" + P.elem(sigma).id +
                               "' is not a simplicial complex");
    StellarResult st = stellar_subdivide(P, sigma);
    BetaMap beta;
    beta.source = &P;
    beta.target = std::move(st.poset);
    beta.new_vertex_id = st.new_vertex_id;
    beta.provenance = std::move(st.provenance);
    const SimplicialPoset& Q = beta.target;
    const int v = Q.require(beta.new_vertex_id);

    std::vector<bool> in_star(P.size());
    for (int t = 0; t < P.size(); ++t) in_star[t] = !P.join_set(sigma, t).empty();

    beta.generator_images.assign(P.size(), RingElement::zero());
    std::vector<int> order(P.size());
    for (int i = 0; i < P.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return P.elem(a).rank < P.elem(b).rank; });
    for (int t : order) {
        const auto& id = P.elem(t).id;
        if (P.elem(t).rank == 1) {
            if (t == sigma) {
                beta.generator_images[t] = RingElement::generator(v);
            } else if (P.leq(t, sigma)) {
                beta.generator_images[t] =
                    ring_add(RingElement::generator(v), RingElement::generator(Q.require(id)));
            } else {
                beta.generator_images[t] = RingElement::generator(Q.require(id));
            }
            continue;
        }
        if (!in_star[t]) {
            beta.generator_images[t] = RingElement::generator(Q.require(id));
            continue;
        }
        // expand through the vertex product: prod v_i = v_t + sum of the
        // other elements with the same atom set, all outside the star
        RingElement prod = RingElement::one();
        for (int a : P.atoms(t))
            prod = straighten_mul(Q, prod, beta.generator_images[a]);
        for (int h = 0; h < P.size(); ++h) {
            if (h == t || P.atoms(h) != P.atoms(t)) continue;
            if (in_star[h])
                throw internal_error("beta_map: same-atom twin inside the star");
            prod = ring_sub(prod, RingElement::generator(Q.require(P.elem(h).id)));
        }
        beta.generator_images[t] = std::move(prod);
    }
    return beta;
}

std::string to_string(const SimplicialPoset& P, const RingElement& x)
{
    if (x.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : x.terms) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool coeff_shown = (mag != 1) || m.factors.empty();
        if (coeff_shown) out << mag.str();
        bool need_star = coeff_shown;
        for (auto [e, a] : m.factors) {
            if (need_star) out << "*";
            out << "v[" << P.elem(e).id << "]";
            if (a > 1) out << "^" << a;
            need_star = true;
        }
    }
    return out.str();
}

namespace {

struct RingParser {
    const SimplicialPoset& P;
    const std::string& s;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw validation_error("ring expression parse error at offset " +
                               std::to_string(pos) + ": " + what);
    }

    Int parse_int()
    {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    RingElement parse_expr()
    {
        RingElement r;
        bool negate = false;
        skip_ws();
        if (eat('-')) negate = true;
        else eat('+');
        for (;;) {
            RingElement t = parse_term();
            r = negate ? ring_sub(r, t) : ring_add(r, t);
            skip_ws();
            if (eat('+')) negate = false;
            else if (eat('-')) negate = true;
            else break;
        }
        return r;
    }

    RingElement parse_term()
    {
        RingElement t = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) t = straighten_mul(P, t, parse_factor());
            else break;
        }
        return t;
    }

    RingElement parse_factor()
    {
        RingElement base = parse_atom();
        skip_ws();
        if (eat('^')) {
            Int k = parse_int();
            base = ring_pow(P, base, int(k));
        }
        return base;
    }

    RingElement parse_atom()
    {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            return ring_scale(RingElement::one(), parse_int());
        }
        if (pos < s.size() && s[pos] == 'v') {
            ++pos;
            if (!eat('[')) fail("expected [ after v");
            size_t start = pos;
            while (pos < s.size() && s[pos] != ']') ++pos;
            if (pos == s.size()) fail("unterminated v[...]");
            std::string id = s.substr(start, pos - start);
            ++pos;
            return RingElement::generator(P.require(id));
        }
        if (eat('(')) {
            RingElement r = parse_expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        fail("expected term");
    }
};

}  // namespace

RingElement parse_ring_element(const SimplicialPoset& P, const std::string& text)
{
    RingParser p{P, text, 0};
    RingElement r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace tg
