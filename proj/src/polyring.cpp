#include "tg/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace tg {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const
{
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(int nvars, const Int& c)
{
    Poly f(nvars);
    if (c != 0) f.terms.emplace(std::vector<int>(nvars, 0), c);
    return f;
}

Poly Poly::variable(int nvars, int i)
{
    Poly f(nvars);
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    f.terms.emplace(e, 1);
    return f;
}

Poly Poly::linear(const IntVector& coeffs)
{
    Poly f(int(coeffs.size()));
    for (size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) {
            std::vector<int> e(coeffs.size(), 0);
            e[j] = 1;
            f.terms.emplace(e, coeffs[j]);
        }
    return f;
}

int Poly::degree() const
{
    if (terms.empty()) return -1;
    const auto& e = terms.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

void Poly::add_term(const std::vector<int>& expo, const Int& c)
{
    if (c == 0) return;
    auto it = terms.find(expo);
    if (it == terms.end()) {
        terms.emplace(expo, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

namespace {
void require_same_n(const Poly& f, const Poly& g, const char* op)
{
    if (f.nvars != g.nvars)
        throw validation_error(std::string(op) + ": mismatched variable count");
}
}  // namespace

Poly add(const Poly& f, const Poly& g)
{
    require_same_n(f, g, "poly add");
    Poly r = f;
    for (const auto& [e, c] : g.terms) r.add_term(e, c);
    return r;
}

Poly neg(const Poly& f)
{
    Poly r = f;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
}

Poly sub(const Poly& f, const Poly& g) { return add(f, neg(g)); }

Poly mul(const Poly& f, const Poly& g)
{
    require_same_n(f, g, "poly mul");
    Poly r(f.nvars);
    for (const auto& [ef, cf] : f.terms)
        for (const auto& [eg, cg] : g.terms) {
            std::vector<int> e(f.nvars);
            for (int i = 0; i < f.nvars; ++i) e[i] = ef[i] + eg[i];
            r.add_term(e, cf * cg);
        }
    return r;
}

Poly mul_scalar(const Poly& f, const Int& c)
{
    Poly r(f.nvars);
    if (c == 0) return r;
    for (const auto& [e, cf] : f.terms) r.terms.emplace(e, cf * c);
    return r;
}

Poly poly_pow(const Poly& f, int k)
{
    if (k < 0) throw validation_error("poly_pow: negative exponent");
    Poly r = Poly::constant(f.nvars, 1);
    for (int i = 0; i < k; ++i) r = mul(r, f);
    return r;
}

Poly substitute_linear(const Poly& f, const IntMatrix& M)
{
    if (M.rows != f.nvars || M.cols != f.nvars)
        throw validation_error("substitute_linear: matrix must be n x n");
    std::vector<Poly> images(f.nvars);
    for (int i = 0; i < f.nvars; ++i) images[i] = Poly::linear(M.row(i));
    Poly r(f.nvars);
    for (const auto& [e, c] : f.terms) {
        Poly term = Poly::constant(f.nvars, c);
        for (int i = 0; i < f.nvars; ++i)
            if (e[i] > 0) term = mul(term, poly_pow(images[i], e[i]));
        r = add(r, term);
    }
    return r;
}

bool LinearForm::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Int& c) { return c == 0; });
}

bool LinearForm::is_primitive() const { return gcd_of(coeffs) == 1; }

bool congruent_mod_linear_using(const Poly& f, const Poly& g, const IntMatrix& M)
{
    require_same_n(f, g, "congruent_mod_linear");
    Poly h = sub(f, g);
    if (h.is_zero()) return true;
    IntMatrix N = unimodular_inverse(M);
    Poly ht = substitute_linear(h, N);
    for (const auto& [e, c] : ht.terms) {
        (void)c;
        if (e[0] == 0) return false;
    }
    return true;
}

bool congruent_mod_linear(const Poly& f, const Poly& g, const LinearForm& l)
{
    if (!l.is_primitive())
        throw validation_error("congruent_mod_linear: modulus must be primitive");
    return congruent_mod_linear_using(f, g, extend_primitive(l.coeffs));
}

std::string to_string(const Poly& f, const std::string& varname)
{
    if (f.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // largest term first
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        bool coeff_shown = (mag != 1) || !any_var;
        if (coeff_shown) out << mag.str();
        bool need_star = coeff_shown;
        for (int i = 0; i < f.nvars; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << varname << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    size_t pos = 0;
    int nvars;
    const std::string& var;

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
        throw validation_error("polynomial parse error at offset " + std::to_string(pos) +
                               ": " + what);
    }

    Poly parse_expr()
    {
        Poly r = Poly::zero(nvars);
        bool negate = false;
        skip_ws();
        if (eat('-')) negate = true;
        else eat('+');
        for (;;) {
            Poly t = parse_term();
            r = add(r, negate ? neg(t) : t);
            skip_ws();
            if (eat('+')) negate = false;
            else if (eat('-')) negate = true;
            else break;
        }
        return r;
    }

    Poly parse_term()
    {
        Poly t = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) t = mul(t, parse_factor());
            else break;
        }
        return t;
    }

    Poly parse_factor()
    {
        Poly base = parse_atom();
        skip_ws();
        if (eat('^')) {
            int k = int(parse_int());
            base = poly_pow(base, k);
        }
        return base;
    }

    Int parse_int()
    {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    Poly parse_atom()
    {
        skip_ws();
        if (eat('(')) {
            Poly r = parse_expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            return Poly::constant(nvars, parse_int());
        }
        if (s.compare(pos, var.size(), var) == 0) {
            pos += var.size();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected variable index");
            int idx = std::stoi(s.substr(start, pos - start));
            if (idx < 1 || idx > nvars) fail("variable index out of range");
            return Poly::variable(nvars, idx - 1);
        }
        fail("expected term");
    }
};

}  // namespace

Poly parse_poly(const std::string& text, int nvars, const std::string& varname)
{
    PolyParser p{text, 0, nvars, varname};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace tg
