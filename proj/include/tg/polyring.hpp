#pragma once

#include <map>
#include <string>
#include <vector>

#include "tg/common.hpp"
#include "tg/exactla.hpp"

namespace tg {

// Exponent vectors compared in graded lexicographic order (total degree
// first); printing iterates from the largest term down.
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over Z in variables t1..tn.  Degrees here
// are algebraic; the cohomological degree of a homogeneous element is twice
// its algebraic degree and appears only at API boundaries.
struct Poly {
    int nvars = 0;
    std::map<std::vector<int>, Int, GrlexLess> terms;  // exponent -> nonzero coeff

    Poly() = default;
    explicit Poly(int n) : nvars(n) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Int& c);
    static Poly variable(int nvars, int i);                 // t_{i+1}
    static Poly linear(const IntVector& coeffs);            // sum c_j t_j

    bool is_zero() const { return terms.empty(); }
    int degree() const;  // algebraic; -1 for zero
    void add_term(const std::vector<int>& expo, const Int& c);
    bool operator==(const Poly&) const = default;
};

Poly add(const Poly& f, const Poly& g);
Poly sub(const Poly& f, const Poly& g);
Poly neg(const Poly& f);
Poly mul(const Poly& f, const Poly& g);
Poly mul_scalar(const Poly& f, const Int& c);
Poly poly_pow(const Poly& f, int k);

// Replace t_i by the linear form given by row i of M (exact expansion).
Poly substitute_linear(const Poly& f, const IntMatrix& M);

// The linear form sum a_j t_j used as a congruence modulus or axial value.
struct LinearForm {
    IntVector coeffs;
    bool is_zero() const;
    bool is_primitive() const;
};

// f == g modulo the ideal (l).  Performed by a unimodular change of
// variables sending l to the first coordinate and checking that the first
// variable divides f - g.
bool congruent_mod_linear(const Poly& f, const Poly& g, const LinearForm& l);

// Same check with a caller-supplied unimodular completion M (first row of M
// must be l); exposed so tests can confirm independence of the completion.
bool congruent_mod_linear_using(const Poly& f, const Poly& g, const IntMatrix& M);

std::string to_string(const Poly& f, const std::string& varname = "t");

// Parse the rendering produced by to_string (integers, t<i>, *, ^, +, -).
Poly parse_poly(const std::string& text, int nvars, const std::string& varname = "t");

}  // namespace tg
