#pragma once

#include <vector>

#include "tg/common.hpp"

namespace tg {

using IntVector = std::vector<Int>;

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static IntMatrix identity(int n);
    IntVector row(int i) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntVector mat_vec(const IntMatrix& A, const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);

// Smith normal form U*A*V = D with U, V unimodular and D diagonal,
// d1 | d2 | ... >= 0.  Pivoting always picks a remaining entry of minimal
// absolute value, which keeps coefficient growth tame at the sizes we meet.
struct SNFDecomposition {
    IntMatrix U, D, V;
    int rank() const;
    std::vector<Int> divisors() const;  // nonzero diagonal entries
};

SNFDecomposition smith_normal_form(const IntMatrix& A);

Int determinant(const IntMatrix& A);  // square input, Bareiss elimination

// Inverse of a matrix with det = +-1; throws validation_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& A);

// True iff the n given length-n vectors form a basis of the integer lattice.
bool is_lattice_basis(const std::vector<IntVector>& vectors);

// Dual basis: <result[i], basis[j]> = delta_ij.  Requires a lattice basis.
std::vector<IntVector> dual_basis(const std::vector<IntVector>& basis);

// A unimodular matrix whose first row is v.  Requires gcd(v) = 1.
IntMatrix extend_primitive(const IntVector& v);

Int gcd_of(const IntVector& v);

// Rank of A over the rationals (fraction-free elimination, exact).
int rank_over_q(const IntMatrix& A);

// Rank of A reduced mod p.
int rank_mod_p(const IntMatrix& A, long p);

int rank_over(const IntMatrix& A, const Coeffs& k);

}  // namespace tg
