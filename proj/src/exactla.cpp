#include "tg/exactla.hpp"

#include <algorithm>
#include <numeric>

namespace tg {

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(int i) const
{
    IntVector r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B)
{
    if (A.cols != B.rows) throw validation_error("mat_mul: dimension mismatch");
    IntMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

IntVector mat_vec(const IntMatrix& A, const IntVector& v)
{
    if (A.cols != int(v.size())) throw validation_error("mat_vec: dimension mismatch");
    IntVector r(A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) r[i] += A.at(i, j) * v[j];
    return r;
}

Int dot(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) throw validation_error("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int gcd_of(const IntVector& v)
{
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

int SNFDecomposition::rank() const
{
    int r = 0;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i)
        if (D.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SNFDecomposition::divisors() const
{
    std::vector<Int> d;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i)
        if (D.at(i, i) != 0) d.push_back(D.at(i, i));
    return d;
}

namespace {

void swap_rows(IntMatrix& M, int i, int j)
{
    if (i == j) return;
    for (int c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
}

void swap_cols(IntMatrix& M, int i, int j)
{
    if (i == j) return;
    for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
}

// row[i] -= q * row[t]
void row_axpy(IntMatrix& M, int i, int t, const Int& q)
{
    if (q == 0) return;
    for (int c = 0; c < M.cols; ++c) M.at(i, c) -= q * M.at(t, c);
}

void col_axpy(IntMatrix& M, int j, int t, const Int& q)
{
    if (q == 0) return;
    for (int r = 0; r < M.rows; ++r) M.at(r, j) -= q * M.at(r, t);
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& A)
{
    SNFDecomposition s;
    s.D = A;
    s.U = IntMatrix::identity(A.rows);
    s.V = IntMatrix::identity(A.cols);
    IntMatrix& D = s.D;
    const int m = std::min(A.rows, A.cols);

    for (int t = 0; t < m; ++t) {
        // locate a minimal-|.|, nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < D.rows; ++i)
            for (int j = t; j < D.cols; ++j) {
                const Int& x = D.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || boost::multiprecision::abs(x) <
                                  boost::multiprecision::abs(D.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        swap_rows(D, t, pi);
        swap_rows(s.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);

        for (;;) {
            // clear column t below/above with truncated quotients
            bool touched = false;
            for (int i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = D.at(i, t) / D.at(t, t);
                row_axpy(D, i, t, q);
                row_axpy(s.U, i, t, q);
                if (D.at(i, t) != 0) {
                    // remainder smaller than pivot: promote it
                    swap_rows(D, t, i);
                    swap_rows(s.U, t, i);
                    touched = true;
                }
            }
            if (touched) continue;
            for (int j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = D.at(t, j) / D.at(t, t);
                col_axpy(D, j, t, q);
                col_axpy(s.V, j, t, q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, t, j);
                    swap_cols(s.V, t, j);
                    touched = true;
                }
            }
            if (touched) continue;

            // pivot now divides its whole row and column; check trailing block
            bool divides_all = true;
            for (int i = t + 1; i < D.rows && divides_all; ++i)
                for (int j = t + 1; j < D.cols; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        // fold the offending row in and restart the clearing
                        row_axpy(D, t, i, Int(-1));
                        row_axpy(s.U, t, i, Int(-1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
    }

    // normalize signs
    for (int t = 0; t < m; ++t)
        if (D.at(t, t) < 0) {
            for (int c = 0; c < D.cols; ++c) D.at(t, c) = -D.at(t, c);
            for (int c = 0; c < s.U.cols; ++c) s.U.at(t, c) = -s.U.at(t, c);
        }
    return s;
}

Int determinant(const IntMatrix& A)
{
    if (A.rows != A.cols) throw validation_error("determinant: matrix not square");
    const int n = A.rows;
    if (n == 0) return 1;
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            swap_rows(M, k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& A)
{
    if (A.rows != A.cols) throw validation_error("unimodular_inverse: matrix not square");
    Int det = determinant(A);
    if (det != 1 && det != -1)
        throw validation_error("unimodular_inverse: determinant is not +-1");
    const int n = A.rows;
    // integer Gauss-Jordan on [A | I]; every pivot step stays integral because
    // we reduce with exact quotients only after making the pivot +-1 via SNF-free
    // column-style gcd sweeps is overkill here: use adjugate for small n,
    // Bareiss-based solve otherwise.  Sizes are tiny, adjugate is fine.
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = A.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(i, j) = cof / det;  // det = +-1
        }
    return inv;
}

bool is_lattice_basis(const std::vector<IntVector>& vectors)
{
    const size_t n = vectors.size();
    if (n == 0) throw validation_error("is_lattice_basis: empty input");
    for (const auto& v : vectors)
        if (v.size() != n)
            throw validation_error("is_lattice_basis: need n vectors of length n");
    const int nn = int(n);
    IntMatrix B(nn, nn);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) B.at(i, j) = vectors[i][j];
    Int det = determinant(B);
    return det == 1 || det == -1;
}

std::vector<IntVector> dual_basis(const std::vector<IntVector>& basis)
{
    if (!is_lattice_basis(basis))
        throw validation_error("dual_basis: input is not a lattice basis");
    const int n = int(basis.size());
    IntMatrix Bt(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Bt.at(j, i) = basis[i][j];
    IntMatrix D = unimodular_inverse(Bt);
    std::vector<IntVector> dual(n);
    for (int i = 0; i < n; ++i) dual[i] = D.row(i);
    return dual;
}

IntMatrix extend_primitive(const IntVector& v)
{
    const int n = int(v.size());
    if (n == 0) throw validation_error("extend_primitive: empty vector");
    if (gcd_of(v) != 1) throw validation_error("extend_primitive: vector is not primitive");
    IntMatrix row(1, n);
    for (int j = 0; j < n; ++j) row.at(0, j) = v[j];
    SNFDecomposition s = smith_normal_form(row);
    // u * v * V = e1^T with u = +-1, so (u * V^-1) has first row v.
    IntMatrix Vinv = unimodular_inverse(s.V);
    Int u = s.U.at(0, 0);
    if (u == -1)
        for (int j = 0; j < n; ++j) Vinv.at(0, j) = -Vinv.at(0, j);
    IntMatrix M = Vinv;
    for (int j = 0; j < n; ++j)
        if (M.at(0, j) != v[j]) throw internal_error("extend_primitive: completion failed");
    return M;
}

int rank_over_q(const IntMatrix& A)
{
    // sparse-friendly integer elimination with gcd normalization
    std::vector<IntVector> rows;
    rows.reserve(A.rows);
    for (int i = 0; i < A.rows; ++i) rows.push_back(A.row(i));
    int rank = 0;
    for (int col = 0; col < A.cols && rank < int(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < int(rows.size()); ++i)
            if (rows[i][col] != 0 &&
                (piv < 0 || boost::multiprecision::abs(rows[i][col]) <
                                boost::multiprecision::abs(rows[piv][col]))) {
                piv = i;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        const IntVector& p = rows[rank];
        for (int i = rank + 1; i < int(rows.size()); ++i) {
            if (rows[i][col] == 0) continue;
            Int a = p[col], b = rows[i][col];
            Int g = boost::multiprecision::gcd(a, b);
            Int ma = a / g, mb = b / g;
            Int rg = 0;
            for (int j = col; j < A.cols; ++j) {
                rows[i][j] = rows[i][j] * ma - p[j] * mb;
                rg = boost::multiprecision::gcd(rg, rows[i][j]);
            }
            if (rg > 1)
                for (int j = col; j < A.cols; ++j) rows[i][j] /= rg;
        }
        ++rank;
    }
    return rank;
}

int rank_mod_p(const IntMatrix& A, long p)
{
    if (p < 2) throw validation_error("rank_mod_p: modulus must be a prime >= 2");
    std::vector<std::vector<long>> rows(A.rows, std::vector<long>(A.cols));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            Int r = A.at(i, j) % p;
            if (r < 0) r += p;
            rows[i][j] = long(r);
        }
    auto inv_mod = [p](long a) {
        long t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            long q = r / newr;
            std::swap(t, newt);
            newt -= q * t;
            std::swap(r, newr);
            newr -= q * r;
        }
        return ((t % p) + p) % p;
    };
    int rank = 0;
    for (int col = 0; col < A.cols && rank < A.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < A.rows; ++i)
            if (rows[i][col] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        long inv = inv_mod(rows[rank][col]);
        for (int j = col; j < A.cols; ++j)
            rows[rank][j] = (rows[rank][j] * inv) % p;
        for (int i = 0; i < A.rows; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            long f = rows[i][col];
            for (int j = col; j < A.cols; ++j)
                rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

int rank_over(const IntMatrix& A, const Coeffs& k)
{
    switch (k.kind) {
        case Coeffs::Q:
        case Coeffs::Z: return rank_over_q(A);
        default: return rank_mod_p(A, k.p);
    }
}

}  // namespace tg
