#include <doctest.h>

#include <random>

#include "tg/exactla.hpp"

using namespace tg;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows)
{
    IntMatrix M(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) M.at(int(i), int(j)) = rows[i][j];
    return M;
}

IntVector vec(const std::vector<long>& v)
{
    return IntVector(v.begin(), v.end());
}

void check_snf(const IntMatrix& A)
{
    SNFDecomposition s = smith_normal_form(A);
    CHECK(mat_mul(mat_mul(s.U, A), s.V) == s.D);
    Int du = determinant(s.U), dv = determinant(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    auto div = s.divisors();
    for (size_t i = 0; i + 1 < div.size(); ++i) CHECK(div[i + 1] % div[i] == 0);
    for (const Int& d : div) CHECK(d > 0);
    // off-diagonal clear
    for (int i = 0; i < s.D.rows; ++i)
        for (int j = 0; j < s.D.cols; ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on the stated examples")
{
    SNFDecomposition s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    check_snf(from_rows({{2, 4}, {6, 8}}));

    SNFDecomposition id3 = smith_normal_form(IntMatrix::identity(3));
    CHECK(id3.D == IntMatrix::identity(3));

    IntMatrix z(1, 1);
    SNFDecomposition sz = smith_normal_form(z);
    CHECK(sz.D.at(0, 0) == 0);
}

TEST_CASE("smith normal form on random matrices")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
    for (int it = 0; it < 200; ++it) {
        IntMatrix A(dim(rng), dim(rng));
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < A.cols; ++j) A.at(i, j) = val(rng);
        check_snf(A);
    }
}

TEST_CASE("lattice basis tests")
{
    CHECK(is_lattice_basis({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));
    CHECK_FALSE(is_lattice_basis({vec({1, 0}), vec({1, 2})}));
    CHECK(is_lattice_basis({vec({1, 1}), vec({0, 1})}));
    CHECK_THROWS_AS((void)is_lattice_basis({vec({1, 0, 0}), vec({0, 1, 0})}),
                    validation_error);
}

TEST_CASE("is_lattice_basis agrees with the smith criterion")
{
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int it = 0; it < 100; ++it) {
        int n = 1 + int(rng() % 4);
        std::vector<IntVector> b(n, IntVector(n));
        IntMatrix M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int x = val(rng);
                b[i][j] = x;
                M.at(i, j) = x;
            }
        bool basis = is_lattice_basis(b);
        CHECK(basis == (smith_normal_form(M).D == IntMatrix::identity(n)));
    }
}

TEST_CASE("dual basis")
{
    auto std3 = std::vector<IntVector>{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
    CHECK(dual_basis(std3) == std3);

    auto d = dual_basis({vec({1, 1}), vec({0, 1})});
    CHECK(d[0] == vec({1, 0}));
    CHECK(d[1] == vec({-1, 1}));

    auto perm = std::vector<IntVector>{vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 0, 0})};
    CHECK(dual_basis(perm) == perm);

    CHECK_THROWS_AS((void)dual_basis({vec({1, 0}), vec({1, 2})}), validation_error);
}

TEST_CASE("dual basis is an involution")
{
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> val(-3, 3);
    int found = 0;
    while (found < 40) {
        int n = 2 + int(rng() % 3);
        std::vector<IntVector> b(n, IntVector(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i][j] = val(rng);
        if (!is_lattice_basis(b)) continue;
        ++found;
        auto d = dual_basis(b);
        CHECK(dual_basis(d) == b);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(dot(d[i], b[j]) == (i == j ? 1 : 0));
    }
}

TEST_CASE("extend_primitive")
{
    CHECK(extend_primitive(vec({1, 0, 0})) == IntMatrix::identity(3));

    auto m = extend_primitive(vec({2, 3}));
    CHECK(m.row(0) == vec({2, 3}));
    Int d = determinant(m);
    CHECK((d == 1 || d == -1));

    auto m3 = extend_primitive(vec({1, 1, 1}));
    CHECK(m3.row(0) == vec({1, 1, 1}));
    Int d3 = determinant(m3);
    CHECK((d3 == 1 || d3 == -1));

    CHECK_THROWS_AS((void)extend_primitive(vec({2, 4})), validation_error);
}

TEST_CASE("extend_primitive on random primitive vectors")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(-20, 20);
    int found = 0;
    while (found < 60) {
        int n = 1 + int(rng() % 4);
        IntVector v(n);
        for (int j = 0; j < n; ++j) v[j] = val(rng);
        if (gcd_of(v) != 1) continue;
        ++found;
        auto m = extend_primitive(v);
        CHECK(m.row(0) == v);
        Int d = determinant(m);
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("rank helpers")
{
    IntMatrix A = from_rows({{2, 4}, {1, 2}, {0, 0}});
    CHECK(rank_over_q(A) == 1);
    CHECK(rank_mod_p(A, 2) == 1);
    IntMatrix B = from_rows({{2, 0}, {0, 3}});
    CHECK(rank_over_q(B) == 2);
    CHECK(rank_mod_p(B, 2) == 1);
    CHECK(rank_mod_p(B, 3) == 1);
    CHECK(rank_mod_p(B, 5) == 2);
}
