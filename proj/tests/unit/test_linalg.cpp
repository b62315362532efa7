#include "doctest.h"

#include <optional>
#include <vector>

#include "hls/linalg.hpp"
#include "hls/matrix.hpp"
#include "hls/rational.hpp"

using hls::Matrix;
using hls::Rational;
using hls::Subspace;
using hls::Vec;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Matrix mat(std::size_t cols, const std::vector<Vec>& rows) {
    return Matrix::from_rows(cols, rows);
}

}  // namespace

TEST_CASE("rref of a rank-deficient matrix") {
    Matrix m = mat(2, {{q(1), q(2)}, {q(2), q(4)}});
    auto r = hls::rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.r.at(0, 0) == q(1));
    CHECK(r.r.at(0, 1) == q(2));
    CHECK(hls::is_zero_vec(r.r.row(1)));
    CHECK(hls::rank(m) == 1);
}

TEST_CASE("nullspace of [[1,2],[2,4]] is spanned by (-2,1)") {
    Matrix m = mat(2, {{q(1), q(2)}, {q(2), q(4)}});
    Subspace ns = hls::nullspace_basis(m);
    CHECK(ns.dim() == 1);
    CHECK(ns == Subspace::span(2, {{q(-2), q(1)}}));
}

TEST_CASE("nullspace of the identity is zero") {
    Subspace ns = hls::nullspace_basis(Matrix::identity(2));
    CHECK(ns.dim() == 0);
    CHECK(ns.is_zero());
}

TEST_CASE("every nullspace vector annihilates the matrix") {
    Matrix m = mat(5, {{q(1), q(2), q(3), q(4), q(5)},
                       {q(2), q(4), q(6), q(8), q(10)},
                       {q(1, 2), q(0), q(1, 3), q(0), q(7)}});
    Subspace ns = hls::nullspace_basis(m);
    CHECK(hls::rank(m) + ns.dim() == 5);
    for (const Vec& v : ns.basis()) {
        CHECK(hls::is_zero_vec(m.apply(v)));
    }
}

TEST_CASE("rref pivots are one with cleared columns") {
    Matrix m = mat(4, {{q(0), q(2), q(1), q(3)},
                       {q(0), q(4), q(2), q(7)},
                       {q(1), q(1), q(1), q(1)}});
    auto r = hls::rref(m);
    REQUIRE(r.pivots.size() == 3);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        std::size_t pc = r.pivots[i];
        if (i > 0) CHECK(r.pivots[i - 1] < pc);
        for (std::size_t row = 0; row < r.r.rows(); ++row) {
            CHECK(r.r.at(row, pc) == (row == i ? q(1) : q(0)));
        }
    }
}

TEST_CASE("solve_linear finds a particular solution or reports inconsistency") {
    Matrix m = mat(2, {{q(1), q(2)}, {q(2), q(4)}});
    auto sol = hls::solve_linear(m, {q(1), q(2)});
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == Vec{q(1), q(2)});

    auto bad = hls::solve_linear(m, {q(1), q(3)});
    CHECK(!bad.has_value());
}

TEST_CASE("solve_linear handles fractional systems exactly") {
    Matrix m = mat(2, {{q(1, 2), q(1, 3)}, {q(1, 5), q(1, 7)}});
    CHECK(hls::rank(m) == 2);
    Vec b{q(1), q(0)};
    auto sol = hls::solve_linear(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);

    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
}

TEST_CASE("singular matrix has no inverse") {
    Matrix m = mat(2, {{q(1), q(2)}, {q(2), q(4)}});
    CHECK(!m.inverse().has_value());
}

TEST_CASE("subspace membership, reduction, coordinates") {
    Subspace s = Subspace::span(3, {{q(1), q(0), q(1)}, {q(0), q(1), q(1)}});
    CHECK(s.dim() == 2);
    CHECK(s.member({q(2), q(3), q(5)}));
    CHECK(!s.member({q(0), q(0), q(1)}));
    CHECK(hls::is_zero_vec(s.reduce({q(2), q(3), q(5)})));
    CHECK(!hls::is_zero_vec(s.reduce({q(1), q(1), q(0)})));

    auto coords = s.coordinates({q(2), q(3), q(5)});
    REQUIRE(coords.has_value());
    CHECK(*coords == Vec{q(2), q(3)});
    CHECK(!s.coordinates({q(0), q(0), q(1)}).has_value());
}

TEST_CASE("subspace canonical form makes equality representation-independent") {
    Subspace a = Subspace::span(2, {{q(1), q(1)}, {q(1), q(-1)}});
    Subspace b = Subspace::full(2);
    CHECK(a == b);

    Subspace c = Subspace::span(2, {{q(2), q(4)}});
    Subspace d = Subspace::span(2, {{q(-1), q(-2)}});
    CHECK(c == d);
    CHECK(c.basis().front() == Vec{q(1), q(2)});
}

TEST_CASE("intersection and sum of subspaces") {
    Subspace xy = Subspace::span(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
    Subspace yz = Subspace::span(3, {{q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
    Subspace meet = hls::intersect(xy, yz);
    CHECK(meet == Subspace::span(3, {{q(0), q(1), q(0)}}));

    Subspace join = hls::subspace_sum(xy, yz);
    CHECK(join == Subspace::full(3));

    Subspace diag = Subspace::span(2, {{q(1), q(1)}});
    Subspace x = Subspace::span(2, {{q(1), q(0)}});
    CHECK(hls::intersect(diag, x).is_zero());
    CHECK(hls::subspace_sum(diag, x) == Subspace::full(2));
}

TEST_CASE("containment is reflexive and respects dimension") {
    Subspace s = Subspace::span(3, {{q(1), q(2), q(3)}});
    Subspace t = Subspace::span(3, {{q(1), q(2), q(3)}, {q(0), q(0), q(1)}});
    CHECK(t.contains(s));
    CHECK(!s.contains(t));
    CHECK(s.contains(s));
    CHECK(s.contains(Subspace::zero(3)));
    CHECK(Subspace::full(3).contains(t));
}

TEST_CASE("zero-row and zero-column matrices are legal") {
    Matrix none(0, 4);
    CHECK(hls::rank(none) == 0);
    CHECK(hls::nullspace_basis(none) == Subspace::full(4));

    Matrix no_cols(3, 0);
    CHECK(hls::rank(no_cols) == 0);
    CHECK(hls::nullspace_basis(no_cols).ambient_dim() == 0);
}
