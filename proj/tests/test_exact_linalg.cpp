#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homalg/echelon.hpp"
#include "homalg/fp_matrix.hpp"
#include "homalg/subspace.hpp"
#include "oracles.hpp"

using namespace homalg;

static FpMatrix from_rows(FieldSpec f, std::vector<std::vector<int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    FpMatrix m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, f.reduce(rows[i][j]));
    return m;
}

TEST_CASE("FieldSpec rejects composite moduli") {
    CHECK_THROWS(FieldSpec(4));
    CHECK_THROWS(FieldSpec(1));
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(251));
    FieldSpec f3(3);
    CHECK(f3.inv(2) == 2);
    FieldSpec f7(7);
    for (std::uint32_t a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
}

TEST_CASE("rref duplicate rows over GF(2)") {
    FieldSpec f2(2);
    auto m = from_rows(f2, {{1, 1}, {1, 1}});
    std::vector<int> piv;
    auto r = m.rref(&piv);
    CHECK(r == from_rows(f2, {{1, 1}, {0, 0}}));
    CHECK(piv == std::vector<int>{0});
    CHECK(m.rank() == 1);
}

TEST_CASE("rref empty and unit scaling") {
    FieldSpec f3(3);
    FpMatrix e(f3, 0, 0);
    CHECK(e.rref().rows() == 0);
    CHECK(e.rank() == 0);
    auto m = from_rows(f3, {{2}});
    CHECK(m.rref() == from_rows(f3, {{1}}));
    CHECK(m.rank() == 1);
}

TEST_CASE("rref idempotent on random matrices") {
    oracles::Rng rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        FieldSpec f(p);
        for (int t = 0; t < 25; ++t) {
            auto m = oracles::random_matrix(f, 1 + rng.below(6), 1 + rng.below(6), rng);
            auto r = m.rref();
            CHECK(r.rref() == r);
            CHECK(m.rank() == m.transpose().rank());
        }
    }
}

TEST_CASE("kernel and image dims, derived example") {
    FieldSpec f2(2);
    auto zero32 = FpMatrix(f2, 3, 2);
    CHECK(zero32.left_kernel().rows() == 3);
    CHECK(zero32.row_basis().rows() == 0);

    FieldSpec f3(3);
    auto id4 = FpMatrix::identity(f3, 4);
    CHECK(id4.left_kernel().rows() == 0);
    CHECK(id4.row_basis().rows() == 4);

    auto m = from_rows(f2, {{1, 0}, {1, 0}, {0, 1}});
    CHECK(m.left_kernel().rows() == oracles::kernel_dim_bruteforce(m));
    CHECK(m.left_kernel().rows() == 1);
    CHECK(m.row_basis().rows() == 2);
}

TEST_CASE("rank-nullity on random matrices") {
    oracles::Rng rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        FieldSpec f(p);
        for (int t = 0; t < 30; ++t) {
            auto m = oracles::random_matrix(f, 1 + rng.below(7), 1 + rng.below(7), rng);
            auto k = m.left_kernel();
            CHECK(k.rows() + m.rank() == m.rows());
            CHECK((k * m).is_zero());
        }
    }
}

TEST_CASE("solve: identity, zero, inconsistent") {
    FieldSpec f2(2);
    auto i3 = FpMatrix::identity(f2, 3);
    auto b = from_rows(f2, {{1, 0, 1}, {0, 1, 1}});
    auto x = FpMatrix::solve(i3, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    auto z = FpMatrix(f2, 2, 3);
    auto zb = FpMatrix(f2, 1, 3);
    auto xz = FpMatrix::solve(z, zb);
    REQUIRE(xz.has_value());
    CHECK((*xz * z) == zb);

    // x * [[1,1]] = [[1,0]] has no solution; both scalar candidates fail
    auto a = from_rows(f2, {{1, 1}});
    auto bb = from_rows(f2, {{1, 0}});
    CHECK(!FpMatrix::solve(a, bb).has_value());
}

TEST_CASE("solve returns exact solutions on random consistent systems") {
    oracles::Rng rng(13);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        FieldSpec f(p);
        for (int t = 0; t < 25; ++t) {
            auto a = oracles::random_matrix(f, 1 + rng.below(6), 1 + rng.below(6), rng);
            auto x0 = oracles::random_matrix(f, 1 + rng.below(4), a.rows(), rng);
            auto b = x0 * a;
            auto x = FpMatrix::solve(a, b);
            REQUIRE(x.has_value());
            CHECK((*x * a) == b);
        }
    }
}

TEST_CASE("subspace ops: trivial identities") {
    FieldSpec f2(2);
    Subspace u(2, from_rows(f2, {{1, 0}}));
    Subspace w(2, from_rows(f2, {{0, 1}}));
    CHECK(u.sum(u) == u);
    CHECK(u.intersect(u) == u);
    CHECK(u.sum(w).dim() == 2);
    CHECK(u.intersect(w).dim() == 0);
}

TEST_CASE("modular law dims via brute force, GF(3)^4") {
    oracles::Rng rng(17);
    FieldSpec f3(3);
    for (int t = 0; t < 10; ++t) {
        Subspace u(4, oracles::random_matrix(f3, 3, 4, rng));
        Subspace w(4, oracles::random_matrix(f3, 2, 4, rng));
        auto s = u.sum(w);
        auto i = u.intersect(w);
        CHECK(s.dim() + i.dim() == u.dim() + w.dim());
        CHECK(i.dim() == oracles::span_dim_bruteforce(u.basis) + oracles::span_dim_bruteforce(w.basis) -
                             oracles::span_dim_bruteforce(u.basis.vstack(w.basis)));
        CHECK(u.contains(i));
        CHECK(w.contains(i));
        CHECK(s.contains(u));
    }
}

TEST_CASE("quotient presentation and induced maps") {
    FieldSpec f2(2);
    Subspace u(3, from_rows(f2, {{1, 1, 0}}));
    Subspace v = Subspace::full(f2, 3);
    auto q = make_subquotient(u, v);
    CHECK(q.dim() == 2);
    // proj kills u and is invertible on the complement
    CHECK((u.basis * q.proj).is_zero());
    CHECK((q.reps * q.proj) == FpMatrix::identity(f2, 2));

    // identity map with equal flags induces the identity
    auto id = FpMatrix::identity(f2, 3);
    CHECK(induced_map_on_subquotients(id, q, q) == FpMatrix::identity(f2, 2));
    // zero map induces zero
    CHECK(induced_map_on_subquotients(FpMatrix(f2, 3, 3), q, q).is_zero());
    // a map landing inside the denominator induces zero
    FpMatrix into_u(f2, 3, 3);
    for (int i = 0; i < 3; ++i) { into_u.set(i, 0, 1); into_u.set(i, 1, 1); }
    CHECK(induced_map_on_subquotients(into_u, q, q).is_zero());
}

TEST_CASE("induced map rejects maps that do not respect the flags") {
    FieldSpec f2(2);
    Subspace u(2, from_rows(f2, {{1, 0}}));
    auto q = make_subquotient(u, Subspace::full(f2, 2));
    // swap does not preserve u
    auto swp = from_rows(f2, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(induced_map_on_subquotients(swp, q, q), NotWellDefined);
}

TEST_CASE("packed GF(2) path agrees with generic path on wide matrices") {
    oracles::Rng rng(23);
    FieldSpec f2(2);
    for (int t = 0; t < 5; ++t) {
        int r = 20 + static_cast<int>(rng.below(40));
        int c = 120 + static_cast<int>(rng.below(40)); // spans multiple words
        auto m = oracles::random_matrix(f2, r, c, rng);
        auto k = m.left_kernel();
        CHECK((k * m).is_zero());
        CHECK(k.rows() + m.rank() == r);
        auto mt = m.transpose();
        CHECK(mt.transpose() == m);
        CHECK(m.rank() == mt.rank());
    }
}

TEST_CASE("kron respects composition") {
    oracles::Rng rng(29);
    FieldSpec f3(3);
    auto a = oracles::random_matrix(f3, 3, 2, rng);
    auto b = oracles::random_matrix(f3, 2, 4, rng);
    auto c = oracles::random_matrix(f3, 2, 3, rng);
    auto d = oracles::random_matrix(f3, 3, 2, rng);
    CHECK((a * b).kron(c * d) == a.kron(c) * b.kron(d));
}

TEST_CASE("EchelonBasis insert/reduce/express") {
    FieldSpec f2(2);
    EchelonBasis e(f2, 4);
    auto rows = from_rows(f2, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}});
    CHECK(e.insert(rows, 0));
    CHECK(e.insert(rows, 1));
    CHECK(!e.insert(rows, 2)); // dependent
    CHECK(e.size() == 2);
    CHECK(e.contains_row(rows, 2));
    FpMatrix v = from_rows(f2, {{0, 0, 0, 1}});
    CHECK(!e.contains_row(v, 0));
}
