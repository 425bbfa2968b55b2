#include <doctest.h>

#include "octobil/linalg.hpp"
#include "test_support.hpp"

using namespace octobil;
using octobil::testing::random_rational;

namespace {

Matrix from_rows(const std::vector<std::vector<long long>>& rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = Rational(rows[i][j]);
    return m;
}

Matrix random_matrix(CounterRng& rng, int nr, int nc, int64_t bound) {
    Matrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = random_rational(rng, bound);
    return m;
}

}  // namespace

TEST_CASE("rank of fixed matrices") {
    CHECK(rank(from_rows({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(rank(from_rows({{2, 0, 1}, {0, 3, 0}})) == 2);

    // rational entries are scaled away before elimination; this determinant
    // is exactly zero (1/2 - 1/3 * 3/2), which floating point would miss
    Matrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 0) = Rational(3, 2);
    m(1, 1) = Rational(1);
    CHECK(rank(m) == 1);
    m(1, 1) = Rational(2);
    CHECK(rank(m) == 2);
}

TEST_CASE("bareiss rank agrees with echelon-basis dimension on random matrices") {
    CounterRng rng(101, 0);
    for (int t = 0; t < 40; ++t) {
        const int nr = 1 + static_cast<int>(rng.uniform(0, 7));
        const int nc = 1 + static_cast<int>(rng.uniform(0, 7));
        const Matrix m = random_matrix(rng, nr, nc, 4);

        IncrementalSpan span(nc);
        for (int i = 0; i < nr; ++i) span.add(m.row(i));
        CHECK(rank(m) == span.dimension());
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("incremental span basis is order independent and reduced") {
    CounterRng rng(103, 0);
    std::vector<std::vector<Rational>> vecs;
    for (int i = 0; i < 8; ++i) {
        std::vector<Rational> v(5);
        for (auto& c : v) c = random_rational(rng, 3);
        vecs.push_back(v);
    }

    IncrementalSpan forward(5), backward(5);
    for (const auto& v : vecs) forward.add(v);
    for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) backward.add(*it);

    CHECK(forward.dimension() == backward.dimension());
    CHECK(forward.basis() == backward.basis());
    CHECK(forward.pivots() == backward.pivots());

    // reduced form: each pivot column holds a single 1
    const Matrix b = forward.basis();
    for (size_t r = 0; r < forward.pivots().size(); ++r) {
        const int p = forward.pivots()[r];
        for (int i = 0; i < b.rows(); ++i)
            CHECK(b(i, p) == (i == static_cast<int>(r) ? Rational(1) : Rational(0)));
    }

    for (const auto& v : vecs) CHECK(forward.contains(v));
}

TEST_CASE("nullspace vectors are exact kernel members") {
    const Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
    const auto ns = nullspace(m);
    CHECK(ns.size() == 2);  // rank 1, 3 columns
    for (const auto& v : ns) {
        for (int i = 0; i < m.rows(); ++i) {
            Rational dot;
            for (int j = 0; j < m.cols(); ++j) dot += m(i, j) * v[static_cast<size_t>(j)];
            CHECK(dot == Rational(0));
        }
        bool nonzero = false;
        for (const auto& c : v) nonzero |= !c.is_zero();
        CHECK(nonzero);
        // normalized: coprime integers, first nonzero positive
        for (const auto& c : v) CHECK(c.den() == 1);
    }
    CHECK(nullspace(from_rows({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("solve and solve_left") {
    const Matrix a = from_rows({{2, 1}, {1, 3}});
    const std::vector<Rational> b = {Rational(5), Rational(10)};
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(3));

    // inconsistent system
    const Matrix c = from_rows({{1, 1}, {2, 2}});
    const std::vector<Rational> bad = {Rational(1), Rational(3)};
    CHECK(!solve(c, bad).has_value());

    // x * a = b
    const std::vector<Rational> row = {Rational(4), Rational(7)};
    const auto y = solve_left(a, row);
    REQUIRE(y.has_value());
    Rational c0 = (*y)[0] * a(0, 0) + (*y)[1] * a(1, 0);
    Rational c1 = (*y)[0] * a(0, 1) + (*y)[1] * a(1, 1);
    CHECK(c0 == row[0]);
    CHECK(c1 == row[1]);
}

TEST_CASE("rank handles wide value growth exactly") {
    // 10x10 Hilbert-like matrix is full rank; floating point struggles here
    Matrix m(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) m(i, j) = Rational(1, i + j + 1);
    CHECK(rank(m) == 10);
}
