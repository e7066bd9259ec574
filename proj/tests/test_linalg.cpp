#include "nilkahler/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nilkahler;
using testsupport::Gen;
using testsupport::kCases;

namespace {

std::vector<std::vector<Scalar>> rowsOf(const ScalarMatrix& m) {
    std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rows;
}

LinearMap mapOf(const ScalarMatrix& m) {
    LinearMap a;
    a.sourceDim = m.cols();
    a.targetDim = m.rows();
    for (int c = 0; c < m.cols(); ++c) {
        SparseVector col;
        for (int r = 0; r < m.rows(); ++r)
            if (!m(r, c).isZero()) col.emplace_back(r, m(r, c));
        a.columns.push_back(col);
    }
    return a;
}

SparseVector sparse(const std::vector<Scalar>& v) {
    SparseVector out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].isZero()) out.emplace_back(static_cast<int>(k), v[k]);
    return out;
}

Scalar quadratic(const ScalarMatrix& a, const std::vector<Scalar>& x) {
    Scalar s;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) s += x[r].conj() * a(r, c) * x[c];
    return s;
}

}  // namespace

TEST_CASE("property: inverse and determinant") {
    Gen g(31);
    for (int t = 0; t < kCases; ++t) {
        int n = g.uniform(1, 4);
        ScalarMatrix a = g.invertible(n), b = g.matrix(n, n);
        CHECK(a * a.inverse() == ScalarMatrix::identity(n));
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
        CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    }
    ScalarMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK_THROWS_AS(singular.inverse(), Error);
}

TEST_CASE("property: rank, kernel and solve agree with a dense oracle") {
    Gen g(32);
    for (int t = 0; t < kCases; ++t) {
        int rows = g.uniform(1, 6), cols = g.uniform(1, 6), inner = g.uniform(1, 4);
        ScalarMatrix m = g.matrix(rows, inner) * g.matrix(inner, cols);
        int expected = testsupport::denseRank(rowsOf(m));
        CHECK(m.rank() == expected);
        LinearMap a = mapOf(m);
        CHECK(a.rank() == expected);
        CHECK(a.transpose().rank() == expected);
        auto kernel = a.kernel();
        CHECK(static_cast<int>(kernel.size()) == cols - expected);
        for (const auto& k : kernel) CHECK(a.apply(k).empty());
        std::vector<Scalar> x(cols);
        for (auto& v : x) v = g.gaussian();
        SparseVector b = a.apply(sparse(x));
        auto y = a.solve(b);
        REQUIRE(y.has_value());
        CHECK(a.apply(*y) == b);
    }
}

TEST_CASE("solve reports inconsistency") {
    ScalarMatrix m(2, 1);
    m(0, 0) = 1;
    LinearMap a = mapOf(m);
    CHECK_FALSE(a.solve({{1, Scalar(1)}}).has_value());
}

TEST_CASE("quotient basis dimension") {
    SparseVector e0{{0, Scalar(1)}}, e1{{1, Scalar(1)}}, s{{0, Scalar(1)}, {1, Scalar(1)}};
    CHECK(quotientBasis({e0}, {e0, s, e1}).size() == 1);
    CHECK(quotientBasis({}, {e0, s, e1}).size() == 2);
}

TEST_CASE("echelon basis relation") {
    EchelonBasis basis;
    SparseVector a{{0, Scalar(1)}, {1, Scalar(2)}}, b{{1, Scalar(1)}};
    CHECK(basis.insert(a, 0));
    CHECK(basis.insert(b, 1));
    SparseVector rel;
    SparseVector c{{0, Scalar(3)}, {1, Scalar(7)}};
    CHECK_FALSE(basis.insert(c, 2, &rel));
    SparseVector combo;
    for (auto [tag, coef] : rel) axpy(combo, coef, tag == 0 ? a : b);
    CHECK(combo == c);
}

TEST_CASE("property: positive definiteness with exact witnesses") {
    Gen g(33);
    for (int t = 0; t < kCases; ++t) {
        int n = g.uniform(1, 4);
        ScalarMatrix b = g.matrix(n, n);
        ScalarMatrix pos = b.adjoint() * b + ScalarMatrix::identity(n);
        CHECK(pos.isHermitian());
        CHECK(isPositiveDefinite(pos));
        ScalarMatrix h = b + b.adjoint();
        std::vector<Scalar> w;
        if (!isPositiveDefinite(h, &w)) {
            REQUIRE(static_cast<int>(w.size()) == n);
            CHECK(quadratic(h, w).sign() <= 0);
        }
    }
}
