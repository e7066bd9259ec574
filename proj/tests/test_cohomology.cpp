#include "nilkahler/catalog.hpp"
#include "nilkahler/cohomology.hpp"
#include "nilkahler/special.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nilkahler;
using testsupport::denseMatrix;
using testsupport::denseRank;
using testsupport::Gen;
using testsupport::kCases;
using testsupport::validBidegree;

namespace {

using Rows = std::vector<std::vector<Scalar>>;
using BD = std::pair<int, int>;

// Dense oracle built from the operators applied to single monomials.
struct Oracle {
    const StructureEquations& s;
    int n;

    Rows op(Operator o, BD src, BD dst) const {
        return denseMatrix(n, src, dst, [&](const Form& f) {
            switch (o) {
                case Operator::Del: return delComponentwise(s, f);
                case Operator::Delbar: return delbarComponentwise(s, f);
                case Operator::DelDelbar: return delComponentwise(s, delbarComponentwise(s, f));
                case Operator::D: return d(s, f);
            }
            return Form(n);
        });
    }
    int rank(Operator o, BD src, BD dst) const {
        if (!validBidegree(n, src.first, src.second) || !validBidegree(n, dst.first, dst.second)) return 0;
        return denseRank(op(o, src, dst));
    }
    int size(BD b) const {
        return validBidegree(n, b.first, b.second) ? testsupport::binomial(n, b.first) * testsupport::binomial(n, b.second)
                                                   : 0;
    }
    // Rank of the map into two targets at once (kernel of the pair).
    int pairRank(Operator a, BD ta, Operator b, BD tb, BD src) const {
        Rows ra = validBidegree(n, ta.first, ta.second) ? op(a, src, ta) : Rows(size(src));
        Rows rb = validBidegree(n, tb.first, tb.second) ? op(b, src, tb) : Rows(size(src));
        Rows joined(size(src));
        for (int r = 0; r < size(src); ++r) {
            joined[r] = ra[r];
            joined[r].insert(joined[r].end(), rb[r].begin(), rb[r].end());
        }
        return joined.empty() || joined[0].empty() ? 0 : denseRank(joined);
    }
    // Rank of the union of two images in one target.
    int unionRank(Operator a, BD sa, Operator b, BD sb, BD dst) const {
        Rows rows;
        if (validBidegree(n, sa.first, sa.second)) rows = op(a, sa, dst);
        if (validBidegree(n, sb.first, sb.second)) {
            Rows more = op(b, sb, dst);
            rows.insert(rows.end(), more.begin(), more.end());
        }
        return rows.empty() ? 0 : denseRank(rows);
    }

    int dim(Theory t, int p, int q) const {
        BD b{p, q};
        switch (t) {
            case Theory::Delbar:
                return size(b) - rank(Operator::Delbar, b, {p, q + 1}) - rank(Operator::Delbar, {p, q - 1}, b);
            case Theory::Del:
                return size(b) - rank(Operator::Del, b, {p + 1, q}) - rank(Operator::Del, {p - 1, q}, b);
            case Theory::BottChern:
                return size(b) - pairRank(Operator::Del, {p + 1, q}, Operator::Delbar, {p, q + 1}, b) -
                       rank(Operator::DelDelbar, {p - 1, q - 1}, b);
            case Theory::Aeppli:
                return size(b) - rank(Operator::DelDelbar, b, {p + 1, q + 1}) -
                       unionRank(Operator::Del, {p - 1, q}, Operator::Delbar, {p, q - 1}, b);
            case Theory::DeRham: break;
        }
        return -1;
    }

    Rows degreeMatrix(int r) const {
        Rows rows;
        std::vector<Monomial> out;
        for (int p = 0; p <= r + 1; ++p)
            if (validBidegree(n, p, r + 1 - p))
                for (auto m : testsupport::monomials(n, p, r + 1 - p)) out.push_back(m);
        for (int p = 0; p <= r; ++p) {
            if (!validBidegree(n, p, r - p)) continue;
            for (auto m : testsupport::monomials(n, p, r - p)) {
                Form img = d(s, Form::monomial(n, m));
                std::vector<Scalar> row;
                for (auto t : out) row.push_back(img.coefficient(t));
                rows.push_back(row);
            }
        }
        return rows;
    }
    int betti(int r) const {
        int sz = 0;
        for (int p = 0; p <= r; ++p) sz += size({p, r - p});
        auto rk = [&](int deg) {
            if (deg < 0 || deg >= 2 * n) return 0;
            Rows m = degreeMatrix(deg);
            return m.empty() || m[0].empty() ? 0 : denseRank(m);
        };
        return sz - rk(r) - rk(r - 1);
    }
};

const Theory kComplexTheories[] = {Theory::Delbar, Theory::Del, Theory::BottChern, Theory::Aeppli};

}  // namespace

TEST_CASE("frozen regressions on etabeta5") {
    auto s = loadCatalog("etabeta5").structure;
    CHECK(deRham(s, 1).dimension == 8);
    CHECK(cohomology(s, Theory::Delbar, 0, 1).dimension == 4);
    CHECK(cohomology(s, Theory::DeRham, 1, 0).dimension == 8);
}

TEST_CASE("operator matrices on etabeta5") {
    auto s = loadCatalog("etabeta5").structure;
    LinearMap dOne = operatorMatrix(s, Operator::D, Slice::degree(5, 1), Slice::degree(5, 2));
    CHECK(dOne.sourceDim == 10);
    CHECK(dOne.rank() == 2);
    LinearMap dbar = operatorMatrix(s, Operator::Delbar, Slice::bidegree(5, 0, 1), Slice::bidegree(5, 0, 2));
    CHECK(dbar.rank() == 1);
    auto flat = StructureEquations::abelian(3);
    CHECK(operatorMatrix(flat, Operator::D, Slice::degree(3, 2), Slice::degree(3, 3)).rank() == 0);
}

TEST_CASE("library dimensions agree with the dense oracle") {
    for (const char* name : {"etabeta5", "iwasawa", "kt-surface", "symplectic3-family"}) {
        auto s = loadCatalog(name).structure;
        int n = s.n();
        Oracle o{s, n};
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (Theory t : kComplexTheories)
                    CHECK_MESSAGE(cohomology(s, t, p, q).dimension == o.dim(t, p, q), name, " ", theoryName(t), " (",
                                  p, ",", q, ")");
        for (int r = 0; r <= 2 * n; ++r) CHECK_MESSAGE(deRham(s, r).dimension == o.betti(r), name, " b", r);
    }
}

TEST_CASE("torus Hodge numbers") {
    for (int n = 2; n <= 3; ++n) {
        auto s = StructureEquations::abelian(n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (Theory t : kComplexTheories)
                    CHECK(cohomology(s, t, p, q).dimension ==
                          testsupport::binomial(n, p) * testsupport::binomial(n, q));
    }
}

TEST_CASE("Euler characteristic, conjugation symmetry, representatives") {
    for (const auto& entry : catalog()) {
        auto s = parseDocument(entry.source).structure;
        int n = s.n();
        if (n > 4 && entry.name != "etabeta5") continue;
        int chi = 0;
        for (int r = 0; r <= 2 * n; ++r) chi += (r % 2 ? -1 : 1) * deRham(s, r).dimension;
        CHECK_MESSAGE(chi == 0, entry.name);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                auto h = cohomology(s, Theory::Delbar, p, q);
                CHECK(h.dimension == cohomology(s, Theory::Del, q, p).dimension);
                CHECK(static_cast<int>(h.representatives.size()) == h.dimension);
                for (const Form& rep : h.representatives) CHECK(delbarComponentwise(s, rep).isZero());
            }
    }
}

TEST_CASE("class decisions with certificates") {
    auto s = loadCatalog("etabeta5").structure;
    ClassResult exact = classIsZero(s, s.dphi(5), Theory::DeRham);
    CHECK(exact.isZero);
    REQUIRE(exact.primitive.size() == 1);
    CHECK(d(s, exact.primitive[0]) == s.dphi(5));

    Form harmonic = Form::monomial(5, MultiIndex{2, 3, 4}, MultiIndex{1, 2, 4, 5}, Scalar::sigma(3));
    ClassResult nz = classIsZero(s, harmonic, Theory::Delbar);
    CHECK_FALSE(nz.isZero);
    CHECK_FALSE(nz.pairing.isZero());
    CHECK(applyFunctional(nz.functional, harmonic) == nz.pairing);
    for (auto m : testsupport::monomials(5, 3, 3))
        CHECK(applyFunctional(nz.functional, delbarComponentwise(s, Form::monomial(5, m))).isZero());

    CHECK(classIsZero(s, Form(5), Theory::Delbar).isZero);
    CHECK_THROWS_AS(classIsZero(s, Form::generator(5, 5), Theory::DeRham), Error);
}

TEST_CASE("property: exact forms have zero classes with valid primitives") {
    Gen g(71);
    auto eta = loadCatalog("etabeta5").structure;
    auto iwa = loadCatalog("iwasawa").structure;
    for (int t = 0; t < kCases; ++t) {
        const auto& s = t % 2 ? eta : iwa;
        int n = s.n();
        int p = g.uniform(0, n - 1), q = g.uniform(0, n - 1);
        Form a = g.form(n, p, q, 3), b = g.form(n, p, q, 3);
        switch (t % 5) {
            case 0: {
                Form w = d(s, g.formOfDegree(n, p + q, 3));
                ClassResult r = classIsZero(s, w, Theory::DeRham);
                CHECK(r.isZero);
                if (!w.isZero()) CHECK(d(s, r.primitive.at(0)) == w);
                break;
            }
            case 1: {
                Form w = delbar(s, a);
                ClassResult r = classIsZero(s, w, Theory::Delbar);
                CHECK(r.isZero);
                if (!w.isZero()) CHECK(delbarComponentwise(s, r.primitive.at(0)) == w);
                break;
            }
            case 2: {
                Form w = del(s, a);
                ClassResult r = classIsZero(s, w, Theory::Del);
                CHECK(r.isZero);
                if (!w.isZero()) CHECK(delComponentwise(s, r.primitive.at(0)) == w);
                break;
            }
            case 3: {
                Form w = deldelbar(s, a);
                ClassResult r = classIsZero(s, w, Theory::BottChern);
                CHECK(r.isZero);
                if (!w.isZero()) CHECK(deldelbar(s, r.primitive.at(0)) == w);
                break;
            }
            default: {
                // del a + delbar b, both landing in bidegree (p+1, q).
                Form w = delComponentwise(s, a);
                if (q >= 1) w += delbarComponentwise(s, g.form(n, p + 1, q - 1, 3));
                ClassResult r = classIsZero(s, w, Theory::Aeppli);
                CHECK(r.isZero);
                if (!w.isZero()) {
                    REQUIRE(r.primitive.size() == 2);
                    CHECK(delComponentwise(s, r.primitive[0]) + delbarComponentwise(s, r.primitive[1]) == w);
                }
                break;
            }
        }
    }
}

TEST_CASE("closed simple witnesses") {
    auto eta = loadCatalog("etabeta5").structure;
    auto w = closedSimpleWitness(eta, 2);
    REQUIRE(w.has_value());
    CHECK(*w == Form::monomial(5, MultiIndex{1, 2}, MultiIndex{}));
    auto sym = loadCatalog("symplectic3-family").structure;
    auto w4 = closedSimpleWitness(sym, 4);
    REQUIRE(w4.has_value());
    CHECK(*w4 == Form::monomial(5, MultiIndex{1, 2, 3, 4}, MultiIndex{}));
    CHECK(*closedSimpleWitness(StructureEquations::abelian(3), 3) == Form::monomial(3, MultiIndex{1, 2, 3}, MultiIndex{}));
}

TEST_CASE("theory names") {
    for (Theory t : {Theory::DeRham, Theory::Del, Theory::Delbar, Theory::BottChern, Theory::Aeppli})
        CHECK(parseTheory(theoryName(t)) == t);
    CHECK_THROWS_AS(parseTheory("xyz"), Error);
}
