#include "nilkahler/catalog.hpp"
#include "nilkahler/structure.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nilkahler;
using testsupport::Gen;
using testsupport::kCases;

namespace {

std::vector<StructureEquations> catalogStructures() {
    std::vector<StructureEquations> out;
    for (const auto& e : catalog()) out.push_back(parseDocument(e.source).structure);
    return out;
}

StructureEquations make(int n, std::vector<std::pair<int, std::string>> eqs) {
    std::vector<Form> dphi(n, Form(n));
    for (auto& [j, text] : eqs) dphi[j - 1] = parseFormExpression(text, n);
    return StructureEquations(n, dphi);
}

}  // namespace

TEST_CASE("property: d^2 = 0, del^2 = delbar^2 = 0, del delbar = -delbar del") {
    Gen g(41);
    auto fixed = catalogStructures();
    for (int t = 0; t < kCases; ++t) {
        StructureEquations s = t % 2 ? g.twoStep(g.uniform(2, 5)) : fixed[t / 2 % fixed.size()];
        int n = s.n();
        Form a = g.anyForm(n, 3);
        CHECK(d(s, d(s, a)).isZero());
        CHECK(delComponentwise(s, delComponentwise(s, a)).isZero());
        CHECK(delbarComponentwise(s, delbarComponentwise(s, a)).isZero());
        CHECK(delComponentwise(s, delbarComponentwise(s, a)) == -delbarComponentwise(s, delComponentwise(s, a)));
        CHECK(d(s, a) == delComponentwise(s, a) + delbarComponentwise(s, a));
        CHECK(d(s, conjugate(a)) == conjugate(d(s, a)));
    }
}

TEST_CASE("property: Leibniz rule") {
    Gen g(42);
    for (int t = 0; t < kCases; ++t) {
        StructureEquations s = g.twoStep(g.uniform(2, 5));
        int n = s.n();
        int ra = g.uniform(0, 3);
        Form a = g.formOfDegree(n, ra, 3), b = g.anyForm(n, 3);
        Scalar sign(ra % 2 ? -1 : 1);
        CHECK(d(s, wedge(a, b)) == wedge(d(s, a), b) + wedge(a, d(s, b)) * sign);
    }
}

TEST_CASE("property: coframe changes commute with d") {
    Gen g(43);
    auto fixed = catalogStructures();
    for (int t = 0; t < kCases; ++t) {
        StructureEquations s = fixed[t % fixed.size()];
        int n = s.n();
        ScalarMatrix p = g.invertible(n);
        StructureEquations s2 = changeCoframe(s, p);
        Form a = g.anyForm(n, 2);
        CHECK(d(s2, changeCoframe(a, p)) == changeCoframe(d(s, a), p));
    }
}

TEST_CASE("strict del and delbar need homogeneous input") {
    StructureEquations s = make(3, {{3, "phi[1,2]"}});
    Form mixed = Form::generator(3, 3) + Form::monomial(3, MultiIndex{1, 2}, MultiIndex{});
    CHECK_THROWS_AS(del(s, mixed), Error);
    CHECK(del(s, Form::generator(3, 3)) == Form::monomial(3, MultiIndex{1, 2}, MultiIndex{}));
    CHECK(delbar(s, Form::generator(3, 3)).isZero());
    CHECK(deldelbar(s, Form::monomial(3, MultiIndex{3}, MultiIndex{3})) ==
          delbar(s, del(s, Form::monomial(3, MultiIndex{3}, MultiIndex{3}))) * Scalar(-1));
}

TEST_CASE("integrability") {
    CHECK(checkIntegrable(StructureEquations::abelian(3)).certified());
    CHECK(checkIntegrable(make(3, {{3, "phi[1,2] + phi[1;2]"}})).certified());
    CHECK(checkIntegrable(make(3, {{3, "phi[;1,2]"}})).refuted());
    // d^2 phi^1 = phi[1,2;2] != 0
    CHECK(checkIntegrable(make(3, {{1, "phi[3;2]"}, {3, "phi[1,2]"}})).refuted());
}

TEST_CASE("nilpotent coframe, parallelizable, Salamon") {
    auto s = make(3, {{3, "phi[1,2]"}});
    CHECK(checkNilpotentCoframe(s).certified());
    CHECK(checkParallelizable(s).certified());
    CHECK(checkSalamon(s).certified());
    auto kt = make(2, {{2, "phi[1;1]"}});
    CHECK(checkNilpotentCoframe(kt).certified());
    CHECK(checkParallelizable(kt).refuted());
    auto loop = make(3, {{1, "phi[2,3]"}});
    CHECK(checkNilpotentCoframe(loop).refuted());
    auto eta = loadCatalog("etabeta5").structure;
    CHECK(checkNilpotentCoframe(eta).certified());
    CHECK(checkParallelizable(eta).certified());
    CHECK(checkSalamon(eta).certified());
}

TEST_CASE("structure equations print and re-parse") {
    auto eta = loadCatalog("symplectic3-family").structure;
    CHECK(eta.dphi(5) == parseFormExpression(eta.dphi(5).toString(), 5, 6));
    CHECK_FALSE(eta.toString().empty());
}
