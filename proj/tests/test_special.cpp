#include "nilkahler/catalog.hpp"
#include "nilkahler/cohomology.hpp"
#include "nilkahler/special.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nilkahler;
using testsupport::Gen;

namespace {

Form expr(const Document& doc, const std::string& text) {
    std::map<std::string, Scalar> params(doc.params.begin(), doc.params.end());
    return parseFormExpression(text, doc.n(), doc.radicand, params);
}

}  // namespace

TEST_CASE("metric powers") {
    Gen g(81);
    for (int t = 0; t < 20; ++t) {
        ScalarMatrix b = g.matrix(3, 3);
        ScalarMatrix h = b.adjoint() * b + ScalarMatrix::identity(3);
        Form w = metricForm(h);
        CHECK(isReal(w));
        CHECK(wedge(metricPower(h, 1), metricPower(h, 1)) == metricPower(h, 2));
        CHECK(volumeCoefficient(metricPower(h, 3)) == h.determinant() * Scalar(6));
    }
    CHECK_THROWS_AS(metricForm(ScalarMatrix(2, 2)), Error);
}

TEST_CASE("omega^3 coefficients in dimension 5") {
    Document doc = loadCatalog("symplectic3-family");
    Form w3 = doc.form("omega3");
    CHECK(w3.size() == 10);
    for (const auto& [m, c] : w3.terms()) {
        CHECK(m.hol == m.anti);
        CHECK(c == Scalar(0, Rational(3, 4)));
    }
}

TEST_CASE("metric kinds on catalog entries") {
    auto eta = loadCatalog("etabeta5").structure;
    auto id5 = ScalarMatrix::identity(5);
    CHECK(checkMetric(eta, id5, MetricKind::Kahler).outcome == Outcome::Refuted);
    CHECK(checkMetric(eta, id5, MetricKind::Balanced).certified());
    CHECK(checkMetric(eta, id5, MetricKind::Gauduchon).certified());
    CHECK(checkMetric(eta, id5, MetricKind::StronglyGauduchon).certified());
    auto sym = loadCatalog("symplectic3-family").structure;
    CHECK(checkMetric(sym, id5, MetricKind::Astheno).certified());
    CHECK(checkMetric(sym, id5, MetricKind::Kahler).outcome == Outcome::Refuted);
    CHECK(checkMetric(sym, id5, MetricKind::Balanced).outcome == Outcome::Refuted);
    auto kt = loadCatalog("kt-surface").structure;
    // On a surface pluriclosed and Gauduchon coincide; the standard metric is both.
    CHECK(checkMetric(kt, ScalarMatrix::identity(2), MetricKind::Pluriclosed).certified());
    CHECK(checkMetric(kt, ScalarMatrix::identity(2), MetricKind::Gauduchon).certified());
    CHECK(checkMetric(kt, ScalarMatrix::identity(2), MetricKind::Kahler).outcome == Outcome::Refuted);
    CHECK_THROWS_AS(checkMetric(kt, ScalarMatrix::identity(2), MetricKind::Astheno), Error);
    for (auto k : {MetricKind::Kahler, MetricKind::Balanced, MetricKind::Pluriclosed, MetricKind::Astheno,
                   MetricKind::Gauduchon, MetricKind::StronglyGauduchon})
        CHECK(parseMetricKind(metricKindName(k)) == k);
}

TEST_CASE("3-Kahler forms on etabeta5") {
    Document doc = loadCatalog("etabeta5");
    CHECK(d(doc.structure, doc.form("Omega")).isZero());
    CHECK(d(doc.structure, doc.form("Omega_star")).isZero());
    CHECK(checkPKahler(doc.structure, doc.form("Omega_star"), 3).certified());
    CHECK_THROWS_AS(checkPKahler(doc.structure, doc.form("Omega_star"), 2), Error);
    CHECK_THROWS_AS(checkPKahler(doc.structure, doc.form("omega") * Scalar::i(), 1), Error);
}

TEST_CASE("five-parameter family: delbar identities at random Gaussian parameters") {
    Gen g(82);
    const std::pair<const char*, const char*> identities[] = {
        {"phi[1,2,5;1,2,5]", "-d*phi[1,2,3;1,2,4,5] - b*phi[1,2,4;1,2,3,5]"},
        {"phi[1,3,5;1,3,5]", "conj(a)*phi[1,3,5;1,2,3,4]"},
        {"phi[1,4,5;1,4,5]", "c*phi[1,2,4;1,3,4,5] + e*phi[1,3,4;1,2,4,5]"},
        {"phi[2,3,5;2,3,5]", "c*phi[1,2,3;2,3,4,5] + e*phi[2,3,4;1,2,3,5]"},
        {"phi[3,4,5;3,4,5]", "b*phi[1,3,4;2,3,4,5] + d*phi[2,3,4;1,3,4,5]"},
        {"phi[2,4,5;2,4,5]", "conj(a)*phi[2,4,5;1,2,3,4]"},
        {"phi[1,3,5;2,4,5]",
         "-d*phi[1,2,3;1,2,4,5] + c*phi[1,2,3;2,3,4,5] + e*phi[1,3,4;1,2,4,5] + b*phi[1,3,4;2,3,4,5] + "
         "conj(a)*phi[1,3,5;1,2,3,4]"},
        {"phi[2,4,5;1,3,5]",
         "-b*phi[1,2,4;1,2,3,5] + c*phi[1,2,4;1,3,4,5] + e*phi[2,3,4;1,2,3,5] + d*phi[2,3,4;1,3,4,5] + "
         "conj(a)*phi[2,4,5;1,2,3,4]"}};
    for (int t = 0; t < 5; ++t) {
        std::map<std::string, Scalar> ov;
        for (const char* name : {"a", "b", "c", "d", "e"}) ov[name] = g.nonzeroGaussian(5, 4);
        Document doc = loadCatalog("kahler3-family", ov);
        const auto& s = doc.structure;
        CHECK(checkIntegrable(s).certified());
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int k = j + 1; k <= 4; ++k)
                    CHECK(delbar(s, Form::monomial(5, MultiIndex{i, j, k}, MultiIndex{i, j, k})).isZero());
        for (const auto& [lhs, rhs] : identities) CHECK_MESSAGE(delbar(s, expr(doc, lhs)) == expr(doc, rhs), lhs);
        CHECK(delbar(s, doc.form("Omega")).isZero());
        CHECK(d(s, doc.form("Omega")).isZero());
    }
}

TEST_CASE("3-symplectic family: cascade component identities") {
    Gen g(83);
    // The component identities hold for any parameters; the closedness
    // conditions then pin L, N and P.
    for (int t = 0; t < 5; ++t) {
        std::map<std::string, Scalar> ov;
        for (const char* name : {"a", "b", "c", "L", "N", "P"}) ov[name] = g.nonzeroGaussian(4, 3);
        Document doc = loadCatalog("symplectic3-family", ov);
        const auto& s = doc.structure;
        CHECK(del(s, doc.form("omega3")) ==
              expr(doc, "3/4*i*(-3*conj(b)*(phi[1,2,3,5;1,2,3] + phi[1,2,4,5;1,2,4] + phi[1,3,4,5;1,3,4] + "
                        "phi[2,3,4,5;2,3,4]) + a*phi[1,2,3,4;3,4,5] + c*phi[1,2,3,4;1,2,5])"));
        CHECK(delbar(s, doc.form("beta1")) ==
              expr(doc, "2*b*L*phi[1,2,3,4;3,4,5] + 2*b*N*phi[1,2,3,4;1,2,5] - conj(a)*L*phi[1,2,4,5;1,2,4] - "
                        "conj(a)*L*phi[1,2,3,5;1,2,3] - conj(c)*N*phi[1,3,4,5;1,3,4] - conj(c)*N*phi[2,3,4,5;2,3,4]"));
        CHECK(delbar(s, doc.form("beta2")) ==
              expr(doc, "-conj(a)*P*phi[1,2,3,4,5;1,2] - conj(c)*P*phi[1,2,3,4,5;3,4]"));
        CHECK(del(s, doc.form("beta1")) ==
              expr(doc, "2*conj(b)*L*phi[1,2,3,4,5;3,4] + 2*conj(b)*N*phi[1,2,3,4,5;1,2]"));
    }
}

TEST_CASE("3-symplectic family at a = c = sqrt(6), b = 1") {
    Document doc = loadCatalog("symplectic3-family");
    const auto& s = doc.structure;
    CHECK(del(s, doc.form("omega3")) == delbar(s, doc.form("beta1")));
    CHECK(del(s, doc.form("beta1")) == delbar(s, doc.form("beta2")));
    CHECK(d(s, doc.form("Psi")).isZero());
    CHECK(checkPSymplectic(s, doc.form("Psi"), 3).certified());
    CHECK(checkPSymplectic(s, doc.form("Psi_plus"), 3).outcome == Outcome::Refuted);
    CHECK(deldelbar(s, doc.form("omega3")).isZero());
    CHECK_FALSE(d(s, doc.form("omega")).isZero());

    // Each perturbation of the constraints breaks closedness.
    const std::map<std::string, Scalar> perturbations[] = {
        {{"L", doc.param("L") + Scalar(Rational(1, 7))}},
        {{"N", doc.param("N") + Scalar(0, Rational(1, 5))}},
        {{"a", Scalar(2)}},
        {{"c", Scalar(3)}},
        {{"b", Scalar(2)}},
        {{"P", doc.param("P") * Scalar(2)}}};
    for (const auto& ov : perturbations) {
        Document bad = loadCatalog("symplectic3-family", ov);
        CHECK_MESSAGE(checkPSymplectic(bad.structure, bad.form("Psi"), 3).outcome == Outcome::Refuted,
                      ov.begin()->first);
    }
}

TEST_CASE("obstruction witnesses") {
    Document iwa = loadCatalog("iwasawa");
    CHECK(abWitness(iwa.structure, iwa.form("zeta"), iwa.form("alpha"), 1).certified());
    CHECK(abWitness(iwa.structure, iwa.form("zeta"), Form(3), 1).refuted());
    CHECK(checkPKahler(iwa.structure, iwa.form("omega"), 1).outcome == Outcome::Refuted);

    Document kt = loadCatalog("kt-surface");
    Verdict st = stokesWitness(kt.structure, kt.form("gamma"), kt.form("beta"), 1);
    CHECK(st.certified());
    CHECK(stokesWitness(kt.structure, kt.form("gamma") * Scalar(-1), kt.form("beta"), 1).refuted());

    auto s4 = StructureEquations(4, {Form(4), Form(4), Form(4), parseFormExpression("phi[1,2]", 4)});
    Form zeta = parseFormExpression("phi[1,2]", 4), alpha = parseFormExpression("phi[4]", 4);
    CHECK(abWitness(s4, zeta, alpha, 2).certified());
    PromotedWitness pw = promoteWitness(s4, zeta, alpha, 2, 3);
    CHECK(pw.verdict.certified());
    CHECK(pw.zeta == parseFormExpression("-phi[1,2,3]", 4));
    CHECK_THROWS_AS(promoteWitness(s4, zeta, alpha, 2, 4), Error);
}

TEST_CASE("ab witnesses and p-Kahler structures never coexist on catalog data") {
    for (const auto& entry : catalog()) {
        Document doc = parseDocument(entry.source);
        for (const auto& e : entry.expectations) {
            if (e.check != "ab" || e.expected != Outcome::Certified) continue;
            for (const auto& other : entry.expectations)
                if (other.check == "pkahler" && other.p == e.p) CHECK(other.expected != Outcome::Certified);
        }
    }
}

TEST_CASE("balanced promotion to a 4-Kahler form") {
    Document doc = loadCatalog("etabeta5");
    PromotedStructure ps = balancedPromotion(doc.structure, doc.form("Omega_star"), 1, 2);
    CHECK(ps.report.certified());
    CHECK(isReal(ps.form));
    CHECK_THROWS_AS(balancedPromotion(doc.structure, doc.form("Omega_star"), 1, 5), Error);
    auto torus = StructureEquations::abelian(4);
    Form w(4);
    for (int j = 1; j <= 4; ++j) w.add(Monomial{MultiIndex{j}, MultiIndex{j}}, Scalar::sigma(1));
    CHECK(checkPKahler(torus, power(w, 2), 2).certified());
}
