#include "nilkahler/catalog.hpp"

#include "nilkahler/deformation.hpp"
#include "nilkahler/special.hpp"
#include "nilkahler/transversality.hpp"

namespace nilkahler {

namespace {

const char* kEtaBeta5 = R"(name etabeta5
dimension 5
d phi5 = -phi[1,3] - phi[2,4]
form omega (1,1) = i/2*(phi[1;1] + phi[2;2] + phi[3;3] + phi[4;4] + phi[5;5])
form Omega (3,3) = sigma(3)*(phi[1,2,3;1,2,3] + phi[1,2,4;1,2,4] + phi[1,2,5;1,2,5] + phi[1,3,4;1,3,4] + phi[1,3,5;1,3,5] + phi[1,4,5;1,4,5] + phi[2,3,4;2,3,4] + phi[2,3,5;2,3,5] + phi[2,4,5;2,4,5] + phi[3,4,5;3,4,5] - phi[1,3,5;2,4,5] - phi[2,4,5;1,3,5])
form Omega_star (3,3) = sigma(3)*(phi[1,2,3;1,2,3] + phi[1,2,4;1,2,4] + phi[1,3,4;1,3,4] + phi[2,3,4;2,3,4] + 4*phi[1,2,5;1,2,5] + phi[1,3,5;1,3,5] + 4*phi[1,4,5;1,4,5] + phi[2,3,5;2,3,5] + phi[2,4,5;2,4,5] + phi[3,4,5;3,4,5] - phi[1,3,5;2,4,5] - phi[2,4,5;1,3,5] - phi[2,3,5;1,4,5] - phi[1,4,5;2,3,5])
)";

const char* kKahler3Family = R"(name kahler3-family
dimension 5
param a = 1
param b = 1
param c = 1
param d = 1
param e = 1
d phi5 = a*phi[1,3] + b*phi[1;2] + c*phi[1;4] + a*phi[2,4] + d*phi[2;1] + c*phi[2;3] + e*phi[3;2] - d*phi[3;4] + e*phi[4;1] - b*phi[4;3]
form Omega (3,3) = sigma(3)*(phi[1,2,3;1,2,3] + phi[1,2,4;1,2,4] + phi[1,2,5;1,2,5] + phi[1,3,4;1,3,4] + phi[1,3,5;1,3,5] + phi[1,4,5;1,4,5] + phi[2,3,4;2,3,4] + phi[2,3,5;2,3,5] + phi[2,4,5;2,4,5] + phi[3,4,5;3,4,5] - phi[1,3,5;2,4,5] - phi[2,4,5;1,3,5])
)";

const char* kSymplectic3Family = R"(name symplectic3-family
dimension 5
scalars sqrt 6
param a = sqrt(6)
param b = 1
param c = sqrt(6)
param L = 3*i*a/(8*b)
param N = 3*i*c/(8*b)
param P = -2*conj(b)*L/conj(c)
d phi5 = a*phi[1,2] + c*phi[3,4] + b*(phi[1;1] + phi[2;2] + phi[3;3] + phi[4;4])
form omega (1,1) = i/2*(phi[1;1] + phi[2;2] + phi[3;3] + phi[4;4] + phi[5;5])
form omega3 (3,3) = omega^3
form beta1 (4,2) = L*phi[1,2,4,5;4,5] + L*phi[1,2,3,5;3,5] + N*phi[1,3,4,5;1,5] + N*phi[2,3,4,5;2,5]
form beta2 (5,1) = P*phi[1,2,3,4,5;5]
form Psi = omega3 - beta1 - conj(beta1) + beta2 + conj(beta2)
form Psi_plus = omega3 + beta1 + conj(beta1) + beta2 + conj(beta2)
)";

std::string deformedSource() {
    return R"(name etabeta5-deformed
dimension 5
param t = 1/3
param a1 = 1
param T = 1/(1 - t*a1*conj(t*a1))
d phi5 = -T*t*a1*phi[3;1] - T*phi[1,3] - T*t*a1*phi[4;2] - T*phi[2,4]
form Omega_tilde (3,3) = sigma(3)*(phi[1,2,3;1,2,3] + phi[1,2,4;1,2,4] + phi[1,3,4;1,3,4] + phi[2,3,4;2,3,4] + 4*phi[1,2,5;1,2,5] + phi[1,3,5;1,3,5] + 4*phi[1,4,5;1,4,5] + phi[2,3,5;2,3,5] + phi[2,4,5;2,4,5] + phi[3,4,5;3,4,5] - phi[1,3,5;2,4,5] - phi[2,4,5;1,3,5] - phi[2,3,5;1,4,5] - phi[1,4,5;2,3,5])
)";
}

std::string curveSource(const std::string& name, const std::string& a1, const std::string& a2) {
    std::string s = kEtaBeta5;
    s.replace(0, s.find('\n'), "name " + name);
    s += "param a1 = " + a1 + "\nparam a2 = " + a2 + "\n";
    s += "vform theta1 bar1 = a1\nvform theta2 bar2 = a2\ncurve linear\n";
    return s;
}

const char* kLemmaC4 = R"(name lemma-c4
dimension 4
param a = 1/2
param b = 1/2
param a10 = 10
form Omega_ab (2,2) = 4*phi[1,2;1,2] + phi[1,3;1,3] + 4*phi[1,4;1,4] + phi[2,3;2,3] + phi[2,4;2,4] + phi[3,4;3,4] - a*phi[1,3;2,4] - conj(a)*phi[2,4;1,3] + b*phi[1,4;2,3] + conj(b)*phi[2,3;1,4]
form Omega_10 (2,2) = 4*phi[1,2;1,2] + phi[1,3;1,3] + 4*phi[1,4;1,4] + phi[2,3;2,3] + phi[2,4;2,4] + phi[3,4;3,4] - a10*phi[1,3;2,4] - a10*phi[2,4;1,3]
form F (2,2) = 4*phi[1,2;1,2] + phi[1,3;1,3] + 4*phi[1,4;1,4] + phi[2,3;2,3] + phi[2,4;2,4] + phi[3,4;3,4] - phi[1,3;2,4] - phi[2,4;1,3] - phi[2,3;1,4] - phi[1,4;2,3]
)";

const char* kIwasawa = R"(name iwasawa
dimension 3
d phi3 = phi[1,2]
form omega (1,1) = i/2*(phi[1;1] + phi[2;2] + phi[3;3])
form zeta (2,0) = phi[1,2]
form alpha (1,0) = phi[3]
)";

const char* kSurface = R"(name kt-surface
dimension 2
d phi2 = phi[1;1]
form gamma (1,0) = i*phi[2]
form beta (1,0) = phi[1]
)";

const char* kTorus3 = R"(name torus3
dimension 3
form omega (1,1) = i/2*(phi[1;1] + phi[2;2] + phi[3;3])
form omega2 (2,2) = omega^2
)";

std::vector<CatalogEntry> buildCatalog() {
    using O = Outcome;
    std::vector<CatalogEntry> c;
    c.push_back({"etabeta5",
                 "holomorphically parallelizable nilmanifold of complex dimension 5 with two 3-Kahler forms",
                 kEtaBeta5,
                 {{"integrable", {}, 0, O::Certified},
                  {"nilpotent", {}, 0, O::Certified},
                  {"parallelizable", {}, 0, O::Certified},
                  {"salamon", {}, 0, O::Certified},
                  {"pkahler", {"Omega"}, 3, O::Certified},
                  {"pkahler", {"Omega_star"}, 3, O::Certified},
                  {"metric:balanced", {}, 0, O::Certified},
                  {"metric:kahler", {}, 0, O::Refuted}}});
    c.push_back({"etabeta5-psi", "linear curve t phibar1 (x) theta1 on etabeta5",
                 curveSource("etabeta5-psi", "1", "0"),
                 {{"maurer-cartan", {}, 0, O::Certified},
                  {"obstruction", {"Omega"}, 3, O::Refuted},
                  {"obstruction", {"Omega_star"}, 3, O::Refuted}}});
    c.push_back({"etabeta5-psi-diag", "linear curve t (phibar1 (x) theta1 + phibar2 (x) theta2) on etabeta5",
                 curveSource("etabeta5-psi-diag", "1", "1"),
                 {{"maurer-cartan", {}, 0, O::Certified},
                  {"obstruction", {"Omega"}, 3, O::Refuted},
                  {"obstruction", {"Omega_star"}, 3, O::Certified}}});
    c.push_back({"etabeta5-deformed", "fiber t = 1/3 of the diagonal curve, in its own coframe", deformedSource(),
                 {{"integrable", {}, 0, O::Certified},
                  {"nilpotent", {}, 0, O::Certified},
                  {"parallelizable", {}, 0, O::Refuted},
                  {"pkahler", {"Omega_tilde"}, 3, O::Certified}}});
    c.push_back({"kahler3-family", "five-parameter family with a 3-Kahler form", kKahler3Family,
                 {{"integrable", {}, 0, O::Certified},
                  {"salamon", {}, 0, O::Certified},
                  {"pkahler", {"Omega"}, 3, O::Certified}}});
    c.push_back({"symplectic3-family", "3-symplectic, astheno-Kahler, non-Kahler example", kSymplectic3Family,
                 {{"integrable", {}, 0, O::Certified},
                  {"nilpotent", {}, 0, O::Certified},
                  {"parallelizable", {}, 0, O::Refuted},
                  {"psymplectic", {"Psi"}, 3, O::Certified},
                  {"psymplectic", {"Psi_plus"}, 3, O::Refuted},
                  {"ppluriclosed", {"omega3"}, 3, O::Certified},
                  {"pkahler", {"omega3"}, 3, O::Refuted},
                  {"metric:astheno", {}, 0, O::Certified},
                  {"metric:kahler", {}, 0, O::Refuted}}});
    c.push_back({"lemma-c4", "real (2,2)-forms on C^4 in cone coordinates", kLemmaC4,
                 {{"transverse", {"Omega_ab"}, 2, O::Certified},
                  {"transverse", {"F"}, 2, O::Certified},
                  {"transverse", {"Omega_10"}, 2, O::Refuted}}});
    c.push_back({"iwasawa", "complex Heisenberg group quotient", kIwasawa,
                 {{"integrable", {}, 0, O::Certified},
                  {"parallelizable", {}, 0, O::Certified},
                  {"metric:kahler", {}, 0, O::Refuted},
                  {"metric:balanced", {}, 0, O::Certified},
                  {"ab", {"zeta", "alpha"}, 1, O::Certified}}});
    c.push_back({"kt-surface", "surface with d phi2 = phi^{1 1bar}", kSurface,
                 {{"integrable", {}, 0, O::Certified},
                  {"stokes", {"gamma", "beta"}, 1, O::Certified},
                  {"metric:kahler", {}, 0, O::Refuted}}});
    c.push_back({"torus3", "complex torus of dimension 3", kTorus3,
                 {{"pkahler", {"omega"}, 1, O::Certified},
                  {"pkahler", {"omega2"}, 2, O::Certified},
                  {"metric:kahler", {}, 0, O::Certified}}});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = buildCatalog();
    return entries;
}

const CatalogEntry& catalogEntry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw Error("no catalog entry named '" + name + "'");
}

Document loadCatalog(const std::string& name, const std::map<std::string, Scalar>& overrides) {
    return parseDocument(catalogEntry(name).source, overrides);
}

Form lemmaForm(const Scalar& a, const Scalar& b) {
    Document doc = loadCatalog("lemma-c4", {{"a", a}, {"b", b}});
    return doc.form("Omega_ab");
}

ExpectationResult runExpectation(const CatalogEntry& entry, const Document& doc, const Expectation& e) {
    ExpectationResult r;
    r.entry = &entry;
    r.expectation = e;
    const StructureEquations& s = doc.structure;
    auto form = [&](std::size_t k) -> const Form& { return doc.form(e.forms.at(k)); };
    auto take = [&](const Verdict& v) {
        r.actual = v.outcome;
        r.detail = v.method + ": " + v.detail;
    };
    auto takeReport = [&](const StructureReport& rep) {
        r.actual = rep.outcome;
        r.detail = rep.detail;
    };
    try {
        if (e.check == "integrable") {
            take(checkIntegrable(s));
        } else if (e.check == "nilpotent") {
            take(checkNilpotentCoframe(s));
        } else if (e.check == "parallelizable") {
            take(checkParallelizable(s));
        } else if (e.check == "salamon") {
            take(checkSalamon(s));
        } else if (e.check == "pkahler") {
            takeReport(checkPKahler(s, form(0), e.p));
        } else if (e.check == "ppluriclosed") {
            takeReport(checkPPluriclosed(s, form(0), e.p));
        } else if (e.check == "psymplectic") {
            takeReport(checkPSymplectic(s, form(0), e.p));
        } else if (e.check == "transverse") {
            take(transverse(form(0)));
        } else if (e.check.rfind("metric:", 0) == 0) {
            takeReport(checkMetric(s, ScalarMatrix::identity(s.n()), parseMetricKind(e.check.substr(7))));
        } else if (e.check == "maurer-cartan") {
            if (!doc.vectorForm) throw Error("entry has no vector form");
            take(maurerCartan(s, *doc.vectorForm));
        } else if (e.check == "obstruction") {
            if (!doc.vectorForm) throw Error("entry has no vector form");
            Obstruction o = firstOrderObstruction(s, form(0), *doc.vectorForm);
            // Certified: first-order extension exists (class zero).
            r.actual = o.delbarClass.isZero ? Outcome::Certified : Outcome::Refuted;
            r.detail = o.delbarClass.isZero ? "delbar-class zero" : "delbar-class nonzero";
        } else if (e.check == "ab") {
            take(abWitness(s, form(0), form(1), e.p));
        } else if (e.check == "stokes") {
            take(stokesWitness(s, form(0), form(1), e.p));
        } else {
            throw Error("unknown expectation check '" + e.check + "'");
        }
    } catch (const Error& ex) {
        r.actual = Outcome::Unknown;
        r.detail = std::string("error: ") + ex.what();
    }
    return r;
}

std::vector<ExpectationResult> runCatalogSelftest() {
    std::vector<ExpectationResult> out;
    for (const auto& entry : catalog()) {
        Document doc = parseDocument(entry.source);
        for (const auto& e : entry.expectations) out.push_back(runExpectation(entry, doc, e));
    }
    return out;
}

}  // namespace nilkahler
