// Command-line driver.  Reports go to stdout as key=value lines, diagnostics
// to stderr.  Exit codes: 0 certified or as expected, 1 refuted or mismatch,
// 2 usage or input error, 3 undecided where a decision was required.

#include "nilkahler/catalog.hpp"
#include "nilkahler/cohomology.hpp"
#include "nilkahler/deformation.hpp"
#include "nilkahler/report.hpp"
#include "nilkahler/special.hpp"
#include "nilkahler/transversality.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nilkahler;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

int exitFor(Outcome o) {
    switch (o) {
        case Outcome::Certified: return kExitOk;
        case Outcome::Refuted: return kExitRefuted;
        case Outcome::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

std::string readSource(const std::string& src) {
    if (src.rfind("catalog:", 0) == 0) return catalogEntry(src.substr(8)).source;
    std::ifstream in(src);
    if (!in) throw Error("cannot open '" + src + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Overrides are parsed after a first pass so that sqrt(D) resolves.
Document load(const std::string& src, const std::vector<std::string>& params) {
    std::string text = readSource(src);
    if (params.empty()) return parseDocument(text);
    Document first = parseDocument(text);
    std::map<std::string, Scalar> overrides;
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error("--param expects NAME=VALUE, got '" + kv + "'");
        overrides[kv.substr(0, eq)] = parseScalarExpression(kv.substr(eq + 1), first.radicand);
    }
    return parseDocument(text, overrides);
}

std::pair<int, int> parsePair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw Error("expected p,q but got '" + text + "'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

// Hermitian matrix of a real (1,1)-form (i/2) sum H_jk phi^j ^ phibar^k.
ScalarMatrix metricMatrix(const Form& omega) {
    int n = omega.n();
    ScalarMatrix h(n, n);
    Scalar factor = Scalar(0, -2);
    for (const auto& [m, c] : omega.terms()) {
        if (m.p() != 1 || m.q() != 1) throw Error("fundamental form must be of type (1,1)");
        h(m.hol.indices()[0] - 1, m.anti.indices()[0] - 1) = c * factor;
    }
    return h;
}

void printForm(const std::string& head, const std::string& key, const Form& f) {
    std::cout << ReportLine(head).add(key, f.toString()).str() << "\n";
}

struct Common {
    std::string source;
    std::vector<std::string> params;
};

void addCommon(CLI::App* app, Common& c) {
    app->add_option("source", c.source, "structure file or catalog:NAME")->required();
    app->add_option("--param", c.params, "override a declared parameter, NAME=VALUE");
}

int runVerify(const Common& c, const std::string& check) {
    Document doc = load(c.source, c.params);
    Verdict v;
    if (check == "integrable")
        v = checkIntegrable(doc.structure);
    else if (check == "nilpotent")
        v = checkNilpotentCoframe(doc.structure);
    else if (check == "parallelizable")
        v = checkParallelizable(doc.structure);
    else
        v = checkSalamon(doc.structure);
    std::cout << ReportLine("verify").add("name", doc.name).add("check", check).add(v).str() << "\n";
    return exitFor(v.outcome);
}

int runDiff(const Common& c, const std::string& formName, const std::string& op) {
    Document doc = load(c.source, c.params);
    const Form& f = doc.form(formName);
    Form out;
    if (op == "d")
        out = d(doc.structure, f);
    else if (op == "del")
        out = delComponentwise(doc.structure, f);
    else if (op == "delbar")
        out = delbarComponentwise(doc.structure, f);
    else
        out = delComponentwise(doc.structure, delbarComponentwise(doc.structure, f));
    std::cout << ReportLine("diff").add("op", op).add("form", formName).add("zero", out.isZero()).add("result", out.toString()).str()
              << "\n";
    return kExitOk;
}

int runStructure(const Common& c, const std::string& kind, int p, const std::string& formName,
                 const TransverseOptions& opt) {
    Document doc = load(c.source, c.params);
    const StructureEquations& s = doc.structure;
    StructureReport r;
    if (kind == "pkahler" || kind == "ppluriclosed" || kind == "psymplectic") {
        if (formName.empty()) throw Error("--form is required for --kind " + kind);
        if (p <= 0) throw Error("--p is required for --kind " + kind);
        const Form& f = doc.form(formName);
        if (kind == "pkahler")
            r = checkPKahler(s, f, p, opt);
        else if (kind == "ppluriclosed")
            r = checkPPluriclosed(s, f, p, opt);
        else
            r = checkPSymplectic(s, f, p, opt);
    } else {
        MetricKind mk = parseMetricKind(kind);
        ScalarMatrix h = formName.empty() ? ScalarMatrix::identity(s.n()) : metricMatrix(doc.form(formName));
        r = checkMetric(s, h, mk);
    }
    ReportLine line("structure");
    line.add("name", doc.name).add("kind", kind);
    if (p > 0) line.add("p", p);
    if (!formName.empty()) line.add("form", formName);
    line.add("outcome", outcomeName(r.outcome)).add("detail", r.detail);
    line.add("transversality", r.transversality.method + ":" + outcomeName(r.transversality.outcome));
    std::cout << line.str() << "\n";
    if (!r.residual.isZero()) printForm("residual", "form", r.residual);
    return exitFor(r.outcome);
}

int runTransverse(const Common& c, const std::string& formName, const std::string& method,
                  const TransverseOptions& opt) {
    Document doc = load(c.source, c.params);
    const Form& f = doc.form(formName);
    Verdict v = transverse(f, parseTransverseMethod(method), opt);
    std::cout << ReportLine("transverse").add("name", doc.name).add("form", formName).add(v).str() << "\n";
    if (v.refuted() && v.witness) {
        std::cout << ReportLine("witness")
                         .add("beta", v.witness->toString())
                         .add("pairing", pairingValue(f, *v.witness).toString())
                         .add("verified", witnessIsValid(f, v))
                         .str()
                  << "\n";
    }
    if (v.certified() && v.method == "split" && v.factors.size() == 2) {
        printForm("split", "complement", v.factors[0]);
        printForm("split", "fiber", v.factors[1]);
    }
    return exitFor(v.outcome);
}

int runCohomology(const Common& c, const std::string& theoryText, const std::string& bidegree, int degree,
                  bool representatives) {
    Document doc = load(c.source, c.params);
    const StructureEquations& s = doc.structure;
    Theory theory = parseTheory(theoryText);
    int n = s.n();
    auto emit = [&](const CohomologyResult& r, const std::string& key, const std::string& value) {
        std::cout << ReportLine("cohomology").add("theory", theoryName(theory)).add(key, value).add("dim", r.dimension).str()
                  << "\n";
        if (representatives)
            for (const Form& f : r.representatives) printForm("representative", "form", f);
    };
    if (theory == Theory::DeRham) {
        if (!bidegree.empty()) throw Error("de Rham cohomology takes --degree, not --bidegree");
        for (int r = 0; r <= 2 * n; ++r)
            if (degree < 0 || degree == r) emit(deRham(s, r), "degree", std::to_string(r));
        return kExitOk;
    }
    if (degree >= 0) throw Error("complex theories take --bidegree, not --degree");
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            if (!bidegree.empty() && parsePair(bidegree) != std::pair{p, q}) continue;
            emit(cohomology(s, theory, p, q), "bidegree", "(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
    return kExitOk;
}

int runClass(const Common& c, const std::string& formName, const std::string& theoryText, const std::string& expect) {
    Document doc = load(c.source, c.params);
    Theory theory = parseTheory(theoryText);
    const Form& f = doc.form(formName);
    ClassResult r = classIsZero(doc.structure, f, theory);
    ReportLine line("class");
    line.add("name", doc.name).add("form", formName).add("theory", theoryName(theory));
    line.add("class", r.isZero ? "zero" : "nonzero").add("detail", r.detail);
    std::cout << line.str() << "\n";
    for (const Form& prim : r.primitive) printForm("primitive", "form", prim);
    if (!r.isZero)
        std::cout << ReportLine("functional").add("form", r.functional.toString()).add("pairing", r.pairing.toString()).str()
                  << "\n";
    if (expect.empty()) return kExitOk;
    return (expect == "zero") == r.isZero ? kExitOk : kExitRefuted;
}

int runDeform(const std::string& curve, const std::vector<std::string>& params, const std::string& omegaName,
              const std::string& omegaPrimeName, bool expectCurve, const std::string& tText) {
    Document doc = load(curve, params);
    if (!doc.vectorForm) throw Error("curve file has no vform lines");
    const StructureEquations& s = doc.structure;
    const VectorForm& v = *doc.vectorForm;
    Verdict mc = maurerCartan(s, v);
    std::cout << ReportLine("maurer-cartan").add("name", doc.name).add(mc).str() << "\n";
    const Form& omega = doc.form(omegaName);
    std::optional<Form> omegaPrime;
    if (!omegaPrimeName.empty()) omegaPrime = doc.form(omegaPrimeName);
    Obstruction o = firstOrderObstruction(s, omega, v, omegaPrime);
    printForm("contracted", "form", o.contracted);
    if (omegaPrime) printForm("residual", "form", o.residual);
    std::cout << ReportLine("obstruction")
                     .add("omega", omegaName)
                     .add("class", o.delbarClass.isZero ? "zero" : "nonzero")
                     .add("detail", o.delbarClass.detail)
                     .str()
              << "\n";
    if (!tText.empty()) {
        Scalar t = parseScalarExpression(tText, doc.radicand);
        VectorForm vt = v;
        for (int a = 0; a < vt.rows(); ++a)
            for (int b = 0; b < vt.cols(); ++b) vt(a, b) = vt(a, b) * t;
        DeformedOperator db = deformedDelbar(s, vt, omega);
        DeformedOperator dd = deformedDel(s, vt, omega);
        std::cout << ReportLine("fiber")
                         .add("t", t.toString())
                         .add("delbar_t_zero", db.pre.isZero())
                         .add("del_t_zero", dd.pre.isZero())
                         .str()
                  << "\n";
    }
    if (!expectCurve) return kExitOk;
    if (mc.refuted()) return kExitRefuted;
    return o.delbarClass.isZero ? kExitOk : kExitRefuted;
}

std::string expectationLabel(const Expectation& e) {
    std::string s = e.check;
    for (const auto& f : e.forms) s += " " + f;
    if (e.p > 0) s += " p=" + std::to_string(e.p);
    return s;
}

int runCatalog(const std::string& action, const std::string& name) {
    if (action == "list") {
        for (const auto& e : catalog())
            std::cout << ReportLine("entry").add("name", e.name).add("summary", e.summary).str() << "\n";
        return kExitOk;
    }
    if (action == "show") {
        if (name.empty()) throw Error("catalog show needs an entry name");
        const CatalogEntry& e = catalogEntry(name);
        std::cout << e.source;
        for (const auto& x : e.expectations)
            std::cout << "# expect " << expectationLabel(x) << " -> " << outcomeName(x.expected) << "\n";
        return kExitOk;
    }
    if (action == "selftest") {
        int failed = 0, total = 0;
        for (const auto& r : runCatalogSelftest()) {
            ++total;
            if (!r.passed()) ++failed;
            std::cout << ReportLine(r.passed() ? "PASS" : "FAIL")
                             .add("entry", r.entry->name)
                             .add("check", expectationLabel(r.expectation))
                             .add("expected", outcomeName(r.expectation.expected))
                             .add("actual", outcomeName(r.actual))
                             .add("detail", r.detail)
                             .str()
                      << "\n";
        }
        std::cout << ReportLine("selftest").add("total", total).add("failed", failed).str() << "\n";
        return failed == 0 ? kExitOk : kExitRefuted;
    }
    throw Error("unknown catalog action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for invariant p-Kahler, p-pluriclosed and p-symplectic structures"};
    app.require_subcommand(1);

    Common common;
    TransverseOptions opt;
    auto addTransverseOptions = [&](CLI::App* sub) {
        sub->add_option("--tol", opt.tolerance, "relative certification threshold of the minimizer");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--restarts", opt.restarts, "minimizer restarts");
        sub->add_option("--trials", opt.trials, "sampler trials");
    };

    std::string check;
    auto* verify = app.add_subcommand("verify", "check properties of the structure equations");
    addCommon(verify, common);
    verify->add_option("--check", check)
        ->required()
        ->check(CLI::IsMember({"integrable", "nilpotent", "parallelizable", "salamon"}));

    std::string formName, op;
    auto* diff = app.add_subcommand("diff", "apply a differential to a named form");
    addCommon(diff, common);
    diff->add_option("--form", formName)->required();
    diff->add_option("--op", op)->required()->check(CLI::IsMember({"d", "del", "delbar", "deldelbar"}));

    std::string kind;
    int p = 0;
    auto* structure = app.add_subcommand("structure", "check a special structure or metric");
    addCommon(structure, common);
    structure->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"pkahler", "ppluriclosed", "psymplectic", "kahler", "balanced", "skt", "pluriclosed",
                               "astheno", "gauduchon", "sg"}));
    structure->add_option("--p", p);
    structure->add_option("--form", formName);
    addTransverseOptions(structure);

    std::string method = "auto";
    auto* trans = app.add_subcommand("transverse", "decide transversality of a real (p,p)-form");
    addCommon(trans, common);
    trans->add_option("--form", formName)->required();
    trans->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "chain", "split", "minimize", "sample", "definite"}));
    addTransverseOptions(trans);

    std::string theory, bidegree;
    int degree = -1;
    bool reps = false;
    auto* coh = app.add_subcommand("cohomology", "dimensions of invariant cohomology");
    addCommon(coh, common);
    coh->add_option("--theory", theory)->required()->check(CLI::IsMember({"dR", "del", "delbar", "BC", "A"}));
    coh->add_option("--bidegree", bidegree, "p,q");
    coh->add_option("--degree", degree, "total degree for dR");
    coh->add_flag("--representatives", reps);

    std::string expect;
    auto* cls = app.add_subcommand("class", "decide whether the class of a form vanishes");
    addCommon(cls, common);
    cls->add_option("--form", formName)->required();
    cls->add_option("--theory", theory)->required()->check(CLI::IsMember({"dR", "del", "delbar", "BC", "A"}));
    cls->add_option("--expect", expect)->check(CLI::IsMember({"zero", "nonzero"}));

    std::string curve, omegaPrime, tText;
    bool expectCurve = false;
    std::vector<std::string> curveParams;
    auto* deform = app.add_subcommand("deform", "first-order obstruction along a linear curve");
    deform->add_option("--curve", curve, "curve file or catalog:NAME")->required();
    deform->add_option("--omega", formName)->required();
    deform->add_option("--omega-prime", omegaPrime);
    deform->add_option("--param", curveParams);
    deform->add_option("--t", tText, "also evaluate the deformed operators at this t");
    deform->add_flag("--expect-curve", expectCurve, "exit 1 unless a first-order extension exists");

    std::string action, entryName;
    auto* cat = app.add_subcommand("catalog", "built-in examples");
    cat->add_option("action", action)->required()->check(CLI::IsMember({"list", "show", "selftest"}));
    cat->add_option("name", entryName);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return runVerify(common, check);
        if (*diff) return runDiff(common, formName, op);
        if (*structure) return runStructure(common, kind, p, formName, opt);
        if (*trans) return runTransverse(common, formName, method, opt);
        if (*coh) return runCohomology(common, theory, bidegree, degree, reps);
        if (*cls) return runClass(common, formName, theory, expect);
        if (*deform) return runDeform(curve, curveParams, formName, omegaPrime, expectCurve, tText);
        if (*cat) return runCatalog(action, entryName);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
