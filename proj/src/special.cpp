#include "nilkahler/special.hpp"

#include "nilkahler/cohomology.hpp"

namespace nilkahler {

Form metricForm(const ScalarMatrix& h) {
    int n = h.rows();
    if (h.cols() != n) throw Error("metric matrix must be square");
    if (!isPositiveDefinite(h)) throw Error("metric matrix is not positive definite");
    Form omega(n);
    Scalar half = Scalar::i() / Scalar(2);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (!h(j, k).isZero()) omega.add(Monomial{MultiIndex{j + 1}, MultiIndex{k + 1}}, half * h(j, k));
    return omega;
}

Form metricPower(const ScalarMatrix& h, int p) { return power(metricForm(h), p); }

MetricKind parseMetricKind(const std::string& name) {
    if (name == "kahler") return MetricKind::Kahler;
    if (name == "balanced") return MetricKind::Balanced;
    if (name == "pluriclosed" || name == "skt") return MetricKind::Pluriclosed;
    if (name == "astheno") return MetricKind::Astheno;
    if (name == "gauduchon") return MetricKind::Gauduchon;
    if (name == "sg" || name == "strongly_gauduchon") return MetricKind::StronglyGauduchon;
    throw Error("unknown metric kind '" + name + "'");
}

std::string metricKindName(MetricKind k) {
    switch (k) {
        case MetricKind::Kahler: return "kahler";
        case MetricKind::Balanced: return "balanced";
        case MetricKind::Pluriclosed: return "pluriclosed";
        case MetricKind::Astheno: return "astheno";
        case MetricKind::Gauduchon: return "gauduchon";
        case MetricKind::StronglyGauduchon: return "sg";
    }
    return "kahler";
}

namespace {

StructureReport finish(std::string check, Form residual, Verdict transversality) {
    StructureReport r;
    r.check = std::move(check);
    r.residual = std::move(residual);
    r.transversality = std::move(transversality);
    if (!r.residual.isZero()) {
        r.outcome = Outcome::Refuted;
        r.detail = "residual does not vanish";
    } else if (r.transversality.refuted()) {
        r.outcome = Outcome::Refuted;
        r.detail = "not transverse";
    } else if (r.transversality.certified()) {
        r.outcome = Outcome::Certified;
        r.detail = "closed and transverse (" + r.transversality.method + ")";
    } else {
        r.outcome = Outcome::Unknown;
        r.detail = "closed; transversality undecided";
    }
    return r;
}

void requireRealPP(const Form& omega, int p, int n) {
    if (p < 0 || p > n) throw Error("p out of range");
    for (const auto& [m, c] : omega.terms())
        if (m.p() != p || m.q() != p) throw Error("expected a (p,p)-form with p = " + std::to_string(p));
    if (!isReal(omega)) throw Error("expected a real form");
}

}  // namespace

StructureReport checkMetric(const StructureEquations& s, const ScalarMatrix& h, MetricKind kind) {
    int n = s.n();
    if (h.rows() != n) throw Error("metric matrix has the wrong size");
    Form omega = metricForm(h);
    Verdict metric = Verdict::certify("metric", "positive definite Hermitian matrix");
    switch (kind) {
        case MetricKind::Kahler: return finish("kahler", d(s, omega), metric);
        case MetricKind::Balanced: return finish("balanced", d(s, power(omega, n - 1)), metric);
        case MetricKind::Pluriclosed: return finish("pluriclosed", deldelbar(s, omega), metric);
        case MetricKind::Astheno: {
            if (n < 3) throw Error("astheno-Kahler needs n >= 3");
            return finish("astheno", deldelbar(s, power(omega, n - 2)), metric);
        }
        case MetricKind::Gauduchon: return finish("gauduchon", deldelbar(s, power(omega, n - 1)), metric);
        case MetricKind::StronglyGauduchon: {
            Form dw = del(s, power(omega, n - 1));
            // del omega^{n-1} has to be delbar-exact.
            Slice target = Slice::bidegree(n, n, n - 1);
            Slice source = Slice::bidegree(n, n, n - 2);
            LinearMap m = operatorMatrix(s, Operator::Delbar, source, target);
            StructureReport r = finish("sg", Form(n), metric);
            if (!m.solve(target.coordinates(dw))) {
                r.outcome = Outcome::Refuted;
                r.residual = dw;
                r.detail = "del omega^(n-1) is not delbar-exact";
            }
            return r;
        }
    }
    throw Error("unknown metric kind");
}

StructureReport checkPKahler(const StructureEquations& s, const Form& omega, int p, const TransverseOptions& opt) {
    requireRealPP(omega, p, s.n());
    Form residual = d(s, omega);
    Verdict t = residual.isZero() ? transverse(omega, TransverseMethod::Auto, opt) : Verdict::unknown("skipped");
    return finish("pkahler", residual, t);
}

StructureReport checkPPluriclosed(const StructureEquations& s, const Form& omega, int p,
                                  const TransverseOptions& opt) {
    requireRealPP(omega, p, s.n());
    Form residual = deldelbar(s, omega);
    Verdict t = residual.isZero() ? transverse(omega, TransverseMethod::Auto, opt) : Verdict::unknown("skipped");
    return finish("ppluriclosed", residual, t);
}

StructureReport checkPSymplectic(const StructureEquations& s, const Form& psi, int p, const TransverseOptions& opt) {
    if (!isReal(psi)) throw Error("expected a real form");
    for (const auto& [m, c] : psi.terms())
        if (m.degree() != 2 * p) throw Error("expected a form of degree 2p");
    Form residual = d(s, psi);
    Form core = psi.component(p, p);
    Verdict t = residual.isZero() ? transverse(core, TransverseMethod::Auto, opt) : Verdict::unknown("skipped");
    StructureReport r = finish("psymplectic", residual, t);
    if (!residual.isZero()) {
        std::string parts;
        for (auto [a, b] : residual.bidegrees())
            parts += (parts.empty() ? "" : ",") + std::string("(") + std::to_string(a) + "," + std::to_string(b) + ")";
        r.detail += "; dPsi has components " + parts;
    }
    return r;
}

Verdict stokesWitness(const StructureEquations& s, const Form& gamma, const Form& beta, int p) {
    const std::string method = "stokes";
    int n = s.n();
    int k = n - p;
    if (beta.isZero()) return Verdict::refute(method, "beta vanishes");
    if (beta.bidegree() != Bidegree{k, 0}) throw Error("beta must be a (k,0)-form with k = n - p");
    Verdict simple = isSimple(beta);
    if (!simple.certified()) return Verdict::refute(method, "beta is not simple");
    for (const auto& [m, c] : gamma.terms())
        if (m.degree() != 2 * k - 1) throw Error("gamma must have degree 2k - 1");
    Form dg = d(s, gamma);
    Form target = wedge(beta, conjugate(beta)) * Scalar::sigma(k);
    const auto& [m0, c0] = *target.terms().begin();
    Scalar ratio = dg.coefficient(m0) / c0;
    if (dg != target * ratio) {
        Verdict v = Verdict::refute(method, "d gamma is not a multiple of sigma_k beta ^ conj(beta)");
        v.witness = dg;
        return v;
    }
    if (!ratio.isReal() || ratio.sign() <= 0) return Verdict::refute(method, "multiple " + ratio.toString() + " is not positive");
    Verdict v = Verdict::certify(method, "d gamma = (" + ratio.toString() + ") sigma_k beta ^ conj(beta)");
    v.vector = {ratio};
    return v;
}

Verdict abWitness(const StructureEquations& s, const Form& zeta, const Form& alpha, int p) {
    const std::string method = "ab";
    int n = s.n();
    int k = n - p;
    if (zeta.isZero()) return Verdict::refute(method, "zeta vanishes");
    if (zeta.bidegree() != Bidegree{k, 0}) throw Error("zeta must be a (k,0)-form with k = n - p");
    if (!alpha.isZero() && alpha.bidegree() != Bidegree{k - 1, 0}) throw Error("alpha must be a (k-1,0)-form");
    if (!isSimple(zeta).certified()) return Verdict::refute(method, "zeta is not simple");
    Form db = delbar(s, zeta);
    if (!db.isZero()) {
        Verdict v = Verdict::refute(method, "delbar zeta != 0");
        v.witness = db;
        return v;
    }
    Form diff = zeta - (alpha.isZero() ? Form(n) : del(s, alpha));
    if (!diff.isZero()) {
        Verdict v = Verdict::refute(method, "zeta != del alpha");
        v.witness = diff;
        return v;
    }
    return Verdict::certify(method, "simple delbar-closed del-exact (k,0)-form");
}

PromotedWitness promoteWitness(const StructureEquations& s, const Form& zeta, const Form& alpha, int p, int j) {
    if (!s.dphi(j).isZero()) throw Error("promotion needs d phi" + std::to_string(j) + " = 0");
    Verdict base = abWitness(s, zeta, alpha, p);
    if (!base.certified()) throw Error("promotion needs a valid witness: " + base.detail);
    Form phij = Form::generator(s.n(), j);
    PromotedWitness out{-wedge(phij, zeta), wedge(phij, alpha), {}};
    if (out.zeta.isZero()) {
        out.verdict = Verdict::refute("ab", "phi" + std::to_string(j) + " occurs in every term of zeta");
        return out;
    }
    out.verdict = abWitness(s, out.zeta, out.alpha, p - 1);
    return out;
}

PromotedStructure balancedPromotion(const StructureEquations& s, const Form& omega, int a, int b,
                                    const TransverseOptions& opt) {
    if (!s.dphi(a).isZero() || !s.dphi(b).isZero()) throw Error("promotion needs d phi^a = d phi^b = 0");
    int n = s.n();
    if (omega.isZero()) throw Error("promotion of the zero form");
    int p = omega.bidegree().first;
    Form pa = Form::monomial(n, MultiIndex{a}, MultiIndex{a});
    Form pb = Form::monomial(n, MultiIndex{b}, MultiIndex{b});
    Form lifted = (wedge(omega, pa) + wedge(omega, pb)) * Scalar::sigma(1);
    return {lifted, checkPKahler(s, lifted, p + 1, opt)};
}

std::optional<Form> closedSimpleWitness(const StructureEquations& s, int k) {
    int n = s.n();
    if (k < 0 || k > n) return std::nullopt;
    if (checkSalamon(s).certified()) {
        Form xi = Form::monomial(n, MultiIndex::range(k), MultiIndex{});
        if (d(s, xi).isZero()) return xi;
    }
    for (MultiIndex m : holomorphicBasis(n, k)) {
        Form xi = Form::monomial(n, m, MultiIndex{});
        if (d(s, xi).isZero()) return xi;
    }
    return std::nullopt;
}

}  // namespace nilkahler
