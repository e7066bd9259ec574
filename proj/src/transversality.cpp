#include "nilkahler/transversality.hpp"

#include <algorithm>

namespace nilkahler {

namespace {

// Throws unless omega is a real form of bidegree (p,p) (zero is allowed).
void requireRealPP(const Form& omega, int p) {
    for (const auto& [m, c] : omega.terms())
        if (m.p() != p || m.q() != p) throw Error("transversality needs a (p,p)-form");
    if (!isReal(omega)) throw Error("transversality needs a real form");
}

int formP(const Form& omega) {
    if (omega.isZero()) throw Error("cannot infer the bidegree of the zero form");
    auto [p, q] = omega.bidegree();
    if (p != q) throw Error("transversality needs a (p,p)-form");
    return p;
}

Form holomorphicForm(int n, const std::vector<MultiIndex>& basis, const std::vector<Scalar>& coeffs) {
    Form f(n);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add(Monomial{basis[i], {}}, coeffs[i]);
    return f;
}

ScalarMatrix pairingMatrixP(const Form& omega, int p) {
    int n = omega.n();
    int k = n - p;
    auto basis = holomorphicBasis(n, k);
    int dim = static_cast<int>(basis.size());
    ScalarMatrix m(dim, dim);
    std::uint32_t all = MultiIndex::range(n).mask();
    Scalar scale = Scalar::sigma(k) / Scalar::sigma(n);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            Monomial comp{MultiIndex::fromMask(all & ~basis[a].mask()), MultiIndex::fromMask(all & ~basis[b].mask())};
            Scalar c = omega.coefficient(comp);
            if (c.isZero()) continue;
            Monomial mine{basis[a], basis[b]};
            int s = wedgeSign(comp.letters(), mine.letters());
            m(a, b) = (s < 0 ? -c : c) * scale;
        }
    return m;
}

}  // namespace

ScalarMatrix pairingMatrix(const Form& omega) {
    int p = formP(omega);
    requireRealPP(omega, p);
    return pairingMatrixP(omega, p);
}

Scalar pairingValue(const Form& omega, const Form& beta) {
    int k = 0;
    if (!beta.isZero()) k = beta.bidegree().first;
    Form top = wedge(wedge(omega, beta), conjugate(beta)) * Scalar::sigma(k);
    return volumeCoefficient(top);
}

namespace {

const MultiIndex kConeSlots[6] = {MultiIndex{1, 2}, MultiIndex{1, 3}, MultiIndex{1, 4},
                                  MultiIndex{2, 3}, MultiIndex{2, 4}, MultiIndex{3, 4}};
const int kConeSigns[6] = {1, 1, 1, 1, -1, 1};

}  // namespace

ScalarMatrix coneMatrix(const Form& omega) {
    if (omega.n() != 4) throw Error("cone matrix needs n = 4");
    requireRealPP(omega, 2);
    ScalarMatrix a(6, 6);
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) {
            Scalar c = omega.coefficient(Monomial{kConeSlots[j], kConeSlots[k]});
            a(j, k) = kConeSigns[j] * kConeSigns[k] < 0 ? -c : c;
        }
    return a;
}

Scalar coneValue(const ScalarMatrix& a, const std::vector<Scalar>& z) {
    if (a.rows() != 6 || a.cols() != 6 || z.size() != 6) throw Error("cone value needs a 6x6 matrix and 6 coordinates");
    Scalar s;
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
            if (!a(j, k).isZero()) s += z[j].conj() * a(j, k) * z[k];
    return s;
}

bool onCone(const std::vector<Scalar>& z) {
    if (z.size() != 6) throw Error("cone vectors have 6 coordinates");
    return (z[0] * z[5] + z[1] * z[4] + z[2] * z[3]).isZero();
}

Form coneVectorForm(const std::vector<Scalar>& z) {
    if (z.size() != 6) throw Error("cone vectors have 6 coordinates");
    Form beta(4);
    for (int k = 0; k < 6; ++k) {
        Scalar c = z[5 - k].conj();
        beta.add(Monomial{kConeSlots[k], {}}, kConeSigns[k] < 0 ? -c : c);
    }
    return beta;
}

Verdict lemmaChainCheck(const Form& omega) {
    const std::string method = "chain";
    if (omega.n() != 4) return Verdict::unknown(method, "needs n = 4");
    for (const auto& [m, c] : omega.terms())
        if (m.p() != 2 || m.q() != 2) return Verdict::unknown(method, "needs a (2,2)-form");
    if (!isReal(omega)) throw Error("transversality needs a real form");
    ScalarMatrix a = coneMatrix(omega);
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k)
            if (j != k && j + k != 5 && !a(j, k).isZero())
                return Verdict::unknown(method, "cone matrix couples non-complementary slots " +
                                                    std::to_string(j + 1) + "," + std::to_string(k + 1));
    for (int j = 0; j < 6; ++j)
        if (a(j, j).sign() <= 0)
            return Verdict::unknown(method, "diagonal entry " + std::to_string(j + 1) + " is not positive");
    // d_j |z_j|^2 + d_k |z_k|^2 + 2 Re(a zbar_j z_k) >= 2 (sqrt(d_j d_k) - |a|) |z_j z_k|,
    // and on the cone the three products sum to zero.
    int tight = 0;
    std::string slack;
    for (int j = 0; j < 3; ++j) {
        Scalar gap = a(j, j) * a(5 - j, 5 - j) - a(j, 5 - j).normSquared();
        int s = gap.sign();
        if (s < 0)
            return Verdict::unknown(method, "pair " + std::to_string(j + 1) + "," + std::to_string(6 - j) +
                                                " has |a|^2 > d_j d_k");
        if (s == 0) ++tight;
        slack += (slack.empty() ? "" : ",") + gap.toString();
    }
    if (tight > 1) return Verdict::unknown(method, "more than one tight pair");
    return Verdict::certify(method, "pair gaps " + slack);
}

namespace {

Verdict transverseExact(const Form& omega, int p);

Verdict definiteCheckP(const Form& omega, int p) {
    const std::string method = "definite";
    int n = omega.n();
    int k = n - p;
    if (k < 0) throw Error("bidegree exceeds the dimension");
    if (!(k <= 1 || k >= n - 1)) return Verdict::unknown(method, "not every (k,0)-form is simple");
    ScalarMatrix m = pairingMatrixP(omega, p);
    std::vector<Scalar> x;
    if (isPositiveDefinite(m, &x)) return Verdict::certify(method, "pairing matrix is positive definite");
    std::vector<Scalar> b;
    for (const auto& s : x) b.push_back(s.conj());
    Verdict v = Verdict::refute(method, "pairing matrix is not positive definite");
    v.witness = holomorphicForm(n, holomorphicBasis(n, k), b);
    v.vector = b;
    return v;
}

Verdict splitRuleP(const Form& omega, int p, int j) {
    const std::string method = "split";
    int n = omega.n();
    if (j < 1 || j > n) throw Error("split direction out of range");
    Form rest(n);
    Form g(n);
    Monomial jj{MultiIndex{j}, MultiIndex{j}};
    for (const auto& [m, c] : omega.terms()) {
        bool h = m.hol.contains(j);
        bool a = m.anti.contains(j);
        if (!h && !a) {
            rest.add(m, c);
        } else if (h && a) {
            Monomial reduced{MultiIndex::fromMask(m.hol.mask() & ~(1u << (j - 1))),
                             MultiIndex::fromMask(m.anti.mask() & ~(1u << (j - 1)))};
            int s = wedgeSign(jj.letters(), reduced.letters());
            g.add(reduced, s < 0 ? -c : c);
        } else {
            return Verdict::unknown(method, "term " + m.toString() + " mixes index " + std::to_string(j));
        }
    }
    Form f = g * Scalar::sigma(1).inverse();
    Form rest0 = dropIndex(rest, j);
    Form f0 = dropIndex(f, j);
    std::string detail;
    if (p <= n - 1) {
        Verdict a = transverseExact(rest0, p);
        if (!a.certified()) return Verdict::unknown(method, "complement piece: " + a.method + " " + a.detail);
        detail = "complement by " + a.method;
    } else {
        detail = "complement vacuous";
    }
    Verdict b = transverseExact(f0, p - 1);
    if (!b.certified()) return Verdict::unknown(method, "fiber piece: " + b.method + " " + b.detail);
    Verdict v = Verdict::certify(method, "direction " + std::to_string(j) + ", " + detail + ", fiber by " + b.method);
    v.factors = {rest, f};
    return v;
}

Verdict transverseExact(const Form& omega, int p) {
    int n = omega.n();
    int k = n - p;
    if (omega.isZero()) {
        Verdict v = Verdict::refute("definite", "zero form");
        Form beta = Form::monomial(n, MultiIndex::range(k), MultiIndex{});
        v.witness = beta;
        return v;
    }
    if (k <= 1 || k >= n - 1) return definiteCheckP(omega, p);
    if (n == 4 && p == 2) {
        Verdict c = lemmaChainCheck(omega);
        if (c.certified()) return c;
    }
    std::string notes;
    for (int j = n; j >= 1; --j) {
        Verdict s = splitRuleP(omega, p, j);
        if (s.certified()) return s;
        notes += (notes.empty() ? "" : "; ") + s.detail;
    }
    return Verdict::unknown("split", notes);
}

}  // namespace

Verdict splitRule(const Form& omega, int j) {
    int p = formP(omega);
    requireRealPP(omega, p);
    return splitRuleP(omega, p, j);
}

Verdict definiteCheck(const Form& omega) {
    int p = formP(omega);
    requireRealPP(omega, p);
    return definiteCheckP(omega, p);
}

TransverseMethod parseTransverseMethod(const std::string& name) {
    if (name == "auto") return TransverseMethod::Auto;
    if (name == "chain") return TransverseMethod::Chain;
    if (name == "split") return TransverseMethod::Split;
    if (name == "minimize") return TransverseMethod::Minimize;
    if (name == "sample") return TransverseMethod::Sample;
    if (name == "definite") return TransverseMethod::Definite;
    throw Error("unknown transversality method '" + name + "'");
}

std::string methodName(TransverseMethod m) {
    switch (m) {
        case TransverseMethod::Auto: return "auto";
        case TransverseMethod::Chain: return "chain";
        case TransverseMethod::Split: return "split";
        case TransverseMethod::Minimize: return "minimize";
        case TransverseMethod::Sample: return "sample";
        case TransverseMethod::Definite: return "definite";
    }
    return "auto";
}

Verdict transverse(const Form& omega, TransverseMethod method, const TransverseOptions& opt) {
    int p = formP(omega);
    requireRealPP(omega, p);
    switch (method) {
        case TransverseMethod::Chain: return lemmaChainCheck(omega);
        case TransverseMethod::Split: {
            std::string notes;
            for (int j = omega.n(); j >= 1; --j) {
                Verdict s = splitRuleP(omega, p, j);
                if (s.certified()) return s;
                notes += (notes.empty() ? "" : "; ") + s.detail;
            }
            return Verdict::unknown("split", notes);
        }
        case TransverseMethod::Minimize: return transverseMinimize(omega, opt);
        case TransverseMethod::Sample: return transverseFalsify(omega, opt);
        case TransverseMethod::Definite: return definiteCheckP(omega, p);
        case TransverseMethod::Auto: break;
    }
    Verdict exact = transverseExact(omega, p);
    if (exact.outcome != Outcome::Unknown) return exact;
    Verdict numeric = transverseMinimize(omega, opt);
    if (numeric.outcome != Outcome::Unknown) return numeric;
    Verdict sampled = transverseFalsify(omega, opt);
    if (sampled.refuted()) return sampled;
    numeric.detail += "; exact: " + exact.detail;
    return numeric;
}

bool witnessIsValid(const Form& omega, const Verdict& v) {
    if (!v.refuted() || !v.witness) return false;
    const Form& beta = *v.witness;
    if (beta.isZero()) return false;
    if (!isSimple(beta).certified()) return false;
    return pairingValue(omega, beta).sign() <= 0;
}

}  // namespace nilkahler
