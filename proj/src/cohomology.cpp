#include "nilkahler/cohomology.hpp"

#include "nilkahler/transversality.hpp"

#include <algorithm>
#include <bit>

namespace nilkahler {

Theory parseTheory(const std::string& name) {
    if (name == "dR" || name == "de_rham" || name == "derham") return Theory::DeRham;
    if (name == "del") return Theory::Del;
    if (name == "delbar") return Theory::Delbar;
    if (name == "BC" || name == "bc") return Theory::BottChern;
    if (name == "A" || name == "aeppli") return Theory::Aeppli;
    throw Error("unknown cohomology theory '" + name + "'");
}

std::string theoryName(Theory t) {
    switch (t) {
        case Theory::DeRham: return "dR";
        case Theory::Del: return "del";
        case Theory::Delbar: return "delbar";
        case Theory::BottChern: return "BC";
        case Theory::Aeppli: return "A";
    }
    return "dR";
}

Slice Slice::bidegree(int n, int p, int q) {
    Slice s;
    s.n_ = n;
    s.label_ = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    for (MultiIndex h : holomorphicBasis(n, p))
        for (MultiIndex a : holomorphicBasis(n, q)) s.basis_.push_back(Monomial{h, a});
    for (int i = 0; i < s.dimension(); ++i) s.index_[s.basis_[i]] = i;
    return s;
}

Slice Slice::degree(int n, int r) {
    Slice s;
    s.n_ = n;
    s.label_ = std::to_string(r);
    for (int p = 0; p <= r; ++p) {
        Slice b = bidegree(n, p, r - p);
        s.basis_.insert(s.basis_.end(), b.basis_.begin(), b.basis_.end());
    }
    std::sort(s.basis_.begin(), s.basis_.end(), MonomialLess{});
    for (int i = 0; i < s.dimension(); ++i) s.index_[s.basis_[i]] = i;
    return s;
}

SparseVector Slice::coordinates(const Form& f) const {
    SparseVector v;
    for (const auto& [m, c] : f.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) throw Error("term " + m.toString() + " lies outside slice " + label_);
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Form Slice::form(const SparseVector& v) const {
    Form f(n_);
    for (const auto& [i, c] : v) f.add(basis_.at(i), c);
    return f;
}

namespace {

Form applyOp(const StructureEquations& s, Operator op, const Form& f) {
    switch (op) {
        case Operator::D: return d(s, f);
        case Operator::Del: return delComponentwise(s, f);
        case Operator::Delbar: return delbarComponentwise(s, f);
        case Operator::DelDelbar: return delComponentwise(s, delbarComponentwise(s, f));
    }
    return f;
}

bool valid(int n, int p, int q) { return p >= 0 && q >= 0 && p <= n && q <= n; }

Slice safeBidegree(int n, int p, int q) {
    return valid(n, p, q) ? Slice::bidegree(n, p, q) : Slice::bidegree(0, 1, 1);  // empty
}

Slice safeDegree(int n, int r) { return (r >= 0 && r <= 2 * n) ? Slice::degree(n, r) : Slice::bidegree(0, 1, 1); }

}  // namespace

LinearMap operatorMatrix(const StructureEquations& s, Operator op, const Slice& source, const Slice& target) {
    LinearMap m;
    m.sourceDim = source.dimension();
    m.targetDim = target.dimension();
    for (const Monomial& b : source.basis()) {
        Form image = applyOp(s, op, Form::monomial(s.n(), b));
        m.columns.push_back(target.coordinates(image));
    }
    return m;
}

namespace {

struct Complex {
    Slice here;
    // Maps whose kernels intersect to the cycles.
    std::vector<std::pair<Operator, Slice>> cycleMaps;
    // Boundary pieces (operator, source slice) whose images span boundaries.
    std::vector<std::pair<Operator, Slice>> boundaryMaps;
};

Complex build(int n, Theory t, int p, int q) {
    Complex c;
    switch (t) {
        case Theory::DeRham:
            c.here = Slice::degree(n, p + q);
            c.cycleMaps.push_back({Operator::D, safeDegree(n, p + q + 1)});
            c.boundaryMaps.push_back({Operator::D, safeDegree(n, p + q - 1)});
            break;
        case Theory::Del:
            c.here = Slice::bidegree(n, p, q);
            c.cycleMaps.push_back({Operator::Del, safeBidegree(n, p + 1, q)});
            c.boundaryMaps.push_back({Operator::Del, safeBidegree(n, p - 1, q)});
            break;
        case Theory::Delbar:
            c.here = Slice::bidegree(n, p, q);
            c.cycleMaps.push_back({Operator::Delbar, safeBidegree(n, p, q + 1)});
            c.boundaryMaps.push_back({Operator::Delbar, safeBidegree(n, p, q - 1)});
            break;
        case Theory::BottChern:
            c.here = Slice::bidegree(n, p, q);
            c.cycleMaps.push_back({Operator::Del, safeBidegree(n, p + 1, q)});
            c.cycleMaps.push_back({Operator::Delbar, safeBidegree(n, p, q + 1)});
            c.boundaryMaps.push_back({Operator::DelDelbar, safeBidegree(n, p - 1, q - 1)});
            break;
        case Theory::Aeppli:
            c.here = Slice::bidegree(n, p, q);
            c.cycleMaps.push_back({Operator::DelDelbar, safeBidegree(n, p + 1, q + 1)});
            c.boundaryMaps.push_back({Operator::Del, safeBidegree(n, p - 1, q)});
            c.boundaryMaps.push_back({Operator::Delbar, safeBidegree(n, p, q - 1)});
            break;
    }
    return c;
}

LinearMap cycleMap(const StructureEquations& s, const Complex& c) {
    LinearMap m;
    m.sourceDim = c.here.dimension();
    m.targetDim = 0;
    m.columns.assign(m.sourceDim, {});
    for (const auto& [op, target] : c.cycleMaps) m = LinearMap::stack(m, operatorMatrix(s, op, c.here, target));
    return m;
}

LinearMap boundaryMap(const StructureEquations& s, const Complex& c) {
    LinearMap m;
    m.targetDim = c.here.dimension();
    for (const auto& [op, source] : c.boundaryMaps) {
        if (source.n() == 0 && source.dimension() == 0) {
            continue;
        }
        m = LinearMap::concat(m, operatorMatrix(s, op, source, c.here));
    }
    return m;
}

}  // namespace

CohomologyResult cohomology(const StructureEquations& s, Theory theory, int p, int q) {
    int n = s.n();
    if (theory == Theory::DeRham ? (p + q < 0 || p + q > 2 * n) : !valid(n, p, q))
        throw Error("degree out of range");
    Complex c = build(n, theory, p, q);
    LinearMap z = cycleMap(s, c);
    LinearMap b = boundaryMap(s, c);
    auto cycles = z.kernel();
    auto reps = quotientBasis(b.columns, cycles);
    CohomologyResult r;
    r.dimension = static_cast<int>(reps.size());
    for (const auto& v : reps) r.representatives.push_back(c.here.form(v));
    return r;
}

CohomologyResult deRham(const StructureEquations& s, int r) {
    if (r < 0 || r > 2 * s.n()) throw Error("degree out of range");
    return cohomology(s, Theory::DeRham, r, 0);
}

Scalar applyFunctional(const Form& functional, const Form& omega) {
    Scalar s;
    for (const auto& [m, c] : functional.terms()) s += c * omega.coefficient(m);
    return s;
}

ClassResult classIsZero(const StructureEquations& s, const Form& omega, Theory theory) {
    int n = s.n();
    if (omega.n() != n) throw Error("form dimension does not match the structure equations");
    int p = 0, q = 0;
    if (!omega.isZero()) {
        if (theory == Theory::DeRham) {
            int r = -1;
            for (const auto& [m, c] : omega.terms()) {
                if (r >= 0 && m.degree() != r) throw Error("de Rham class needs a form of one total degree");
                r = m.degree();
            }
            p = r;
        } else {
            std::tie(p, q) = omega.bidegree();
        }
    }
    ClassResult result;
    if (omega.isZero()) {
        result.isZero = true;
        result.detail = "zero form";
        return result;
    }
    Complex c = build(n, theory, p, q);
    SparseVector v = c.here.coordinates(omega);
    LinearMap z = cycleMap(s, c);
    if (!z.apply(v).empty()) throw Error("form is not a cycle for the " + theoryName(theory) + " theory");
    LinearMap b = boundaryMap(s, c);
    if (auto x = b.solve(v)) {
        result.isZero = true;
        int offset = 0;
        for (const auto& [op, source] : c.boundaryMaps) {
            if (source.n() == 0 && source.dimension() == 0) {
                result.primitive.push_back(Form(n));
                continue;
            }
            SparseVector part;
            for (const auto& [i, val] : *x)
                if (i >= offset && i < offset + source.dimension()) part.emplace_back(i - offset, val);
            result.primitive.push_back(source.form(part));
            offset += source.dimension();
        }
        result.detail = "exact primitive";
        return result;
    }
    // Dual certificate: y with y . b_j = 0 for every boundary column, y . v != 0.
    LinearMap dual = b.transpose();
    for (const auto& y : dual.kernel()) {
        Scalar value = dot(y, v);
        if (!value.isZero()) {
            result.isZero = false;
            result.functional = c.here.form(y);
            result.pairing = value;
            result.detail = "dual functional";
            return result;
        }
    }
    throw Error("internal: no dual certificate for a non-exact form");
}

}  // namespace nilkahler
