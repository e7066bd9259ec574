#include "nilkahler/transversality.hpp"

#include <algorithm>
#include <bit>

namespace nilkahler {

std::vector<MultiIndex> holomorphicBasis(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) out.push_back(MultiIndex::fromMask(m));
    std::sort(out.begin(), out.end(), lexLess);
    return out;
}

namespace {

SparseVector oneFormVector(const Form& f) {
    SparseVector v;
    for (const auto& [m, c] : f.terms()) v.emplace_back(m.hol.indices().front() - 1, c);
    return v;
}

}  // namespace

Verdict isSimple(const Form& beta) {
    int n = beta.n();
    int k = 0;
    if (!beta.isZero()) {
        auto [p, q] = beta.bidegree();
        if (q != 0) throw Error("isSimple expects a (k,0)-form");
        k = p;
    }
    if (beta.isZero()) return Verdict::certify("plucker", "zero form");
    if (k <= 1) {
        Verdict v = Verdict::certify("plucker", "degree <= 1");
        if (k == 1) v.factors.push_back(beta);
        return v;
    }
    std::vector<Form> contractions;
    for (MultiIndex s : holomorphicBasis(n, k - 1)) {
        Form g = beta;
        for (int j : s.indices()) g = contract(g, j);
        if (g.isZero()) continue;
        Form test = wedge(g, beta);
        if (!test.isZero()) {
            Verdict v = Verdict::refute("plucker", "Plucker relation fails for contraction by " +
                                                       Monomial{s, {}}.toString());
            v.witness = test;
            return v;
        }
        contractions.push_back(g);
    }
    // The contractions span the k-dimensional support of beta.
    EchelonBasis basis;
    std::vector<Form> factors;
    for (const Form& g : contractions) {
        if (basis.insert(oneFormVector(g), static_cast<int>(factors.size()))) factors.push_back(g);
        if (static_cast<int>(factors.size()) == k) break;
    }
    if (static_cast<int>(factors.size()) != k) {
        Verdict v = Verdict::refute("plucker", "support has dimension " + std::to_string(factors.size()));
        return v;
    }
    Form w = Form::scalar(n, Scalar(1));
    for (const Form& f : factors) w = wedge(w, f);
    const auto& [m0, c0] = *beta.terms().begin();
    Scalar lambda = w.coefficient(m0) / c0;
    factors.front() *= lambda.inverse();
    Verdict v = Verdict::certify("plucker", "all Plucker relations hold");
    v.factors = std::move(factors);
    return v;
}

}  // namespace nilkahler
