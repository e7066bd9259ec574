#include "nilkahler/structure.hpp"

#include <bit>

namespace nilkahler {

std::string outcomeName(Outcome o) {
    switch (o) {
        case Outcome::Certified: return "certified";
        case Outcome::Refuted: return "refuted";
        case Outcome::Unknown: return "unknown";
    }
    return "unknown";
}

Verdict Verdict::certify(std::string method, std::string detail) {
    Verdict v;
    v.outcome = Outcome::Certified;
    v.method = std::move(method);
    v.detail = std::move(detail);
    return v;
}

Verdict Verdict::refute(std::string method, std::string detail) {
    Verdict v = certify(std::move(method), std::move(detail));
    v.outcome = Outcome::Refuted;
    return v;
}

Verdict Verdict::unknown(std::string method, std::string detail) {
    Verdict v = certify(std::move(method), std::move(detail));
    v.outcome = Outcome::Unknown;
    return v;
}

StructureEquations::StructureEquations(int n, std::vector<Form> dphi, int radicand, std::string name)
    : n_(n), radicand_(radicand), name_(std::move(name)), dphi_(std::move(dphi)) {
    if (n < 1 || n > kMaxDimension) throw Error("dimension must lie in 1.." + std::to_string(kMaxDimension));
    if (static_cast<int>(dphi_.size()) != n) throw Error("need one structure equation per generator");
    for (int j = 0; j < n; ++j) {
        Form& f = dphi_[j];
        if (f.n() != n) {
            if (!f.isZero()) throw Error("structure equation has wrong dimension");
            f = Form(n);
        }
        for (const auto& [m, c] : f.terms())
            if (m.degree() != 2)
                throw Error("d phi" + std::to_string(j + 1) + " must be a 2-form");
    }
    dletters_.resize(2 * n);
    for (int j = 0; j < n; ++j) {
        dletters_[j] = dphi_[j];
        dletters_[n + j] = conjugate(dphi_[j]);
    }
}

StructureEquations StructureEquations::abelian(int n) {
    return StructureEquations(n, std::vector<Form>(n, Form(n)), 0, "abelian");
}

const Form& StructureEquations::dphi(int j) const {
    if (j < 1 || j > n_) throw Error("no generator phi" + std::to_string(j));
    return dphi_[j - 1];
}

std::string StructureEquations::toString() const {
    std::string s = "dimension " + std::to_string(n_) + "\n";
    for (int j = 1; j <= n_; ++j)
        if (!dphi_[j - 1].isZero()) s += "d phi" + std::to_string(j) + " = " + dphi_[j - 1].toString() + "\n";
    return s;
}

namespace {

int letterIndex(int bit, int n) { return bit < 32 ? bit : n + (bit - 32); }

}  // namespace

Form d(const StructureEquations& s, const Form& a) {
    if (a.n() != s.n()) throw Error("form dimension does not match the structure equations");
    int n = s.n();
    Form out(n);
    for (const auto& [m, c] : a.terms()) {
        std::uint64_t letters = m.letters();
        int position = 0;
        for (std::uint64_t rest = letters; rest != 0; rest &= rest - 1, ++position) {
            int bit = std::countr_zero(rest);
            const Form& dl = s.dletter(letterIndex(bit, n));
            if (dl.isZero()) continue;
            std::uint64_t letter = std::uint64_t{1} << bit;
            std::uint64_t before = letters & (letter - 1);
            std::uint64_t after = letters & ~(letter | (letter - 1));
            for (const auto& [dm, dc] : dl.terms()) {
                std::uint64_t mid = dm.letters();
                int s1 = wedgeSign(before, mid);
                if (s1 == 0) continue;
                int s2 = wedgeSign(before | mid, after);
                if (s2 == 0) continue;
                int sign = s1 * s2 * ((position % 2) ? -1 : 1);
                Scalar v = c * dc;
                out.add(Monomial::fromLetters(before | mid | after), sign < 0 ? -v : v);
            }
        }
    }
    return out;
}

namespace {

Form shifted(const StructureEquations& s, const Form& a, int dp, int dq, bool strict) {
    if (strict && !a.isHomogeneous()) throw Error("operator needs a homogeneous form; split it first");
    Form out(a.n());
    for (auto [p, q] : a.bidegrees()) out += d(s, a.component(p, q)).component(p + dp, q + dq);
    return out;
}

}  // namespace

Form del(const StructureEquations& s, const Form& a) { return shifted(s, a, 1, 0, true); }
Form delbar(const StructureEquations& s, const Form& a) { return shifted(s, a, 0, 1, true); }
Form deldelbar(const StructureEquations& s, const Form& a) { return del(s, delbar(s, a)); }
Form delComponentwise(const StructureEquations& s, const Form& a) { return shifted(s, a, 1, 0, false); }
Form delbarComponentwise(const StructureEquations& s, const Form& a) { return shifted(s, a, 0, 1, false); }

Verdict checkIntegrable(const StructureEquations& s) {
    for (int j = 1; j <= s.n(); ++j) {
        Form bad = s.dphi(j).component(0, 2);
        if (!bad.isZero()) {
            Verdict v = Verdict::refute("structure", "d phi" + std::to_string(j) + " has a (0,2) part");
            v.witness = bad;
            return v;
        }
    }
    for (int j = 1; j <= s.n(); ++j) {
        Form dd = d(s, s.dphi(j));
        if (!dd.isZero()) {
            Verdict v = Verdict::refute("structure", "d^2 phi" + std::to_string(j) + " != 0");
            v.witness = dd;
            return v;
        }
    }
    return Verdict::certify("structure", "no (0,2) parts and d^2 = 0");
}

Verdict checkNilpotentCoframe(const StructureEquations& s) {
    for (int j = 1; j <= s.n(); ++j)
        for (const auto& [m, c] : s.dphi(j).terms())
            if (m.hol.maxIndex() >= j || m.anti.maxIndex() >= j) {
                Verdict v = Verdict::refute("structure", "d phi" + std::to_string(j) + " uses an index >= " +
                                                             std::to_string(j));
                v.witness = Form::monomial(s.n(), m, c);
                return v;
            }
    return Verdict::certify("structure", "d phi^j only involves indices below j");
}

Verdict checkParallelizable(const StructureEquations& s) {
    Verdict base = checkNilpotentCoframe(s);
    if (!base.certified()) return base;
    for (int j = 1; j <= s.n(); ++j) {
        const Form& f = s.dphi(j);
        Form mixed = f - f.component(2, 0);
        if (!mixed.isZero()) {
            Verdict v = Verdict::refute("structure", "d phi" + std::to_string(j) + " is not of type (2,0)");
            v.witness = mixed;
            return v;
        }
    }
    return Verdict::certify("structure", "nilpotent coframe with (2,0) structure equations");
}

Verdict checkSalamon(const StructureEquations& s) {
    for (int j = 1; j <= s.n(); ++j)
        for (const auto& [m, c] : s.dphi(j).terms()) {
            std::uint32_t below = (1u << (j - 1)) - 1;
            if ((m.hol.mask() & below) == 0) {
                Verdict v = Verdict::refute("structure", "d phi" + std::to_string(j) +
                                                             " leaves the ideal of phi^1..phi^" +
                                                             std::to_string(j - 1));
                v.witness = Form::monomial(s.n(), m, c);
                return v;
            }
        }
    return Verdict::certify("structure", "d phi^j lies in the ideal of phi^1..phi^(j-1)");
}

namespace {

std::vector<Form> coframeImages(int n, const ScalarMatrix& inv) {
    // phi^j = sum_k inv_jk psi^k
    std::vector<Form> images(2 * n, Form(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (inv(j, k).isZero()) continue;
            images[j] += Form::generator(n, k + 1) * inv(j, k);
            images[n + j] += Form::generator(n, k + 1, true) * inv(j, k).conj();
        }
    return images;
}

}  // namespace

Form changeCoframe(const Form& a, const ScalarMatrix& p) {
    int n = a.n();
    if (p.rows() != n || p.cols() != n) throw Error("coframe matrix has the wrong size");
    return substitute(a, coframeImages(n, p.inverse()));
}

StructureEquations changeCoframe(const StructureEquations& s, const ScalarMatrix& p) {
    int n = s.n();
    if (p.rows() != n || p.cols() != n) throw Error("coframe matrix has the wrong size");
    auto images = coframeImages(n, p.inverse());
    std::vector<Form> dpsi;
    int radicand = s.radicand();
    for (int i = 0; i < n; ++i) {
        Form acc(n);
        for (int j = 0; j < n; ++j) {
            if (p(i, j).isZero()) continue;
            if (p(i, j).hasRadical()) radicand = p(i, j).radicand();
            acc += s.dphi(j + 1) * p(i, j);
        }
        dpsi.push_back(substitute(acc, images));
    }
    return StructureEquations(n, std::move(dpsi), radicand, s.name());
}

}  // namespace nilkahler
