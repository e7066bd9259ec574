#include "nilkahler/deformation.hpp"

#include <bit>

namespace nilkahler {

namespace {

void requireSize(const VectorForm& v, int n) {
    if (v.rows() != n || v.cols() != n) throw Error("vector form has the wrong size");
}

}  // namespace

Form contractVector(const VectorForm& v, const Form& sigma) {
    int n = sigma.n();
    requireSize(v, n);
    Form out(n);
    for (int l = 1; l <= n; ++l) {
        Form inner;
        bool computed = false;
        for (int m = 1; m <= n; ++m) {
            const Scalar& c = v(l - 1, m - 1);
            if (c.isZero()) continue;
            if (!computed) {
                inner = contract(sigma, l);
                computed = true;
            }
            if (inner.isZero()) break;
            out += wedge(Form::generator(n, m, true), inner) * c;
        }
    }
    return out;
}

Form contractVectorBar(const VectorForm& v, const Form& sigma) {
    int n = sigma.n();
    requireSize(v, n);
    Form out(n);
    for (int l = 1; l <= n; ++l) {
        Form inner;
        bool computed = false;
        for (int m = 1; m <= n; ++m) {
            const Scalar& c = v(l - 1, m - 1);
            if (c.isZero()) continue;
            if (!computed) {
                inner = contract(sigma, l, true);
                computed = true;
            }
            if (inner.isZero()) break;
            out += wedge(Form::generator(n, m), inner) * c.conj();
        }
    }
    return out;
}

Form simultaneousContract(const ScalarMatrix& e, const Form& sigma) {
    int n = sigma.n();
    if (e.rows() != 2 * n || e.cols() != 2 * n) throw Error("letter map must be 2n x 2n");
    std::vector<Form> images(2 * n, Form(n));
    for (int l = 0; l < 2 * n; ++l)
        for (int m = 0; m < 2 * n; ++m)
            if (!e(l, m).isZero())
                images[l] += Form::generator(n, m % n + 1, m >= n) * e(l, m);
    return substitute(sigma, images);
}

ScalarMatrix extensionMatrix(const VectorForm& v) {
    int n = v.rows();
    ScalarMatrix e = ScalarMatrix::identity(2 * n);
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            e(l, n + m) = v(l, m);
            e(n + l, m) = v(l, m).conj();
        }
    return e;
}

Form extension(const VectorForm& v, const Form& sigma) {
    int n = sigma.n();
    requireSize(v, n);
    Form out(n);
    for (const auto& [m, c] : sigma.terms()) {
        Form hol = Form::monomial(n, m.hol, MultiIndex{});
        Form holSum = hol;
        Form term = hol;
        for (int k = 1; k <= m.p() && !term.isZero(); ++k) {
            term = contractVector(v, term) * Scalar(Rational(1, k));
            holSum += term;
        }
        Form anti = Form::monomial(n, MultiIndex{}, m.anti);
        Form antiSum = anti;
        term = anti;
        for (int k = 1; k <= m.q() && !term.isZero(); ++k) {
            term = contractVectorBar(v, term) * Scalar(Rational(1, k));
            antiSum += term;
        }
        out += wedge(holSum, antiSum) * c;
    }
    return out;
}

namespace {

// Letter map acting as I - A on one block and as the identity elsewhere.
ScalarMatrix blockCorrection(const ScalarMatrix& a, bool antiBlock) {
    int n = a.rows();
    ScalarMatrix e = ScalarMatrix::identity(2 * n);
    int off = antiBlock ? n : 0;
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) e(off + l, off + m) -= a(l, m);
    return e;
}

}  // namespace

DeformedOperator deformedDelbar(const StructureEquations& s, const VectorForm& v, const Form& alpha) {
    requireSize(v, s.n());
    ScalarMatrix corr = blockCorrection(v.conj() * v, true);
    Form a1 = simultaneousContract(corr, alpha);
    Form inner = delComponentwise(s, contractVector(v, a1)) - contractVector(v, delComponentwise(s, a1)) +
                 delbarComponentwise(s, a1);
    DeformedOperator out;
    out.pre = simultaneousContract(corr.inverse(), inner);
    out.post = extension(v, out.pre);
    return out;
}

DeformedOperator deformedDel(const StructureEquations& s, const VectorForm& v, const Form& alpha) {
    requireSize(v, s.n());
    ScalarMatrix corr = blockCorrection(v * v.conj(), false);
    Form a1 = simultaneousContract(corr, alpha);
    Form inner = delbarComponentwise(s, contractVectorBar(v, a1)) -
                 contractVectorBar(v, delbarComponentwise(s, a1)) + delComponentwise(s, a1);
    DeformedOperator out;
    out.pre = simultaneousContract(corr.inverse(), inner);
    out.post = extension(v, out.pre);
    return out;
}

namespace {

using Vec = std::vector<Scalar>;

// [X, Y] = -sum_l (d letter_l)(X, Y) e_l for invariant fields.
Vec bracket(const StructureEquations& s, const Vec& x, const Vec& y) {
    int n = s.n();
    Vec out(2 * n);
    for (int l = 0; l < 2 * n; ++l) {
        Scalar value;
        for (const auto& [m, c] : s.dletter(l).terms()) {
            std::uint64_t letters = m.letters();
            int b1 = std::countr_zero(letters);
            int b2 = std::countr_zero(letters & (letters - 1));
            int i1 = b1 < 32 ? b1 : n + b1 - 32;
            int i2 = b2 < 32 ? b2 : n + b2 - 32;
            value += c * (x[i1] * y[i2] - x[i2] * y[i1]);
        }
        out[l] = -value;
    }
    return out;
}

}  // namespace

Verdict maurerCartan(const StructureEquations& s, const VectorForm& v) {
    int n = s.n();
    requireSize(v, n);
    auto lifted = [&](int a) {
        Vec x(2 * n);
        x[n + a] = Scalar(1);
        for (int l = 0; l < n; ++l) x[l] = v(l, a);
        return x;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Vec w = bracket(s, lifted(a), lifted(b));
            // w^{1,0} - phi(w^{0,1})
            for (int l = 0; l < n; ++l) {
                Scalar e = w[l];
                for (int m = 0; m < n; ++m)
                    if (!w[n + m].isZero()) e -= v(l, m) * w[n + m];
                if (!e.isZero()) {
                    Verdict r = Verdict::refute("maurer-cartan", "bracket of lifted thetabar" + std::to_string(a + 1) +
                                                                     ", thetabar" + std::to_string(b + 1) +
                                                                     " leaves the deformed (0,1)-bundle");
                    r.vector = {e};
                    return r;
                }
            }
        }
    return Verdict::certify("maurer-cartan", "deformed (0,1)-bundle is involutive");
}

Obstruction firstOrderObstruction(const StructureEquations& s, const Form& omega, const VectorForm& v,
                                  const std::optional<Form>& omegaPrime) {
    if (!d(s, omega).isZero()) throw Error("obstruction needs a closed form");
    if (!isReal(omega)) throw Error("obstruction needs a real form");
    Obstruction o;
    o.contracted = delComponentwise(s, contractVector(v, omega));
    o.residual = o.contracted;
    if (omegaPrime) o.residual += delbarComponentwise(s, *omegaPrime);
    o.delbarClass = classIsZero(s, o.contracted, Theory::Delbar);
    return o;
}

}  // namespace nilkahler
