#include "nilkahler/transversality.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace nilkahler {

namespace {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

CMatrix toEigen(const ScalarMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).toComplex();
    return out;
}

// Plucker coordinates of the rows of y (k x n) on the given basis.
CVector plucker(const CMatrix& y, const std::vector<MultiIndex>& basis) {
    int k = static_cast<int>(y.rows());
    CVector x(basis.size());
    CMatrix minor(k, k);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        auto idx = basis[b].indices();
        for (int c = 0; c < k; ++c) minor.col(c) = y.col(idx[c] - 1);
        x(b) = k == 0 ? std::complex<double>(1.0) : minor.determinant();
    }
    return x;
}

double pairing(const CMatrix& p, const CVector& x) { return (x.adjoint() * p * x)(0, 0).real(); }

struct Run {
    double value = std::numeric_limits<double>::infinity();
    CMatrix frame;
};

Run descend(const CMatrix& p, const std::vector<MultiIndex>& basis, int n, int k, std::mt19937_64& rng,
            int maxSweeps) {
    std::normal_distribution<double> normal;
    CMatrix y(k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) y(r, c) = {normal(rng), normal(rng)};
    // Orthonormal rows.
    {
        Eigen::HouseholderQR<CMatrix> qr(y.adjoint());
        CMatrix q = qr.householderQ() * CMatrix::Identity(n, k);
        y = q.adjoint();
    }
    Run run;
    run.frame = y;
    run.value = pairing(p, plucker(y, basis));
    for (int sweep = 0; sweep < maxSweeps; ++sweep) {
        double before = run.value;
        for (int i = 0; i < k; ++i) {
            // Orthonormal basis of the complement of the other rows.
            CMatrix q;
            if (k == 1) {
                q = CMatrix::Identity(n, n);
            } else {
                CMatrix others(n, k - 1);
                for (int r = 0, c = 0; r < k; ++r)
                    if (r != i) others.col(c++) = y.row(r).transpose();
                Eigen::HouseholderQR<CMatrix> qr(others);
                CMatrix full = qr.householderQ() * CMatrix::Identity(n, n);
                q = full.rightCols(n - k + 1);
            }
            // x is linear in row i: x = L y_i^T.
            CMatrix l(basis.size(), n);
            for (int m = 0; m < n; ++m) {
                CMatrix trial = y;
                trial.row(i).setZero();
                trial(i, m) = 1.0;
                l.col(m) = plucker(trial, basis);
            }
            CMatrix lq = l * q;
            CMatrix h = lq.adjoint() * p * lq;
            h = 0.5 * (h + h.adjoint().eval());
            Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
            CVector z = es.eigenvectors().col(0);
            y.row(i) = (q * z).transpose();
            run.value = es.eigenvalues()(0);
        }
        run.frame = y;
        if (std::fabs(before - run.value) <= 1e-14 * (1.0 + std::fabs(run.value))) break;
    }
    return run;
}

Scalar rationalizeComplex(std::complex<double> z, long maxDen) {
    return Scalar(rationalize(z.real(), maxDen), rationalize(z.imag(), maxDen));
}

std::string decimal(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Exact pairing of the simple form with factors psi_r, via the pairing matrix.
Scalar exactPairing(const ScalarMatrix& p, const Form& beta, const std::vector<MultiIndex>& basis) {
    std::vector<Scalar> x;
    for (MultiIndex b : basis) x.push_back(beta.coefficient(Monomial{b, {}}).conj());
    Scalar s;
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].isZero()) continue;
        for (std::size_t b = 0; b < x.size(); ++b)
            if (!x[b].isZero() && !p(a, b).isZero()) s += x[a].conj() * p(a, b) * x[b];
    }
    return s;
}

int pOf(const Form& omega) {
    if (omega.isZero()) throw Error("cannot infer the bidegree of the zero form");
    return omega.bidegree().first;
}

}  // namespace

Verdict transverseMinimize(const Form& omega, const TransverseOptions& opt) {
    const std::string method = "minimize";
    int n = omega.n();
    int k = n - pOf(omega);
    ScalarMatrix pm = pairingMatrix(omega);
    CMatrix p = toEigen(pm);
    auto basis = holomorphicBasis(n, k);
    double scale = 0;
    for (int a = 0; a < p.rows(); ++a) scale = std::max(scale, std::fabs(p(a, a).real()));
    if (scale == 0) scale = 1;

    Run best;
    for (int r = 0; r < opt.restarts; ++r) {
        std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r) + 1);
        Run run = descend(p, basis, n, k, rng, opt.maxSweeps);
        if (run.value < best.value) best = run;
    }
    Verdict v;
    v.method = method;
    v.minimum = best.value;
    double threshold = opt.tolerance * scale;
    if (best.value > threshold) {
        v.outcome = Outcome::Certified;
        v.detail = "numeric: min " + decimal(best.value) + " > " + decimal(threshold) + " over " +
                   std::to_string(opt.restarts) + " restarts";
        return v;
    }
    // Try to turn the numeric minimizer into an exact refutation, preferring
    // small denominators.  Rows are scaled by their largest entry first; this
    // rescales the pairing by a positive factor.
    for (long den = 10; den <= std::max(10L, opt.maxDenominator); den *= 10) {
        std::vector<Form> factors;
        Form beta = Form::scalar(n, Scalar(1));
        for (int r = 0; r < k; ++r) {
            int lead = 0;
            for (int c = 1; c < n; ++c)
                if (std::abs(best.frame(r, c)) > std::abs(best.frame(r, lead))) lead = c;
            std::complex<double> unit = best.frame(r, lead);
            Form psi(n);
            for (int c = 0; c < n; ++c)
                psi.add(Monomial{MultiIndex{c + 1}, {}}, rationalizeComplex(std::conj(best.frame(r, c) / unit), den));
            factors.push_back(psi);
            beta = wedge(beta, psi);
        }
        if (beta.isZero()) continue;
        Scalar exact = exactPairing(pm, beta, basis);
        if (exact.sign() <= 0) {
            v.outcome = Outcome::Refuted;
            v.detail = "exact pairing " + exact.toString() + " at rationalized minimizer";
            v.witness = beta;
            v.factors = factors;
            return v;
        }
    }
    v.outcome = Outcome::Unknown;
    v.detail = "min " + decimal(best.value) + " within tolerance " + decimal(threshold) +
               " and no exact witness after rationalization";
    return v;
}

Verdict transverseFalsify(const Form& omega, const TransverseOptions& opt) {
    const std::string method = "sample";
    int n = omega.n();
    int k = n - pOf(omega);
    ScalarMatrix pm = pairingMatrix(omega);
    auto basis = holomorphicBasis(n, k);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < opt.trials; ++t) {
        bool sparse = coin(rng) == 1;
        std::vector<Form> factors;
        Form beta = Form::scalar(n, Scalar(1));
        for (int r = 0; r < k; ++r) {
            Form psi(n);
            for (int c = 0; c < n; ++c) {
                if (sparse && coin(rng) == 0) continue;
                int re = coord(rng);
                int im = coord(rng);
                psi.add(Monomial{MultiIndex{c + 1}, {}}, Scalar(Rational(re), Rational(im)));
            }
            factors.push_back(psi);
            beta = wedge(beta, psi);
        }
        if (beta.isZero()) continue;
        Scalar value = exactPairing(pm, beta, basis);
        if (value.sign() <= 0) {
            Verdict v = Verdict::refute(method, "exact pairing " + value.toString() + " at trial " + std::to_string(t));
            v.witness = beta;
            v.factors = factors;
            return v;
        }
    }
    return Verdict::unknown(method, "no counterexample in " + std::to_string(opt.trials) + " trials");
}

}  // namespace nilkahler
