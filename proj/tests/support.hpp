#pragma once

// Random generators and independent oracles shared by the unit tests.

#include "nilkahler/form.hpp"
#include "nilkahler/linalg.hpp"
#include "nilkahler/structure.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testsupport {

using namespace nilkahler;

constexpr int kCases = 250;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational(int range = 4, int maxDen = 3) {
        int num = uniform(-range, range);
        int den = uniform(1, maxDen);
        return Rational(num, den);
    }
    Scalar gaussian(int range = 3, int maxDen = 2) {
        Rational re = rational(range, maxDen);
        Rational im = rational(range, maxDen);
        return Scalar(re, im);
    }
    Scalar nonzeroGaussian(int range = 3, int maxDen = 2) {
        for (;;) {
            Scalar s = gaussian(range, maxDen);
            if (!s.isZero()) return s;
        }
    }
    // Element of Q(i, sqrt(d)).
    Scalar quadratic(int d, int range = 3) {
        Rational x = rational(range), y = rational(range), u = rational(range), v = rational(range);
        return Scalar(x, y, u, v, d);
    }

    MultiIndex subset(int n, int k) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        std::shuffle(all.begin(), all.end(), rng_);
        all.resize(k);
        std::sort(all.begin(), all.end());
        return MultiIndex(all);
    }

    Form form(int n, int p, int q, int terms) {
        Form f(n);
        for (int t = 0; t < terms; ++t) f.add(Monomial{subset(n, p), subset(n, q)}, gaussian());
        return f;
    }
    // Mixed-bidegree form of total degree r.
    Form formOfDegree(int n, int r, int terms) {
        Form f(n);
        for (int t = 0; t < terms; ++t) {
            int p = uniform(std::max(0, r - n), std::min(r, n));
            f.add(Monomial{subset(n, p), subset(n, r - p)}, gaussian());
        }
        return f;
    }
    Form anyForm(int n, int terms) {
        Form f(n);
        for (int t = 0; t < terms; ++t) f += formOfDegree(n, uniform(0, 2 * n), 1);
        return f;
    }
    Form realForm(int n, int p, int terms) {
        Form f = form(n, p, p, terms);
        return f + conjugate(f);
    }
    Form oneForm(int n) {
        Form f(n);
        for (int j = 1; j <= n; ++j) f.add(Monomial{MultiIndex{j}, {}}, gaussian());
        return f;
    }
    Form simpleForm(int n, int k) {
        Form f = Form::scalar(n, Scalar(1));
        for (int i = 0; i < k; ++i) f = wedge(f, oneForm(n));
        return f;
    }

    // 2-step nilpotent, integrable: generators above `base` have d in the
    // span of (2,0) and (1,1) words in the first `base` generators.
    StructureEquations twoStep(int n) {
        int base = uniform((n + 1) / 2, n - 1);
        std::vector<Form> dphi(n, Form(n));
        for (int j = base + 1; j <= n; ++j) {
            Form f(n);
            for (int t = 0; t < 3; ++t) {
                if (base >= 2 && coin()) f.add(Monomial{subset(base, 2), {}}, gaussian());
                if (coin()) f.add(Monomial{subset(base, 1), subset(base, 1)}, gaussian());
            }
            dphi[j - 1] = f;
        }
        return StructureEquations(n, dphi);
    }

    ScalarMatrix matrix(int rows, int cols, int range = 3) {
        ScalarMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m(r, c) = gaussian(range, 1);
        return m;
    }
    ScalarMatrix invertible(int n) {
        for (;;) {
            ScalarMatrix m = matrix(n, n);
            if (!m.determinant().isZero()) return m;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Dense exact row reduction, independent of the library's sparse elimination.
inline int denseRank(std::vector<std::vector<Scalar>> rows) {
    int rank = 0;
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][c].isZero()) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][c].inverse();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c].isZero()) continue;
            Scalar f = rows[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// All monomials of bidegree (p,q), in canonical order.
inline std::vector<Monomial> monomials(int n, int p, int q) {
    std::vector<Monomial> out;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
        if (__builtin_popcount(a) != p) continue;
        for (std::uint32_t b = 0; b < (1u << n); ++b)
            if (__builtin_popcount(b) == q) out.push_back({MultiIndex::fromMask(a), MultiIndex::fromMask(b)});
    }
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

// Rows of the dense matrix of `op` from bidegree `src` to bidegree `dst`:
// one row per source monomial, holding the coefficients of its image.
template <typename Op>
std::vector<std::vector<Scalar>> denseMatrix(int n, std::pair<int, int> src, std::pair<int, int> dst, Op op) {
    auto in = monomials(n, src.first, src.second);
    auto out = monomials(n, dst.first, dst.second);
    std::vector<std::vector<Scalar>> rows;
    for (const Monomial& m : in) {
        Form image = op(Form::monomial(n, m));
        std::vector<Scalar> row;
        for (const Monomial& t : out) row.push_back(image.coefficient(t));
        rows.push_back(row);
    }
    return rows;
}

inline bool validBidegree(int n, int p, int q) { return p >= 0 && q >= 0 && p <= n && q <= n; }

inline int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// A nonzero k-form beta is decomposable iff its annihilator
// {a in span(phi^j) : a ^ beta = 0} has dimension k.
inline bool simpleOracle(const Form& beta, int k) {
    if (beta.isZero() || k <= 1) return true;
    int n = beta.n();
    std::vector<Monomial> targets;
    std::vector<Form> images;
    for (int j = 1; j <= n; ++j) images.push_back(wedge(Form::generator(n, j), beta));
    for (const Form& f : images)
        for (const auto& [m, c] : f.terms())
            if (std::find(targets.begin(), targets.end(), m) == targets.end()) targets.push_back(m);
    std::vector<std::vector<Scalar>> rows;
    for (const Form& f : images) {
        std::vector<Scalar> row;
        for (const Monomial& m : targets) row.push_back(f.coefficient(m));
        rows.push_back(row);
    }
    int rank = targets.empty() ? 0 : denseRank(rows);
    return n - rank == k;
}

}  // namespace testsupport
