#include "nilkahler/scalar.hpp"

#include <cmath>
#include <sstream>

namespace nilkahler {

namespace {

// Gaussian rational helper used for the inner arithmetic.
struct Gauss {
    Rational re;
    Rational im;
};

Gauss mul(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Gauss add(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }

Gauss inv(const Gauss& a) {
    Rational n = a.re * a.re + a.im * a.im;
    if (n == 0) throw Error("division by zero");
    return {a.re / n, -a.im / n};
}

}  // namespace

bool isSquareFree(long d) {
    if (d < 2) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

Scalar::Scalar(long value) : x_(value) {}

Scalar::Scalar(Rational re, Rational im) : x_(std::move(re)), y_(std::move(im)) {}

Scalar::Scalar(Rational x, Rational y, Rational u, Rational v, int d)
    : x_(std::move(x)), y_(std::move(y)), u_(std::move(u)), v_(std::move(v)), d_(d) {
    if (d_ != 0 && !isSquareFree(d_))
        throw Error("radicand " + std::to_string(d_) + " is not square-free (need d >= 2)");
    if (d_ == 0 && (u_ != 0 || v_ != 0)) throw Error("sqrt part given without a radicand");
    normalize();
}

Scalar Scalar::i() { return Scalar(Rational(0), Rational(1)); }

Scalar Scalar::sqrt(int d) {
    if (d == 0) return Scalar();
    return Scalar(0, 0, 1, 0, d);
}

Scalar Scalar::sigma(int p) {
    if (p < 0) throw Error("sigma needs p >= 0");
    // i^(p^2) cycles through 1, i (p odd gives p^2 = 1 mod 4 -> i).
    Rational scale(1);
    for (int k = 0; k < p; ++k) scale /= 2;
    if (p % 2 == 1) return Scalar(Rational(0), scale);
    return Scalar(scale);
}

void Scalar::normalize() {
    if (u_ == 0 && v_ == 0) d_ = 0;
}

int Scalar::joinRadicand(int a, int b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw Error("mixing sqrt(" + std::to_string(a) + ") and sqrt(" + std::to_string(b) + ")");
}

bool Scalar::isZero() const { return x_ == 0 && y_ == 0 && d_ == 0; }

bool Scalar::isReal() const { return y_ == 0 && v_ == 0; }

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.y_ = -r.y_;
    r.v_ = -r.v_;
    return r;
}

Scalar Scalar::realPart() const {
    Scalar r = *this;
    r.y_ = 0;
    r.v_ = 0;
    r.normalize();
    return r;
}

Scalar Scalar::imagPart() const {
    Scalar r;
    r.x_ = y_;
    r.u_ = v_;
    r.d_ = d_;
    r.normalize();
    return r;
}

Scalar Scalar::normSquared() const { return (*this * conj()).realPart(); }

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = joinRadicand(d_, o.d_);
    x_ += o.x_;
    y_ += o.y_;
    u_ += o.u_;
    v_ += o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = joinRadicand(d_, o.d_);
    x_ -= o.x_;
    y_ -= o.y_;
    u_ -= o.u_;
    v_ -= o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    int d = joinRadicand(d_, o.d_);
    if (d == 0) {
        Rational x = x_ * o.x_ - y_ * o.y_;
        Rational y = x_ * o.y_ + y_ * o.x_;
        x_ = std::move(x);
        y_ = std::move(y);
        return *this;
    }
    // (A + B s)(C + D s) = (AC + d BD) + (AD + BC) s
    Gauss A{x_, y_}, B{u_, v_}, C{o.x_, o.y_}, D{o.u_, o.v_};
    Gauss bd = mul(B, D);
    Gauss first = add(mul(A, C), Gauss{bd.re * d, bd.im * d});
    Gauss second = add(mul(A, D), mul(B, C));
    x_ = first.re;
    y_ = first.im;
    u_ = second.re;
    v_ = second.im;
    d_ = d;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw Error("division by zero");
    Gauss A{x_, y_};
    if (d_ == 0) {
        Gauss r = inv(A);
        return Scalar(r.re, r.im);
    }
    // 1/(A + B s) = (A - B s) / (A^2 - d B^2)
    Gauss B{u_, v_};
    Gauss bb = mul(B, B);
    Gauss n = add(mul(A, A), Gauss{-bb.re * d_, -bb.im * d_});
    Gauss ni = inv(n);
    Gauss p = mul(A, ni);
    Gauss q = mul(B, ni);
    return Scalar(p.re, p.im, -q.re, -q.im, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.x_ = -r.x_;
    r.y_ = -r.y_;
    r.u_ = -r.u_;
    r.v_ = -r.v_;
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_ && a.u_ == b.u_ && a.v_ == b.v_;
}

int Scalar::sign() const {
    if (!isReal()) throw Error("sign of a non-real scalar " + toString());
    int sx = x_.sign();
    int su = u_.sign();
    if (su == 0) return sx;
    if (sx == 0 || sx == su) return su;
    // opposite signs: compare x^2 with d u^2
    Rational lhs = x_ * x_;
    Rational rhs = u_ * u_ * d_;
    if (lhs == rhs) return 0;  // impossible for square-free d, kept for safety
    return lhs > rhs ? sx : su;
}

std::complex<double> Scalar::toComplex() const {
    double s = d_ == 0 ? 0.0 : std::sqrt(static_cast<double>(d_));
    return {x_.convert_to<double>() + s * u_.convert_to<double>(),
            y_.convert_to<double>() + s * v_.convert_to<double>()};
}

std::string rationalToString(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

namespace {

// Omits vanishing parts; returns "" for zero.
std::string gaussToString(const Rational& re, const Rational& im) {
    std::string s;
    if (re.sign() != 0) s = rationalToString(re);
    if (im.sign() != 0) {
        std::string mag = abs(im) == 1 ? "i" : rationalToString(abs(im)) + "*i";
        if (im.sign() < 0)
            s += "-" + mag;
        else
            s += (s.empty() ? "" : "+") + mag;
    }
    return s;
}

}  // namespace

std::string Scalar::toString() const {
    std::string s = gaussToString(x_, y_);
    if (d_ != 0 && (u_.sign() != 0 || v_.sign() != 0)) {
        std::string root = "sqrt(" + std::to_string(d_) + ")";
        std::string coef = gaussToString(u_, v_);
        std::string term;
        if (v_.sign() == 0 && abs(u_) == 1)
            term = (u_.sign() < 0 ? "-" : "+") + root;
        else if (v_.sign() == 0)
            term = (u_.sign() < 0 ? "" : "+") + coef + "*" + root;
        else
            term = "+(" + coef + ")*" + root;
        if (s.empty() && term[0] == '+') term.erase(0, 1);
        s += term;
    }
    return s.empty() ? "0" : s;
}

Rational rationalize(double value, long maxDen) {
    if (!std::isfinite(value)) throw Error("cannot rationalize a non-finite value");
    // Standard continued-fraction convergents with a denominator bound.
    bool negative = value < 0;
    double v = std::fabs(value);
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = v;
    for (int step = 0; step < 64; ++step) {
        double a = std::floor(rest);
        if (a > 1e15) break;
        Integer ai = static_cast<long long>(a);
        Integer p2 = ai * p1 + p0;
        Integer q2 = ai * q1 + q0;
        if (q2 > maxDen) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = rest - a;
        if (frac < 1e-15) break;
        rest = 1.0 / frac;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return negative ? Rational(-r) : r;
}

}  // namespace nilkahler
