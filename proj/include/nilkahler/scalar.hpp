#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace nilkahler {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact element of Q(i, sqrt(d)):  x + y*i + (u + v*i)*sqrt(d).
// d is square-free and >= 2; an element without a sqrt part carries d = 0,
// so values built over different extensions mix freely as long as at most
// one nonzero d is involved.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im = 0);
    Scalar(Rational x, Rational y, Rational u, Rational v, int d);

    static Scalar i();
    static Scalar sqrt(int d);
    // i^(p^2) / 2^p, the normalizing constant of real (p,p)-forms.
    static Scalar sigma(int p);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    int radicand() const { return d_; }

    bool isZero() const;
    bool isReal() const;
    bool hasRadical() const { return d_ != 0; }

    Scalar conj() const;
    Scalar inverse() const;
    Scalar realPart() const;
    Scalar imagPart() const;
    // |s|^2, a real element of Q(sqrt d).
    Scalar normSquared() const;

    // Sign of a real scalar (throws on non-real input).
    int sign() const;

    std::complex<double> toComplex() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text: x+y*i, plus (u+v*i)*sqrt(d) when a radical is present.
    std::string toString() const;

private:
    void normalize();
    static int joinRadicand(int a, int b);

    Rational x_{0};
    Rational y_{0};
    Rational u_{0};
    Rational v_{0};
    int d_ = 0;
};

bool isSquareFree(long d);

// Closest rational with denominator <= maxDen (continued fractions).
Rational rationalize(double value, long maxDen);

std::string rationalToString(const Rational& r);

}  // namespace nilkahler
