#pragma once

#include "nilkahler/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nilkahler {

constexpr int kMaxDimension = 16;

// Strictly increasing set of 1-based indices, stored as a bitmask.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> indices);
    explicit MultiIndex(const std::vector<int>& indices);
    static MultiIndex fromMask(std::uint32_t mask) {
        MultiIndex m;
        m.mask_ = mask;
        return m;
    }
    // {1, ..., k}
    static MultiIndex range(int k);

    std::uint32_t mask() const { return mask_; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    bool contains(int index) const;
    int maxIndex() const;
    std::vector<int> indices() const;

    friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
    friend bool operator!=(MultiIndex a, MultiIndex b) { return a.mask_ != b.mask_; }

private:
    std::uint32_t mask_ = 0;
};

// Lexicographic comparison of the sorted index lists.
bool lexLess(MultiIndex a, MultiIndex b);

// phi^I wedge phibar^J in canonical order (holomorphic block first).
struct Monomial {
    MultiIndex hol;
    MultiIndex anti;

    int p() const { return hol.size(); }
    int q() const { return anti.size(); }
    int degree() const { return p() + q(); }
    // hol bits 0..31, anti bits 32..63; the order of letters in a wedge.
    std::uint64_t letters() const {
        return static_cast<std::uint64_t>(hol.mask()) | (static_cast<std::uint64_t>(anti.mask()) << 32);
    }
    static Monomial fromLetters(std::uint64_t letters) {
        return {MultiIndex::fromMask(static_cast<std::uint32_t>(letters)),
                MultiIndex::fromMask(static_cast<std::uint32_t>(letters >> 32))};
    }
    std::string toString() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.hol == b.hol && a.anti == b.anti;
    }
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.hol != b.hol) return lexLess(a.hol, b.hol);
        return lexLess(a.anti, b.anti);
    }
};

// Sign and product of two monomials; sign 0 when they share a letter.
int wedgeSign(std::uint64_t left, std::uint64_t right);

using Bidegree = std::pair<int, int>;

// Invariant complex form on an n-dimensional coframe phi^1..phi^n.
class Form {
public:
    using Terms = std::map<Monomial, Scalar, MonomialLess>;

    Form() = default;
    explicit Form(int n);

    static Form scalar(int n, const Scalar& c);
    static Form monomial(int n, const Monomial& m, const Scalar& c = Scalar(1));
    static Form monomial(int n, MultiIndex hol, MultiIndex anti, const Scalar& c = Scalar(1));
    // phi^j, or phibar^j when conjugate is set.
    static Form generator(int n, int j, bool conjugate = false);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Monomial& m) const;
    // Adds c * m, pruning zeros.
    void add(const Monomial& m, const Scalar& c);

    std::set<Bidegree> bidegrees() const;
    bool isHomogeneous() const { return bidegrees().size() <= 1; }
    // Bidegree of a homogeneous nonzero form; throws otherwise.
    Bidegree bidegree() const;
    Form component(int p, int q) const;
    Form degreeComponent(int r) const;
    // True when no term uses index j in either block.
    bool avoids(int j) const;
    int maxIndexUsed() const;

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Scalar& c);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Scalar& c) { return a *= c; }
    friend Form operator*(const Scalar& c, Form a) { return a *= c; }
    Form operator-() const;

    friend bool operator==(const Form& a, const Form& b);
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    std::string toString() const;

private:
    int n_ = 0;
    Terms terms_;
};

Form wedge(const Form& a, const Form& b);
Form power(const Form& a, int k);
Form conjugate(const Form& a);
bool isReal(const Form& a);
// Coefficient of the top form relative to Vol = sigma(n) phi^{1..n; 1..n}.
Scalar volumeCoefficient(const Form& a);
// Vol itself.
Form volumeForm(int n);

// Interior product with theta_j (or thetabar_j), an antiderivation.
Form contract(const Form& a, int j, bool conjugate = false);

// Image of every letter under a linear map: images[0..n-1] are the images of
// phi^1..phi^n, images[n..2n-1] of phibar^1..phibar^n.  Each monomial is sent
// to the wedge of the images of its letters.
Form substitute(const Form& a, const std::vector<Form>& images);

// Drops index j (which must not occur) and shifts higher indices down.
Form dropIndex(const Form& a, int j);

}  // namespace nilkahler
