#include "nilkahler/form.hpp"

#include <bit>

namespace nilkahler {

namespace {

void checkIndex(int index) {
    if (index < 1 || index > kMaxDimension)
        throw Error("index " + std::to_string(index) + " out of range 1.." + std::to_string(kMaxDimension));
}

void checkDimension(int n) {
    if (n < 0 || n > kMaxDimension) throw Error("dimension " + std::to_string(n) + " unsupported");
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> indices) : MultiIndex(std::vector<int>(indices)) {}

MultiIndex::MultiIndex(const std::vector<int>& indices) {
    int last = 0;
    for (int index : indices) {
        checkIndex(index);
        if (index <= last) throw Error("multi-index must be strictly increasing");
        mask_ |= 1u << (index - 1);
        last = index;
    }
}

MultiIndex MultiIndex::range(int k) {
    if (k < 0 || k > kMaxDimension) throw Error("bad range size");
    return fromMask(k == 32 ? ~0u : ((1u << k) - 1));
}

int MultiIndex::size() const { return std::popcount(mask_); }

bool MultiIndex::contains(int index) const {
    return index >= 1 && index <= 32 && ((mask_ >> (index - 1)) & 1u);
}

int MultiIndex::maxIndex() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

std::vector<int> MultiIndex::indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool lexLess(MultiIndex a, MultiIndex b) {
    std::uint32_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    bool inA = (a.mask() & low) != 0;
    // Everything below `low` is shared.  The list holding `low` is smaller,
    // unless the other list has already ended.
    std::uint32_t above = ~((low << 1) - 1);
    if (low == 0x80000000u) above = 0;
    if (inA) return (b.mask() & above) != 0;
    return (a.mask() & above) == 0;
}

std::string Monomial::toString() const {
    std::string s = "phi[";
    bool first = true;
    for (int j : hol.indices()) {
        if (!first) s += ",";
        s += std::to_string(j);
        first = false;
    }
    s += ";";
    first = true;
    for (int j : anti.indices()) {
        if (!first) s += ",";
        s += std::to_string(j);
        first = false;
    }
    return s + "]";
}

int wedgeSign(std::uint64_t left, std::uint64_t right) {
    if (left & right) return 0;
    int inversions = 0;
    for (std::uint64_t r = right; r != 0; r &= r - 1) {
        int t = std::countr_zero(r);
        std::uint64_t higher = t == 63 ? 0 : (~std::uint64_t{0} << (t + 1));
        inversions += std::popcount(left & higher);
    }
    return (inversions & 1) ? -1 : 1;
}

Form::Form(int n) : n_(n) { checkDimension(n); }

Form Form::scalar(int n, const Scalar& c) {
    Form f(n);
    f.add(Monomial{}, c);
    return f;
}

Form Form::monomial(int n, const Monomial& m, const Scalar& c) {
    if (m.hol.maxIndex() > n || m.anti.maxIndex() > n)
        throw Error("monomial " + m.toString() + " exceeds dimension " + std::to_string(n));
    Form f(n);
    f.add(m, c);
    return f;
}

Form Form::monomial(int n, MultiIndex hol, MultiIndex anti, const Scalar& c) {
    return monomial(n, Monomial{hol, anti}, c);
}

Form Form::generator(int n, int j, bool conjugate) {
    if (j < 1 || j > n) throw Error("generator phi" + std::to_string(j) + " outside dimension " + std::to_string(n));
    return conjugate ? monomial(n, MultiIndex{}, MultiIndex{j}) : monomial(n, MultiIndex{j}, MultiIndex{});
}

Scalar Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Form::add(const Monomial& m, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

std::set<Bidegree> Form::bidegrees() const {
    std::set<Bidegree> out;
    for (const auto& [m, c] : terms_) out.insert({m.p(), m.q()});
    return out;
}

Bidegree Form::bidegree() const {
    auto b = bidegrees();
    if (b.size() != 1) throw Error(b.empty() ? "zero form has no bidegree" : "form is not homogeneous");
    return *b.begin();
}

Form Form::component(int p, int q) const {
    Form f(n_);
    for (const auto& [m, c] : terms_)
        if (m.p() == p && m.q() == q) f.terms_.emplace_hint(f.terms_.end(), m, c);
    return f;
}

Form Form::degreeComponent(int r) const {
    Form f(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == r) f.terms_.emplace_hint(f.terms_.end(), m, c);
    return f;
}

bool Form::avoids(int j) const {
    for (const auto& [m, c] : terms_)
        if (m.hol.contains(j) || m.anti.contains(j)) return false;
    return true;
}

int Form::maxIndexUsed() const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max({best, m.hol.maxIndex(), m.anti.maxIndex()});
    return best;
}

namespace {

int joinDimension(int a, int b) {
    if (a == b) return a;
    throw Error("forms of different dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Form& Form::operator+=(const Form& o) {
    n_ = joinDimension(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    n_ = joinDimension(n_, o.n_);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Form& Form::operator*=(const Scalar& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Form Form::operator-() const {
    Form f = *this;
    for (auto& [m, v] : f.terms_) v = -v;
    return f;
}

bool operator==(const Form& a, const Form& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

std::string Form::toString() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.toString() + ")*" + m.toString();
    }
    return s;
}

Form wedge(const Form& a, const Form& b) {
    Form out(joinDimension(a.n(), b.n()));
    for (const auto& [ma, ca] : a.terms()) {
        std::uint64_t la = ma.letters();
        for (const auto& [mb, cb] : b.terms()) {
            std::uint64_t lb = mb.letters();
            int s = wedgeSign(la, lb);
            if (s == 0) continue;
            Scalar c = ca * cb;
            if (s < 0) c = -c;
            out.add(Monomial::fromLetters(la | lb), c);
        }
    }
    return out;
}

Form power(const Form& a, int k) {
    if (k < 0) throw Error("negative wedge power");
    Form out = Form::scalar(a.n(), Scalar(1));
    for (int i = 0; i < k; ++i) out = wedge(out, a);
    return out;
}

Form conjugate(const Form& a) {
    // conj(c phi^I phibar^J) = cbar phibar^I phi^J = (-1)^{|I||J|} cbar phi^J phibar^I
    Form out(a.n());
    for (const auto& [m, c] : a.terms()) {
        Scalar v = c.conj();
        if ((m.p() * m.q()) % 2 == 1) v = -v;
        out.add(Monomial{m.anti, m.hol}, v);
    }
    return out;
}

bool isReal(const Form& a) { return conjugate(a) == a; }

Form volumeForm(int n) {
    return Form::monomial(n, MultiIndex::range(n), MultiIndex::range(n), Scalar::sigma(n));
}

Scalar volumeCoefficient(const Form& a) {
    Monomial top{MultiIndex::range(a.n()), MultiIndex::range(a.n())};
    return a.coefficient(top) / Scalar::sigma(a.n());
}

Form contract(const Form& a, int j, bool conj) {
    if (j < 1 || j > a.n()) throw Error("contraction index out of range");
    int bit = conj ? 32 + (j - 1) : (j - 1);
    std::uint64_t letter = std::uint64_t{1} << bit;
    Form out(a.n());
    for (const auto& [m, c] : a.terms()) {
        std::uint64_t l = m.letters();
        if (!(l & letter)) continue;
        int before = std::popcount(l & (letter - 1));
        out.add(Monomial::fromLetters(l & ~letter), (before % 2) ? -c : c);
    }
    return out;
}

Form substitute(const Form& a, const std::vector<Form>& images) {
    int n = a.n();
    if (static_cast<int>(images.size()) != 2 * n) throw Error("substitution needs 2n letter images");
    Form out(n);
    for (const auto& [m, c] : a.terms()) {
        Form acc = Form::scalar(n, c);
        for (int j : m.hol.indices()) acc = wedge(acc, images[j - 1]);
        for (int j : m.anti.indices()) acc = wedge(acc, images[n + j - 1]);
        out += acc;
    }
    return out;
}

Form dropIndex(const Form& a, int j) {
    if (!a.avoids(j)) throw Error("cannot drop an index that occurs in the form");
    auto squeeze = [j](MultiIndex mi) {
        std::uint32_t m = mi.mask();
        std::uint32_t lowMask = (1u << (j - 1)) - 1;
        return MultiIndex::fromMask((m & lowMask) | ((m >> 1) & ~lowMask));
    };
    Form out(a.n() - 1);
    for (const auto& [m, c] : a.terms()) out.add(Monomial{squeeze(m.hol), squeeze(m.anti)}, c);
    return out;
}

}  // namespace nilkahler
