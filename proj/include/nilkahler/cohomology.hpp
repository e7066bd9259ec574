#pragma once

#include "nilkahler/form.hpp"
#include "nilkahler/linalg.hpp"
#include "nilkahler/structure.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilkahler {

enum class Theory { DeRham, Del, Delbar, BottChern, Aeppli };

Theory parseTheory(const std::string& name);
std::string theoryName(Theory t);

// Ordered monomial basis of one bidegree, or of one total degree.
class Slice {
public:
    static Slice bidegree(int n, int p, int q);
    static Slice degree(int n, int r);

    int n() const { return n_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }
    // Coordinates of a form supported on the slice; throws otherwise.
    SparseVector coordinates(const Form& f) const;
    Form form(const SparseVector& v) const;
    std::string label() const { return label_; }

private:
    int n_ = 0;
    std::string label_;
    std::vector<Monomial> basis_;
    std::map<Monomial, int, MonomialLess> index_;
};

enum class Operator { D, Del, Delbar, DelDelbar };

// Matrix of the operator from `source` to `target`.
LinearMap operatorMatrix(const StructureEquations& s, Operator op, const Slice& source, const Slice& target);

struct CohomologyResult {
    int dimension = 0;
    std::vector<Form> representatives;
};

// Complex theories use the bidegree (p,q); de Rham uses the total degree p + q.
CohomologyResult cohomology(const StructureEquations& s, Theory theory, int p, int q);
CohomologyResult deRham(const StructureEquations& s, int r);

struct ClassResult {
    bool isZero = false;
    // Primitive(s): one form for d, del, delbar and BC; two (lambda, mu) with
    // omega = del lambda + delbar mu for Aeppli.
    std::vector<Form> primitive;
    // Linear functional (coefficients on monomials) that vanishes on all
    // boundaries but not on omega.
    Form functional;
    Scalar pairing;
    std::string detail;
};

// Throws if omega is not a cycle for the theory.
ClassResult classIsZero(const StructureEquations& s, const Form& omega, Theory theory);

// Applies a functional to a form: sum of coefficient products.
Scalar applyFunctional(const Form& functional, const Form& omega);

}  // namespace nilkahler
