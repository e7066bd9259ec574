#pragma once

#include "nilkahler/cohomology.hpp"
#include "nilkahler/form.hpp"
#include "nilkahler/linalg.hpp"
#include "nilkahler/structure.hpp"
#include "nilkahler/verdict.hpp"

#include <optional>

namespace nilkahler {

// phi = sum V(l-1, m-1) phibar^m (x) theta_l, a (0,1)-form with values in T^{1,0}.
using VectorForm = ScalarMatrix;

// i_phi(sigma) = sum V_lm phibar^m ^ i_{theta_l} sigma.
Form contractVector(const VectorForm& v, const Form& sigma);
// The conjugate contraction by phibar = sum conj(V_lm) phi^m (x) thetabar_l.
Form contractVectorBar(const VectorForm& v, const Form& sigma);

// Letter substitution by a 2n x 2n matrix: letter l goes to sum_m E(l,m) letter m
// (letters phi^1..phi^n then phibar^1..phibar^n).
Form simultaneousContract(const ScalarMatrix& e, const Form& sigma);
// Matrix of (I + phi + phibar).
ScalarMatrix extensionMatrix(const VectorForm& v);

// e^{i_phi | i_phibar}: per monomial, e^{i_phi} on the holomorphic block and
// e^{i_phibar} on the antiholomorphic block, summed as finite series.
Form extension(const VectorForm& v, const Form& sigma);

struct DeformedOperator {
    Form pre;   // on the central fiber, before extension
    Form post;  // extension of `pre`
};

// delbar_t (e alpha) = e((I - phibar phi)^{-1} ([del, i_phi] + delbar)(I - phibar phi) alpha)
DeformedOperator deformedDelbar(const StructureEquations& s, const VectorForm& v, const Form& alpha);
// del_t (e alpha) = e((I - phi phibar)^{-1} ([delbar, i_phibar] + del)(I - phi phibar) alpha)
DeformedOperator deformedDel(const StructureEquations& s, const VectorForm& v, const Form& alpha);

// Integrability of the deformed (0,1)-bundle spanned by thetabar_a + phi(thetabar_a),
// computed from the structure constants.  Refutations name the failing pair.
Verdict maurerCartan(const StructureEquations& s, const VectorForm& v);

struct Obstruction {
    Form contracted;  // del i_V Omega
    Form residual;    // del i_V Omega + delbar Omega'
    ClassResult delbarClass;
};

// First-order extension test for a closed real (p,p)-form along the direction V.
Obstruction firstOrderObstruction(const StructureEquations& s, const Form& omega, const VectorForm& v,
                                  const std::optional<Form>& omegaPrime = std::nullopt);

}  // namespace nilkahler
