#pragma once

#include "nilkahler/form.hpp"
#include "nilkahler/linalg.hpp"
#include "nilkahler/verdict.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilkahler {

// Decomposability of a (k,0)-form.  Certified verdicts list factors whose
// wedge is exactly the input; refutations carry (i_X b) ^ b != 0 as witness.
Verdict isSimple(const Form& beta);

// Basis of (k,0)-monomials in canonical order.
std::vector<MultiIndex> holomorphicBasis(int n, int k);

// Hermitian matrix P of the pairing b -> vol(sigma_k Omega ^ b ^ conj(b)) for a
// real (p,p)-form Omega, k = n - p:  the pairing of b = sum b_I phi^I equals
// x^H P x with x = conj(b).  Indexed by holomorphicBasis(n, k).
ScalarMatrix pairingMatrix(const Form& omega);

// vol(sigma_k Omega ^ beta ^ conj(beta)), computed by direct wedging.
Scalar pairingValue(const Form& omega, const Form& beta);

// Cone coordinates for real (2,2)-forms on C^4.  The basis of (2,0)-forms is
// phi12, phi13, phi14, phi23, -phi24, phi34; the matrix A has
// Omega = sum A_jk Om_j ^ conj(Om_k).
ScalarMatrix coneMatrix(const Form& omega);
// zbar A z.
Scalar coneValue(const ScalarMatrix& a, const std::vector<Scalar>& z);
bool onCone(const std::vector<Scalar>& z);
// The simple (2,0)-form whose pairing with Omega is 4 * coneValue(A, z).
Form coneVectorForm(const std::vector<Scalar>& z);

struct TransverseOptions {
    int restarts = 16;
    double tolerance = 1e-9;
    std::uint64_t seed = 1;
    int trials = 2000;
    int maxSweeps = 300;
    long maxDenominator = 1000000;
};

enum class TransverseMethod { Auto, Chain, Split, Minimize, Sample, Definite };

TransverseMethod parseTransverseMethod(const std::string& name);
std::string methodName(TransverseMethod m);

// Exact inequality chain on the cone for real (2,2)-forms on C^4 whose cone
// matrix only couples complementary slots.
Verdict lemmaChainCheck(const Form& omega);
// Omega = Omega0 + sigma_1 phi^{j jbar} ^ F with Omega0, F free of index j;
// certified when both pieces are certified transverse on the remaining
// coframe (exact methods only).
Verdict splitRule(const Form& omega, int j);
// Exact test for k in {0, 1, n-1, n}, where every (k,0)-form is simple.
Verdict definiteCheck(const Form& omega);
Verdict transverseMinimize(const Form& omega, const TransverseOptions& opt = {});
Verdict transverseFalsify(const Form& omega, const TransverseOptions& opt = {});
// Tries the exact methods, then the minimizer, then sampling.
Verdict transverse(const Form& omega, TransverseMethod method = TransverseMethod::Auto,
                   const TransverseOptions& opt = {});

// Checks a Refuted transversality witness by direct exact wedging.
bool witnessIsValid(const Form& omega, const Verdict& v);

}  // namespace nilkahler
