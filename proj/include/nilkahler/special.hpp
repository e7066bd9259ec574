#pragma once

#include "nilkahler/form.hpp"
#include "nilkahler/linalg.hpp"
#include "nilkahler/structure.hpp"
#include "nilkahler/transversality.hpp"
#include "nilkahler/verdict.hpp"

#include <optional>
#include <string>

namespace nilkahler {

// omega = (i/2) sum H_jk phi^j ^ phibar^k for a positive definite Hermitian H.
Form metricForm(const ScalarMatrix& h);
Form metricPower(const ScalarMatrix& h, int p);

enum class MetricKind { Kahler, Balanced, Pluriclosed, Astheno, Gauduchon, StronglyGauduchon };

MetricKind parseMetricKind(const std::string& name);
std::string metricKindName(MetricKind k);

struct StructureReport {
    std::string check;
    Outcome outcome = Outcome::Unknown;
    // The form that has to vanish (dOmega, del delbar Omega, ...).
    Form residual;
    Verdict transversality;
    std::string detail;

    bool certified() const { return outcome == Outcome::Certified; }
};

StructureReport checkMetric(const StructureEquations& s, const ScalarMatrix& h, MetricKind kind);
StructureReport checkPKahler(const StructureEquations& s, const Form& omega, int p,
                             const TransverseOptions& opt = {});
StructureReport checkPPluriclosed(const StructureEquations& s, const Form& omega, int p,
                                  const TransverseOptions& opt = {});
StructureReport checkPSymplectic(const StructureEquations& s, const Form& psi, int p,
                                 const TransverseOptions& opt = {});

// d gamma = c sigma_k beta ^ conj(beta) with real c > 0 and simple beta of
// degree (k,0), k = n - p: no p-Kahler structure exists.
Verdict stokesWitness(const StructureEquations& s, const Form& gamma, const Form& beta, int p);

// zeta of type (k,0), simple and nonzero, delbar zeta = 0 and zeta = del alpha:
// no p-Kahler structure exists (k = n - p).
Verdict abWitness(const StructureEquations& s, const Form& zeta, const Form& alpha, int p);

struct PromotedWitness {
    Form zeta;
    Form alpha;
    Verdict verdict;
};

// From a witness for p to one for p - 1, using a closed generator phi^j:
// zeta' = -phi^j ^ zeta, alpha' = phi^j ^ alpha.
PromotedWitness promoteWitness(const StructureEquations& s, const Form& zeta, const Form& alpha, int p, int j);

// sigma_1 (Omega ^ phi^{a abar} + Omega ^ phi^{b bbar}) for closed phi^a, phi^b.
struct PromotedStructure {
    Form form;
    StructureReport report;
};
PromotedStructure balancedPromotion(const StructureEquations& s, const Form& omega, int a, int b,
                                    const TransverseOptions& opt = {});

// Simple d-closed (k,0)-form, if one exists among monomials.
std::optional<Form> closedSimpleWitness(const StructureEquations& s, int k);

}  // namespace nilkahler
