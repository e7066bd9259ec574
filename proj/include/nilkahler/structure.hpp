#pragma once

#include "nilkahler/form.hpp"
#include "nilkahler/linalg.hpp"
#include "nilkahler/verdict.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilkahler {

// Structure equations d phi^j of an invariant coframe.  d phibar^j is the
// conjugate of d phi^j.
class StructureEquations {
public:
    StructureEquations() = default;
    StructureEquations(int n, std::vector<Form> dphi, int radicand = 0, std::string name = {});
    static StructureEquations abelian(int n);

    int n() const { return n_; }
    int radicand() const { return radicand_; }
    const std::string& name() const { return name_; }
    const Form& dphi(int j) const;
    const Form& dletter(int letter) const { return dletters_.at(letter); }
    std::string toString() const;

private:
    int n_ = 0;
    int radicand_ = 0;
    std::string name_;
    std::vector<Form> dphi_;
    // d of all 2n letters in letter order.
    std::vector<Form> dletters_;
};

// Exterior derivative extended by the Leibniz rule.
Form d(const StructureEquations& s, const Form& a);
// Bidegree projections of d; the input must be homogeneous.
Form del(const StructureEquations& s, const Form& a);
Form delbar(const StructureEquations& s, const Form& a);
Form deldelbar(const StructureEquations& s, const Form& a);
// Same projections applied to each bidegree component separately.
Form delComponentwise(const StructureEquations& s, const Form& a);
Form delbarComponentwise(const StructureEquations& s, const Form& a);

Verdict checkIntegrable(const StructureEquations& s);
Verdict checkNilpotentCoframe(const StructureEquations& s);
Verdict checkParallelizable(const StructureEquations& s);
Verdict checkSalamon(const StructureEquations& s);

// New coframe psi = P phi (psi^i = sum_j P_ij phi^j).
StructureEquations changeCoframe(const StructureEquations& s, const ScalarMatrix& p);
// Rewrites a form given in phi into the coframe psi = P phi.
Form changeCoframe(const Form& a, const ScalarMatrix& p);

}  // namespace nilkahler
