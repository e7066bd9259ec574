#pragma once

#include "nilkahler/form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilkahler {

enum class Outcome { Certified, Refuted, Unknown };

std::string outcomeName(Outcome o);

// Result of any check.  Refutations carry an exactly re-verifiable witness
// when one exists; Unknown carries diagnostics in `detail`.
struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::string method;
    std::string detail;
    std::optional<Form> witness;
    std::vector<Form> factors;
    std::vector<Scalar> vector;
    std::optional<double> minimum;

    bool certified() const { return outcome == Outcome::Certified; }
    bool refuted() const { return outcome == Outcome::Refuted; }

    static Verdict certify(std::string method, std::string detail = {});
    static Verdict refute(std::string method, std::string detail = {});
    static Verdict unknown(std::string method, std::string detail = {});
};

}  // namespace nilkahler
