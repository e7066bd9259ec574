#pragma once

#include "nilkahler/parser.hpp"
#include "nilkahler/verdict.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilkahler {

// One expected verdict of a catalog entry.
//   check: integrable | nilpotent | parallelizable | salamon | pkahler |
//          ppluriclosed | psymplectic | transverse | metric:<kind> |
//          maurer-cartan | obstruction | ab | stokes
struct Expectation {
    std::string check;
    std::vector<std::string> forms;
    int p = 0;
    Outcome expected = Outcome::Certified;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string source;
    std::vector<Expectation> expectations;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalogEntry(const std::string& name);
Document loadCatalog(const std::string& name, const std::map<std::string, Scalar>& overrides = {});

// Real (2,2)-form on C^4 with cone matrix diag(4,1,4,1,1,1) and off-diagonal
// entries a at slots (2,5) and b at slots (3,4).
Form lemmaForm(const Scalar& a, const Scalar& b);

struct ExpectationResult {
    const CatalogEntry* entry = nullptr;
    Expectation expectation;
    Outcome actual = Outcome::Unknown;
    std::string detail;
    bool passed() const { return actual == expectation.expected; }
};

ExpectationResult runExpectation(const CatalogEntry& entry, const Document& doc, const Expectation& e);
std::vector<ExpectationResult> runCatalogSelftest();

}  // namespace nilkahler
