#pragma once

#include "nilkahler/form.hpp"
#include "nilkahler/linalg.hpp"
#include "nilkahler/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilkahler {

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Parsed structure file.
//
//   name NAME
//   dimension N
//   scalars sqrt D
//   param NAME = <scalar expr>
//   d phi<j> = <form expr>
//   form NAME [(p,q)] = <form expr>
//   vform theta<l> bar<m> = <scalar expr>
//   curve linear
//
// Expressions use + - * / ^, parentheses, integers, i, sqrt(D), sigma(p),
// conj(...), parameter and form names and monomials phi[i1,..; j1,..].
// `*` is the wedge product, `^k` a wedge power, `/` divides by a scalar.
struct Document {
    std::string name;
    int radicand = 0;
    StructureEquations structure;
    std::vector<std::pair<std::string, Scalar>> params;
    std::vector<std::pair<std::string, Form>> forms;
    // Coefficients V(l-1, m-1) of phibar^m (x) theta_l.
    std::optional<ScalarMatrix> vectorForm;
    bool curveLinear = false;

    int n() const { return structure.n(); }
    bool hasForm(const std::string& name) const;
    const Form& form(const std::string& name) const;
    Scalar param(const std::string& name) const;
};

// Overrides replace the value of declared parameters.
Document parseDocument(const std::string& text, const std::map<std::string, Scalar>& overrides = {});

// Parses a single scalar or form expression in a dimension-n context.
Form parseFormExpression(const std::string& text, int n, int radicand = 0,
                         const std::map<std::string, Scalar>& params = {});
Scalar parseScalarExpression(const std::string& text, int radicand = 0,
                             const std::map<std::string, Scalar>& params = {});

}  // namespace nilkahler
