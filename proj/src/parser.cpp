#include "nilkahler/parser.hpp"

#include <cctype>
#include <set>

namespace nilkahler {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool Document::hasForm(const std::string& name) const {
    for (const auto& [k, f] : forms)
        if (k == name) return true;
    return false;
}

const Form& Document::form(const std::string& name) const {
    for (const auto& [k, f] : forms)
        if (k == name) return f;
    throw Error("no form named '" + name + "'");
}

Scalar Document::param(const std::string& name) const {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    throw Error("no parameter named '" + name + "'");
}

namespace {

const std::set<std::string> kReserved = {"i", "sqrt", "sigma", "conj", "bar", "phi"};

struct Token {
    enum Kind { Number, Ident, Symbol, End } kind;
    std::string text;
    int column;
};

class Lexer {
public:
    Lexer(const std::string& text, int line, int columnOffset) : line_(line) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            char ch = text[pos];
            int col = static_cast<int>(pos) + columnOffset + 1;
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                tokens_.push_back({Token::Number, text.substr(start, pos - start), col});
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                tokens_.push_back({Token::Ident, text.substr(start, pos - start), col});
            } else if (std::string("+-*/^()[],;").find(ch) != std::string::npos) {
                tokens_.push_back({Token::Symbol, std::string(1, ch), col});
                ++pos;
            } else {
                throw ParseError(line_, col, std::string("unexpected character '") + ch + "'");
            }
        }
        tokens_.push_back({Token::End, "", static_cast<int>(text.size()) + columnOffset + 1});
    }

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool accept(const std::string& symbol) {
        if (peek().kind == Token::Symbol && peek().text == symbol) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& symbol) {
        if (!accept(symbol)) fail("expected '" + symbol + "'");
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, peek().column, message);
    }
    int line() const { return line_; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
};

struct Context {
    int n = 0;
    int radicand = 0;
    const std::map<std::string, Scalar>* params = nullptr;
    const std::map<std::string, Form>* forms = nullptr;
};

class ExpressionParser {
public:
    ExpressionParser(Lexer& lex, const Context& ctx) : lex_(lex), ctx_(ctx) {}

    Form parseAll() {
        Form f = expr();
        if (lex_.peek().kind != Token::End) lex_.fail("unexpected '" + lex_.peek().text + "'");
        return f;
    }

private:
    Form scalar(const Scalar& s) const { return Form::scalar(ctx_.n, s); }

    static std::optional<Scalar> asScalar(const Form& f) {
        if (f.isZero()) return Scalar();
        if (f.size() == 1 && f.terms().begin()->first.degree() == 0) return f.terms().begin()->second;
        return std::nullopt;
    }

    Form expr() {
        Form acc = term();
        while (true) {
            if (lex_.accept("+"))
                acc += term();
            else if (lex_.accept("-"))
                acc -= term();
            else
                return acc;
        }
    }

    Form term() {
        Form acc = unary();
        while (true) {
            if (lex_.accept("*")) {
                acc = wedge(acc, unary());
            } else if (lex_.peek().kind == Token::Symbol && lex_.peek().text == "/") {
                int col = lex_.next().column;
                Form rhs = unary();
                auto s = asScalar(rhs);
                if (!s) throw ParseError(lex_.line(), col, "can only divide by a scalar");
                if (s->isZero()) throw ParseError(lex_.line(), col, "division by zero");
                acc *= s->inverse();
            } else {
                return acc;
            }
        }
    }

    Form unary() {
        if (lex_.accept("-")) return -unary();
        if (lex_.accept("+")) return unary();
        return postfix();
    }

    Form postfix() {
        Form base = atom();
        if (lex_.accept("^")) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Number) lex_.fail("expected an integer exponent");
            int k = std::stoi(lex_.next().text);
            return power(base, k);
        }
        return base;
    }

    int integerArgument() {
        lex_.expect("(");
        bool negative = lex_.accept("-");
        if (lex_.peek().kind != Token::Number) lex_.fail("expected an integer");
        long v = std::stol(lex_.next().text);
        lex_.expect(")");
        return static_cast<int>(negative ? -v : v);
    }

    std::vector<int> indexList() {
        std::vector<int> out;
        if (lex_.peek().kind != Token::Number) return out;
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind != Token::Number) lex_.fail("expected an index");
            int col = t.column;
            int j = std::stoi(lex_.next().text);
            if (j < 1 || j > ctx_.n)
                throw ParseError(lex_.line(), col,
                                 "index " + std::to_string(j) + " outside 1.." + std::to_string(ctx_.n));
            if (!out.empty() && j <= out.back())
                throw ParseError(lex_.line(), col, "indices must be strictly increasing");
            out.push_back(j);
            if (!lex_.accept(",")) return out;
        }
    }

    Form atom() {
        const Token t = lex_.peek();
        if (t.kind == Token::Number) {
            lex_.next();
            return scalar(Scalar(Rational(Integer(t.text))));
        }
        if (lex_.accept("(")) {
            Form f = expr();
            lex_.expect(")");
            return f;
        }
        if (t.kind != Token::Ident) lex_.fail(t.kind == Token::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
        lex_.next();
        if (t.text == "i") return scalar(Scalar::i());
        if (t.text == "sqrt") {
            int col = lex_.peek().column;
            int dv = integerArgument();
            if (ctx_.radicand == 0)
                throw ParseError(lex_.line(), col, "sqrt used without a 'scalars sqrt D' declaration");
            if (dv != ctx_.radicand)
                throw ParseError(lex_.line(), col,
                                 "sqrt(" + std::to_string(dv) + ") does not match the declared sqrt(" +
                                     std::to_string(ctx_.radicand) + ")");
            return scalar(Scalar::sqrt(dv));
        }
        if (t.text == "sigma") {
            int col = lex_.peek().column;
            int p = integerArgument();
            if (p < 0) throw ParseError(lex_.line(), col, "sigma needs p >= 0");
            return scalar(Scalar::sigma(p));
        }
        if (t.text == "conj" || t.text == "bar") {
            lex_.expect("(");
            Form f = expr();
            lex_.expect(")");
            return conjugate(f);
        }
        if (t.text == "phi") {
            if (ctx_.n == 0) throw ParseError(lex_.line(), t.column, "monomial used before 'dimension'");
            lex_.expect("[");
            std::vector<int> hol = indexList();
            std::vector<int> anti;
            if (lex_.accept(";")) anti = indexList();
            lex_.expect("]");
            return Form::monomial(ctx_.n, MultiIndex(hol), MultiIndex(anti));
        }
        if (ctx_.params) {
            auto it = ctx_.params->find(t.text);
            if (it != ctx_.params->end()) return scalar(it->second);
        }
        if (ctx_.forms) {
            auto it = ctx_.forms->find(t.text);
            if (it != ctx_.forms->end()) return it->second;
        }
        throw ParseError(lex_.line(), t.column, "unresolved name '" + t.text + "'");
    }

    Lexer& lex_;
    const Context& ctx_;
};

Form evaluate(const std::string& text, int line, int column, const Context& ctx) {
    Lexer lex(text, line, column);
    ExpressionParser p(lex, ctx);
    return p.parseAll();
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool isIdentifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// Parses "<prefix><int>" such as phi5 or theta2.
std::optional<int> suffixNumber(const std::string& word, const std::string& prefix) {
    if (word.rfind(prefix, 0) != 0 || word.size() == prefix.size()) return std::nullopt;
    std::string rest = word.substr(prefix.size());
    for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoi(rest);
}

}  // namespace

Document parseDocument(const std::string& text, const std::map<std::string, Scalar>& overrides) {
    Document doc;
    int n = 0;
    std::map<std::string, Scalar> params;
    std::map<std::string, Form> forms;
    std::vector<std::optional<Form>> dphi;
    std::set<std::string> used;

    std::size_t start = 0;
    int lineNo = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string raw = text.substr(start, end - start);
        start = end + 1;
        ++lineNo;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) {
            if (end == text.size()) break;
            continue;
        }
        int indent = static_cast<int>(raw.find_first_not_of(" \t"));
        std::string line = trim(raw);

        // Split "lhs = rhs" keeping the column of rhs.
        std::string lhs = line, rhs;
        int rhsColumn = 0;
        if (auto eq = line.find('='); eq != std::string::npos) {
            lhs = trim(line.substr(0, eq));
            rhs = line.substr(eq + 1);
            rhsColumn = indent + static_cast<int>(eq) + 1;
        }
        std::vector<std::string> words;
        {
            std::string w;
            for (char c : lhs) {
                if (c == ' ' || c == '\t') {
                    if (!w.empty()) words.push_back(w), w.clear();
                } else {
                    w += c;
                }
            }
            if (!w.empty()) words.push_back(w);
        }
        auto fail = [&](const std::string& msg) -> ParseError { return ParseError(lineNo, indent + 1, msg); };
        Context ctx{n, doc.radicand, &params, &forms};
        const std::string& key = words[0];

        if (key == "name") {
            if (words.size() != 2) throw fail("expected 'name NAME'");
            doc.name = words[1];
        } else if (key == "dimension") {
            if (words.size() != 2 || n != 0) throw fail("expected a single 'dimension N'");
            n = std::atoi(words[1].c_str());
            if (n < 1 || n > kMaxDimension) throw fail("dimension must lie in 1.." + std::to_string(kMaxDimension));
            dphi.assign(n, std::nullopt);
        } else if (key == "scalars") {
            if (words.size() != 3 || words[1] != "sqrt") throw fail("expected 'scalars sqrt D'");
            long dv = std::atol(words[2].c_str());
            if (dv != 0 && !isSquareFree(dv)) throw fail("sqrt(" + words[2] + ") is not a square-free radicand >= 2");
            doc.radicand = static_cast<int>(dv);
        } else if (key == "param") {
            if (words.size() != 2 || !isIdentifier(words[1]) || rhs.empty()) throw fail("expected 'param NAME = expr'");
            const std::string& pname = words[1];
            if (kReserved.count(pname)) throw fail("'" + pname + "' is reserved");
            if (params.count(pname)) throw fail("parameter '" + pname + "' declared twice");
            Scalar value;
            if (auto it = overrides.find(pname); it != overrides.end()) {
                value = it->second;
                used.insert(pname);
            } else {
                Form f = evaluate(rhs, lineNo, rhsColumn, Context{0, doc.radicand, &params, nullptr});
                if (f.isZero())
                    value = Scalar();
                else if (f.size() == 1 && f.terms().begin()->first.degree() == 0)
                    value = f.terms().begin()->second;
                else
                    throw fail("parameter '" + pname + "' is not a scalar");
            }
            params[pname] = value;
            doc.params.emplace_back(pname, value);
        } else if (key == "d") {
            if (n == 0) throw fail("'dimension' must come first");
            if (words.size() != 2 || rhs.empty()) throw fail("expected 'd phi<j> = expr'");
            auto j = suffixNumber(words[1], "phi");
            if (!j) throw fail("expected a generator name phi<j>");
            if (*j < 1 || *j > n) throw fail("unknown generator " + words[1]);
            if (dphi[*j - 1]) throw fail("d " + words[1] + " given twice");
            Form f = evaluate(rhs, lineNo, rhsColumn, ctx);
            for (const auto& [m, c] : f.terms())
                if (m.degree() != 2) throw fail("d " + words[1] + " must be a 2-form");
            dphi[*j - 1] = f;
        } else if (key == "form") {
            if (n == 0) throw fail("'dimension' must come first");
            if (words.size() < 2 || !isIdentifier(words[1]) || rhs.empty()) throw fail("expected 'form NAME (p,q) = expr'");
            const std::string& fname = words[1];
            if (kReserved.count(fname) || params.count(fname)) throw fail("'" + fname + "' is already taken");
            if (forms.count(fname)) throw fail("form '" + fname + "' declared twice");
            std::optional<Bidegree> tag;
            if (words.size() > 2) {
                std::string rest;
                for (std::size_t k = 2; k < words.size(); ++k) rest += words[k];
                int p = -1, q = -1;
                if (std::sscanf(rest.c_str(), "(%d,%d)", &p, &q) != 2 || p < 0 || q < 0)
                    throw fail("bad bidegree tag '" + rest + "'");
                tag = Bidegree{p, q};
            }
            Form f = evaluate(rhs, lineNo, rhsColumn, ctx);
            if (tag)
                for (const auto& [m, c] : f.terms())
                    if (m.p() != tag->first || m.q() != tag->second)
                        throw fail("form '" + fname + "' has a term " + m.toString() + " outside its bidegree");
            forms[fname] = f;
            doc.forms.emplace_back(fname, f);
        } else if (key == "vform") {
            if (n == 0) throw fail("'dimension' must come first");
            if (words.size() != 3 || rhs.empty()) throw fail("expected 'vform theta<l> bar<m> = expr'");
            auto l = suffixNumber(words[1], "theta");
            auto m = suffixNumber(words[2], "bar");
            if (!l || !m || *l < 1 || *l > n || *m < 1 || *m > n) throw fail("bad vector-form slot");
            Form f = evaluate(rhs, lineNo, rhsColumn, ctx);
            if (!f.isZero() && !(f.size() == 1 && f.terms().begin()->first.degree() == 0))
                throw fail("vector-form coefficient must be a scalar");
            if (!doc.vectorForm) doc.vectorForm = ScalarMatrix(n, n);
            (*doc.vectorForm)(*l - 1, *m - 1) = f.isZero() ? Scalar() : f.terms().begin()->second;
        } else if (key == "curve") {
            if (words.size() != 2 || words[1] != "linear") throw fail("only 'curve linear' is supported");
            doc.curveLinear = true;
        } else {
            throw fail("unknown directive '" + key + "'");
        }
        if (end == text.size()) break;
    }
    if (n == 0) throw ParseError(lineNo, 1, "missing 'dimension'");
    for (const auto& [k, v] : overrides)
        if (!used.count(k)) throw Error("override for undeclared parameter '" + k + "'");
    std::vector<Form> eqs;
    for (auto& f : dphi) eqs.push_back(f ? *f : Form(n));
    doc.structure = StructureEquations(n, std::move(eqs), doc.radicand, doc.name);
    return doc;
}

Form parseFormExpression(const std::string& text, int n, int radicand, const std::map<std::string, Scalar>& params) {
    Context ctx{n, radicand, &params, nullptr};
    return evaluate(text, 1, 0, ctx);
}

Scalar parseScalarExpression(const std::string& text, int radicand, const std::map<std::string, Scalar>& params) {
    Form f = parseFormExpression(text, 0, radicand, params);
    if (f.isZero()) return Scalar();
    if (f.size() == 1 && f.terms().begin()->first.degree() == 0) return f.terms().begin()->second;
    throw Error("expression is not a scalar");
}

}  // namespace nilkahler
