#include "hermicurv/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

namespace hermicurv::dsl {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      detail_(what) {}

// ---------------------------------------------------------------------------
// Construction

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

bool is_const(const Expr& e) { return e->kind == NodeKind::Constant; }

Complex ipow(Complex base, int k) {
    if (k < 0) return Complex(1.0) / ipow(base, -k);
    Complex r(1.0);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

}  // namespace

Expr constant(Complex c) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Constant;
    n->value = c;
    return n;
}

Expr z(int index) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Z;
    n->index = index;
    return n;
}

Expr zbar(int index) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Zbar;
    n->index = index;
    return n;
}

Expr node(NodeKind kind, std::vector<Expr> children) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->children = std::move(children);
    return n;
}

Expr power(Expr base, int exponent) {
    if (exponent == 0) throw InvalidArgument("pow exponent must be a nonzero integer");
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Pow;
    n->index = exponent;
    n->children = {std::move(base)};
    return n;
}

bool is_zero(const Expr& e) { return is_const(e) && e->value == Complex(0.0); }
bool is_one(const Expr& e) { return is_const(e) && e->value == Complex(1.0); }

Expr add(const Expr& a, const Expr& b) {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (is_const(a) && is_const(b)) return constant(a->value + b->value);
    return node(NodeKind::Add, {a, b});
}

Expr sub(const Expr& a, const Expr& b) {
    if (is_zero(b)) return a;
    if (is_zero(a)) return neg(b);
    if (is_const(a) && is_const(b)) return constant(a->value - b->value);
    return node(NodeKind::Sub, {a, b});
}

Expr neg(const Expr& a) {
    if (is_const(a)) return constant(-a->value);
    if (a->kind == NodeKind::Neg) return a->children[0];
    return node(NodeKind::Neg, {a});
}

Expr mul(const Expr& a, const Expr& b) {
    if (is_zero(a) || is_zero(b)) return constant(0.0);
    if (is_one(a)) return b;
    if (is_one(b)) return a;
    if (is_const(a) && is_const(b)) return constant(a->value * b->value);
    return node(NodeKind::Mul, {a, b});
}

Expr div(const Expr& a, const Expr& b) {
    if (is_one(b)) return a;
    if (is_zero(a) && !is_zero(b)) return constant(0.0);
    if (is_const(a) && is_const(b) && !is_zero(b)) return constant(a->value / b->value);
    return node(NodeKind::Div, {a, b});
}

Expr pow(const Expr& a, int exponent) {
    if (exponent == 1) return a;
    if (is_const(a)) {
        const Complex v = ipow(a->value, exponent);
        if (finite(v)) return constant(v);
    }
    return power(a, exponent);
}

Expr call(NodeKind fn, const Expr& a) {
    if (is_const(a)) {
        const Complex w = a->value;
        switch (fn) {
            case NodeKind::Exp:
                if (finite(std::exp(w))) return constant(std::exp(w));
                break;
            case NodeKind::Log:
                if (w != Complex(0.0)) return constant(std::log(w));
                break;
            case NodeKind::Sqrt:
                if (w != Complex(0.0)) return constant(std::sqrt(w));
                break;
            default:
                throw InvalidArgument("call: not a function node kind");
        }
    }
    return node(fn, {a});
}

// ---------------------------------------------------------------------------
// Differentiation

Expr derivative(const Expr& e, Direction d) {
    const auto& c = e->children;
    switch (e->kind) {
        case NodeKind::Constant:
            return constant(0.0);
        case NodeKind::Z:
            return constant(d.kind == Wirtinger::Holo && e->index == d.index ? 1.0 : 0.0);
        case NodeKind::Zbar:
            return constant(d.kind == Wirtinger::Anti && e->index == d.index ? 1.0 : 0.0);
        case NodeKind::Neg:
            return neg(derivative(c[0], d));
        case NodeKind::Add:
            return add(derivative(c[0], d), derivative(c[1], d));
        case NodeKind::Sub:
            return sub(derivative(c[0], d), derivative(c[1], d));
        case NodeKind::Mul:
            return add(mul(derivative(c[0], d), c[1]), mul(c[0], derivative(c[1], d)));
        case NodeKind::Div: {
            const Expr df = derivative(c[0], d);
            const Expr dg = derivative(c[1], d);
            if (is_zero(dg)) return div(df, c[1]);
            return div(sub(mul(df, c[1]), mul(c[0], dg)), pow(c[1], 2));
        }
        case NodeKind::Pow: {
            const int k = e->index;
            const Expr df = derivative(c[0], d);
            if (is_zero(df)) return df;
            const Expr lower = (k - 1 == 0) ? constant(1.0) : pow(c[0], k - 1);
            return mul(mul(constant(static_cast<double>(k)), lower), df);
        }
        case NodeKind::Exp:
            return mul(e, derivative(c[0], d));
        case NodeKind::Log:
            return div(derivative(c[0], d), c[0]);
        case NodeKind::Sqrt: {
            const Expr df = derivative(c[0], d);
            if (is_zero(df)) return df;
            return div(df, mul(constant(2.0), e));
        }
    }
    throw InvalidArgument("derivative: malformed expression");
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Complex eval_rec(const Expr& e, const ChartPoint& p) {
    const auto& c = e->children;
    auto var = [&](int k) -> Complex {
        if (k < 1 || static_cast<std::size_t>(k) > p.dim())
            throw EvaluationError("variable index " + std::to_string(k) + " exceeds point dimension " +
                                  std::to_string(p.dim()));
        return p.coords[k - 1];
    };
    switch (e->kind) {
        case NodeKind::Constant:
            return e->value;
        case NodeKind::Z:
            return var(e->index);
        case NodeKind::Zbar:
            return std::conj(var(e->index));
        case NodeKind::Neg:
            return -eval_rec(c[0], p);
        case NodeKind::Add:
            return eval_rec(c[0], p) + eval_rec(c[1], p);
        case NodeKind::Sub:
            return eval_rec(c[0], p) - eval_rec(c[1], p);
        case NodeKind::Mul:
            return eval_rec(c[0], p) * eval_rec(c[1], p);
        case NodeKind::Div: {
            const Complex den = eval_rec(c[1], p);
            if (den == Complex(0.0)) throw EvaluationError("division by zero");
            return eval_rec(c[0], p) / den;
        }
        case NodeKind::Pow: {
            const Complex b = eval_rec(c[0], p);
            if (e->index < 0 && b == Complex(0.0)) throw EvaluationError("division by zero");
            return ipow(b, e->index);
        }
        case NodeKind::Exp:
            return std::exp(eval_rec(c[0], p));
        case NodeKind::Log: {
            const Complex w = eval_rec(c[0], p);
            if (w == Complex(0.0)) throw EvaluationError("log of zero");
            return std::log(w);
        }
        case NodeKind::Sqrt: {
            const Complex w = eval_rec(c[0], p);
            if (w == Complex(0.0)) throw EvaluationError("sqrt of zero");
            return std::sqrt(w);
        }
    }
    throw InvalidArgument("evaluate: malformed expression");
}

}  // namespace

Complex evaluate(const Expr& e, const ChartPoint& p) {
    const Complex v = eval_rec(e, p);
    if (!finite(v)) throw EvaluationError("expression value is not finite");
    return v;
}

// ---------------------------------------------------------------------------
// Printing and structural helpers

namespace {

std::string fmt_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::abs(x));
    std::string s(buf);
    return x < 0 || (x == 0.0 && std::signbit(x)) ? "(-" + s + ")" : s;
}

std::string fmt_constant(Complex c) {
    if (c == kI) return "i";
    if (c.imag() == 0.0) return fmt_real(c.real() == 0.0 ? 0.0 : c.real());
    const std::string im = "(" + fmt_real(c.imag()) + " * i)";
    if (c.real() == 0.0) return im;
    return "(" + fmt_real(c.real()) + " + " + im + ")";
}

const char* fn_name(NodeKind k) {
    switch (k) {
        case NodeKind::Exp: return "exp";
        case NodeKind::Log: return "log";
        case NodeKind::Sqrt: return "sqrt";
        default: return "?";
    }
}

const char* op_symbol(NodeKind k) {
    switch (k) {
        case NodeKind::Add: return " + ";
        case NodeKind::Sub: return " - ";
        case NodeKind::Mul: return " * ";
        case NodeKind::Div: return " / ";
        default: return "?";
    }
}

}  // namespace

std::string unparse(const Expr& e) {
    const auto& c = e->children;
    switch (e->kind) {
        case NodeKind::Constant: return fmt_constant(e->value);
        case NodeKind::Z: return "z" + std::to_string(e->index);
        case NodeKind::Zbar: return "zb" + std::to_string(e->index);
        case NodeKind::Neg: return "(-" + unparse(c[0]) + ")";
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div: return "(" + unparse(c[0]) + op_symbol(e->kind) + unparse(c[1]) + ")";
        case NodeKind::Pow: return "(" + unparse(c[0]) + "^" + std::to_string(e->index) + ")";
        case NodeKind::Exp:
        case NodeKind::Log:
        case NodeKind::Sqrt: return std::string(fn_name(e->kind)) + "(" + unparse(c[0]) + ")";
    }
    throw InvalidArgument("unparse: malformed expression");
}

Expr conjugate_form(const Expr& e) {
    switch (e->kind) {
        case NodeKind::Constant: return constant(std::conj(e->value));
        case NodeKind::Z: return zbar(e->index);
        case NodeKind::Zbar: return z(e->index);
        case NodeKind::Pow: return power(conjugate_form(e->children[0]), e->index);
        default: {
            std::vector<Expr> kids;
            kids.reserve(e->children.size());
            for (const auto& k : e->children) kids.push_back(conjugate_form(k));
            return node(e->kind, std::move(kids));
        }
    }
}

int max_variable_index(const Expr& e) {
    if (e->kind == NodeKind::Z || e->kind == NodeKind::Zbar) return e->index;
    int m = 0;
    for (const auto& k : e->children) m = std::max(m, max_variable_index(k));
    return m;
}

std::size_t node_count(const Expr& e) {
    std::size_t n = 1;
    for (const auto& k : e->children) n += node_count(k);
    return n;
}

// ---------------------------------------------------------------------------
// Lexer / parser

namespace {

enum class Tok { Number, Ident, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double number = 0.0;
    bool integral = false;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= src_.size()) return t;
        const char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number(t);
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            t.kind = Tok::Ident;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                t.text.push_back(advance());
            return t;
        }
        if (std::string_view("+-*/^()[],;=").find(ch) != std::string_view::npos) {
            t.kind = Tok::Punct;
            t.text.push_back(advance());
            return t;
        }
        throw ParseError(t.line, t.column, std::string("unexpected character '") + ch + "'");
    }

private:
    char advance() {
        const char ch = src_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            if (ch == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token number(Token t) {
        t.kind = Tok::Number;
        t.integral = true;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                t.text.push_back(advance());
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            t.integral = false;
            t.text.push_back(advance());
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            t.integral = false;
            t.text.push_back(advance());
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) t.text.push_back(advance());
            const auto before = t.text.size();
            digits();
            if (t.text.size() == before) throw ParseError(t.line, t.column, "malformed number '" + t.text + "'");
        }
        if (t.text == ".") throw ParseError(t.line, t.column, "malformed number '.'");
        const auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
        if (res.ec != std::errc() || !std::isfinite(t.number))
            throw ParseError(t.line, t.column, "malformed number '" + t.text + "'");
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, std::size_t n) : lex_(src), n_(n) { cur_ = lex_.next(); }

    Expr parse_single() {
        Expr e = expr();
        if (cur_.kind != Tok::End) fail("unexpected '" + cur_.text + "' after expression");
        return e;
    }

    MetricDefinition parse_metric() {
        expect_ident("dim");
        if (cur_.kind != Tok::Number || !cur_.integral || cur_.number < 1)
            fail("expected a positive integer dimension after 'dim'");
        n_ = static_cast<std::size_t>(cur_.number);
        if (n_ > 16) fail("dimension " + cur_.text + " is too large");
        take();
        expect_punct(";");

        std::vector<std::optional<Expr>> given(n_ * n_);
        if (cur_.kind == Tok::End) fail("expected at least one entry 'h[a,b] = ...;'");
        while (cur_.kind != Tok::End) {
            const Token at = cur_;
            expect_ident("h");
            expect_punct("[");
            const std::size_t a = entry_index();
            expect_punct(",");
            const std::size_t b = entry_index();
            expect_punct("]");
            expect_punct("=");
            Expr e = expr();
            expect_punct(";");
            auto& slot = given[(a - 1) * n_ + (b - 1)];
            if (slot) throw ParseError(at.line, at.column, "duplicate entry h[" + std::to_string(a) + "," +
                                                               std::to_string(b) + "]");
            slot = std::move(e);
        }

        std::vector<Expr> entries(n_ * n_);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) {
                const auto& mine = given[a * n_ + b];
                const auto& mirror = given[b * n_ + a];
                if (mine) entries[a * n_ + b] = *mine;
                else if (mirror) entries[a * n_ + b] = conjugate_form(*mirror);
                else entries[a * n_ + b] = constant(a == b ? 1.0 : 0.0);
            }
        }
        return MetricDefinition(n_, std::move(entries));
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(cur_.line, cur_.column, msg); }

    void take() { cur_ = lex_.next(); }

    bool at_punct(const char* p) const { return cur_.kind == Tok::Punct && cur_.text == p; }

    void expect_punct(const char* p) {
        if (!at_punct(p)) fail(std::string("expected '") + p + "'" + found());
        take();
    }

    void expect_ident(const char* id) {
        if (cur_.kind != Tok::Ident || cur_.text != id) fail(std::string("expected '") + id + "'" + found());
        take();
    }

    std::string found() const {
        if (cur_.kind == Tok::End) return " but reached end of input";
        return " but found '" + cur_.text + "'";
    }

    std::size_t entry_index() {
        if (cur_.kind != Tok::Number || !cur_.integral) fail("expected an integer entry index");
        const auto k = static_cast<std::size_t>(cur_.number);
        if (k < 1 || k > n_) fail("index " + cur_.text + " out of range 1.." + std::to_string(n_));
        take();
        return k;
    }

    Expr expr() {
        Expr lhs = term();
        while (at_punct("+") || at_punct("-")) {
            const bool plus = cur_.text == "+";
            take();
            Expr rhs = term();
            lhs = node(plus ? NodeKind::Add : NodeKind::Sub, {lhs, rhs});
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (at_punct("*") || at_punct("/")) {
            const bool times = cur_.text == "*";
            take();
            Expr rhs = factor();
            lhs = node(times ? NodeKind::Mul : NodeKind::Div, {lhs, rhs});
        }
        return lhs;
    }

    Expr factor() {
        if (at_punct("-")) {
            take();
            return node(NodeKind::Neg, {factor()});
        }
        Expr b = base();
        if (at_punct("^")) {
            take();
            bool negative = false;
            if (at_punct("-") || at_punct("+")) {
                negative = cur_.text == "-";
                take();
            }
            if (cur_.kind != Tok::Number) fail("exponent must be an integer literal" + found());
            if (!cur_.integral) fail("non-integer exponent '" + cur_.text + "'");
            if (cur_.number == 0) fail("exponent must be nonzero");
            if (cur_.number > 1e6) fail("exponent '" + cur_.text + "' is too large");
            const int k = static_cast<int>(cur_.number);
            take();
            b = power(b, negative ? -k : k);
        }
        return b;
    }

    int variable_index(const std::string& digits, const Token& at) const {
        if (digits.empty()) throw ParseError(at.line, at.column, "unknown symbol '" + at.text + "'");
        for (char ch : digits)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError(at.line, at.column, "unknown symbol '" + at.text + "'");
        if (digits.size() > 6) throw ParseError(at.line, at.column, "index out of range in '" + at.text + "'");
        const int k = std::stoi(digits);
        if (k < 1 || (n_ != 0 && static_cast<std::size_t>(k) > n_))
            throw ParseError(at.line, at.column,
                             "index " + std::to_string(k) + " out of range 1.." + std::to_string(n_));
        return k;
    }

    Expr base() {
        const Token t = cur_;
        if (t.kind == Tok::Number) {
            take();
            return constant(t.number);
        }
        if (at_punct("(")) {
            take();
            Expr e = expr();
            expect_punct(")");
            return e;
        }
        if (t.kind != Tok::Ident) fail("expected a number, variable, function or '('" + found());
        const std::string& s = t.text;
        if (s == "i") {
            take();
            return constant(kI);
        }
        if (s == "exp" || s == "log" || s == "sqrt") {
            take();
            expect_punct("(");
            Expr arg = expr();
            expect_punct(")");
            const NodeKind k = s == "exp" ? NodeKind::Exp : s == "log" ? NodeKind::Log : NodeKind::Sqrt;
            return node(k, {arg});
        }
        if (s.rfind("zb", 0) == 0 && s.size() > 2) {
            const int k = variable_index(s.substr(2), t);
            take();
            return zbar(k);
        }
        if (s[0] == 'z' && s.size() > 1) {
            const int k = variable_index(s.substr(1), t);
            take();
            return z(k);
        }
        if (at_punct_next_is_paren()) throw ParseError(t.line, t.column, "unknown function '" + s + "'");
        throw ParseError(t.line, t.column, "unknown symbol '" + s + "'");
    }

    // Distinguishes "foo(" (unknown function) from a bare unknown symbol.
    bool at_punct_next_is_paren() {
        Lexer peek = lex_;
        try {
            const Token t = peek.next();
            return t.kind == Tok::Punct && t.text == "(";
        } catch (const ParseError&) {
            return false;
        }
    }

    Lexer lex_;
    std::size_t n_;
    Token cur_;
};

}  // namespace

Expr parse_expression(std::string_view source, std::size_t n) { return Parser(source, n).parse_single(); }

MetricDefinition parse_metric(std::string_view source) { return Parser(source, 0).parse_metric(); }

// ---------------------------------------------------------------------------
// MetricDefinition

struct MetricDefinition::Table {
    std::size_t n = 0;
    std::vector<Expr> h;        // [a][b]
    std::vector<Expr> dh;       // [a][b][g]
    std::vector<Expr> dhb;      // [a][b][d]
    std::vector<Expr> d2mixed;  // [a][b][g][d]
    std::vector<Expr> d2holo;   // [a][b][g][m]
    std::vector<Expr> d2anti;   // [a][b][d][m]

    std::size_t i2(std::size_t a, std::size_t b) const { return a * n + b; }
    std::size_t i3(std::size_t a, std::size_t b, std::size_t c) const { return i2(a, b) * n + c; }
    std::size_t i4(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return i3(a, b, c) * n + d;
    }
};

MetricDefinition::MetricDefinition(std::size_t n, std::vector<Expr> entries) {
    if (n < 1) throw DimensionError("metric dimension must be at least 1");
    if (entries.size() != n * n) throw DimensionError("metric needs n*n entries");
    auto t = std::make_shared<Table>();
    t->n = n;
    for (const auto& e : entries) {
        if (!e) throw InvalidArgument("metric entry is null");
        if (static_cast<std::size_t>(max_variable_index(e)) > n)
            throw InvalidArgument("metric entry references a coordinate beyond dimension " + std::to_string(n));
    }
    t->h = std::move(entries);
    const int ni = static_cast<int>(n);
    t->dh.resize(n * n * n);
    t->dhb.resize(n * n * n);
    t->d2mixed.resize(n * n * n * n);
    t->d2holo.resize(n * n * n * n);
    t->d2anti.resize(n * n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (int g = 0; g < ni; ++g) {
                t->dh[t->i3(a, b, g)] = derivative(t->h[t->i2(a, b)], {Wirtinger::Holo, g + 1});
                t->dhb[t->i3(a, b, g)] = derivative(t->h[t->i2(a, b)], {Wirtinger::Anti, g + 1});
            }
            for (int g = 0; g < ni; ++g) {
                const Expr& first_holo = t->dh[t->i3(a, b, g)];
                const Expr& first_anti = t->dhb[t->i3(a, b, g)];
                for (int m = 0; m < ni; ++m) {
                    t->d2mixed[t->i4(a, b, g, m)] = derivative(first_holo, {Wirtinger::Anti, m + 1});
                    t->d2holo[t->i4(a, b, g, m)] = derivative(first_holo, {Wirtinger::Holo, m + 1});
                    t->d2anti[t->i4(a, b, g, m)] = derivative(first_anti, {Wirtinger::Anti, m + 1});
                }
            }
        }
    }
    table_ = std::move(t);
}

std::size_t MetricDefinition::dim() const { return table_->n; }

const Expr& MetricDefinition::entry(std::size_t a, std::size_t b) const { return table_->h.at(table_->i2(a, b)); }

const Expr& MetricDefinition::d_holo(std::size_t a, std::size_t b, std::size_t g) const {
    return table_->dh.at(table_->i3(a, b, g));
}

const Expr& MetricDefinition::d_anti(std::size_t a, std::size_t b, std::size_t d) const {
    return table_->dhb.at(table_->i3(a, b, d));
}

const Expr& MetricDefinition::d2_mixed(std::size_t a, std::size_t b, std::size_t g, std::size_t d) const {
    return table_->d2mixed.at(table_->i4(a, b, g, d));
}

const Expr& MetricDefinition::d2_holo(std::size_t a, std::size_t b, std::size_t g, std::size_t m) const {
    return table_->d2holo.at(table_->i4(a, b, g, m));
}

const Expr& MetricDefinition::d2_anti(std::size_t a, std::size_t b, std::size_t d, std::size_t m) const {
    return table_->d2anti.at(table_->i4(a, b, d, m));
}

CMatrix MetricDefinition::evaluate(const ChartPoint& p) const {
    const auto n = table_->n;
    if (p.dim() != n) throw DimensionError("point dimension does not match metric dimension");
    CMatrix h(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) h(a, b) = dsl::evaluate(entry(a, b), p);
    return h;
}

std::string MetricDefinition::to_source() const {
    const auto n = table_->n;
    std::string s = "dim " + std::to_string(n) + ";\n";
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            s += "h[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "] = " + unparse(entry(a, b)) + ";\n";
    return s;
}

}  // namespace hermicurv::dsl
