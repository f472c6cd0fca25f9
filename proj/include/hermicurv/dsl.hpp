#pragma once

// Metric expression language.
//
//   metric   := "dim" INT ";" entry+
//   entry    := "h[" INT "," INT "]" "=" expr ";"
//   expr     := term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := "-" factor | base ("^" SIGNED_INT)?
//   base     := NUMBER | "i" | "z" INT | "zb" INT | FUNC "(" expr ")" | "(" expr ")"
//   FUNC     := "exp" | "log" | "sqrt"
//
// `#` starts a comment that runs to the end of the line. zb<k> is the
// conjugate coordinate; z and zb are independent symbols, which is what makes
// Wirtinger differentiation a plain structural recursion.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hermicurv/core.hpp"

namespace hermicurv::dsl {

enum class NodeKind { Constant, Z, Zbar, Neg, Add, Sub, Mul, Div, Pow, Exp, Log, Sqrt };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::Constant;
    Complex value{};        // Constant
    int index = 0;          // variable index (1-based) for Z/Zbar, exponent for Pow
    std::vector<Expr> children;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    // Message without the position prefix.
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

// Raw constructors, no simplification.
Expr constant(Complex c);
Expr z(int index);
Expr zbar(int index);
Expr node(NodeKind kind, std::vector<Expr> children);
Expr power(Expr base, int exponent);

// Folding constructors: constant folding plus 0/1 identities. Used by the
// differentiator so derivative trees stay small.
Expr add(const Expr& a, const Expr& b);
Expr sub(const Expr& a, const Expr& b);
Expr mul(const Expr& a, const Expr& b);
Expr div(const Expr& a, const Expr& b);
Expr neg(const Expr& a);
Expr pow(const Expr& a, int exponent);
Expr call(NodeKind fn, const Expr& a);

[[nodiscard]] bool is_zero(const Expr& e);
[[nodiscard]] bool is_one(const Expr& e);

enum class Wirtinger { Holo, Anti };

struct Direction {
    Wirtinger kind;
    int index;  // 1-based
};

// Exact Wirtinger derivative d/dz^k or d/dzbar^k.
Expr derivative(const Expr& e, Direction d);

// Evaluates at p with zb_k = conj(z_k). Principal branches for log and sqrt.
// Throws EvaluationError on division by zero, log/sqrt of zero, non-finite
// results or a variable index beyond p's dimension.
Complex evaluate(const Expr& e, const ChartPoint& p);

// Fully parenthesised text that parses back to the same tree.
std::string unparse(const Expr& e);

// Swap z <-> zb and conjugate constants. Evaluates to conj(e) wherever the
// principal branches involved are continuous.
Expr conjugate_form(const Expr& e);

// Largest variable index referenced; 0 for a constant tree.
int max_variable_index(const Expr& e);

std::size_t node_count(const Expr& e);

// Parses a single expression. Variable indices must lie in 1..n (n == 0
// disables the range check).
Expr parse_expression(std::string_view source, std::size_t n = 0);

// A Hermitian metric h_{a bbar}(z) given entrywise by expressions, together
// with the table of its first and second Wirtinger derivatives. The table is
// built once on construction and is immutable afterwards.
class MetricDefinition {
public:
    // entries is row-major n x n; entry (a, b) defines h_{a bbar}.
    MetricDefinition(std::size_t n, std::vector<Expr> entries);

    [[nodiscard]] std::size_t dim() const;
    // All indices 0-based.
    [[nodiscard]] const Expr& entry(std::size_t a, std::size_t b) const;
    [[nodiscard]] const Expr& d_holo(std::size_t a, std::size_t b, std::size_t g) const;
    [[nodiscard]] const Expr& d_anti(std::size_t a, std::size_t b, std::size_t d) const;
    // d^2 h_{a bbar} / dz^g dzbar^d
    [[nodiscard]] const Expr& d2_mixed(std::size_t a, std::size_t b, std::size_t g, std::size_t d) const;
    [[nodiscard]] const Expr& d2_holo(std::size_t a, std::size_t b, std::size_t g, std::size_t m) const;
    [[nodiscard]] const Expr& d2_anti(std::size_t a, std::size_t b, std::size_t d, std::size_t m) const;

    [[nodiscard]] CMatrix evaluate(const ChartPoint& p) const;

    // DSL source that parses back to an equivalent definition.
    [[nodiscard]] std::string to_source() const;

private:
    struct Table;
    std::shared_ptr<const Table> table_;
};

// Parses a metric file. Omitted entries default to the Kronecker delta; an
// omitted entry whose transpose is present is the transpose's conjugate form.
MetricDefinition parse_metric(std::string_view source);

}  // namespace hermicurv::dsl
