#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace hermicurv;
using namespace hermicurv::dsl;
using hc_test::Rng;

namespace {

Complex eval1(const std::string& src, Complex z1) { return evaluate(parse_expression(src), ChartPoint{z1}); }

// Central-difference Wirtinger derivative of an evaluated expression:
// d/dz = (d/dx - i d/dy)/2, d/dzbar = (d/dx + i d/dy)/2.
Complex fd_wirtinger(const Expr& e, const ChartPoint& p, Direction d, double h = 1e-5) {
    const auto k = static_cast<Eigen::Index>(d.index - 1);
    auto at = [&](Complex dz) {
        CVector z = p.coords;
        z[k] += dz;
        return evaluate(e, ChartPoint(z));
    };
    const Complex dx = (at(h) - at(-h)) / (2 * h);
    const Complex dy = (at(Complex(0, h)) - at(Complex(0, -h))) / (2 * h);
    const Complex i(0, 1);
    return d.kind == Wirtinger::Holo ? 0.5 * (dx - i * dy) : 0.5 * (dx + i * dy);
}

ChartPoint small_point(Rng& rng, std::size_t n) {
    CVector z(static_cast<Eigen::Index>(n));
    for (auto& c : z) c = Complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
    return ChartPoint(z);
}

}  // namespace

TEST_CASE("parse examples") {
    const Expr fs = parse_expression("1/(1+z1*zb1)^2");
    CHECK(fs->kind == NodeKind::Div);
    CHECK(fs->children[1]->kind == NodeKind::Pow);
    CHECK(fs->children[1]->index == 2);

    const Expr e = parse_expression("exp(z1*zb1)");
    REQUIRE(e->kind == NodeKind::Exp);
    const Expr& arg = e->children[0];
    REQUIRE(arg->kind == NodeKind::Mul);
    CHECK(arg->children[0]->kind == NodeKind::Z);
    CHECK(arg->children[0]->index == 1);
    CHECK(arg->children[1]->kind == NodeKind::Zbar);
}

TEST_CASE("parse errors carry position and reason") {
    try {
        parse_expression("1/(1+w)");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(std::string(err.detail()) == "unknown symbol 'w'");
        CHECK(err.line() == 1);
        CHECK(err.column() == 6);
    }
    CHECK_THROWS_AS(parse_expression("foo(z1)"), ParseError);
    try {
        parse_expression("foo(z1)");
    } catch (const ParseError& err) {
        CHECK(err.detail() == "unknown function 'foo'");
    }
    CHECK_THROWS_AS(parse_expression("z3", 2), ParseError);
    CHECK_THROWS_AS(parse_expression("z0"), ParseError);
    CHECK_THROWS_AS(parse_expression("z1^1.5"), ParseError);
    CHECK_THROWS_AS(parse_expression("z1^0"), ParseError);
    CHECK_THROWS_AS(parse_expression("(z1"), ParseError);
    CHECK_THROWS_AS(parse_expression("z1 +"), ParseError);

    try {
        parse_metric("dim 2;\nh[1,1] = 1;\nh[1,2] = z1 $ 2;\n");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.line() == 3);
        CHECK(err.column() == 13);
        CHECK(std::string(err.what()).find("line 3, column 13") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_metric("h[1,1] = 1;"), ParseError);
    CHECK_THROWS_AS(parse_metric("dim 1; h[1,1] = 1; h[1,1] = 2;"), ParseError);
    CHECK_THROWS_AS(parse_metric("dim 1; h[1,2] = 1;"), ParseError);
}

TEST_CASE("evaluate examples") {
    CHECK(std::abs(eval1("z1*zb1", Complex(3, 4)) - Complex(25, 0)) < 1e-12);
    CHECK(std::abs(eval1("exp(z1*zb1)", 0.0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(eval1("1/(1+z1*zb1)^2", 1.0) - Complex(0.25, 0)) < 1e-15);
    CHECK(std::abs(eval1("2*i - 3", 0.0) - Complex(-3, 2)) < 1e-15);
    CHECK(std::abs(eval1("-z1^-2", Complex(0, 1)) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("evaluate errors") {
    CHECK_THROWS_AS(eval1("1/z1", 0.0), EvaluationError);
    CHECK_THROWS_AS(eval1("z1^-1", 0.0), EvaluationError);
    CHECK_THROWS_AS(eval1("log(z1)", 0.0), EvaluationError);
    CHECK_THROWS_AS(eval1("sqrt(z1*zb1)", 0.0), EvaluationError);
    CHECK_THROWS_AS(eval1("exp(exp(exp(z1)))", 10.0), EvaluationError);
    CHECK_THROWS_AS(evaluate(parse_expression("z2"), ChartPoint{Complex(1, 0)}), EvaluationError);
}

TEST_CASE("derivative examples") {
    const Expr d1 = derivative(parse_expression("z1*zb1"), {Wirtinger::Holo, 1});
    CHECK(unparse(d1) == "zb1");
    const Expr d2 = derivative(parse_expression("z1"), {Wirtinger::Anti, 1});
    CHECK(is_zero(d2));
    CHECK(unparse(d2) == "0");
    const Expr d3 = derivative(parse_expression("1/(1+z1*zb1)^2"), {Wirtinger::Holo, 1});
    CHECK(std::abs(evaluate(d3, ChartPoint{Complex(0, 0)})) < 1e-15);
    // The finite-difference value at 0 is zero as well.
    CHECK(std::abs(fd_wirtinger(parse_expression("1/(1+z1*zb1)^2"), ChartPoint{Complex(0, 0)},
                                {Wirtinger::Holo, 1})) < 1e-10);
}

TEST_CASE("property: symbolic Wirtinger derivative matches finite differences on random expressions") {
    Rng rng(21);
    int checked = 0;
    for (int s = 0; s < 60; ++s) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
        const std::string src = hc_test::random_expression(rng, n, rng.integer(1, 3));
        const Expr e = parse_expression(src, n);
        for (int t = 0; t < 3; ++t) {
            const ChartPoint p = small_point(rng, n);
            for (int k = 1; k <= static_cast<int>(n); ++k)
                for (auto kind : {Wirtinger::Holo, Wirtinger::Anti}) {
                    const Direction d{kind, k};
                    const Complex sym = evaluate(derivative(e, d), p);
                    const Complex fd = fd_wirtinger(e, p, d);
                    INFO(src);
                    CHECK(std::abs(sym - fd) <= 1e-6 * std::max(1.0, std::abs(sym)));
                    ++checked;
                }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("property: mixed partials commute and conjugation duality holds") {
    Rng rng(22);
    for (int s = 0; s < 40; ++s) {
        const std::size_t n = 2;
        const Expr e = parse_expression(hc_test::random_expression(rng, n, 3), n);
        const ChartPoint p = small_point(rng, n);
        for (int g = 1; g <= 2; ++g)
            for (int d = 1; d <= 2; ++d) {
                const Complex a = evaluate(derivative(derivative(e, {Wirtinger::Holo, g}), {Wirtinger::Anti, d}), p);
                const Complex b = evaluate(derivative(derivative(e, {Wirtinger::Anti, d}), {Wirtinger::Holo, g}), p);
                CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
            }
        const Expr c = conjugate_form(e);
        CHECK(std::abs(evaluate(c, p) - std::conj(evaluate(e, p))) <= 1e-12 * std::max(1.0, std::abs(evaluate(e, p))));
        for (int g = 1; g <= 2; ++g) {
            const Complex lhs = evaluate(derivative(e, {Wirtinger::Holo, g}), p);
            const Complex rhs = std::conj(evaluate(derivative(c, {Wirtinger::Anti, g}), p));
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("property: parse -> unparse -> parse is a fixpoint") {
    Rng rng(23);
    for (int s = 0; s < 100; ++s) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
        const Expr e1 = parse_expression(hc_test::random_expression(rng, n, rng.integer(0, 4)), n);
        const std::string t1 = unparse(e1);
        const Expr e2 = parse_expression(t1, n);
        CHECK(unparse(e2) == t1);
        CHECK(node_count(e2) == node_count(e1));
        for (int k = 0; k < 10; ++k) {
            const ChartPoint p = small_point(rng, n);
            const Complex a = evaluate(e1, p), b = evaluate(e2, p);
            CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("unparse of negative and complex constants reparses") {
    for (const char* src : {"-3", "z1 - (-2)", "(1 + 2*i)*z1", "-(z1^-3)", "1e-3*zb2"}) {
        const Expr e = parse_expression(src);
        const Expr r = parse_expression(unparse(e));
        const ChartPoint p{Complex(0.3, 0.2), Complex(-0.1, 0.4)};
        CHECK(std::abs(evaluate(e, p) - evaluate(r, p)) < 1e-14);
    }
}

TEST_CASE("folding keeps trees small") {
    CHECK(is_zero(mul(constant(0.0), z(1))));
    CHECK(is_one(sub(constant(3.0), constant(2.0))));
    CHECK(unparse(add(constant(0.0), z(1))) == "z1");
    CHECK(unparse(mul(constant(1.0), zbar(2))) == "zb2");
    CHECK(max_variable_index(parse_expression("z1*zb3")) == 3);
    CHECK(max_variable_index(parse_expression("2")) == 0);
}

TEST_CASE("metric definitions: omitted entries and Hermitian synthesis") {
    const auto m = parse_metric(
        "# a two-dimensional example\n"
        "dim 3;\n"
        "h[1,1] = 2 + z1*zb1;\n"
        "h[1,2] = z2 + i*zb1;\n");
    CHECK(m.dim() == 3);
    const ChartPoint p{Complex(0.2, -0.1), Complex(0.3, 0.4), Complex(0.5, 0.5)};
    const CMatrix h = m.evaluate(p);
    CHECK(std::abs(h(1, 0) - std::conj(h(0, 1))) < 1e-15);
    CHECK(h(1, 1) == Complex(1, 0));
    CHECK(h(2, 2) == Complex(1, 0));
    CHECK(h(0, 2) == Complex(0, 0));

    // The derivative table satisfies dh_{a bbar}/dz^g = conj(dh_{b abar}/dzbar^g).
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t g = 0; g < 3; ++g) {
                const Complex x = evaluate(m.d_holo(a, b, g), p);
                const Complex y = evaluate(m.d_anti(b, a, g), p);
                CHECK(std::abs(x - std::conj(y)) < 1e-14);
            }
}

TEST_CASE("metric to_source round trip") {
    const auto m = catalog_metric("fubini_study", 2);
    const auto r = parse_metric(m.to_source());
    Rng rng(24);
    for (int k = 0; k < 10; ++k) {
        const ChartPoint p = small_point(rng, 2);
        CHECK((m.evaluate(p) - r.evaluate(p)).norm() < 1e-14);
    }
}

TEST_CASE("metric entries beyond the declared dimension are rejected") {
    CHECK_THROWS_AS(parse_metric("dim 1; h[1,1] = 1 + z2*zb2;"), ParseError);
    CHECK_THROWS_AS(parse_metric("dim 0;"), ParseError);
}
