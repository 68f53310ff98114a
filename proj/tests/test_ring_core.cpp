#include "doctest.h"

#include "lefschetz/ring.hpp"

using namespace lefschetz;

namespace {
RingCtxPtr qxy() { return make_context(0, {"x", "y"}); }
}

TEST_CASE("order: degree first, declared variable order breaks ties") {
    // |(2,0)| < |(0,3)|
    CHECK(exp_before({2, 0}, {0, 3}));
    // equal degree: x before y, so (1,1) leads (0,2)
    CHECK(exp_before({1, 1}, {0, 2}));
    CHECK(exp_before({2, 0}, {1, 1}));
    CHECK_FALSE(exp_before({0, 2}, {1, 1}));
    CHECK_FALSE(exp_before({1, 1}, {1, 1}));
}

TEST_CASE("order is compatible with addition") {
    Exponent a{1, 2}, b{2, 0}, s{3, 1};
    bool ab = exp_before(a, b);
    CHECK(exp_before(a + s, b + s) == ab);
}

TEST_CASE("valuation and lead coefficient") {
    auto ctx = qxy();
    CHECK_FALSE(Polynomial(ctx).valuation().has_value());  // v(0) = infinity
    CHECK(Polynomial(ctx).lead_coeff().is_zero());         // c(0) = 0

    Polynomial f = parse_polynomial("x^2 - y^3", ctx);
    CHECK(*f.valuation() == Exponent{2, 0});

    Polynomial g = parse_polynomial("x*y + y^2", ctx);
    CHECK(*g.valuation() == Exponent{1, 1});

    Polynomial h = parse_polynomial("3*x^2 - y^3", ctx);
    CHECK(h.lead_coeff() == Coeff::integer(3));

    auto f5 = make_context(5, {"x", "y"});
    Polynomial h5 = parse_polynomial("x^2 - y^3", f5);
    CHECK(h5.lead_coeff() == Coeff::one(5));
}

TEST_CASE("arithmetic") {
    auto ctx = qxy();
    Polynomial x = var_poly(ctx, 0), y = var_poly(ctx, 1);
    CHECK((x + y) * (x - y) == parse_polynomial("x^2 - y^2", ctx));

    auto f2 = make_context(2, {"x", "y"});
    Polynomial s = parse_polynomial("x + y", f2);
    CHECK(s * s == parse_polynomial("x^2 + y^2", f2));  // Frobenius in char 2

    auto t2 = make_context(0, {"x"}, 2);
    Polynomial u = parse_polynomial("1 + x", t2);
    CHECK(u * u == parse_polynomial("1 + 2*x + x^2", t2));
    auto t1 = make_context(0, {"x"}, 1);
    Polynomial v = parse_polynomial("1 + x", t1);
    CHECK(v * v == parse_polynomial("1 + 2*x", t1));
}

TEST_CASE("context mismatch raises") {
    auto a = make_context(0, {"x", "y"});
    auto b = make_context(7, {"x", "y"});
    CHECK_THROWS_AS(var_poly(a, 0) + var_poly(b, 0), error);
}

TEST_CASE("ring file parsing") {
    auto [ctx, ideal] = parse_ring_file("char 0\nvars x y\nideal\nx^2 - y^3\n");
    CHECK(ctx->characteristic == 0);
    CHECK(ctx->vars == std::vector<std::string>{"x", "y"});
    REQUIRE(ideal.gens.size() == 1);
    CHECK(ideal.gens[0] == parse_polynomial("x^2 - y^3", ctx));

    auto [c7, i7] = parse_ring_file("char 7\nvars x\nideal\n8*x\n");
    CHECK(i7.gens[0] == var_poly(c7, 0));  // 8 = 1 in F_7

    CHECK_THROWS_AS(parse_ring_file("char 4\nvars x\nideal\nx\n"), parse_error);
    CHECK_THROWS_AS(parse_ring_file("char 0\nvars x\nideal\nz^2\n"), parse_error);
    CHECK_THROWS_AS(parse_ring_file("char 0\nvars x\n"), parse_error);
}

TEST_CASE("comments, blank lines, empty generator list") {
    auto [ctx, ideal] = parse_ring_file("# cusp\nchar 0\n\nvars x y  # two vars\nideal\n");
    CHECK(ideal.gens.empty());
    CHECK(ctx->nvars() == 2);
}

TEST_CASE("ring file round trip") {
    const char* files[] = {
        "char 0\nvars x y\nideal\nx^2 - y^3\nx*y\n",
        "char 7\nvars x y z\nideal\nx^3 + y^3 + z^3\n",
        "char 0\nvars x y\nideal\n1/2*x^2 - 3*y\n",
        "char 0\nvars x y z w\nideal\nx*z\nx*w\ny*z\ny*w\n",
    };
    for (const char* f : files) {
        auto [ctx, ideal] = parse_ring_file(f);
        auto text = serialize_ring_file(ctx, ideal);
        auto [ctx2, ideal2] = parse_ring_file(text);
        CHECK(*ctx == *ctx2);
        CHECK(ideal.gens == ideal2.gens);
        CHECK(serialize_ring_file(ctx2, ideal2) == text);
    }
}

TEST_CASE("canonical strings sort terms by the order") {
    auto ctx = qxy();
    CHECK(parse_polynomial("- y^3 + x^2", ctx).str() == "x^2 - y^3");
    CHECK(parse_polynomial("1/2*x*y", ctx).str() == "1/2*x*y");
    CHECK(Polynomial(ctx).str() == "0");
}

TEST_CASE("derivative") {
    auto ctx = qxy();
    Polynomial f = parse_polynomial("x^2 - y^3", ctx);
    CHECK(f.derivative(0) == parse_polynomial("2*x", ctx));
    CHECK(f.derivative(1) == parse_polynomial("-3*y^2", ctx));

    auto f3 = make_context(3, {"x", "y", "z"});
    Polynomial g = parse_polynomial("x^3 + y^3 + z^3", f3);
    CHECK(g.derivative(0).is_zero());
}
