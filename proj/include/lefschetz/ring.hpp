#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lefschetz/coeff.hpp"

namespace lefschetz {

// Multi-index in N^n.
struct Exponent {
    std::vector<uint32_t> e;

    Exponent() = default;
    explicit Exponent(size_t n) : e(n, 0) {}
    Exponent(std::initializer_list<uint32_t> init) : e(init) {}

    size_t size() const { return e.size(); }
    uint32_t operator[](size_t i) const { return e[i]; }
    uint32_t& operator[](size_t i) { return e[i]; }
    uint32_t degree() const;
    bool is_zero() const;

    // componentwise <=
    bool divides(const Exponent& o) const;
    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;  // requires o.divides(*this)
    Exponent lcm(const Exponent& o) const;
    Exponent scaled(uint64_t k) const;

    bool operator==(const Exponent& o) const { return e == o.e; }
    bool operator!=(const Exponent& o) const { return e != o.e; }
};

// The order used throughout: nu preceq mu iff |nu| < |mu|, or degrees are
// equal and nu beats mu on the first variable where they differ (declared
// variable order, earlier variable with higher exponent leads).  Total,
// compatible with addition, a well-order on N^n.
bool exp_before(const Exponent& a, const Exponent& b);  // strict a < b in preceq

struct ExpLess {
    bool operator()(const Exponent& a, const Exponent& b) const { return exp_before(a, b); }
};

struct RingContext {
    uint64_t characteristic = 0;  // 0 or a prime
    std::vector<std::string> vars;
    std::optional<uint32_t> dmax;  // truncation degree; unset = exact arithmetic

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
    bool operator==(const RingContext& o) const = default;
};

using RingCtxPtr = std::shared_ptr<const RingContext>;

RingCtxPtr make_context(uint64_t characteristic, std::vector<std::string> vars,
                        std::optional<uint32_t> dmax = std::nullopt);
// Same ring, different truncation degree.
RingCtxPtr with_dmax(const RingCtxPtr& ctx, std::optional<uint32_t> dmax);

// Sparse polynomial over an exact coefficient field.  Terms are kept in
// preceq order, so begin() is the valuation term.  No zero coefficients are
// stored; if the context carries dmax, terms of higher total degree are
// dropped by every operation.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Coeff, ExpLess>;

    Polynomial() = default;
    explicit Polynomial(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Polynomial(RingCtxPtr ctx, const Coeff& c, const Exponent& ex);

    const RingCtxPtr& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    uint32_t degree() const;  // max total degree; 0 for the zero polynomial

    // preceq-least exponent with nonzero coefficient; nullopt for 0 (v(0) = infinity)
    std::optional<Exponent> valuation() const;
    Coeff lead_coeff() const;  // c(0) = 0
    Coeff coeff_at(const Exponent& ex) const;
    Coeff constant_term() const;

    void add_term(const Exponent& ex, const Coeff& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scale(const Coeff& c) const;
    Polynomial mul_term(const Coeff& c, const Exponent& ex) const;
    Polynomial monic() const;
    Polynomial pow(uint32_t k) const;
    Polynomial derivative(size_t var) const;

    // substitute each variable by the given polynomial (shared target context)
    Polynomial substitute(std::span<const Polynomial> images) const;
    // reinterpret in an equal ring with different truncation
    Polynomial in_context(const RingCtxPtr& ctx) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // canonical form: terms in preceq order, e.g. "x^2 - y^3", "1/2*x*y"
    std::string str() const;

private:
    void check_ctx(const Polynomial& o) const;
    RingCtxPtr ctx_;
    TermMap terms_;
};

std::string exponent_str(const Exponent& ex);  // "(2,0)"

// Generators of an ideal, read in the local ring at the origin.
struct LocalIdeal {
    RingCtxPtr ctx;
    std::vector<Polynomial> gens;  // zero generators are dropped on construction

    LocalIdeal() = default;
    explicit LocalIdeal(RingCtxPtr c) : ctx(std::move(c)) {}
    LocalIdeal(RingCtxPtr c, std::vector<Polynomial> g);
};

LocalIdeal ideal_sum(const LocalIdeal& a, const LocalIdeal& b);
LocalIdeal ideal_sum(const LocalIdeal& a, std::span<const Polynomial> more);
// generators of the maximal ideal (x_1, ..., x_n)
LocalIdeal maximal_ideal(const RingCtxPtr& ctx);
Polynomial var_poly(const RingCtxPtr& ctx, size_t i);
Polynomial const_poly(const RingCtxPtr& ctx, const Coeff& c);
Polynomial int_poly(const RingCtxPtr& ctx, long v);

struct parse_error : error {
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line, col;
};

Polynomial parse_polynomial(const std::string& text, const RingCtxPtr& ctx, int line_no = 1);
std::pair<RingCtxPtr, LocalIdeal> parse_ring_file(const std::string& text);
std::string serialize_ring_file(const RingCtxPtr& ctx, const LocalIdeal& ideal);

}  // namespace lefschetz
