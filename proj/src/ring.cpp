#include "lefschetz/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lefschetz {

uint32_t Exponent::degree() const {
    uint32_t d = 0;
    for (uint32_t v : e) d += v;
    return d;
}

bool Exponent::is_zero() const {
    return std::all_of(e.begin(), e.end(), [](uint32_t v) { return v == 0; });
}

bool Exponent::divides(const Exponent& o) const {
    if (e.size() != o.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Exponent Exponent::operator+(const Exponent& o) const {
    Exponent r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
    Exponent r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

Exponent Exponent::lcm(const Exponent& o) const {
    Exponent r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], o.e[i]);
    return r;
}

Exponent Exponent::scaled(uint64_t k) const {
    Exponent r(*this);
    for (auto& v : r.e) v = static_cast<uint32_t>(v * k);
    return r;
}

bool exp_before(const Exponent& a, const Exponent& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

int RingContext::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingCtxPtr make_context(uint64_t characteristic, std::vector<std::string> vars,
                        std::optional<uint32_t> dmax) {
    if (characteristic != 0 && !is_prime_u64(characteristic))
        throw error("non-prime characteristic " + std::to_string(characteristic));
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw error("duplicate variable name '" + vars[i] + "'");
    RingContext c;
    c.characteristic = characteristic;
    c.vars = std::move(vars);
    c.dmax = dmax;
    return std::make_shared<const RingContext>(std::move(c));
}

RingCtxPtr with_dmax(const RingCtxPtr& ctx, std::optional<uint32_t> dmax) {
    return make_context(ctx->characteristic, ctx->vars, dmax);
}

Polynomial::Polynomial(RingCtxPtr ctx, const Coeff& c, const Exponent& ex) : ctx_(std::move(ctx)) {
    add_term(ex, c);
}

uint32_t Polynomial::degree() const {
    uint32_t d = 0;
    for (const auto& [ex, c] : terms_) d = std::max(d, ex.degree());
    return d;
}

std::optional<Exponent> Polynomial::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Coeff Polynomial::lead_coeff() const {
    if (terms_.empty()) return Coeff::zero(ctx_ ? ctx_->characteristic : 0);
    return terms_.begin()->second;
}

Coeff Polynomial::coeff_at(const Exponent& ex) const {
    auto it = terms_.find(ex);
    if (it == terms_.end()) return Coeff::zero(ctx_ ? ctx_->characteristic : 0);
    return it->second;
}

Coeff Polynomial::constant_term() const { return coeff_at(Exponent(ctx_->nvars())); }

void Polynomial::add_term(const Exponent& ex, const Coeff& c) {
    if (c.is_zero()) return;
    if (ex.size() != ctx_->nvars()) throw error("exponent length mismatch");
    if (ctx_->dmax && ex.degree() > *ctx_->dmax) return;
    auto [it, inserted] = terms_.emplace(ex, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_ctx(const Polynomial& o) const {
    if (ctx_ == o.ctx_) return;
    if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_)) throw error("ring context mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [ex, c] : terms_) r.terms_.emplace(ex, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r(*this);
    for (const auto& [ex, c] : o.terms_) r.add_term(ex, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r(ctx_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

Polynomial Polynomial::scale(const Coeff& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [ex, t] : terms_) r.add_term(ex, t * c);
    return r;
}

Polynomial Polynomial::mul_term(const Coeff& c, const Exponent& ex) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e0, t] : terms_) r.add_term(e0 + ex, t * c);
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scale(lead_coeff().inverse());
}

Polynomial Polynomial::pow(uint32_t k) const {
    Polynomial r = int_poly(ctx_, 1);
    Polynomial base(*this);
    while (k) {
        if (k & 1) r = r * base;
        base = (k >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::derivative(size_t var) const {
    Polynomial r(ctx_);
    for (const auto& [ex, c] : terms_) {
        if (ex[var] == 0) continue;
        Exponent e2(ex);
        e2[var] -= 1;
        r.add_term(e2, c * Coeff::integer(static_cast<long>(ex[var]), ctx_->characteristic));
    }
    return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    if (images.size() != ctx_->nvars()) throw error("substitute: wrong image count");
    RingCtxPtr target = images.empty() ? ctx_ : images[0].ctx();
    Polynomial r(target);
    for (const auto& [ex, c] : terms_) {
        Polynomial term = const_poly(target, c);
        for (size_t i = 0; i < ex.size(); ++i)
            if (ex[i]) term = term * images[i].pow(ex[i]);
        r = r + term;
    }
    return r;
}

Polynomial Polynomial::in_context(const RingCtxPtr& ctx) const {
    if (ctx->characteristic != ctx_->characteristic || ctx->vars != ctx_->vars)
        throw error("in_context: incompatible ring");
    Polynomial r(ctx);
    for (const auto& [ex, c] : terms_) r.add_term(ex, c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ctx_ != o.ctx_ && (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))) return false;
    return terms_ == o.terms_;
}

std::string exponent_str(const Exponent& ex) {
    std::string s = "(";
    for (size_t i = 0; i < ex.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ex[i]);
    }
    return s + ")";
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [ex, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (size_t i = 0; i < ex.size(); ++i) {
            if (ex[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->vars[i];
            if (ex[i] > 1) mono += "^" + std::to_string(ex[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

LocalIdeal::LocalIdeal(RingCtxPtr c, std::vector<Polynomial> g) : ctx(std::move(c)) {
    for (auto& p : g)
        if (!p.is_zero()) gens.push_back(std::move(p));
}

LocalIdeal ideal_sum(const LocalIdeal& a, const LocalIdeal& b) {
    LocalIdeal r(a.ctx, a.gens);
    for (const auto& g : b.gens)
        if (!g.is_zero()) r.gens.push_back(g);
    return r;
}

LocalIdeal ideal_sum(const LocalIdeal& a, std::span<const Polynomial> more) {
    LocalIdeal r(a.ctx, a.gens);
    for (const auto& g : more)
        if (!g.is_zero()) r.gens.push_back(g);
    return r;
}

LocalIdeal maximal_ideal(const RingCtxPtr& ctx) {
    LocalIdeal m(ctx);
    for (size_t i = 0; i < ctx->nvars(); ++i) m.gens.push_back(var_poly(ctx, i));
    return m;
}

Polynomial var_poly(const RingCtxPtr& ctx, size_t i) {
    Exponent ex(ctx->nvars());
    ex[i] = 1;
    return Polynomial(ctx, Coeff::one(ctx->characteristic), ex);
}

Polynomial const_poly(const RingCtxPtr& ctx, const Coeff& c) {
    return Polynomial(ctx, c, Exponent(ctx->nvars()));
}

Polynomial int_poly(const RingCtxPtr& ctx, long v) {
    return const_poly(ctx, Coeff::integer(v, ctx->characteristic));
}

namespace {

// recursive-descent polynomial parser
struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line;
    int col0 = 0;  // column offset of s within its line

    explicit Cursor(const std::string& str, int line_no) : s(str), line(line_no) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg, line, col0 + static_cast<int>(pos) + 1);
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected identifier");
        return s.substr(start, pos - start);
    }
    uint64_t natural() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected number");
        return std::stoull(s.substr(start, pos - start));
    }
};

// term := [coefficient ['*']] power ('*' power)*  |  coefficient
// power := var ['^' nat]
Polynomial parse_term(Cursor& cur, const RingCtxPtr& ctx) {
    Coeff coeff = Coeff::one(ctx->characteristic);
    Exponent ex(ctx->nvars());
    bool any = false;

    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        uint64_t num = cur.natural();
        mpq_class q(mpz_class(std::to_string(num)));
        if (cur.peek() == '/') {
            ++cur.pos;
            uint64_t den = cur.natural();
            if (den == 0) cur.fail("zero denominator");
            q /= mpz_class(std::to_string(den));
        }
        if (ctx->characteristic) {
            auto r = Coeff::rational(q).to_residue(ctx->characteristic);
            if (!r) cur.fail("denominator divisible by the characteristic");
            coeff = *r;
        } else {
            coeff = Coeff::rational(q);
        }
        any = true;
        if (!cur.eat('*')) {
            // bare constant unless a variable follows directly
            if (!std::isalpha(static_cast<unsigned char>(cur.peek())) && cur.peek() != '_')
                return Polynomial(ctx, coeff, ex);
        }
    }

    while (std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_') {
        std::string name = cur.ident();
        int vi = ctx->var_index(name);
        if (vi < 0) cur.fail("unknown variable '" + name + "'");
        uint64_t k = 1;
        if (cur.eat('^')) k = cur.natural();
        ex[static_cast<size_t>(vi)] += static_cast<uint32_t>(k);
        any = true;
        cur.eat('*');
    }
    if (!any) cur.fail("expected term");
    return Polynomial(ctx, coeff, ex);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingCtxPtr& ctx, int line_no) {
    Cursor cur(text, line_no);
    Polynomial result(ctx);
    bool neg = cur.eat('-');
    if (!neg) cur.eat('+');
    while (true) {
        Polynomial t = parse_term(cur, ctx);
        result = neg ? result - t : result + t;
        if (cur.done()) break;
        if (cur.eat('-')) {
            neg = true;
        } else if (cur.eat('+')) {
            neg = false;
        } else {
            cur.fail("expected '+' or '-'");
        }
    }
    return result;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

std::pair<RingCtxPtr, LocalIdeal> parse_ring_file(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0, stage = 0;
    uint64_t characteristic = 0;
    std::vector<std::string> vars;
    RingCtxPtr ctx;
    std::vector<Polynomial> gens;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        std::istringstream ls(line);
        if (stage == 0) {
            std::string kw;
            ls >> kw;
            if (kw != "char") throw parse_error("expected 'char <c>'", line_no, 1);
            long long c;
            if (!(ls >> c) || c < 0) throw parse_error("expected characteristic", line_no, 6);
            if (c != 0 && !is_prime_u64(static_cast<uint64_t>(c)))
                throw parse_error("non-prime characteristic " + std::to_string(c), line_no, 6);
            characteristic = static_cast<uint64_t>(c);
            stage = 1;
        } else if (stage == 1) {
            std::string kw;
            ls >> kw;
            if (kw != "vars") throw parse_error("expected 'vars <name>+'", line_no, 1);
            std::string v;
            while (ls >> v) vars.push_back(v);
            if (vars.empty()) throw parse_error("at least one variable required", line_no, 6);
            ctx = make_context(characteristic, vars);
            stage = 2;
        } else if (stage == 2) {
            std::string kw;
            ls >> kw;
            if (kw != "ideal") throw parse_error("expected 'ideal'", line_no, 1);
            stage = 3;
        } else {
            gens.push_back(parse_polynomial(line, ctx, line_no));
        }
    }
    if (stage < 3) throw parse_error("incomplete ring file", line_no + 1, 1);
    return {ctx, LocalIdeal(ctx, std::move(gens))};
}

std::string serialize_ring_file(const RingCtxPtr& ctx, const LocalIdeal& ideal) {
    std::string out = "char " + std::to_string(ctx->characteristic) + "\nvars";
    for (const auto& v : ctx->vars) out += " " + v;
    out += "\nideal\n";
    for (const auto& g : ideal.gens) out += g.str() + "\n";
    return out;
}

}  // namespace lefschetz
