#include "lefschetz/invariants.hpp"

#include <algorithm>


namespace lefschetz {

Antichain leading_staircase(const StandardBasis& B) {
    Antichain a;
    a.nvars = B.ideal.ctx ? B.ideal.ctx->nvars() : 0;
    a.gens = B.antichain;
    return a;
}

std::optional<uint64_t> length_artinian(const StandardBasis& B) {
    return staircase_length(leading_staircase(B));
}

std::optional<uint64_t> length_artinian(const LocalIdeal& I) {
    return length_artinian(standard_basis(I));
}

std::vector<uint64_t> hilbert_samuel(const LocalIdeal& I, uint32_t dmax) {
    return staircase_hilbert_samuel(leading_staircase(standard_basis(I)), dmax);
}

std::string flag_str(Flag f) {
    switch (f) {
        case Flag::yes: return "true";
        case Flag::no: return "false";
        default: return "undetermined";
    }
}

std::optional<uint64_t> hs_multiplicity(const std::vector<uint64_t>& chi, unsigned dim) {
    std::vector<long long> table(chi.begin(), chi.end());
    for (unsigned k = 0; k < dim; ++k) {
        if (table.size() < 2) return std::nullopt;
        std::vector<long long> next;
        for (size_t i = 0; i + 1 < table.size(); ++i) next.push_back(table[i + 1] - table[i]);
        table = std::move(next);
    }
    size_t window = std::max<size_t>(3, dim + 1);
    if (table.size() < window) return std::nullopt;
    long long v = table.back();
    for (size_t i = table.size() - window; i < table.size(); ++i)
        if (table[i] != v) return std::nullopt;
    if (v < 0) return std::nullopt;
    return static_cast<uint64_t>(v);
}

Polynomial random_linear_form(const RingCtxPtr& ctx, SeedRng& rng, long bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Polynomial p(ctx);
        for (size_t i = 0; i < ctx->nvars(); ++i) {
            long c = rng.range(-bound, bound);
            if (c == 0) continue;
            Exponent ex(ctx->nvars());
            ex[i] = 1;
            p.add_term(ex, Coeff::integer(c, ctx->characteristic));
        }
        if (!p.is_zero()) return p;
    }
    throw error("random linear form generation failed (characteristic too small for the box?)");
}

std::vector<bool> regular_sequence_check(const LocalIdeal& I, std::span<const Polynomial> z) {
    std::vector<bool> out;
    LocalIdeal A = I;
    for (const auto& zi : z) {
        StandardBasis BA = standard_basis(A);
        LocalIdeal C = colon(A, zi);
        out.push_back(ideal_subset(C, BA));
        A.gens.push_back(zi);
    }
    return out;
}

bool system_of_parameters_check(const LocalIdeal& I, std::span<const Polynomial> z) {
    unsigned dim = staircase_dimension(leading_staircase(standard_basis(I)));
    if (z.size() != dim) return false;
    LocalIdeal A = ideal_sum(I, z);
    return length_artinian(A).has_value();
}

namespace {

// all products of k generators (with repetition): generators of q^k
std::vector<Polynomial> ideal_power_gens(std::span<const Polynomial> q, uint32_t k,
                                         const RingCtxPtr& ctx) {
    std::vector<Polynomial> acc{int_poly(ctx, 1)};
    for (uint32_t step = 0; step < k; ++step) {
        std::vector<Polynomial> next;
        for (const auto& a : acc)
            for (const auto& g : q) next.push_back(a * g);
        acc = std::move(next);
    }
    return acc;
}

// depth as the longest prefix of generic linear forms accepted as
// nonzerodivisors; a nonzero socle certifies the exact value
std::optional<unsigned> depth_probe(const LocalIdeal& I, unsigned dim, const GenericOptions& opt,
                                    std::vector<std::string>& notes) {
    const RingCtxPtr& ctx = I.ctx;
    SeedRng rng(opt.seed ^ 0xdeb7ull);
    LocalIdeal A = I;
    unsigned depth = 0;
    while (true) {
        if (depth == dim) return depth;  // depth <= dim always
        StandardBasis BA = standard_basis(A);
        LocalIdeal socle = colon(A, maximal_ideal(ctx));
        if (!ideal_subset(socle, BA)) return depth;  // m is an associated prime
        bool extended = false;
        for (unsigned t = 0; t < opt.retries && !extended; ++t) {
            Polynomial ell = random_linear_form(ctx, rng, opt.coeff_bound);
            LocalIdeal C = colon(A, ell);
            if (ideal_subset(C, BA)) {
                A.gens.push_back(ell);
                ++depth;
                extended = true;
            }
        }
        if (!extended) {
            notes.push_back("depth: retry budget exhausted at depth >= " + std::to_string(depth));
            return std::nullopt;
        }
    }
}

}  // namespace

InvariantRecord ring_invariants(const LocalIdeal& I, uint32_t dmax, const GenericOptions& opt) {
    InvariantRecord rec;
    const RingCtxPtr& ctx = I.ctx;
    const size_t n = ctx->nvars();

    StandardBasis B = standard_basis(I);
    Antichain st = leading_staircase(B);
    rec.dim = staircase_dimension(st);
    unsigned lin = 0;
    for (const auto& e : st.gens)
        if (e.degree() == 1) ++lin;
    rec.embdim = static_cast<unsigned>(n) - lin;
    rec.hs = staircase_hilbert_samuel(st, dmax);
    rec.multiplicity = hs_multiplicity(rec.hs, rec.dim);
    if (!rec.multiplicity)
        rec.notes.push_back("hilbert-samuel fit did not stabilize; increase dmax");
    rec.regular = rec.dim == rec.embdim ? Flag::yes : Flag::no;
    rec.depth = depth_probe(I, rec.dim, opt, rec.notes);

    // Cohen-Macaulay: length(R/q) = e(q) for a generic linear parameter ideal
    SeedRng rng(opt.seed ^ 0xc311ull);
    if (rec.dim == 0) {
        rec.cm = Flag::yes;
        auto len = staircase_length(st);
        LocalIdeal socle = colon(I, maximal_ideal(ctx));
        auto slen = length_artinian(socle);
        if (len && slen)
            rec.gorenstein = (*len - *slen == 1) ? Flag::yes : Flag::no;
    } else {
        for (unsigned t = 0; t < opt.retries; ++t) {
            std::vector<Polynomial> q;
            for (unsigned i = 0; i < rec.dim; ++i)
                q.push_back(random_linear_form(ctx, rng, opt.coeff_bound));
            LocalIdeal A = ideal_sum(I, q);
            auto len = length_artinian(A);
            if (!len) continue;  // not a system of parameters; redraw
            uint32_t samples = rec.dim + std::max<uint32_t>(3, rec.dim + 1) + 1;
            std::vector<uint64_t> lam;
            bool ok = true;
            for (uint32_t d = 0; d <= samples && ok; ++d) {
                LocalIdeal Ad = ideal_sum(I, std::span<const Polynomial>(
                                                 ideal_power_gens(q, d + 1, ctx)));
                auto l = length_artinian(Ad);
                if (!l) ok = false;
                else lam.push_back(*l);
            }
            if (!ok) continue;
            auto e = hs_multiplicity(lam, rec.dim);
            if (!e) {
                rec.notes.push_back("parameter-adic fit did not stabilize");
                break;
            }
            rec.cm = (*len == *e) ? Flag::yes : Flag::no;
            if (rec.cm == Flag::yes) {
                LocalIdeal socle = colon(A, maximal_ideal(ctx));
                auto slen = length_artinian(socle);
                if (slen) rec.gorenstein = (*len - *slen == 1) ? Flag::yes : Flag::no;
            } else {
                rec.gorenstein = Flag::no;
            }
            break;
        }
        if (rec.cm == Flag::undetermined)
            rec.notes.push_back("cm: no generic parameter ideal found within the retry budget");
    }
    return rec;
}

std::optional<unsigned> last_var_order(const Polynomial& g) {
    const size_t n = g.ctx()->nvars();
    std::optional<unsigned> ord;
    for (const auto& [ex, c] : g.terms()) {
        bool pure = true;
        for (size_t i = 0; i + 1 < n; ++i)
            if (ex[i] > 0) { pure = false; break; }
        if (pure && (!ord || ex[n - 1] < *ord)) ord = ex[n - 1];
    }
    return ord;
}

WeierstrassResult weierstrass_divide(const Polynomial& f, const Polynomial& g, uint32_t dmax) {
    const RingCtxPtr plain = f.ctx();
    const size_t n = plain->nvars();
    if (n == 0) throw error("weierstrass division needs at least one variable");
    auto ord = last_var_order(g);
    if (!ord)
        throw error("divisor is not regular in the last variable '" + plain->vars[n - 1] +
                    "'; apply a generic linear change of coordinates first (see noether)");
    const unsigned d = *ord;

    RingCtxPtr ctx = with_dmax(plain, dmax);
    Polynomial ft = f.in_context(ctx), gt = g.in_context(ctx);

    // g = U * Xn^d + P with U a unit and P of Xn-degree < d
    Polynomial U(ctx), P(ctx);
    for (const auto& [ex, c] : gt.terms()) {
        if (ex[n - 1] >= d) {
            Exponent e2(ex);
            e2[n - 1] -= d;
            U.add_term(e2, c);
        } else {
            P.add_term(ex, c);
        }
    }
    Coeff c0 = U.constant_term();
    if (c0.is_zero()) throw error("internal: unit part of Weierstrass divisor degenerate");

    // V = U^{-1} truncated: geometric series in (1 - U/c0)
    Polynomial W = int_poly(ctx, 1) - U.scale(c0.inverse());
    Polynomial V = int_poly(ctx, 1);
    for (uint32_t k = 0; k < dmax; ++k) V = int_poly(ctx, 1) + W * V;
    V = V.scale(c0.inverse());

    Polynomial q(ctx), h = ft;
    for (uint32_t pass = 0; pass <= dmax + 1; ++pass) {
        Polynomial low(ctx), high(ctx);  // h = low + Xn^d * high
        for (const auto& [ex, c] : h.terms()) {
            if (ex[n - 1] >= d) {
                Exponent e2(ex);
                e2[n - 1] -= d;
                high.add_term(e2, c);
            } else {
                low.add_term(ex, c);
            }
        }
        if (high.is_zero()) {
            WeierstrassResult res;
            res.q = q;
            res.r = low;
            res.order = d;
            return res;
        }
        Polynomial dq = V * high;
        q = q + dq;
        h = low - dq * P;  // x'-order strictly increases each pass
    }
    throw guard_error("weierstrass division did not stabilize within the truncation degree");
}

}  // namespace lefschetz
