#pragma once

// Test-only oracles, independent of the library's division/staircase paths:
// membership via dense linear algebra on truncated coefficient vectors, and
// staircase counting via direct enumeration.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lefschetz/invariants.hpp"
#include "lefschetz/ring.hpp"
#include "lefschetz/rng.hpp"

namespace lefschetz::testing {

// all exponents of total degree <= d, in preceq order
inline std::vector<Exponent> exponents_up_to(size_t nvars, uint32_t d) {
    std::vector<Exponent> out;
    Exponent cur(nvars);
    std::function<void(size_t, uint32_t)> rec = [&](size_t i, uint32_t left) {
        if (i == nvars) {
            out.push_back(cur);
            return;
        }
        for (uint32_t v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), exp_before);
    return out;
}

// Gaussian elimination over the coefficient field: is b in the column span?
inline bool solvable(std::vector<std::vector<Coeff>> cols, std::vector<Coeff> b, uint64_t p) {
    const size_t rows = b.size();
    size_t rank_row = 0;
    for (size_t c = 0; c < cols.size() && rank_row < rows; ++c) {
        size_t piv = rank_row;
        while (piv < rows && cols[c][piv].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(cols[c][piv], cols[c][rank_row]);
        std::swap(b[piv], b[rank_row]);
        for (size_t c2 = c + 1; c2 < cols.size(); ++c2) std::swap(cols[c2][piv], cols[c2][rank_row]);
        Coeff inv = cols[c][rank_row].inverse();
        for (size_t r = rank_row + 1; r < rows; ++r) {
            if (cols[c][r].is_zero()) continue;
            Coeff f = cols[c][r] * inv;
            for (size_t c2 = c; c2 < cols.size(); ++c2)
                cols[c2][r] = cols[c2][r] - cols[c2][rank_row] * f;
            b[r] = b[r] - b[rank_row] * f;
        }
        ++rank_row;
    }
    // b must be reducible to zero by the pivots found; re-run forward pass on b
    // (cols are echelonized in place above, so any nonzero residue of b below
    //  the rank rows means unsolvable)
    for (size_t r = rank_row; r < rows; ++r)
        if (!b[r].is_zero()) return false;
    (void)p;
    return true;
}

// z ∈ I + m^(D+1), decided by searching polynomial coefficients of the q_i
// up to degree D: the truncated products q_i * g_i only involve q_i
// coefficients of degree <= D.
inline bool membership_oracle(const Polynomial& z, const LocalIdeal& I, uint32_t D) {
    const RingCtxPtr& ctx = I.ctx;
    const uint64_t p = ctx->characteristic;
    auto exps = exponents_up_to(ctx->nvars(), D);
    std::map<Exponent, size_t, ExpLess> row_of;
    for (size_t i = 0; i < exps.size(); ++i) row_of.emplace(exps[i], i);

    std::vector<std::vector<Coeff>> cols;
    for (const auto& g : I.gens) {
        for (const auto& qe : exps) {
            std::vector<Coeff> col(exps.size(), Coeff::zero(p));
            for (const auto& [ge, gc] : g.terms()) {
                Exponent prod = qe + ge;
                if (prod.degree() > D) continue;
                auto it = row_of.find(prod);
                col[it->second] = col[it->second] + gc;
            }
            cols.push_back(std::move(col));
        }
    }
    std::vector<Coeff> b(exps.size(), Coeff::zero(p));
    for (const auto& [ze, zc] : z.terms()) {
        if (ze.degree() > D) continue;  // z truncated consistently
        b[row_of.at(ze)] = zc;
    }
    return solvable(std::move(cols), std::move(b), p);
}

// random sparse polynomial: up to nterms terms of degree <= maxdeg,
// coefficients in [-cbound, cbound]
inline Polynomial random_poly(const RingCtxPtr& ctx, SeedRng& rng, unsigned nterms,
                              uint32_t maxdeg, long cbound) {
    Polynomial p(ctx);
    for (unsigned t = 0; t < nterms; ++t) {
        Exponent ex(ctx->nvars());
        uint32_t left = maxdeg;
        for (size_t i = 0; i < ctx->nvars(); ++i) {
            uint32_t v = static_cast<uint32_t>(rng.range(0, static_cast<long>(left)));
            ex[i] = v;
            left -= v;
        }
        long c = rng.range(-cbound, cbound);
        p.add_term(ex, Coeff::integer(c, ctx->characteristic));
    }
    return p;
}

}  // namespace lefschetz::testing
