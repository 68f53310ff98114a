#include "lefschetz/stdbasis.hpp"

#include <algorithm>
#include <map>

namespace lefschetz {

namespace {

uint32_t ecart(const Polynomial& p) {
    return p.degree() - p.valuation()->degree();
}

// basis element with division bookkeeping relative to a fixed list F:
// val == alpha*f + sum gamma[j]*F[j]  (alpha only used inside weak division)
struct Tracked {
    Polynomial val;
    Polynomial alpha;
    std::vector<Polynomial> gamma;
};

}  // namespace

bool Division::verify(const Polynomial& f, std::span<const Polynomial> G) const {
    if (unit.is_zero() || unit.constant_term().is_zero()) return false;
    Polynomial acc = unit * f;
    for (size_t i = 0; i < G.size(); ++i) acc = acc - quotients[i] * G[i];
    return acc == remainder;
}

Division weak_normal_form(const Polynomial& f, std::span<const Polynomial> G, bool track,
                          size_t* budget) {
    const RingCtxPtr& ctx = f.ctx();

    Division out;
    out.unit = int_poly(ctx, 1);
    out.quotients.assign(G.size(), Polynomial(ctx));

    Polynomial h = f;
    Polynomial alpha = int_poly(ctx, 1);
    std::vector<Polynomial> gamma(track ? G.size() : 0, Polynomial(ctx));
    std::vector<Tracked> saved;  // intermediate reducers (Mora)

    while (!h.is_zero()) {
        if (budget && (*budget)-- == 0)
            throw guard_error("division step budget exhausted");
        Exponent vh = *h.valuation();
        uint32_t eh = ecart(h);
        // Prefer the earliest reducer that needs no saving (ecart <= ecart(h));
        // otherwise take the globally minimal ecart and save h (Mora).
        int best_g = -1, best_s = -1;
        uint32_t best_e = 0;
        bool settled = false;
        auto consider = [&](uint32_t e, int gi, int si) {
            if (settled) return;
            if (e <= eh) {
                best_g = gi;
                best_s = si;
                best_e = e;
                settled = true;
            } else if ((best_g < 0 && best_s < 0) || e < best_e) {
                best_g = gi;
                best_s = si;
                best_e = e;
            }
        };
        for (size_t i = 0; i < G.size() && !settled; ++i)
            if (!G[i].is_zero() && G[i].valuation()->divides(vh))
                consider(ecart(G[i]), static_cast<int>(i), -1);
        for (size_t i = 0; i < saved.size() && !settled; ++i)
            if (saved[i].val.valuation()->divides(vh))
                consider(ecart(saved[i].val), -1, static_cast<int>(i));
        if (best_g < 0 && best_s < 0) break;

        const Polynomial& red = best_g >= 0 ? G[static_cast<size_t>(best_g)]
                                            : saved[static_cast<size_t>(best_s)].val;
        if (best_e > eh) {
            Tracked snap;
            snap.val = h;
            if (track) { snap.alpha = alpha; snap.gamma = gamma; }
            saved.push_back(std::move(snap));
        }
        Coeff mc = h.lead_coeff() / red.lead_coeff();
        Exponent mex = vh - *red.valuation();
        h = h - red.mul_term(mc, mex);
        if (track) {
            if (best_g >= 0) {
                gamma[static_cast<size_t>(best_g)] =
                    gamma[static_cast<size_t>(best_g)] - Polynomial(ctx, mc, mex);
            } else {
                const Tracked& t = saved[static_cast<size_t>(best_s)];
                alpha = alpha - t.alpha.mul_term(mc, mex);
                for (size_t j = 0; j < G.size(); ++j)
                    gamma[j] = gamma[j] - t.gamma[j].mul_term(mc, mex);
            }
        }
        // rescale to monic: keeps rational coefficients small; the tracked
        // representation is scaled identically so the identity stays exact
        if (!h.is_zero() && !h.lead_coeff().is_one()) {
            Coeff inv = h.lead_coeff().inverse();
            h = h.scale(inv);
            if (track) {
                alpha = alpha.scale(inv);
                for (auto& g : gamma) g = g.scale(inv);
            }
        }
    }

    out.remainder = h;
    if (track) {
        // h == alpha*f + sum gamma[j] G[j]  =>  alpha*f == sum (-gamma[j]) G[j] + h
        out.unit = alpha;
        for (size_t j = 0; j < G.size(); ++j) out.quotients[j] = -gamma[j];
        if (out.unit.constant_term().is_zero())
            throw error("internal: Mora division produced a non-unit multiplier");
    }
    return out;
}

Division normal_form(const Polynomial& f, std::span<const Polynomial> G, size_t guard) {
    const RingCtxPtr& ctx = f.ctx();
    Division acc;
    acc.unit = int_poly(ctx, 1);
    acc.quotients.assign(G.size(), Polynomial(ctx));
    acc.remainder = Polynomial(ctx);

    Polynomial work = f;
    size_t budget = guard;
    try {
        while (!work.is_zero()) {
            if (budget-- == 0) throw guard_error("budget");
            Exponent vw = *work.valuation();
            bool divisible = std::any_of(G.begin(), G.end(), [&](const Polynomial& g) {
                return !g.is_zero() && g.valuation()->divides(vw);
            });
            if (!divisible) {
                Coeff c = work.lead_coeff();
                acc.remainder.add_term(vw, c);
                work = work - Polynomial(ctx, c, vw);
                continue;
            }
            Division d = weak_normal_form(work, G, true, &budget);
            // multiply the accumulated identity through by d.unit and push the
            // spoiled remainder terms back onto the worklist
            Polynomial spoil = (d.unit - int_poly(ctx, 1)) * acc.remainder;
            acc.unit = d.unit * acc.unit;
            for (size_t j = 0; j < G.size(); ++j)
                acc.quotients[j] = d.unit * acc.quotients[j] + d.quotients[j];
            work = d.remainder + spoil;
        }
    } catch (const guard_error&) {
        throw guard_error(
            "normal form did not reach a reduced remainder within the step budget; "
            "the canonical representative may be a power series (use truncation mode)");
    }
    return acc;
}

Polynomial s_pair(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw error("s_pair of zero polynomial");
    Exponent vf = *f.valuation(), vg = *g.valuation();
    Exponent l = vf.lcm(vg);
    return f.mul_term(g.lead_coeff(), l - vf) - g.mul_term(f.lead_coeff(), l - vg);
}

namespace {

constexpr size_t kCompletionGuard = 100000;

// Buchberger completion over the local order; every s-pair of the result
// has weak normal form 0.  With cofactors != nullptr the elements carry
// exact representations in terms of the input and the zero reductions are
// recorded as syzygies.
std::vector<Polynomial> complete(std::vector<Polynomial> gens, const RingCtxPtr& ctx,
                                 std::vector<std::vector<Polynomial>>* cofactors,
                                 std::vector<std::vector<Polynomial>>* syz_out) {
    std::vector<std::vector<Polynomial>> cof;
    if (cofactors) cof = *cofactors;
    const size_t nf = cof.empty() ? 0 : cof[0].size();  // cofactor row width

    // pair queue keyed by lcm degree (normal selection strategy)
    std::multimap<uint32_t, std::pair<size_t, size_t>> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Exponent l = gens[i].valuation()->lcm(*gens[j].valuation());
            pairs.emplace(l.degree(), std::make_pair(i, j));
        }
    };
    for (size_t j = 0; j < gens.size(); ++j) push_pairs(j);

    size_t steps = 0;
    while (!pairs.empty()) {
        if (++steps > kCompletionGuard)
            throw guard_error("standard basis completion exceeded the step budget");
        auto it = pairs.begin();
        auto [i, j] = it->second;
        pairs.erase(it);

        const Polynomial &a = gens[i], &b = gens[j];
        Polynomial s = s_pair(a, b);
        Exponent va = *a.valuation(), vb = *b.valuation();
        Exponent l = va.lcm(vb);

        Division d = weak_normal_form(s, gens, cofactors != nullptr);
        if (!cofactors) {
            if (!d.remainder.is_zero()) {
                gens.push_back(d.remainder.monic());
                push_pairs(gens.size() - 1);
            }
            continue;
        }

        // cofactor of s relative to the original list
        std::vector<Polynomial> scof(nf, Polynomial(ctx));
        for (size_t k = 0; k < nf; ++k) {
            Polynomial part = cof[i][k].mul_term(b.lead_coeff(), l - va) -
                              cof[j][k].mul_term(a.lead_coeff(), l - vb);
            scof[k] = part;
        }
        // u*s = sum q gens + r  =>  r = u*s - sum q gens
        std::vector<Polynomial> rcof(nf, Polynomial(ctx));
        for (size_t k = 0; k < nf; ++k) {
            Polynomial acc = d.unit * scof[k];
            for (size_t g = 0; g < gens.size(); ++g)
                if (!d.quotients[g].is_zero()) acc = acc - d.quotients[g] * cof[g][k];
            rcof[k] = acc;
        }
        if (d.remainder.is_zero()) {
            if (syz_out &&
                std::any_of(rcof.begin(), rcof.end(), [](const Polynomial& p) { return !p.is_zero(); }))
                syz_out->push_back(std::move(rcof));
        } else {
            Coeff inv = d.remainder.lead_coeff().inverse();
            gens.push_back(d.remainder.monic());
            for (auto& p : rcof) p = p.scale(inv);
            cof.push_back(std::move(rcof));
            push_pairs(gens.size() - 1);
        }
    }
    if (cofactors) *cofactors = std::move(cof);
    return gens;
}

}  // namespace

StandardBasis standard_basis(const LocalIdeal& I) {
    StandardBasis B;
    B.ideal = I;
    if (I.gens.empty()) return B;
    const RingCtxPtr& ctx = I.ctx;

    std::vector<Polynomial> gens;
    for (const auto& g : I.gens)
        if (!g.is_zero()) gens.push_back(g.monic());
    gens = complete(std::move(gens), ctx, nullptr, nullptr);

    // interreduce: drop lead-redundant elements, then tail-reduce
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return exp_before(*a.valuation(), *b.valuation());
    });
    std::vector<Polynomial> kept;
    for (const auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Polynomial& k) {
            return k.valuation()->divides(*g.valuation());
        });
        if (!redundant) kept.push_back(g);
    }
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Polynomial lead(ctx, kept[i].lead_coeff(), *kept[i].valuation());
        Polynomial tail = kept[i] - lead;
        if (tail.is_zero()) continue;
        try {
            Division d = normal_form(tail, others, 2000);
            Polynomial repl = d.unit * kept[i];
            size_t oi = 0;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) repl = repl - d.quotients[oi++] * kept[j];
            kept[i] = repl.monic();
        } catch (const guard_error&) {
            // tails stay unreduced when the canonical form is not polynomial
        }
    }

    B.gens = std::move(kept);
    for (const auto& g : B.gens) B.antichain.push_back(*g.valuation());
    std::sort(B.antichain.begin(), B.antichain.end(), exp_before);
    return B;
}

bool membership(const Polynomial& z, const StandardBasis& B) {
    if (z.is_zero()) return true;
    if (B.gens.empty()) return false;
    return weak_normal_form(z, B.gens, false).remainder.is_zero();
}

bool membership(const Polynomial& z, const LocalIdeal& I) {
    if (z.is_zero()) return true;
    return membership(z, standard_basis(I));
}

std::vector<std::vector<Polynomial>> syzygies(std::span<const Polynomial> F,
                                              const RingCtxPtr& ctx) {
    std::vector<std::vector<Polynomial>> syz;
    std::vector<Polynomial> gens;
    std::vector<std::vector<Polynomial>> cof;
    for (size_t j = 0; j < F.size(); ++j) {
        if (F[j].is_zero()) {
            // 1 * 0 = 0 is already a relation
            std::vector<Polynomial> unit(F.size(), Polynomial(ctx));
            unit[j] = int_poly(ctx, 1);
            syz.push_back(std::move(unit));
            continue;
        }
        std::vector<Polynomial> row(F.size(), Polynomial(ctx));
        row[j] = const_poly(ctx, F[j].lead_coeff().inverse());
        gens.push_back(F[j].monic());
        cof.push_back(std::move(row));
    }
    if (gens.empty()) return syz;

    // completion runs over the nonzero entries; cofactor rows are relative
    // to the full list F so recorded relations apply to F directly
    std::vector<std::vector<Polynomial>> cof_full = std::move(cof);
    complete(std::move(gens), ctx, &cof_full, &syz);
    return syz;
}

LocalIdeal colon(const LocalIdeal& I, const Polynomial& f) {
    const RingCtxPtr& ctx = I.ctx;
    if (f.is_zero()) {
        LocalIdeal unit(ctx);
        unit.gens.push_back(int_poly(ctx, 1));
        return unit;
    }
    std::vector<Polynomial> F;
    F.push_back(f);
    for (const auto& g : I.gens) F.push_back(g);
    auto syz = syzygies(F, ctx);
    std::vector<Polynomial> gens;
    for (const auto& s : syz)
        if (!s[0].is_zero()) gens.push_back(s[0]);
    if (gens.empty()) return LocalIdeal(ctx);
    return LocalIdeal(ctx, standard_basis(LocalIdeal(ctx, std::move(gens))).gens);
}

LocalIdeal intersect(const LocalIdeal& A, const LocalIdeal& B) {
    const RingCtxPtr& ctx = A.ctx;
    if (A.gens.empty() || B.gens.empty()) return LocalIdeal(ctx);
    std::vector<Polynomial> F;
    for (const auto& g : A.gens) F.push_back(g);
    for (const auto& g : B.gens) F.push_back(g);
    auto syz = syzygies(F, ctx);
    std::vector<Polynomial> gens;
    for (const auto& s : syz) {
        Polynomial p(ctx);
        for (size_t i = 0; i < A.gens.size(); ++i) p = p + s[i] * A.gens[i];
        if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) return LocalIdeal(ctx);
    return LocalIdeal(ctx, standard_basis(LocalIdeal(ctx, std::move(gens))).gens);
}

LocalIdeal colon(const LocalIdeal& I, const LocalIdeal& J) {
    const RingCtxPtr& ctx = I.ctx;
    if (J.gens.empty()) {
        LocalIdeal unit(ctx);
        unit.gens.push_back(int_poly(ctx, 1));
        return unit;
    }
    LocalIdeal acc = colon(I, J.gens[0]);
    for (size_t j = 1; j < J.gens.size(); ++j) acc = intersect(acc, colon(I, J.gens[j]));
    return acc;
}

bool ideal_subset(const LocalIdeal& A, const StandardBasis& B) {
    return std::all_of(A.gens.begin(), A.gens.end(),
                       [&](const Polynomial& g) { return membership(g, B); });
}

bool ideal_subset(const LocalIdeal& A, const LocalIdeal& B) {
    return ideal_subset(A, standard_basis(B));
}

}  // namespace lefschetz
