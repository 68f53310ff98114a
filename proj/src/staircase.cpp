#include "lefschetz/staircase.hpp"

#include <algorithm>
#include <functional>

namespace lefschetz {

bool Antichain::contains(const Exponent& x) const {
    return std::any_of(gens.begin(), gens.end(),
                       [&](const Exponent& g) { return g.divides(x); });
}

Antichain minimize(size_t nvars, std::span<const Exponent> exps) {
    Antichain a;
    a.nvars = nvars;
    std::vector<Exponent> sorted(exps.begin(), exps.end());
    std::sort(sorted.begin(), sorted.end(), exp_before);
    for (const auto& e : sorted) {
        bool dominated = std::any_of(a.gens.begin(), a.gens.end(),
                                     [&](const Exponent& g) { return g.divides(e); });
        if (!dominated) a.gens.push_back(e);
    }
    return a;
}

unsigned staircase_dimension(const Antichain& a) {
    const size_t n = a.nvars;
    unsigned best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool avoids = true;
        for (const auto& g : a.gens) {
            bool supp_inside = true;
            for (size_t i = 0; i < n; ++i)
                if (g[i] > 0 && !(mask & (1u << i))) { supp_inside = false; break; }
            if (supp_inside) { avoids = false; break; }
        }
        if (avoids) best = std::max<unsigned>(best, static_cast<unsigned>(__builtin_popcount(mask)));
    }
    return best;
}

bool staircase_artinian(const Antichain& a) {
    for (size_t i = 0; i < a.nvars; ++i) {
        bool pure = false;
        for (const auto& g : a.gens) {
            bool only_i = g[i] > 0;
            for (size_t j = 0; only_i && j < a.nvars; ++j)
                if (j != i && g[j] > 0) only_i = false;
            if (only_i) { pure = true; break; }
        }
        if (!pure) return false;
    }
    return true;
}

namespace {

// visit all exponents of total degree <= dmax
void enumerate(size_t nvars, uint32_t dmax, const std::function<void(const Exponent&)>& fn) {
    Exponent cur(nvars);
    std::function<void(size_t, uint32_t)> rec = [&](size_t i, uint32_t left) {
        if (i == nvars) { fn(cur); return; }
        for (uint32_t v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(0, dmax);
}

}  // namespace

std::optional<uint64_t> staircase_length(const Antichain& a) {
    if (a.nvars == 0) return a.gens.empty() ? std::optional<uint64_t>(1) : std::optional<uint64_t>(0);
    if (!staircase_artinian(a)) return std::nullopt;
    uint32_t bound = 0;
    for (const auto& g : a.gens) bound = std::max(bound, g.degree());
    uint64_t count = 0;
    enumerate(a.nvars, bound, [&](const Exponent& x) {
        if (!a.contains(x)) ++count;
    });
    return count;
}

std::vector<uint64_t> staircase_hilbert_samuel(const Antichain& a, uint32_t dmax) {
    std::vector<uint64_t> per_degree(dmax + 1, 0);
    enumerate(a.nvars, dmax, [&](const Exponent& x) {
        if (!a.contains(x)) ++per_degree[x.degree()];
    });
    std::vector<uint64_t> chi(dmax + 1, 0);
    uint64_t acc = 0;
    for (uint32_t d = 0; d <= dmax; ++d) {
        acc += per_degree[d];
        chi[d] = acc;
    }
    return chi;
}

std::vector<std::vector<size_t>> minimal_covers(const Antichain& a) {
    const size_t n = a.nvars;
    std::vector<uint32_t> kept;
    std::vector<uint32_t> masks(1u << n);
    // enumerate by popcount so subsets come before supersets
    std::vector<uint32_t> order;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](uint32_t a_, uint32_t b_) {
        int pa = __builtin_popcount(a_), pb = __builtin_popcount(b_);
        return pa != pb ? pa < pb : a_ < b_;
    });
    for (uint32_t mask : order) {
        bool covers = true;
        for (const auto& g : a.gens) {
            bool hit = false;
            for (size_t i = 0; i < n && !hit; ++i)
                if (g[i] > 0 && (mask & (1u << i))) hit = true;
            if (!hit) { covers = false; break; }
        }
        if (!covers) continue;
        bool has_sub = std::any_of(kept.begin(), kept.end(),
                                   [&](uint32_t k) { return (k & mask) == k; });
        if (!has_sub) kept.push_back(mask);
    }
    std::vector<std::vector<size_t>> out;
    for (uint32_t mask : kept) {
        std::vector<size_t> vars;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) vars.push_back(i);
        out.push_back(std::move(vars));
    }
    return out;
}

bool lp_feasible(const std::vector<std::vector<mpq_class>>& A, const std::vector<Rel>& rel,
                 const std::vector<mpq_class>& b) {
    const size_t m = A.size();
    if (m == 0) return true;
    const size_t n = A[0].size();

    std::vector<std::vector<mpq_class>> rows = A;
    std::vector<mpq_class> rhs = b;
    std::vector<Rel> r = rel;
    for (size_t i = 0; i < m; ++i) {
        if (rhs[i] < 0) {
            for (auto& v : rows[i]) v = -v;
            rhs[i] = -rhs[i];
            if (r[i] == Rel::le) r[i] = Rel::ge;
            else if (r[i] == Rel::ge) r[i] = Rel::le;
        }
    }

    // columns: n structural, then slacks/surplus, then artificials
    size_t ncols = n;
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    for (size_t i = 0; i < m; ++i)
        if (r[i] == Rel::le || r[i] == Rel::ge) slack_col[i] = static_cast<int>(ncols++);
    for (size_t i = 0; i < m; ++i)
        if (r[i] != Rel::le) art_col[i] = static_cast<int>(ncols++);

    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(ncols, 0));
    std::vector<int> basis(m);
    std::vector<mpq_class> cost(ncols, 0);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) T[i][j] = rows[i][j];
        if (slack_col[i] >= 0) T[i][static_cast<size_t>(slack_col[i])] = r[i] == Rel::le ? 1 : -1;
        if (art_col[i] >= 0) {
            T[i][static_cast<size_t>(art_col[i])] = 1;
            cost[static_cast<size_t>(art_col[i])] = 1;
            basis[i] = art_col[i];
        } else {
            basis[i] = slack_col[i];
        }
    }

    // phase 1: minimize the artificial total, Bland's rule
    while (true) {
        std::vector<mpq_class> red(ncols);
        for (size_t j = 0; j < ncols; ++j) {
            mpq_class zj = 0;
            for (size_t i = 0; i < m; ++i) zj += cost[static_cast<size_t>(basis[i])] * T[i][j];
            red[j] = cost[j] - zj;
        }
        int enter = -1;
        for (size_t j = 0; j < ncols; ++j)
            if (red[j] < 0) { enter = static_cast<int>(j); break; }
        if (enter < 0) break;
        int leave = -1;
        mpq_class best;
        for (size_t i = 0; i < m; ++i) {
            if (T[i][static_cast<size_t>(enter)] > 0) {
                mpq_class ratio = rhs[i] / T[i][static_cast<size_t>(enter)];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[static_cast<size_t>(leave)])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
        }
        if (leave < 0) return false;  // unbounded phase-1 cannot happen; defensive
        size_t li = static_cast<size_t>(leave), ei = static_cast<size_t>(enter);
        mpq_class piv = T[li][ei];
        for (auto& v : T[li]) v /= piv;
        rhs[li] /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == li || T[i][ei] == 0) continue;
            mpq_class f = T[i][ei];
            for (size_t j = 0; j < ncols; ++j) T[i][j] -= f * T[li][j];
            rhs[i] -= f * rhs[li];
        }
        basis[li] = enter;
    }
    mpq_class obj = 0;
    for (size_t i = 0; i < m; ++i) obj += cost[static_cast<size_t>(basis[i])] * rhs[i];
    return obj == 0;
}

bool np_contains(const Antichain& a, const Exponent& z) {
    const size_t k = a.gens.size();
    if (k == 0) return false;
    const size_t n = a.nvars;
    // lambda >= 0, sum lambda = 1, sum lambda_i g_i <= z
    std::vector<std::vector<mpq_class>> A(n + 1, std::vector<mpq_class>(k, 0));
    std::vector<Rel> rel(n + 1, Rel::le);
    std::vector<mpq_class> b(n + 1);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < k; ++i) A[j][i] = static_cast<long>(a.gens[i][j]);
        b[j] = static_cast<long>(z[j]);
    }
    for (size_t i = 0; i < k; ++i) A[n][i] = 1;
    rel[n] = Rel::eq;
    b[n] = 1;
    return lp_feasible(A, rel, b);
}

Antichain monomial_power(const Antichain& a, uint32_t k) {
    if (k == 0) {
        Antichain unit;
        unit.nvars = a.nvars;
        unit.gens.push_back(Exponent(a.nvars));
        return unit;
    }
    std::vector<Exponent> sums;
    std::function<void(size_t, uint32_t, const Exponent&)> rec = [&](size_t i, uint32_t left,
                                                                     const Exponent& acc) {
        if (left == 0) { sums.push_back(acc); return; }
        if (i == a.gens.size()) return;
        rec(i + 1, left, acc);
        rec(i, left - 1, acc + a.gens[i]);
    };
    rec(0, k, Exponent(a.nvars));
    return minimize(a.nvars, sums);
}

bool np_contains_power(const Antichain& a, const Exponent& z, uint32_t mmax) {
    for (uint32_t m = 1; m <= mmax; ++m) {
        Antichain pw = monomial_power(a, m);
        if (pw.contains(z.scaled(m))) return true;
    }
    return false;
}

std::vector<Exponent> np_lattice_points(const Antichain& a, uint32_t degbound) {
    std::vector<Exponent> pts;
    enumerate(a.nvars, degbound, [&](const Exponent& x) {
        if (np_contains(a, x)) pts.push_back(x);
    });
    return pts;
}

}  // namespace lefschetz
