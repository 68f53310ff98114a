#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lefschetz/ring.hpp"

namespace lefschetz {

// Minimal generators of a monomial ideal: a finite antichain under
// componentwise <=.  The empty antichain is the zero ideal.
struct Antichain {
    size_t nvars = 0;
    std::vector<Exponent> gens;  // pairwise incomparable, sorted by preceq

    bool contains(const Exponent& x) const;  // x dominates some generator
};

Antichain minimize(size_t nvars, std::span<const Exponent> exps);

// Krull dimension of L[[n]]/(monomial ideal): the largest coordinate
// subspace avoiding the staircase.
unsigned staircase_dimension(const Antichain& a);

// quotient is Artinian iff each variable has a pure power in the ideal
bool staircase_artinian(const Antichain& a);

// number of monomials outside the staircase; nullopt = infinite
std::optional<uint64_t> staircase_length(const Antichain& a);

// monomials of total degree <= d outside the staircase, for d = 0..dmax
std::vector<uint64_t> staircase_hilbert_samuel(const Antichain& a, uint32_t dmax);

// minimal primes of the monomial ideal, as minimal variable covers
std::vector<std::vector<size_t>> minimal_covers(const Antichain& a);

// z lies in the Newton polyhedron conv(gens) + R_{>=0}^n, decided by exact
// rational linear programming
bool np_contains(const Antichain& a, const Exponent& z);
// power criterion: some m <= mmax has m*z componentwise above a generator
// of the m-th power of the ideal
bool np_contains_power(const Antichain& a, const Exponent& z, uint32_t mmax);

// generators of the k-th power (as a monomial ideal), minimized
Antichain monomial_power(const Antichain& a, uint32_t k);

// lattice points of the Newton polyhedron up to total degree degbound
std::vector<Exponent> np_lattice_points(const Antichain& a, uint32_t degbound);

// exact rational two-phase simplex feasibility test for
//   A x <= b, x >= 0 rows carrying their relation (<=, ==, >=)
enum class Rel { le, eq, ge };
bool lp_feasible(const std::vector<std::vector<mpq_class>>& A, const std::vector<Rel>& rel,
                 const std::vector<mpq_class>& b);

}  // namespace lefschetz
