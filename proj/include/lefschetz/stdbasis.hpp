#pragma once

#include <span>
#include <vector>

#include "lefschetz/ring.hpp"

namespace lefschetz {

struct guard_error : error {
    using error::error;
};

// Division certificate: unit*f == sum quotients[i]*G[i] + remainder, with
// unit(0) != 0, so remainder == 0 iff f has a standard representation
// with respect to G in the local ring.
struct Division {
    Polynomial remainder;
    Polynomial unit;
    std::vector<Polynomial> quotients;
    bool verify(const Polynomial& f, std::span<const Polynomial> G) const;
};

// Mora ecart division: terminates for polynomial input under the local
// order.  The remainder's leading exponent is not divisible by any v(g).
// With track=false the certificate parts are skipped (remainder only).
// budget, when given, caps the number of reduction steps (guard_error).
Division weak_normal_form(const Polynomial& f, std::span<const Polynomial> G, bool track = true,
                          size_t* budget = nullptr);

// Reduced form: additionally no term of the remainder is divisible by any
// v(g).  Such a remainder need not exist as a polynomial (the canonical
// representative can be a genuine power series); the guard bounds the
// rewriting work and trips with a diagnostic pointing at truncation mode.
Division normal_form(const Polynomial& f, std::span<const Polynomial> G,
                     size_t guard = 200000);

// s(f,g) = c(g) X^mu f - c(f) X^nu g, where X^(mu+v(f)) = X^(nu+v(g)) = lcm.
Polynomial s_pair(const Polynomial& f, const Polynomial& g);

struct StandardBasis {
    LocalIdeal ideal;                // the input generators
    std::vector<Polynomial> gens;    // certified: every s-pair reduces to 0
    std::vector<Exponent> antichain; // v(I): minimal leading exponents, sorted
};

StandardBasis standard_basis(const LocalIdeal& I);

bool membership(const Polynomial& z, const StandardBasis& B);
bool membership(const Polynomial& z, const LocalIdeal& I);

// Generators of the syzygy module of F (relations sum a_i F_i = 0), from
// the zero reductions of the completion with cofactor tracking.
std::vector<std::vector<Polynomial>> syzygies(std::span<const Polynomial> F,
                                              const RingCtxPtr& ctx);

LocalIdeal intersect(const LocalIdeal& A, const LocalIdeal& B);
// (I : J) = { g : g*J subset I }
LocalIdeal colon(const LocalIdeal& I, const LocalIdeal& J);
LocalIdeal colon(const LocalIdeal& I, const Polynomial& f);

// every generator of A lies in B
bool ideal_subset(const LocalIdeal& A, const LocalIdeal& B);
bool ideal_subset(const LocalIdeal& A, const StandardBasis& B);

}  // namespace lefschetz
