#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/rng.hpp"
#include "lefschetz/staircase.hpp"
#include "lefschetz/stdbasis.hpp"

namespace lefschetz {

Antichain leading_staircase(const StandardBasis& B);

// number of monomials outside v(I); nullopt = the quotient is not Artinian
std::optional<uint64_t> length_artinian(const LocalIdeal& I);
std::optional<uint64_t> length_artinian(const StandardBasis& B);

// chi(d) = length(R/m^(d+1)) for d = 0..dmax
std::vector<uint64_t> hilbert_samuel(const LocalIdeal& I, uint32_t dmax);

enum class Flag { yes, no, undetermined };
std::string flag_str(Flag f);

struct InvariantRecord {
    unsigned dim = 0;
    unsigned embdim = 0;
    std::optional<unsigned> depth;        // unset = undetermined
    std::vector<uint64_t> hs;             // chi(0..dmax)
    std::optional<uint64_t> multiplicity; // unset = HS fit did not stabilize
    Flag regular = Flag::undetermined;
    Flag cm = Flag::undetermined;
    Flag gorenstein = Flag::undetermined;
    std::vector<std::string> notes;       // diagnostics (fit failures, retry exhaustion)
};

struct GenericOptions {
    uint64_t seed = 1;
    long coeff_bound = 5;  // coefficients drawn from [-bound, bound]
    unsigned retries = 8;
};

InvariantRecord ring_invariants(const LocalIdeal& I, uint32_t dmax, const GenericOptions& opt = {});

// Hilbert-Samuel polynomial fit: the dim-th finite difference must be
// constant over the last max(3, dim+1) sampled degrees.  Returns the
// normalized leading coefficient (dim! * lead = the stable difference).
std::optional<uint64_t> hs_multiplicity(const std::vector<uint64_t>& chi, unsigned dim);

// for each i: is z[i] a nonzerodivisor on R/(I + (z_0..z_{i-1}))?
std::vector<bool> regular_sequence_check(const LocalIdeal& I, std::span<const Polynomial> z);

// |z| = dim R and R/(I + (z)) is Artinian
bool system_of_parameters_check(const LocalIdeal& I, std::span<const Polynomial> z);

// random linear form in the maximal ideal with coefficients in [-bound, bound]
Polynomial random_linear_form(const RingCtxPtr& ctx, SeedRng& rng, long bound);

// f = q*g + r modulo degree > dmax with deg_{last}(r) < ord(g); g must be
// regular in the last variable
struct WeierstrassResult {
    Polynomial q, r;
    unsigned order;
};
WeierstrassResult weierstrass_divide(const Polynomial& f, const Polynomial& g, uint32_t dmax);

// order of g in the last variable: minimal d with g(0,..,0,t) = c t^d, c != 0
std::optional<unsigned> last_var_order(const Polynomial& g);

}  // namespace lefschetz
