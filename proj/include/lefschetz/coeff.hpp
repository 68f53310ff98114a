#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lefschetz {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(uint64_t n);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod_u64(uint64_t a, uint64_t p);

// Field element: a rational (characteristic 0) or a residue in F_p for a
// machine-word prime p.  Rationals are kept canonical by GMP (lowest terms,
// positive denominator); residues live in [0, p).
class Coeff {
public:
    Coeff() = default;  // zero of characteristic 0

    static Coeff rational(mpq_class v) { return Coeff(0, 0, std::move(v)); }
    static Coeff integer(long v, uint64_t p = 0);
    static Coeff residue(uint64_t v, uint64_t p);
    static Coeff zero(uint64_t p) { return integer(0, p); }
    static Coeff one(uint64_t p) { return integer(1, p); }

    uint64_t characteristic() const { return p_; }
    bool is_zero() const { return p_ ? r_ == 0 : q_ == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

    const mpq_class& rat() const;
    uint64_t res() const;

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff inverse() const;
    Coeff pow(uint64_t e) const;

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Image in F_p; nullopt when the denominator vanishes mod p.
    std::optional<Coeff> to_residue(uint64_t p) const;

    std::string str() const;

private:
    Coeff(uint64_t p, uint64_t r, mpq_class q) : p_(p), r_(r), q_(std::move(q)) {}
    void check_same(const Coeff& o) const;

    uint64_t p_ = 0;
    uint64_t r_ = 0;  // residue when p_ > 0
    mpq_class q_ = 0; // value when p_ == 0
};

}  // namespace lefschetz
