#include "lefschetz/coeff.hpp"

namespace lefschetz {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
    if (a % p == 0) throw error("division by zero in F_" + std::to_string(p));
    // p prime
    return powmod_u64(a % p, p - 2, p);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sinclair's deterministic witness set for 2^64.
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Coeff Coeff::integer(long v, uint64_t p) {
    if (p == 0) return rational(mpq_class(v));
    long m = static_cast<long>(v % static_cast<long>(p));
    if (m < 0) m += static_cast<long>(p);
    return Coeff(p, static_cast<uint64_t>(m), 0);
}

Coeff Coeff::residue(uint64_t v, uint64_t p) {
    if (p == 0) throw error("residue() needs positive characteristic");
    return Coeff(p, v % p, 0);
}

const mpq_class& Coeff::rat() const {
    if (p_) throw error("rat() on prime-field element");
    return q_;
}

uint64_t Coeff::res() const {
    if (!p_) throw error("res() on rational element");
    return r_;
}

void Coeff::check_same(const Coeff& o) const {
    if (p_ != o.p_)
        throw error("coefficient characteristic mismatch: " + std::to_string(p_) + " vs " +
                    std::to_string(o.p_));
}

Coeff Coeff::operator-() const {
    if (p_) return Coeff(p_, r_ ? p_ - r_ : 0, 0);
    return rational(-q_);
}

Coeff Coeff::operator+(const Coeff& o) const {
    check_same(o);
    if (p_) {
        uint64_t s = r_ + o.r_;  // p_ fits a machine word; wrap handled below
        if (s < r_ || s >= p_) s -= p_;
        return Coeff(p_, s, 0);
    }
    return rational(q_ + o.q_);
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
    check_same(o);
    if (p_) return Coeff(p_, mulmod_u64(r_, o.r_, p_), 0);
    return rational(q_ * o.q_);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::inverse() const {
    if (p_) return Coeff(p_, invmod_u64(r_, p_), 0);
    if (q_ == 0) throw error("division by zero");
    return rational(1 / q_);
}

Coeff Coeff::pow(uint64_t e) const {
    if (p_) return Coeff(p_, powmod_u64(r_, e, p_), 0);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return rational(r);
}

bool Coeff::operator==(const Coeff& o) const {
    if (p_ != o.p_) return false;
    return p_ ? r_ == o.r_ : q_ == o.q_;
}

std::optional<Coeff> Coeff::to_residue(uint64_t p) const {
    if (p_ != 0) throw error("to_residue() expects a rational");
    mpz_class num = q_.get_num(), den = q_.get_den();
    mpz_class pz = mpz_class(static_cast<unsigned long>(p));
    mpz_class dm = den % pz;
    if (dm == 0) return std::nullopt;
    mpz_class nm = num % pz;
    if (nm < 0) nm += pz;
    uint64_t n = nm.get_ui();
    uint64_t d = dm.get_ui();
    return residue(mulmod_u64(n, invmod_u64(d, p), p), p);
}

std::string Coeff::str() const {
    if (p_) return std::to_string(r_);
    return q_.get_str();
}

}  // namespace lefschetz
