#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mhs/errors.hpp"

namespace mhs {

// Exact rationals are GMP mpq values; mpq_class keeps them in lowest terms
// with positive denominator, which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// q^e for integer e; e < 0 requires q != 0.
Rat rat_pow(const Rat& q, long e);

Int factorial(long n);

// binom(n, k) for arbitrary integer n >= 0 or negative upper argument,
// via the rising/falling factorial formula: n(n-1)...(n-k+1)/k!.
Rat binomial(long n, long k);

bool is_prime(long n);
std::vector<long> primes_in(long lo, long hi);

// n = p_1^{a_1} ... p_r^{a_r}, returned as (p_i, a_i) with p_1 < p_2 < ...
std::vector<std::pair<long, long>> factorize(long n);

// +infinity is a distinguished token ordered above every integer so that the
// ultrametric laws stay total at q = 0.
struct Valuation {
    bool infinite = false;
    long v = 0;

    static Valuation infinity() { return Valuation{true, 0}; }
    static Valuation of(long x) { return Valuation{false, x}; }

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool operator<(const Valuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return v < o.v;
    }
    bool operator>=(const Valuation& o) const { return !(*this < o); }
    std::string str() const { return infinite ? "+inf" : std::to_string(v); }
};

inline Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return Valuation::infinity();
    return Valuation::of(a.v + b.v);
}

// v_p(q); +inf iff q = 0.
Valuation padic_valuation(const Rat& q, long p);

// Residues mod a prime p.  p stays well within int64 for every window the
// artifact scans, so no big-integer arithmetic here.
struct ModInt {
    int64_t r = 0;
    int64_t p = 0;

    ModInt() = default;
    ModInt(int64_t res, int64_t prime) : r(((res % prime) + prime) % prime), p(prime) {}

    bool operator==(const ModInt& o) const { return r == o.r && p == o.p; }
    bool operator!=(const ModInt& o) const { return !(*this == o); }
};

int64_t mod_inverse(int64_t a, int64_t p);
int64_t mod_pow(int64_t a, long e, int64_t p);  // e may be negative
ModInt mod_add(ModInt a, ModInt b);
ModInt mod_mul(ModInt a, ModInt b);

// Image of q in Z/p; requires v_p(q) >= 0, else denominator_divisible.
ModInt mod_reduce(const Rat& q, long p);

// Increasing ring filtrations on Q with Fil_0 = Z, represented as
// closed-form membership predicates (the paper only ever asks "is q in
// Fil_s", never for the sets themselves).
struct Filtration {
    enum class Kind { trivial, factorial, user } kind = Kind::trivial;
    // Fil_s = (1/denominators[s]) Z for the user kind; index 0 must be 1.
    std::vector<Int> denominators;

    static Filtration trivial() { return Filtration{Kind::trivial, {}}; }
    static Filtration factorial() { return Filtration{Kind::factorial, {}}; }
    static Filtration user(std::vector<Int> dens) {
        return Filtration{Kind::user, std::move(dens)};
    }
};

bool fil_member(const Rat& q, long s, const Filtration& fil);

}  // namespace mhs
