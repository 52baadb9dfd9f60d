#include "mhs/rat.hpp"

namespace mhs {

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (q == 0) throw error("0 has no negative power");
        return rat_pow(Rat(1) / q, -e);
    }
    Rat base = q, res = 1;
    long n = e;
    while (n) {
        if (n & 1) res *= base;
        base *= base;
        n >>= 1;
    }
    return res;
}

Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Rat binomial(long n, long k) {
    if (k < 0) return Rat(0);
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= Int(n - i);
    return rat(num, factorial(k));
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long n = std::max(lo, 2L); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

std::vector<std::pair<long, long>> factorize(long n) {
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            long a = 0;
            while (n % p == 0) n /= p, ++a;
            out.emplace_back(p, a);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Valuation padic_valuation(const Rat& q, long p) {
    if (q == 0) return Valuation::infinity();
    long v = 0;
    Int n = q.get_num();
    Int d = q.get_den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p, ++v;
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= p, --v;
    return Valuation::of(v);
}

int64_t mod_inverse(int64_t a, int64_t p) {
    // extended gcd; a must be nonzero mod p
    int64_t t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw error("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

int64_t mod_pow(int64_t a, long e, int64_t p) {
    a = ((a % p) + p) % p;
    if (e < 0) return mod_pow(mod_inverse(a, p), -e, p);
    int64_t r = 1 % p;
    while (e) {
        if (e & 1) r = (__int128)r * a % p;
        a = (__int128)a * a % p;
        e >>= 1;
    }
    return r;
}

ModInt mod_add(ModInt a, ModInt b) {
    if (a.p != b.p) throw error("mod_add: different moduli");
    return ModInt((a.r + b.r) % a.p, a.p);
}

ModInt mod_mul(ModInt a, ModInt b) {
    if (a.p != b.p) throw error("mod_mul: different moduli");
    return ModInt((__int128)a.r * b.r % a.p, a.p);
}

ModInt mod_reduce(const Rat& q, long p) {
    Valuation v = padic_valuation(q, p);
    if (!v.infinite && v.v < 0) throw denominator_divisible(p);
    int64_t num = (int64_t)mpz_fdiv_ui(q.get_num().get_mpz_t(), (unsigned long)p);
    int64_t den = (int64_t)mpz_fdiv_ui(q.get_den().get_mpz_t(), (unsigned long)p);
    return ModInt(num * mod_inverse(den, p) % p, p);
}

bool fil_member(const Rat& q, long s, const Filtration& fil) {
    switch (fil.kind) {
        case Filtration::Kind::trivial:
            return is_integer(q);
        case Filtration::Kind::factorial:
            return is_integer(Rat(factorial(s)) * q);
        case Filtration::Kind::user: {
            if (s < 0 || (size_t)s >= fil.denominators.size())
                throw error("fil_member: user filtration has no level " + std::to_string(s));
            return is_integer(Rat(fil.denominators[s]) * q);
        }
    }
    return false;
}

}  // namespace mhs
