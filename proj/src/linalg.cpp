#include "mhs/linalg.hpp"

namespace mhs {

long exact_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    Int prev_pivot = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev_pivot;
            m[i][c] = 0;
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return (long)r;
}

long exact_rank(const std::vector<std::vector<Rat>>& m) {
    std::vector<std::vector<Int>> im;
    im.reserve(m.size());
    for (const auto& row : m) {
        Int lcm = 1;
        for (const Rat& q : row) {
            Int den = q.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const Rat& q : row) irow.push_back(q.get_num() * (lcm / q.get_den()));
        im.push_back(std::move(irow));
    }
    return exact_rank(std::move(im));
}

namespace {

Int round_rat(const Rat& q) {
    // floor(q + 1/2): nearest integer, ties rounded up
    Int num = q.get_num(), den = q.get_den();
    Int twice = 2 * num + den;
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
    return r;
}

Rat rabs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace

// Textbook LLL with incremental mu updates and exact rational arithmetic
// (Cohen, Algorithm 2.6.3); assumes linearly independent input rows.
void lll_reduce(std::vector<std::vector<Int>>& b) {
    const size_t n = b.size();
    if (n <= 1) return;
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> B(n, Rat(0));
    // initial Gram-Schmidt coefficients from scratch
    {
        std::vector<std::vector<Rat>> star(n);
        for (size_t i = 0; i < n; ++i) {
            std::vector<Rat> v(b[i].size());
            for (size_t c = 0; c < v.size(); ++c) v[c] = Rat(b[i][c]);
            for (size_t j = 0; j < i; ++j) {
                Rat num(0);
                for (size_t c = 0; c < v.size(); ++c)
                    if (b[i][c] != 0 && star[j][c] != 0) num += Rat(b[i][c]) * star[j][c];
                mu[i][j] = B[j] == 0 ? Rat(0) : num / B[j];
                if (mu[i][j] != 0)
                    for (size_t c = 0; c < v.size(); ++c) v[c] -= mu[i][j] * star[j][c];
            }
            star[i] = std::move(v);
            Rat nrm(0);
            for (const Rat& x : star[i])
                if (x != 0) nrm += x * x;
            B[i] = nrm;
        }
    }
    const Rat half = rat(1, 2);
    const Rat delta = rat(3, 4);
    auto red = [&](size_t k, size_t l) {
        if (rabs(mu[k][l]) <= half) return;
        Int q = round_rat(mu[k][l]);
        for (size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
        mu[k][l] -= Rat(q);
        for (size_t j = 0; j < l; ++j) mu[k][j] -= Rat(q) * mu[l][j];
    };
    size_t k = 1;
    while (k < n) {
        red(k, k - 1);
        if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            // swap b[k] and b[k-1], update the Gram-Schmidt data in place
            Rat m_ = mu[k][k - 1];
            Rat Bk = B[k] + m_ * m_ * B[k - 1];
            mu[k][k - 1] = m_ * B[k - 1] / Bk;
            B[k] = B[k - 1] * B[k] / Bk;
            B[k - 1] = Bk;
            std::swap(b[k], b[k - 1]);
            for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            for (size_t i = k + 1; i < n; ++i) {
                Rat t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m_ * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = k > 1 ? k - 1 : 1;
        } else {
            for (size_t j = k - 1; j-- > 0;) red(k, j);
            ++k;
        }
    }
}

std::vector<std::vector<Int>> congruence_relations(
    const std::vector<std::vector<int64_t>>& rows, const std::vector<long>& primes) {
    const size_t k = rows.size();
    if (k == 0 || primes.empty()) return {};
    // The lattice {c : sum_i c_i rows[i][p] = 0 mod p} over a detection
    // subset, built by intersecting one congruence at a time.
    const size_t detect = std::min<size_t>(primes.size(), 6);
    std::vector<std::vector<Int>> basis(k, std::vector<Int>(k, Int(0)));
    for (size_t i = 0; i < k; ++i) basis[i][i] = 1;
    for (size_t t = primes.size() - detect; t < primes.size(); ++t) {
        long p = primes[t];
        std::vector<int64_t> res(k);
        bool all_zero = true;
        for (size_t j = 0; j < k; ++j) {
            Int s(0);
            for (size_t i = 0; i < k; ++i)
                if (basis[j][i] != 0) s += basis[j][i] * Int(rows[i][t]);
            res[j] = (int64_t)mpz_fdiv_ui(s.get_mpz_t(), (unsigned long)p);
            if (res[j] != 0) all_zero = false;
        }
        if (all_zero) continue;
        size_t j0 = 0;
        while (res[j0] == 0) ++j0;
        int64_t inv = mod_inverse(res[j0], p);
        for (size_t j = 0; j < k; ++j) {
            if (j == j0 || res[j] == 0) continue;
            Int f((int64_t)((__int128)res[j] * inv % p));
            for (size_t i = 0; i < k; ++i) basis[j][i] -= f * basis[j0][i];
        }
        for (size_t i = 0; i < k; ++i) basis[j0][i] *= p;
    }
    lll_reduce(basis);
    // verify each reduced vector against every window prime; the confirmed
    // ones span the detected relation space
    std::vector<std::vector<Int>> confirmed;
    for (const auto& c : basis) {
        bool nonzero = false, ok = true;
        for (const Int& x : c) nonzero = nonzero || x != 0;
        if (!nonzero) continue;
        for (size_t t = 0; t < primes.size() && ok; ++t) {
            Int s(0);
            for (size_t i = 0; i < k; ++i)
                if (c[i] != 0) s += c[i] * Int(rows[i][t]);
            if (!mpz_divisible_ui_p(s.get_mpz_t(), (unsigned long)primes[t])) ok = false;
        }
        if (ok) confirmed.push_back(c);
    }
    return confirmed;
}

}  // namespace mhs
