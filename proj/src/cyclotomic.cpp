#include "mhs/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace mhs {

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

// Exact division of integer polynomials, lowest degree first.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        Int lead = num[i + den.size() - 1];
        if (lead == 0) continue;
        q[i] = lead / den.back();
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
    }
    return q;
}

std::map<int, std::vector<Int>> phi_cache;
std::mutex phi_mutex;

// Caller must hold phi_mutex.  Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
const std::vector<Int>& phi_locked(int n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(std::move(num), phi_locked(d));
    return phi_cache.emplace(n, std::move(num)).first->second;
}

// Reduce a rational polynomial (lowest degree first) mod Phi_n.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> p, int n) {
    std::vector<Int> phi = cyclotomic_polynomial(n);
    size_t deg = phi.size() - 1;  // = euler_phi(n)
    while (p.size() > deg) {
        Rat lead = p.back();
        p.pop_back();
        if (lead == 0) continue;
        size_t shift = p.size() - deg;  // Phi_n is monic
        for (size_t j = 0; j < deg; ++j) p[shift + j] -= lead * Rat(phi[j]);
    }
    p.resize(deg, Rat(0));
    return p;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int n) {
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_locked(n);
}

CycNum::CycNum(const Rat& q, int level) : level_(level) {
    if (level < 1) throw error("CycNum: level must be >= 1");
    c_.assign((size_t)euler_phi(level), Rat(0));
    c_[0] = q;
}

CycNum CycNum::root_power(int level, long k) {
    k = ((k % level) + level) % level;
    std::vector<Rat> p((size_t)k + 1, Rat(0));
    p[(size_t)k] = 1;
    CycNum r(Rat(0), level);
    r.c_ = reduce_mod_phi(std::move(p), level);
    return r;
}

bool CycNum::is_zero() const {
    for (const Rat& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycNum CycNum::operator+(const CycNum& o) const {
    check_level(o);
    CycNum r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
    check_level(o);
    CycNum r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (Rat& q : r.c_) q = -q;
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    check_level(o);
    std::vector<Rat> prod(2 * c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    CycNum r(Rat(0), level_);
    r.c_ = reduce_mod_phi(std::move(prod), level_);
    return r;
}

CycNum CycNum::scaled(const Rat& q) const {
    CycNum r = *this;
    for (Rat& x : r.c_) x *= q;
    return r;
}

bool CycNum::operator==(const CycNum& o) const {
    return level_ == o.level_ && c_ == o.c_;
}

bool CycNum::operator<(const CycNum& o) const {
    if (level_ != o.level_) return level_ < o.level_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int cmp = mpq_cmp(c_[i].get_mpq_t(), o.c_[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

std::string CycNum::str() const {
    if (level_ <= 2) return c_[0].get_str();
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].get_str();
    }
    s += "]@N=" + std::to_string(level_);
    return s;
}

CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }

}  // namespace mhs
