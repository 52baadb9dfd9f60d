#pragma once

#include <string>
#include <vector>

#include "mhs/rat.hpp"

namespace mhs {

// Elements of Q(xi_N) as rational polynomials in xi reduced mod the N-th
// cyclotomic polynomial.  Reducing mod Phi_N rather than x^N - 1 keeps the
// representation a field, so zero-testing and equality are canonical.
class CycNum {
  public:
    CycNum() : level_(1), c_(1, Rat(0)) {}
    explicit CycNum(const Rat& q, int level = 1);
    CycNum(long n, int level = 1) : CycNum(Rat(n), level) {}

    static CycNum zero(int level) { return CycNum(Rat(0), level); }
    static CycNum one(int level) { return CycNum(Rat(1), level); }
    // xi^k at the given level; k may be any integer (reduced mod N).
    static CycNum root_power(int level, long k);

    int level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // The constant coefficient; only meaningful when is_rational().
    Rat rational_part() const { return c_[0]; }

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum scaled(const Rat& q) const;
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    bool operator<(const CycNum& o) const;  // lexicographic; for ordered maps

    // Exact strings: "45/4" at N=1, "[1/2, -1/3]@N=5" otherwise.
    std::string str() const;

  private:
    int level_;
    std::vector<Rat> c_;  // length = phi(level), degree < deg Phi_N

    void check_level(const CycNum& o) const {
        if (level_ != o.level_) throw mixed_levels(level_, o.level_);
    }
};

CycNum cyc_add(const CycNum& a, const CycNum& b);
CycNum cyc_mul(const CycNum& a, const CycNum& b);

long euler_phi(long n);

// Coefficients of Phi_N, lowest degree first (always integers).
const std::vector<Int>& cyclotomic_polynomial(int n);

// Lift a rational to a chosen level.
inline CycNum promote(const Rat& q, int level) { return CycNum(q, level); }

}  // namespace mhs
