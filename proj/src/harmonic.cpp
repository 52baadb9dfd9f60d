#include "mhs/harmonic.hpp"

namespace mhs {

namespace {

CycNum sigma_bounded(long bound, const HarIndex& idx, bool strict) {
    const int N = idx.level;
    const size_t d = idx.depth();
    long top = strict ? bound - 1 : bound;
    // S_j(m) = sum over chains of length j ending below m; computed as a
    // rolling prefix-sum per depth level.
    std::vector<CycNum> prev(top + 1, CycNum::zero(N));
    for (long m = 0; m <= top; ++m) prev[m] = CycNum::one(N);
    std::vector<CycNum> cur(top + 1, CycNum::zero(N));
    for (size_t j = 0; j < d; ++j) {
        CycNum acc = CycNum::zero(N);
        for (long m = 1; m <= top; ++m) {
            // term for n_j = m uses S_{j-1} over n_{j-1} < m
            CycNum term = prev[m - 1];
            term = term.scaled(rat_pow(Rat(m), -idx.exponents[j]));
            if (N > 1 && idx.ratios[j] != 0)
                term = term * CycNum::root_power(N, (long)idx.ratios[j] * m);
            acc += term;
            cur[m] = acc;
        }
        cur[0] = CycNum::zero(N);
        std::swap(prev, cur);
    }
    CycNum total = d == 0 ? CycNum::one(N) : prev[top];
    if (N > 1 && idx.outer != 0) total = total * CycNum::root_power(N, -(long)idx.outer * bound);
    return total;
}

}  // namespace

CycNum sigma(long n, const HarIndex& idx) {
    if (n < 1) throw error("sigma: n must be >= 1");
    return sigma_bounded(n, idx, true);
}

CycNum sigma_leq(long n, const HarIndex& idx) {
    if (n < 1) throw error("sigma_leq: n must be >= 1");
    return sigma_bounded(n, idx, false);
}

CycNum har(long n, const HarIndex& idx) {
    idx.require_classical();
    return sigma(n, idx).scaled(rat_pow(Rat(n), idx.weight()));
}

CycNum sigma_of_sum(long n, const IndexSum& s) {
    CycNum acc;
    bool first = true;
    for (const auto& [idx, c] : s.terms) {
        CycNum v = sigma(n, idx) * c;
        acc = first ? v : acc + v;
        first = false;
    }
    if (first) return CycNum(Rat(0), 1);
    return acc;
}

CycNum har_of_sum(long n, const IndexSum& s) {
    CycNum acc;
    bool first = true;
    for (const auto& [idx, c] : s.terms) {
        CycNum v = har(n, idx) * c;
        acc = first ? v : acc + v;
        first = false;
    }
    if (first) return CycNum(Rat(0), 1);
    return acc;
}

ModInt sigma_mod(long p, const HarIndex& idx) {
    if (idx.level != 1) throw mixed_levels(idx.level, 1);
    if (!is_prime(p)) throw error("sigma_mod: p must be prime");
    const size_t d = idx.depth();
    if (d == 0) return ModInt(1, p);
    // modular inverses of 1..p-1 in O(p)
    std::vector<int64_t> inv(p, 0);
    inv[1] = 1;
    for (long i = 2; i < p; ++i) inv[i] = (p - (p / i) * inv[p % i] % p) % p;
    std::vector<int64_t> prev(p, 1);  // S_0 prefix: count of empty chains
    std::vector<int64_t> cur(p, 0);
    for (size_t j = 0; j < d; ++j) {
        long s = idx.exponents[j];
        int64_t acc = 0;
        cur[0] = 0;
        for (long m = 1; m < p; ++m) {
            int64_t pw = s >= 0 ? mod_pow(inv[m], s, p) : mod_pow(m, -s, p);
            acc = (acc + (__int128)prev[m - 1] * pw) % p;
            cur[m] = acc;
        }
        std::swap(prev, cur);
    }
    return ModInt(prev[p - 1], p);
}

MonotonicityReport monotonicity_scan(const HarIndex& idx, long n_max) {
    if (idx.level != 1)
        throw error("monotonicity_scan needs a positivity certificate: N = 1 only");
    idx.require_classical();
    MonotonicityReport rep;
    if (idx.depth() == 0) {
        rep.degenerate = true;
        rep.distinct_values = 1;
        return rep;
    }
    Rat prev_val = har(1, idx).rational_part();
    rep.distinct_values = 1;
    bool on_plateau = (prev_val == 0);
    if (on_plateau) rep.plateau_length = 1;
    for (long n = 1; n < n_max; ++n) {
        Rat next_val = har(n + 1, idx).rational_part();
        if (next_val == 0 && on_plateau) {
            ++rep.plateau_length;
            prev_val = next_val;
            continue;
        }
        on_plateau = false;
        if (!(prev_val < next_val)) {
            rep.pass = false;
            rep.witness = n;
            return rep;
        }
        ++rep.distinct_values;
        prev_val = next_val;
    }
    return rep;
}

DegreeCheckReport poly_degree_check(const HarIndex& idx, long n_lo, long n_hi) {
    DegreeCheckReport rep;
    long d = (long)idx.depth();
    for (long n = n_lo; n <= n_hi; ++n) {
        // P_{s,n} carries T_{d+1}^n on every term, and the summation range
        // 0 < n_1 < ... < n_d < n is nonempty iff n > d.
        long deg = n > d ? n : -1;
        rep.degrees.emplace_back(n, deg);
    }
    for (size_t i = 0; i < rep.degrees.size(); ++i)
        for (size_t j = i + 1; j < rep.degrees.size(); ++j)
            if (rep.degrees[i].second >= 0 && rep.degrees[i].second == rep.degrees[j].second)
                rep.pass = false;
    return rep;
}

std::vector<HarIndex> compositions(long weight) {
    std::vector<HarIndex> out;
    if (weight <= 0) return out;
    // compositions of `weight` via subset of cut points
    for (long mask = 0; mask < (1L << (weight - 1)); ++mask) {
        std::vector<long> parts;
        long cur = 1;
        for (long i = 0; i < weight - 1; ++i) {
            if (mask & (1L << i)) {
                parts.push_back(cur);
                cur = 1;
            } else {
                ++cur;
            }
        }
        parts.push_back(cur);
        out.push_back(HarIndex::from_display(parts, 1));
    }
    return out;
}

std::vector<HarIndex> compositions_up_to(long max_weight) {
    std::vector<HarIndex> out;
    for (long s = 1; s <= max_weight; ++s) {
        std::vector<HarIndex> ws = compositions(s);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

}  // namespace mhs
