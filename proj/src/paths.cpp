#include "mhs/paths.hpp"

#include <algorithm>
#include <sstream>

namespace mhs {

ProPath::ProPath(long lo_, long hi_, std::vector<std::pair<long, int>> st)
    : lo(lo_), hi(hi_), steps(std::move(st)) {
    if (lo >= hi) throw error("ProPath: needs lo < hi");
    long prev = lo;
    for (const auto& [v, m] : steps) {
        if (v <= prev || v >= hi || m < 1) throw error("ProPath: steps must increase in ]lo,hi[");
        prev = v;
    }
}

long ProPath::letter_count() const {
    long c = 0;
    for (const auto& [v, m] : steps) c += m;
    return c;
}

bool ProPath::operator<(const ProPath& o) const {
    if (lo != o.lo) return lo < o.lo;
    if (hi != o.hi) return hi < o.hi;
    return steps < o.steps;
}

std::string ProPath::str() const {
    std::ostringstream out;
    out << '(' << lo;
    for (const auto& [v, m] : steps)
        for (int i = 0; i < m; ++i) out << (i == 0 ? '<' : '=') << v;
    out << '<' << hi << ')';
    return out.str();
}

PathClass::PathClass(std::string p) : pattern(std::move(p)) {
    for (char c : pattern)
        if (c != '<' && c != '=') throw error("PathClass: pattern may only contain '<' and '='");
    if (!pattern.empty() && pattern[0] != '<')
        throw error("PathClass: pattern must open with '<'");
}

long PathClass::depth() const {
    return (long)std::count(pattern.begin(), pattern.end(), '<');
}

bool PathClass::operator<(const PathClass& o) const {
    if (pattern.size() != o.pattern.size()) return pattern.size() < o.pattern.size();
    return pattern < o.pattern;
}

Word PathClass::to_word() const {
    Word w;
    for (char c : pattern) w.letters.push_back(c == '=' ? e0() : ez(1));
    return w;
}

PathClass PathClass::from_word(const Word& w) {
    std::string p;
    for (const Letter& l : w.letters) {
        if (l.inverted || l.index > 1) throw error("PathClass: word must be over {e0, e1}");
        p += l.is_e0() ? '=' : '<';
    }
    return PathClass(p);
}

PathClass class_of(const ProPath& p) {
    std::string pat;
    for (const auto& [v, m] : p.steps) {
        pat += '<';
        pat.append((size_t)(m - 1), '=');
    }
    return PathClass(pat);
}

void PathSum::add(const ProPath& p, long c) {
    if (p.lo != lo || p.hi != hi) throw endpoint_mismatch();
    if (p.depth() > hi - lo - 1) return;  // quotient convention: dropped
    auto it = terms.find(p);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

std::string PathSum::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << "*";
        out << p.str();
    }
    return out.str();
}

ProPath compose_paths(const ProPath& a, const ProPath& b) {
    if (a.hi != b.lo) throw endpoint_mismatch();
    std::vector<std::pair<long, int>> steps = a.steps;
    steps.emplace_back(a.hi, 1);
    steps.insert(steps.end(), b.steps.begin(), b.steps.end());
    return ProPath(a.lo, b.hi, std::move(steps));
}

PathSum pre_quasi_shuffle(const ProPath& a, const ProPath& b) {
    if (a.lo != b.lo || a.hi != b.hi) throw endpoint_mismatch();
    std::map<long, int> mult;
    for (const auto& [v, m] : a.steps) mult[v] += m;
    for (const auto& [v, m] : b.steps) mult[v] += m;
    PathSum out(a.lo, a.hi);
    out.add(ProPath(a.lo, a.hi, {mult.begin(), mult.end()}), 1);
    return out;
}

PathSum pre_quasi_shuffle(const PathSum& a, const PathSum& b) {
    if (a.lo != b.lo || a.hi != b.hi) throw endpoint_mismatch();
    PathSum out(a.lo, a.hi);
    for (const auto& [p, cp] : a.terms)
        for (const auto& [q, cq] : b.terms) {
            PathSum one = pre_quasi_shuffle(p, q);
            for (const auto& [r, cr] : one.terms) out.add(r, cp * cq * cr);
        }
    return out;
}

namespace {

void enumerate_values(long lo, long hi, long count, std::vector<long>& acc,
                      const std::function<void(const std::vector<long>&)>& emit) {
    if (count == 0) {
        emit(acc);
        return;
    }
    for (long v = (acc.empty() ? lo : acc.back()) + 1; v <= hi - count; ++v) {
        acc.push_back(v);
        enumerate_values(lo, hi, count - 1, acc, emit);
        acc.pop_back();
    }
}

std::vector<int> class_multiplicities(const PathClass& cls) {
    std::vector<int> mult;
    for (char c : cls.pattern) {
        if (c == '<')
            mult.push_back(1);
        else
            ++mult.back();
    }
    return mult;
}

}  // namespace

std::vector<ProPath> class_paths(const PathClass& cls, long lo, long hi) {
    std::vector<int> mult = class_multiplicities(cls);
    std::vector<ProPath> out;
    std::vector<long> acc;
    enumerate_values(lo, hi, (long)mult.size(), acc, [&](const std::vector<long>& vals) {
        std::vector<std::pair<long, int>> steps;
        for (size_t i = 0; i < vals.size(); ++i) steps.emplace_back(vals[i], mult[i]);
        out.push_back(ProPath(lo, hi, std::move(steps)));
    });
    return out;
}

std::map<PathClass, long> class_pre_quasi_shuffle(const PathClass& a, const PathClass& b,
                                                  long lo, long hi) {
    std::map<PathClass, long> out;
    for (const ProPath& pa : class_paths(a, lo, hi)) {
        for (const ProPath& pb : class_paths(b, lo, hi)) {
            PathSum s = pre_quasi_shuffle(pa, pb);
            for (const auto& [r, c] : s.terms) out[class_of(r)] += c;
        }
    }
    // Each overlay class is hit once per member path, so divide by the
    // class size to read off the stuffle coefficients.
    for (auto it = out.begin(); it != out.end();) {
        long size = (long)class_paths(it->first, lo, hi).size();
        if (size == 0 || it->second % size != 0)
            throw error("class_pre_quasi_shuffle: product does not descend to classes");
        it->second /= size;
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

Rat coupling(const PathClass& cls, const std::vector<std::function<Rat(long)>>& fs, long lo,
             long hi) {
    if ((long)fs.size() != cls.depth()) throw arity_mismatch();
    Rat total(0);
    for (const ProPath& p : class_paths(cls, lo, hi)) {
        Rat prod(1);
        for (size_t i = 0; i < p.steps.size(); ++i) {
            const auto& [v, m] = p.steps[i];
            for (int k = 0; k < m; ++k) prod *= fs[i](v);
        }
        total += prod;
    }
    return total;
}

DeltaM delta_M(const ProPath& p, const MSet& M) {
    if (!M.contains(p.lo) || !M.contains(p.hi)) throw endpoints_not_in_m();
    DeltaM out;
    std::vector<std::pair<long, int>> restricted;
    for (const auto& [v, m] : p.steps)
        if (M.contains(v)) restricted.emplace_back(v, m);
    out.restricted = ProPath(p.lo, p.hi, restricted);
    // gap between consecutive M-points (endpoints included)
    std::vector<long> cuts;
    cuts.push_back(p.lo);
    for (const auto& [v, m] : restricted) cuts.push_back(v);
    cuts.push_back(p.hi);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        std::vector<std::pair<long, int>> sub;
        for (const auto& [v, m] : p.steps)
            if (v > cuts[i] && v < cuts[i + 1] && !M.contains(v)) sub.emplace_back(v, m);
        out.gaps.push_back(ProPath(cuts[i], cuts[i + 1], std::move(sub)));
    }
    return out;
}

namespace {

// sum over a < x_1 < ... < x_k < b with every x banned from skip (multiples
// of `skip` when > 0) of prod fs[j](x_j); fs are per-position CycNum factors.
CycNum gap_sum(const std::vector<std::function<CycNum(long)>>& fs, size_t j0, size_t j1, long a,
               long b, long skip, int level) {
    if (j0 == j1) return CycNum::one(level);
    CycNum acc = CycNum::zero(level);
    for (long x = a + 1; x < b; ++x) {
        if (skip > 0 && x % skip == 0) continue;
        CycNum rest = gap_sum(fs, j0 + 1, j1, x, b, skip, level);
        acc += fs[j0](x) * rest;
    }
    return acc;
}

std::vector<std::function<CycNum(long)>> index_factors(const HarIndex& idx) {
    std::vector<std::function<CycNum(long)>> fs;
    const int N = idx.level;
    for (size_t j = 0; j < idx.depth(); ++j) {
        long s = idx.exponents[j];
        int y = idx.ratios[j];
        fs.push_back([s, y, N](long x) {
            CycNum v(rat_pow(Rat(x), -s), N);
            if (N > 1 && y != 0) v = v * CycNum::root_power(N, (long)y * x);
            return v;
        });
    }
    return fs;
}

CycNum outer_factor(const HarIndex& idx, long n) {
    if (idx.level > 1 && idx.outer != 0)
        return CycNum::root_power(idx.level, -(long)idx.outer * n);
    return CycNum::one(idx.level);
}

}  // namespace

CycNum split_sum(long m, long n, const HarIndex& idx) {
    if (m < 2 || n < 1) throw error("split_sum: needs m >= 2, n >= 1");
    idx.require_classical();
    const int N = idx.level;
    const size_t d = idx.depth();
    std::vector<std::function<CycNum(long)>> fs = index_factors(idx);
    CycNum total = CycNum::zero(N);
    // T = positions whose variable is a multiple of m, encoded as a bitmask.
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
        std::vector<size_t> T;
        for (size_t j = 0; j < d; ++j)
            if (mask & (1ul << j)) T.push_back(j);
        // quotient tuple 0 < q_1 < ... < q_k < n for the T positions
        std::vector<long> q;
        std::function<void(size_t)> rec = [&](size_t t) {
            if (t == T.size()) {
                CycNum prod = CycNum::one(N);
                for (size_t i = 0; i < T.size(); ++i) prod = prod * fs[T[i]](m * q[i]);
                // gaps: variables strictly between consecutive selected
                // multiples, skipping multiples of m
                size_t pos = 0;
                long lo = 0;
                for (size_t i = 0; i <= T.size(); ++i) {
                    long hi = i < T.size() ? m * q[i] : m * n;
                    size_t next = i < T.size() ? T[i] : d;
                    prod = prod * gap_sum(fs, pos, next, lo, hi, m, N);
                    if (i < T.size()) {
                        pos = T[i] + 1;
                        lo = m * q[i];
                    }
                }
                total += prod;
                return;
            }
            long start = t == 0 ? 1 : q.back() + 1;
            for (long v = start; v < n; ++v) {
                q.push_back(v);
                rec(t + 1);
                q.pop_back();
            }
        };
        rec(0);
    }
    return total * outer_factor(idx, m * n);
}

namespace {

// sum over level profiles: variable x_j = M_{l_j} u_j with the next factor
// not dividing u_j; each profile is one fiber of the iterated split.
CycNum profile_sum(const std::vector<std::function<CycNum(long)>>& fs,
                   const std::vector<long>& levels, const std::vector<long>& cum, long n,
                   int N) {
    const size_t d = fs.size();
    const size_t r = cum.size() - 1;  // number of factors
    CycNum total = CycNum::zero(N);
    std::vector<long> x(d);
    std::function<void(size_t, CycNum)> rec = [&](size_t j, CycNum acc) {
        if (j == d) {
            total += acc;
            return;
        }
        long lvl = levels[j];
        long M = cum[lvl];
        for (long v = (j == 0 ? 0 : x[j - 1]) + 1; v < n; ++v) {
            if (v % M != 0) continue;
            if (lvl < (long)r && (v % cum[lvl + 1]) == 0) continue;
            x[j] = v;
            rec(j + 1, acc * fs[j](v));
        }
    };
    rec(0, CycNum::one(N));
    return total;
}

}  // namespace

CycNum prime_factor_compose(long n, const HarIndex& idx,
                            const std::vector<long>& prime_power_order) {
    if (n < 2) throw error("prime_factor_compose: needs n >= 2");
    idx.require_classical();
    long check = 1;
    for (long f : prime_power_order) check *= f;
    if (check != n) throw error("prime_factor_compose: factors do not multiply to n");
    const int N = idx.level;
    const size_t d = idx.depth();
    std::vector<std::function<CycNum(long)>> fs = index_factors(idx);
    // cumulative moduli M_0 = 1, M_k = m_1 ... m_k
    std::vector<long> cum{1};
    for (long f : prime_power_order) cum.push_back(cum.back() * f);
    const long r = (long)prime_power_order.size();
    CycNum total = CycNum::zero(N);
    std::vector<long> levels(d, 0);
    std::function<void(size_t)> rec = [&](size_t j) {
        if (j == d) {
            total += profile_sum(fs, levels, cum, n, N);
            return;
        }
        for (long l = 0; l <= r; ++l) {
            levels[j] = l;
            rec(j + 1);
        }
    };
    if (d == 0)
        total = CycNum::one(N);
    else
        rec(0);
    return total * outer_factor(idx, n);
}

CycNum prime_factor_compose(long n, const HarIndex& idx) {
    std::vector<long> order;
    for (const auto& [p, a] : factorize(n)) {
        long pw = 1;
        for (long i = 0; i < a; ++i) pw *= p;
        order.push_back(pw);
    }
    return prime_factor_compose(n, idx, order);
}

CycNum NSeqFn::eval(long n) const {
    CycNum acc = CycNum::zero(level);
    for (const auto& [k, c] : geom) {
        if (level > 1 && k != 0)
            acc += c * CycNum::root_power(level, (long)k * n);
        else
            acc += c;
    }
    return acc;
}

NSeqFn NSeqFn::scaled(const CycNum& c) const {
    NSeqFn r(level);
    r.delta_at_minus1 = delta_at_minus1 * c;
    for (const auto& [k, g] : geom) {
        CycNum v = g * c;
        if (!v.is_zero()) r.geom[k] = v;
    }
    return r;
}

NSeqFn NSeqFn::operator+(const NSeqFn& o) const {
    if (level != o.level) throw mixed_levels(level, o.level);
    NSeqFn r = *this;
    r.delta_at_minus1 += o.delta_at_minus1;
    for (const auto& [k, g] : o.geom) {
        auto it = r.geom.find(k);
        if (it == r.geom.end()) {
            if (!g.is_zero()) r.geom[k] = g;
        } else {
            it->second += g;
            if (it->second.is_zero()) r.geom.erase(it);
        }
    }
    return r;
}

bool NSeqFn::operator==(const NSeqFn& o) const {
    return level == o.level && delta_at_minus1 == o.delta_at_minus1 && geom == o.geom;
}

NSeqFn transition_map(int root_index, const NSeqFn& f) {
    NSeqFn r = f;
    if (f.delta_at_minus1.is_zero()) return r;
    // 1_{n=-1} at z_i -> n |-> -z_i^{-n} 1_{n>=0} at 0
    CycNum c = -f.delta_at_minus1;
    r.delta_at_minus1 = CycNum::zero(f.level);
    int k = ((-root_index) % f.level + f.level) % f.level;
    auto it = r.geom.find(k);
    if (it == r.geom.end()) {
        if (!c.is_zero()) r.geom[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) r.geom.erase(it);
    }
    return r;
}

}  // namespace mhs
