#include "mhs/finite.hpp"

#include <sstream>

#include "mhs/linalg.hpp"

namespace mhs {

bool FiniteMZV::all_zero() const {
    for (const ModInt& r : residues)
        if (r.r != 0) return false;
    return true;
}

std::string FiniteMZV::str() const {
    std::ostringstream out;
    out << index.str() << ": [";
    for (size_t i = 0; i < residues.size(); ++i) {
        if (i) out << ", ";
        out << residues[i].r << "@" << window[i];
    }
    out << "]";
    return out.str();
}

FiniteMZV finite_mzv(const HarIndex& idx, const std::vector<long>& window) {
    if (idx.level != 1) throw mixed_levels(idx.level, 1);
    FiniteMZV f;
    f.index = idx;
    f.window = window;
    f.residues.reserve(window.size());
    for (long p : window) {
        if (idx.depth() == 0)
            f.residues.emplace_back(1, p);  // zeta_A(empty) = 1 by convention
        else
            f.residues.push_back(sigma_mod(p, idx));
    }
    return f;
}

std::vector<long> kz_dims(long s_max) {
    // 1/(1 - L^2 - L^3) has d_s = d_{s-2} + d_{s-3}; multiply by 1 - L^2.
    std::vector<long> d(s_max + 3, 0);
    d[0] = 1;
    for (long s = 1; s <= s_max; ++s)
        d[s] = (s >= 2 ? d[s - 2] : 0) + (s >= 3 ? d[s - 3] : 0);
    std::vector<long> c(s_max + 1);
    for (long s = 0; s <= s_max; ++s) c[s] = d[s] - (s >= 2 ? d[s - 2] : 0);
    return c;
}

RankRow weight_rank(long s, const std::vector<long>& window) {
    std::vector<HarIndex> idxs = compositions(s);
    // primes p <= s + 1 see Fermat collapses (p - 1 | s makes sigma_p(s)
    // nonzero), so the congruence families only start above them
    std::vector<long> usable;
    for (long p : window)
        if (p >= s + 2 && p >= 5) usable.push_back(p);
    if ((long)usable.size() < (long)idxs.size())
        throw window_too_small("weight_rank: window smaller than the number of indices");
    std::vector<std::vector<int64_t>> rows;
    rows.reserve(idxs.size());
    for (const HarIndex& idx : idxs) {
        std::vector<int64_t> row;
        row.reserve(usable.size());
        for (long p : usable) row.push_back(sigma_mod(p, idx).r);
        rows.push_back(std::move(row));
    }
    RankRow row;
    row.weight = s;
    row.index_count = (long)idxs.size();
    row.rank = (long)idxs.size() - (long)congruence_relations(rows, usable).size();
    row.conjectured = kz_dims(s)[s];
    return row;
}

bool reversal_check(const HarIndex& idx, const std::vector<long>& window) {
    if (idx.level != 1) throw mixed_levels(idx.level, 1);
    HarIndex rev = idx.reversed();
    long w = idx.weight();
    for (long p : window) {
        ModInt a = sigma_mod(p, idx);
        ModInt b = sigma_mod(p, rev);
        int64_t sign = (w % 2 == 0) ? 1 : p - 1;
        if (a != mod_mul(b, ModInt(sign, p))) return false;
    }
    return true;
}

std::vector<long> default_window(long weight, long pmax) {
    return primes_in(std::max(5L, weight + 2), pmax);
}

}  // namespace mhs
