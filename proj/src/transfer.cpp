#include "mhs/transfer.hpp"

#include <functional>

#include "mhs/ihara.hpp"
#include "mhs/linalg.hpp"

namespace mhs {

NCSeries star_projection(const NCSeries& f) {
    NCSeries out(f.level(), f.cap());
    for (const auto& [w, c] : f.terms()) {
        if (w.has_inverted()) throw localized_letter();
        // split w = u e_0^l with u empty or ending in a non-e_0 letter
        size_t end = w.size();
        while (end > 0 && w.letters[end - 1].is_e0()) --end;
        long l = (long)(w.size() - end);
        if (l == 0) {
            out.add_to(w, c);
            continue;
        }
        if (end == 0) continue;  // pure e_0 power, sent to 0
        // blocks (s_i, z_i) of u = e_0^{s_d-1} e_{z_d} ... e_0^{s_1-1} e_{z_1},
        // collected in word order (s_d first)
        std::vector<std::pair<long, Letter>> blocks;
        long run = 0;
        for (size_t pos = 0; pos < end; ++pos) {
            const Letter& let = w.letters[pos];
            if (let.is_e0()) {
                ++run;
            } else {
                blocks.emplace_back(run + 1, let);
                run = 0;
            }
        }
        const size_t d = blocks.size();
        std::vector<long> ls(d, 0);
        std::function<void(size_t, long, Rat)> distribute = [&](size_t i, long rem, Rat coef) {
            if (i == d) {
                if (rem != 0) return;
                Word nw;
                for (size_t b = 0; b < d; ++b) {
                    for (long k = 1; k < blocks[b].first + ls[b]; ++k) nw.letters.push_back(e0());
                    nw.letters.push_back(blocks[b].second);
                }
                out.add_to(nw, c.scaled(coef));
                return;
            }
            for (long li = 0; li <= rem; ++li) {
                ls[i] = li;
                distribute(i + 1, rem - li, coef * binomial(-blocks[i].first, li));
            }
        };
        distribute(0, l, Rat(1));
    }
    return out;
}

NCSeries geometric_e0(const Rat& lambda, int level, int cap) {
    NCSeries r(level, cap);
    Rat c(1);
    for (long l = 0; l <= cap; ++l) {
        r.set(word_e0_pow(l), CycNum(c, level));
        c *= -lambda;
    }
    return r;
}

namespace {

// w with every letter e_a replaced by s * e_a (concatenation products).
NCSeries substitute_prefix(const NCSeries& s, const Word& w) {
    NCSeries acc = NCSeries::unit(s.level(), s.cap());
    for (const Letter& l : w.letters) {
        NCSeries letter = NCSeries::monomial(s.level(), s.cap(), Word({l}), CycNum::one(s.level()));
        acc = concat_mul(acc, concat_mul(s, letter));
    }
    return acc;
}

}  // namespace

NCSeries shft_star(const Word& w, int cap) {
    if (!w.empty() && w.letters.back().is_e0()) throw not_star_word();
    int level = std::max(1, w.max_index());
    NCSeries inv = geometric_e0(Rat(1), level, cap);
    NCSeries one_plus(level, cap);
    one_plus.set(Word{}, CycNum::one(level));
    one_plus.set(Word({e0()}), CycNum::one(level));
    NCSeries lhs = shuffle_mul(inv, NCSeries::monomial(level, cap, w, CycNum::one(level)));
    return concat_mul(lhs, one_plus);
}

bool fact_a5_holds(const Word& w, int cap) {
    int level = std::max(1, w.max_index());
    NCSeries inv = geometric_e0(Rat(1), level, cap);
    NCSeries lhs = shuffle_mul(inv, NCSeries::monomial(level, cap, w, CycNum::one(level)));
    NCSeries rhs = concat_mul(substitute_prefix(inv, w), inv);
    return lhs == rhs;
}

bool remark_a5_holds(int level, int cap, const std::vector<Rat>& lambda_by_letter) {
    if ((long)lambda_by_letter.size() != level + 1)
        throw error("remark_a5_holds: one lambda per letter e_0..e_{z_N}");
    // x = sum_a lambda_a e_a; A = 1/(1-x); B = 1/(1-lambda_0 e_0)
    NCSeries x(level, cap);
    for (int a = 0; a <= level; ++a)
        x.set(Word({ez(a)}), CycNum(lambda_by_letter[(size_t)a], level));
    NCSeries one = NCSeries::unit(level, cap);
    NCSeries A = concat_inverse(one - x);
    NCSeries B = geometric_e0(-lambda_by_letter[0], level, cap);
    NCSeries tail(level, cap);
    for (int a = 1; a <= level; ++a)
        tail.set(Word({ez(a)}), CycNum(lambda_by_letter[(size_t)a], level));
    NCSeries rhs = B + concat_mul(concat_mul(B, tail), A);
    return A == rhs;
}

std::optional<Word> transfer_equation_witness(const NCSeries& x, int cap) {
    const int level = x.level();
    std::vector<Word> words{Word{}};
    std::function<void(Word&, int)> gen = [&](Word& w, int rem) {
        if (rem == 0) return;
        for (int i = 0; i <= level; ++i) {
            w.letters.push_back(ez(i));
            words.push_back(w);
            gen(w, rem - 1);
            w.letters.pop_back();
        }
    };
    Word acc;
    gen(acc, cap - 1);
    for (const Word& w : words) {
        if (w.empty()) continue;
        NCSeries lhs = shuffle_mul(x, NCSeries::monomial(level, cap, w, CycNum::one(level)));
        NCSeries rhs = concat_mul(substitute_prefix(x, w), x);
        if (lhs != rhs) return w;
    }
    return std::nullopt;
}

namespace {

std::vector<Word> words_of_weight(int level, int k) {
    std::vector<Word> out;
    std::function<void(Word&)> gen = [&](Word& w) {
        if ((int)w.size() == k) {
            out.push_back(w);
            return;
        }
        for (int i = 0; i <= level; ++i) {
            w.letters.push_back(ez(i));
            gen(w);
            w.letters.pop_back();
        }
    };
    Word w;
    gen(w);
    return out;
}

}  // namespace

TransferReport solve_transfer_equation(int cap, int level, uint64_t seed) {
    if (cap < 2) throw error("solve_transfer_equation: cap must be >= 2");
    TransferReport rep;
    rep.free_parameters = level + 1;

    // Zero branch: y -> y sh e_z is injective on each weight, so x_0 = 0
    // forces every component to vanish in turn.
    rep.zero_branch_forced = true;
    for (int k = 1; k <= cap && rep.zero_branch_forced; ++k) {
        std::vector<Word> cols = words_of_weight(level, k);
        std::vector<Word> rows = words_of_weight(level, k + 1);
        std::map<Word, size_t> row_of;
        for (size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
        std::vector<std::vector<Rat>> m(rows.size(), std::vector<Rat>(cols.size(), Rat(0)));
        for (size_t j = 0; j < cols.size(); ++j) {
            NCSeries sh = shuffle(cols[j], Word({ez(1)}));
            for (const auto& [rw, c] : sh.terms()) m[row_of[rw]][j] += c.rational_part();
        }
        if (exact_rank(m) != (long)cols.size()) rep.zero_branch_forced = false;
    }

    // Unit branch: stack, for every letter z, the linear system
    // x_k sh e_z - x_k e_z - e_z x_k = (known terms); injectivity of the
    // left-hand map gives uniqueness of x_k given x_1.
    for (int k = 2; k <= cap; ++k) {
        std::vector<Word> cols = words_of_weight(level, k);
        std::vector<Word> rows = words_of_weight(level, k + 1);
        std::map<Word, size_t> row_of;
        for (size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
        std::vector<std::vector<Rat>> m((level + 1) * rows.size(),
                                        std::vector<Rat>(cols.size(), Rat(0)));
        for (int z = 0; z <= level; ++z) {
            size_t base = (size_t)z * rows.size();
            for (size_t j = 0; j < cols.size(); ++j) {
                Word lz({ez(z)});
                NCSeries sh = shuffle(cols[j], lz);
                for (const auto& [rw, c] : sh.terms())
                    m[base + row_of[rw]][j] += c.rational_part();
                m[base + row_of[cols[j].concat(lz)]][j] -= 1;
                m[base + row_of[lz.concat(cols[j])]][j] -= 1;
            }
        }
        rep.unique_given_x1.push_back(exact_rank(m) == (long)cols.size());
    }

    // Sampled geometric candidates solve the full equation.
    GrouplikeGen rng(seed);
    rep.geometric_solves = true;
    for (int trial = 0; trial < 3; ++trial) {
        NCSeries x1(level, cap);
        for (int a = 0; a <= level; ++a)
            x1.set(Word({ez(a)}), CycNum(rat(rng.next_in(-3, 3), rng.next_in(1, 2)), level));
        NCSeries x = NCSeries::unit(level, cap);
        NCSeries pw = NCSeries::unit(level, cap);
        for (int s = 1; s <= cap; ++s) {
            pw = concat_mul(pw, x1);
            x = x + pw;
        }
        if (transfer_equation_witness(x, cap)) rep.geometric_solves = false;
    }
    return rep;
}

}  // namespace mhs
