#pragma once

#include <string>
#include <vector>

#include "mhs/finite.hpp"
#include "mhs/goncharov.hpp"
#include "mhs/ihara.hpp"
#include "mhs/localization.hpp"
#include "mhs/paths.hpp"
#include "mhs/transfer.hpp"

namespace mhs {

struct RunConfig {
    int level = 1;
    int cap = 4;
    long pmin = 5;
    long pmax = 200;
    long weight_lo = 2;
    long weight_hi = 4;
    uint64_t seed = 0;
    int workers = 1;
    std::string format = "text";  // json | csv | text
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness or summary, exact strings only
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    long passed() const;
    long failed() const;
    bool all_pass() const { return failed() == 0; }
    void add(const std::string& name, bool pass, const std::string& detail = "");
};

SuiteReport run_hopf_suite(const RunConfig& cfg);
SuiteReport run_harmonic_suite(const RunConfig& cfg);
SuiteReport run_paths_suite(const RunConfig& cfg);
SuiteReport run_ihara_suite(const RunConfig& cfg);
SuiteReport run_goncharov_suite(const RunConfig& cfg);
SuiteReport run_localization_suite(const RunConfig& cfg);
SuiteReport run_transfer_suite(const RunConfig& cfg);

// Every invariant suite, in a fixed order.
std::vector<SuiteReport> run_all_suites(const RunConfig& cfg);

// Deterministic renderings: identical config (including seed) gives
// byte-identical output whatever the worker count.
std::string render_json(const std::vector<SuiteReport>& reports, const RunConfig& cfg);
std::string render_csv(const std::vector<SuiteReport>& reports);
std::string render_text(const std::vector<SuiteReport>& reports);

// Indexed parallel map with deterministic merge order.
void parallel_for_index(long n, int workers, const std::function<void(long)>& fn);

// Words over e_0..e_{z_N} of weight 1..max_weight (empty word excluded).
std::vector<Word> enumerate_words(int level, int max_weight);

}  // namespace mhs
