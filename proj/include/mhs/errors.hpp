#pragma once

#include <stdexcept>
#include <string>

namespace mhs {

// Base class for all arithmetic / contract violations raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct mixed_levels : error {
    mixed_levels(int a, int b)
        : error("mixed cyclotomic levels: N=" + std::to_string(a) + " vs N=" + std::to_string(b)) {}
};

struct cap_mismatch : error {
    cap_mismatch(int a, int b)
        : error("series cap mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct localized_letter : error {
    localized_letter() : error("inverted letter in a non-localized context") {}
};

struct bad_index : error {
    explicit bad_index(const std::string& what) : error(what) {}
};

struct generalized_index : error {
    generalized_index() : error("operation requires a classical index (all exponents >= 1)") {}
};

struct denominator_divisible : error {
    explicit denominator_divisible(long p)
        : error("denominator divisible by p=" + std::to_string(p)) {}
};

struct endpoint_mismatch : error {
    endpoint_mismatch() : error("path endpoints do not match") {}
};

struct endpoints_not_in_m : error {
    endpoints_not_in_m() : error("path endpoints are not in M") {}
};

struct arity_mismatch : error {
    arity_mismatch() : error("number of function handles does not match class depth") {}
};

struct nonzero_constant_term : error {
    nonzero_constant_term() : error("series has a nonzero constant term") {}
};

struct cap_too_small : error {
    explicit cap_too_small(const std::string& what) : error(what) {}
};

struct log_required : error {
    log_required() : error("integration against dz/z of a nonzero constant term needs a log") {}
};

struct not_star_word : error {
    not_star_word() : error("word ends in e0, not in the star subspace") {}
};

struct window_too_small : error {
    explicit window_too_small(const std::string& what) : error(what) {}
};

struct monotonicity_violation : error {
    long witness;
    explicit monotonicity_violation(long n)
        : error("har_n >= har_{n+1} at n=" + std::to_string(n)), witness(n) {}
};

struct usage_error : error {
    explicit usage_error(const std::string& what) : error(what) {}
};

}  // namespace mhs
