#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdb/zdb_function.hpp"

namespace zdb {

/// Exact fraction in lowest terms with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    bool is_integer() const noexcept { return den == 1; }
    std::string to_string() const;
    bool operator==(const Rational&) const = default;
};

/// Upper bound nd / (nd - n^2 + sum w_i^2) on the size of a constant
/// composition code; nullopt when the denominator is not positive.
/// Throws CompositionMismatch when sum w_i != n.
std::optional<Rational> ccc_bound(std::uint64_t n, std::uint64_t d,
                                  std::span<const std::uint64_t> composition);

/// A constant composition code (n, M, d, [w_0 .. w_{l-1}])_l. Codes derived
/// from a ZDB function keep the function as `generator` and produce word i
/// as the translate x -> f(x + a_i); external codes list their words.
struct CccCode {
    std::uint64_t n = 0;
    std::uint64_t size = 0;
    std::int64_t min_distance = 0;
    std::vector<std::uint64_t> composition;
    std::uint64_t alphabet = 0;
    std::vector<std::vector<std::uint32_t>> codewords;
    std::optional<ZdbFunction> generator;

    std::vector<std::uint32_t> codeword(std::uint64_t i) const;
};

struct CheckResult {
    bool ok = true;
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

/// The translate code of a verified ZDB function: (n, n, n - lambda, tau).
CccCode build_ccc(const ZdbFunction& f, const ZdbParams& params);

/// Copy of `code` with every codeword listed explicitly.
CccCode materialize(const CccCode& code);

/// Checks distinct words, composition of each word, and that the minimum
/// pairwise distance equals the declared one (n for a single word).
/// Generated codes use d(c_i, c_j) = n - c(a_j - a_i); explicit codes are
/// compared pairwise and limited to 512 words.
CheckResult verify_ccc(const CccCode& code);

struct CccCertificate {
    std::optional<Rational> bound;
    bool optimal = false;  // bound exists and equals the code size
};

CccCertificate certify_ccc(const CccCode& code);

/// Smallest r permitted for a DSS with the given n, number of sets and rho:
/// sqrt(SQUARE(rho (n-1) + ceil(rho (n-1) / (ell - 1)))). Throws
/// DegenerateDss when ell < 2, rho < 1 or n < 2.
std::uint64_t dss_bound(std::uint64_t n, std::uint64_t ell, std::int64_t rho);

/// Least r with r * r >= x.
std::uint64_t ceil_sqrt(std::uint64_t x) noexcept;

struct Dss {
    std::uint64_t n = 0;
    std::vector<std::vector<std::uint32_t>> sets;
    std::int64_t rho = 0;
    std::uint64_t r = 0;
    std::uint64_t bound = 0;
    bool perfect = false;
    bool optimal = false;
    /// ell_bar * lambda <= n, the sufficient condition for optimality.
    bool sufficient_condition = false;
    /// Product-group index -> residue mod n, for groups re-indexed via CRT.
    std::optional<std::vector<std::uint32_t>> crt_map;
};

struct DssVerdict {
    bool covers = false;   // every nonzero residue at least rho times
    bool perfect = false;  // every nonzero residue exactly rho times
    std::int64_t min_coverage = 0;
    std::int64_t max_coverage = 0;
};

/// Exhaustive count of the cross-set difference multiset. Throws
/// OverlappingSets, InvalidElement.
DssVerdict verify_dss(std::uint64_t n, const std::vector<std::vector<std::uint32_t>>& sets,
                      std::int64_t rho);
DssVerdict verify_dss(const Dss& dss);

/// Index -> residue map for GF(p_1) x ... x GF(p_k) with distinct primes.
/// Throws NonCyclicGroup if some field is not prime.
std::vector<std::uint32_t> crt_map(const GroupSpec& group);

/// The preimage classes of f as a DSS on Z_n with rho = n - lambda. Throws
/// NonCyclicGroup for product groups with a non-prime field, DegenerateDss
/// for constant functions.
Dss build_dss(const ZdbFunction& f, const ZdbParams& params);

}  // namespace zdb
