#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace zdb {

// Largest group order the artifact supports. All pair counts are at most
// kMaxOrder^2 = 2^40, so std::int64_t is exact for every count we form.
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

struct PrimePower {
    std::uint32_t p = 0;
    std::uint32_t m = 0;

    bool operator==(const PrimePower&) const = default;
};

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors of n in increasing order (n >= 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Splits q = p^m by trial division. Throws NotPrimePower.
PrimePower factor_prime_power(std::uint64_t q);

/// b in [1, n) with a*b = 1 (mod n). Throws NotInvertible when gcd(a, n) > 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

/// An element of GF(p^m), encoded as sum c_j * p^j of its polynomial-basis
/// coefficients.
struct FieldElement {
    std::uint32_t value = 0;

    auto operator<=>(const FieldElement&) const = default;
};

/// A concrete model of GF(p^m).
///
/// The modulus is the smallest monic irreducible polynomial of degree m when
/// its non-leading coefficients are read as the base-p integer
/// c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The generator is the element of
/// smallest encoding with multiplicative order q - 1. For m = 1 the modulus
/// is the placeholder x and arithmetic is plain mod-p arithmetic.
class FieldSpec {
public:
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    /// m + 1 coefficients, constant term first; the last one is 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    FieldElement generator() const noexcept { return generator_; }

    bool contains(FieldElement a) const noexcept { return a.value < q_; }

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept;
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    /// Throws DivisionByZero for a = 0.
    FieldElement inv(FieldElement a) const;
    /// a^t for any integer t; negative t requires a != 0.
    FieldElement pow(FieldElement a, std::int64_t t) const;
    /// Exact multiplicative order. Throws DivisionByZero for a = 0.
    std::uint64_t element_order(FieldElement a) const;

    bool operator==(const FieldSpec& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ &&
               generator_ == other.generator_;
    }

private:
    friend FieldSpec build_field(std::uint64_t q);

    FieldSpec() = default;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    FieldElement generator_;
    // exp_[i] = generator^i for 0 <= i < q - 1; log_[exp_[i]] = i.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Deterministic construction of GF(q). Throws NotPrimePower, TooLarge.
FieldSpec build_field(std::uint64_t q);

namespace detail {

/// Schoolbook product of two encoded elements reduced by `modulus`. Slow;
/// independent of the log tables, used to build and cross-check them.
std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                           const std::vector<std::uint32_t>& modulus);

/// True iff the monic polynomial (constant term first) has no monic factor
/// of degree 1..deg/2 over GF(p).
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace detail

}  // namespace zdb
