#pragma once

#include <cstdint>
#include <vector>

#include "zdb/group.hpp"
#include "zdb/zdb_function.hpp"

namespace zdb {

/// Validated parameters of the generalized-cyclotomy construction on
/// GF(q_1) x ... x GF(q_k): q_i - 1 = e * f_i for every i.
struct ProductFamilyParams {
    std::vector<std::uint64_t> q;
    std::uint64_t e = 0;
    std::vector<std::uint64_t> f;
    std::uint64_t n = 0;

    /// (n - 1) / e + 1
    std::uint64_t image_size() const noexcept { return (n - 1) / e + 1; }
};

/// Throws NotPrimePower, DuplicateFieldOrder, RepeatedPrime, BadExponent.
ProductFamilyParams make_product_params(const std::vector<std::uint64_t>& q, std::uint64_t e,
                                        bool allow_repeated_primes = false);

/// The subgroup D_I of the multiplicative group A_I generated by
/// (g_i^{f_i})_{i in I}, listed as g^0, g^1, ..., g^{e-1}.
std::vector<GroupElement> support_subgroup(const GroupSpec& group, Support support,
                                           std::uint64_t e);

/// Splits the support class A_I into the cosets of D_I. Cosets are sorted
/// internally and listed by ascending minimum element.
std::vector<std::vector<GroupElement>> coset_decompose(const GroupSpec& group, Support support,
                                                       std::uint64_t e);

/// Closed-form parameters (n, (n + e - 1)/e, e - 1), tau = {1, e, ..., e}.
ZdbParams predicted_product_params(const std::vector<std::uint64_t>& q, std::uint64_t e);

/// Label 0 for the zero vector; then one label per coset, supports in
/// ascending bitmask order and cosets by ascending minimum index.
ZdbFunction construct_product(const std::vector<std::uint64_t>& q, std::uint64_t e,
                              bool allow_repeated_primes = false);

}  // namespace zdb
