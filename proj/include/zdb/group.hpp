#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "zdb/algebra.hpp"

namespace zdb {

/// Dense index of an element. For product groups this is the mixed-radix
/// encoding of (x_1, ..., x_k) with x_1 least significant.
struct GroupElement {
    std::uint32_t index = 0;

    auto operator<=>(const GroupElement&) const = default;
};

/// Set of nonzero coordinates of a product-group element; bit i stands for
/// coordinate i + 1.
struct Support {
    std::uint32_t mask = 0;

    bool empty() const noexcept { return mask == 0; }
    bool contains(std::size_t coordinate) const noexcept {
        return coordinate >= 1 && ((mask >> (coordinate - 1)) & 1u) != 0;
    }
    auto operator<=>(const Support&) const = default;
};

enum class GroupKind { Cyclic, Product };

/// Either Z_n or the additive group of GF(q_1) x ... x GF(q_k).
class GroupSpec {
public:
    /// Throws TooLarge when n > 2^20, InvalidElement when n < 2.
    static GroupSpec cyclic(std::uint64_t n);

    /// Throws NotPrimePower, DuplicateFieldOrder, TooLarge, and RepeatedPrime
    /// (two orders sharing a characteristic) unless allow_repeated_primes.
    static GroupSpec product(const std::vector<std::uint64_t>& orders,
                             bool allow_repeated_primes = false);

    GroupKind kind() const noexcept { return kind_; }
    bool is_cyclic() const noexcept { return kind_ == GroupKind::Cyclic; }
    std::uint32_t order() const noexcept { return n_; }
    /// Empty for cyclic groups.
    const std::vector<FieldSpec>& fields() const noexcept { return fields_; }
    std::vector<std::uint64_t> field_orders() const;
    bool allows_repeated_primes() const noexcept { return allow_repeated_primes_; }

    bool contains(GroupElement a) const noexcept { return a.index < n_; }

    GroupElement add(GroupElement a, GroupElement b) const noexcept {
        return GroupElement{add_index(a.index, b.index)};
    }
    GroupElement neg(GroupElement a) const noexcept;
    GroupElement sub(GroupElement a, GroupElement b) const noexcept {
        return add(a, neg(b));
    }

    /// Raw-index addition used by the O(n^2) verification loops.
    std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const noexcept {
        if (kind_ == GroupKind::Cyclic) {
            const std::uint32_t s = a + b;
            return s >= n_ ? s - n_ : s;
        }
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            const std::uint32_t q = fields_[i].order();
            const std::uint32_t x = (a / stride_[i]) % q;
            const std::uint32_t y = (b / stride_[i]) % q;
            out += fields_[i].add(FieldElement{x}, FieldElement{y}).value * stride_[i];
        }
        return out;
    }

    /// out[x] = x + a for every x; out.size() must equal order(). O(n), and
    /// much cheaper per element than add_index on product groups.
    void translate_all(std::uint32_t a, std::span<std::uint32_t> out) const;

    /// Coordinate vector of a product-group element.
    std::vector<FieldElement> coordinates(GroupElement a) const;
    GroupElement from_coordinates(const std::vector<FieldElement>& coords) const;

    /// Throws CyclicGroupHasNoSupport for cyclic groups.
    Support support_of(GroupElement a) const;
    /// All elements with support exactly `support`, ascending. Throws
    /// EmptySupport, CyclicGroupHasNoSupport.
    std::vector<GroupElement> enumerate_support_class(Support support) const;

    bool operator==(const GroupSpec& other) const noexcept {
        return kind_ == other.kind_ && n_ == other.n_ && fields_ == other.fields_;
    }

private:
    GroupSpec() = default;

    GroupKind kind_ = GroupKind::Cyclic;
    std::uint32_t n_ = 0;
    bool allow_repeated_primes_ = false;
    std::vector<FieldSpec> fields_;
    std::vector<std::uint32_t> stride_;
};

}  // namespace zdb
