#include "zdb/group.hpp"

#include <set>
#include <string>

#include "zdb/error.hpp"

namespace zdb {

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidElement, "group order must be at least 2");
    if (n > kMaxOrder) {
        throw Error(ErrorCode::TooLarge, "group order " + std::to_string(n) + " exceeds 2^20");
    }
    GroupSpec g;
    g.kind_ = GroupKind::Cyclic;
    g.n_ = static_cast<std::uint32_t>(n);
    return g;
}

GroupSpec GroupSpec::product(const std::vector<std::uint64_t>& orders,
                             bool allow_repeated_primes) {
    if (orders.empty()) throw Error(ErrorCode::InvalidElement, "product needs at least one field");
    std::set<std::uint64_t> seen_orders;
    std::set<std::uint32_t> seen_primes;
    std::uint64_t n = 1;
    for (auto q : orders) {
        const PrimePower pp = factor_prime_power(q);
        if (!seen_orders.insert(q).second) {
            throw Error(ErrorCode::DuplicateFieldOrder,
                        "field order " + std::to_string(q) + " repeated");
        }
        if (!seen_primes.insert(pp.p).second && !allow_repeated_primes) {
            throw Error(ErrorCode::RepeatedPrime,
                        "characteristic " + std::to_string(pp.p) +
                            " repeated (pass --allow-repeated-primes to override)");
        }
        n *= q;
        if (n > kMaxOrder) {
            throw Error(ErrorCode::TooLarge, "group order exceeds 2^20");
        }
    }

    GroupSpec g;
    g.kind_ = GroupKind::Product;
    g.n_ = static_cast<std::uint32_t>(n);
    g.allow_repeated_primes_ = allow_repeated_primes;
    std::uint32_t stride = 1;
    for (auto q : orders) {
        g.fields_.push_back(build_field(q));
        g.stride_.push_back(stride);
        stride *= static_cast<std::uint32_t>(q);
    }
    return g;
}

std::vector<std::uint64_t> GroupSpec::field_orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& f : fields_) out.push_back(f.order());
    return out;
}

GroupElement GroupSpec::neg(GroupElement a) const noexcept {
    if (kind_ == GroupKind::Cyclic) return GroupElement{a.index == 0 ? 0 : n_ - a.index};
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        const std::uint32_t x = (a.index / stride_[i]) % fields_[i].order();
        out += fields_[i].neg(FieldElement{x}).value * stride_[i];
    }
    return GroupElement{out};
}

void GroupSpec::translate_all(std::uint32_t a, std::span<std::uint32_t> out) const {
    if (kind_ == GroupKind::Cyclic) {
        for (std::uint32_t x = 0; x < n_; ++x) out[x] = x + a >= n_ ? x + a - n_ : x + a;
        return;
    }
    // Fill out[0, stride_i * q_i) one coordinate at a time: the block for
    // digit v of coordinate i is the previous block shifted by (v + a_i).
    const std::uint32_t q0 = fields_[0].order();
    const FieldElement a0{a % q0};
    for (std::uint32_t v = 0; v < q0; ++v) out[v] = fields_[0].add(FieldElement{v}, a0).value;
    for (std::size_t i = 1; i < fields_.size(); ++i) {
        const std::uint32_t q = fields_[i].order();
        const std::uint32_t block = stride_[i];
        const FieldElement ai{(a / stride_[i]) % q};
        for (std::uint32_t v = q; v-- > 0;) {
            const std::uint32_t offset = fields_[i].add(FieldElement{v}, ai).value * block;
            for (std::uint32_t j = 0; j < block; ++j) out[v * block + j] = out[j] + offset;
        }
    }
}

std::vector<FieldElement> GroupSpec::coordinates(GroupElement a) const {
    std::vector<FieldElement> out;
    out.reserve(fields_.size());
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        out.push_back(FieldElement{(a.index / stride_[i]) % fields_[i].order()});
    }
    return out;
}

GroupElement GroupSpec::from_coordinates(const std::vector<FieldElement>& coords) const {
    if (coords.size() != fields_.size()) {
        throw Error(ErrorCode::InvalidElement, "coordinate count does not match group");
    }
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!fields_[i].contains(coords[i])) {
            throw Error(ErrorCode::InvalidElement, "coordinate outside its field");
        }
        out += coords[i].value * stride_[i];
    }
    return GroupElement{out};
}

Support GroupSpec::support_of(GroupElement a) const {
    if (kind_ == GroupKind::Cyclic) {
        throw Error(ErrorCode::CyclicGroupHasNoSupport, "support is defined for product groups only");
    }
    Support s;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if ((a.index / stride_[i]) % fields_[i].order() != 0) s.mask |= 1u << i;
    }
    return s;
}

std::vector<GroupElement> GroupSpec::enumerate_support_class(Support support) const {
    if (kind_ == GroupKind::Cyclic) {
        throw Error(ErrorCode::CyclicGroupHasNoSupport, "support is defined for product groups only");
    }
    if (support.empty()) throw Error(ErrorCode::EmptySupport, "support class needs a nonempty set");
    if (support.mask >> fields_.size() != 0) {
        throw Error(ErrorCode::InvalidElement, "support names a coordinate outside the group");
    }
    // Odometer over the coordinates in the support, first coordinate fastest,
    // which yields ascending indices.
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (support.contains(i + 1)) active.push_back(i);
    }
    std::vector<std::uint32_t> digit(active.size(), 1);
    std::vector<GroupElement> out;
    while (true) {
        std::uint32_t index = 0;
        for (std::size_t j = 0; j < active.size(); ++j) index += digit[j] * stride_[active[j]];
        out.push_back(GroupElement{index});
        std::size_t j = 0;
        for (; j < active.size(); ++j) {
            if (++digit[j] < fields_[active[j]].order()) break;
            digit[j] = 1;
        }
        if (j == active.size()) break;
    }
    return out;
}

}  // namespace zdb
