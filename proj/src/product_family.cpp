#include "zdb/product_family.hpp"

#include <algorithm>
#include <string>

#include "zdb/error.hpp"

namespace zdb {
namespace {

GroupElement multiply(const GroupSpec& group, GroupElement a, GroupElement b) {
    auto x = group.coordinates(a);
    const auto y = group.coordinates(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = group.fields()[i].mul(x[i], y[i]);
    return group.from_coordinates(x);
}

void require_exponent(const GroupSpec& group, Support support, std::uint64_t e) {
    if (e <= 1) throw Error(ErrorCode::BadExponent, "e must be greater than 1");
    const auto& fields = group.fields();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (!support.contains(i + 1)) continue;
        const std::uint64_t units = fields[i].order() - 1;
        if (units % e != 0) {
            throw Error(ErrorCode::BadExponent, "e = " + std::to_string(e) + " does not divide " +
                                                    std::to_string(fields[i].order()) + " - 1");
        }
    }
}

Support full_support(const GroupSpec& group) {
    return Support{(1u << group.fields().size()) - 1};
}

}  // namespace

ProductFamilyParams make_product_params(const std::vector<std::uint64_t>& q, std::uint64_t e,
                                        bool allow_repeated_primes) {
    const auto group = GroupSpec::product(q, allow_repeated_primes);
    require_exponent(group, full_support(group), e);
    ProductFamilyParams params;
    params.q = q;
    params.e = e;
    params.n = group.order();
    for (auto qi : q) params.f.push_back((qi - 1) / e);
    return params;
}

std::vector<GroupElement> support_subgroup(const GroupSpec& group, Support support,
                                           std::uint64_t e) {
    if (group.is_cyclic()) {
        throw Error(ErrorCode::CyclicGroupHasNoSupport, "support is defined for product groups only");
    }
    if (support.empty()) throw Error(ErrorCode::EmptySupport, "support class needs a nonempty set");
    require_exponent(group, support, e);

    const auto& fields = group.fields();
    std::vector<FieldElement> gen(fields.size()), one(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (!support.contains(i + 1)) continue;
        const auto f = static_cast<std::int64_t>((fields[i].order() - 1) / e);
        gen[i] = fields[i].pow(fields[i].generator(), f);
        one[i] = FieldElement{1};
    }
    const GroupElement step = group.from_coordinates(gen);
    std::vector<GroupElement> out{group.from_coordinates(one)};
    for (std::uint64_t t = 1; t < e; ++t) out.push_back(multiply(group, out.back(), step));
    return out;
}

std::vector<std::vector<GroupElement>> coset_decompose(const GroupSpec& group, Support support,
                                                       std::uint64_t e) {
    const auto subgroup = support_subgroup(group, support, e);
    std::vector<bool> covered(group.order(), false);
    std::vector<std::vector<GroupElement>> cosets;
    for (auto alpha : group.enumerate_support_class(support)) {
        if (covered[alpha.index]) continue;
        std::vector<GroupElement> coset;
        coset.reserve(subgroup.size());
        for (auto d : subgroup) {
            const auto x = multiply(group, alpha, d);
            covered[x.index] = true;
            coset.push_back(x);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

ZdbParams predicted_product_params(const std::vector<std::uint64_t>& q, std::uint64_t e) {
    std::uint64_t n = 1;
    for (auto qi : q) n *= qi;
    ZdbParams p;
    p.n = n;
    p.ell_bar = (n + e - 1) / e;
    p.lambda = static_cast<std::int64_t>(e) - 1;
    p.tau.assign((n - 1) / e, e);
    p.tau.insert(p.tau.begin(), 1);
    return p;
}

ZdbFunction construct_product(const std::vector<std::uint64_t>& q, std::uint64_t e,
                              bool allow_repeated_primes) {
    const auto params = make_product_params(q, e, allow_repeated_primes);
    auto group = GroupSpec::product(q, allow_repeated_primes);
    std::vector<std::uint32_t> labels(group.order(), 0);
    std::uint32_t next = 1;
    for (std::uint32_t mask = 1; mask <= full_support(group).mask; ++mask) {
        for (const auto& coset : coset_decompose(group, Support{mask}, e)) {
            for (auto x : coset) labels[x.index] = next;
            ++next;
        }
    }
    FamilyInfo info{FamilyKind::Product, params.q, params.e, 0};
    return ZdbFunction(std::move(group), std::move(labels), std::move(info));
}

}  // namespace zdb
