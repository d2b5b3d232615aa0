#include "zdb/zdb_function.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "parallel.hpp"
#include "zdb/error.hpp"

namespace zdb {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Product: return "product";
        case FamilyKind::Coset: return "coset";
        case FamilyKind::PairCoset: return "pair_coset";
        case FamilyKind::External: return "external";
    }
    return "external";
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "product") return FamilyKind::Product;
    if (name == "coset") return FamilyKind::Coset;
    if (name == "pair_coset") return FamilyKind::PairCoset;
    if (name == "external") return FamilyKind::External;
    throw Error(ErrorCode::FormatError, "unknown family '" + name + "'");
}

bool is_dense(std::span<const std::uint32_t> labels) {
    if (labels.empty()) return false;
    const std::uint32_t top = *std::max_element(labels.begin(), labels.end());
    if (top >= labels.size()) return false;
    std::vector<bool> used(top + 1, false);
    for (auto l : labels) used[l] = true;
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

std::vector<std::uint32_t> densify(std::span<const std::uint32_t> labels) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    std::vector<std::uint32_t> out;
    out.reserve(labels.size());
    for (auto l : labels) {
        auto [it, inserted] = remap.try_emplace(l, static_cast<std::uint32_t>(remap.size()));
        out.push_back(it->second);
    }
    return out;
}

ZdbFunction::ZdbFunction(GroupSpec group, std::vector<std::uint32_t> labels, FamilyInfo family)
    : group_(std::move(group)), labels_(std::move(labels)), family_(std::move(family)) {
    if (labels_.size() != group_.order()) {
        throw Error(ErrorCode::InvalidTable, "table has " + std::to_string(labels_.size()) +
                                                 " entries for a group of order " +
                                                 std::to_string(group_.order()));
    }
    if (!is_dense(labels_)) {
        throw Error(ErrorCode::InvalidTable, "labels are not exactly 0..ell_bar-1");
    }
    image_size_ = *std::max_element(labels_.begin(), labels_.end()) + 1;
}

ZdbFunction ZdbFunction::from_external(GroupSpec group, std::vector<std::uint32_t> labels,
                                       FamilyInfo family) {
    auto dense = densify(labels);
    return ZdbFunction(std::move(group), std::move(dense), std::move(family));
}

std::vector<std::uint64_t> ZdbFunction::label_histogram() const {
    std::vector<std::uint64_t> hist(image_size_, 0);
    for (auto l : labels_) ++hist[l];
    return hist;
}

std::vector<std::vector<std::uint32_t>> ZdbFunction::preimage_classes() const {
    std::vector<std::vector<std::uint32_t>> classes(image_size_);
    for (std::uint32_t x = 0; x < labels_.size(); ++x) classes[labels_[x]].push_back(x);
    return classes;
}

std::vector<std::int64_t> shift_match_counts(const ZdbFunction& f) {
    const auto& g = f.group();
    const std::uint32_t n = g.order();
    const auto labels = f.labels();
    std::vector<std::int64_t> counts(n, 0);
    counts[0] = n;
    if (g.is_cyclic()) {
        detail::parallel_for(1, n, [&](std::uint32_t a) {
            std::int64_t c = 0;
            for (std::uint32_t x = 0; x + a < n; ++x) c += labels[x + a] == labels[x];
            for (std::uint32_t x = n - a; x < n; ++x) c += labels[x + a - n] == labels[x];
            counts[a] = c;
        });
    } else {
        detail::parallel_for(1, n, [&](std::uint32_t a) {
            std::vector<std::uint32_t> shifted(n);
            g.translate_all(a, shifted);
            std::int64_t c = 0;
            for (std::uint32_t x = 0; x < n; ++x) c += labels[shifted[x]] == labels[x];
            counts[a] = c;
        });
    }
    return counts;
}

ZdbVerdict verify_zdb(const ZdbFunction& f) {
    const auto counts = shift_match_counts(f);
    const std::uint32_t n = f.order();
    for (std::uint32_t a = 2; a < n; ++a) {
        if (counts[a] != counts[1]) {
            return NotZdb{GroupElement{1}, counts[1], GroupElement{a}, counts[a]};
        }
    }
    ZdbParams params;
    params.n = n;
    params.ell_bar = f.image_size();
    params.lambda = counts[1];
    params.tau = f.label_histogram();
    std::sort(params.tau.begin(), params.tau.end());
    return params;
}

std::vector<std::int64_t> within_class_coverage(const ZdbFunction& f) {
    const auto& g = f.group();
    std::vector<std::int64_t> cover(g.order(), 0);
    for (const auto& cls : f.preimage_classes()) {
        for (auto b : cls) {
            for (auto b2 : cls) ++cover[g.sub(GroupElement{b}, GroupElement{b2}).index];
        }
    }
    return cover;
}

std::vector<std::int64_t> cross_class_coverage(const ZdbFunction& f) {
    const auto& g = f.group();
    const std::uint32_t n = g.order();
    const auto labels = f.labels();
    std::vector<std::uint32_t> negated(n);
    for (std::uint32_t x = 0; x < n; ++x) negated[x] = g.neg(GroupElement{x}).index;
    std::vector<std::int64_t> cover(n, 0);
    std::vector<std::uint32_t> minus_b2(n);
    for (std::uint32_t b2 = 0; b2 < n; ++b2) {
        g.translate_all(negated[b2], minus_b2);
        for (std::uint32_t b = 0; b < n; ++b) {
            if (labels[b] != labels[b2]) ++cover[minus_b2[b]];
        }
    }
    return cover;
}

bool verify_pdf(const ZdbFunction& f, const ZdbParams& params) {
    const auto cover = within_class_coverage(f);
    for (std::size_t d = 1; d < cover.size(); ++d) {
        if (cover[d] != params.lambda) return false;
    }
    return true;
}

bool counting_identity_holds(const ZdbParams& params) {
    std::int64_t total = 0, pairs = 0;
    for (auto t : params.tau) {
        const auto ti = static_cast<std::int64_t>(t);
        total += ti;
        pairs += ti * (ti - 1);
    }
    const auto n = static_cast<std::int64_t>(params.n);
    return total == n && pairs == params.lambda * (n - 1);
}

ZdbFunction relabel(const ZdbFunction& f, std::span<const std::uint32_t> permutation) {
    const std::uint32_t ell = f.image_size();
    if (permutation.size() != ell) {
        throw Error(ErrorCode::NotABijection, "permutation must have one entry per label");
    }
    std::vector<bool> hit(ell, false);
    for (auto p : permutation) {
        if (p >= ell || hit[p]) {
            throw Error(ErrorCode::NotABijection, "permutation is not a bijection on labels");
        }
        hit[p] = true;
    }
    std::vector<std::uint32_t> out;
    out.reserve(f.order());
    for (auto l : f.labels()) out.push_back(permutation[l]);
    return ZdbFunction(f.group(), std::move(out), f.family());
}

}  // namespace zdb
