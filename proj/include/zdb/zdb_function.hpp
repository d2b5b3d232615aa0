#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zdb/group.hpp"

namespace zdb {

enum class FamilyKind { Product, Coset, PairCoset, External };

std::string to_string(FamilyKind kind);
/// Throws FormatError on an unknown name.
FamilyKind family_kind_from_string(const std::string& name);

/// Construction parameters carried alongside a table. Informational only;
/// verification never reads it.
struct FamilyInfo {
    FamilyKind kind = FamilyKind::External;
    std::vector<std::uint64_t> q;  // product
    std::uint64_t e = 0;           // product
    std::uint32_t m = 0;           // coset, pair_coset

    bool operator==(const FamilyInfo&) const = default;
};

/// A total function from a finite abelian group onto the dense label set
/// {0, ..., ell_bar - 1}.
class ZdbFunction {
public:
    /// Throws InvalidTable unless labels has one entry per group element and
    /// uses exactly the labels 0..max.
    ZdbFunction(GroupSpec group, std::vector<std::uint32_t> labels, FamilyInfo family = {});

    /// Accepts arbitrary labels and densifies them by first occurrence.
    static ZdbFunction from_external(GroupSpec group, std::vector<std::uint32_t> labels,
                                     FamilyInfo family = {});

    const GroupSpec& group() const noexcept { return group_; }
    std::span<const std::uint32_t> labels() const noexcept { return labels_; }
    const FamilyInfo& family() const noexcept { return family_; }
    std::uint32_t order() const noexcept { return group_.order(); }
    std::uint32_t image_size() const noexcept { return image_size_; }
    std::uint32_t operator()(GroupElement x) const { return labels_.at(x.index); }

    /// Preimage size of each label, indexed by label.
    std::vector<std::uint64_t> label_histogram() const;
    /// Preimage classes indexed by label, each ascending.
    std::vector<std::vector<std::uint32_t>> preimage_classes() const;

private:
    GroupSpec group_;
    std::vector<std::uint32_t> labels_;
    FamilyInfo family_;
    std::uint32_t image_size_ = 0;
};

/// True iff `labels` uses exactly {0, ..., max}.
bool is_dense(std::span<const std::uint32_t> labels);
/// Relabels to 0, 1, ... in order of first occurrence.
std::vector<std::uint32_t> densify(std::span<const std::uint32_t> labels);

struct ZdbParams {
    std::uint64_t n = 0;
    std::uint64_t ell_bar = 0;
    std::int64_t lambda = 0;
    std::vector<std::uint64_t> tau;  // ascending

    bool operator==(const ZdbParams&) const = default;
};

/// Two shifts whose match counts differ; first_shift is the smallest
/// nonzero shift and second_shift the smallest one disagreeing with it.
struct NotZdb {
    GroupElement first_shift;
    std::int64_t first_count = 0;
    GroupElement second_shift;
    std::int64_t second_count = 0;

    bool operator==(const NotZdb&) const = default;
};

using ZdbVerdict = std::variant<ZdbParams, NotZdb>;

/// c(a) = |{x : f(x + a) = f(x)}| for every a (c(0) = n). O(n^2).
std::vector<std::int64_t> shift_match_counts(const ZdbFunction& f);

/// Exhaustive check of the constant-match-count property.
ZdbVerdict verify_zdb(const ZdbFunction& f);

/// Number of ordered pairs (a, a') in a common preimage class with
/// a - a' = d, for every d (entry 0 counts the pairs a = a', i.e. n).
std::vector<std::int64_t> within_class_coverage(const ZdbFunction& f);
/// Same count over pairs in different classes (entry 0 is always 0).
std::vector<std::int64_t> cross_class_coverage(const ZdbFunction& f);

/// Partition-side oracle: every nonzero d is covered exactly params.lambda
/// times by within-class differences.
bool verify_pdf(const ZdbFunction& f, const ZdbParams& params);

/// sum tau_i (tau_i - 1) == lambda (n - 1) and sum tau_i == n.
bool counting_identity_holds(const ZdbParams& params);

/// Composes labels with `permutation` (label -> new label). Throws
/// NotABijection.
ZdbFunction relabel(const ZdbFunction& f, std::span<const std::uint32_t> permutation);

}  // namespace zdb
