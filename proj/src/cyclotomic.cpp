#include "zdb/cyclotomic.hpp"

#include <algorithm>
#include <string>

#include "zdb/error.hpp"

namespace zdb {
namespace {

void require_prime_exponent(std::uint32_t m) {
    if (!is_prime(m)) throw Error(ErrorCode::NotPrime, "m must be prime, got " + std::to_string(m));
    if (m >= 32 || (std::uint64_t{1} << m) - 1 > kMaxOrder) {
        throw Error(ErrorCode::TooLarge, "2^" + std::to_string(m) + " - 1 exceeds 2^20");
    }
}

std::vector<std::uint32_t> rank_labels(const std::vector<std::uint32_t>& leaders,
                                       const std::vector<std::uint32_t>& leader_of) {
    std::vector<std::uint32_t> rank(leader_of.size(), 0);
    for (std::uint32_t i = 0; i < leaders.size(); ++i) rank[leaders[i]] = i;
    std::vector<std::uint32_t> labels;
    labels.reserve(leader_of.size());
    for (auto l : leader_of) labels.push_back(rank[l]);
    return labels;
}

}  // namespace

CosetTable build_coset_table(std::uint32_t m) {
    require_prime_exponent(m);
    CosetTable t;
    t.m = m;
    t.n = (1u << m) - 1;
    t.leader_of.assign(t.n, t.n);
    t.size_of.assign(t.n, 0);
    for (std::uint32_t x = 0; x < t.n; ++x) {
        if (t.leader_of[x] != t.n) continue;
        std::vector<std::uint32_t> orbit;
        std::uint32_t y = x;
        do {
            orbit.push_back(y);
            y = static_cast<std::uint32_t>((std::uint64_t{y} * 2) % t.n);
        } while (y != x);
        const std::uint32_t leader = *std::min_element(orbit.begin(), orbit.end());
        for (auto z : orbit) {
            t.leader_of[z] = leader;
            t.size_of[z] = static_cast<std::uint32_t>(orbit.size());
        }
        t.leaders.push_back(leader);
    }
    std::sort(t.leaders.begin(), t.leaders.end());
    return t;
}

PairedCosetTable build_paired_coset_table(std::uint32_t m) {
    require_prime_exponent(m);
    if (m == 2) {
        throw Error(ErrorCode::EvenPrimeNotAllowed, "m must be an odd prime");
    }
    const CosetTable cosets = build_coset_table(m);
    PairedCosetTable t;
    t.m = m;
    t.n = cosets.n;
    t.leader_of.resize(t.n);
    for (std::uint32_t x = 0; x < t.n; ++x) {
        const std::uint32_t minus_x = x == 0 ? 0 : t.n - x;
        t.leader_of[x] = std::min(cosets.leader_of[x], cosets.leader_of[minus_x]);
    }
    for (std::uint32_t x = 0; x < t.n; ++x) {
        if (t.leader_of[x] == x) t.leaders.push_back(x);
    }
    return t;
}

ZdbParams predicted_coset_params(std::uint32_t m) {
    const std::uint64_t two_m = std::uint64_t{1} << m;
    ZdbParams p;
    p.n = two_m - 1;
    p.ell_bar = (two_m + m - 2) / m;
    p.lambda = static_cast<std::int64_t>(m) - 1;
    p.tau.assign((two_m - 2) / m, m);
    p.tau.insert(p.tau.begin(), 1);
    return p;
}

ZdbParams predicted_pair_coset_params(std::uint32_t m) {
    const std::uint64_t two_m = std::uint64_t{1} << m;
    ZdbParams p;
    p.n = two_m - 1;
    p.ell_bar = (two_m / 2 + m - 1) / m;
    p.lambda = 2 * static_cast<std::int64_t>(m) - 1;
    p.tau.assign((two_m / 2 - 1) / m, 2 * std::uint64_t{m});
    p.tau.insert(p.tau.begin(), 1);
    return p;
}

ZdbFunction construct_coset_zdb(std::uint32_t m) {
    const auto t = build_coset_table(m);
    return ZdbFunction(GroupSpec::cyclic(t.n), rank_labels(t.leaders, t.leader_of),
                       FamilyInfo{FamilyKind::Coset, {}, 0, m});
}

ZdbFunction construct_pair_coset_zdb(std::uint32_t m) {
    const auto t = build_paired_coset_table(m);
    return ZdbFunction(GroupSpec::cyclic(t.n), rank_labels(t.leaders, t.leader_of),
                       FamilyInfo{FamilyKind::PairCoset, {}, 0, m});
}

}  // namespace zdb
