#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "zdb/applications.hpp"
#include "zdb/cyclotomic.hpp"
#include "zdb/error.hpp"
#include "zdb/product_family.hpp"

using namespace zdb;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected zdb::Error";
    return ErrorCode::FormatError;
}

ZdbParams params_of(const ZdbFunction& f) { return std::get<ZdbParams>(verify_zdb(f)); }

std::uint64_t naive_ceil_sqrt(std::uint64_t x) {
    std::uint64_t r = 0;
    while (r * r < x) ++r;
    return r;
}

// Every pairwise Hamming distance of the translate code, word by word.
std::set<std::int64_t> pairwise_distances(const ZdbFunction& f) {
    const auto& g = f.group();
    std::set<std::int64_t> out;
    for (std::uint32_t i = 0; i < f.order(); ++i) {
        for (std::uint32_t j = i + 1; j < f.order(); ++j) {
            std::int64_t d = 0;
            for (std::uint32_t x = 0; x < f.order(); ++x) {
                d += f(g.add(GroupElement{x}, GroupElement{i})) != f(g.add(GroupElement{x}, GroupElement{j}));
            }
            out.insert(d);
        }
    }
    return out;
}

// Cross-set difference counts on Z_n straight from the definition.
std::vector<std::int64_t> naive_dss_cover(std::uint64_t n, const std::vector<std::vector<std::uint32_t>>& sets) {
    std::vector<std::int64_t> cover(n, 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            for (auto a : sets[i]) {
                for (auto b : sets[j]) ++cover[(a + n - b) % n];
            }
        }
    }
    return cover;
}

}  // namespace

TEST(CccBound, Examples) {
    const std::vector<std::uint64_t> w1 = {1, 3, 3};
    EXPECT_EQ(ccc_bound(7, 5, w1), Rational::make(7, 1));
    const std::vector<std::uint64_t> w2 = {1, 2};
    EXPECT_EQ(ccc_bound(3, 2, w2), Rational::make(3, 1));
    const std::vector<std::uint64_t> w3 = {1, 1, 1, 1};
    EXPECT_EQ(ccc_bound(4, 1, w3), std::nullopt);
    const std::vector<std::uint64_t> bad = {1, 3};
    EXPECT_EQ(code_of([&] { ccc_bound(7, 5, bad); }), ErrorCode::CompositionMismatch);
    EXPECT_EQ(Rational::make(35, 5), (Rational{7, 1}));
    EXPECT_EQ(Rational::make(6, -4).to_string(), "-3/2");
}

TEST(CccBound, AgreesWithCrossMultiplication) {
    const std::vector<std::uint64_t> w = {2, 3, 5};
    for (std::uint64_t d = 1; d <= 10; ++d) {
        const auto b = ccc_bound(10, d, w);
        const std::int64_t denom = 10 * static_cast<std::int64_t>(d) - 100 + 38;
        if (denom <= 0) {
            EXPECT_FALSE(b.has_value());
            continue;
        }
        ASSERT_TRUE(b.has_value());
        EXPECT_EQ(b->num * denom, b->den * 10 * static_cast<std::int64_t>(d));
    }
}

TEST(Ccc, CosetThreeIsOptimal) {
    const auto f = construct_coset_zdb(3);
    const auto code = build_ccc(f, params_of(f));
    EXPECT_EQ(code.n, 7u);
    EXPECT_EQ(code.size, 7u);
    EXPECT_EQ(code.min_distance, 5);
    EXPECT_EQ(code.composition, (std::vector<std::uint64_t>{1, 3, 3}));
    EXPECT_EQ(code.alphabet, 3u);
    EXPECT_TRUE(verify_ccc(code));
    const auto explicit_code = materialize(code);
    EXPECT_TRUE(verify_ccc(explicit_code));
    const auto cert = certify_ccc(code);
    EXPECT_TRUE(cert.optimal);
    EXPECT_EQ(cert.bound, Rational::make(7, 1));
    EXPECT_EQ(pairwise_distances(f), (std::set<std::int64_t>{5}));
}

TEST(Ccc, CosetTwoIsOptimal) {
    const auto f = construct_coset_zdb(2);
    const auto code = build_ccc(f, params_of(f));
    EXPECT_EQ(code.min_distance, 2);
    EXPECT_EQ(code.composition, (std::vector<std::uint64_t>{1, 2}));
    EXPECT_TRUE(verify_ccc(materialize(code)));
    EXPECT_EQ(certify_ccc(code).bound, Rational::make(3, 1));
}

TEST(Ccc, LargestProductRow) {
    const auto f = construct_product({49, 169}, 24);
    const auto code = build_ccc(f, params_of(f));
    EXPECT_EQ(code.n, 8281u);
    EXPECT_EQ(code.size, 8281u);
    EXPECT_EQ(code.min_distance, 8258);
    EXPECT_EQ(code.alphabet, 346u);
    std::vector<std::uint64_t> sorted = code.composition;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> expected(346, 24);
    expected[0] = 1;
    EXPECT_EQ(sorted, expected);
    EXPECT_TRUE(verify_ccc(code));
    EXPECT_TRUE(certify_ccc(code).optimal);
}

TEST(Ccc, TranslationIdentityMatchesBruteForce) {
    std::vector<ZdbFunction> fixtures = {construct_coset_zdb(5), construct_pair_coset_zdb(5),
                                         construct_product({4, 7}, 3), construct_product({9, 13}, 4),
                                         construct_product({7}, 2)};
    for (const auto& f : fixtures) {
        const auto p = params_of(f);
        EXPECT_EQ(pairwise_distances(f), (std::set<std::int64_t>{static_cast<std::int64_t>(p.n) - p.lambda}));
        const auto code = build_ccc(f, p);
        EXPECT_TRUE(verify_ccc(code));
        EXPECT_TRUE(verify_ccc(materialize(code)));
        EXPECT_TRUE(certify_ccc(code).optimal);
    }
}

TEST(Ccc, MutationsAreCaught) {
    const auto f = construct_coset_zdb(3);
    const auto code = materialize(build_ccc(f, params_of(f)));
    for (std::uint64_t i = 0; i < code.size; ++i) {
        for (std::uint64_t x = 0; x < code.n; ++x) {
            auto bad = code;
            bad.codewords[i][x] = (bad.codewords[i][x] + 1) % 3;
            EXPECT_FALSE(verify_ccc(bad)) << i << " " << x;
        }
    }
    auto wrong_d = build_ccc(f, params_of(f));
    wrong_d.min_distance = 4;
    EXPECT_FALSE(verify_ccc(wrong_d));
    EXPECT_FALSE(verify_ccc(materialize(wrong_d)));
}

TEST(Ccc, SingleWordAndOversizedCodes) {
    CccCode single;
    single.n = 3;
    single.size = 1;
    single.min_distance = 3;
    single.composition = {1, 2};
    single.alphabet = 2;
    single.codewords = {{0, 1, 1}};
    EXPECT_TRUE(verify_ccc(single));

    CccCode big;
    big.n = 1;
    big.size = 600;
    big.min_distance = 1;
    big.composition = {1};
    big.alphabet = 1;
    big.codewords.assign(600, {0});
    const auto r = verify_ccc(big);
    EXPECT_FALSE(r);
    EXPECT_NE(r.detail.find("512"), std::string::npos);
}

TEST(DssBound, Examples) {
    EXPECT_EQ(dss_bound(7, 3, 5), 7u);
    EXPECT_EQ(dss_bound(7, 2, 2), 5u);
    EXPECT_EQ(dss_bound(2047, 94, 2026), 2047u);
    EXPECT_EQ(code_of([] { dss_bound(7, 1, 5); }), ErrorCode::DegenerateDss);
    EXPECT_EQ(code_of([] { dss_bound(7, 3, 0); }), ErrorCode::DegenerateDss);
}

TEST(DssBound, AgreesWithNaiveEvaluation) {
    for (std::uint64_t n = 2; n < 60; ++n) {
        for (std::uint64_t ell = 2; ell <= n; ++ell) {
            for (std::int64_t rho = 1; rho <= static_cast<std::int64_t>(n); rho += 3) {
                const std::uint64_t base = rho * (n - 1);
                std::uint64_t extra = 0;
                while (extra * (ell - 1) < base) ++extra;
                ASSERT_EQ(dss_bound(n, ell, rho), naive_ceil_sqrt(base + extra));
            }
        }
    }
}

TEST(CeilSqrt, ExactAroundSquares) {
    for (std::uint64_t x = 0; x < 5000; ++x) ASSERT_EQ(ceil_sqrt(x), naive_ceil_sqrt(x));
    for (std::uint64_t r : {2047ull, 65535ull, 1048575ull}) {
        EXPECT_EQ(ceil_sqrt(r * r), r);
        EXPECT_EQ(ceil_sqrt(r * r + 1), r + 1);
        EXPECT_EQ(ceil_sqrt(r * r - 1), r);
    }
}

TEST(VerifyDss, Examples) {
    const std::vector<std::vector<std::uint32_t>> coset3 = {{0}, {1, 2, 4}, {3, 5, 6}};
    const auto v = verify_dss(7, coset3, 5);
    EXPECT_TRUE(v.perfect);
    for (std::size_t d = 1; d < 7; ++d) EXPECT_EQ(naive_dss_cover(7, coset3)[d], 5);

    EXPECT_TRUE(verify_dss(3, {{0}, {1}}, 1).perfect);

    const std::vector<std::vector<std::uint32_t>> pair3 = {{0}, {1, 2, 3, 4, 5, 6}};
    const auto over = verify_dss(7, pair3, 3);
    EXPECT_FALSE(over.covers);
    EXPECT_FALSE(over.perfect);
    EXPECT_EQ(over.min_coverage, 2);
    EXPECT_TRUE(verify_dss(7, pair3, 2).perfect);

    EXPECT_EQ(code_of([] { verify_dss(7, {{0, 1}, {1, 2}}, 1); }), ErrorCode::OverlappingSets);
    EXPECT_EQ(code_of([] { verify_dss(7, {{0}, {7}}, 1); }), ErrorCode::InvalidElement);
}

TEST(VerifyDss, AgreesWithNaiveCount) {
    const std::vector<std::vector<std::uint32_t>> sets = {{0, 3}, {1, 7, 8}, {2}, {5, 9}};
    const auto cover = naive_dss_cover(10, sets);
    const auto v = verify_dss(10, sets, 1);
    EXPECT_EQ(v.min_coverage, *std::min_element(cover.begin() + 1, cover.end()));
    EXPECT_EQ(v.max_coverage, *std::max_element(cover.begin() + 1, cover.end()));
}

TEST(BuildDss, CosetThree) {
    const auto f = construct_coset_zdb(3);
    const auto dss = build_dss(f, params_of(f));
    EXPECT_EQ(dss.sets, (std::vector<std::vector<std::uint32_t>>{{0}, {1, 2, 4}, {3, 5, 6}}));
    EXPECT_EQ(dss.rho, 5);
    EXPECT_EQ(dss.r, 7u);
    EXPECT_EQ(dss.bound, 7u);
    EXPECT_TRUE(dss.perfect);
    EXPECT_TRUE(dss.optimal);
    EXPECT_TRUE(dss.sufficient_condition);
    EXPECT_FALSE(dss.crt_map.has_value());
}

TEST(BuildDss, PairCosets) {
    const auto f3 = construct_pair_coset_zdb(3);
    const auto d3 = build_dss(f3, params_of(f3));
    EXPECT_EQ(d3.rho, 2);
    EXPECT_EQ(d3.bound, 5u);
    EXPECT_EQ(d3.r, 7u);
    EXPECT_TRUE(d3.perfect);
    EXPECT_FALSE(d3.optimal);

    const auto f11 = construct_pair_coset_zdb(11);
    const auto d11 = build_dss(f11, params_of(f11));
    EXPECT_EQ(d11.rho, 2026);
    EXPECT_EQ(d11.bound, 2047u);
    EXPECT_EQ(d11.r, 2047u);
    EXPECT_TRUE(d11.perfect);
    EXPECT_TRUE(d11.optimal);
    EXPECT_TRUE(d11.sufficient_condition);
    EXPECT_EQ(d11.sets.size(), 94u);
}

TEST(BuildDss, SufficientConditionImpliesOptimal) {
    std::vector<ZdbFunction> fixtures;
    for (std::uint32_t m : {2, 3, 5, 7}) fixtures.push_back(construct_coset_zdb(m));
    for (std::uint32_t m : {3, 5, 7}) fixtures.push_back(construct_pair_coset_zdb(m));
    for (std::uint64_t e : {2, 3, 6}) fixtures.push_back(construct_product({7}, e));
    fixtures.push_back(construct_product({3, 7}, 2));
    for (const auto& f : fixtures) {
        const auto p = params_of(f);
        const auto dss = build_dss(f, p);
        EXPECT_EQ(dss.rho, static_cast<std::int64_t>(p.n) - p.lambda);
        EXPECT_TRUE(dss.perfect);
        if (dss.sufficient_condition) EXPECT_TRUE(dss.optimal);
        const auto cover = naive_dss_cover(dss.n, dss.sets);
        for (std::size_t d = 1; d < dss.n; ++d) EXPECT_EQ(cover[d], dss.rho);
    }
}

TEST(Crt, PrimeFieldProductsMapToResidues) {
    const auto g = GroupSpec::product({3, 7, 5});
    const auto map = crt_map(g);
    std::set<std::uint32_t> seen(map.begin(), map.end());
    EXPECT_EQ(seen.size(), g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        const auto c = g.coordinates(GroupElement{x});
        EXPECT_EQ(map[x] % 3, c[0].value);
        EXPECT_EQ(map[x] % 7, c[1].value);
        EXPECT_EQ(map[x] % 5, c[2].value);
    }
    // The map is additive.
    for (std::uint32_t a = 0; a < g.order(); a += 7) {
        for (std::uint32_t b = 0; b < g.order(); b += 5) {
            EXPECT_EQ(map[g.add(GroupElement{a}, GroupElement{b}).index], (map[a] + map[b]) % g.order());
        }
    }
    EXPECT_EQ(code_of([] { crt_map(GroupSpec::product({4, 7})); }), ErrorCode::NonCyclicGroup);
}

TEST(Crt, ProductDssIsReindexed) {
    const auto f = construct_product({3, 7}, 2);
    const auto dss = build_dss(f, params_of(f));
    ASSERT_TRUE(dss.crt_map.has_value());
    EXPECT_TRUE(dss.perfect);
    EXPECT_TRUE(verify_dss(dss).perfect);
    const auto g = construct_product({4, 7}, 3);
    EXPECT_EQ(code_of([&] { build_dss(g, params_of(g)); }), ErrorCode::NonCyclicGroup);
}
