#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zdb/artifact.hpp"
#include "zdb/cyclotomic.hpp"
#include "zdb/error.hpp"
#include "zdb/product_family.hpp"

using namespace zdb;
using nlohmann::json;

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

std::filesystem::path tmp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "zdb_artifact_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Artifact, CosetDocumentShape) {
    const ZdbArtifact a{construct_coset_zdb(3), std::nullopt};
    const auto doc = to_json(a);
    EXPECT_EQ(doc.at("format_version"), 1);
    EXPECT_EQ(doc.at("group"), (json{{"kind", "cyclic"}, {"n", 7}}));
    EXPECT_EQ(doc.at("family"), (json{{"family", "coset"}, {"m", 3}}));
    EXPECT_EQ(doc.at("labels"), (json{0, 1, 1, 2, 1, 2, 2}));
    EXPECT_FALSE(doc.contains("params"));
}

TEST(Artifact, RoundTripKeepsParams) {
    std::vector<ZdbFunction> fixtures = {construct_coset_zdb(5), construct_pair_coset_zdb(7),
                                         construct_product({4, 7}, 3),
                                         construct_product({3, 9}, 2, true)};
    for (const auto& f : fixtures) {
        const auto params = std::get<ZdbParams>(verify_zdb(f));
        const auto path = tmp_dir() / "roundtrip.json";
        write_artifact(path, ZdbArtifact{f, params});
        const auto back = read_artifact(path);
        EXPECT_TRUE(std::ranges::equal(back.function.labels(), f.labels()));
        EXPECT_EQ(back.function.group(), f.group());
        EXPECT_EQ(back.function.family(), f.family());
        EXPECT_EQ(back.params, params);
        EXPECT_EQ(std::get<ZdbParams>(verify_zdb(back.function)), params);
        // Serialization is stable byte for byte.
        const auto again = tmp_dir() / "roundtrip2.json";
        write_artifact(again, back);
        EXPECT_EQ(slurp(path), slurp(again));
    }
}

TEST(Artifact, RepeatedPrimeFlagSurvives) {
    const auto doc = to_json(ZdbArtifact{construct_product({5, 25}, 4, true), std::nullopt});
    EXPECT_EQ(doc.at("group").at("allow_repeated_primes"), true);
    EXPECT_TRUE(artifact_from_json(doc).function.group().allows_repeated_primes());
}

TEST(Artifact, SparseLabelsAreDensified) {
    const json doc = {{"format_version", 1},
                      {"group", {{"kind", "cyclic"}, {"n", 4}}},
                      {"family", {{"family", "external"}}},
                      {"labels", {5, 9, 9, 5}}};
    const auto a = artifact_from_json(doc);
    EXPECT_EQ(std::vector<std::uint32_t>(a.function.labels().begin(), a.function.labels().end()),
              (std::vector<std::uint32_t>{0, 1, 1, 0}));
}

TEST(Artifact, MalformedDocumentsAreFormatErrors) {
    const json good = to_json(ZdbArtifact{construct_coset_zdb(3), std::nullopt});
    auto drop = [&](const std::string& key) {
        json d = good;
        d.erase(key);
        return d;
    };
    EXPECT_EQ(code_of([&] { artifact_from_json(drop("labels")); }), ErrorCode::FormatError);
    EXPECT_EQ(code_of([&] { artifact_from_json(drop("group")); }), ErrorCode::FormatError);
    EXPECT_EQ(code_of([&] { artifact_from_json(drop("format_version")); }), ErrorCode::FormatError);
    json d = good;
    d["format_version"] = 2;
    EXPECT_EQ(code_of([&] { artifact_from_json(d); }), ErrorCode::FormatError);
    d = good;
    d["labels"] = json{0, 1, 1};
    EXPECT_EQ(code_of([&] { artifact_from_json(d); }), ErrorCode::FormatError);
    d = good;
    d["labels"][0] = "x";
    EXPECT_EQ(code_of([&] { artifact_from_json(d); }), ErrorCode::FormatError);
    d = good;
    d["group"] = json::parse(R"({"kind": "product", "q": [6]})");
    EXPECT_EQ(code_of([&] { artifact_from_json(d); }), ErrorCode::FormatError);
    d = good;
    d["family"] = json{{"family", "mystery"}};
    EXPECT_EQ(code_of([&] { artifact_from_json(d); }), ErrorCode::FormatError);
    EXPECT_EQ(code_of([&] { artifact_from_json(json::array()); }), ErrorCode::FormatError);
}

TEST(Artifact, UnreadableFiles) {
    const auto path = tmp_dir() / "truncated.json";
    const auto text = to_json(ZdbArtifact{construct_coset_zdb(3), std::nullopt}).dump(2);
    std::ofstream(path) << text.substr(0, text.size() / 2);
    EXPECT_EQ(code_of([&] { read_artifact(path); }), ErrorCode::FormatError);
    EXPECT_EQ(code_of([&] { read_artifact(tmp_dir() / "missing.json"); }), ErrorCode::FormatError);
}

TEST(Artifact, CertificateDocuments) {
    const auto f = construct_coset_zdb(3);
    const auto params = std::get<ZdbParams>(verify_zdb(f));
    const auto code = build_ccc(f, params);
    const auto cert = ccc_certificate_json(code, certify_ccc(code));
    EXPECT_EQ(cert.at("verdict"), "OPTIMAL");
    EXPECT_EQ(cert.at("bound"), (json{{"num", 7}, {"den", 1}}));
    EXPECT_EQ(cert.at("d"), 5);
    const auto dss = dss_json(build_dss(f, params));
    EXPECT_EQ(dss.at("rho"), 5);
    EXPECT_EQ(dss.at("optimal"), true);
    EXPECT_EQ(dss.at("sets"), json::parse("[[0], [1, 2, 4], [3, 5, 6]]"));
    EXPECT_EQ(params_to_json(params), (json{{"n", 7}, {"ell_bar", 3}, {"lambda", 2}, {"tau", {1, 3, 3}}}));
}
