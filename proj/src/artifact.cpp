#include "zdb/artifact.hpp"

#include <fstream>

#include "zdb/error.hpp"

namespace zdb {

using nlohmann::json;

namespace {

json group_to_json(const GroupSpec& g) {
    if (g.is_cyclic()) return json{{"kind", "cyclic"}, {"n", g.order()}};
    json out{{"kind", "product"}, {"q", g.field_orders()}};
    if (g.allows_repeated_primes()) out["allow_repeated_primes"] = true;
    return out;
}

json family_to_json(const FamilyInfo& info) {
    json out{{"family", to_string(info.kind)}};
    switch (info.kind) {
        case FamilyKind::Product:
            out["q"] = info.q;
            out["e"] = info.e;
            break;
        case FamilyKind::Coset:
        case FamilyKind::PairCoset:
            out["m"] = info.m;
            break;
        case FamilyKind::External:
            break;
    }
    return out;
}

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::FormatError, "malformed artifact: " + what);
}

GroupSpec group_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return GroupSpec::cyclic(j.at("n").get<std::uint64_t>());
    if (kind == "product") {
        const bool repeated = j.value("allow_repeated_primes", false);
        return GroupSpec::product(j.at("q").get<std::vector<std::uint64_t>>(), repeated);
    }
    malformed("unknown group kind '" + kind + "'");
}

FamilyInfo family_from_json(const json& j) {
    FamilyInfo info;
    info.kind = family_kind_from_string(j.at("family").get<std::string>());
    if (info.kind == FamilyKind::Product) {
        info.q = j.at("q").get<std::vector<std::uint64_t>>();
        info.e = j.at("e").get<std::uint64_t>();
    } else if (info.kind != FamilyKind::External) {
        info.m = j.at("m").get<std::uint32_t>();
    }
    return info;
}

ZdbParams params_from_json(const json& j) {
    ZdbParams p;
    p.n = j.at("n").get<std::uint64_t>();
    p.ell_bar = j.at("ell_bar").get<std::uint64_t>();
    p.lambda = j.at("lambda").get<std::int64_t>();
    p.tau = j.at("tau").get<std::vector<std::uint64_t>>();
    return p;
}

}  // namespace

json params_to_json(const ZdbParams& params) {
    return json{{"n", params.n},
                {"ell_bar", params.ell_bar},
                {"lambda", params.lambda},
                {"tau", params.tau}};
}

json to_json(const ZdbArtifact& artifact) {
    const auto& f = artifact.function;
    json doc{{"format_version", kFormatVersion},
             {"group", group_to_json(f.group())},
             {"family", family_to_json(f.family())},
             {"labels", std::vector<std::uint32_t>(f.labels().begin(), f.labels().end())}};
    if (artifact.params) doc["params"] = params_to_json(*artifact.params);
    return doc;
}

ZdbArtifact artifact_from_json(const json& doc) {
    try {
        if (!doc.is_object()) malformed("top level is not an object");
        const int version = doc.at("format_version").get<int>();
        if (version != kFormatVersion) malformed("unsupported format_version " + std::to_string(version));
        auto group = group_from_json(doc.at("group"));
        const auto family = doc.contains("family") ? family_from_json(doc.at("family")) : FamilyInfo{};
        auto labels = doc.at("labels").get<std::vector<std::uint32_t>>();
        if (labels.size() != group.order()) {
            malformed("labels has " + std::to_string(labels.size()) + " entries, group order is " +
                      std::to_string(group.order()));
        }
        std::optional<ZdbParams> params;
        if (doc.contains("params")) params = params_from_json(doc.at("params"));
        if (!is_dense(labels)) labels = densify(labels);
        return ZdbArtifact{ZdbFunction(std::move(group), std::move(labels), family), params};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::FormatError) throw;
        malformed(e.what());
    } catch (const json::exception& e) {
        malformed(e.what());
    }
}

void write_artifact(const std::filesystem::path& path, const ZdbArtifact& artifact) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::FormatError, "cannot open " + path.string() + " for writing");
    out << to_json(artifact).dump(2) << '\n';
    if (!out) throw Error(ErrorCode::FormatError, "failed writing " + path.string());
}

ZdbArtifact read_artifact(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        malformed(path.string() + ": " + e.what());
    }
    return artifact_from_json(doc);
}

json ccc_certificate_json(const CccCode& code, const CccCertificate& cert) {
    json out{{"n", code.n},
             {"M", code.size},
             {"d", code.min_distance},
             {"composition", code.composition},
             {"alphabet", code.alphabet},
             {"achieved", code.size},
             {"verdict", cert.optimal ? "OPTIMAL" : "NOT-OPTIMAL"}};
    if (cert.bound) {
        out["bound"] = json{{"num", cert.bound->num}, {"den", cert.bound->den}};
    } else {
        out["bound"] = nullptr;
    }
    if (code.size == 1) out["vacuous_distance"] = true;
    return out;
}

json dss_json(const Dss& dss) {
    json out{{"n", dss.n},
             {"sets", dss.sets},
             {"rho", dss.rho},
             {"r", dss.r},
             {"bound", dss.bound},
             {"achieved", dss.r},
             {"perfect", dss.perfect},
             {"optimal", dss.optimal},
             {"sufficient_condition", dss.sufficient_condition}};
    if (dss.crt_map) out["crt_map"] = *dss.crt_map;
    return out;
}

}  // namespace zdb
