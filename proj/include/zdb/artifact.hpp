#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "zdb/applications.hpp"
#include "zdb/zdb_function.hpp"

namespace zdb {

inline constexpr int kFormatVersion = 1;

/// On-disk form of a function table:
///
///   {"format_version": 1,
///    "group":  {"kind": "cyclic", "n": 7} | {"kind": "product", "q": [4, 7]},
///    "family": {"family": "coset", "m": 3} | {"family": "product", "q": [...], "e": 3} | ...,
///    "labels": [0, 1, 1, 2, 1, 2, 2],
///    "params": {"n": 7, "ell_bar": 3, "lambda": 2, "tau": [1, 3, 3]}}
///
/// "params" is written only after verification. Product groups built with
/// repeated characteristics carry "allow_repeated_primes": true.
struct ZdbArtifact {
    ZdbFunction function;
    std::optional<ZdbParams> params;
};

nlohmann::json to_json(const ZdbArtifact& artifact);
/// Throws Error(FormatError) on any schema violation. Labels that are not
/// dense are densified by first occurrence.
ZdbArtifact artifact_from_json(const nlohmann::json& doc);

void write_artifact(const std::filesystem::path& path, const ZdbArtifact& artifact);
/// Throws Error(FormatError) when the file is missing, unparsable or invalid.
ZdbArtifact read_artifact(const std::filesystem::path& path);

nlohmann::json params_to_json(const ZdbParams& params);

/// {"n", "M", "d", "composition", "alphabet", "bound", "achieved", "verdict"}
nlohmann::json ccc_certificate_json(const CccCode& code, const CccCertificate& cert);
/// {"n", "sets", "rho", "r", "bound", "perfect", "optimal", "sufficient_condition", "crt_map"?}
nlohmann::json dss_json(const Dss& dss);

}  // namespace zdb
