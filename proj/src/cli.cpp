#include "zdb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zdb/applications.hpp"
#include "zdb/artifact.hpp"
#include "zdb/cyclotomic.hpp"
#include "zdb/error.hpp"
#include "zdb/product_family.hpp"

namespace zdb::cli {
namespace {

std::string triple(const ZdbParams& p) {
    return "(" + std::to_string(p.n) + ", " + std::to_string(p.ell_bar) + ", " +
           std::to_string(p.lambda) + ")";
}

std::string summary(const ZdbParams& p) { return triple(p) + " tau=" + format_multiset(p.tau); }

std::string ccc_line(const CccCode& code, const CccCertificate& cert) {
    std::ostringstream s;
    s << "(" << code.n << "," << code.size << "," << code.min_distance << ","
      << format_multiset(code.composition, '[', ']') << ")_" << code.alphabet
      << " bound=" << (cert.bound ? cert.bound->to_string() : "inapplicable") << ' '
      << (cert.optimal ? "OPTIMAL" : "NOT-OPTIMAL");
    return s.str();
}

std::string dss_line(const Dss& dss) {
    std::vector<std::uint64_t> sizes;
    for (const auto& s : dss.sets) sizes.push_back(s.size());
    std::ostringstream s;
    s << "(" << dss.n << "," << format_multiset(sizes) << "," << dss.rho << ") "
      << (dss.perfect ? "PERFECT" : "NOT-PERFECT") << " bound=" << dss.bound << " r=" << dss.r
      << ' ' << (dss.optimal ? "OPTIMAL" : "NOT-OPTIMAL");
    return s.str();
}

// Parameters as predicted for the family of a freshly built table. n, ell_bar
// and tau come from the table itself; lambda from the family's formula.
ZdbParams table_params(const ZdbFunction& f, std::int64_t lambda) {
    ZdbParams p;
    p.n = f.order();
    p.ell_bar = f.image_size();
    p.lambda = lambda;
    p.tau = f.label_histogram();
    std::sort(p.tau.begin(), p.tau.end());
    return p;
}

struct Io {
    std::ostream& out;
    std::ostream& err;
};

int precondition(Io io, const Error& e) {
    io.err << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::FormatError ? kFormat : kPrecondition;
}

// Runs both oracles; prints a diagnostic and returns nullopt on failure.
std::optional<ZdbParams> verify_both(Io io, const ZdbFunction& f) {
    const auto verdict = verify_zdb(f);
    if (const auto* bad = std::get_if<NotZdb>(&verdict)) {
        io.out << "NOT ZDB: c(" << bad->first_shift.index << ")=" << bad->first_count << " c("
               << bad->second_shift.index << ")=" << bad->second_count << '\n';
        return std::nullopt;
    }
    const auto& params = std::get<ZdbParams>(verdict);
    if (!verify_pdf(f, params)) {
        io.out << "PDF check disagrees with shift counts for " << triple(params) << '\n';
        return std::nullopt;
    }
    return params;
}

void write_json(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::FormatError, "cannot open " + path + " for writing");
    out << doc.dump(2) << '\n';
}

int cmd_construct(Io io, const ZdbFunction& f, std::int64_t lambda, const std::string& out) {
    write_artifact(out, ZdbArtifact{f, std::nullopt});
    io.out << summary(table_params(f, lambda)) << '\n';
    return kOk;
}

int cmd_verify(Io io, const std::string& path) {
    auto artifact = read_artifact(path);
    const auto params = verify_both(io, artifact.function);
    if (!params) return kVerificationFailed;
    artifact.params = *params;
    write_artifact(path, artifact);
    io.out << triple(*params) << '\n';
    return kOk;
}

int cmd_ccc(Io io, const std::string& path, const std::string& codewords_path,
            const std::string& cert_path) {
    const auto artifact = read_artifact(path);
    const auto params = verify_both(io, artifact.function);
    if (!params) return kVerificationFailed;
    const auto code = build_ccc(artifact.function, *params);
    if (const auto check = verify_ccc(code); !check) {
        io.out << "CCC check failed: " << check.detail << '\n';
        return kVerificationFailed;
    }
    const auto cert = certify_ccc(code);
    io.out << ccc_line(code, cert) << '\n';
    if (!codewords_path.empty()) {
        std::ofstream words(codewords_path);
        if (!words) throw Error(ErrorCode::FormatError, "cannot open " + codewords_path);
        for (std::uint64_t i = 0; i < code.size; ++i) {
            const auto w = code.codeword(i);
            for (std::size_t x = 0; x < w.size(); ++x) words << (x ? " " : "") << w[x];
            words << '\n';
        }
    }
    if (!cert_path.empty()) write_json(cert_path, ccc_certificate_json(code, cert));
    return kOk;
}

int cmd_dss(Io io, const std::string& path, const std::string& out_path) {
    const auto artifact = read_artifact(path);
    const auto& f = artifact.function;
    if (!f.group().is_cyclic()) crt_map(f.group());  // NonCyclicGroup before the O(n^2) work
    const auto params = verify_both(io, f);
    if (!params) return kVerificationFailed;
    const auto dss = build_dss(f, *params);
    io.out << dss_line(dss) << '\n';
    io.out << "sufficient condition ell*lambda <= n: " << f.image_size() * params->lambda
           << " <= " << dss.n << (dss.sufficient_condition ? " holds" : " fails") << '\n';
    if (dss.crt_map) io.out << "re-indexed to Z_" << dss.n << " via CRT\n";
    if (!out_path.empty()) write_json(out_path, dss_json(dss));
    return dss.perfect ? kOk : kVerificationFailed;
}

struct TableRow {
    std::string label;
    ZdbParams predicted;
    std::function<ZdbFunction()> build;
    bool cyclic = true;  // Z_n, or reducible to it by CRT
};

int cmd_table(Io io, const std::vector<TableRow>& rows, std::uint64_t max_verify_n) {
    int status = kOk;
    for (const auto& row : rows) {
        io.out << row.label << ' ' << summary(row.predicted);
        const bool verify = row.predicted.n <= max_verify_n;
        std::optional<ZdbFunction> f;
        std::optional<ZdbParams> actual;
        if (verify) {
            f = row.build();
            const auto verdict = verify_zdb(*f);
            if (const auto* p = std::get_if<ZdbParams>(&verdict);
                p && *p == row.predicted && verify_pdf(*f, *p)) {
                actual = *p;
            }
            io.out << (actual ? " VERIFIED" : " FAILED");
            if (!actual) status = kVerificationFailed;
        } else {
            io.out << " UNVERIFIED";
        }
        const auto& p = actual ? *actual : row.predicted;
        const auto ccc = ccc_bound(p.n, p.n - static_cast<std::uint64_t>(p.lambda), p.tau);
        io.out << " ccc_bound=" << (ccc ? ccc->to_string() : "inapplicable")
               << (ccc && *ccc == Rational::make(static_cast<std::int64_t>(p.n), 1) ? " CCC-OPTIMAL"
                                                                                    : " CCC-NOT-OPTIMAL");
        if (!row.cyclic || p.ell_bar < 2) {
            io.out << " DSS=n/a\n";
            continue;
        }
        const auto bound = dss_bound(p.n, p.ell_bar, static_cast<std::int64_t>(p.n) - p.lambda);
        io.out << " dss_bound=" << bound << " r=" << p.n;
        if (actual) io.out << (build_dss(*f, *actual).perfect ? " PERFECT" : " NOT-PERFECT");
        io.out << (bound == p.n ? " DSS-OPTIMAL" : " DSS-NOT-OPTIMAL") << '\n';
    }
    return status;
}

}  // namespace

std::string format_multiset(const std::vector<std::uint64_t>& values, char open, char close) {
    std::string s(1, open);
    const bool collapse = values.size() > 8;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        const std::size_t run = collapse ? j - i : 1;
        if (i) s += ',';
        s += std::to_string(values[i]);
        if (run > 1) s += 'x' + std::to_string(run);
        i += run;
    }
    s += close;
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Io io{out, err};
    CLI::App app{"Zero-difference balanced function construction and certification", "zdbtool"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Build a ZDB function and write its artifact");
    construct->require_subcommand(1);
    std::string out_path;
    std::vector<std::uint64_t> q_list;
    std::uint64_t e = 0;
    std::uint32_t m = 0;
    bool allow_repeated = false;

    auto* product = construct->add_subcommand("product", "Generalized cyclotomy on GF(q_1) x ... x GF(q_k)");
    product->add_option("--q", q_list, "Field orders, comma separated")->required()->delimiter(',');
    product->add_option("--e", e, "Subgroup order e, dividing every q_i - 1")->required();
    product->add_flag("--allow-repeated-primes", allow_repeated,
                      "Accept field orders sharing a characteristic");
    product->add_option("--out", out_path, "Artifact path");

    auto* coset = construct->add_subcommand("coset", "Coset leaders of 2-cyclotomic cosets mod 2^m - 1");
    coset->add_option("--m", m, "Prime m")->required();
    coset->add_option("--out", out_path, "Artifact path");

    auto* paircoset = construct->add_subcommand("paircoset", "Leaders of the classes B u (-B) mod 2^m - 1");
    paircoset->add_option("--m", m, "Odd prime m")->required();
    paircoset->add_option("--out", out_path, "Artifact path");

    std::string path;
    auto* verify = app.add_subcommand("verify", "Exhaustively verify an artifact and record its parameters");
    verify->add_option("path", path, "Artifact path")->required();

    std::string codewords_path, cert_path;
    auto* ccc = app.add_subcommand("ccc", "Derive and certify the constant composition code");
    ccc->add_option("path", path, "Artifact path")->required();
    ccc->add_option("--emit-codewords", codewords_path, "Write the code matrix, one word per line");
    ccc->add_option("--out", cert_path, "Write the certificate as JSON");

    auto* dss = app.add_subcommand("dss", "Derive and certify the difference system of sets");
    dss->add_option("path", path, "Artifact path")->required();
    dss->add_option("--out", cert_path, "Write the DSS and its certificate as JSON");

    std::string family;
    std::vector<std::uint32_t> m_list;
    std::vector<std::uint64_t> e_list;
    std::uint64_t max_verify_n = 10000;
    auto* table = app.add_subcommand("table", "Tabulate predicted parameters with verification flags");
    table->add_option("--family", family, "product | coset | paircoset")
        ->required()
        ->check(CLI::IsMember({"product", "coset", "paircoset"}));
    table->add_option("--m", m_list, "Primes m, comma separated")->delimiter(',');
    table->add_option("--q", q_list, "Field orders, comma separated")->delimiter(',');
    table->add_option("--e", e_list, "Values of e, comma separated")->delimiter(',');
    table->add_option("--max-verify-n", max_verify_n, "Skip exhaustive verification above this n");
    table->add_flag("--allow-repeated-primes", allow_repeated,
                    "Accept field orders sharing a characteristic");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kPrecondition;
    }

    try {
        if (product->parsed()) {
            auto f = construct_product(q_list, e, allow_repeated);
            if (out_path.empty()) out_path = "product.json";
            return cmd_construct(io, f, static_cast<std::int64_t>(e) - 1, out_path);
        }
        if (coset->parsed()) {
            auto f = construct_coset_zdb(m);
            if (out_path.empty()) out_path = "coset_m" + std::to_string(m) + ".json";
            return cmd_construct(io, f, static_cast<std::int64_t>(m) - 1, out_path);
        }
        if (paircoset->parsed()) {
            auto f = construct_pair_coset_zdb(m);
            if (out_path.empty()) out_path = "paircoset_m" + std::to_string(m) + ".json";
            return cmd_construct(io, f, 2 * static_cast<std::int64_t>(m) - 1, out_path);
        }
        if (verify->parsed()) return cmd_verify(io, path);
        if (ccc->parsed()) return cmd_ccc(io, path, codewords_path, cert_path);
        if (dss->parsed()) return cmd_dss(io, path, cert_path);
        if (table->parsed()) {
            std::vector<TableRow> rows;
            if (family == "product") {
                for (auto ei : e_list) {
                    make_product_params(q_list, ei, allow_repeated);
                    rows.push_back({"q=" + format_multiset(q_list, '[', ']') + " e=" + std::to_string(ei),
                                    predicted_product_params(q_list, ei),
                                    [=] { return construct_product(q_list, ei, allow_repeated); },
                                    std::all_of(q_list.begin(), q_list.end(),
                                                [](std::uint64_t q) { return is_prime(q); })});
                }
            } else {
                const bool paired = family == "paircoset";
                for (auto mi : m_list) {
                    if (paired) {
                        build_paired_coset_table(mi);
                    } else {
                        build_coset_table(mi);
                    }
                    rows.push_back({"m=" + std::to_string(mi),
                                    paired ? predicted_pair_coset_params(mi) : predicted_coset_params(mi),
                                    [=] {
                                        return paired ? construct_pair_coset_zdb(mi)
                                                      : construct_coset_zdb(mi);
                                    }});
                }
            }
            return cmd_table(io, rows, max_verify_n);
        }
    } catch (const Error& e) {
        return precondition(io, e);
    }
    return kPrecondition;
}

}  // namespace zdb::cli
