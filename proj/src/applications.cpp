#include "zdb/applications.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zdb/error.hpp"

namespace zdb {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> ccc_bound(std::uint64_t n, std::uint64_t d,
                                  std::span<const std::uint64_t> composition) {
    std::uint64_t total = 0;
    std::int64_t squares = 0;
    for (auto w : composition) {
        total += w;
        squares += static_cast<std::int64_t>(w * w);
    }
    if (total != n) {
        throw Error(ErrorCode::CompositionMismatch,
                    "composition sums to " + std::to_string(total) + ", expected " + std::to_string(n));
    }
    if (d > n) throw Error(ErrorCode::CompositionMismatch, "distance exceeds length");
    const auto nn = static_cast<std::int64_t>(n);
    const auto nd = nn * static_cast<std::int64_t>(d);
    const std::int64_t denom = nd - nn * nn + squares;
    if (denom <= 0) return std::nullopt;
    return Rational::make(nd, denom);
}

std::vector<std::uint32_t> CccCode::codeword(std::uint64_t i) const {
    if (!generator) return codewords.at(i);
    const auto& g = generator->group();
    const auto labels = generator->labels();
    std::vector<std::uint32_t> word(n);
    g.translate_all(static_cast<std::uint32_t>(i), word);
    for (auto& w : word) w = labels[w];
    return word;
}

CccCode build_ccc(const ZdbFunction& f, const ZdbParams& params) {
    CccCode code;
    code.n = f.order();
    code.size = f.order();
    code.min_distance = static_cast<std::int64_t>(f.order()) - params.lambda;
    code.composition = f.label_histogram();
    code.alphabet = f.image_size();
    code.generator = f;
    return code;
}

CccCode materialize(const CccCode& code) {
    CccCode out = code;
    out.generator.reset();
    out.codewords.clear();
    out.codewords.reserve(code.size);
    for (std::uint64_t i = 0; i < code.size; ++i) out.codewords.push_back(code.codeword(i));
    return out;
}

namespace {

CheckResult fail(std::string detail) { return CheckResult{false, std::move(detail)}; }

CheckResult check_composition(const std::vector<std::uint32_t>& word, const CccCode& code,
                              std::uint64_t index) {
    if (word.size() != code.n) {
        return fail("codeword " + std::to_string(index) + " has length " +
                    std::to_string(word.size()));
    }
    std::vector<std::uint64_t> hist(code.alphabet, 0);
    for (std::size_t x = 0; x < word.size(); ++x) {
        if (word[x] >= code.alphabet) {
            return fail("codeword " + std::to_string(index) + " position " + std::to_string(x) +
                        " uses symbol outside the alphabet");
        }
        ++hist[word[x]];
    }
    if (hist != code.composition) {
        return fail("codeword " + std::to_string(index) + " violates the composition");
    }
    return {};
}

CheckResult verify_generated(const CccCode& code) {
    const ZdbFunction& f = *code.generator;
    if (code.size != f.order() || code.n != f.order()) {
        return fail("generated code must have n = M = group order");
    }
    const std::vector<std::uint32_t> base(f.labels().begin(), f.labels().end());
    if (auto r = check_composition(base, code, 0); !r) return r;
    // Every translate is a permutation of the base word, so its composition
    // is the same; distances depend only on the difference of the shifts.
    const auto counts = shift_match_counts(f);
    std::int64_t min_d = static_cast<std::int64_t>(code.n);
    for (std::uint32_t delta = 1; delta < counts.size(); ++delta) {
        const std::int64_t dist = static_cast<std::int64_t>(code.n) - counts[delta];
        if (dist == 0) {
            return fail("codewords 0 and " + std::to_string(delta) + " coincide");
        }
        min_d = std::min(min_d, dist);
    }
    if (min_d != code.min_distance) {
        return fail("minimum distance is " + std::to_string(min_d) + ", declared " +
                    std::to_string(code.min_distance));
    }
    return {};
}

CheckResult verify_explicit(const CccCode& code) {
    if (code.codewords.size() != code.size) return fail("codeword count differs from M");
    if (code.size > 512) return fail("explicit code exceeds 512 words; pairwise check refused");
    for (std::uint64_t i = 0; i < code.size; ++i) {
        if (auto r = check_composition(code.codewords[i], code, i); !r) return r;
    }
    std::int64_t min_d = static_cast<std::int64_t>(code.n);
    for (std::uint64_t i = 0; i < code.size; ++i) {
        for (std::uint64_t j = i + 1; j < code.size; ++j) {
            std::int64_t dist = 0;
            for (std::uint64_t x = 0; x < code.n; ++x) {
                dist += code.codewords[i][x] != code.codewords[j][x];
            }
            if (dist == 0) {
                return fail("codewords " + std::to_string(i) + " and " + std::to_string(j) +
                            " coincide");
            }
            min_d = std::min(min_d, dist);
        }
    }
    if (min_d != code.min_distance) {
        return fail("minimum distance is " + std::to_string(min_d) + ", declared " +
                    std::to_string(code.min_distance));
    }
    return {};
}

}  // namespace

CheckResult verify_ccc(const CccCode& code) {
    std::uint64_t total = 0;
    for (auto w : code.composition) total += w;
    if (total != code.n || code.composition.size() != code.alphabet) {
        return fail("composition does not sum to n over the alphabet");
    }
    return code.generator ? verify_generated(code) : verify_explicit(code);
}

CccCertificate certify_ccc(const CccCode& code) {
    CccCertificate cert;
    cert.bound = ccc_bound(code.n, static_cast<std::uint64_t>(code.min_distance), code.composition);
    cert.optimal = cert.bound &&
                   *cert.bound == Rational::make(static_cast<std::int64_t>(code.size), 1);
    return cert;
}

std::uint64_t ceil_sqrt(std::uint64_t x) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r >= x) --r;
    while (r * r < x) ++r;
    return r;
}

std::uint64_t dss_bound(std::uint64_t n, std::uint64_t ell, std::int64_t rho) {
    if (ell < 2 || rho < 1 || n < 2) {
        throw Error(ErrorCode::DegenerateDss, "DSS bound needs ell >= 2, rho >= 1, n >= 2");
    }
    const std::uint64_t base = static_cast<std::uint64_t>(rho) * (n - 1);
    const std::uint64_t extra = (base + ell - 2) / (ell - 1);
    return ceil_sqrt(base + extra);
}

DssVerdict verify_dss(std::uint64_t n, const std::vector<std::vector<std::uint32_t>>& sets,
                      std::int64_t rho) {
    constexpr std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> owner(n, kNone);
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < sets.size(); ++i) {
        for (auto b : sets[i]) {
            if (b >= n) throw Error(ErrorCode::InvalidElement, "set element outside Z_n");
            if (owner[b] != kNone) {
                throw Error(ErrorCode::OverlappingSets,
                            "element " + std::to_string(b) + " lies in two sets");
            }
            owner[b] = i;
            members.push_back(b);
        }
    }
    std::vector<std::int64_t> cover(n, 0);
    for (auto b : members) {
        for (auto b2 : members) {
            if (owner[b] == owner[b2]) continue;
            ++cover[b >= b2 ? b - b2 : b + n - b2];
        }
    }
    DssVerdict v;
    v.min_coverage = *std::min_element(cover.begin() + 1, cover.end());
    v.max_coverage = *std::max_element(cover.begin() + 1, cover.end());
    v.covers = v.min_coverage >= rho;
    v.perfect = v.min_coverage == rho && v.max_coverage == rho;
    return v;
}

DssVerdict verify_dss(const Dss& dss) { return verify_dss(dss.n, dss.sets, dss.rho); }

std::vector<std::uint32_t> crt_map(const GroupSpec& group) {
    if (group.is_cyclic()) {
        std::vector<std::uint32_t> id(group.order());
        std::iota(id.begin(), id.end(), 0u);
        return id;
    }
    const auto n = static_cast<std::int64_t>(group.order());
    std::vector<std::int64_t> basis;
    for (const auto& field : group.fields()) {
        if (field.degree() != 1) {
            throw Error(ErrorCode::NonCyclicGroup,
                        "GF(" + std::to_string(field.order()) +
                            ") is not a prime field; the additive group is not cyclic");
        }
        const std::int64_t q = field.order();
        const std::int64_t cofactor = n / q;
        basis.push_back(cofactor * inverse_mod(cofactor % q, q) % n);
    }
    std::vector<std::uint32_t> out(group.order());
    for (std::uint32_t x = 0; x < group.order(); ++x) {
        const auto coords = group.coordinates(GroupElement{x});
        std::int64_t z = 0;
        for (std::size_t i = 0; i < coords.size(); ++i) z = (z + coords[i].value * basis[i]) % n;
        out[x] = static_cast<std::uint32_t>(z);
    }
    return out;
}

Dss build_dss(const ZdbFunction& f, const ZdbParams& params) {
    Dss dss;
    dss.n = f.order();
    std::vector<std::uint32_t> residue;
    if (!f.group().is_cyclic()) {
        residue = crt_map(f.group());
        dss.crt_map = residue;
    }
    for (auto cls : f.preimage_classes()) {
        if (!residue.empty()) {
            for (auto& x : cls) x = residue[x];
            std::sort(cls.begin(), cls.end());
        }
        dss.r += cls.size();
        dss.sets.push_back(std::move(cls));
    }
    dss.rho = static_cast<std::int64_t>(dss.n) - params.lambda;
    dss.bound = dss_bound(dss.n, dss.sets.size(), dss.rho);
    dss.perfect = verify_dss(dss).perfect;
    dss.optimal = dss.perfect && dss.r == dss.bound;
    dss.sufficient_condition =
        static_cast<std::int64_t>(f.image_size()) * params.lambda <= static_cast<std::int64_t>(dss.n);
    return dss;
}

}  // namespace zdb
