#include "zdb/algebra.hpp"

#include <string>

#include "zdb/error.hpp"

namespace zdb {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DuplicateFieldOrder: return "DuplicateFieldOrder";
        case ErrorCode::RepeatedPrime: return "RepeatedPrime";
        case ErrorCode::CyclicGroupHasNoSupport: return "CyclicGroupHasNoSupport";
        case ErrorCode::EmptySupport: return "EmptySupport";
        case ErrorCode::InvalidElement: return "InvalidElement";
        case ErrorCode::BadExponent: return "BadExponent";
        case ErrorCode::EvenPrimeNotAllowed: return "EvenPrimeNotAllowed";
        case ErrorCode::NotABijection: return "NotABijection";
        case ErrorCode::InvalidTable: return "InvalidTable";
        case ErrorCode::CompositionMismatch: return "CompositionMismatch";
        case ErrorCode::DegenerateDss: return "DegenerateDss";
        case ErrorCode::OverlappingSets: return "OverlappingSets";
        case ErrorCode::NonCyclicGroup: return "NonCyclicGroup";
        case ErrorCode::FormatError: return "FormatError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimePower factor_prime_power(std::uint64_t q) {
    if (q < 2) {
        throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    const auto primes = prime_factors(q);
    if (primes.size() != 1) {
        throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    }
    PrimePower pp{static_cast<std::uint32_t>(primes.front()), 0};
    for (std::uint64_t r = q; r > 1; r /= pp.p) ++pp.m;
    return pp;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    if (n < 2) throw Error(ErrorCode::NotInvertible, "modulus must be at least 2");
    std::int64_t old_r = ((a % n) + n) % n, r = n;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) {
        throw Error(ErrorCode::NotInvertible, std::to_string(a) + " is not invertible modulo " +
                                                  std::to_string(n));
    }
    return ((old_s % n) + n) % n;
}

namespace detail {
namespace {

using Poly = std::vector<std::uint32_t>;

Poly decode(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
    Poly out(m, 0);
    for (std::uint32_t j = 0; j < m; ++j) {
        out[j] = value % p;
        value /= p;
    }
    return out;
}

std::uint32_t encode(const Poly& coeffs, std::uint32_t p) {
    std::uint32_t value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * p + *it;
    return value;
}

// Reduces `a` in place modulo a monic `divisor`; a keeps deg(divisor) slots.
void reduce(Poly& a, const Poly& divisor, std::uint32_t p) {
    const std::size_t d = divisor.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
        const std::uint32_t c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) {
            const std::size_t k = i - d + j;
            a[k] = static_cast<std::uint32_t>((a[k] + std::uint64_t{p - c} * divisor[j]) % p);
        }
    }
    a.resize(d);
}

}  // namespace

std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                           const Poly& modulus) {
    const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    const Poly x = decode(a, p, m);
    const Poly y = decode(b, p, m);
    Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (std::uint32_t j = 0; j < m; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
        }
    }
    reduce(prod, modulus, p);
    return encode(prod, p);
}

bool is_irreducible(const Poly& monic, std::uint32_t p) {
    const std::size_t deg = monic.size() - 1;
    if (deg <= 1) return deg == 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t tail = 0; tail < count; ++tail) {
            Poly divisor = decode(static_cast<std::uint32_t>(tail), p, static_cast<std::uint32_t>(d));
            divisor.push_back(1);
            Poly rem = monic;
            reduce(rem, divisor, p);
            bool zero = true;
            for (auto c : rem) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace detail

FieldSpec build_field(std::uint64_t q) {
    const PrimePower pp = factor_prime_power(q);
    if (q > kMaxOrder) {
        throw Error(ErrorCode::TooLarge, "field order " + std::to_string(q) + " exceeds 2^20");
    }
    FieldSpec f;
    f.p_ = pp.p;
    f.m_ = pp.m;
    f.q_ = static_cast<std::uint32_t>(q);

    if (f.m_ == 1) {
        f.modulus_ = {0, 1};
    } else {
        for (std::uint32_t tail = 0; tail < f.q_; ++tail) {
            auto candidate = detail::decode(tail, f.p_, f.m_);
            candidate.push_back(1);
            if (detail::is_irreducible(candidate, f.p_)) {
                f.modulus_ = std::move(candidate);
                break;
            }
        }
    }

    const std::uint64_t group_order = q - 1;
    const auto factors = prime_factors(group_order);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t t) {
        std::uint32_t result = 1, base = a;
        for (; t > 0; t >>= 1) {
            if (t & 1) result = detail::poly_mul_mod(result, base, f.p_, f.modulus_);
            base = detail::poly_mul_mod(base, base, f.p_, f.modulus_);
        }
        return result;
    };
    auto is_primitive = [&](std::uint32_t a) {
        if (slow_pow(a, group_order) != 1) return false;
        for (auto r : factors) {
            if (slow_pow(a, group_order / r) == 1) return false;
        }
        return true;
    };
    for (std::uint32_t a = 1; a < f.q_; ++a) {
        if (is_primitive(a)) {
            f.generator_ = FieldElement{a};
            break;
        }
    }

    f.exp_.resize(group_order);
    f.log_.assign(f.q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < group_order; ++i) {
        f.exp_[i] = acc;
        f.log_[acc] = i;
        acc = detail::poly_mul_mod(acc, f.generator_.value, f.p_, f.modulus_);
    }
    return f;
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const noexcept {
    if (m_ == 1) {
        const std::uint32_t s = a.value + b.value;
        return FieldElement{s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return FieldElement{a.value ^ b.value};
    std::uint32_t out = 0, scale = 1, x = a.value, y = b.value;
    for (std::uint32_t j = 0; j < m_; ++j) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return FieldElement{out};
}

FieldElement FieldSpec::neg(FieldElement a) const noexcept {
    if (m_ == 1) return FieldElement{a.value == 0 ? 0 : p_ - a.value};
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1, x = a.value;
    for (std::uint32_t j = 0; j < m_; ++j) {
        out += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return FieldElement{out};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const noexcept {
    return add(a, neg(b));
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const noexcept {
    if (a.value == 0 || b.value == 0) return FieldElement{0};
    const std::uint32_t s = log_[a.value] + log_[b.value];
    const auto n = static_cast<std::uint32_t>(exp_.size());
    return FieldElement{exp_[s >= n ? s - n : s]};
}

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t l = log_[a.value];
    return FieldElement{exp_[l == 0 ? 0 : exp_.size() - l]};
}

FieldElement FieldSpec::pow(FieldElement a, std::int64_t t) const {
    if (t < 0) {
        a = inv(a);
        t = -t;
    }
    FieldElement result{1}, base = a;
    for (auto e = static_cast<std::uint64_t>(t); e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::uint64_t FieldSpec::element_order(FieldElement a) const {
    if (a.value == 0) throw Error(ErrorCode::DivisionByZero, "zero has no multiplicative order");
    std::uint64_t ord = q_ - 1;
    for (auto r : prime_factors(q_ - 1)) {
        while (ord % r == 0 && pow(a, static_cast<std::int64_t>(ord / r)).value == 1) ord /= r;
    }
    return ord;
}

}  // namespace zdb
