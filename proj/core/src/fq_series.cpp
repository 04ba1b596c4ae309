#include "partmod3/fq_series.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace partmod3 {

namespace {

bool small_prime(uint32_t m) {
    return m == 2 || m == 3 || m == 5 || m == 7 || m == 11;
}

void check_same_modulus(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch("series moduli differ: " + std::to_string(a.modulus()) +
                              " vs " + std::to_string(b.modulus()));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(uint32_t modulus, std::vector<uint8_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (!small_prime(modulus_)) {
        throw std::invalid_argument("modulus must be one of 2, 3, 5, 7, 11");
    }
    if (coeffs_.empty()) {
        throw std::invalid_argument("precision must be at least 1");
    }
    for (uint8_t c : coeffs_) {
        if (c >= modulus_) {
            throw std::invalid_argument("coefficient out of range [0, modulus)");
        }
    }
}

TruncatedSeries TruncatedSeries::zero(uint32_t modulus, std::size_t precision) {
    return TruncatedSeries(modulus, std::vector<uint8_t>(precision, 0));
}

TruncatedSeries TruncatedSeries::one(uint32_t modulus, std::size_t precision) {
    std::vector<uint8_t> c(precision, 0);
    c[0] = 1;
    return TruncatedSeries(modulus, std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(uint32_t modulus, std::size_t precision,
                                          std::size_t exponent, uint32_t c) {
    std::vector<uint8_t> v(precision, 0);
    if (exponent < precision) v[exponent] = static_cast<uint8_t>(c % modulus);
    return TruncatedSeries(modulus, std::move(v));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint8_t c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    if (precision == 0) throw std::invalid_argument("precision must be at least 1");
    if (precision >= coeffs_.size()) return *this;
    return TruncatedSeries(modulus_,
                           std::vector<uint8_t>(coeffs_.begin(), coeffs_.begin() + precision));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t m) const {
    std::vector<uint8_t> out(coeffs_.size(), 0);
    if (m < out.size()) {
        std::copy(coeffs_.begin(), coeffs_.end() - static_cast<std::ptrdiff_t>(m),
                  out.begin() + static_cast<std::ptrdiff_t>(m));
    }
    return TruncatedSeries(modulus_, std::move(out));
}

std::size_t TruncatedSeries::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](uint8_t c) { return c != 0; }));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_modulus(a, b);
    const std::size_t n = std::min(a.precision(), b.precision());
    const uint32_t m = a.modulus();
    std::vector<uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        uint32_t s = static_cast<uint32_t>(a.coeff(i)) + b.coeff(i);
        out[i] = static_cast<uint8_t>(s >= m ? s - m : s);
    }
    return TruncatedSeries(m, std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_modulus(a, b);
    const std::size_t n = std::min(a.precision(), b.precision());
    const uint32_t m = a.modulus();
    std::vector<uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        uint32_t s = static_cast<uint32_t>(a.coeff(i)) + m - b.coeff(i);
        out[i] = static_cast<uint8_t>(s >= m ? s - m : s);
    }
    return TruncatedSeries(m, std::move(out));
}

TruncatedSeries series_neg(const TruncatedSeries& a) {
    const uint32_t m = a.modulus();
    std::vector<uint8_t> out(a.precision());
    for (std::size_t i = 0; i < out.size(); ++i) {
        uint8_t c = a.coeff(i);
        out[i] = static_cast<uint8_t>(c == 0 ? 0 : m - c);
    }
    return TruncatedSeries(m, std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_modulus(a, b);
    const std::size_t n = std::min(a.precision(), b.precision());
    const uint32_t m = a.modulus();

    // Outer loop over the operand with fewer nonzero terms. Accumulate in
    // uint32: terms are < 11*11 and there are at most n of them per slot,
    // so sums stay below 100 * 10^7 < 2^32.
    const TruncatedSeries* sparse = &a;
    const TruncatedSeries* dense = &b;
    if (b.nonzero_count() < a.nonzero_count()) std::swap(sparse, dense);

    std::vector<uint32_t> acc(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const uint32_t ck = sparse->coeff(k);
        if (ck == 0) continue;
        const uint8_t* src = dense->coeffs().data();
        uint32_t* dst = acc.data() + k;
        const std::size_t len = n - k;
        for (std::size_t i = 0; i < len; ++i) {
            dst[i] += ck * src[i];
        }
    }
    std::vector<uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<uint8_t>(acc[i] % m);
    return TruncatedSeries(m, std::move(out));
}

TruncatedSeries frobenius3(const TruncatedSeries& f, std::size_t N) {
    if (f.modulus() != 3) throw std::invalid_argument("frobenius3 requires modulus 3");
    const std::size_t need = (N + 2) / 3;
    if (f.precision() < need) {
        throw InsufficientPrecision("frobenius3: input precision " +
                                    std::to_string(f.precision()) + " < " +
                                    std::to_string(need));
    }
    std::vector<uint8_t> out(N, 0);
    for (std::size_t i = 0; 3 * i < N; ++i) out[3 * i] = f.coeff(i);
    return TruncatedSeries(3, std::move(out));
}

TruncatedSeries series_pow(const TruncatedSeries& a, uint64_t e) {
    const std::size_t n = a.precision();
    if (e == 0) return TruncatedSeries::one(a.modulus(), n);
    if (e == 1) return a;
    if (a.modulus() == 3 && e % 3 == 0) {
        const std::size_t sub = (n + 2) / 3;
        return frobenius3(series_pow(a.truncated(sub), e / 3), n);
    }
    if (e % 2 == 0) {
        TruncatedSeries h = series_pow(a, e / 2);
        return series_mul(h, h);
    }
    return series_mul(a, series_pow(a, e - 1));
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
    const uint32_t m = a.modulus();
    const std::size_t n = a.precision();
    if (a.coeff(0) == 0) {
        throw std::invalid_argument("series_inverse requires a unit constant term");
    }
    // Inverse of the constant term by search (modulus <= 11).
    uint32_t c0inv = 1;
    for (uint32_t t = 1; t < m; ++t) {
        if (a.coeff(0) * t % m == 1) { c0inv = t; break; }
    }

    std::vector<std::pair<std::size_t, uint8_t>> terms;  // nonzero f[k], k >= 1
    for (std::size_t k = 1; k < n; ++k) {
        if (a.coeff(k) != 0) terms.emplace_back(k, a.coeff(k));
    }

    std::vector<uint8_t> g(n, 0);
    g[0] = static_cast<uint8_t>(c0inv);
    for (std::size_t i = 1; i < n; ++i) {
        uint32_t s = 0;
        for (const auto& [k, fk] : terms) {
            if (k > i) break;
            s += fk * g[i - k];
        }
        s %= m;
        g[i] = static_cast<uint8_t>(s == 0 ? 0 : (m - s) * c0inv % m);
    }
    return TruncatedSeries(m, std::move(g));
}

TruncatedSeries pentagonal_product(uint32_t d, std::size_t N, uint32_t modulus) {
    if (d == 0) throw std::invalid_argument("pentagonal_product: d must be positive");
    std::vector<uint8_t> c(N, 0);
    c[0] = 1;
    const uint8_t neg = static_cast<uint8_t>(modulus - 1);
    for (uint64_t k = 1;; ++k) {
        const uint64_t g1 = d * (k * (3 * k - 1) / 2);
        if (g1 >= N) break;
        const uint64_t g2 = d * (k * (3 * k + 1) / 2);
        const uint8_t sign = (k % 2 == 1) ? neg : 1;  // (-1)^k
        c[g1] = static_cast<uint8_t>((c[g1] + sign) % modulus);
        if (g2 < N) c[g2] = static_cast<uint8_t>((c[g2] + sign) % modulus);
    }
    return TruncatedSeries(modulus, std::move(c));
}

TruncatedSeries product_power(uint32_t d, int64_t e, std::size_t N) {
    if (d == 0) throw std::invalid_argument("product_power: d must be positive");
    if (e < 0) return series_inverse(product_power(d, -e, N));
    if (e == 0) return TruncatedSeries::one(3, N);

    const int64_t a = e / 3;
    const int64_t b = e % 3;
    TruncatedSeries out = (a > 0) ? frobenius3(product_power(d, a, (N + 2) / 3), N)
                                  : TruncatedSeries::one(3, N);
    if (b > 0) {
        const TruncatedSeries f = pentagonal_product(d, N, 3);
        for (int64_t i = 0; i < b; ++i) out = series_mul(out, f);
    }
    return out;
}

}  // namespace partmod3
