#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "partmod3/errors.hpp"

namespace partmod3 {

/// Truncated formal power series over F_p for a small prime p.
///
/// Coefficients are stored canonically in [0, modulus), one byte each, so
/// precisions up to 10^7 stay cheap. A series of precision N knows the
/// coefficients of q^0 .. q^{N-1} and nothing beyond; every binary operation
/// truncates to the minimum operand precision, never extends.
class TruncatedSeries {
  public:
    TruncatedSeries(uint32_t modulus, std::vector<uint8_t> coeffs);

    static TruncatedSeries zero(uint32_t modulus, std::size_t precision);
    static TruncatedSeries one(uint32_t modulus, std::size_t precision);
    /// c * q^e truncated to `precision`.
    static TruncatedSeries monomial(uint32_t modulus, std::size_t precision,
                                    std::size_t exponent, uint32_t c);

    uint32_t modulus() const { return modulus_; }
    std::size_t precision() const { return coeffs_.size(); }
    uint8_t coeff(std::size_t n) const { return coeffs_[n]; }
    std::span<const uint8_t> coeffs() const { return coeffs_; }

    bool is_zero() const;
    TruncatedSeries truncated(std::size_t precision) const;
    /// Multiply by q^m: coefficients shift up, precision unchanged.
    TruncatedSeries shifted(std::size_t m) const;
    std::size_t nonzero_count() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    uint32_t modulus_;
    std::vector<uint8_t> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_neg(const TruncatedSeries& a);

/// Cauchy product truncated to min precision. Schoolbook, but iterates over
/// the nonzero coefficients of the sparser operand, so multiplying by a
/// pentagonal-type product costs O(N sqrt(N)) instead of O(N^2).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// a^e at a's precision. Binary powering; over F_3 exponents divisible by 3
/// are collapsed through the Frobenius identity f(q)^3 = f(q^3).
TruncatedSeries series_pow(const TruncatedSeries& a, uint64_t e);

/// Multiplicative inverse of a series with unit constant term, by the
/// coefficient recurrence g[n] = -f[0]^{-1} * sum_{k>=1} f[k] g[n-k].
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// f(q) -> f(q^3) at output precision N (requires f over F_3 and
/// f.precision >= ceil(N/3)). This is the Frobenius cube in char 3.
TruncatedSeries frobenius3(const TruncatedSeries& f, std::size_t N);

/// prod_{n>=1} (1 - q^{d n}) to precision N, built from Euler's pentagonal
/// number theorem: +-1 coefficients at exponents d*k(3k-+1)/2 only.
TruncatedSeries pentagonal_product(uint32_t d, std::size_t N, uint32_t modulus = 3);

/// prod_{n>=1} (1 - q^{d n})^e over F_3, e possibly negative. Positive
/// exponents are split e = 3a + b so the cube part rides the Frobenius
/// identity; negative exponents invert the positive-power series.
TruncatedSeries product_power(uint32_t d, int64_t e, std::size_t N);

}  // namespace partmod3
