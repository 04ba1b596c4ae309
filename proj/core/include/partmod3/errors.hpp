#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partmod3 {

// Two series with different coefficient moduli were combined.
struct ModulusMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A q-expansion could not be written as a polynomial in delta within the
// requested degree bound (nonzero residual). Either the input is not a
// level-1 cusp form mod 3, or the bound/precision is wrong.
struct NotInDeltaSpan : std::runtime_error {
    std::size_t residual_exponent;
    explicit NotInDeltaSpan(std::size_t exponent)
        : std::runtime_error("series is not in the delta span up to the degree bound "
                             "(first nonzero residual at exponent " +
                             std::to_string(exponent) + ")"),
          residual_exponent(exponent) {}
};

// Series too short to certify the requested decomposition degrees.
struct InsufficientPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured search/degree cap was hit. Never a silent truncation.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No monomial image of the form equals +-delta within the cap.
struct NotReachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Hecke image fell outside the degree-bounded basis of a matrix build.
struct DegreeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prime search exhausted its limit before finding the requested counts.
struct NotEnoughPrimes : std::runtime_error {
    std::size_t x_found;
    std::size_t y_found;
    NotEnoughPrimes(std::size_t xf, std::size_t yf, std::string msg)
        : std::runtime_error(std::move(msg)), x_found(xf), y_found(yf) {}
};

}  // namespace partmod3
