#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace qtaft {

/// Thrown by validate_parameters; the message names the violated condition.
class NotAParameterTuple : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Validated parameters (N, a1, a2, b1, b2) of a generalised Taft algebra,
/// with the derived nilpotency orders Nx, Ny and the braiding exponents
/// braiding[i][j] = a_{i+1} * b_{j+1} mod N.
struct GtaParameters {
    std::int64_t N = 0;
    std::int64_t a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    std::int64_t Nx = 0, Ny = 0;
    std::array<std::array<std::int64_t, 2>, 2> braiding{};

    std::int64_t dimension() const { return N * Nx * Ny; }

    bool operator==(const GtaParameters& rhs) const {
        return N == rhs.N && a1 == rhs.a1 && a2 == rhs.a2 && b1 == rhs.b1 &&
               b2 == rhs.b2;
    }

    std::array<std::int64_t, 5> key() const { return {N, a1, a2, b1, b2}; }

    std::string to_string() const;
};

using ParamsPtr = std::shared_ptr<const GtaParameters>;

/// Reduce v into [0, n).
constexpr std::int64_t mod_norm(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

/// Cheap validity test used by scan loops; inputs already in [0, N).
bool is_valid_tuple(std::int64_t N, std::int64_t a1, std::int64_t a2,
                    std::int64_t b1, std::int64_t b2);

/// Validates (N, a1, a2, b1, b2); negative parameters are normalised into
/// [0, N).  Throws NotAParameterTuple naming the violated condition.
GtaParameters validate_parameters(std::int64_t N, std::int64_t a1, std::int64_t a2,
                                  std::int64_t b1, std::int64_t b2);

/// Shared-ownership convenience used by the element types.
ParamsPtr make_parameters(std::int64_t N, std::int64_t a1, std::int64_t a2,
                          std::int64_t b1, std::int64_t b2);

}  // namespace qtaft
