#include "qtaft/parameters.hpp"

#include <numeric>
#include <sstream>

namespace qtaft {

std::string GtaParameters::to_string() const {
    std::ostringstream os;
    os << "H_q(" << a1 << "," << a2 << "," << b1 << "," << b2 << ") at N=" << N;
    return os.str();
}

bool is_valid_tuple(std::int64_t N, std::int64_t a1, std::int64_t a2,
                    std::int64_t b1, std::int64_t b2) {
    return (a1 * b1) % N != 0 && (a2 * b2) % N != 0 && (a1 * b2 + a2 * b1) % N == 0;
}

GtaParameters validate_parameters(std::int64_t N, std::int64_t a1, std::int64_t a2,
                                  std::int64_t b1, std::int64_t b2) {
    if (N < 2) throw NotAParameterTuple("N must be at least 2");
    GtaParameters p;
    p.N = N;
    p.a1 = mod_norm(a1, N);
    p.a2 = mod_norm(a2, N);
    p.b1 = mod_norm(b1, N);
    p.b2 = mod_norm(b2, N);
    if (p.a1 * p.b1 % N == 0) throw NotAParameterTuple("a1*b1 = 0 mod N");
    if (p.a2 * p.b2 % N == 0) throw NotAParameterTuple("a2*b2 = 0 mod N");
    if ((p.a1 * p.b2 + p.a2 * p.b1) % N != 0)
        throw NotAParameterTuple("a1*b2 + a2*b1 != 0 mod N");
    p.Nx = N / std::gcd(N, p.a1 * p.b1 % N);
    p.Ny = N / std::gcd(N, p.a2 * p.b2 % N);
    // a1*b2 = -a2*b1 mod N, so the x/y reordering exponent is unambiguous.
    if ((p.a1 * p.b2 + p.a2 * p.b1) % N != 0 || p.Nx < 2 || p.Ny < 2)
        throw NotAParameterTuple("inconsistent derived data");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            p.braiding[i][j] =
                mod_norm((i == 0 ? p.a1 : p.a2) * (j == 0 ? p.b1 : p.b2), N);
    return p;
}

ParamsPtr make_parameters(std::int64_t N, std::int64_t a1, std::int64_t a2,
                          std::int64_t b1, std::int64_t b2) {
    return std::make_shared<const GtaParameters>(
        validate_parameters(N, a1, a2, b1, b2));
}

}  // namespace qtaft
