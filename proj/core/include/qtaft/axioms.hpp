#pragma once

#include "qtaft/algebra.hpp"

#include <optional>
#include <vector>

namespace qtaft {

enum class CheckScope { Exhaustive, Sampled };

inline constexpr std::int64_t kDefaultAxiomSamples = 200;

struct AxiomCheck {
    std::string name;
    bool ok = false;
    std::optional<std::string> witness;  // offending monomial, when failed
};

/// The Hopf axiom suite on the PBW basis: coassociativity, the counit
/// identities, both antipode identities, and multiplicativity of the
/// coproduct against left multiplication by each generator.  Exhaustive
/// scope covers every basis monomial; sampled scope draws sample_count
/// monomials from the given seed.
std::vector<AxiomCheck> hopf_axiom_checks(const ParamsPtr& params, CheckScope scope,
                                          std::uint64_t seed = 0,
                                          std::int64_t sample_count = kDefaultAxiomSamples);

bool all_ok(const std::vector<AxiomCheck>& checks);

}  // namespace qtaft
