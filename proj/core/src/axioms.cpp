#include "qtaft/axioms.hpp"

#include <random>

namespace qtaft {

namespace {

/// (id (x) Delta) Delta on a basis monomial, by expanding the right leg.
TripleTensor right_triple_coproduct(const ParamsPtr& params, const BasisMonomial& m) {
    TripleTensor r(params);
    const auto outer = coproduct_monomial(params, m);
    for (const auto& [k, c] : outer.terms()) {
        const auto inner = coproduct_monomial(params, k.second);
        for (const auto& [ik, ic] : inner.terms())
            r.add_term({k.first, ik.first, ik.second}, c * ic);
    }
    return r;
}

bool check_coassociativity(const ParamsPtr& params, const BasisMonomial& m) {
    return triple_coproduct_monomial(params, m) == right_triple_coproduct(params, m);
}

bool check_counit(const ParamsPtr& params, const BasisMonomial& m) {
    const auto delta = coproduct_monomial(params, m);
    AlgebraElement left(params), right(params);
    for (const auto& [k, c] : delta.terms()) {
        // eps(x^i y^j g^l) = [i = j = 0].
        if (k.first.i == 0 && k.first.j == 0) left.add_term(k.second, c);
        if (k.second.i == 0 && k.second.j == 0) right.add_term(k.first, c);
    }
    const auto id = AlgebraElement::monomial(params, m);
    return left == id && right == id;
}

bool check_antipode(const ParamsPtr& params, const BasisMonomial& m) {
    const auto delta = coproduct_monomial(params, m);
    AlgebraElement left(params), right(params);
    for (const auto& [k, c] : delta.terms()) {
        left = left + AlgebraElement::monomial(params, k.first, c) *
                          antipode(AlgebraElement::monomial(params, k.second));
        right = right + antipode(AlgebraElement::monomial(params, k.first)) *
                            AlgebraElement::monomial(params, k.second, c);
    }
    AlgebraElement expectation(params);
    if (m.i == 0 && m.j == 0)
        expectation.add_term({0, 0, 0}, CyclotomicScalar::one(params->N));
    return left == expectation && right == expectation;
}

bool check_delta_multiplicative(const ParamsPtr& params, const BasisMonomial& m) {
    const auto u = AlgebraElement::monomial(params, m);
    const auto delta_m = coproduct_monomial(params, m);
    for (const auto& gen : {AlgebraElement::gen_g(params), AlgebraElement::gen_x(params),
                            AlgebraElement::gen_y(params)}) {
        if (coproduct(gen * u) != coproduct(gen) * delta_m) return false;
    }
    return true;
}

}  // namespace

std::vector<AxiomCheck> hopf_axiom_checks(const ParamsPtr& params, CheckScope scope,
                                          std::uint64_t seed,
                                          std::int64_t sample_count) {
    const auto& p = *params;

    std::vector<std::int64_t> indices;
    if (scope == CheckScope::Exhaustive || sample_count >= p.dimension()) {
        indices.resize(static_cast<std::size_t>(p.dimension()));
        for (std::int64_t i = 0; i < p.dimension(); ++i)
            indices[static_cast<std::size_t>(i)] = i;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> dist(0, p.dimension() - 1);
        indices.resize(static_cast<std::size_t>(sample_count));
        for (auto& i : indices) i = dist(rng);
    }

    struct Axiom {
        const char* name;
        bool (*check)(const ParamsPtr&, const BasisMonomial&);
    };
    const Axiom axioms[] = {
        {"coassociativity", check_coassociativity},
        {"counit", check_counit},
        {"antipode", check_antipode},
        {"coproduct_multiplicative", check_delta_multiplicative},
    };

    std::vector<AxiomCheck> out;
    for (const auto& axiom : axioms) {
        AxiomCheck result{axiom.name, true, std::nullopt};
        for (const auto idx : indices) {
            const auto m = monomial_at(p, idx);
            if (!axiom.check(params, m)) {
                result.ok = false;
                result.witness = m.to_string();
                break;
            }
        }
        out.push_back(std::move(result));
    }
    return out;
}

bool all_ok(const std::vector<AxiomCheck>& checks) {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

}  // namespace qtaft
