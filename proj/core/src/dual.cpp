#include "qtaft/dual.hpp"

#include <list>
#include <mutex>
#include <sstream>

namespace qtaft {

namespace {

void check_same_params(const ParamsPtr& a, const ParamsPtr& b) {
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument("functionals built over different parameters");
}

}  // namespace

Functional::Functional(ParamsPtr params) : params_(std::move(params)) {
    values_.assign(static_cast<std::size_t>(params_->dimension()),
                   CyclotomicScalar::zero(params_->N));
}

Functional Functional::counit(ParamsPtr params) {
    Functional f(std::move(params));
    const auto& p = *f.params_;
    for (std::int32_t l = 0; l < p.N; ++l)
        f.set_value({0, 0, l}, CyclotomicScalar::one(p.N));
    return f;
}

const CyclotomicScalar& Functional::value(const BasisMonomial& m) const {
    return values_[static_cast<std::size_t>(monomial_index(*params_, m))];
}

void Functional::set_value(const BasisMonomial& m, CyclotomicScalar v) {
    values_[static_cast<std::size_t>(monomial_index(*params_, m))] = std::move(v);
}

CyclotomicScalar Functional::evaluate(const AlgebraElement& u) const {
    check_same_params(params_, u.params());
    auto r = CyclotomicScalar::zero(params_->N);
    for (const auto& [m, c] : u.terms()) {
        const auto& v = value(m);
        if (v.is_zero()) continue;
        r += c * v;
    }
    return r;
}

bool Functional::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

Functional Functional::operator+(const Functional& rhs) const {
    check_same_params(params_, rhs.params_);
    auto r = *this;
    for (std::size_t k = 0; k < values_.size(); ++k) r.values_[k] += rhs.values_[k];
    return r;
}

Functional Functional::operator*(const CyclotomicScalar& s) const {
    auto r = *this;
    for (auto& v : r.values_) v *= s;
    return r;
}

bool Functional::operator==(const Functional& rhs) const {
    check_same_params(params_, rhs.params_);
    return values_ == rhs.values_;
}

DualGenerators dual_generators(const ParamsPtr& params) {
    const auto& p = *params;
    DualGenerators g{Functional(params), Functional(params), Functional(params)};
    for (std::int32_t l = 0; l < p.N; ++l) {
        g.xi.set_value({0, 0, l}, CyclotomicScalar::root_power(p.N, -l));
        g.psi.set_value({1, 0, l}, CyclotomicScalar::root_power(p.N, -p.b1 * l));
        g.phi.set_value({0, 1, l}, CyclotomicScalar::root_power(p.N, -p.b2 * l));
    }
    return g;
}

Functional convolve(const Functional& f, const Functional& h) {
    check_same_params(f.params(), h.params());
    const auto& params = f.params();
    const auto& p = *params;
    Functional r(params);
    for (std::int64_t idx = 0; idx < p.dimension(); ++idx) {
        const auto m = monomial_at(p, idx);
        auto d = coproduct_monomial(params, m);
        auto acc = CyclotomicScalar::zero(p.N);
        bool any = false;
        for (const auto& [k, c] : d.terms()) {
            const auto& fv = f.value(k.first);
            if (fv.is_zero()) continue;
            const auto& hv = h.value(k.second);
            if (hv.is_zero()) continue;
            acc += c * fv * hv;
            any = true;
        }
        if (any) r.set_value(m, std::move(acc));
    }
    return r;
}

std::shared_ptr<const std::vector<Functional>> functional_basis(const ParamsPtr& params) {
    static std::mutex mutex;
    static std::list<std::pair<std::array<std::int64_t, 5>,
                               std::shared_ptr<const std::vector<Functional>>>> lru;
    constexpr std::size_t kMaxEntries = 4;

    {
        std::lock_guard<std::mutex> lock(mutex);
        for (auto it = lru.begin(); it != lru.end(); ++it) {
            if (it->first == params->key()) {
                lru.splice(lru.begin(), lru, it);
                return lru.front().second;
            }
        }
    }

    const auto& p = *params;
    auto gens = dual_generators(params);
    std::vector<Functional> table(static_cast<std::size_t>(p.dimension()));
    auto at = [&](std::int64_t s, std::int64_t t, std::int64_t r) -> Functional& {
        return table[static_cast<std::size_t>(
            monomial_index(p, {static_cast<std::int32_t>(s),
                               static_cast<std::int32_t>(t),
                               static_cast<std::int32_t>(r)}))];
    };
    // xi^r psi^s phi^t, grown one convolution factor at a time.
    at(0, 0, 0) = Functional::counit(params);
    for (std::int64_t r = 1; r < p.N; ++r) at(0, 0, r) = convolve(at(0, 0, r - 1), gens.xi);
    for (std::int64_t r = 0; r < p.N; ++r) {
        for (std::int64_t s = 1; s < p.Nx; ++s)
            at(s, 0, r) = convolve(at(s - 1, 0, r), gens.psi);
        for (std::int64_t s = 0; s < p.Nx; ++s)
            for (std::int64_t t = 1; t < p.Ny; ++t)
                at(s, t, r) = convolve(at(s, t - 1, r), gens.phi);
    }

    auto shared = std::make_shared<const std::vector<Functional>>(std::move(table));
    std::lock_guard<std::mutex> lock(mutex);
    lru.emplace_front(params->key(), shared);
    if (lru.size() > kMaxEntries) lru.pop_back();
    return shared;
}

Functional functional_monomial(const ParamsPtr& params, std::int64_t r,
                               std::int64_t s, std::int64_t t) {
    const auto& p = *params;
    if (r < 0 || r >= p.N || s < 0 || s >= p.Nx || t < 0 || t >= p.Ny)
        throw std::invalid_argument("functional_monomial: index out of range");
    auto table = functional_basis(params);
    return (*table)[static_cast<std::size_t>(
        monomial_index(p, {static_cast<std::int32_t>(s), static_cast<std::int32_t>(t),
                           static_cast<std::int32_t>(r)}))];
}

namespace {

// (sum_m q^{i m} g^m) x^j y^l as an element of H.
AlgebraElement pairing_element(const ParamsPtr& params, std::int64_t i,
                               std::int64_t j, std::int64_t l) {
    const auto& p = *params;
    AlgebraElement grouplike(params);
    for (std::int32_t m = 0; m < p.N; ++m)
        grouplike.add_term({0, 0, m}, CyclotomicScalar::root_power(p.N, i * m));
    return grouplike *
           AlgebraElement::monomial(params, {static_cast<std::int32_t>(j),
                                             static_cast<std::int32_t>(l), 0});
}

}  // namespace

DualityReport check_duality(const ParamsPtr& params) {
    const auto& p = *params;
    DualityReport report;
    report.dual_tuple = {p.b1, p.b2, p.a1, p.a2};

    auto gens = dual_generators(params);
    auto table = functional_basis(params);
    auto at = [&](std::int64_t s, std::int64_t t, std::int64_t r) -> const Functional& {
        return (*table)[static_cast<std::size_t>(
            monomial_index(p, {static_cast<std::int32_t>(s),
                               static_cast<std::int32_t>(t),
                               static_cast<std::int32_t>(r)}))];
    };
    auto fail = [&](const std::string& what) { report.failures.push_back(what); };

    if (convolve(at(0, 0, p.N - 1), gens.xi) != Functional::counit(params))
        fail("xi^N != counit");
    if (!convolve(at(p.Nx - 1, 0, 0), gens.psi).is_zero()) fail("psi^Nx != 0");
    if (!convolve(at(0, p.Ny - 1, 0), gens.phi).is_zero()) fail("phi^Ny != 0");

    auto q = [&](std::int64_t e) { return CyclotomicScalar::root_power(p.N, e); };
    if (convolve(gens.xi, gens.psi) != convolve(gens.psi, gens.xi) * q(p.a1))
        fail("xi psi != q^a1 psi xi");
    if (convolve(gens.xi, gens.phi) != convolve(gens.phi, gens.xi) * q(p.a2))
        fail("xi phi != q^a2 phi xi");
    if (convolve(gens.psi, gens.phi) != convolve(gens.phi, gens.psi) * q(p.b1 * p.a2))
        fail("psi phi != q^{b1 a2} phi psi");

    // Pairing support: xi^r psi^s phi^t vanishes off x-degree s, y-degree t.
    for (std::int64_t r = 0; r < p.N && report.failures.size() < 8; ++r) {
        for (std::int64_t s = 0; s < p.Nx; ++s) {
            for (std::int64_t t = 0; t < p.Ny; ++t) {
                const auto& f = at(s, t, r);
                for (std::int64_t idx = 0; idx < p.dimension(); ++idx) {
                    const auto m = monomial_at(p, idx);
                    if ((m.i != s || m.j != t) && !f.value(m).is_zero()) {
                        std::ostringstream os;
                        os << "off-degree support of xi^" << r << " psi^" << s
                           << " phi^" << t << " at " << m.to_string();
                        fail(os.str());
                    }
                }
                // Diagonal in the group-like index.
                for (std::int64_t i = 0; i < p.N; ++i) {
                    auto val = f.evaluate(pairing_element(params, i, s, t));
                    const bool expect_nonzero = (i == r);
                    if (val.is_zero() == expect_nonzero) {
                        std::ostringstream os;
                        os << "pairing entry (" << r << "," << s << "," << t
                           << ") vs (" << i << "," << s << "," << t << ") "
                           << (expect_nonzero ? "vanishes" : "is nonzero");
                        fail(os.str());
                    }
                }
            }
        }
    }

    report.ok = report.failures.empty();
    return report;
}

}  // namespace qtaft
