#include "qtaft/algebra.hpp"

#include <list>
#include <mutex>
#include <sstream>

namespace qtaft {

namespace {

void check_same_params(const ParamsPtr& a, const ParamsPtr& b) {
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument("elements built over different parameters");
}

// Per-parameter caches: powers of q and the l = 0 slice of the coproduct
// table.  Kept in a small LRU so long scans do not accumulate memory.
struct ParamCache {
    ParamsPtr params;
    std::vector<CyclotomicScalar> q_powers;       // q^e for 0 <= e < N
    std::vector<TensorElement> coproduct_base;    // Delta(x^i y^j), index i*Ny+j
    bool coproduct_ready = false;
};

using CachePtr = std::shared_ptr<ParamCache>;

CachePtr param_cache(const ParamsPtr& params) {
    static std::mutex mutex;
    static std::list<std::pair<std::array<std::int64_t, 5>, CachePtr>> lru;
    constexpr std::size_t kMaxEntries = 8;

    const auto key = params->key();
    std::lock_guard<std::mutex> lock(mutex);
    for (auto it = lru.begin(); it != lru.end(); ++it) {
        if (it->first == key) {
            lru.splice(lru.begin(), lru, it);
            return lru.front().second;
        }
    }
    auto cache = std::make_shared<ParamCache>();
    cache->params = params;
    cache->q_powers.reserve(static_cast<std::size_t>(params->N));
    for (std::int64_t e = 0; e < params->N; ++e)
        cache->q_powers.push_back(CyclotomicScalar::root_power(params->N, e));
    lru.emplace_front(key, cache);
    if (lru.size() > kMaxEntries) lru.pop_back();
    return cache;
}

const CyclotomicScalar& q_power(const ParamCache& cache, std::int64_t e) {
    return cache.q_powers[static_cast<std::size_t>(
        mod_norm(e, cache.params->N))];
}

void ensure_coproduct_base(ParamCache& cache) {
    if (cache.coproduct_ready) return;
    const auto& params = cache.params;
    const auto& p = *params;

    TensorElement dx(params), dy(params);
    dx.add_term({{0, 0, 0}, {1, 0, 0}}, CyclotomicScalar::one(p.N));
    dx.add_term({{1, 0, 0}, {0, 0, static_cast<std::int32_t>(p.a1)}},
                CyclotomicScalar::one(p.N));
    dy.add_term({{0, 0, 0}, {0, 1, 0}}, CyclotomicScalar::one(p.N));
    dy.add_term({{0, 1, 0}, {0, 0, static_cast<std::int32_t>(p.a2)}},
                CyclotomicScalar::one(p.N));

    std::vector<TensorElement> xpow, ypow;
    xpow.push_back(TensorElement::unit(params));
    for (std::int64_t i = 1; i < p.Nx; ++i) xpow.push_back(xpow.back() * dx);
    ypow.push_back(TensorElement::unit(params));
    for (std::int64_t j = 1; j < p.Ny; ++j) ypow.push_back(ypow.back() * dy);

    cache.coproduct_base.resize(static_cast<std::size_t>(p.Nx * p.Ny));
    for (std::int64_t i = 0; i < p.Nx; ++i)
        for (std::int64_t j = 0; j < p.Ny; ++j)
            cache.coproduct_base[static_cast<std::size_t>(i * p.Ny + j)] =
                xpow[static_cast<std::size_t>(i)] * ypow[static_cast<std::size_t>(j)];
    cache.coproduct_ready = true;
}

}  // namespace

std::string BasisMonomial::to_string() const {
    std::ostringstream os;
    bool any = false;
    if (i > 0) { os << "x"; if (i > 1) os << "^" << i; any = true; }
    if (j > 0) { os << "y"; if (j > 1) os << "^" << j; any = true; }
    if (l > 0) { os << "g"; if (l > 1) os << "^" << l; any = true; }
    if (!any) os << "1";
    return os.str();
}

MonomialProduct monomial_product(const GtaParameters& p, const BasisMonomial& u,
                                 const BasisMonomial& v) {
    MonomialProduct r;
    if (u.i + v.i >= p.Nx || u.j + v.j >= p.Ny) {
        r.zero = true;
        return r;
    }
    // Normal-form rewrite x^i y^j g^l: g past x and y, then y past x.
    const std::int64_t e = p.b1 * u.l * v.i + p.b2 * u.l * v.j - p.a1 * p.b2 * u.j * v.i;
    r.m = BasisMonomial{u.i + v.i, u.j + v.j,
                        static_cast<std::int32_t>((u.l + v.l) % p.N)};
    r.q_exp = mod_norm(e, p.N);
    return r;
}

ScaledMonomial scaled_product(const GtaParameters& p, const ScaledMonomial& u,
                              const ScaledMonomial& v) {
    if (u.zero || v.zero) return ScaledMonomial{true, 1, 0, {}};
    auto mp = monomial_product(p, u.m, v.m);
    if (mp.zero) return ScaledMonomial{true, 1, 0, {}};
    return ScaledMonomial{false, u.sign * v.sign,
                          mod_norm(u.q_exp + v.q_exp + mp.q_exp, p.N), mp.m};
}

AlgebraElement AlgebraElement::unit(ParamsPtr params) {
    return monomial(std::move(params), {0, 0, 0});
}

AlgebraElement AlgebraElement::monomial(ParamsPtr params, BasisMonomial m) {
    auto c = CyclotomicScalar::one(params->N);
    return monomial(std::move(params), m, std::move(c));
}

AlgebraElement AlgebraElement::monomial(ParamsPtr params, BasisMonomial m,
                                        CyclotomicScalar coeff) {
    AlgebraElement e(std::move(params));
    e.add_term(m, coeff);
    return e;
}

void AlgebraElement::add_term(const BasisMonomial& m, const CyclotomicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    check_same_params(params_, rhs.params_);
    auto r = *this;
    for (const auto& [m, c] : rhs.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    return *this + (-rhs);
}

AlgebraElement AlgebraElement::operator-() const {
    auto r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

AlgebraElement AlgebraElement::operator*(const CyclotomicScalar& s) const {
    AlgebraElement r(params_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    check_same_params(params_, rhs.params_);
    auto cache = param_cache(params_);
    AlgebraElement r(params_);
    for (const auto& [mu, cu] : terms_) {
        for (const auto& [mv, cv] : rhs.terms_) {
            auto mp = monomial_product(*params_, mu, mv);
            if (mp.zero) continue;
            r.add_term(mp.m, cu * cv * q_power(*cache, mp.q_exp));
        }
    }
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
    check_same_params(params_, rhs.params_);
    return terms_ == rhs.terms_;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")*" << m.to_string();
        first = false;
    }
    return os.str();
}

TensorElement TensorElement::unit(ParamsPtr params) {
    TensorElement t(std::move(params));
    t.add_term({{0, 0, 0}, {0, 0, 0}}, CyclotomicScalar::one(t.params_->N));
    return t;
}

void TensorElement::add_term(const Key& k, const CyclotomicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& rhs) const {
    check_same_params(params_, rhs.params_);
    auto r = *this;
    for (const auto& [k, c] : rhs.terms_) r.add_term(k, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& rhs) const {
    check_same_params(params_, rhs.params_);
    auto r = *this;
    for (const auto& [k, c] : rhs.terms_) r.add_term(k, -c);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& rhs) const {
    check_same_params(params_, rhs.params_);
    auto cache = param_cache(params_);
    TensorElement r(params_);
    for (const auto& [ku, cu] : terms_) {
        for (const auto& [kv, cv] : rhs.terms_) {
            auto left = monomial_product(*params_, ku.first, kv.first);
            if (left.zero) continue;
            auto right = monomial_product(*params_, ku.second, kv.second);
            if (right.zero) continue;
            r.add_term({left.m, right.m},
                       cu * cv * q_power(*cache, left.q_exp + right.q_exp));
        }
    }
    return r;
}

bool TensorElement::operator==(const TensorElement& rhs) const {
    check_same_params(params_, rhs.params_);
    return terms_ == rhs.terms_;
}

void TripleTensor::add_term(const Key& k, const CyclotomicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool TripleTensor::operator==(const TripleTensor& rhs) const {
    check_same_params(params_, rhs.params_);
    return terms_ == rhs.terms_;
}

CyclotomicScalar counit(const AlgebraElement& u) {
    auto r = CyclotomicScalar::zero(u.params()->N);
    for (const auto& [m, c] : u.terms())
        if (m.i == 0 && m.j == 0) r += c;
    return r;
}

namespace {

// Delta(x^i y^j g^l) from the cached l = 0 slice: right-multiplying both
// legs by the group-like g^l shifts the g-exponents without any q factor.
TensorElement coproduct_from_base(const ParamCache& cache, const BasisMonomial& m) {
    const auto& p = *cache.params;
    const auto& base =
        cache.coproduct_base[static_cast<std::size_t>(m.i * p.Ny + m.j)];
    if (m.l == 0) return base;
    TensorElement r(cache.params);
    for (const auto& [k, c] : base.terms()) {
        auto left = k.first, right = k.second;
        left.l = static_cast<std::int32_t>((left.l + m.l) % p.N);
        right.l = static_cast<std::int32_t>((right.l + m.l) % p.N);
        r.add_term({left, right}, c);
    }
    return r;
}

}  // namespace

TensorElement coproduct_monomial(const ParamsPtr& params, const BasisMonomial& m) {
    auto cache = param_cache(params);
    ensure_coproduct_base(*cache);
    return coproduct_from_base(*cache, m);
}

TensorElement coproduct(const AlgebraElement& u) {
    auto cache = param_cache(u.params());
    ensure_coproduct_base(*cache);
    TensorElement r(u.params());
    for (const auto& [m, c] : u.terms()) {
        auto d = coproduct_from_base(*cache, m);
        for (const auto& [k, dc] : d.terms()) r.add_term(k, c * dc);
    }
    return r;
}

TripleTensor triple_coproduct_monomial(const ParamsPtr& params, const BasisMonomial& m) {
    auto cache = param_cache(params);
    ensure_coproduct_base(*cache);
    TripleTensor r(params);
    auto outer = coproduct_from_base(*cache, m);
    for (const auto& [k, c] : outer.terms()) {
        auto inner = coproduct_from_base(*cache, k.first);
        for (const auto& [ki, ci] : inner.terms())
            r.add_term({ki.first, ki.second, k.second}, c * ci);
    }
    return r;
}

TripleTensor triple_coproduct(const AlgebraElement& u) {
    TripleTensor r(u.params());
    for (const auto& [m, c] : u.terms()) {
        auto t = triple_coproduct_monomial(u.params(), m);
        for (const auto& [k, tc] : t.terms()) r.add_term(k, c * tc);
    }
    return r;
}

ScaledMonomial antipode_monomial(const GtaParameters& p, const BasisMonomial& m) {
    // S is an antihomomorphism: S(g)^l S(y)^j S(x)^i.
    const ScaledMonomial sx{false, -1, 0,
                            {1, 0, static_cast<std::int32_t>(mod_norm(-p.a1, p.N))}};
    const ScaledMonomial sy{false, -1, 0,
                            {0, 1, static_cast<std::int32_t>(mod_norm(-p.a2, p.N))}};
    ScaledMonomial r{false, 1, 0,
                     {0, 0, static_cast<std::int32_t>(mod_norm(-m.l, p.N))}};
    for (std::int32_t j = 0; j < m.j; ++j) r = scaled_product(p, r, sy);
    for (std::int32_t i = 0; i < m.i; ++i) r = scaled_product(p, r, sx);
    return r;
}

ScaledMonomial antipode_inverse_monomial(const GtaParameters& p, const BasisMonomial& m) {
    // S^{-1}(x) = -q^{-a1 b1} x g^{-a1}, S^{-1}(y) = -q^{-a2 b2} y g^{-a2}.
    const ScaledMonomial sx{false, -1, mod_norm(-p.a1 * p.b1, p.N),
                            {1, 0, static_cast<std::int32_t>(mod_norm(-p.a1, p.N))}};
    const ScaledMonomial sy{false, -1, mod_norm(-p.a2 * p.b2, p.N),
                            {0, 1, static_cast<std::int32_t>(mod_norm(-p.a2, p.N))}};
    ScaledMonomial r{false, 1, 0,
                     {0, 0, static_cast<std::int32_t>(mod_norm(-m.l, p.N))}};
    for (std::int32_t j = 0; j < m.j; ++j) r = scaled_product(p, r, sy);
    for (std::int32_t i = 0; i < m.i; ++i) r = scaled_product(p, r, sx);
    return r;
}

namespace {

AlgebraElement map_monomials(const AlgebraElement& u,
                             ScaledMonomial (*f)(const GtaParameters&,
                                                 const BasisMonomial&)) {
    auto cache = param_cache(u.params());
    AlgebraElement r(u.params());
    for (const auto& [m, c] : u.terms()) {
        auto s = f(*u.params(), m);
        if (s.zero) continue;
        auto coeff = c * q_power(*cache, s.q_exp);
        r.add_term(s.m, s.sign < 0 ? -coeff : coeff);
    }
    return r;
}

}  // namespace

AlgebraElement antipode(const AlgebraElement& u) {
    return map_monomials(u, &antipode_monomial);
}

AlgebraElement antipode_inverse(const AlgebraElement& u) {
    return map_monomials(u, &antipode_inverse_monomial);
}

AlgebraElement antipode_power(const AlgebraElement& u, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("antipode_power: k must be positive");
    auto r = u;
    for (std::int64_t s = 0; s < k; ++s) r = antipode(r);
    return r;
}

}  // namespace qtaft
