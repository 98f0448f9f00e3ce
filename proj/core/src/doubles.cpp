#include "qtaft/doubles.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qtaft {

namespace {

/// One resolved pair of middle Sweedler legs: the product contribution
/// alpha_(1)(h_(1)) alpha_(3)(S^{+-1}(h_(3))) collapsed into coeff, with
/// the remaining legs alpha_(2) = Theta(d2) and h_(2) = h2.
struct WEntry {
    BasisMonomial d2, h2;
    CyclotomicScalar coeff;
};
using WTable = std::vector<WEntry>;

/// Per-call workspace: the Taft presentation H_q(b1,b2,a1,a2) of the dual,
/// the value table of the functionals xi^r psi^s phi^t, memoized three-fold
/// coproducts on both sides, and the W-tables built from them.
struct Ctx {
    ParamsPtr params, dual_params;
    std::shared_ptr<const std::vector<Functional>> ftable;
    std::map<BasisMonomial, TripleTensor> dual_triples, h_triples;
    std::map<std::tuple<int, BasisMonomial, BasisMonomial>, WTable> w_tables;

    explicit Ctx(const ParamsPtr& p)
        : params(p),
          dual_params(make_parameters(p->N, p->b1, p->b2, p->a1, p->a2)),
          ftable(functional_basis(p)) {}

    const TripleTensor& dual_triple(const BasisMonomial& m) {
        auto it = dual_triples.find(m);
        if (it == dual_triples.end())
            it = dual_triples.emplace(m, triple_coproduct_monomial(dual_params, m)).first;
        return it->second;
    }

    const TripleTensor& h_triple(const BasisMonomial& m) {
        auto it = h_triples.find(m);
        if (it == h_triples.end())
            it = h_triples.emplace(m, triple_coproduct_monomial(params, m)).first;
        return it->second;
    }
};

/// Theta(xbar^i ybar^j gbar^l) evaluated at the H-monomial m, where Theta
/// maps the PBW monomial of the dual presentation to
/// q^{-(a1 l i + a2 l j)} xi^l psi^i phi^j.
CyclotomicScalar theta_eval(const Ctx& ctx, const BasisMonomial& dm,
                            const BasisMonomial& m) {
    const auto& p = *ctx.params;
    if (dm.i != m.i || dm.j != m.j) return CyclotomicScalar::zero(p.N);
    const auto& f = (*ctx.ftable)[static_cast<std::size_t>(monomial_index(p, dm))];
    return f.value(m) * CyclotomicScalar::root_power(
                            p.N, -(p.a1 * dm.l * dm.i + p.a2 * dm.l * dm.j));
}

/// Resolves the outer Sweedler legs of alpha_(1)(h_(1)) alpha_(3)(S^{+-1}(h_(3)))
/// for the dual monomial a_bar and the H-monomial h; the entries list the
/// surviving middle legs alpha_(2), h_(2) with their collapsed coefficients.
/// The dual legs are the Theta-images of the coproduct of a_bar taken in the
/// dual presentation, which vanish off matching (x, y)-degrees.
WTable build_w_table(Ctx& ctx, DoubleKind kind, const BasisMonomial& a_bar,
                     const BasisMonomial& h) {
    const auto& p = *ctx.params;
    std::map<std::pair<BasisMonomial, BasisMonomial>, CyclotomicScalar> acc;
    const auto& triple_h = ctx.h_triple(h);
    const auto& triple_d = ctx.dual_triple(a_bar);
    for (const auto& [hk, hc] : triple_h.terms()) {
        const auto s3 = kind == DoubleKind::Drinfeld
                            ? antipode_monomial(p, hk[2])
                            : antipode_inverse_monomial(p, hk[2]);
        for (const auto& [dk, dc] : triple_d.terms()) {
            if (dk[0].i != hk[0].i || dk[0].j != hk[0].j) continue;
            if (dk[2].i != s3.m.i || dk[2].j != s3.m.j) continue;
            auto val = theta_eval(ctx, dk[0], hk[0]);
            if (val.is_zero()) continue;
            val *= theta_eval(ctx, dk[2], s3.m);
            if (val.is_zero()) continue;
            auto coeff = hc * dc * val *
                         CyclotomicScalar::root_power(p.N, s3.q_exp);
            if (s3.sign < 0) coeff = -coeff;
            auto [pos, inserted] = acc.try_emplace({dk[1], hk[1]}, coeff);
            if (!inserted) pos->second += coeff;
        }
    }
    WTable table;
    for (auto& [legs, c] : acc)
        if (!c.is_zero()) table.push_back({legs.first, legs.second, std::move(c)});
    return table;
}

const WTable& w_table(Ctx& ctx, DoubleKind kind, const BasisMonomial& a_bar,
                      const BasisMonomial& h) {
    const auto key = std::make_tuple(static_cast<int>(kind), a_bar, h);
    if (auto it = ctx.w_tables.find(key); it != ctx.w_tables.end())
        return it->second;
    return ctx.w_tables.emplace(key, build_w_table(ctx, kind, a_bar, h))
        .first->second;
}

/// Accumulates scale * (xi^r psi^s phi^t (x) k)(... (x) h) into out, using
/// alpha_(1)(h_(1)) alpha_(3)(S^{+-1}(h_(3))) beta alpha_(2) (x) k h_(2).
void accumulate_basis_product(Ctx& ctx, DoubleKind kind, const DualIndex& A,
                              const BasisMonomial& k, const DualIndex& B,
                              const BasisMonomial& h, const CyclotomicScalar& scale,
                              DoubleElement& out) {
    const auto& p = *ctx.params;
    const BasisMonomial a_bar{A.s, A.t, A.r}, b_bar{B.s, B.t, B.r};
    // xi^r psi^s phi^t = q^{a1 r s + a2 r t} Theta(xbar^s ybar^t gbar^r);
    // fold the conversion factors of both inputs into the base scalar.
    const auto base =
        scale * CyclotomicScalar::root_power(
                    p.N, p.a1 * (A.r * A.s + B.r * B.s) +
                             p.a2 * (A.r * A.t + B.r * B.t));
    for (const auto& entry : w_table(ctx, kind, a_bar, h)) {
        const auto kh2 = monomial_product(p, k, entry.h2);
        if (kh2.zero) continue;
        const auto mid = monomial_product(*ctx.dual_params, b_bar, entry.d2);
        if (mid.zero) continue;
        const DualIndex out_a{mid.m.l, mid.m.i, mid.m.j};
        const std::int64_t e = kh2.q_exp + mid.q_exp -
                               (p.a1 * out_a.r * out_a.s +
                                p.a2 * out_a.r * out_a.t);
        out.add_term({out_a, kh2.m},
                     base * entry.coeff * CyclotomicScalar::root_power(p.N, e));
    }
}

std::vector<DoubleElement::Key> basis_keys(const GtaParameters& p) {
    std::vector<DoubleElement::Key> keys;
    keys.reserve(static_cast<std::size_t>(p.dimension() * p.dimension()));
    for (std::int32_t r = 0; r < p.N; ++r)
        for (std::int32_t s = 0; s < p.Nx; ++s)
            for (std::int32_t t = 0; t < p.Ny; ++t)
                for (std::int64_t idx = 0; idx < p.dimension(); ++idx)
                    keys.push_back({DualIndex{r, s, t}, monomial_at(p, idx)});
    return keys;
}

/// xi^{e1} and g^{e2} exponents governing the triangular map scalar:
/// f scales the basis element by q^{-(e1 d + e2 c)}.
std::pair<std::int64_t, std::int64_t> character_exponents(const GtaParameters& p,
                                                          const DoubleElement::Key& k) {
    const auto& [a, m] = k;
    return {mod_norm(a.r + p.b1 * a.s + p.b2 * a.t, p.N),
            mod_norm(p.a1 * m.i + p.a2 * m.j + m.l, p.N)};
}

}  // namespace

std::string DualIndex::to_string() const {
    std::ostringstream os;
    os << "xi^" << r << " psi^" << s << " phi^" << t;
    return os.str();
}

DoubleElement DoubleElement::unit(ParamsPtr params, DoubleKind kind) {
    return basis(std::move(params), kind, {0, 0, 0}, {0, 0, 0});
}

DoubleElement DoubleElement::basis(ParamsPtr params, DoubleKind kind, DualIndex a,
                                   BasisMonomial m) {
    DoubleElement u(params, kind);
    u.add_term({a, m}, CyclotomicScalar::one(params->N));
    return u;
}

void DoubleElement::add_term(const Key& k, const CyclotomicScalar& c) {
    const auto& p = *params_;
    const auto& [a, m] = k;
    if (a.r < 0 || a.r >= p.N || a.s < 0 || a.s >= p.Nx || a.t < 0 || a.t >= p.Ny ||
        m.i < 0 || m.i >= p.Nx || m.j < 0 || m.j >= p.Ny || m.l < 0 || m.l >= p.N)
        throw std::out_of_range("DoubleElement::add_term: index out of range");
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

DoubleElement DoubleElement::operator+(const DoubleElement& rhs) const {
    if (kind_ != rhs.kind_)
        throw std::invalid_argument("DoubleElement: kind mismatch");
    DoubleElement r = *this;
    for (const auto& [k, c] : rhs.terms_) r.add_term(k, c);
    return r;
}

DoubleElement DoubleElement::operator-(const DoubleElement& rhs) const {
    if (kind_ != rhs.kind_)
        throw std::invalid_argument("DoubleElement: kind mismatch");
    DoubleElement r = *this;
    for (const auto& [k, c] : rhs.terms_) r.add_term(k, -c);
    return r;
}

DoubleElement DoubleElement::operator*(const CyclotomicScalar& s) const {
    DoubleElement r(params_, kind_);
    for (const auto& [k, c] : terms_) r.add_term(k, c * s);
    return r;
}

bool DoubleElement::operator==(const DoubleElement& rhs) const {
    return kind_ == rhs.kind_ && terms_ == rhs.terms_;
}

std::string DoubleElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*(" << k.first.to_string() << " (x) "
           << k.second.to_string() << ")";
    }
    return os.str();
}

DoubleElement double_multiply(const DoubleElement& u, const DoubleElement& v) {
    if (!u.params() || !v.params() || u.params()->key() != v.params()->key())
        throw std::invalid_argument("double_multiply: parameter mismatch");
    if (u.kind() != v.kind())
        throw std::invalid_argument("double_multiply: kind mismatch");
    Ctx ctx(u.params());
    DoubleElement out(u.params(), u.kind());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms())
            accumulate_basis_product(ctx, u.kind(), ku.first, ku.second, kv.first,
                                     kv.second, cu * cv, out);
    return out;
}

CyclotomicScalar triangular_map_scalar(const GtaParameters& p, std::int64_t c,
                                       std::int64_t d, const DoubleElement::Key& k) {
    const auto [e1, e2] = character_exponents(p, k);
    return CyclotomicScalar::root_power(p.N, -(e1 * d + e2 * c));
}

bool pii_isomorphism_check(const ParamsPtr& params, const PiiCertificate& cert,
                           std::optional<DoublePairWitness>* witness) {
    const auto& p = *params;
    Ctx ctx(params);
    const auto keys = basis_keys(p);

    for (const auto& k : keys) {
        const auto round_trip = triangular_map_scalar(p, cert.c, cert.d, k) *
                                triangular_map_scalar(p, -cert.c, -cert.d, k);
        if (!round_trip.is_one()) {
            if (witness) *witness = DoublePairWitness{k, k};
            return false;
        }
    }

    // Multiplicativity over all basis pairs, factored.  For u = (A (x) k),
    // v = (B (x) h), every term of both products arises from a W-table
    // entry of (a_bar, h) as coeff * common(B, k), with common identical
    // across the two double structures.  Since the character exponents P, Q
    // are additive on nonzero monomial products, the scalar f applies per
    // output term a q-power whose mismatch against f(u) f(v) depends only
    // on the entry, not on (B, k):
    //   lam_w - lam_u - lam_v = -(P(d2) - P(a_bar)) d - (Q(h2) - Q(h)) c.
    // Termwise equality of the (kind-specific) W-tables up to that q-power
    // is therefore equivalent to f(u v) = f(u) f(v) for every basis pair,
    // and a violation is already visible at the pair u = (A (x) 1),
    // v = (eps (x) h), whose product terms are the table entries verbatim.
    for (std::int64_t a_idx = 0; a_idx < p.dimension(); ++a_idx) {
        const auto a_bar = monomial_at(p, a_idx);
        const DualIndex A{a_bar.l, a_bar.i, a_bar.j};
        const auto pa = mod_norm(A.r + p.b1 * A.s + p.b2 * A.t, p.N);
        for (std::int64_t h_idx = 0; h_idx < p.dimension(); ++h_idx) {
            const auto h = monomial_at(p, h_idx);
            const auto qh = mod_norm(p.a1 * h.i + p.a2 * h.j + h.l, p.N);
            const auto wa = build_w_table(ctx, DoubleKind::AntiDrinfeld, a_bar, h);
            const auto wd = build_w_table(ctx, DoubleKind::Drinfeld, a_bar, h);
            const DoublePairWitness pair{{A, {0, 0, 0}}, {{0, 0, 0}, h}};
            if (wa.size() != wd.size()) {
                if (witness) *witness = pair;
                return false;
            }
            for (std::size_t e = 0; e < wa.size(); ++e) {
                const auto& ea = wa[e];
                const auto& ed = wd[e];
                if (ea.d2 != ed.d2 || ea.h2 != ed.h2) {
                    if (witness) *witness = pair;
                    return false;
                }
                const auto pd2 = mod_norm(ea.d2.l + p.b1 * ea.d2.i + p.b2 * ea.d2.j, p.N);
                const auto qh2 = mod_norm(p.a1 * ea.h2.i + p.a2 * ea.h2.j + ea.h2.l, p.N);
                const auto shift = -((pd2 - pa) * cert.d + (qh2 - qh) * cert.c);
                if (ed.coeff != ea.coeff * CyclotomicScalar::root_power(p.N, shift)) {
                    if (witness) *witness = pair;
                    return false;
                }
            }
        }
    }

    // Direct cross-check of the factored argument on a fixed sample of
    // full basis pairs.
    std::mt19937_64 rng(0xD0B1E);
    std::uniform_int_distribution<std::size_t> dist(0, keys.size() - 1);
    const auto one = CyclotomicScalar::one(p.N);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& ku = keys[dist(rng)];
        const auto& kv = keys[dist(rng)];
        DoubleElement in_a(params, DoubleKind::AntiDrinfeld);
        DoubleElement in_d(params, DoubleKind::Drinfeld);
        accumulate_basis_product(ctx, DoubleKind::AntiDrinfeld, ku.first, ku.second,
                                 kv.first, kv.second, one, in_a);
        accumulate_basis_product(ctx, DoubleKind::Drinfeld, ku.first, ku.second,
                                 kv.first, kv.second, one, in_d);
        DoubleElement lhs(params, DoubleKind::Drinfeld);
        for (const auto& [w, c] : in_a.terms())
            lhs.add_term(w, c * triangular_map_scalar(p, cert.c, cert.d, w));
        const auto rhs = in_d * (triangular_map_scalar(p, cert.c, cert.d, ku) *
                                 triangular_map_scalar(p, cert.c, cert.d, kv));
        if (lhs != rhs) {
            if (witness) *witness = DoublePairWitness{ku, kv};
            return false;
        }
    }
    return true;
}

TriangularSearchResult triangular_iso_search(const ParamsPtr& params,
                                             std::uint64_t max_pairs) {
    const auto& p = *params;
    Ctx ctx(params);
    TriangularSearchResult res;

    std::vector<char> alive(static_cast<std::size_t>(p.N * p.N), 1);
    std::int64_t alive_count = p.N * p.N;
    auto kill_all = [&] { std::fill(alive.begin(), alive.end(), 0), alive_count = 0; };
    // Keeps (c, d) with -(dp * d + dq * c) = delta mod N.
    auto filter = [&](std::int64_t dp, std::int64_t dq, std::int64_t delta) {
        for (std::int64_t c = 0; c < p.N; ++c)
            for (std::int64_t d = 0; d < p.N; ++d) {
                auto& flag = alive[static_cast<std::size_t>(c * p.N + d)];
                if (flag && mod_norm(-(dp * d + dq * c) - delta, p.N) != 0) {
                    flag = 0;
                    --alive_count;
                }
            }
    };

    const auto one = CyclotomicScalar::one(p.N);
    auto budget_left = [&] { return max_pairs == 0 || res.pairs_checked < max_pairs; };
    auto process_pair = [&](const DoubleElement::Key& ku, const DoubleElement::Key& kv) {
        ++res.pairs_checked;
        DoubleElement in_a(params, DoubleKind::AntiDrinfeld);
        DoubleElement in_d(params, DoubleKind::Drinfeld);
        accumulate_basis_product(ctx, DoubleKind::AntiDrinfeld, ku.first, ku.second,
                                 kv.first, kv.second, one, in_a);
        accumulate_basis_product(ctx, DoubleKind::Drinfeld, ku.first, ku.second,
                                 kv.first, kv.second, one, in_d);
        const auto [pu, qu] = character_exponents(p, ku);
        const auto [pv, qv] = character_exponents(p, kv);
        // Multiplicativity at this pair demands, termwise over the two
        // product expansions, ca * q^{lam_w - lam_u - lam_v} = cd.
        auto ia = in_a.terms().begin();
        auto id = in_d.terms().begin();
        while (ia != in_a.terms().end() || id != in_d.terms().end()) {
            const CyclotomicScalar* ca = nullptr;
            const CyclotomicScalar* cd = nullptr;
            DoubleElement::Key w;
            if (id == in_d.terms().end() ||
                (ia != in_a.terms().end() && ia->first < id->first)) {
                w = ia->first, ca = &ia->second, ++ia;
            } else if (ia == in_a.terms().end() || id->first < ia->first) {
                w = id->first, cd = &id->second, ++id;
            } else {
                w = ia->first, ca = &ia->second, cd = &id->second, ++ia, ++id;
            }
            if (!ca || !cd) {
                // A term on one side only cannot be matched by any
                // nonzero diagonal scalar.
                kill_all();
                return;
            }
            // The unique delta with ca q^delta = cd, if any.
            std::optional<std::int64_t> delta;
            for (std::int64_t e = 0; e < p.N; ++e)
                if (*ca * CyclotomicScalar::root_power(p.N, e) == *cd) {
                    delta = e;
                    break;
                }
            if (!delta) {
                kill_all();
                return;
            }
            const auto [pw, qw] = character_exponents(p, w);
            const std::int64_t dp = mod_norm(pw - pu - pv, p.N);
            const std::int64_t dq = mod_norm(qw - qu - qv, p.N);
            if (dp == 0 && dq == 0) {
                if (*delta != 0) kill_all();
            } else {
                filter(dp, dq, *delta);
            }
            if (alive_count == 0) return;
        }
    };

    // Generator sweep: the constraints pinning the character exponents
    // already arise from products of xi, psi, phi and g, x, y, so a
    // pair-free algebra is usually settled here.
    const std::vector<DoubleElement::Key> gens = {
        {{1, 0, 0}, {0, 0, 0}}, {{0, 1, 0}, {0, 0, 0}}, {{0, 0, 1}, {0, 0, 0}},
        {{0, 0, 0}, {0, 0, 1}}, {{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {0, 1, 0}}};
    for (const auto& ku : gens) {
        for (const auto& kv : gens) {
            if (alive_count == 0 || !budget_left()) break;
            process_pair(ku, kv);
        }
        if (alive_count == 0 || !budget_left()) break;
    }

    if (alive_count > 0 && budget_left()) {
        // Full enumeration in order of total nilpotent weight, so that the
        // cheap and most discriminating products come first.
        auto keys = basis_keys(p);
        const auto weight = [](const DoubleElement::Key& k) {
            return k.first.s + k.first.t + k.second.i + k.second.j;
        };
        std::stable_sort(keys.begin(), keys.end(),
                         [&](const auto& u, const auto& v) {
                             return weight(u) < weight(v);
                         });
        const std::int32_t max_weight = weight(keys.back());
        bool done = false;
        for (std::int32_t total = 0; total <= 2 * max_weight && !done; ++total) {
            for (const auto& ku : keys) {
                if (weight(ku) > total) break;
                for (const auto& kv : keys) {
                    const auto wv = weight(kv);
                    if (weight(ku) + wv > total) break;
                    if (weight(ku) + wv < total) continue;
                    process_pair(ku, kv);
                    if (alive_count == 0 || !budget_left()) {
                        done = true;
                        break;
                    }
                }
                if (done) break;
            }
        }
        res.exhaustive = !done;
    }

    for (std::int64_t c = 0; c < p.N; ++c)
        for (std::int64_t d = 0; d < p.N; ++d)
            if (alive[static_cast<std::size_t>(c * p.N + d)])
                res.survivors.emplace_back(c, d);
    return res;
}

}  // namespace qtaft
