#include "qtaft/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qtaft {

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by the monic divisor b; throws if the division is not exact.
IntPoly exact_divide(IntPoly a, const IntPoly& b) {
    if (b.empty() || b.back() != 1)
        throw std::logic_error("exact_divide: divisor must be monic");
    IntPoly q;
    if (a.size() < b.size()) {
        trim(a);
        if (!a.empty()) throw std::logic_error("exact_divide: not divisible");
        return q;
    }
    q.assign(a.size() - b.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int c = a[k + b.size() - 1];
        if (c == 0) continue;
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("exact_divide: not divisible");
    return q;
}

// Remainder of a modulo the monic polynomial m, in place.
void reduce_mod(IntPoly& a, const IntPoly& m) {
    const std::size_t deg = m.size() - 1;
    for (std::size_t k = a.size(); k-- > deg;) {
        Int c = a[k];
        if (c == 0) continue;
        a[k] = 0;
        for (std::size_t i = 0; i < deg; ++i) a[k - deg + i] -= c * m[i];
    }
    a.resize(deg);
}

}  // namespace

const IntPoly& cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    static std::map<std::int64_t, IntPoly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // X^N - 1 divided by the cyclotomic polynomials of the proper divisors.
    IntPoly num(static_cast<std::size_t>(n) + 1, Int(0));
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto dit = cache.find(d);
        if (dit == cache.end()) {
            // Divisors are computed in increasing order, so recurse by loop.
            // (unlock-free: we hold the lock, compute inline)
            IntPoly sub(static_cast<std::size_t>(d) + 1, Int(0));
            sub[0] = -1;
            sub[static_cast<std::size_t>(d)] = 1;
            for (std::int64_t e = 1; e < d; ++e)
                if (d % e == 0) sub = exact_divide(std::move(sub), cache.at(e));
            dit = cache.emplace(d, std::move(sub)).first;
        }
        num = exact_divide(std::move(num), dit->second);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

std::int64_t euler_totient(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_totient: N must be positive");
    std::int64_t result = n;
    std::int64_t m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

CyclotomicScalar CyclotomicScalar::zero(std::int64_t order) {
    return CyclotomicScalar(order, std::vector<Int>(
        static_cast<std::size_t>(cyclotomic_polynomial(order).size() - 1)));
}

CyclotomicScalar CyclotomicScalar::one(std::int64_t order) {
    return from_integer(order, 1);
}

CyclotomicScalar CyclotomicScalar::from_integer(std::int64_t order, const Int& value) {
    auto s = zero(order);
    s.coeffs_[0] = value;
    return s;
}

CyclotomicScalar CyclotomicScalar::root_power(std::int64_t order, std::int64_t exponent) {
    if (order < 1) throw std::invalid_argument("root_power: N must be positive");
    std::int64_t e = exponent % order;
    if (e < 0) e += order;
    const IntPoly& phi = cyclotomic_polynomial(order);
    IntPoly p(static_cast<std::size_t>(e) + 1, Int(0));
    p[static_cast<std::size_t>(e)] = 1;
    if (p.size() >= phi.size()) reduce_mod(p, phi);
    p.resize(phi.size() - 1);
    return CyclotomicScalar(order, std::move(p));
}

bool CyclotomicScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicScalar::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void CyclotomicScalar::check_order(const CyclotomicScalar& rhs) const {
    if (order_ != rhs.order_)
        throw std::invalid_argument("cyclotomic: mixing scalars of different order");
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& rhs) {
    check_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& rhs) {
    check_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& rhs) {
    check_order(rhs);
    const std::size_t n = coeffs_.size();
    IntPoly prod(2 * n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    reduce_mod(prod, cyclotomic_polynomial(order_));
    coeffs_ = std::move(prod);
    return *this;
}

CyclotomicScalar CyclotomicScalar::operator+(const CyclotomicScalar& rhs) const {
    auto r = *this;
    r += rhs;
    return r;
}

CyclotomicScalar CyclotomicScalar::operator-(const CyclotomicScalar& rhs) const {
    auto r = *this;
    r -= rhs;
    return r;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
    auto r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicScalar CyclotomicScalar::operator*(const CyclotomicScalar& rhs) const {
    auto r = *this;
    r *= rhs;
    return r;
}

bool CyclotomicScalar::operator==(const CyclotomicScalar& rhs) const {
    return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
}

std::string CyclotomicScalar::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (any) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        Int a = abs(coeffs_[i]);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

CyclotomicScalar gauss_binomial(std::int64_t n, std::int64_t k, std::int64_t e,
                                std::int64_t order) {
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("gauss_binomial: need 0 <= k <= n");
    const auto base = CyclotomicScalar::root_power(order, e);
    // Row-by-row DP over the defining recursion.
    std::vector<CyclotomicScalar> row{CyclotomicScalar::one(order)};
    for (std::int64_t m = 1; m <= n; ++m) {
        std::vector<CyclotomicScalar> next(static_cast<std::size_t>(m) + 1,
                                           CyclotomicScalar::zero(order));
        next[0] = CyclotomicScalar::one(order);
        auto tk = CyclotomicScalar::one(order);
        for (std::int64_t i = 1; i <= m; ++i) {
            tk *= base;  // t^i
            next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)];
            if (i < m)
                next[static_cast<std::size_t>(i)] += tk * row[static_cast<std::size_t>(i)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace qtaft
