#ifndef ALCOVE_CYCLO_HPP
#define ALCOVE_CYCLO_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

namespace detail {

using Poly = std::vector<Rational>;  // ascending coefficients

inline void polyTrim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly polyMul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    polyTrim(out);
    return out;
}

// Remainder of a modulo the monic polynomial m.
inline Poly polyMod(Poly a, const Poly& m) {
    polyTrim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t j = 0; j < dm; ++j) a[shift + j] -= lead * m[j];
        a.pop_back();
        polyTrim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

// Exact quotient a / b (no remainder expected).
inline Poly polyDivExact(Poly a, const Poly& b) {
    polyTrim(a);
    Poly q;
    if (a.empty()) return q;
    if (a.size() < b.size()) throw integrity_error("polynomial division underflow");
    q.assign(a.size() - b.size() + 1, Rational(0));
    Rational blead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        Rational c = a.back() / blead;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        polyTrim(a);
    }
    if (!a.empty()) throw integrity_error("polynomial division left a remainder");
    return q;
}

// Cyclotomic polynomial Phi_N, computed as (x^N - 1) / prod_{d|N, d<N} Phi_d.
inline const Poly& cyclotomicPoly(Int n) {
    static std::mutex mu;
    static std::map<Int, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Iterative fill in increasing divisor order so recursion stays in-lock.
    std::vector<Int> need{n};
    for (size_t head = 0; head < need.size(); ++head) {
        Int m = need[head];
        for (Int d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            for (Int dd : {d, m / d})
                if (dd < m && !cache.count(dd)) need.push_back(dd);
        }
    }
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    for (Int m : need) {
        if (cache.count(m)) continue;
        Poly p(static_cast<size_t>(m) + 1, Rational(0));
        p[0] = -1;
        p[static_cast<size_t>(m)] = 1;  // x^m - 1
        for (Int d = 1; d < m; ++d)
            if (m % d == 0) p = polyDivExact(std::move(p), cache.at(d));
        cache.emplace(m, std::move(p));
    }
    return cache.at(n);
}

// Extended gcd over Q[x]: returns (g, s) with s*a = g (mod m), g monic.
inline std::pair<Poly, Poly> polyHalfExtGcd(Poly a, Poly m) {
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly s0 = {}, s1 = {Rational(1)};
    polyTrim(r0);
    polyTrim(r1);
    while (!r1.empty()) {
        // quotient of r0 by r1
        Poly q;
        Poly rem = r0;
        polyTrim(rem);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, Rational(0));
            Rational lead = r1.back();
            while (!rem.empty() && rem.size() >= r1.size()) {
                Rational c = rem.back() / lead;
                size_t shift = rem.size() - r1.size();
                q[shift] += c;
                for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
                polyTrim(rem);
            }
        }
        Poly qs1 = polyMul(q, s1);
        Poly snew = s0;
        if (snew.size() < qs1.size()) snew.resize(qs1.size(), Rational(0));
        for (size_t i = 0; i < qs1.size(); ++i) snew[i] -= qs1[i];
        polyTrim(snew);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    if (r0.empty()) throw integrity_error("extended gcd of zero polynomials");
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
    return {std::move(r0), std::move(s0)};
}

}  // namespace detail

// Element of Q(zeta_N) in the power basis 1, zeta, ..., reduced modulo Phi_N.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1) {}

    static Cyclotomic zero(Int order) { return Cyclotomic(order); }

    static Cyclotomic fromRational(Int order, const Rational& r) {
        Cyclotomic c(order);
        if (r != 0) c.coeffs_ = {r};
        return c;
    }

    // zeta_order^k
    static Cyclotomic zeta(Int order, Int k) {
        Cyclotomic c(order);
        k %= order;
        if (k < 0) k += order;
        detail::Poly p(static_cast<size_t>(k) + 1, Rational(0));
        p[static_cast<size_t>(k)] = 1;
        c.coeffs_ = detail::polyMod(std::move(p), detail::cyclotomicPoly(order));
        return c;
    }

    Int order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool isZero() const { return coeffs_.empty(); }

    bool isRational() const { return coeffs_.size() <= 1; }

    Rational rationalValue() const {
        if (!isRational()) throw integrity_error("cyclotomic value is not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    // Same value viewed in Q(zeta_M) for M a multiple of the current order.
    Cyclotomic promoted(Int newOrder) const {
        if (newOrder == order_) return *this;
        if (newOrder % order_ != 0)
            throw parameter_error("cyclotomic promotion target must be a multiple of the order");
        Cyclotomic out(newOrder);
        Int stride = newOrder / order_;
        detail::Poly p(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * stride + 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) p[i * stride] = coeffs_[i];
        out.coeffs_ = detail::polyMod(std::move(p), detail::cyclotomicPoly(newOrder));
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        if (x.coeffs_.size() < y.coeffs_.size()) x.coeffs_.resize(y.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        detail::polyTrim(x.coeffs_);
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        Cyclotomic out(x.order_);
        out.coeffs_ =
            detail::polyMod(detail::polyMul(x.coeffs_, y.coeffs_), detail::cyclotomicPoly(x.order_));
        return out;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& r) {
        Cyclotomic out = a;
        if (r == 0) {
            out.coeffs_.clear();
            return out;
        }
        for (auto& c : out.coeffs_) c *= r;
        return out;
    }
    friend Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return a * r; }

    Cyclotomic inverse() const {
        if (isZero()) throw parameter_error("cyclotomic division by zero");
        auto [g, s] = detail::polyHalfExtGcd(coeffs_, detail::cyclotomicPoly(order_));
        if (g.size() != 1) throw integrity_error("cyclotomic element not invertible");
        Cyclotomic out(order_);
        out.coeffs_ = detail::polyMod(std::move(s), detail::cyclotomicPoly(order_));
        return out;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        return x * y.inverse();
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Ring automorphism zeta -> zeta^k for gcd(k, order) = 1.
    Cyclotomic galoisApply(Int k) const {
        k %= order_;
        if (k < 0) k += order_;
        if (std::gcd(k, order_) != 1)
            throw parameter_error("Galois exponent must be coprime to the field order");
        detail::Poly p(static_cast<size_t>(order_), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            p[static_cast<size_t>((static_cast<Int>(i) * k) % order_)] += coeffs_[i];
        }
        Cyclotomic out(order_);
        out.coeffs_ = detail::polyMod(std::move(p), detail::cyclotomicPoly(order_));
        return out;
    }

    Cyclotomic conjugate() const { return order_ == 1 ? *this : galoisApply(order_ - 1); }

    std::complex<double> approx() const {
        std::complex<double> z(0.0, 0.0);
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            double theta = 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                           static_cast<double>(order_);
            z += to_double(coeffs_[i]) * std::complex<double>(std::cos(theta), std::sin(theta));
        }
        return z;
    }

  private:
    explicit Cyclotomic(Int order) : order_(order) {
        if (order < 1) throw parameter_error("cyclotomic order must be positive");
    }

    static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return {a, b};
        Int l = std::lcm(a.order_, b.order_);
        return {a.promoted(l), b.promoted(l)};
    }

    Int order_;
    std::vector<Rational> coeffs_;
};

// [m]_q = q^{m-1} + q^{m-3} + ... + q^{1-m} for an integer power q of a root of
// unity; [-m] = -[m], [0] = 0.
inline Cyclotomic quantumInteger(const Cyclotomic& q, Int m) {
    if (m < 0) return -quantumInteger(q, -m);
    Cyclotomic sum = Cyclotomic::zero(q.order());
    Cyclotomic power = Cyclotomic::fromRational(q.order(), 1);
    // build q^{1-m}, then step by q^2
    Cyclotomic qinv = q.inverse();
    for (Int j = 0; j < m - 1; ++j) power = power * qinv;
    Cyclotomic q2 = q * q;
    for (Int j = 0; j < m; ++j) {
        sum = sum + power;
        power = power * q2;
    }
    return sum;
}

}  // namespace alcove

#endif
