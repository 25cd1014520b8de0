#ifndef ALCOVE_ALCOVE_HPP
#define ALCOVE_ALCOVE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "alcove/cartan.hpp"
#include "alcove/classical.hpp"
#include "alcove/cyclo.hpp"
#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

// Root-of-unity parameterization: q = exp(2*pi*i * qNum/qDen).
struct QSpec {
    RootDatum datum;
    Int qNum = 1;    // a
    Int qDen = 1;    // n
    Int ell = 1;     // order of q^2
    bool divisible = false;
    bool validated = false;
    Rational level;      // ell/m - h_vee
    Weight beta;         // affine wall root (labels)
    Int betaHalfNorm = 1;
    Int fieldOrder = 1;  // n * gramDenominator: ambient cyclotomic order

    // q as an element of Q(zeta_fieldOrder)
    Cyclotomic q() const {
        return Cyclotomic::zeta(fieldOrder, qNum * datum.gramDenominator);
    }

    // q^r for rational r with denominator dividing gramDenominator,
    // through the principal root q^(1/D) = zeta_{nD}^a.
    Cyclotomic qPower(const Rational& r) const {
        Rational e = Rational(qNum) * r * datum.gramDenominator;
        return Cyclotomic::zeta(fieldOrder, to_int(e));
    }

    // Integer coroot-style pairing <x, beta^vee>.
    Int betaCorootPairing(const Weight& x) const {
        return to_int(datum.innerProduct(x, beta) / betaHalfNorm);
    }

    std::string key() const {
        return datum.lieType.str() + ":" + std::to_string(qNum) + "/" + std::to_string(qDen);
    }
};

namespace detail {

// Figure-of-merit lower bounds on ell for a well-behaved category.
inline Int ellLowerBound(const LieType& t, bool divisible) {
    switch (t.family) {
        case LieFamily::A: return t.rank + 1;
        case LieFamily::B: return divisible ? 4 * t.rank - 2 : 2 * t.rank + 1;
        case LieFamily::C: return divisible ? 2 * t.rank + 2 : 2 * t.rank + 1;
        case LieFamily::D: return 2 * t.rank - 2;
        case LieFamily::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
        case LieFamily::F: return divisible ? 18 : 13;
        case LieFamily::G: return divisible ? 12 : 7;
    }
    throw parameter_error("unknown family");
}

struct QuantumCache {
    std::mutex mu;
    std::map<Weight, Cyclotomic> dims;
};

inline QuantumCache& quantumCache(const QSpec& qspec) {
    static std::mutex mapMu;
    static std::map<std::string, std::unique_ptr<QuantumCache>> caches;
    std::lock_guard<std::mutex> lock(mapMu);
    auto& slot = caches[qspec.key()];
    if (!slot) slot = std::make_unique<QuantumCache>();
    return *slot;
}

}  // namespace detail

inline QSpec makeQSpec(RootDatum datum, Int a, Int n) {
    if (n < 3) throw parameter_error("q denominator must be at least 3");
    Int aRed = a % n;
    if (aRed < 0) aRed += n;
    if (std::gcd(aRed, n) != 1)
        throw parameter_error("q exponent " + std::to_string(a) + "/" + std::to_string(n) +
                              " must be in lowest terms");
    QSpec s;
    s.qNum = aRed;
    s.qDen = n;
    s.ell = n % 2 == 1 ? n : n / 2;
    s.divisible = s.ell % datum.lacing == 0;
    s.validated = s.ell >= detail::ellLowerBound(datum.lieType, s.divisible);
    s.level = Rational(s.ell, datum.lacing) - datum.dualCoxeter;
    s.beta = s.divisible ? datum.highestLongRoot : datum.highestShortRoot;
    s.betaHalfNorm = to_int(datum.innerProduct(s.beta, s.beta) / 2);
    s.fieldOrder = n * datum.gramDenominator;
    s.datum = std::move(datum);
    return s;
}

// Positive-integer-level shorthand: q = exp(pi*i/ell) with ell = m(k + h_vee).
inline QSpec makeQSpecLevel(RootDatum datum, Int k) {
    if (k < 0) throw parameter_error("level must be nonnegative");
    Int ell = datum.lacing * (k + datum.dualCoxeter);
    return makeQSpec(std::move(datum), 1, 2 * ell);
}

struct FoldResult {
    bool onWall = false;
    Weight weight;  // meaningful only when !onWall
    Int sign = 1;
};

// rho-shifted dot-action folding into the open alcove.
inline FoldResult foldToAlcove(const QSpec& qspec, const Weight& w) {
    const RootDatum& datum = qspec.datum;
    Weight x = addWeights(w, datum.rho);
    Int sign = 1;
    while (true) {
        auto fold = detail::dominantOfSigned(datum, std::move(x));
        if (fold.onWall) return {true, {}, 1};
        sign *= fold.sign;
        x = std::move(fold.dominant);
        Int cp = qspec.betaCorootPairing(x);
        Int t = cp * qspec.betaHalfNorm;  // <x, beta>
        if (t < qspec.ell) break;
        if (t == qspec.ell) return {true, {}, 1};
        // affine reflection across <x, beta> = ell: x -> x - (t - ell) beta^vee
        Int c = (t - qspec.ell) / qspec.betaHalfNorm;
        if (c * qspec.betaHalfNorm != t - qspec.ell)
            throw integrity_error("affine reflection left the weight lattice");
        for (int j = 0; j < datum.rank; ++j) x[j] -= c * qspec.beta[j];
        sign = -sign;
    }
    return {false, subWeights(x, datum.rho), sign};
}

// The Weyl alcove: simple objects of the category, lexicographically ordered.
struct Alcove {
    QSpec qspec;
    std::vector<Weight> simples;
    std::map<Weight, int> index;

    int indexOf(const Weight& w) const {
        auto it = index.find(w);
        if (it == index.end()) throw parameter_error("weight is not in the alcove");
        return it->second;
    }
    bool contains(const Weight& w) const { return index.count(w) != 0; }
    int unitIndex() const { return indexOf(Weight(qspec.datum.rank, 0)); }
};

inline Alcove enumerateAlcove(const QSpec& qspec, Int cap = 200000) {
    const RootDatum& datum = qspec.datum;
    // <lambda + rho, beta> < ell with all labels >= 0; each unit of label i
    // contributes <lambda_i, beta> > 0, so a bounded lexicographic scan works.
    std::vector<Rational> unitCost(datum.rank);
    for (int i = 0; i < datum.rank; ++i) {
        Weight e(datum.rank, 0);
        e[i] = 1;
        unitCost[i] = datum.innerProduct(e, qspec.beta);
        if (unitCost[i] <= 0) throw integrity_error("affine root pairing not positive");
    }
    Rational budget = Rational(qspec.ell) - datum.innerProduct(datum.rho, qspec.beta);

    Alcove alc;
    alc.qspec = qspec;
    Weight current(datum.rank, 0);
    auto scan = [&](auto&& self, int i, Rational remaining) -> void {
        if (i == datum.rank) {
            if (static_cast<Int>(alc.simples.size()) >= cap)
                throw capacity_error("alcove exceeds cap of " + std::to_string(cap) + " simples");
            alc.simples.push_back(current);
            return;
        }
        for (Int s = 0;; ++s) {
            Rational left = remaining - s * unitCost[i];
            if (left <= 0) break;
            current[i] = s;
            self(self, i + 1, left);
        }
        current[i] = 0;
    };
    if (budget > 0) scan(scan, 0, budget);
    std::sort(alc.simples.begin(), alc.simples.end());
    for (size_t i = 0; i < alc.simples.size(); ++i)
        alc.index[alc.simples[i]] = static_cast<int>(i);
    return alc;
}

// [n] with respect to q, as an element of the ambient field.
inline Cyclotomic quantumInteger(const QSpec& qspec, Int n) {
    return quantumInteger(qspec.q(), n);
}

// Quantum Weyl dimension formula.
inline Cyclotomic quantumDimension(const QSpec& qspec, const Weight& lambda) {
    if (!isDominant(lambda)) throw parameter_error("quantumDimension: weight must be dominant");
    auto& cache = detail::quantumCache(qspec);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.dims.find(lambda);
        if (it != cache.dims.end()) return it->second;
    }
    const RootDatum& datum = qspec.datum;
    Cyclotomic q = qspec.q();
    Weight lr = addWeights(lambda, datum.rho);
    Cyclotomic num = Cyclotomic::fromRational(qspec.fieldOrder, 1);
    Cyclotomic den = num;
    for (const auto& alpha : datum.positiveRoots) {
        num = num * quantumInteger(q, to_int(datum.innerProduct(alpha.labels, lr)));
        den = den * quantumInteger(q, to_int(datum.innerProduct(alpha.labels, datum.rho)));
    }
    Cyclotomic result = num / den;
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.dims.emplace(lambda, result);
    return result;
}

}  // namespace alcove

#endif
