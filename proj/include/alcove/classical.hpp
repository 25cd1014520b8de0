#ifndef ALCOVE_CLASSICAL_HPP
#define ALCOVE_CLASSICAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcove/cartan.hpp"
#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

// Weight diagram of an irreducible module: dominant weights with multiplicities,
// expandable to the full W-orbit view.
struct WeightDiagram {
    Weight highest;
    std::map<Weight, Int> dominantMultiplicities;

    Int multiplicity(const RootDatum& datum, const Weight& w) const {
        Weight d = dominantOf(datum, w);
        auto it = dominantMultiplicities.find(d);
        return it == dominantMultiplicities.end() ? 0 : it->second;
    }

    std::vector<std::pair<Weight, Int>> expanded(const RootDatum& datum) const {
        std::vector<std::pair<Weight, Int>> out;
        for (const auto& [dom, mult] : dominantMultiplicities)
            for (const auto& w : weylOrbit(datum, dom)) out.emplace_back(w, mult);
        return out;
    }

    BigInt dimension(const RootDatum& datum) const {
        BigInt total = 0;
        for (const auto& [dom, mult] : dominantMultiplicities)
            total += BigInt(weylOrbit(datum, dom).size()) * mult;
        return total;
    }
};

namespace detail {

// Dominant representative plus the sign (-1)^#reflections; onWall if the
// orbit meets a chamber wall (some label of the representative is zero).
struct SignedFold {
    Weight dominant;
    Int sign = 1;
    bool onWall = false;
};

inline SignedFold dominantOfSigned(const RootDatum& datum, Weight w) {
    SignedFold f;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < datum.rank; ++i) {
            Int c = w[i];
            if (c < 0) {
                for (int j = 0; j < datum.rank; ++j) w[j] -= c * datum.cartan[i][j];
                f.sign = -f.sign;
                moved = true;
            }
        }
    }
    for (Int x : w)
        if (x == 0) f.onWall = true;
    f.dominant = std::move(w);
    return f;
}

// Per-datum caches, shared by value-returning free functions.
struct ClassicalCache {
    std::mutex mu;
    std::map<std::pair<int, std::vector<Int>>, Int> partition;
    std::optional<std::vector<WeylElement>> weyl;
    std::map<Weight, std::shared_ptr<const WeightDiagram>> diagrams;
    std::map<Weight, std::shared_ptr<const std::vector<std::pair<Weight, Int>>>> expandedDiagrams;
};

inline ClassicalCache& classicalCache(const RootDatum& datum) {
    static std::mutex mapMu;
    static std::map<std::string, std::unique_ptr<ClassicalCache>> caches;
    std::lock_guard<std::mutex> lock(mapMu);
    auto& slot = caches[datum.lieType.str()];
    if (!slot) slot = std::make_unique<ClassicalCache>();
    return *slot;
}

inline Int kostantPartitionRec(const RootDatum& datum, ClassicalCache& cache, int rootIdx,
                               const std::vector<Int>& v) {
    bool allZero = true;
    for (Int x : v) {
        if (x < 0) return 0;
        if (x != 0) allZero = false;
    }
    if (allZero) return 1;
    if (rootIdx >= static_cast<int>(datum.positiveRoots.size())) return 0;
    std::pair<int, std::vector<Int>> key{rootIdx, v};
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.partition.find(key);
        if (it != cache.partition.end()) return it->second;
    }
    const auto& root = datum.positiveRoots[rootIdx].rootCoords;
    Int total = 0;
    std::vector<Int> rest = v;
    while (true) {
        total += kostantPartitionRec(datum, cache, rootIdx + 1, rest);
        bool ok = true;
        for (int j = 0; j < datum.rank; ++j) {
            rest[j] -= root[j];
            if (rest[j] < 0) ok = false;
        }
        if (!ok) break;
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.partition.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

// Kostant's partition function: the number of multisets of positive roots
// summing to v (simple-root coordinates).
inline Int kostantPartition(const RootDatum& datum, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != datum.rank)
        throw parameter_error("kostantPartition: vector length does not match rank");
    auto& cache = detail::classicalCache(datum);
    return detail::kostantPartitionRec(datum, cache, 0, v);
}

inline const std::vector<WeylElement>& cachedWeyl(const RootDatum& datum, Int cap = 3000000) {
    auto& cache = detail::classicalCache(datum);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.weyl) return *cache.weyl;
    }
    auto elems = enumerateWeyl(datum, cap);
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.weyl) cache.weyl = std::move(elems);
    return *cache.weyl;
}

// m_lambda(mu) by the Weyl-sum multiplicity formula.
inline Int kostantMultiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                               Int weylCap = 3000000) {
    if (!isDominant(lambda)) throw parameter_error("kostantMultiplicity: lambda must be dominant");
    // lambda - mu must lie in the root lattice, else the multiplicity is zero.
    {
        auto rc = datum.weightToRootCoords(subWeights(lambda, mu));
        for (const auto& x : rc)
            if (!is_integer(x)) return 0;
    }
    Weight lr = addWeights(lambda, datum.rho);
    Weight mr = addWeights(mu, datum.rho);
    Int total = 0;
    for (const auto& sigma : cachedWeyl(datum, weylCap)) {
        Weight arg = subWeights(sigma.apply(lr), mr);
        auto rc = datum.weightToRootCoords(arg);
        std::vector<Int> v(datum.rank);
        bool ok = true;
        for (int i = 0; i < datum.rank; ++i) {
            if (!is_integer(rc[i]) || rc[i] < 0) { ok = false; break; }
            v[i] = to_int(rc[i]);
        }
        if (!ok) continue;
        total += sigma.sign() * kostantPartition(datum, v);
    }
    return total;
}

// Full weight diagram, built top-down with the Freudenthal recursion.
inline std::shared_ptr<const WeightDiagram> weightDiagram(const RootDatum& datum, const Weight& lambda,
                                                          Int weightCap = 2000000) {
    if (!isDominant(lambda)) throw parameter_error("weightDiagram: highest weight must be dominant");
    auto& cache = detail::classicalCache(datum);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.diagrams.find(lambda);
        if (it != cache.diagrams.end()) return it->second;
    }

    // Enumerate the weight set: BFS downward by simple roots, keeping weights
    // whose dominant representative mu satisfies lambda - mu in the
    // nonnegative-integer root span.
    std::set<Weight> weights;
    std::vector<Weight> queue{lambda};
    weights.insert(lambda);
    std::map<Weight, Int> dominantHeight;  // height of lambda - mu
    auto heightIfMember = [&](const Weight& dom) -> std::optional<Int> {
        auto rc = datum.weightToRootCoords(subWeights(lambda, dom));
        Int h = 0;
        for (const auto& x : rc) {
            if (!is_integer(x) || x < 0) return std::nullopt;
            h += to_int(x);
        }
        return h;
    };
    dominantHeight[lambda] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        Weight w = queue[head];
        for (int i = 0; i < datum.rank; ++i) {
            Weight next = w;
            for (int j = 0; j < datum.rank; ++j) next[j] -= datum.cartan[i][j];
            if (weights.count(next)) continue;
            Weight dom = dominantOf(datum, next);
            auto h = heightIfMember(dom);
            if (!h) continue;
            weights.insert(next);
            queue.push_back(std::move(next));
            if (static_cast<Int>(weights.size()) > weightCap)
                throw capacity_error("weight diagram exceeds cap of " + std::to_string(weightCap) +
                                     " weights");
            dominantHeight.emplace(dom, *h);
        }
    }

    // Freudenthal recursion on dominant weights in increasing height order.
    std::vector<std::pair<Int, Weight>> order;
    for (const auto& [dom, h] : dominantHeight)
        if (isDominant(dom)) order.emplace_back(h, dom);
    std::sort(order.begin(), order.end());

    auto diagram = std::make_shared<WeightDiagram>();
    diagram->highest = lambda;
    Weight lr = addWeights(lambda, datum.rho);
    Rational lrNorm = datum.innerProduct(lr, lr);
    for (const auto& [h, mu] : order) {
        if (h == 0) {
            diagram->dominantMultiplicities[mu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& alpha : datum.positiveRoots) {
            for (Int j = 1;; ++j) {
                Weight shifted = mu;
                for (int t = 0; t < datum.rank; ++t) shifted[t] += j * alpha.labels[t];
                Int m = diagram->multiplicity(datum, shifted);
                if (m == 0) break;
                sum += Rational(m) * datum.innerProduct(shifted, alpha.labels);
            }
        }
        Weight mr = addWeights(mu, datum.rho);
        Rational denom = lrNorm - datum.innerProduct(mr, mr);
        if (denom <= 0) throw integrity_error("Freudenthal denominator not positive");
        Rational m = 2 * sum / denom;
        diagram->dominantMultiplicities[mu] = to_int(m);
    }

    std::lock_guard<std::mutex> lock(cache.mu);
    auto [it, inserted] = cache.diagrams.emplace(lambda, diagram);
    return it->second;
}

inline Int freudenthalMultiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
    return weightDiagram(datum, lambda)->multiplicity(datum, mu);
}

// Expanded (weight, multiplicity) list of the diagram of lambda, cached.
inline std::shared_ptr<const std::vector<std::pair<Weight, Int>>> expandedDiagram(
    const RootDatum& datum, const Weight& lambda) {
    auto& cache = detail::classicalCache(datum);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.expandedDiagrams.find(lambda);
        if (it != cache.expandedDiagrams.end()) return it->second;
    }
    auto diag = weightDiagram(datum, lambda);
    auto expanded = std::make_shared<std::vector<std::pair<Weight, Int>>>(diag->expanded(datum));
    std::lock_guard<std::mutex> lock(cache.mu);
    auto [it, inserted] = cache.expandedDiagrams.emplace(lambda, expanded);
    return it->second;
}

// Weyl dimension formula.
inline BigInt weylDimension(const RootDatum& datum, const Weight& lambda) {
    if (!isDominant(lambda)) throw parameter_error("weylDimension: weight must be dominant");
    Weight lr = addWeights(lambda, datum.rho);
    Rational prod = 1;
    for (const auto& alpha : datum.positiveRoots)
        prod *= datum.innerProduct(lr, alpha.labels) / datum.innerProduct(datum.rho, alpha.labels);
    return to_integer(prod);
}

// Tensor-product decomposition by folding the gamma-shifted diagram of lambda
// across the dominant chamber walls.
inline std::map<Weight, Int> racahSpeiser(const RootDatum& datum, const Weight& lambda,
                                          const Weight& gamma) {
    if (!isDominant(lambda) || !isDominant(gamma))
        throw parameter_error("racahSpeiser: weights must be dominant");
    // Fold the diagram of the smaller factor; the product is symmetric.
    const Weight* diagramOf = &lambda;
    const Weight* shiftBy = &gamma;
    if (weylDimension(datum, gamma) < weylDimension(datum, lambda)) std::swap(diagramOf, shiftBy);

    std::map<Weight, Int> result;
    Weight shiftRho = addWeights(*shiftBy, datum.rho);
    for (const auto& [nu, mult] : *expandedDiagram(datum, *diagramOf)) {
        Weight x = addWeights(shiftRho, nu);
        auto fold = detail::dominantOfSigned(datum, x);
        if (fold.onWall) continue;
        result[subWeights(fold.dominant, datum.rho)] += fold.sign * mult;
    }
    for (auto it = result.begin(); it != result.end();) {
        if (it->second < 0) throw integrity_error("negative tensor multiplicity");
        it = it->second == 0 ? result.erase(it) : std::next(it);
    }
    return result;
}

}  // namespace alcove

#endif
