#ifndef ALCOVE_FUSION_HPP
#define ALCOVE_FUSION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "alcove/alcove.hpp"
#include "alcove/classical.hpp"
#include "alcove/errors.hpp"

namespace alcove {

inline bool inAlcove(const QSpec& qspec, const Weight& w) {
    if (!isDominant(w)) return false;
    Weight x = addWeights(w, qspec.datum.rho);
    return qspec.betaCorootPairing(x) * qspec.betaHalfNorm < qspec.ell;
}

// Truncated tensor product: fold the gamma-translated diagram of the
// smaller-dimension factor through the affine dot action.
inline std::map<Weight, Int> fuse(const QSpec& qspec, const Weight& lambda, const Weight& gamma) {
    if (!inAlcove(qspec, lambda) || !inAlcove(qspec, gamma))
        throw parameter_error("fuse: weights must lie in the alcove");
    const Weight* diagramOf = &lambda;
    const Weight* shiftBy = &gamma;
    if (weylDimension(qspec.datum, gamma) < weylDimension(qspec.datum, lambda))
        std::swap(diagramOf, shiftBy);

    std::map<Weight, Int> result;
    for (const auto& [nu, mult] : *expandedDiagram(qspec.datum, *diagramOf)) {
        FoldResult f = foldToAlcove(qspec, addWeights(*shiftBy, nu));
        if (f.onWall) continue;
        result[f.weight] += f.sign * mult;
    }
    for (auto it = result.begin(); it != result.end();) {
        if (it->second < 0) throw integrity_error("negative fusion coefficient");
        it = it->second == 0 ? result.erase(it) : std::next(it);
    }
    return result;
}

// Direct evaluation of the affine-Weyl fusion sum, truncated at increasing
// word length until two consecutive increments change nothing. Slow; used to
// cross-check fuse.
inline std::map<Weight, Int> fuseAffineOracle(const QSpec& qspec, const Weight& lambda,
                                              const Weight& gamma, Int maxDepth = 8) {
    if (!inAlcove(qspec, lambda) || !inAlcove(qspec, gamma))
        throw parameter_error("fuse: weights must lie in the alcove");
    const RootDatum& datum = qspec.datum;
    const int r = datum.rank;

    struct AffineMap {
        IntMatrix m;
        Weight o;
        Int sign;
        Weight apply(const Weight& x) const {
            int n = static_cast<int>(o.size());
            Weight out = o;
            for (int i = 0; i < n; ++i) {
                if (x[i] == 0) continue;
                for (int j = 0; j < n; ++j) out[j] += m[i][j] * x[i];
            }
            return out;
        }
    };

    // generators on the rho-shifted space: simple reflections and the affine
    // reflection across <x, beta> = ell
    std::vector<AffineMap> gens;
    for (int i = 1; i <= r; ++i)
        gens.push_back({simpleReflection(datum, i).matrix, Weight(r, 0), -1});
    {
        // coroot coordinates of beta^vee: cp(x) = sum_j x_j cv_j
        std::vector<Int> cv(r);
        for (int j = 0; j < r; ++j) {
            Weight e(r, 0);
            e[j] = 1;
            cv[j] = to_int(datum.innerProduct(e, qspec.beta) / qspec.betaHalfNorm);
        }
        if (qspec.ell % qspec.betaHalfNorm != 0)
            throw integrity_error("affine generator does not preserve the weight lattice");
        Int c = qspec.ell / qspec.betaHalfNorm;
        AffineMap a;
        a.m.assign(r, std::vector<Int>(r, 0));
        for (int i = 0; i < r; ++i) {
            a.m[i][i] = 1;
            for (int j = 0; j < r; ++j) a.m[i][j] -= cv[i] * qspec.beta[j];
        }
        a.o.assign(r, 0);
        for (int j = 0; j < r; ++j) a.o[j] = c * qspec.beta[j];
        a.sign = -1;
        gens.push_back(std::move(a));
    }

    auto diag = weightDiagram(datum, lambda);
    Alcove alc = enumerateAlcove(qspec);
    Weight gr = gamma;

    std::map<Weight, Int> totals;
    auto addLayer = [&](const std::vector<AffineMap>& layer) -> bool {
        bool changed = false;
        for (const auto& tau : layer) {
            for (const auto& mu : alc.simples) {
                // dot action: tau(mu) = M(mu+rho) + o - rho
                Weight x = tau.apply(addWeights(mu, datum.rho));
                Weight arg = subWeights(subWeights(x, datum.rho), gr);
                Int m = diag->multiplicity(datum, arg);
                if (m == 0) continue;
                totals[mu] += tau.sign * m;
                changed = true;
            }
        }
        return changed;
    };

    std::map<std::pair<IntMatrix, Weight>, Int> seen;
    AffineMap id;
    id.m.assign(r, std::vector<Int>(r, 0));
    for (int i = 0; i < r; ++i) id.m[i][i] = 1;
    id.o.assign(r, 0);
    id.sign = 1;
    seen[{id.m, id.o}] = 1;
    std::vector<AffineMap> frontier{id};
    addLayer(frontier);
    Int quiet = 0;
    for (Int depth = 1; depth <= maxDepth && quiet < 2; ++depth) {
        std::vector<AffineMap> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                AffineMap prod;  // apply w, then g
                prod.m.assign(r, std::vector<Int>(r, 0));
                for (int a = 0; a < r; ++a)
                    for (int b = 0; b < r; ++b) {
                        Int m = w.m[a][b];
                        if (m == 0) continue;
                        for (int c = 0; c < r; ++c) prod.m[a][c] += m * g.m[b][c];
                    }
                prod.o = g.o;
                for (int b = 0; b < r; ++b) {
                    Int m = w.o[b];
                    if (m == 0) continue;
                    for (int c = 0; c < r; ++c) prod.o[c] += m * g.m[b][c];
                }
                prod.sign = w.sign * g.sign;
                if (seen.emplace(std::make_pair(prod.m, prod.o), prod.sign).second)
                    next.push_back(std::move(prod));
            }
        }
        quiet = addLayer(next) ? 0 : quiet + 1;
        frontier = std::move(next);
    }
    if (quiet < 2)
        throw capacity_error("affine fusion sum not stable within word length " +
                             std::to_string(maxDepth));
    for (auto it = totals.begin(); it != totals.end();)
        it = it->second == 0 ? totals.erase(it) : std::next(it);
    return totals;
}

struct FusionTable {
    Alcove alcove;
    // (i,j) with i <= j  ->  sorted list of (k, N_{ij}^k)
    std::map<std::pair<int, int>, std::vector<std::pair<int, Int>>> coefficients;
    bool complete = false;

    const std::vector<std::pair<int, Int>>& row(int i, int j) const {
        static const std::vector<std::pair<int, Int>> empty;
        auto it = coefficients.find(i <= j ? std::make_pair(i, j) : std::make_pair(j, i));
        return it == coefficients.end() ? empty : it->second;
    }

    Int coefficient(int i, int j, int k) const {
        for (const auto& [t, n] : row(i, j))
            if (t == k) return n;
        return 0;
    }

    int size() const { return static_cast<int>(alcove.simples.size()); }
};

inline FusionTable fusionTable(const QSpec& qspec, int jobs = 1, Int workBudget = 500000000) {
    FusionTable table;
    table.alcove = enumerateAlcove(qspec);
    const int n = table.size();

    // rough work estimate: pairs x smaller classical dimension
    {
        BigInt work = 0;
        std::vector<BigInt> dims;
        for (const auto& w : table.alcove.simples) dims.push_back(weylDimension(qspec.datum, w));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) work += dims[i] < dims[j] ? dims[i] : dims[j];
        if (work > workBudget)
            throw capacity_error("fusion table work estimate " + work.str() +
                                 " exceeds budget " + std::to_string(workBudget));
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::vector<std::pair<int, Int>>> rows(pairs.size());
    auto work = [&](size_t lo, size_t hi) {
        for (size_t t = lo; t < hi; ++t) {
            auto [i, j] = pairs[t];
            auto prod = fuse(qspec, table.alcove.simples[i], table.alcove.simples[j]);
            for (const auto& [mu, c] : prod) rows[t].emplace_back(table.alcove.indexOf(mu), c);
        }
    };
    if (jobs <= 1) {
        work(0, pairs.size());
    } else {
        // warm shared diagram caches serially before fanning out
        for (const auto& w : table.alcove.simples) expandedDiagram(qspec.datum, w);
        std::vector<std::thread> pool;
        size_t chunk = (pairs.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            size_t lo = t * chunk, hi = std::min(pairs.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (size_t t = 0; t < pairs.size(); ++t) table.coefficients[pairs[t]] = std::move(rows[t]);
    table.complete = true;
    return table;
}

struct AxiomReport {
    bool ok = true;
    std::string detail = "all fusion ring axioms hold";
};

inline Weight dual(const FusionTable& table, const Weight& lambda);

inline AxiomReport verifyRingAxioms(const FusionTable& table) {
    const int n = table.size();
    const int unit = table.alcove.unitIndex();
    auto fail = [&](std::string msg) { return AxiomReport{false, std::move(msg)}; };

    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (table.coefficient(unit, j, k) != (j == k ? 1 : 0))
                return fail("unit axiom fails at (" + std::to_string(j) + "," + std::to_string(k) + ")");

    // duality: each row of N_{..}^0 hits exactly one partner, with coefficient 1
    for (int i = 0; i < n; ++i) {
        int partners = 0;
        for (int j = 0; j < n; ++j) partners += table.coefficient(i, j, unit) != 0 ? 1 : 0;
        if (partners != 1 ||
            [&] {
                for (int j = 0; j < n; ++j)
                    if (table.coefficient(i, j, unit) > 1) return true;
                return false;
            }())
            return fail("duality fails for simple " + std::to_string(i));
    }

    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Int lhs = 0, rhs = 0;
                    for (int e = 0; e < n; ++e) {
                        lhs += table.coefficient(a, b, e) * table.coefficient(e, c, d);
                        rhs += table.coefficient(b, c, e) * table.coefficient(a, e, d);
                    }
                    if (lhs != rhs)
                        return fail("associativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + "," +
                                    std::to_string(d) + ")");
                }
    return {};
}

inline Weight dual(const FusionTable& table, const Weight& lambda) {
    const int n = table.size();
    int i = table.alcove.indexOf(lambda);
    int unit = table.alcove.unitIndex();
    int found = -1;
    for (int j = 0; j < n; ++j) {
        Int c = table.coefficient(i, j, unit);
        if (c == 0) continue;
        if (c != 1 || found >= 0) throw integrity_error("duality is not unique; broken table");
        found = j;
    }
    if (found < 0) throw integrity_error("simple object has no dual; broken table");
    return table.alcove.simples[found];
}

inline std::vector<Weight> invertibles(const FusionTable& table) {
    std::vector<Weight> out;
    int unit = table.alcove.unitIndex();
    for (int i = 0; i < table.size(); ++i) {
        int j = table.alcove.indexOf(dual(table, table.alcove.simples[i]));
        const auto& r = table.row(i, j);
        if (r.size() == 1 && r[0].first == unit && r[0].second == 1)
            out.push_back(table.alcove.simples[i]);
    }
    return out;
}

inline std::set<Weight> subcategoryClosure(const FusionTable& table,
                                           const std::set<Weight>& generators) {
    for (const auto& g : generators)
        if (!table.alcove.contains(g)) throw parameter_error("closure generator not in the alcove");
    std::set<Weight> closed;
    closed.insert(Weight(table.alcove.qspec.datum.rank, 0));
    for (const auto& g : generators) closed.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> snapshot(closed.begin(), closed.end());
        for (const auto& a : snapshot) {
            if (closed.insert(dual(table, a)).second) grew = true;
            for (const auto& b : snapshot) {
                int i = table.alcove.indexOf(a), j = table.alcove.indexOf(b);
                for (const auto& [k, c] : table.row(i, j))
                    if (closed.insert(table.alcove.simples[k]).second) grew = true;
            }
        }
    }
    return closed;
}

// Permutation of alcove indices induced by tensoring with an invertible g.
inline std::vector<int> simpleCurrentPermutation(const FusionTable& table, const Weight& g) {
    auto inv = invertibles(table);
    if (std::find(inv.begin(), inv.end(), g) == inv.end())
        throw parameter_error("simple current must be invertible");
    const int n = table.size();
    int gi = table.alcove.indexOf(g);
    std::vector<int> perm(n, -1);
    std::vector<bool> hit(n, false);
    for (int j = 0; j < n; ++j) {
        const auto& r = table.row(gi, j);
        if (r.size() != 1 || r[0].second != 1)
            throw integrity_error("invertible row is not a permutation row");
        perm[j] = r[0].first;
        if (hit[perm[j]]) throw integrity_error("simple current map is not a bijection");
        hit[perm[j]] = true;
    }
    return perm;
}

// True iff the label permutation (a Dynkin diagram symmetry) preserves all
// fusion coefficients.
inline bool diagramAutomorphismCheck(const FusionTable& table, const std::vector<int>& perm) {
    const RootDatum& datum = table.alcove.qspec.datum;
    const int r = datum.rank;
    if (static_cast<int>(perm.size()) != r)
        throw parameter_error("label permutation has wrong length");
    std::vector<bool> seen(r, false);
    for (int p : perm) {
        if (p < 0 || p >= r || seen[p]) throw parameter_error("not a permutation");
        seen[p] = true;
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (datum.cartan[perm[i]][perm[j]] != datum.cartan[i][j])
                throw parameter_error("permutation is not a Dynkin diagram symmetry");

    auto applyPerm = [&](const Weight& w) {
        Weight out(r);
        for (int i = 0; i < r; ++i) out[perm[i]] = w[i];
        return out;
    };
    const int n = table.size();
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) {
        Weight w = applyPerm(table.alcove.simples[i]);
        if (!table.alcove.contains(w)) return false;
        image[i] = table.alcove.indexOf(w);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table.coefficient(i, j, k) !=
                    table.coefficient(image[i], image[j], image[k]))
                    return false;
    return true;
}

}  // namespace alcove

#endif
