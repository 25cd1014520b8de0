#ifndef ALCOVE_WEYL_HPP
#define ALCOVE_WEYL_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "alcove/cartan.hpp"
#include "alcove/errors.hpp"

namespace alcove {

// One element of the finite Weyl group, acting on Dynkin-label vectors.
struct WeylElement {
    IntMatrix matrix;  // column-action: (sigma w)_j = sum_i matrix[i][j] * w[i]
    Int length = 0;

    Weight apply(const Weight& w) const {
        int r = static_cast<int>(matrix.size());
        Weight out(r, 0);
        for (int i = 0; i < r; ++i) {
            if (w[i] == 0) continue;
            for (int j = 0; j < r; ++j) out[j] += matrix[i][j] * w[i];
        }
        return out;
    }

    Int sign() const { return length % 2 == 0 ? 1 : -1; }
};

inline WeylElement weylIdentity(int rank) {
    WeylElement e;
    e.matrix.assign(rank, std::vector<Int>(rank, 0));
    for (int i = 0; i < rank; ++i) e.matrix[i][i] = 1;
    e.length = 0;
    return e;
}

// sigma_i(w) = w - <w, alpha_i^vee> alpha_i; on labels, subtract w_i times row i
// of the Cartan matrix.
inline WeylElement simpleReflection(const RootDatum& datum, int i) {
    if (i < 1 || i > datum.rank) throw parameter_error("simple reflection index out of range");
    WeylElement e = weylIdentity(datum.rank);
    int k = i - 1;
    for (int j = 0; j < datum.rank; ++j) e.matrix[k][j] -= datum.cartan[k][j];
    e.length = 1;
    return e;
}

inline Weight applySimpleReflection(const RootDatum& datum, int i, const Weight& w) {
    Weight out = w;
    Int c = w[i - 1];
    if (c == 0) return out;
    for (int j = 0; j < datum.rank; ++j) out[j] -= c * datum.cartan[i - 1][j];
    return out;
}

// BFS from the identity over right-multiplication by simple reflections.
// Lengths are BFS layer indices.
inline std::vector<WeylElement> enumerateWeyl(const RootDatum& datum, Int cap = 3000000) {
    if (datum.weylOrder > cap)
        throw capacity_error("Weyl group of " + datum.lieType.str() + " has order " +
                             std::to_string(datum.weylOrder) + ", above the cap of " +
                             std::to_string(cap));
    std::vector<WeylElement> gens;
    for (int i = 1; i <= datum.rank; ++i) gens.push_back(simpleReflection(datum, i));

    std::vector<WeylElement> all;
    std::map<IntMatrix, Int> seen;
    WeylElement id = weylIdentity(datum.rank);
    seen[id.matrix] = 0;
    all.push_back(id);
    std::vector<size_t> frontier{0};
    Int depth = 0;
    while (!frontier.empty()) {
        ++depth;
        std::vector<size_t> nextIdx;
        for (size_t wi : frontier) {
            for (const auto& g : gens) {
                // (w * g)(x): apply g's row update to w's matrix rows
                WeylElement prod;
                prod.matrix.assign(datum.rank, std::vector<Int>(datum.rank, 0));
                for (int a = 0; a < datum.rank; ++a)
                    for (int b = 0; b < datum.rank; ++b) {
                        Int m = all[wi].matrix[a][b];
                        if (m == 0) continue;
                        for (int c = 0; c < datum.rank; ++c) prod.matrix[a][c] += m * g.matrix[b][c];
                    }
                prod.length = depth;
                if (seen.emplace(prod.matrix, depth).second) {
                    all.push_back(std::move(prod));
                    nextIdx.push_back(all.size() - 1);
                }
            }
        }
        frontier = std::move(nextIdx);
    }
    if (static_cast<Int>(all.size()) != datum.weylOrder)
        throw integrity_error("Weyl enumeration produced " + std::to_string(all.size()) +
                              " elements, expected " + std::to_string(datum.weylOrder));
    return all;
}

// Orbit of a dominant weight under the Weyl group.
inline std::vector<Weight> weylOrbit(const RootDatum& datum, const Weight& dominant) {
    if (!isDominant(dominant)) throw parameter_error("weylOrbit requires a dominant weight");
    std::vector<Weight> orbit;
    std::set<Weight> seen;
    seen.insert(dominant);
    orbit.push_back(dominant);
    for (size_t head = 0; head < orbit.size(); ++head) {
        Weight w = orbit[head];
        for (int i = 1; i <= datum.rank; ++i) {
            Weight im = applySimpleReflection(datum, i, w);
            if (seen.insert(im).second) orbit.push_back(std::move(im));
        }
    }
    return orbit;
}

// Finds the dominant representative and a Weyl element mapping w to it.
// Ascending through negative labels yields a reduced word, so the step count
// is the element's length.
inline std::pair<Weight, WeylElement> dominantRepresentative(const RootDatum& datum, const Weight& w) {
    Weight cur = w;
    WeylElement elem = weylIdentity(datum.rank);
    bool moved = true;
    Int steps = 0;
    while (moved) {
        moved = false;
        for (int i = 1; i <= datum.rank; ++i) {
            if (cur[i - 1] < 0) {
                cur = applySimpleReflection(datum, i, cur);
                // elem := sigma_i * elem (apply sigma_i after elem)
                WeylElement refl = simpleReflection(datum, i);
                WeylElement prod;
                prod.matrix.assign(datum.rank, std::vector<Int>(datum.rank, 0));
                for (int a = 0; a < datum.rank; ++a)
                    for (int b = 0; b < datum.rank; ++b) {
                        Int m = elem.matrix[a][b];
                        if (m == 0) continue;
                        for (int c = 0; c < datum.rank; ++c) prod.matrix[a][c] += m * refl.matrix[b][c];
                    }
                elem = std::move(prod);
                ++steps;
                moved = true;
                break;
            }
        }
    }
    elem.length = steps;
    return {cur, elem};
}

// Dominant representative only; avoids matrix bookkeeping in hot paths.
inline Weight dominantOf(const RootDatum& datum, Weight w) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < datum.rank; ++i) {
            Int c = w[i];
            if (c < 0) {
                for (int j = 0; j < datum.rank; ++j) w[j] -= c * datum.cartan[i][j];
                moved = true;
            }
        }
    }
    return w;
}

}  // namespace alcove

#endif
