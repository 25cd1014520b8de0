#ifndef ALCOVE_CARTAN_HPP
#define ALCOVE_CARTAN_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

enum class LieFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
    LieFamily family;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
    friend bool operator==(const LieType&, const LieType&) = default;
};

// Dynkin labels, i.e. coordinates in the fundamental-weight basis.
using Weight = std::vector<Int>;

using IntMatrix = std::vector<std::vector<Int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

inline bool isDominant(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](Int x) { return x >= 0; });
}

inline Weight addWeights(const Weight& a, const Weight& b) {
    Weight c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Weight subWeights(const Weight& a, const Weight& b) {
    Weight c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline Weight scaleWeight(Int k, const Weight& a) {
    Weight c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = k * a[i];
    return c;
}

inline void validateLieType(const LieType& t) {
    int r = t.rank;
    bool ok = false;
    switch (t.family) {
        case LieFamily::A: ok = r >= 1; break;
        case LieFamily::B: ok = r >= 2; break;
        case LieFamily::C: ok = r >= 2; break;
        case LieFamily::D: ok = r >= 3; break;
        case LieFamily::E: ok = r == 6 || r == 7 || r == 8; break;
        case LieFamily::F: ok = r == 4; break;
        case LieFamily::G: ok = r == 2; break;
    }
    if (!ok) throw parameter_error("invalid rank " + std::to_string(r) + " for family " +
                                   std::string(1, static_cast<char>(t.family)));
}

// Parses strings like "A2", "G2", "E8".
inline LieType parseLieType(const std::string& s) {
    if (s.size() < 2) throw parameter_error("cannot parse Lie type '" + s + "'");
    char f = s[0];
    if (f < 'A' || f > 'G') throw parameter_error("unknown family letter in '" + s + "'");
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw parameter_error("cannot parse rank in '" + s + "'");
        rank = rank * 10 + (s[i] - '0');
    }
    LieType t{static_cast<LieFamily>(f), rank};
    validateLieType(t);
    return t;
}

struct PositiveRoot {
    std::vector<Int> rootCoords;  // coefficients over simple roots
    Weight labels;                // Dynkin labels of the root
    Int halfNorm;                 // <alpha,alpha>/2, in {1,2,3}
};

// Immutable root-system data for one simple Lie type.
// Simple roots are Bourbaki-ordered; the bilinear form is normalized so the
// shortest root has squared length 2.
struct RootDatum {
    LieType lieType;
    int rank = 0;
    IntMatrix cartan;                    // c_{ij} = <alpha_i, alpha_j^vee>
    std::vector<Int> symmetrizers;       // d_i = <alpha_i,alpha_i>/2
    std::vector<PositiveRoot> positiveRoots;
    RationalMatrix gram;                 // F_{ij} = <lambda_i, lambda_j>
    RationalMatrix cartanTransposeInv;   // solves labels -> simple-root coordinates
    Weight rho;                          // all labels 1
    Int dualCoxeter = 0;
    Int lacing = 1;                      // m = max |off-diagonal Cartan entry|
    Int weylOrder = 0;
    Weight highestLongRoot;
    Weight highestShortRoot;
    Int gramDenominator = 1;             // least D with D*F integral

    Weight simpleRootLabels(int i) const {
        Weight w(rank);
        for (int j = 0; j < rank; ++j) w[j] = cartan[i][j];
        return w;
    }

    // <a, b> = a^T F b, exact.
    Rational innerProduct(const Weight& a, const Weight& b) const {
        if (static_cast<int>(a.size()) != rank || static_cast<int>(b.size()) != rank)
            throw parameter_error("innerProduct: weight length does not match rank");
        Rational acc = 0;
        for (int i = 0; i < rank; ++i) {
            if (a[i] == 0) continue;
            Rational row = 0;
            for (int j = 0; j < rank; ++j)
                if (b[j] != 0) row += gram[i][j] * b[j];
            acc += Rational(a[i]) * row;
        }
        return acc;
    }

    // <w, alpha^vee> for a (not necessarily simple) root given by datum index.
    Rational corootPairing(const Weight& w, const PositiveRoot& alpha) const {
        return innerProduct(w, alpha.labels) / alpha.halfNorm;
    }

    Weight rootToWeight(const std::vector<Int>& rootCoords) const {
        if (static_cast<int>(rootCoords.size()) != rank)
            throw parameter_error("rootToWeight: vector length does not match rank");
        Weight w(rank, 0);
        for (int j = 0; j < rank; ++j)
            for (int i = 0; i < rank; ++i) w[j] += rootCoords[i] * cartan[i][j];
        return w;
    }

    std::vector<Rational> weightToRootCoords(const Weight& w) const {
        if (static_cast<int>(w.size()) != rank)
            throw parameter_error("weightToRootCoords: weight length does not match rank");
        std::vector<Rational> rc(rank, 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) rc[i] += cartanTransposeInv[i][j] * w[j];
        return rc;
    }
};

namespace detail {

inline IntMatrix cartanMatrixFor(const LieType& t) {
    int r = t.rank;
    IntMatrix c(r, std::vector<Int>(r, 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    auto bond = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (t.family) {
        case LieFamily::A:
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case LieFamily::B:  // alpha_1 short, then the long chain (so labels match
                            // the short/long role of the B2 fundamental weights)
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            c[1][0] = -2;
            break;
        case LieFamily::C:  // alpha_r long
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            c[r - 1][r - 2] = -2;
            break;
        case LieFamily::D:
            for (int i = 0; i + 1 < r - 1; ++i) bond(i, i + 1);
            bond(r - 3, r - 1);
            break;
        case LieFamily::E:
            // Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4.
            bond(0, 2);
            for (int i = 2; i + 1 < r; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case LieFamily::F:  // alpha_1,alpha_2 long; alpha_3,alpha_4 short
            bond(0, 1);
            bond(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case LieFamily::G:  // alpha_1 short, alpha_2 long
            c[0][1] = -1;
            c[1][0] = -3;
            break;
    }
    return c;
}

// Solve d_j c_{ij} = d_i c_{ji} with min d_i = 1 by propagation over the diagram.
inline std::vector<Int> symmetrizersFor(const IntMatrix& c) {
    int r = static_cast<int>(c.size());
    std::vector<Rational> d(r, 0);
    d[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (c[i][j] == 0 || d[i] == 0 || d[j] != 0) continue;
                d[j] = d[i] * c[j][i] / c[i][j];
                changed = true;
            }
    }
    Rational dmin = d[0];
    for (auto& x : d)
        if (x < dmin) dmin = x;
    std::vector<Int> out(r);
    for (int i = 0; i < r; ++i) out[i] = to_int(d[i] / dmin);
    return out;
}

inline RationalMatrix invertRational(const RationalMatrix& m) {
    int n = static_cast<int>(m.size());
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) { piv = row; break; }
        if (piv < 0) throw integrity_error("singular matrix in invertRational");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = a[col][col];
        for (int j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (int j = 0; j < n; ++j) { a[row][j] -= f * a[col][j]; inv[row][j] -= f * inv[col][j]; }
        }
    }
    return inv;
}

inline Int expectedPositiveRootCount(const LieType& t) {
    Int r = t.rank;
    switch (t.family) {
        case LieFamily::A: return r * (r + 1) / 2;
        case LieFamily::B:
        case LieFamily::C: return r * r;
        case LieFamily::D: return r * (r - 1);
        case LieFamily::E: return r == 6 ? 36 : (r == 7 ? 63 : 120);
        case LieFamily::F: return 24;
        case LieFamily::G: return 6;
    }
    return 0;
}

inline Int weylOrderFor(const LieType& t) {
    Int r = t.rank;
    auto fact = [](Int n) { Int f = 1; for (Int i = 2; i <= n; ++i) f *= i; return f; };
    switch (t.family) {
        case LieFamily::A: return fact(r + 1);
        case LieFamily::B:
        case LieFamily::C: return (Int(1) << r) * fact(r);
        case LieFamily::D: return (Int(1) << (r - 1)) * fact(r);
        case LieFamily::E: return r == 6 ? 51840 : (r == 7 ? 2903040 : 696729600);
        case LieFamily::F: return 1152;
        case LieFamily::G: return 12;
    }
    return 0;
}

inline Int dualCoxeterFor(const LieType& t) {
    Int r = t.rank;
    switch (t.family) {
        case LieFamily::A: return r + 1;
        case LieFamily::B: return 2 * r - 1;
        case LieFamily::C: return r + 1;
        case LieFamily::D: return 2 * r - 2;
        case LieFamily::E: return r == 6 ? 12 : (r == 7 ? 18 : 30);
        case LieFamily::F: return 9;
        case LieFamily::G: return 4;
    }
    return 0;
}

}  // namespace detail

inline RootDatum buildRootDatum(const LieType& type) {
    validateLieType(type);
    RootDatum d;
    d.lieType = type;
    d.rank = type.rank;
    d.cartan = detail::cartanMatrixFor(type);
    d.symmetrizers = detail::symmetrizersFor(d.cartan);
    d.lacing = 1;
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j)
            if (i != j) d.lacing = std::max<Int>(d.lacing, -d.cartan[i][j]);

    // gram: F_{ij} = d_i (C^{-T})_{ij}
    {
        RationalMatrix ct(d.rank, std::vector<Rational>(d.rank));
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) ct[i][j] = d.cartan[j][i];
        d.cartanTransposeInv = detail::invertRational(ct);
        d.gram.assign(d.rank, std::vector<Rational>(d.rank));
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) d.gram[i][j] = Rational(d.symmetrizers[i]) * d.cartanTransposeInv[i][j];
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < i; ++j)
                if (d.gram[i][j] != d.gram[j][i]) throw integrity_error("gram matrix not symmetric");
        BigInt denom = 1;
        for (auto& row : d.gram)
            for (auto& x : row) denom = boost::multiprecision::lcm(denom, rat_den(x));
        d.gramDenominator = static_cast<Int>(denom);
    }

    // Positive roots by closure over root strings, level by level in height.
    {
        std::set<std::vector<Int>> known;
        std::vector<std::vector<Int>> frontier;
        for (int i = 0; i < d.rank; ++i) {
            std::vector<Int> e(d.rank, 0);
            e[i] = 1;
            known.insert(e);
            frontier.push_back(e);
        }
        auto corootPairingRC = [&](const std::vector<Int>& rc, int i) {
            Int k = 0;
            for (int j = 0; j < d.rank; ++j) k += rc[j] * d.cartan[j][i];
            return k;
        };
        while (!frontier.empty()) {
            std::vector<std::vector<Int>> next;
            for (const auto& rc : frontier) {
                for (int i = 0; i < d.rank; ++i) {
                    Int k = corootPairingRC(rc, i);
                    // alpha-string through alpha_i: q = p - <alpha, alpha_i^vee>
                    Int p = 0;
                    std::vector<Int> down = rc;
                    while (true) {
                        down[i] -= 1;
                        bool neg = std::any_of(down.begin(), down.end(), [](Int x) { return x < 0; });
                        if (neg || !known.count(down)) break;
                        ++p;
                    }
                    if (p - k > 0) {
                        std::vector<Int> up = rc;
                        up[i] += 1;
                        if (known.insert(up).second) next.push_back(up);
                    }
                }
            }
            frontier = std::move(next);
        }
        for (const auto& rc : known) {
            PositiveRoot pr;
            pr.rootCoords = rc;
            pr.labels = d.rootToWeight(rc);
            Rational n2 = d.innerProduct(pr.labels, pr.labels);
            pr.halfNorm = to_int(n2 / 2);
            if (pr.halfNorm < 1 || pr.halfNorm > 3)
                throw integrity_error("unexpected root length");
            d.positiveRoots.push_back(std::move(pr));
        }
        if (static_cast<Int>(d.positiveRoots.size()) != detail::expectedPositiveRootCount(type))
            throw integrity_error("positive root count mismatch for " + type.str());
    }

    d.rho.assign(d.rank, 1);
    d.dualCoxeter = detail::dualCoxeterFor(type);
    d.weylOrder = detail::weylOrderFor(type);

    // Highest root of each length class is the unique dominant one.
    {
        Int minHalf = 3, maxHalf = 1;
        for (const auto& pr : d.positiveRoots) {
            minHalf = std::min(minHalf, pr.halfNorm);
            maxHalf = std::max(maxHalf, pr.halfNorm);
        }
        if (minHalf != 1) throw integrity_error("no short root of squared length 2");
        auto dominantOfClass = [&](Int half) {
            const PositiveRoot* found = nullptr;
            for (const auto& pr : d.positiveRoots) {
                if (pr.halfNorm != half || !isDominant(pr.labels)) continue;
                if (found) throw integrity_error("highest root not unique");
                found = &pr;
            }
            if (!found) throw integrity_error("no dominant root in length class");
            return found->labels;
        };
        d.highestShortRoot = dominantOfClass(minHalf);
        d.highestLongRoot = dominantOfClass(maxHalf);
        // h^vee = 1 + <rho, theta^vee> for the highest long root theta.
        Rational hv = 1 + d.innerProduct(d.rho, d.highestLongRoot) / maxHalf;
        if (to_int(hv) != d.dualCoxeter)
            throw integrity_error("dual Coxeter number mismatch for " + type.str());
    }
    return d;
}

inline RootDatum buildRootDatum(const std::string& typeName) {
    return buildRootDatum(parseLieType(typeName));
}

}  // namespace alcove

#endif
