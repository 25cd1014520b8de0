#ifndef ALCOVE_MODULAR_HPP
#define ALCOVE_MODULAR_HPP

#include <numeric>
#include <set>
#include <vector>

#include "alcove/alcove.hpp"
#include "alcove/classical.hpp"
#include "alcove/errors.hpp"
#include "alcove/fusion.hpp"

namespace alcove {

// Unnormalized S (row 0 = quantum dimensions, S_00 = 1) and the twists.
struct ModularData {
    Alcove alcove;
    std::vector<std::vector<Cyclotomic>> S;
    std::vector<Cyclotomic> T;
    Int fieldOrder = 1;
};

// Kac-Peterson style sum: S_{lm} = sum_s (-1)^l(s) q^{2<l+rho, s(m+rho)>},
// normalized by the same sum at l = m = 0.
inline std::vector<std::vector<Cyclotomic>> sMatrix(const QSpec& qspec, Int weylCap = 3000000) {
    const RootDatum& datum = qspec.datum;
    const auto& weyl = cachedWeyl(datum, weylCap);
    Alcove alc = enumerateAlcove(qspec);
    const int n = static_cast<int>(alc.simples.size());

    auto entry = [&](const Weight& a, const Weight& b) {
        Cyclotomic sum = Cyclotomic::zero(qspec.fieldOrder);
        Weight ar = addWeights(a, datum.rho);
        Weight br = addWeights(b, datum.rho);
        for (const auto& sigma : weyl) {
            Rational e = 2 * datum.innerProduct(ar, sigma.apply(br));
            Cyclotomic term = qspec.qPower(e);
            sum = sigma.sign() > 0 ? sum + term : sum - term;
        }
        return sum;
    };

    Weight zero(datum.rank, 0);
    Cyclotomic den = entry(zero, zero);
    if (den.isZero()) throw integrity_error("S-matrix normalization sum vanishes");
    Cyclotomic denInv = den.inverse();

    std::vector<std::vector<Cyclotomic>> S(n, std::vector<Cyclotomic>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Cyclotomic v = entry(alc.simples[i], alc.simples[j]) * denInv;
            S[i][j] = v;
            S[j][i] = v;
        }
    return S;
}

// theta_l = q^{<l, l+2rho>}, through the principal fractional power.
inline std::vector<Cyclotomic> twists(const QSpec& qspec) {
    const RootDatum& datum = qspec.datum;
    Alcove alc = enumerateAlcove(qspec);
    std::vector<Cyclotomic> T;
    for (const auto& l : alc.simples) {
        Weight l2r = addWeights(l, addWeights(datum.rho, datum.rho));
        T.push_back(qspec.qPower(datum.innerProduct(l, l2r)));
    }
    return T;
}

inline ModularData modularData(const QSpec& qspec, Int weylCap = 3000000) {
    ModularData md;
    md.alcove = enumerateAlcove(qspec);
    md.S = sMatrix(qspec, weylCap);
    md.T = twists(qspec);
    md.fieldOrder = qspec.fieldOrder;
    return md;
}

// Exact nondegeneracy test by Gaussian elimination over the cyclotomic field.
inline bool isModular(const ModularData& md) {
    auto m = md.S;
    const int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[row][col].isZero()) { pivot = row; break; }
        if (pivot < 0) return false;
        std::swap(m[col], m[pivot]);
        Cyclotomic inv = m[col][col].inverse();
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col].isZero()) continue;
            Cyclotomic f = m[row][col] * inv;
            for (int j = col; j < n; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }
    return true;
}

namespace detail {

// Exact inverse of a square cyclotomic matrix; integrity error if singular.
inline std::vector<std::vector<Cyclotomic>> invertMatrix(std::vector<std::vector<Cyclotomic>> m,
                                                         Int fieldOrder) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Cyclotomic>> inv(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(fieldOrder)));
    for (int i = 0; i < n; ++i) inv[i][i] = Cyclotomic::fromRational(fieldOrder, 1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[row][col].isZero()) { pivot = row; break; }
        if (pivot < 0) throw integrity_error("matrix is singular");
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        Cyclotomic pi = m[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * pi;
            inv[col][j] = inv[col][j] * pi;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col].isZero()) continue;
            Cyclotomic f = m[row][col];
            for (int j = 0; j < n; ++j) {
                m[row][j] = m[row][j] - f * m[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace detail

// Verlinde reconstruction: N_{lg}^m = sum_n S_{gn} (S_{ln}/S_{0n}) (S^-1)_{nm},
// compared entrywise against the fusion table.
inline bool verlindeCheck(const ModularData& md, const FusionTable& table) {
    const int n = static_cast<int>(md.S.size());
    if (n != table.size()) throw parameter_error("modular data and table sizes differ");
    int unit = table.alcove.unitIndex();
    auto sInv = detail::invertMatrix(md.S, md.fieldOrder);
    std::vector<Cyclotomic> eig0Inv;
    for (int v = 0; v < n; ++v) {
        if (md.S[unit][v].isZero()) return false;
        eig0Inv.push_back(md.S[unit][v].inverse());
    }
    for (int l = 0; l < n; ++l) {
        std::vector<Cyclotomic> eig;
        for (int v = 0; v < n; ++v) eig.push_back(md.S[l][v] * eig0Inv[v]);
        for (int g = 0; g < n; ++g)
            for (int m = 0; m < n; ++m) {
                Cyclotomic acc = Cyclotomic::zero(md.fieldOrder);
                for (int v = 0; v < n; ++v) acc = acc + md.S[g][v] * eig[v] * sInv[v][m];
                if (acc != Cyclotomic::fromRational(md.fieldOrder, table.coefficient(l, g, m)))
                    return false;
            }
    }
    return true;
}

// {mu : S_{lm} S_{00} = S_{0l} S_{0m} for all l in the subset}.
inline std::set<Weight> centralizer(const ModularData& md, const std::set<Weight>& subset) {
    const int n = static_cast<int>(md.S.size());
    int unit = md.alcove.unitIndex();
    std::set<Weight> out;
    for (int m = 0; m < n; ++m) {
        bool ok = true;
        for (const auto& l : subset) {
            int li = md.alcove.indexOf(l);
            if (md.S[li][m] * md.S[unit][unit] != md.S[unit][li] * md.S[unit][m]) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(md.alcove.simples[m]);
    }
    return out;
}

struct GaloisData {
    Int p = 1;
    std::vector<int> permutation;  // alcove index -> alcove index
    std::vector<Int> signs;        // +1 / -1
};

// Fold p(lambda+rho)-rho for each alcove weight; always lands in the interior
// when gcd(p, fieldOrder) = 1.
inline GaloisData galoisAction(const QSpec& qspec, Int p) {
    Int pr = p % qspec.fieldOrder;
    if (pr < 0) pr += qspec.fieldOrder;
    if (std::gcd(pr, qspec.fieldOrder) != 1)
        throw parameter_error("Galois residue must be coprime to the field order");
    Alcove alc = enumerateAlcove(qspec);
    GaloisData gd;
    gd.p = pr;
    for (const auto& l : alc.simples) {
        Weight x = addWeights(l, qspec.datum.rho);
        Weight w(x.size());
        for (size_t i = 0; i < x.size(); ++i) w[i] = pr * x[i] - qspec.datum.rho[i];
        FoldResult f = foldToAlcove(qspec, w);
        if (f.onWall) throw integrity_error("Galois fold landed on a wall");
        gd.permutation.push_back(alc.indexOf(f.weight));
        gd.signs.push_back(f.sign);
    }
    return gd;
}

// Certify a claimed Galois permutation against the S-matrix ratio identity
// pi(S_{il}/S_{0l}) = S_{i,perm(l)} / S_{0,perm(l)}.
inline bool galoisCertify(const ModularData& md, const GaloisData& gd) {
    const int n = static_cast<int>(md.S.size());
    if (static_cast<int>(gd.permutation.size()) != n) return false;
    int unit = md.alcove.unitIndex();
    for (int l = 0; l < n; ++l) {
        int t = gd.permutation[l];
        if (t < 0 || t >= n) return false;
        if (md.S[unit][l].isZero() || md.S[unit][t].isZero()) return false;
        Cyclotomic srcInv = md.S[unit][l].inverse();
        Cyclotomic dstInv = md.S[unit][t].inverse();
        for (int i = 0; i < n; ++i)
            if ((md.S[i][l] * srcInv).galoisApply(gd.p) != md.S[i][t] * dstInv) return false;
    }
    return true;
}

// S_{ij} = eps_p(i) eps_{p^-1}(j) S_{perm_p(i), perm_{p^-1}(j)} entrywise.
inline bool galoisSignIdentity(const ModularData& md, const GaloisData& gp, const GaloisData& gpInv) {
    const int n = static_cast<int>(md.S.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cyclotomic rhs = md.S[gp.permutation[i]][gpInv.permutation[j]] *
                             Rational(gp.signs[i] * gpInv.signs[j]);
            if (md.S[i][j] != rhs) return false;
        }
    return true;
}

}  // namespace alcove

#endif
