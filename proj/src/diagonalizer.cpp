#include "ybe/diagonalizer.hpp"

#include <algorithm>
#include <sstream>

namespace ybe {

std::vector<CycExp> y_vector_character_route(const OrbitDatum& od, const std::vector<int>& eta) {
    // chi_eta(pi_j^{-1}) scaled by the block normal form's constant
    // chi_eta((u_1...u_s)^{-1}); invariant factors are always >= 2, so the
    // all-ones tuple is a valid coordinate vector.
    std::vector<int> ones(od.orders.size(), 1);
    CycExp norm = unit_inv(chi_eval(od, eta, ones));
    std::vector<CycExp> v(od.block_size);
    for (long pos = 0; pos < od.block_size; ++pos)
        v[pos] = unit_mul(norm, unit_inv(chi_eval(od, eta, lambda_at(od, pos))));
    return v;
}

std::vector<CycExp> y_vector_block_route(const OrbitDatum& od, const std::vector<int>& eta) {
    // B_k = [lambda_k^{p_k-1} B_{k-1}; ...; lambda_k B_{k-1}; B_{k-1}] top
    // down, top entry = x_{i1}.  Concatenating with descending powers places
    // block b at coordinate m_k = b, which is exactly the lexicographic
    // enumeration with the first coordinate fastest.
    std::vector<CycExp> v{unit_one()};
    for (size_t k = 0; k < od.orders.size(); ++k) {
        CycExp lambda = unit(eta[k], od.orders[k]);
        std::vector<CycExp> next;
        next.reserve(v.size() * od.orders[k]);
        for (long e = od.orders[k] - 1; e >= 0; --e) {
            CycExp factor = unit_pow(lambda, e);
            for (const CycExp& c : v) next.push_back(unit_mul(factor, c));
        }
        v = std::move(next);
    }
    return v;
}

DiagonalBasis build_y_basis(const CompleteDatum& d) {
    DiagonalBasis y;
    y.vecs.resize(d.orbit_data.size());
    for (size_t i = 0; i < d.orbit_data.size(); ++i) {
        const OrbitDatum& od = d.orbit_data[i];
        y.vecs[i].reserve(od.block_size);
        for (long pos = 0; pos < od.block_size; ++pos) {
            std::vector<int> eta = lambda_at(od, pos);
            std::vector<CycExp> a = y_vector_character_route(od, eta);
            std::vector<CycExp> b = y_vector_block_route(od, eta);
            if (a != b)
                fail(Errc::Internal,
                     "character-sum and block constructions of y disagree on orbit " +
                         std::to_string(i + 1));
            y.vecs[i].push_back(std::move(a));
        }
    }
    return y;
}

EigenReport eigen_check(const QuadraticSet& qs, const CompleteDatum& d, const DiagonalBasis& y) {
    EigenReport rep;
    for (size_t i = 0; i < d.orbit_data.size(); ++i) {
        const OrbitDatum& od = d.orbit_data[i];
        for (int gi = 0; gi < od.group.order(); ++gi) {
            const Perm& g = od.group.elems[gi];
            for (long eta_pos = 0; eta_pos < od.block_size; ++eta_pos) {
                CycExp chi = chi_eval(od, lambda_at(od, eta_pos), od.abel.coords[gi]);
                const auto& vec = y.vecs[i][eta_pos];
                // P(g) y = chi(g) y  <=>  y[g(x)] = chi(g)^{-1} y[x] for all x.
                for (size_t loc = 0; loc < od.members.size(); ++loc) {
                    CycExp lhs = vec[od.enum_pos_of_local[g(static_cast<int>(loc))]];
                    CycExp rhs = unit_mul(unit_inv(chi), vec[od.enum_pos_of_local[loc]]);
                    if (lhs != rhs) {
                        rep.ok = false;
                        std::ostringstream os;
                        os << "orbit " << i + 1 << ", group element " << gi << ", eta position "
                           << eta_pos << ", entry " << qs.name(od.members[loc]);
                        rep.failure = os.str();
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

MuTable mu_table(const CompleteDatum& d) {
    const int t = d.orb.count();
    MuTable tab;
    tab.mu.assign(t, {});
    for (int j = 0; j < t; ++j) {
        tab.mu[j].resize(t);
        for (int i = 0; i < t; ++i) {
            const OrbitDatum& od = d.orbit_data[i];
            tab.mu[j][i].resize(od.block_size);
            for (long pos = 0; pos < od.block_size; ++pos)
                tab.mu[j][i][pos] = chi_eval(od, lambda_at(od, pos), od.m[j]);
        }
    }
    return tab;
}

DiagonalReport verify_diagonal(const QuadraticSet& qs, const CompleteDatum& d,
                               const DiagonalBasis& y, const MuTable& mu) {
    DiagonalReport rep;
    const int t = d.orb.count();

    std::vector<int> enum_pos(qs.size(), -1);
    for (int i = 0; i < t; ++i) {
        const OrbitDatum& od = d.orbit_data[i];
        for (long pos = 0; pos < od.block_size; ++pos)
            enum_pos[od.enumeration[pos]] = static_cast<int>(pos);
    }

    for (int i = 0; i < t && rep.ok; ++i) {
        const OrbitDatum& odi = d.orbit_data[i];
        for (long eta = 0; eta < odi.block_size && rep.ok; ++eta) {
            for (int j = 0; j < t && rep.ok; ++j) {
                const OrbitDatum& odj = d.orbit_data[j];
                for (long zeta = 0; zeta < odj.block_size && rep.ok; ++zeta) {
                    const auto& yi = y.vecs[i][eta];
                    const auto& yj = y.vecs[j][zeta];
                    // R maps X_i x X_j bijectively onto X_j x X_i; measure the
                    // coefficient of the swapped tensor at every coordinate.
                    CycExp measured;
                    bool have = false, swapped_ok = true;
                    for (int u : odj.members) {
                        for (int v : odi.members) {
                            auto [a, b] = qs.r_inv(u, v);
                            if (d.orb.orbit_of[a] != i || d.orb.orbit_of[b] != j)
                                fail(Errc::Internal, "R does not map the orbit block onto itself");
                            CycExp lhs = unit_mul(yi[enum_pos[a]], yj[enum_pos[b]]);
                            CycExp sw = unit_mul(yj[enum_pos[u]], yi[enum_pos[v]]);
                            CycExp ratio = unit_mul(lhs, unit_inv(sw));
                            if (!have) {
                                measured = ratio;
                                have = true;
                            } else if (!(ratio == measured)) {
                                swapped_ok = false;
                            }
                        }
                        if (!swapped_ok) break;
                    }
                    // The theorem statement's unswapped tensor order can only
                    // hold inside one orbit block; record when it does.
                    bool unswapped_ok = false;
                    if (i == j && swapped_ok) {
                        unswapped_ok = true;
                        CycExp um;
                        bool uhave = false;
                        for (int u : odj.members) {
                            for (int v : odi.members) {
                                auto [a, b] = qs.r_inv(u, v);
                                CycExp lhs = unit_mul(yi[enum_pos[a]], yj[enum_pos[b]]);
                                CycExp un = unit_mul(yi[enum_pos[u]], yj[enum_pos[v]]);
                                CycExp ratio = unit_mul(lhs, unit_inv(un));
                                if (!uhave) {
                                    um = ratio;
                                    uhave = true;
                                } else if (!(ratio == um)) {
                                    unswapped_ok = false;
                                }
                            }
                            if (!unswapped_ok) break;
                        }
                    }
                    CycExp predicted = unit_mul(mu.mu[i][j][zeta], unit_inv(mu.mu[j][i][eta]));
                    if (!swapped_ok || !(measured == predicted)) {
                        rep.ok = false;
                        std::ostringstream os;
                        os << "pair (" << y_generator_name(qs, d, i, eta) << ", "
                           << y_generator_name(qs, d, j, zeta) << "): ";
                        if (!swapped_ok)
                            os << "expansion is not proportional to the swapped tensor";
                        else
                            os << "coefficient " << to_string(measured) << " != predicted "
                               << to_string(predicted);
                        rep.failure = os.str();
                        break;
                    }
                    PairCoefficient pc;
                    pc.i = i;
                    pc.j = j;
                    pc.eta = eta;
                    pc.zeta = zeta;
                    pc.coeff = measured;
                    pc.form = unswapped_ok ? DiagonalForm::Both : DiagonalForm::Swapped;
                    rep.pairs.push_back(pc);
                }
            }
        }
    }
    return rep;
}

namespace {

// Gaussian elimination rank over Q(zeta_N); rows are modified in place.
long cyc_rank(std::vector<std::vector<CycNum>>& rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    long rank = 0;
    size_t rpos = 0;
    for (size_t c = 0; c < cols && rpos < rows.size(); ++c) {
        size_t pivot = rpos;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rpos], rows[pivot]);
        CycNum inv = rows[rpos][c].inverse();
        for (size_t cc = c; cc < cols; ++cc) rows[rpos][cc] = rows[rpos][cc] * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rpos || rows[r][c].is_zero()) continue;
            CycNum f = rows[r][c];
            for (size_t cc = c; cc < cols; ++cc) rows[r][cc] = rows[r][cc] - f * rows[rpos][cc];
        }
        ++rpos;
        ++rank;
    }
    return rank;
}

}  // namespace

BasisCheckResult check_diagonal_in_basis(const QuadraticSet& qs, const OrbitDecomposition& orb,
                                         const UserBasis& basis) {
    const int t = orb.count();
    std::vector<std::vector<int>> block(t);
    for (int v = 0; v < static_cast<int>(basis.vecs.size()); ++v) {
        const auto& bv = basis.vecs[v];
        if (bv.orbit < 0 || bv.orbit >= t) fail(Errc::IndexOutOfRange, "basis block orbit index");
        if (bv.entries.size() != orb.orbits[bv.orbit].size())
            fail(Errc::SingularBasis, "basis vector " + bv.name + " has the wrong length");
        block[bv.orbit].push_back(v);
    }
    for (int i = 0; i < t; ++i) {
        if (block[i].size() != orb.orbits[i].size())
            fail(Errc::SingularBasis, "orbit " + std::to_string(i + 1) + " needs exactly " +
                                          std::to_string(orb.orbits[i].size()) + " basis vectors");
        std::vector<std::vector<CycNum>> rows;
        for (int v : block[i]) {
            std::vector<CycNum> row;
            for (const CycNum& e : basis.vecs[v].entries) row.push_back(e.lift(basis.level));
            rows.push_back(std::move(row));
        }
        if (cyc_rank(rows) != static_cast<long>(orb.orbits[i].size()))
            fail(Errc::SingularBasis, "orbit " + std::to_string(i + 1) + " block is singular");
    }

    std::vector<int> local_pos(qs.size(), -1);
    for (int i = 0; i < t; ++i)
        for (size_t k = 0; k < orb.orbits[i].size(); ++k)
            local_pos[orb.orbits[i][k]] = static_cast<int>(k);

    const long L = basis.level;
    const CycNum zero = CycNum::zero(L);
    BasisCheckResult res;
    res.diagonalizable = true;
    const int nv = static_cast<int>(basis.vecs.size());
    res.mu.assign(nv, std::vector<CycNum>(nv, zero));

    for (int a = 0; a < nv; ++a) {
        for (int b = 0; b < nv; ++b) {
            const auto& va = basis.vecs[a];
            const auto& vb = basis.vecs[b];
            const auto& Xi = orb.orbits[va.orbit];
            const auto& Xj = orb.orbits[vb.orbit];
            auto entry = [&](const UserBasisVector& v, int g) {
                return v.entries[local_pos[g]].lift(L);
            };
            std::vector<CycNum> required;
            bool zero_mismatch = false;
            std::string detail;
            std::optional<CycNum> mu_val;
            bool consistent = true;
            // Mass escaping the X_j x X_i block can never be matched.
            for (int p : Xi)
                for (int q : Xj) {
                    auto [u, v] = qs.r(p, q);
                    if (orb.orbit_of[u] != vb.orbit || orb.orbit_of[v] != va.orbit) {
                        CycNum c = entry(va, p) * entry(vb, q);
                        if (!c.is_zero()) {
                            consistent = false;
                            zero_mismatch = true;
                            detail = "R sends (" + qs.name(p) + ", " + qs.name(q) +
                                     ") outside the expected orbit block";
                        }
                    }
                }
            for (int u : Xj) {
                for (int v : Xi) {
                    auto [p, q] = qs.r_inv(u, v);
                    CycNum lhs = (orb.orbit_of[p] == va.orbit && orb.orbit_of[q] == vb.orbit)
                                     ? entry(va, p) * entry(vb, q)
                                     : zero;
                    CycNum rhs = entry(vb, u) * entry(va, v);
                    if (rhs.is_zero()) {
                        if (!lhs.is_zero()) {
                            zero_mismatch = true;
                            consistent = false;
                            if (detail.empty())
                                detail = "coefficient at (" + qs.name(u) + ", " + qs.name(v) +
                                         ") requires mu * 0 = " + to_string(lhs);
                        }
                        continue;
                    }
                    CycNum ratio = lhs * rhs.inverse();
                    if (!mu_val) {
                        mu_val = ratio;
                        required.push_back(ratio);
                    } else if (!(ratio == *mu_val)) {
                        bool known = false;
                        for (const auto& r : required)
                            if (r == ratio) known = true;
                        if (!known) required.push_back(ratio);
                        consistent = false;
                    }
                }
            }
            if (consistent && mu_val && !mu_val->is_zero()) {
                res.mu[a][b] = *mu_val;
            } else {
                BasisObstruction ob;
                ob.a = a;
                ob.b = b;
                ob.required = required;
                ob.zero_mismatch = zero_mismatch;
                ob.detail = detail;
                if (consistent && mu_val && mu_val->is_zero())
                    ob.detail = "the forced scalar is zero";
                if (!res.first_obstruction) res.first_obstruction = ob;
                res.obstructions.push_back(std::move(ob));
                res.diagonalizable = false;
            }
        }
    }
    return res;
}

std::string y_generator_name(const QuadraticSet& qs, const CompleteDatum& d, int orbit,
                             long eta_pos) {
    const OrbitDatum& od = d.orbit_data[orbit];
    if (od.trivial()) return qs.name(od.x1);
    std::vector<int> eta = lambda_at(od, eta_pos);
    std::ostringstream os;
    os << "y";
    if (d.orb.t0 > 1) os << orbit + 1;
    os << "[";
    for (size_t k = 0; k < eta.size(); ++k) {
        if (k) os << ",";
        os << eta[k];
    }
    os << "]";
    return os.str();
}

}  // namespace ybe
