#include "ybe/cotwist.hpp"

#include "ybe/retraction.hpp"

namespace ybe {

QuadraticSet f_map(const QuadraticSet& qs) {
    const int n = qs.size();
    std::vector<std::pair<int, int>> images(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) images[x * n + y] = {qs.left(x, y), x};
    return QuadraticSet::from_pair_map(qs.names(), images);
}

FactorizationResult check_factorization(const QuadraticSet& qs) {
    FactorizationResult res;
    const int n = qs.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // f^{-1}(x,y) = (y, L_y^{-1} x); then flip; then f.
            int p = y;
            int q = -1;
            for (int z = 0; z < n; ++z)
                if (qs.left(y, z) == x) {
                    q = z;
                    break;
                }
            if (q < 0) fail(Errc::NotAPermutation, "degenerate left action");
            int u = q, v = p;  // tau
            std::pair<int, int> composed{qs.left(u, v), u};
            if (composed != qs.r(x, y)) {
                res.holds = false;
                res.witness = {x, y};
                return res;
            }
        }
    return res;
}

RcotwistReport rcotwist_report(const QuadraticSet& qs) {
    RcotwistReport rep;
    const int n = qs.size();
    AxiomReport ax = check_axioms(qs);
    if (!ax.nondegenerate.holds)
        fail(Errc::NotSymmetricSet, "rcotwist analysis requires a nondegenerate quadratic set");
    rep.lri = ax.lri.holds;

    rep.cond_a = true;
    for (int x = 0; x < n && rep.cond_a; ++x)
        for (int y = 0; y < n && rep.cond_a; ++y)
            for (int z = 0; z < n; ++z)
                if (qs.left(qs.right(x, y), z) != qs.left(x, z)) {
                    rep.cond_a = false;
                    rep.witness_a = {x, y, z};
                    break;
                }

    QuadraticSet f = f_map(qs);
    AxiomReport fax = check_axioms(f);
    rep.ybe_f = fax.braid.holds;
    rep.witness_f = fax.braid.witness;
    // Reduced form: YBE for f <=> x|>(y|>z) = (x|>y)|>(x|>z).
    bool reduced = true;
    std::vector<int> reduced_witness;
    for (int x = 0; x < n && reduced; ++x)
        for (int y = 0; y < n && reduced; ++y)
            for (int z = 0; z < n; ++z)
                if (qs.left(x, qs.left(y, z)) != qs.left(qs.left(x, y), qs.left(x, z))) {
                    reduced = false;
                    reduced_witness = {x, y, z};
                    break;
                }
    rep.fybe_route_agrees = (reduced == rep.ybe_f);
    if (!rep.fybe_route_agrees)
        fail(Errc::Internal, "direct braid check for f disagrees with the reduced form");

    rep.ybe_r = ax.braid.holds;
    rep.witness_r = ax.braid.witness;

    // Any two of (a), (b), (c) imply the third, under lri.
    auto implies = [](bool p, bool q) { return !p || q; };
    rep.two_imply_third_ok = !rep.lri ||
                             (implies(rep.cond_a && rep.ybe_f, rep.ybe_r) &&
                              implies(rep.cond_a && rep.ybe_r, rep.ybe_f) &&
                              implies(rep.ybe_f && rep.ybe_r, rep.cond_a));

    FactorizationResult fac = check_factorization(qs);
    rep.factorization = fac.holds;
    rep.factorization_iff_ok = (fac.holds == (ax.involutive.holds && ax.lri.holds));

    if (ax.square_free_symmetric) {
        MplResult m = mpl(qs);
        rep.mpl_le_2 = (m.kind == MplResult::Kind::Finite && m.level <= 2);
        rep.mpl_equivalence_ok = (rep.cond_a == *rep.mpl_le_2);
    }
    return rep;
}

}  // namespace ybe
