#include "ybe/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ybe/datum.hpp"
#include "ybe/diagonalizer.hpp"
#include "ybe/permgroup.hpp"
#include "ybe/retraction.hpp"

namespace ybe {

namespace {

struct Search {
    int n;
    std::vector<Perm> candidates;          // permutations used as actions
    std::vector<int> assigned;             // element -> candidate index, -1 unassigned
    std::vector<const Perm*> act;          // resolved actions for the prefix
    std::vector<const Perm*> act_inv;
    std::vector<Perm> inverses;
    const std::function<void(const QuadraticSet&)>* sink;

    bool has(int x) const { return assigned[x] >= 0; }

    // Involutivity and the cyclic conditions on pairs whose referenced
    // actions are all assigned; l1 as a permutation identity per pair.
    bool consistent_after(int k) const {
        for (int x = 0; x <= k; ++x)
            for (int y = 0; y <= k; ++y) {
                if (x != k && y != k) {
                    // Only pairs that newly reference k matter, but the
                    // derived elements may have become available; cheap to
                    // recheck when they involve k.
                    int zx = (*act[x])(y);
                    int tx = (*act_inv[y])(x);
                    if (zx != k && tx != k) continue;
                }
                int z = (*act[x])(y);   // x |> y
                int t = (*act_inv[y])(x);  // x <| y
                // cl1: (y <| x) |> x == y |> x needs L_{y<|x}.
                int yx = (*act_inv[x])(y);
                if (has(yx) && (*act[yx])(x) != (*act[y])(x)) return false;
                if (has(z) && has(t)) {
                    // involutivity of r at (x,y)
                    if ((*act[z])(t) != x) return false;
                    if ((*act_inv[t])(z) != y) return false;
                    // l1 as L_x L_y = L_z L_t
                    for (int w = 0; w < n; ++w)
                        if ((*act[x])((*act[y])(w)) != (*act[z])((*act[t])(w))) return false;
                }
            }
        return true;
    }

    void emit() const {
        std::vector<std::string> names;
        names.reserve(n);
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
        std::vector<Perm> actions;
        actions.reserve(n);
        for (int i = 0; i < n; ++i) actions.push_back(*act[i]);
        (*sink)(QuadraticSet::from_left_actions(std::move(names), actions));
    }

    void rec(int k) {
        if (k == n) {
            emit();
            return;
        }
        for (size_t c = 0; c < candidates.size(); ++c) {
            if (candidates[c](k) != k) continue;  // square-free
            assigned[k] = static_cast<int>(c);
            act[k] = &candidates[c];
            act_inv[k] = &inverses[c];
            if (consistent_after(k)) rec(k + 1);
            assigned[k] = -1;
            act[k] = nullptr;
            act_inv[k] = nullptr;
        }
    }
};

std::vector<Perm> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_image(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

void enumerate_sfss(int n, const std::function<void(const QuadraticSet&)>& sink, int max_order) {
    if (n < 2 || n > max_order)
        fail(Errc::CapExceeded, "enumeration supports 2 <= n <= " + std::to_string(max_order));
    Search s;
    s.n = n;
    s.candidates = all_perms(n);
    s.inverses.reserve(s.candidates.size());
    for (const Perm& p : s.candidates) s.inverses.push_back(p.inverse());
    s.assigned.assign(n, -1);
    s.act.assign(n, nullptr);
    s.act_inv.assign(n, nullptr);
    s.sink = &sink;
    s.rec(0);
}

long count_sfss(int n, int max_order) {
    long count = 0;
    enumerate_sfss(n, [&](const QuadraticSet&) { ++count; }, max_order);
    return count;
}

std::vector<int> canonical_left_table(const QuadraticSet& qs) {
    const int n = qs.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<int>> best;
    do {
        std::vector<int> table(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) table[perm[x] * n + perm[y]] = perm[qs.left(x, y)];
        if (!best || table < *best) best = std::move(table);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

ClassifyRow classify(int n, bool dedup, int max_order, long long group_cap) {
    ClassifyRow row;
    row.n = n;
    std::set<std::vector<int>> canon;
    enumerate_sfss(
        n,
        [&](const QuadraticSet& qs) {
            ++row.labeled;
            MplResult m = mpl(qs);
            int level = m.kind == MplResult::Kind::Finite ? m.level : -1;
            ++row.by_mpl[level];
            GeneratedGroup g = left_action_group(qs, group_cap);
            bool abelian = is_abelian(g);
            if (abelian) ++row.abelian_g;
            if (level >= 0 && level <= 2) {
                bool diag = false;
                if (level == 2) {
                    CompleteDatum d = build_datum(qs, std::nullopt, group_cap);
                    DiagonalBasis y = build_y_basis(d);
                    MuTable mu = mu_table(d);
                    diag = verify_diagonal(qs, d, y, mu).ok;
                } else {
                    // mpl <= 1: R is diagonal in the x-basis itself.
                    OrbitDecomposition orb = orbits(qs);
                    UserBasis basis;
                    basis.level = 1;
                    for (int i = 0; i < orb.count(); ++i)
                        for (size_t k = 0; k < orb.orbits[i].size(); ++k) {
                            UserBasisVector v;
                            v.name = qs.name(orb.orbits[i][k]);
                            v.orbit = i;
                            v.entries.assign(orb.orbits[i].size(), CycNum::zero(1));
                            v.entries[k] = CycNum::from_rational(1, 1);
                            basis.vecs.push_back(std::move(v));
                        }
                    diag = check_diagonal_in_basis(qs, orb, basis).diagonalizable;
                }
                if (diag) ++row.diagonalizable;
            }
            if (dedup) canon.insert(canonical_left_table(qs));
        },
        max_order);
    if (dedup) row.iso_classes = static_cast<long>(canon.size());
    return row;
}

std::string classify_csv_header() {
    return "n,labeled,mpl_0,mpl_1,mpl_2,mpl_3,mpl_higher,not_multipermutation,abelian_G,"
           "diagonalizable,iso_classes";
}

std::string classify_csv_row(const ClassifyRow& row) {
    auto get = [&](int level) {
        auto it = row.by_mpl.find(level);
        return it == row.by_mpl.end() ? 0L : it->second;
    };
    long higher = 0;
    for (const auto& [level, count] : row.by_mpl)
        if (level > 3) higher += count;
    std::ostringstream os;
    os << row.n << "," << row.labeled << "," << get(0) << "," << get(1) << "," << get(2) << ","
       << get(3) << "," << higher << "," << get(-1) << "," << row.abelian_g << ","
       << row.diagonalizable << ",";
    if (row.iso_classes) os << *row.iso_classes;
    return os.str();
}

}  // namespace ybe
