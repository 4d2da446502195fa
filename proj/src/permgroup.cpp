#include "ybe/permgroup.hpp"

#include <algorithm>
#include <set>

namespace ybe {

int GeneratedGroup::mul(int a, int b) const {
    int idx = index_of(elems[a].after(elems[b]));
    if (idx < 0) fail(Errc::Internal, "group not closed under composition");
    return idx;
}

int GeneratedGroup::inverse_of(int a) const {
    int idx = index_of(elems[a].inverse());
    if (idx < 0) fail(Errc::Internal, "group not closed under inverse");
    return idx;
}

Perm GeneratedGroup::eval_word(const Word& w) const {
    Perm p(degree);
    for (const GenLetter& l : w) p = p.after(l.inverse ? gens[l.gen].inverse() : gens[l.gen]);
    return p;
}

std::string GeneratedGroup::word_string(const Word& w) const {
    if (w.empty()) return "e";
    std::string out;
    for (const GenLetter& l : w) {
        if (!out.empty()) out += " ";
        out += labels[l.gen];
        if (l.inverse) out += "^-1";
    }
    return out;
}

GeneratedGroup generate(int degree, const std::vector<std::pair<std::string, Perm>>& generators,
                        long long cap) {
    GeneratedGroup g;
    g.degree = degree;
    for (const auto& [label, p] : generators) {
        if (p.degree() != degree) fail(Errc::NotAPermutation, "generator degree mismatch");
        g.labels.push_back(label);
        g.gens.push_back(p);
    }
    g.elems.push_back(Perm(degree));
    g.words.push_back({});
    g.index_[g.elems[0]] = 0;
    for (size_t head = 0; head < g.elems.size(); ++head) {
        Perm cur = g.elems[head];  // copy: elems may reallocate below
        Word curw = g.words[head];
        for (int i = 0; i < static_cast<int>(g.gens.size()); ++i) {
            for (bool inv : {false, true}) {
                Perm next = cur.after(inv ? g.gens[i].inverse() : g.gens[i]);
                if (g.index_.count(next)) continue;
                if (static_cast<long long>(g.elems.size()) >= cap)
                    fail(Errc::GroupTooLarge,
                         "group closure exceeds cap of " + std::to_string(cap) + " elements");
                g.index_[next] = static_cast<int>(g.elems.size());
                g.elems.push_back(next);
                Word w = curw;
                w.push_back({i, inv});
                g.words.push_back(std::move(w));
            }
        }
    }
    return g;
}

OrbitDecomposition orbits(const QuadraticSet& qs) {
    const int n = qs.size();
    std::vector<Perm> acts;
    acts.reserve(n);
    for (int x = 0; x < n; ++x) acts.push_back(qs.left_perm(x));

    OrbitDecomposition d;
    d.orbit_of.assign(n, -1);
    std::vector<std::vector<int>> raw;
    for (int x = 0; x < n; ++x) {
        if (d.orbit_of[x] >= 0) continue;
        std::vector<int> orbit{x};
        d.orbit_of[x] = static_cast<int>(raw.size());
        for (size_t h = 0; h < orbit.size(); ++h)
            for (int z = 0; z < n; ++z) {
                for (int img : {acts[z](orbit[h]), acts[z].inverse()(orbit[h])}) {
                    if (d.orbit_of[img] < 0) {
                        d.orbit_of[img] = static_cast<int>(raw.size());
                        orbit.push_back(img);
                    }
                }
            }
        std::sort(orbit.begin(), orbit.end());
        raw.push_back(std::move(orbit));
    }
    // Nontrivial orbits first; within each class order by smallest member.
    std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        bool na = a.size() > 1, nb = b.size() > 1;
        if (na != nb) return na;
        return a[0] < b[0];
    });
    d.orbits = std::move(raw);
    d.t0 = 0;
    for (int i = 0; i < d.count(); ++i) {
        if (d.nontrivial(i)) ++d.t0;
        for (int x : d.orbits[i]) d.orbit_of[x] = i;
    }
    return d;
}

GeneratedGroup restriction_group(const QuadraticSet& qs, const OrbitDecomposition& orb,
                                 int orbit_index, long long cap) {
    if (orbit_index < 0 || orbit_index >= orb.count())
        fail(Errc::IndexOutOfRange, "orbit index out of range");
    const std::vector<int>& members = orb.orbits[orbit_index];
    const int m = static_cast<int>(members.size());
    std::vector<int> local(qs.size(), -1);
    for (int i = 0; i < m; ++i) local[members[i]] = i;

    std::vector<std::pair<std::string, Perm>> gens;
    std::set<Perm> seen;
    for (int x = 0; x < qs.size(); ++x) {
        std::vector<int> img(m);
        for (int i = 0; i < m; ++i) {
            int target = qs.left(x, members[i]);
            if (local[target] < 0) fail(Errc::Internal, "left action leaves the orbit");
            img[i] = local[target];
        }
        Perm p = Perm::from_image(std::move(img));
        if (p.is_identity()) continue;
        if (seen.insert(p).second) gens.emplace_back(qs.name(x), p);
    }
    return generate(m, gens, cap);
}

GeneratedGroup left_action_group(const QuadraticSet& qs, long long cap) {
    std::vector<std::pair<std::string, Perm>> gens;
    std::set<Perm> seen;
    for (int x = 0; x < qs.size(); ++x) {
        Perm p = qs.left_perm(x);
        if (p.is_identity()) continue;
        if (seen.insert(p).second) gens.emplace_back(qs.name(x), p);
    }
    return generate(qs.size(), gens, cap);
}

std::optional<std::pair<int, int>> nonabelian_witness(const GeneratedGroup& g) {
    for (int i = 0; i < static_cast<int>(g.gens.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(g.gens.size()); ++j)
            if (g.gens[i].after(g.gens[j]) != g.gens[j].after(g.gens[i]))
                return std::make_pair(i, j);
    return std::nullopt;
}

std::vector<int> AbelianStructure::coords_at(long pos) const {
    std::vector<int> m(orders.size());
    for (size_t k = 0; k < orders.size(); ++k) {
        m[k] = static_cast<int>(pos % orders[k]);
        pos /= orders[k];
    }
    return m;
}

long AbelianStructure::pos_of(const std::vector<int>& m) const {
    long pos = 0, w = 1;
    for (size_t k = 0; k < orders.size(); ++k) {
        pos += m[k] * w;
        w *= orders[k];
    }
    return pos;
}

namespace {

constexpr int kSubgroupEnumCap = 4096;

// All subgroups of an abelian group given by index arithmetic, as sorted
// membership bitmaps, deterministically ordered (size, then lexicographic).
std::vector<std::vector<char>> all_subgroups(const GeneratedGroup& g) {
    const int n = g.order();
    auto closure = [&](std::vector<char> memb) {
        std::vector<int> queue;
        for (int i = 0; i < n; ++i)
            if (memb[i]) queue.push_back(i);
        for (size_t h = 0; h < queue.size(); ++h) {
            int inv = g.inverse_of(queue[h]);
            if (!memb[inv]) {
                memb[inv] = 1;
                queue.push_back(inv);
            }
            for (size_t k = 0; k <= h; ++k)
                for (int prod : {g.mul(queue[h], queue[k]), g.mul(queue[k], queue[h])})
                    if (!memb[prod]) {
                        memb[prod] = 1;
                        queue.push_back(prod);
                    }
        }
        return memb;
    };
    std::set<std::vector<char>> found;
    std::vector<char> trivial(n, 0);
    trivial[0] = 1;
    found.insert(trivial);
    std::vector<std::vector<char>> queue{trivial};
    for (size_t h = 0; h < queue.size(); ++h) {
        std::vector<char> cur = queue[h];
        for (int x = 1; x < n; ++x) {
            if (cur[x]) continue;
            std::vector<char> ext = cur;
            ext[x] = 1;
            ext = closure(std::move(ext));
            if (found.insert(ext).second) queue.push_back(std::move(ext));
        }
    }
    std::vector<std::vector<char>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long ca = std::count(a.begin(), a.end(), 1);
        long cb = std::count(b.begin(), b.end(), 1);
        if (ca != cb) return ca < cb;
        return a > b;  // membership vectors: earlier elements first
    });
    return out;
}

// Recursive invariant-factor peeling on a subgroup given by membership.
void peel_factors(const GeneratedGroup& g, const std::vector<std::vector<char>>& subgroups,
                  const std::vector<char>& current, std::vector<int>& basis_out,
                  std::vector<long>& orders_out) {
    const int n = g.order();
    long size = std::count(current.begin(), current.end(), 1);
    if (size == 1) return;
    // Element of maximal order, first in element order on ties.
    int best = -1;
    long best_ord = 0;
    for (int i = 0; i < n; ++i) {
        if (!current[i]) continue;
        long o = g.element_order(i);
        if (o > best_ord) {
            best_ord = o;
            best = i;
        }
    }
    std::vector<char> cyc(n, 0);
    for (int p = 0, e = 0;; e = g.mul(e, best), ++p) {
        if (p > 0 && e == 0) break;
        cyc[e] = 1;
        if (p > best_ord) fail(Errc::Internal, "cyclic subgroup runaway");
    }
    long want = size / best_ord;
    for (const auto& sub : subgroups) {
        long ssize = std::count(sub.begin(), sub.end(), 1);
        if (ssize != want) continue;
        bool inside = true, meets = false;
        for (int i = 0; i < n && inside; ++i) {
            if (sub[i] && !current[i]) inside = false;
            if (sub[i] && cyc[i] && i != 0) meets = true;
        }
        if (!inside || meets) continue;
        basis_out.push_back(best);
        orders_out.push_back(best_ord);
        peel_factors(g, subgroups, sub, basis_out, orders_out);
        return;
    }
    fail(Errc::Internal, "no complement found for maximal cyclic factor");
}

AbelianStructure finish_structure(const GeneratedGroup& g, std::vector<int> basis,
                                  std::vector<long> orders, Errc bad_basis_err) {
    AbelianStructure a;
    a.basis = std::move(basis);
    a.orders = std::move(orders);
    a.total = 1;
    for (size_t k = 0; k + 1 < a.orders.size(); ++k)
        if (a.orders[k + 1] % a.orders[k] != 0)
            fail(bad_basis_err, "orders violate the divisibility chain");
    for (long p : a.orders) {
        if (p <= 1) fail(bad_basis_err, "basis element of order <= 1");
        a.total *= p;
    }
    if (a.total != g.order())
        fail(bad_basis_err, "basis orders do not multiply to the group order");
    a.coords.assign(g.order(), {});
    a.element_at.assign(a.total, -1);
    std::vector<char> hit(g.order(), 0);
    for (long pos = 0; pos < a.total; ++pos) {
        std::vector<int> m = a.coords_at(pos);
        int e = 0;
        for (size_t k = 0; k < a.basis.size(); ++k)
            for (int j = 0; j < m[k]; ++j) e = g.mul(e, a.basis[k]);
        if (hit[e]) fail(bad_basis_err, "basis does not give a direct product decomposition");
        hit[e] = 1;
        a.coords[e] = std::move(m);
        a.element_at[pos] = e;
    }
    return a;
}

}  // namespace

AbelianStructure invariant_factors(const GeneratedGroup& g) {
    if (auto w = nonabelian_witness(g))
        fail(Errc::NotAbelian, "generators " + g.labels[w->first] + " and " + g.labels[w->second] +
                                   " do not commute");
    if (g.order() > kSubgroupEnumCap)
        fail(Errc::GroupTooLarge, "invariant factor search capped at order " +
                                      std::to_string(kSubgroupEnumCap));
    if (g.order() == 1) return finish_structure(g, {}, {}, Errc::Internal);
    auto subgroups = all_subgroups(g);
    std::vector<int> basis;
    std::vector<long> orders;
    std::vector<char> whole(g.order(), 1);
    peel_factors(g, subgroups, whole, basis, orders);
    // Peeling emits descending orders; the convention is ascending.
    std::reverse(basis.begin(), basis.end());
    std::reverse(orders.begin(), orders.end());
    return finish_structure(g, std::move(basis), std::move(orders), Errc::Internal);
}

AbelianStructure abelian_structure_from_basis(const GeneratedGroup& g,
                                              const std::vector<int>& basis_elems) {
    std::vector<long> orders;
    orders.reserve(basis_elems.size());
    for (int e : basis_elems) {
        if (e < 0 || e >= g.order()) fail(Errc::InvalidBasisOverride, "basis element not in group");
        orders.push_back(g.element_order(e));
    }
    return finish_structure(g, basis_elems, std::move(orders), Errc::InvalidBasisOverride);
}

std::vector<int> element_coordinates(const AbelianStructure& a, const GeneratedGroup& g,
                                     const Perm& p) {
    int idx = g.index_of(p);
    if (idx < 0) fail(Errc::NotInGroup, "permutation does not belong to the group");
    return a.coords[idx];
}

}  // namespace ybe
