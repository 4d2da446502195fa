#include "ybe/quantum.hpp"

#include <algorithm>
#include <set>

namespace ybe {

RelationSet relations_x(const QuadraticSet& qs) {
    const int n = qs.size();
    RelationSet rs;
    std::set<std::pair<int, int>> done;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (done.count({x, y})) continue;
            auto [z, t] = qs.r(x, y);
            if (z == x && t == y) continue;  // fixed pair, no relation
            done.insert({x, y});
            if (qs.r(z, t) == std::make_pair(x, y)) done.insert({z, t});
            rs.rewrites.push_back({x, y, z, t});
            rs.lines.push_back(qs.name(x) + "*" + qs.name(y) + " = " + qs.name(z) + "*" +
                               qs.name(t));
        }
    return rs;
}

namespace {

std::string q_prefix(const CycExp& q) { return q.is_one() ? "" : to_string(q) + " * "; }

}  // namespace

RelationSet relations_y(const QuadraticSet& qs, const CompleteDatum& d, const MuTable& mu) {
    RelationSet rs;
    const int t = d.orb.count();
    // Flattened generator list in block order.
    std::vector<std::pair<int, long>> gens;
    for (int i = 0; i < t; ++i)
        for (long e = 0; e < d.orbit_data[i].block_size; ++e) gens.push_back({i, e});
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b) {
            auto [i, eta] = gens[a];
            auto [j, zeta] = gens[b];
            CycExp q = unit_mul(mu.mu[i][j][zeta], unit_inv(mu.mu[j][i][eta]));
            rs.qcomms.push_back({i, j, eta, zeta, q});
            rs.lines.push_back(y_generator_name(qs, d, i, eta) + "*" +
                               y_generator_name(qs, d, j, zeta) + " = " + q_prefix(q) +
                               y_generator_name(qs, d, j, zeta) + "*" +
                               y_generator_name(qs, d, i, eta));
        }
    return rs;
}

RelationSet calculus_relations_x(const QuadraticSet& qs) {
    const int n = qs.size();
    RelationSet rs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [z, t] = qs.r(x, y);
            rs.lines.push_back(qs.name(x) + "*d" + qs.name(y) + " = d" + qs.name(z) + "*" +
                               qs.name(t));
        }
    // Two 1-forms pick up the graded swap sign.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [z, t] = qs.r(x, y);
            rs.lines.push_back("d" + qs.name(x) + "*d" + qs.name(y) + " + d" + qs.name(z) +
                               "*d" + qs.name(t) + " = 0");
        }
    return rs;
}

RelationSet calculus_relations_y(const QuadraticSet& qs, const CompleteDatum& d,
                                 const MuTable& mu) {
    RelationSet rs;
    const int t = d.orb.count();
    std::vector<std::pair<int, long>> gens;
    for (int i = 0; i < t; ++i)
        for (long e = 0; e < d.orbit_data[i].block_size; ++e) gens.push_back({i, e});
    // dy_a . y_b = rho_ab y_b . dy_a for all ordered pairs.
    for (auto [i, eta] : gens)
        for (auto [j, zeta] : gens) {
            CycExp rho = unit_mul(mu.mu[i][j][zeta], unit_inv(mu.mu[j][i][eta]));
            std::string ya = y_generator_name(qs, d, i, eta);
            std::string yb = y_generator_name(qs, d, j, zeta);
            rs.qcomms.push_back({i, j, eta, zeta, rho});
            rs.lines.push_back("d" + ya + "*" + yb + " = " + q_prefix(rho) + yb + "*d" + ya);
        }
    // dy_a . dy_b + rho_ab dy_b . dy_a = 0 for a <= b.
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a; b < gens.size(); ++b) {
            auto [i, eta] = gens[a];
            auto [j, zeta] = gens[b];
            CycExp rho = unit_mul(mu.mu[i][j][zeta], unit_inv(mu.mu[j][i][eta]));
            std::string ya = y_generator_name(qs, d, i, eta);
            std::string yb = y_generator_name(qs, d, j, zeta);
            rs.lines.push_back("d" + ya + "*d" + yb + " + " + q_prefix(rho) + "d" + yb + "*d" +
                               ya + " = 0");
        }
    return rs;
}

BulletAlgebra::BulletAlgebra(const QuadraticSet& qs) : qs_(qs) {
    AxiomReport rep = check_axioms(qs);
    if (!rep.square_free_symmetric)
        fail(Errc::NotLevelTwo, "bullet model requires a square-free symmetric set");
    OrbitDecomposition orb = orbits(qs);
    for (int i = 0; i < orb.count(); ++i) {
        const auto& members = orb.orbits[i];
        for (size_t k = 1; k < members.size(); ++k)
            if (!qs.left_rows_equal(members[0], members[k]))
                fail(Errc::NotLevelTwo,
                     "left action is not constant on orbit " + std::to_string(i + 1));
    }
    acts_.reserve(qs.size());
    for (int x = 0; x < qs.size(); ++x) acts_.push_back(qs.left_perm(x));
}

Perm BulletAlgebra::gamma(const Monomial& m) const {
    Perm g(qs_.size());
    for (int x = 0; x < qs_.size(); ++x)
        for (int e = 0; e < m[x]; ++e) g = g.after(acts_[x]);
    return g;
}

BulletAlgebra::Monomial BulletAlgebra::bullet(const Monomial& a, const Monomial& b) const {
    Perm g = gamma(a);
    Monomial out = a;
    for (int x = 0; x < qs_.size(); ++x) out[g(x)] += b[x];
    return out;
}

BulletAlgebra::Monomial BulletAlgebra::word_monomial(const std::vector<int>& word) const {
    Monomial m(qs_.size(), 0);
    for (int x : word) ++m[x];
    return m;
}

bool BulletAlgebra::defining_check() const {
    const int n = qs_.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [z, t] = qs_.r(x, y);
            if (bullet(word_monomial({x}), word_monomial({y})) !=
                bullet(word_monomial({z}), word_monomial({t})))
                return false;
        }
    return true;
}

bool BulletAlgebra::associativity_check(int max_degree, const std::vector<int>& letters) const {
    std::vector<int> ls = letters;
    if (ls.empty())
        for (int x = 0; x < qs_.size(); ++x) ls.push_back(x);
    // All monomials of degree <= max_degree in the chosen letters.
    std::vector<Monomial> monos{Monomial(qs_.size(), 0)};
    size_t level_start = 0;
    for (int deg = 1; deg <= max_degree; ++deg) {
        size_t level_end = monos.size();
        std::set<Monomial> next;
        for (size_t k = level_start; k < level_end; ++k)
            for (int x : ls) {
                Monomial m = monos[k];
                ++m[x];
                next.insert(std::move(m));
            }
        level_start = level_end;
        for (auto& m : next) monos.push_back(m);
    }
    for (const Monomial& a : monos)
        for (const Monomial& b : monos)
            for (const Monomial& c : monos) {
                int deg = 0;
                for (int x = 0; x < qs_.size(); ++x) deg += a[x] + b[x] + c[x];
                if (deg > max_degree) continue;
                if (bullet(bullet(a, b), c) != bullet(a, bullet(b, c))) return false;
            }
    return true;
}

unsigned long binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    unsigned long r = 1;
    for (unsigned long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long hilbert_dimension(const QuadraticSet& qs, int degree, long max_dim) {
    const long n = qs.size();
    long dim = 1;
    for (int i = 0; i < degree; ++i) {
        dim *= n;
        if (dim > max_dim)
            fail(Errc::TooLarge, "free module dimension " + std::to_string(n) + "^" +
                                     std::to_string(degree) + " exceeds cap " +
                                     std::to_string(max_dim));
    }
    if (degree == 0) return 1;
    if (degree == 1) return n;

    RelationSet rel = relations_x(qs);
    // Sparse rows with two entries +1/-1 at word indices; eliminate exactly.
    std::vector<std::map<long, mpq_class>> rows;
    long side = 1;
    for (int i = 0; i < degree - 2; ++i) side *= n;
    for (const RewriteRelation& r : rel.rewrites) {
        for (int pos = 0; pos + 2 <= degree; ++pos) {
            long left_count = 1;
            for (int i = 0; i < pos; ++i) left_count *= n;
            long right_count = 1;
            for (int i = pos + 2; i < degree; ++i) right_count *= n;
            for (long u = 0; u < left_count; ++u)
                for (long v = 0; v < right_count; ++v) {
                    // Word index treating letters as digits, leftmost most
                    // significant.
                    auto word_index = [&](int a, int b) {
                        long idx = u;
                        idx = idx * n + a;
                        idx = idx * n + b;
                        idx = idx * right_count + v;
                        return idx;
                    };
                    std::map<long, mpq_class> row;
                    row[word_index(r.x1, r.y1)] += 1;
                    row[word_index(r.x2, r.y2)] -= 1;
                    rows.push_back(std::move(row));
                }
        }
    }
    (void)side;
    // Exact sparse Gaussian elimination.
    std::map<long, std::map<long, mpq_class>> pivots;  // leading index -> row
    long rank = 0;
    for (auto& row : rows) {
        std::map<long, mpq_class> cur = std::move(row);
        while (!cur.empty()) {
            long lead = cur.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                mpq_class inv = 1 / cur.begin()->second;
                for (auto& [k, v] : cur) v *= inv;
                pivots.emplace(lead, std::move(cur));
                ++rank;
                break;
            }
            mpq_class f = cur.begin()->second;
            for (const auto& [k, v] : it->second) {
                auto jt = cur.find(k);
                if (jt == cur.end())
                    cur.emplace(k, -f * v);
                else {
                    jt->second -= f * v;
                    if (jt->second == 0) cur.erase(jt);
                }
            }
        }
    }
    return dim - rank;
}

bool hilbert_check(const QuadraticSet& qs, int degree, long max_dim) {
    long dim = hilbert_dimension(qs, degree, max_dim);
    return dim == static_cast<long>(binomial(qs.size() + degree - 1, degree));
}

}  // namespace ybe
