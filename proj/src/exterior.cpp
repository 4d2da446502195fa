#include "ybe/exterior.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ybe {

namespace {

// Merge two increasing differential-letter lists; returns false on a repeat.
// sign collects (-1) per transposition needed to interleave b after a.
bool merge_dl(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out,
              int& sign) {
    out.clear();
    sign = 1;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] hops over the remaining letters of a.
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return true;
}

int insert_dl(const std::vector<int>& dl, int x, std::vector<int>& out) {
    // dx enters from the left; sign is (-1)^{# letters smaller than x}.
    out.clear();
    int below = 0;
    bool placed = false;
    for (int w : dl) {
        if (w == x) return 0;
        if (w < x) {
            ++below;
            out.push_back(w);
        } else {
            if (!placed) {
                out.push_back(x);
                placed = true;
            }
            out.push_back(w);
        }
    }
    if (!placed) out.push_back(x);
    return below % 2 == 0 ? 1 : -1;
}

template <typename Coeff>
void add_term(std::map<ExtKey, Coeff>& form, ExtKey key, const Coeff& c) {
    auto it = form.find(key);
    if (it == form.end())
        form.emplace(std::move(key), c);
    else
        it->second = it->second + c;
}

void prune(QForm& f) {
    for (auto it = f.begin(); it != f.end();)
        it = (it->second == 0) ? f.erase(it) : std::next(it);
}

void prune(CForm& f) {
    for (auto it = f.begin(); it != f.end();)
        it = it->second.is_zero() ? f.erase(it) : std::next(it);
}

}  // namespace

ExteriorModel::ExteriorModel(const QuadraticSet& qs) : qs_(qs) {
    AxiomReport rep = check_axioms(qs);
    if (!rep.square_free_symmetric)
        fail(Errc::NotLevelTwo, "exterior model requires a square-free symmetric set");
    OrbitDecomposition orb = orbits(qs);
    for (int i = 0; i < orb.count(); ++i)
        for (size_t k = 1; k < orb.orbits[i].size(); ++k)
            if (!qs.left_rows_equal(orb.orbits[i][0], orb.orbits[i][k]))
                fail(Errc::NotLevelTwo,
                     "left action is not constant on orbit " + std::to_string(i + 1));
    for (int x = 0; x < qs.size(); ++x) acts_.push_back(qs.left_perm(x));
}

QForm ExteriorModel::term(const std::vector<int>& xword, const std::vector<int>& dletters,
                          const mpq_class& c) const {
    ExtKey k;
    k.exp.assign(qs_.size(), 0);
    for (int x : xword) ++k.exp[x];
    k.dl = dletters;
    std::sort(k.dl.begin(), k.dl.end());
    for (size_t i = 0; i + 1 < k.dl.size(); ++i)
        if (k.dl[i] == k.dl[i + 1]) return {};
    QForm f;
    if (c != 0) f[k] = c;
    return f;
}

Perm ExteriorModel::gamma_of(const ExtKey& k) const {
    Perm g(qs_.size());
    for (int x = 0; x < qs_.size(); ++x)
        for (int e = 0; e < k.exp[x]; ++e) g = g.after(acts_[x]);
    for (int x : k.dl) g = g.after(acts_[x]);
    return g;
}

QForm ExteriorModel::bullet(const QForm& a, const QForm& b) const {
    QForm out;
    for (const auto& [ka, ca] : a) {
        Perm g = gamma_of(ka);
        for (const auto& [kb, cb] : b) {
            ExtKey moved;
            moved.exp.assign(qs_.size(), 0);
            for (int x = 0; x < qs_.size(); ++x) moved.exp[g(x)] = kb.exp[x];
            moved.dl.reserve(kb.dl.size());
            for (int x : kb.dl) moved.dl.push_back(g(x));
            std::sort(moved.dl.begin(), moved.dl.end());
            ExtKey key;
            key.exp.resize(qs_.size());
            for (int x = 0; x < qs_.size(); ++x) key.exp[x] = ka.exp[x] + moved.exp[x];
            int sign;
            if (!merge_dl(ka.dl, moved.dl, key.dl, sign)) continue;
            add_term(out, std::move(key), mpq_class(ca * cb * sign));
        }
    }
    prune(out);
    return out;
}

QForm ExteriorModel::d(const QForm& f) const {
    QForm out;
    for (const auto& [k, c] : f) {
        for (int x = 0; x < qs_.size(); ++x) {
            if (k.exp[x] == 0) continue;
            ExtKey key;
            key.exp = k.exp;
            --key.exp[x];
            int sign = insert_dl(k.dl, x, key.dl);
            if (sign == 0) continue;
            add_term(out, std::move(key), mpq_class(c * k.exp[x] * sign));
        }
    }
    prune(out);
    return out;
}

QForm ExteriorModel::transport(const Perm& g, const QForm& f) const {
    QForm out;
    for (const auto& [k, c] : f) {
        ExtKey key;
        key.exp.assign(qs_.size(), 0);
        for (int x = 0; x < qs_.size(); ++x) key.exp[g(x)] = k.exp[x];
        for (int x : k.dl) key.dl.push_back(g(x));
        std::sort(key.dl.begin(), key.dl.end());
        // A permutation never collides letters, so the sign is the parity of
        // the sort; track it by counting inversions of the mapped list.
        std::vector<int> mapped;
        for (int x : k.dl) mapped.push_back(g(x));
        int inv = 0;
        for (size_t i = 0; i < mapped.size(); ++i)
            for (size_t j = i + 1; j < mapped.size(); ++j)
                if (mapped[i] > mapped[j]) ++inv;
        add_term(out, std::move(key), mpq_class(c * (inv % 2 == 0 ? 1 : -1)));
    }
    prune(out);
    return out;
}

std::vector<ExtKey> ExteriorModel::basis_keys(int max_degree) const {
    // Monomials of degree <= max_degree, then every differential subset that
    // keeps the total degree within the bound.
    std::vector<std::vector<int>> monos{std::vector<int>(qs_.size(), 0)};
    size_t start = 0;
    for (int deg = 1; deg <= max_degree; ++deg) {
        size_t end = monos.size();
        std::set<std::vector<int>> next;
        for (size_t k = start; k < end; ++k)
            for (int x = 0; x < qs_.size(); ++x) {
                auto m = monos[k];
                ++m[x];
                next.insert(std::move(m));
            }
        start = end;
        for (auto& m : next) monos.push_back(m);
    }
    std::vector<std::vector<int>> dsets{{}};
    for (int size = 1; size <= max_degree; ++size) {
        std::vector<int> idx(size);
        std::function<void(int, int)> rec = [&](int pos, int from) {
            if (pos == size) {
                dsets.push_back(idx);
                return;
            }
            for (int x = from; x < qs_.size(); ++x) {
                idx[pos] = x;
                rec(pos + 1, x + 1);
            }
        };
        rec(0, 0);
    }
    std::vector<ExtKey> keys;
    for (const auto& m : monos) {
        int md = 0;
        for (int e : m) md += e;
        for (const auto& dl : dsets) {
            if (md + static_cast<int>(dl.size()) > max_degree) continue;
            keys.push_back({m, dl});
        }
    }
    return keys;
}

bool ExteriorModel::d_squared_zero(int max_degree) const {
    for (const ExtKey& k : basis_keys(max_degree)) {
        QForm f{{k, mpq_class(1)}};
        if (!d(d(f)).empty()) return false;
    }
    return true;
}

bool ExteriorModel::graded_leibniz(int max_degree) const {
    auto keys = basis_keys(max_degree);
    for (const ExtKey& ka : keys) {
        for (const ExtKey& kb : keys) {
            if (ka.total_degree() + kb.total_degree() > max_degree) continue;
            QForm a{{ka, mpq_class(1)}}, b{{kb, mpq_class(1)}};
            QForm lhs = d(bullet(a, b));
            QForm rhs = bullet(d(a), b);
            int sgn = ka.form_degree() % 2 == 0 ? 1 : -1;
            for (auto& [k, c] : bullet(a, d(b))) add_term(rhs, k, mpq_class(c * sgn));
            prune(rhs);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool ExteriorModel::d_action_equivariant(int max_degree) const {
    for (int x = 0; x < qs_.size(); ++x) {
        for (const ExtKey& k : basis_keys(max_degree)) {
            QForm f{{k, mpq_class(1)}};
            if (d(transport(acts_[x], f)) != transport(acts_[x], d(f))) return false;
        }
    }
    return true;
}

DiagonalExteriorModel::DiagonalExteriorModel(const CompleteDatum& d, const MuTable& mu) {
    const int t = d.orb.count();
    gen_offset_.assign(t + 1, 0);
    for (int i = 0; i < t; ++i) gen_offset_[i + 1] = gen_offset_[i] + d.orbit_data[i].block_size;
    ngen_ = static_cast<int>(gen_offset_[t]);
    level_ = 1;
    for (int i = 0; i < t; ++i)
        if (!d.orbit_data[i].orders.empty())
            level_ = std::lcm(level_, d.orbit_data[i].orders.back());
    bichar_.assign(static_cast<size_t>(ngen_) * ngen_, unit_one());
    for (int i = 0; i < t; ++i)
        for (long eta = 0; eta < d.orbit_data[i].block_size; ++eta)
            for (int j = 0; j < t; ++j)
                for (long zeta = 0; zeta < d.orbit_data[j].block_size; ++zeta) {
                    int a = static_cast<int>(gen_offset_[i] + eta);
                    int b = static_cast<int>(gen_offset_[j] + zeta);
                    // F((i,eta),(j,zeta)) = mu^i_{j,zeta}
                    bichar_[a * ngen_ + b] = mu.mu[i][j][zeta];
                }
}

int DiagonalExteriorModel::generator_of(int orbit, long eta_pos) const {
    return static_cast<int>(gen_offset_[orbit] + eta_pos);
}

CForm DiagonalExteriorModel::term(const std::vector<int>& yword,
                                  const std::vector<int>& dletters) const {
    return term(yword, dletters, CycNum::from_rational(1, level_));
}

CForm DiagonalExteriorModel::term(const std::vector<int>& yword, const std::vector<int>& dletters,
                                  const CycNum& c) const {
    ExtKey k;
    k.exp.assign(ngen_, 0);
    for (int x : yword) ++k.exp[x];
    k.dl = dletters;
    std::sort(k.dl.begin(), k.dl.end());
    for (size_t i = 0; i + 1 < k.dl.size(); ++i)
        if (k.dl[i] == k.dl[i + 1]) return {};
    CForm f;
    if (!c.is_zero()) f[k] = c.lift(level_);
    return f;
}

CForm DiagonalExteriorModel::scale(const CycExp& c, const CForm& f) const {
    CycNum cc = CycNum::embed(c, level_);
    CForm out;
    for (const auto& [k, v] : f) out[k] = v * cc;
    prune(out);
    return out;
}

CForm DiagonalExteriorModel::add(const CForm& a, const CForm& b) const {
    CForm out = a;
    for (const auto& [k, v] : b) add_term(out, k, v);
    prune(out);
    return out;
}

CForm DiagonalExteriorModel::bullet(const CForm& a, const CForm& b) const {
    CForm out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            // Bicharacter factor over all letters, differentials included
            // (d carries degree zero).
            CycExp f = unit_one();
            for (int x = 0; x < ngen_; ++x) {
                int ea = ka.exp[x] + static_cast<int>(std::count(ka.dl.begin(), ka.dl.end(), x));
                if (ea == 0) continue;
                for (int y = 0; y < ngen_; ++y) {
                    int eb = kb.exp[y] +
                             static_cast<int>(std::count(kb.dl.begin(), kb.dl.end(), y));
                    if (eb == 0) continue;
                    f = unit_mul(f, unit_pow(F(x, y), static_cast<long long>(ea) * eb));
                }
            }
            ExtKey key;
            key.exp.resize(ngen_);
            for (int x = 0; x < ngen_; ++x) key.exp[x] = ka.exp[x] + kb.exp[x];
            int sign;
            if (!merge_dl(ka.dl, kb.dl, key.dl, sign)) continue;
            CycNum c = ca * cb * CycNum::embed(f, level_);
            if (sign < 0) c = -c;
            add_term(out, std::move(key), c);
        }
    }
    prune(out);
    return out;
}

CForm DiagonalExteriorModel::d(const CForm& f) const {
    CForm out;
    for (const auto& [k, c] : f) {
        for (int x = 0; x < ngen_; ++x) {
            if (k.exp[x] == 0) continue;
            ExtKey key;
            key.exp = k.exp;
            --key.exp[x];
            int sign = insert_dl(k.dl, x, key.dl);
            if (sign == 0) continue;
            CycNum cc = c * CycNum::from_rational(k.exp[x] * sign, level_);
            add_term(out, std::move(key), cc);
        }
    }
    prune(out);
    return out;
}

CForm DiagonalExteriorModel::partial(int gen, const CForm& f) const {
    for (const auto& [k, c] : f)
        if (!k.dl.empty()) fail(Errc::Internal, "partial derivative of a non-function form");
    CForm df = d(f);
    CForm out;
    for (const auto& [k, c] : df) {
        if (k.dl.size() != 1 || k.dl[0] != gen) continue;
        // (partial f) . dy_gen = classical coefficient; divide out the
        // bicharacter factor F(monomial, gen).
        CycExp fac = unit_one();
        for (int x = 0; x < ngen_; ++x)
            if (k.exp[x] > 0) fac = unit_mul(fac, unit_pow(F(x, gen), k.exp[x]));
        ExtKey key;
        key.exp = k.exp;
        add_term(out, std::move(key), CycNum(c * CycNum::embed(unit_inv(fac), level_)));
    }
    prune(out);
    return out;
}

CycExp DiagonalExteriorModel::rho(int a, int b) const { return unit_mul(F(a, b), unit_inv(F(b, a))); }

bool DiagonalExteriorModel::braided_derivation_check(int gen, const CForm& f,
                                                     const std::vector<int>& word) const {
    CForm g = term({}, {});
    for (int j : word) g = bullet(g, term({j}, {}));
    CForm lhs = partial(gen, bullet(f, g));
    CycExp factor = unit_one();
    for (int j : word) factor = unit_mul(factor, rho(gen, j));
    CForm rhs = add(bullet(f, partial(gen, g)), scale(factor, bullet(partial(gen, f), g)));
    return lhs == rhs;
}

}  // namespace ybe
