#include "ybe/solution.hpp"

#include <map>
#include <set>

namespace ybe {

QuadraticSet QuadraticSet::assemble(std::vector<std::string> names,
                                    const std::vector<std::pair<int, int>>& images) {
    QuadraticSet qs;
    qs.n_ = static_cast<int>(names.size());
    qs.names_ = std::move(names);
    if (qs.n_ < 1) fail(Errc::IncompleteTable, "a quadratic set needs at least one element");
    {
        std::set<std::string> seen;
        for (const auto& nm : qs.names_)
            if (!seen.insert(nm).second) fail(Errc::SyntaxError, "duplicate element name: " + nm);
    }
    const long total = static_cast<long>(qs.n_) * qs.n_;
    if (static_cast<long>(images.size()) != total)
        fail(Errc::IncompleteTable, "pair map must assign an image to every ordered pair");
    qs.map_ = images;
    qs.inv_.assign(total, {-1, -1});
    for (int x = 0; x < qs.n_; ++x)
        for (int y = 0; y < qs.n_; ++y) {
            auto [z, t] = qs.map_[x * qs.n_ + y];
            if (z < 0 || z >= qs.n_ || t < 0 || t >= qs.n_)
                fail(Errc::IndexOutOfRange, "pair image out of range");
            auto& slot = qs.inv_[z * qs.n_ + t];
            if (slot.first >= 0)
                qs.pair_bijective_ = false;
            else
                slot = {x, y};
        }
    return qs;
}

QuadraticSet QuadraticSet::from_pair_map(std::vector<std::string> names,
                                         const std::vector<std::pair<int, int>>& images) {
    QuadraticSet qs = assemble(std::move(names), images);
    if (!qs.pair_bijective_) {
        std::vector<int> hits(images.size(), 0);
        for (const auto& [z, t] : images)
            if (++hits[z * qs.n_ + t] > 1)
                fail(Errc::NotBijective, "pair (" + qs.names_[z] + ", " + qs.names_[t] +
                                             ") listed twice as an image");
        fail(Errc::NotBijective, "pair map is not a bijection");
    }
    return qs;
}

QuadraticSet QuadraticSet::from_left_actions(std::vector<std::string> names,
                                             const std::vector<Perm>& actions) {
    const int n = static_cast<int>(names.size());
    if (static_cast<int>(actions.size()) != n)
        fail(Errc::IncompleteTable, "one left action required per element");
    for (int x = 0; x < n; ++x)
        if (actions[x].degree() != n)
            fail(Errc::NotAPermutation, "action of " + names[x] + " is not a permutation of X");
    std::vector<Perm> inverses;
    inverses.reserve(n);
    for (const Perm& p : actions) inverses.push_back(p.inverse());
    std::vector<std::pair<int, int>> images(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) images[x * n + y] = {actions[x](y), inverses[y](x)};
    // The induced r need not be a bijection on pairs when the actions are not
    // a solution; classification stays a separate explicit step.
    return assemble(std::move(names), images);
}

std::pair<int, int> QuadraticSet::r_inv(int x, int y) const {
    if (!pair_bijective_) fail(Errc::Internal, "r is not invertible on pairs");
    return inv_[x * n_ + y];
}

int QuadraticSet::index_of_name(const std::string& s) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == s) return i;
    return -1;
}

bool QuadraticSet::left_row_bijective(int x) const {
    std::vector<char> seen(n_, 0);
    for (int y = 0; y < n_; ++y) {
        int v = left(x, y);
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool QuadraticSet::right_col_bijective(int y) const {
    std::vector<char> seen(n_, 0);
    for (int x = 0; x < n_; ++x) {
        int v = right(x, y);
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm QuadraticSet::left_perm(int x) const {
    std::vector<int> img(n_);
    for (int y = 0; y < n_; ++y) img[y] = left(x, y);
    return Perm::from_image(std::move(img));
}

Perm QuadraticSet::right_perm(int y) const {
    std::vector<int> img(n_);
    for (int x = 0; x < n_; ++x) img[x] = right(x, y);
    return Perm::from_image(std::move(img));
}

bool QuadraticSet::left_rows_equal(int x, int y) const {
    for (int z = 0; z < n_; ++z)
        if (left(x, z) != left(y, z)) return false;
    return true;
}

namespace {

// One triple step of r acting in positions (1,2) or (2,3).
struct Triple {
    int a, b, c;
    bool operator==(const Triple&) const = default;
};

Triple r12(const QuadraticSet& qs, Triple t) {
    auto [z, w] = qs.r(t.a, t.b);
    return {z, w, t.c};
}

Triple r23(const QuadraticSet& qs, Triple t) {
    auto [z, w] = qs.r(t.b, t.c);
    return {t.a, z, w};
}

}  // namespace

AxiomReport check_axioms(const QuadraticSet& qs) {
    AxiomReport rep;
    const int n = qs.size();

    auto set_fail = [](AxiomFlag& f, std::vector<int> w) {
        if (f.holds) {
            f.holds = false;
            f.witness = std::move(w);
        }
    };

    for (int x = 0; x < n && rep.nondegenerate.holds; ++x) {
        if (!qs.left_row_bijective(x)) {
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = y1 + 1; y2 < n; ++y2)
                    if (qs.left(x, y1) == qs.left(x, y2)) {
                        set_fail(rep.nondegenerate, {x, y1, y2});
                        goto nondeg_done;
                    }
        }
        if (!qs.right_col_bijective(x)) {
            for (int y1 = 0; y1 < n; ++y1)
                for (int y2 = y1 + 1; y2 < n; ++y2)
                    if (qs.right(y1, x) == qs.right(y2, x)) {
                        set_fail(rep.nondegenerate, {x, y1, y2});
                        goto nondeg_done;
                    }
        }
    }
nondeg_done:

    for (int x = 0; x < n; ++x) {
        if (qs.r(x, x) != std::make_pair(x, x)) {
            set_fail(rep.square_free, {x});
            break;
        }
    }

    for (int x = 0; x < n && rep.involutive.holds; ++x)
        for (int y = 0; y < n; ++y) {
            auto [z, t] = qs.r(x, y);
            if (qs.r(z, t) != std::make_pair(x, y)) {
                set_fail(rep.involutive, {x, y});
                break;
            }
        }

    for (int x = 0; x < n && (rep.lri.holds || rep.cl1.holds || rep.cl2.holds || rep.cr1.holds ||
                              rep.cr2.holds); ++x)
        for (int y = 0; y < n; ++y) {
            if (rep.lri.holds &&
                (qs.right(qs.left(x, y), x) != y || qs.left(x, qs.right(y, x)) != y))
                set_fail(rep.lri, {x, y});
            if (rep.cl1.holds && qs.left(qs.right(y, x), x) != qs.left(y, x))
                set_fail(rep.cl1, {x, y});
            if (rep.cl2.holds && qs.left(qs.left(x, y), x) != qs.left(y, x))
                set_fail(rep.cl2, {x, y});
            if (rep.cr1.holds && qs.right(x, qs.left(x, y)) != qs.right(x, y))
                set_fail(rep.cr1, {x, y});
            if (rep.cr2.holds && qs.right(x, qs.right(y, x)) != qs.right(x, y))
                set_fail(rep.cr2, {x, y});
        }

    for (int x = 0; x < n && (rep.l1.holds || rep.r1.holds || rep.lr3.holds || rep.braid.holds);
         ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (rep.l1.holds) {
                    int lhs = qs.left(x, qs.left(y, z));
                    int rhs = qs.left(qs.left(x, y), qs.left(qs.right(x, y), z));
                    if (lhs != rhs) set_fail(rep.l1, {x, y, z});
                }
                if (rep.r1.holds) {
                    int lhs = qs.right(qs.right(x, y), z);
                    int rhs = qs.right(qs.right(x, qs.left(y, z)), qs.right(y, z));
                    if (lhs != rhs) set_fail(rep.r1, {x, y, z});
                }
                if (rep.lr3.holds) {
                    int lhs = qs.right(qs.left(x, y), qs.left(qs.right(x, y), z));
                    int rhs = qs.left(qs.right(x, qs.left(y, z)), qs.right(y, z));
                    if (lhs != rhs) set_fail(rep.lr3, {x, y, z});
                }
                if (rep.braid.holds) {
                    Triple t{x, y, z};
                    Triple lhs = r12(qs, r23(qs, r12(qs, t)));
                    Triple rhs = r23(qs, r12(qs, r23(qs, t)));
                    if (!(lhs == rhs)) set_fail(rep.braid, {x, y, z});
                }
            }

    rep.braided_set = rep.nondegenerate.holds && rep.braid.holds && qs.pair_bijective();
    rep.symmetric_set = rep.braided_set && rep.involutive.holds;
    rep.square_free_symmetric = rep.symmetric_set && rep.square_free.holds;
    return rep;
}

bool reevaluate_witness(const QuadraticSet& qs, const std::string& flag,
                        const std::vector<int>& w) {
    auto at = [&](size_t i) { return w.at(i); };
    if (flag == "nondegenerate")
        return qs.left(at(0), at(1)) == qs.left(at(0), at(2)) ||
               qs.right(at(1), at(0)) == qs.right(at(2), at(0));
    if (flag == "involutive") {
        auto [z, t] = qs.r(at(0), at(1));
        return qs.r(z, t) != std::make_pair(at(0), at(1));
    }
    if (flag == "square_free") return qs.r(at(0), at(0)) != std::make_pair(at(0), at(0));
    if (flag == "l1")
        return qs.left(at(0), qs.left(at(1), at(2))) !=
               qs.left(qs.left(at(0), at(1)), qs.left(qs.right(at(0), at(1)), at(2)));
    if (flag == "r1")
        return qs.right(qs.right(at(0), at(1)), at(2)) !=
               qs.right(qs.right(at(0), qs.left(at(1), at(2))), qs.right(at(1), at(2)));
    if (flag == "lr3")
        return qs.right(qs.left(at(0), at(1)), qs.left(qs.right(at(0), at(1)), at(2))) !=
               qs.left(qs.right(at(0), qs.left(at(1), at(2))), qs.right(at(1), at(2)));
    if (flag == "braid") {
        Triple t{at(0), at(1), at(2)};
        return !(r12(qs, r23(qs, r12(qs, t))) == r23(qs, r12(qs, r23(qs, t))));
    }
    if (flag == "cl1") return qs.left(qs.right(at(1), at(0)), at(0)) != qs.left(at(1), at(0));
    if (flag == "cl2") return qs.left(qs.left(at(0), at(1)), at(0)) != qs.left(at(1), at(0));
    if (flag == "cr1") return qs.right(at(0), qs.left(at(0), at(1))) != qs.right(at(0), at(1));
    if (flag == "cr2") return qs.right(at(0), qs.right(at(1), at(0))) != qs.right(at(0), at(1));
    if (flag == "lri")
        return qs.right(qs.left(at(0), at(1)), at(0)) != at(1) ||
               qs.left(at(0), qs.right(at(1), at(0))) != at(1);
    fail(Errc::Internal, "unknown axiom flag: " + flag);
}

std::vector<std::pair<std::string, const AxiomFlag*>> axiom_flag_list(const AxiomReport& rep) {
    return {
        {"nondegenerate", &rep.nondegenerate},
        {"involutive", &rep.involutive},
        {"square_free", &rep.square_free},
        {"l1", &rep.l1},
        {"r1", &rep.r1},
        {"lr3", &rep.lr3},
        {"braid", &rep.braid},
        {"cl1", &rep.cl1},
        {"cl2", &rep.cl2},
        {"cr1", &rep.cr1},
        {"cr2", &rep.cr2},
        {"lri", &rep.lri},
    };
}

}  // namespace ybe
