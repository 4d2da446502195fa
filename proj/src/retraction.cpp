#include "ybe/retraction.hpp"

#include "ybe/permgroup.hpp"

namespace ybe {

RetractStep retract(const QuadraticSet& qs) {
    AxiomReport rep = check_axioms(qs);
    if (!rep.symmetric_set)
        fail(Errc::NotSymmetricSet, "retraction requires a nondegenerate symmetric set");

    const int n = qs.size();
    RetractStep step;
    step.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (step.class_of[x] >= 0) continue;
        int cls = static_cast<int>(step.classes.size());
        step.class_of[x] = cls;
        step.classes.push_back({x});
        for (int y = x + 1; y < n; ++y)
            if (step.class_of[y] < 0 && qs.left_rows_equal(x, y)) {
                step.class_of[y] = cls;
                step.classes.back().push_back(y);
            }
    }

    const int m = static_cast<int>(step.classes.size());
    std::vector<std::pair<int, int>> images(static_cast<size_t>(m) * m, {-1, -1});
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int x = step.classes[a][0], y = step.classes[b][0];
            images[a * m + b] = {step.class_of[qs.left(x, y)], step.class_of[qs.right(x, y)]};
        }
    // Independence of representatives, over all pairs.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto expect = images[step.class_of[x] * m + step.class_of[y]];
            if (expect != std::make_pair(step.class_of[qs.left(x, y)],
                                         step.class_of[qs.right(x, y)]))
                fail(Errc::IllDefinedInduced,
                     "induced pair map depends on representatives at (" + qs.name(x) + ", " +
                         qs.name(y) + ")");
        }

    std::vector<std::string> names;
    names.reserve(m);
    for (int a = 0; a < m; ++a) names.push_back("[" + qs.name(step.classes[a][0]) + "]");
    step.retract = QuadraticSet::from_pair_map(std::move(names), images);

    AxiomReport rrep = check_axioms(step.retract);
    if (!rrep.symmetric_set)
        fail(Errc::Internal, "retract is not a nondegenerate symmetric set");
    return step;
}

MplResult mpl(const QuadraticSet& qs, int max_steps) {
    if (max_steps < 0) max_steps = qs.size();
    MplResult res;
    res.chain.push_back(qs.size());
    QuadraticSet cur = qs;
    int steps = 0;
    while (cur.size() > 1 && steps < max_steps) {
        RetractStep step = retract(cur);
        ++steps;
        res.chain.push_back(step.retract.size());
        if (step.retract.size() == cur.size()) {
            res.kind = MplResult::Kind::NotMultipermutation;
            res.stabilized_size = cur.size();
            return res;
        }
        cur = step.retract;
    }
    if (cur.size() == 1) {
        res.kind = MplResult::Kind::Finite;
        res.level = steps;
    } else {
        res.kind = MplResult::Kind::NotMultipermutation;
        res.stabilized_size = cur.size();
    }
    return res;
}

bool level2_criterion(const QuadraticSet& qs) {
    AxiomReport rep = check_axioms(qs);
    if (!rep.square_free_symmetric)
        fail(Errc::NotSymmetricSet,
             "level-2 criterion requires a nondegenerate square-free symmetric set");
    OrbitDecomposition orb = orbits(qs);
    if (orb.t0 < 1) return false;
    for (int i = 0; i < orb.t0; ++i) {
        const auto& members = orb.orbits[i];
        for (size_t k = 1; k < members.size(); ++k)
            if (!qs.left_rows_equal(members[0], members[k])) return false;
    }
    return true;
}

}  // namespace ybe
