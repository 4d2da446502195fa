#include "ybe/datum.hpp"

#include <algorithm>

namespace ybe {

SigmaTable sigma_table(const QuadraticSet& qs, const OrbitDecomposition& orb) {
    const int t = orb.count();
    SigmaTable tab;
    tab.sigma.assign(t, {});
    tab.cycle_len.assign(t, std::vector<long>(t, 1));

    std::vector<std::vector<int>> local(t);
    std::vector<int> local_of(qs.size(), -1);
    for (int i = 0; i < t; ++i) {
        local[i] = orb.orbits[i];
        for (size_t k = 0; k < local[i].size(); ++k) local_of[local[i][k]] = static_cast<int>(k);
    }

    for (int j = 0; j < t; ++j) {
        tab.sigma[j].reserve(t);
        for (int i = 0; i < t; ++i) {
            const auto& members = orb.orbits[i];
            const int m = static_cast<int>(members.size());
            auto restrict_action = [&](int x) {
                std::vector<int> img(m);
                for (int k = 0; k < m; ++k) img[k] = local_of[qs.left(x, members[k])];
                return Perm::from_image(std::move(img));
            };
            Perm sigma = restrict_action(orb.orbits[j][0]);
            for (size_t k = 1; k < orb.orbits[j].size(); ++k)
                if (restrict_action(orb.orbits[j][k]) != sigma)
                    fail(Errc::NotLevelTwo,
                         "elements " + qs.name(orb.orbits[j][0]) + " and " +
                             qs.name(orb.orbits[j][k]) + " of the same orbit act differently on " +
                             "orbit " + std::to_string(i + 1));
            if (i == j && !sigma.is_identity())
                fail(Errc::NotLevelTwo, "orbit " + std::to_string(i + 1) +
                                            " does not restrict to a trivial solution");
            if (!sigma.is_identity()) {
                auto cycles = sigma.cycles(true);
                long d = static_cast<long>(cycles[0].size());
                for (const auto& c : cycles)
                    if (static_cast<long>(c.size()) != d)
                        fail(Errc::UnequalCycles,
                             "sigma^" + std::to_string(j + 1) + "_" + std::to_string(i + 1) +
                                 " has cycles of different lengths");
                tab.cycle_len[j][i] = d;
            }
            tab.sigma[j].push_back(std::move(sigma));
        }
    }
    return tab;
}

CompleteDatum build_datum(const QuadraticSet& qs, const std::optional<BasisOverride>& override_basis,
                          long long group_cap) {
    if (!level2_criterion(qs))
        fail(Errc::NotLevelTwo, "complete datum requires multipermutation level 2");

    CompleteDatum d;
    d.orb = orbits(qs);
    d.sig = sigma_table(qs, d.orb);
    const int t = d.orb.count();
    d.orbit_data.resize(t);

    for (int i = 0; i < t; ++i) {
        OrbitDatum& od = d.orbit_data[i];
        od.members = d.orb.orbits[i];
        od.x1 = od.members[0];
        if (!d.orb.nontrivial(i)) {
            od.group = generate(1, {});
            od.abel = invariant_factors(od.group);
            od.block_size = 1;
            od.enumeration = {od.x1};
            od.enum_pos_of_local = {0};
            od.m.assign(t, {});
            continue;
        }
        od.group = restriction_group(qs, d.orb, i, group_cap);
        if (auto w = nonabelian_witness(od.group))
            fail(Errc::NotAbelian, "restricted group on orbit " + std::to_string(i + 1) +
                                       " is not abelian");
        if (od.group.order() != static_cast<int>(od.members.size()))
            fail(Errc::Internal, "restricted group order differs from orbit size");

        if (override_basis && override_basis->count(i)) {
            const auto& words = override_basis->at(i);
            std::vector<int> basis_elems;
            std::vector<std::string> word_strs;
            for (const auto& word : words) {
                if (word.empty()) fail(Errc::InvalidBasisOverride, "empty basis word");
                Perm p(static_cast<int>(od.members.size()));
                std::string ws;
                for (int x : word) {
                    p = p.after(d.sig.sigma[d.orb.orbit_of[x]][i]);
                    if (!ws.empty()) ws += " ";
                    ws += qs.name(x);
                }
                int idx = od.group.index_of(p);
                if (idx < 0)
                    fail(Errc::InvalidBasisOverride,
                         "basis word '" + ws + "' does not land in the restricted group");
                basis_elems.push_back(idx);
                word_strs.push_back(ws);
            }
            od.abel = abelian_structure_from_basis(od.group, basis_elems);
            od.basis_words = std::move(word_strs);
        } else {
            od.abel = invariant_factors(od.group);
            for (int e : od.abel.basis) od.basis_words.push_back(od.group.word_string(od.group.words[e]));
        }
        od.orders = od.abel.orders;
        od.block_size = od.abel.total;

        // Enumeration x_{ij} = pi_j(x1) over Lambda in lexicographic order.
        od.enumeration.resize(od.block_size);
        od.enum_pos_of_local.assign(od.members.size(), -1);
        std::vector<char> seen(od.members.size(), 0);
        for (long pos = 0; pos < od.block_size; ++pos) {
            const Perm& pi = od.group.elems[od.abel.element_at[pos]];
            int loc = pi(0);  // local position of x1 is 0 (members ascending)
            if (seen[loc]) fail(Errc::Internal, "orbit enumeration is not a bijection");
            seen[loc] = 1;
            od.enumeration[pos] = od.members[loc];
            od.enum_pos_of_local[loc] = static_cast<int>(pos);
        }

        od.m.assign(t, {});
        for (int j = 0; j < t; ++j) {
            int idx = od.group.index_of(d.sig.sigma[j][i]);
            if (idx < 0) fail(Errc::Internal, "sigma^j_i missing from the restricted group");
            od.m[j] = od.abel.coords[idx];
        }
    }
    return d;
}

CycExp chi_eval(const OrbitDatum& od, const std::vector<int>& eta, const std::vector<int>& m) {
    if (eta.size() != od.orders.size() || m.size() != od.orders.size())
        fail(Errc::IndexOutOfRange, "character/coordinate tuple length mismatch");
    CycExp e = unit_one();
    for (size_t k = 0; k < od.orders.size(); ++k) {
        if (eta[k] < 0 || eta[k] >= od.orders[k] || m[k] < 0 || m[k] >= od.orders[k])
            fail(Errc::IndexOutOfRange, "character/coordinate entry out of range");
        e = unit_mul(e, unit(static_cast<long long>(eta[k]) * m[k], od.orders[k]));
    }
    return e;
}

std::vector<int> lambda_at(const OrbitDatum& od, long pos) {
    std::vector<int> m(od.orders.size());
    for (size_t k = 0; k < od.orders.size(); ++k) {
        m[k] = static_cast<int>(pos % od.orders[k]);
        pos /= od.orders[k];
    }
    return m;
}

}  // namespace ybe
