#include "ybe/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ybe/retraction.hpp"

namespace ybe {

namespace {

struct Line {
    int no;
    std::vector<std::string> tokens;
};

// Tokenizer; solution files treat '(' and ')' as standalone tokens (cycle
// notation), basis files keep them inside entries like zeta(8)^3.
std::vector<Line> tokenize(const std::string& text, bool split_parens) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> toks;
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
        };
        for (char c : raw) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else if ((split_parens && (c == '(' || c == ')')) || c == '=') {
                flush();
                toks.push_back(std::string(1, c));
            } else {
                cur += c;
            }
        }
        flush();
        if (!toks.empty()) lines.push_back({no, std::move(toks)});
    }
    return lines;
}

}  // namespace

ParsedSolution parse_solution(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    std::vector<std::string> names;
    std::map<std::string, int> id;
    bool have_set = false;

    auto lookup = [&](const std::string& tok, int line) {
        auto it = id.find(tok);
        if (it == id.end()) fail(Errc::UnknownName, "unknown element name: " + tok, line);
        return it->second;
    };

    // First pass: set lines.
    for (const Line& ln : lines) {
        if (ln.tokens[0] != "set") continue;
        have_set = true;
        for (size_t i = 1; i < ln.tokens.size(); ++i) {
            const std::string& nm = ln.tokens[i];
            if (nm == "=" || nm == "(" || nm == ")")
                fail(Errc::SyntaxError, "invalid element name", ln.no);
            if (id.count(nm)) fail(Errc::SyntaxError, "duplicate element name: " + nm, ln.no);
            id[nm] = static_cast<int>(names.size());
            names.push_back(nm);
        }
    }
    if (!have_set || names.empty())
        fail(Errc::SyntaxError, "missing 'set' line declaring the elements", 1);
    const int n = static_cast<int>(names.size());

    bool act_mode = false, table_mode = false;
    std::vector<Perm> actions(n, Perm(n));
    std::vector<char> act_given(n, 0);
    std::vector<std::pair<int, int>> images(static_cast<size_t>(n) * n, {-1, -1});
    ParsedSolution ps;

    for (const Line& ln : lines) {
        const auto& t = ln.tokens;
        if (t[0] == "set") continue;
        if (t[0] == "act") {
            if (table_mode) fail(Errc::MixedModes, "act line after r lines", ln.no);
            act_mode = true;
            if (t.size() < 4 || t[2] != "=")
                fail(Errc::SyntaxError, "expected: act <name> = id|(cycles)", ln.no);
            int x = lookup(t[1], ln.no);
            if (act_given[x]) fail(Errc::SyntaxError, "duplicate action for " + t[1], ln.no);
            act_given[x] = 1;
            if (t.size() == 4 && t[3] == "id") {
                actions[x] = Perm(n);
                continue;
            }
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            size_t i = 3;
            while (i < t.size()) {
                if (t[i] != "(") fail(Errc::SyntaxError, "expected '(' in cycle list", ln.no);
                std::vector<int> cyc;
                ++i;
                while (i < t.size() && t[i] != ")") {
                    if (t[i] == "(") fail(Errc::SyntaxError, "nested '('", ln.no);
                    cyc.push_back(lookup(t[i], ln.no));
                    ++i;
                }
                if (i == t.size()) fail(Errc::SyntaxError, "unterminated cycle", ln.no);
                ++i;  // skip ')'
                if (cyc.size() < 2) fail(Errc::SyntaxError, "cycle needs >= 2 elements", ln.no);
                for (size_t k = 0; k < cyc.size(); ++k) {
                    int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                    if (img[from] != from)
                        fail(Errc::SyntaxError, "element repeated across cycles", ln.no);
                    img[from] = to;
                }
            }
            auto p = Perm::try_from_image(std::move(img));
            if (!p) fail(Errc::NotAPermutation, "cycles do not define a permutation", ln.no);
            actions[x] = *p;
        } else if (t[0] == "r") {
            if (act_mode) fail(Errc::MixedModes, "r line after act lines", ln.no);
            table_mode = true;
            if (t.size() != 6 || t[3] != "=")
                fail(Errc::SyntaxError, "expected: r <x> <y> = <z> <t>", ln.no);
            int x = lookup(t[1], ln.no), y = lookup(t[2], ln.no);
            int z = lookup(t[4], ln.no), tt = lookup(t[5], ln.no);
            if (images[x * n + y].first >= 0)
                fail(Errc::SyntaxError, "pair assigned twice", ln.no);
            images[x * n + y] = {z, tt};
        } else if (t[0] == "basis") {
            if (t.size() < 4 || t[2] != "=")
                fail(Errc::SyntaxError, "expected: basis <member> = <name> <name> ...", ln.no);
            int rep = lookup(t[1], ln.no);
            std::vector<int> word;
            for (size_t i = 3; i < t.size(); ++i) word.push_back(lookup(t[i], ln.no));
            ps.basis_words[rep].push_back(std::move(word));
        } else {
            fail(Errc::SyntaxError, "unknown directive: " + t[0], ln.no);
        }
    }

    if (table_mode) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (images[x * n + y].first < 0)
                    fail(Errc::IncompleteTable, "missing r line for (" + names[x] + ", " +
                                                    names[y] + ")");
        ps.qs = QuadraticSet::from_pair_map(names, images);
    } else {
        for (int x = 0; x < n; ++x)
            if (!act_given[x])
                fail(Errc::IncompleteTable, "missing act line for " + names[x]);
        ps.qs = QuadraticSet::from_left_actions(names, actions);
    }
    return ps;
}

ParsedSolution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::SyntaxError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_solution(ss.str());
}

std::string print_solution(const QuadraticSet& qs) {
    std::ostringstream os;
    os << "set";
    for (const auto& nm : qs.names()) os << " " << nm;
    os << "\n";
    AxiomReport rep = check_axioms(qs);
    if (rep.nondegenerate.holds && rep.lri.holds) {
        for (int x = 0; x < qs.size(); ++x) {
            Perm p = qs.left_perm(x);
            os << "act " << qs.name(x) << " = ";
            if (p.is_identity()) {
                os << "id";
            } else {
                for (const auto& cyc : p.cycles()) {
                    os << "(";
                    for (size_t k = 0; k < cyc.size(); ++k)
                        os << (k ? " " : "") << qs.name(cyc[k]);
                    os << ")";
                }
            }
            os << "\n";
        }
    } else {
        for (int x = 0; x < qs.size(); ++x)
            for (int y = 0; y < qs.size(); ++y) {
                auto [z, t] = qs.r(x, y);
                os << "r " << qs.name(x) << " " << qs.name(y) << " = " << qs.name(z) << " "
                   << qs.name(t) << "\n";
            }
    }
    return os.str();
}

BasisOverride resolve_basis_override(const ParsedSolution& ps, const OrbitDecomposition& orb) {
    BasisOverride out;
    for (const auto& [rep, words] : ps.basis_words) {
        int orbit = orb.orbit_of[rep];
        auto& slot = out[orbit];
        for (const auto& w : words) slot.push_back(w);
    }
    return out;
}

namespace {

CycNum parse_entry(const std::string& tok, long& level, int line) {
    // [-] [a[/b]] [*] [i | zeta(N)[^k]]
    std::string s = tok;
    bool neg = false;
    size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    mpq_class coeff(1);
    bool have_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        coeff = mpq_class(s.substr(start, pos - start));
        coeff.canonicalize();
        have_coeff = true;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    long den = 1;
    long num = 0;
    if (pos < s.size()) {
        if (s[pos] == 'i' && pos + 1 == s.size()) {
            den = 4;
            num = 1;
            ++pos;
        } else if (s.compare(pos, 5, "zeta(") == 0) {
            size_t close = s.find(')', pos);
            if (close == std::string::npos) fail(Errc::SyntaxError, "bad unit: " + tok, line);
            den = std::stol(s.substr(pos + 5, close - pos - 5));
            if (den < 1) fail(Errc::SyntaxError, "bad unit order: " + tok, line);
            num = 1;
            pos = close + 1;
            if (pos < s.size() && s[pos] == '^') {
                num = std::stol(s.substr(pos + 1));
                pos = s.size();
            }
        } else {
            fail(Errc::SyntaxError, "bad basis entry: " + tok, line);
        }
    } else if (!have_coeff) {
        fail(Errc::SyntaxError, "bad basis entry: " + tok, line);
    }
    if (neg) coeff = -coeff;
    CycExp e = unit(num, den);
    level = std::lcm(level, e.den);
    // Assemble at the unit's own level; caller lifts to the common level.
    CycNum z = CycNum::embed(e, e.den);
    return CycNum::from_rational(coeff, e.den) * z;
}

}  // namespace

UserBasis parse_basis_file(const std::string& text, const QuadraticSet& qs,
                           const OrbitDecomposition& orb) {
    std::vector<Line> lines = tokenize(text);
    UserBasis basis;
    basis.level = 1;
    int cur_orbit = -1;
    struct Pending {
        std::string name;
        int orbit;
        std::vector<std::pair<std::string, int>> raw;  // token, line
    };
    std::vector<Pending> pending;
    for (const Line& ln : lines) {
        const auto& t = ln.tokens;
        if (t[0] == "block") {
            if (t.size() != 2) fail(Errc::SyntaxError, "expected: block <member>", ln.no);
            int rep = qs.index_of_name(t[1]);
            if (rep < 0) fail(Errc::UnknownName, "unknown element name: " + t[1], ln.no);
            cur_orbit = orb.orbit_of[rep];
        } else if (t[0] == "vec") {
            if (cur_orbit < 0) fail(Errc::SyntaxError, "vec before any block", ln.no);
            if (t.size() < 4 || t[2] != "=")
                fail(Errc::SyntaxError, "expected: vec <name> = <entries>", ln.no);
            Pending p;
            p.name = t[1];
            p.orbit = cur_orbit;
            for (size_t i = 3; i < t.size(); ++i) p.raw.push_back({t[i], ln.no});
            if (p.raw.size() != orb.orbits[cur_orbit].size())
                fail(Errc::SyntaxError,
                     "expected " + std::to_string(orb.orbits[cur_orbit].size()) + " entries",
                     ln.no);
            pending.push_back(std::move(p));
        } else {
            fail(Errc::SyntaxError, "unknown directive: " + t[0], ln.no);
        }
    }
    // Two passes so every entry ends up at the common level.
    long level = 1;
    std::vector<std::vector<CycNum>> parsed;
    for (const auto& p : pending) {
        std::vector<CycNum> entries;
        for (const auto& [tok, line] : p.raw) entries.push_back(parse_entry(tok, level, line));
        parsed.push_back(std::move(entries));
    }
    basis.level = level;
    for (size_t k = 0; k < pending.size(); ++k) {
        UserBasisVector v;
        v.name = pending[k].name;
        v.orbit = pending[k].orbit;
        for (const CycNum& e : parsed[k]) v.entries.push_back(e.lift(level));
        basis.vecs.push_back(std::move(v));
    }
    return basis;
}

UserBasis load_basis_file(const std::string& path, const QuadraticSet& qs,
                          const OrbitDecomposition& orb) {
    std::ifstream in(path);
    if (!in) fail(Errc::SyntaxError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_basis_file(ss.str(), qs, orb);
}

std::string export_dot(const QuadraticSet& qs, const OrbitDecomposition& orb) {
    static const char* palette[] = {"black",  "red",    "blue",   "darkgreen",
                                    "orange", "purple", "brown",  "cadetblue"};
    static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
    std::ostringstream os;
    os << "digraph solution {\n";
    for (const auto& nm : qs.names()) os << "  \"" << nm << "\";\n";
    for (int j = 0; j < orb.count(); ++j) {
        std::set<std::pair<int, int>> edges;
        for (int z : orb.orbits[j])
            for (int x = 0; x < qs.size(); ++x)
                if (qs.left(z, x) != x) edges.insert({x, qs.left(z, x)});
        if (edges.empty()) continue;
        os << "  // left actions of orbit " << j + 1 << " (" << qs.name(orb.orbits[j][0])
           << ")\n";
        for (auto [from, to] : edges)
            os << "  \"" << qs.name(from) << "\" -> \"" << qs.name(to) << "\" [color="
               << palette[j % 8] << ", style=" << styles[(j / 8) % 4] << "];\n";
    }
    os << "}\n";
    return os.str();
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string witness_str(const QuadraticSet& qs, const std::vector<int>& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + qs.name(w[i]);
    return out;
}

}  // namespace

std::string report_axioms(const QuadraticSet& qs, const AxiomReport& rep) {
    std::ostringstream os;
    os << "elements: " << qs.size() << "\n";
    for (const auto& [name, flag] : axiom_flag_list(rep)) {
        os << name << ": " << bool_str(flag->holds);
        if (!flag->holds) os << " (witness: " << witness_str(qs, flag->witness) << ")";
        os << "\n";
    }
    os << "braided_set: " << bool_str(rep.braided_set) << "\n";
    os << "symmetric_set: " << bool_str(rep.symmetric_set) << "\n";
    os << "square_free_symmetric_set: " << bool_str(rep.square_free_symmetric) << "\n";
    return os.str();
}

std::string report_analyze(const QuadraticSet& qs, long long group_cap) {
    std::ostringstream os;
    os << "elements: " << qs.size() << "\n";
    OrbitDecomposition orb = orbits(qs);
    os << "orbits: " << orb.count() << "\n";
    os << "nontrivial_orbits: " << orb.t0 << "\n";
    os << "orbit_sizes:";
    for (const auto& o : orb.orbits) os << " " << o.size();
    os << "\n";
    for (int i = 0; i < orb.count(); ++i) {
        os << "orbit " << i + 1 << ":";
        for (int x : orb.orbits[i]) os << " " << qs.name(x);
        os << "\n";
    }
    GeneratedGroup g = left_action_group(qs, group_cap);
    os << "group_order: " << g.order() << "\n";
    auto witness = nonabelian_witness(g);
    os << "abelian: " << bool_str(!witness) << "\n";
    if (witness)
        os << "nonabelian_witness: " << g.labels[witness->first] << " "
           << g.labels[witness->second] << "\n";
    AxiomReport ax = check_axioms(qs);
    if (ax.symmetric_set) {
        MplResult m = mpl(qs);
        os << "retract_chain:";
        for (int s : m.chain) os << " " << s;
        os << "\n";
        if (m.kind == MplResult::Kind::Finite)
            os << "mpl: " << m.level << "\n";
        else
            os << "mpl: not_multipermutation (stabilized at " << m.stabilized_size << ")\n";
    } else {
        os << "mpl: undefined (not a symmetric set)\n";
    }
    return os.str();
}

std::string report_datum(const QuadraticSet& qs, const CompleteDatum& d) {
    std::ostringstream os;
    os << "orbits: " << d.orb.count() << "\n";
    for (int i = 0; i < d.orb.count(); ++i) {
        const OrbitDatum& od = d.orbit_data[i];
        os << "orbit " << i + 1 << ": size " << od.members.size() << "\n";
        os << "  x1: " << qs.name(od.x1) << "\n";
        if (od.trivial()) {
            os << "  datum: trivial placeholder\n";
            continue;
        }
        os << "  group_order: " << od.group.order() << "\n";
        os << "  basis:";
        for (const auto& w : od.basis_words) os << " [" << w << "]";
        os << "\n";
        os << "  orders:";
        for (long p : od.orders) os << " " << p;
        os << "\n";
        for (int j = 0; j < d.orb.count(); ++j) {
            os << "  m[" << j + 1 << "->" << i + 1 << "]:";
            for (int c : od.m[j]) os << " " << c;
            os << " (cycle length " << d.sig.cycle_len[j][i] << ")\n";
        }
        os << "  enumeration:";
        for (int x : od.enumeration) os << " " << qs.name(x);
        os << "\n";
    }
    return os.str();
}

std::string report_diagonalize(const QuadraticSet& qs, const CompleteDatum& d,
                               const DiagonalBasis& y, const MuTable& mu,
                               const DiagonalReport& rep) {
    std::ostringstream os;
    os << "diagonal: " << bool_str(rep.ok) << "\n";
    if (!rep.ok) {
        os << "failure: " << rep.failure << "\n";
        return os.str();
    }
    os << "basis_vectors:\n";
    for (int i = 0; i < d.orb.count(); ++i) {
        const OrbitDatum& od = d.orbit_data[i];
        for (long eta = 0; eta < od.block_size; ++eta) {
            os << "  " << y_generator_name(qs, d, i, eta) << " =";
            for (long k = 0; k < od.block_size; ++k) {
                os << " " << to_string(y.vecs[i][eta][k]) << "*" << qs.name(od.enumeration[k]);
            }
            os << "\n";
        }
    }
    os << "mu_table:\n";
    for (int j = 0; j < d.orb.count(); ++j)
        for (int i = 0; i < d.orb.count(); ++i) {
            const OrbitDatum& od = d.orbit_data[i];
            for (long eta = 0; eta < od.block_size; ++eta)
                os << "  mu[" << j + 1 << "->" << i + 1 << "][" << y_generator_name(qs, d, i, eta)
                   << "] = " << to_string(mu.mu[j][i][eta]) << "\n";
        }
    os << "pairs_checked: " << rep.pairs.size() << "\n";
    bool all_swapped = true;
    for (const auto& pc : rep.pairs)
        if (pc.form == DiagonalForm::Unswapped) all_swapped = false;
    os << "form: " << (all_swapped ? "swapped" : "mixed") << "\n";
    return os.str();
}

std::string report_basis_check(const QuadraticSet& qs, const UserBasis& basis,
                               const BasisCheckResult& res) {
    (void)qs;
    std::ostringstream os;
    os << "diagonalizable: " << bool_str(res.diagonalizable) << "\n";
    if (res.diagonalizable) {
        for (size_t a = 0; a < basis.vecs.size(); ++a)
            for (size_t b = 0; b < basis.vecs.size(); ++b)
                os << "mu[" << basis.vecs[a].name << "][" << basis.vecs[b].name
                   << "] = " << to_string(res.mu[a][b]) << "\n";
        return os.str();
    }
    const BasisObstruction& ob = *res.first_obstruction;
    os << "obstruction_pair: " << basis.vecs[ob.a].name << " " << basis.vecs[ob.b].name << "\n";
    for (size_t k = 0; k < ob.required.size(); ++k)
        os << "condition_" << k + 1 << ": mu = " << to_string(ob.required[k]) << "\n";
    if (!ob.detail.empty()) os << "detail: " << ob.detail << "\n";
    os << "obstructed_pairs: " << res.obstructions.size() << "\n";
    return os.str();
}

std::string report_cotwist(const QuadraticSet& qs, const RcotwistReport& rep) {
    std::ostringstream os;
    os << "lri: " << bool_str(rep.lri) << "\n";
    os << "condition_a: " << bool_str(rep.cond_a);
    if (!rep.cond_a) os << " (witness: " << witness_str(qs, rep.witness_a) << ")";
    os << "\n";
    os << "ybe_for_f: " << bool_str(rep.ybe_f);
    if (!rep.ybe_f) os << " (witness: " << witness_str(qs, rep.witness_f) << ")";
    os << "\n";
    os << "ybe_for_r: " << bool_str(rep.ybe_r);
    if (!rep.ybe_r) os << " (witness: " << witness_str(qs, rep.witness_r) << ")";
    os << "\n";
    os << "fybe_route_agrees: " << bool_str(rep.fybe_route_agrees) << "\n";
    os << "two_imply_third: " << bool_str(rep.two_imply_third_ok) << "\n";
    os << "factorization: " << bool_str(rep.factorization) << "\n";
    os << "factorization_iff: " << bool_str(rep.factorization_iff_ok) << "\n";
    if (rep.mpl_le_2) {
        os << "mpl_le_2: " << bool_str(*rep.mpl_le_2) << "\n";
        os << "mpl_equivalence: " << bool_str(*rep.mpl_equivalence_ok) << "\n";
    }
    return os.str();
}

}  // namespace ybe
