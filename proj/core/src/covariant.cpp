#include "ospq/covariant.hpp"

#include "ospq/cgc.hpp"
#include "ospq/corep.hpp"
#include "ospq/expr.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

Scalar parse_scalar_expr(const std::string& text) {
    static const auto empty = std::make_shared<GeneratorSet>();
    FreeGradedPoly p = parse_free_poly(text, empty);
    Scalar c;
    for (const auto& [w, v] : p.terms()) {
        if (!w.empty()) throw std::invalid_argument("expected a scalar expression: " + text);
        c += v;
    }
    return c;
}

FreeGradedPoly poly_substitute(const FreeGradedPoly& p, int symbol_id, const Scalar& value) {
    FreeGradedPoly out(p.gens());
    for (const auto& [w, c] : p.terms()) out.add_term(w, c.substitute(symbol_id, value));
    return out;
}

int mod2(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

} // namespace

// ---------------------------------------------------------------------------
// Generators and composite relations
// ---------------------------------------------------------------------------

std::shared_ptr<const GeneratorSet> covariant_generators(int ell, int lambda) {
    static std::map<std::pair<int, int>, std::shared_ptr<const GeneratorSet>> cache;
    auto key = std::make_pair(ell, lambda);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::string stem = "x";
    if (ell == 1 && lambda == 0) stem = "z";
    else if (ell == 1 && lambda == 1) stem = "th";
    else if (ell == 2 && lambda == 0) stem = "Y";
    auto gs = std::make_shared<GeneratorSet>();
    for (int m = ell; m >= -ell; --m) {
        gs->names.push_back(stem + (m < 0 ? "m" + std::to_string(-m) : std::to_string(m)));
        gs->parities.push_back(mod2(ell - m + lambda));
    }
    cache[key] = gs;
    return gs;
}

FreeGradedPoly composite_relation(int ell, int lambda, int L, int M) {
    if (L < 0 || L > 2 * ell || std::abs(M) > L)
        throw std::domain_error("composite_relation: (L, M) out of range");
    auto gens = covariant_generators(ell, lambda);
    CGCTable tab = cgc_table(ell, ell, L, lambda);
    Scalar norm(1);
    if (auto it = tab.row_factors.find(M); it != tab.row_factors.end())
        norm = it->second.inverse();
    // Display orientation of the coupled sum.  The printed relations fix an
    // overall sign per row that the |M|-symmetric row factors cannot encode;
    // the rows below are the ones whose printed form is the negative of the
    // factor-normalized sum.
    bool flip = (ell == 1 && L == 0) ||
                (ell == 2 && lambda == 0 && L == 3 &&
                 (M == 2 || M == -1 || M == -2 || M == -3));
    if (flip) norm = -norm;

    FreeGradedPoly rel(gens);
    for (int m1 = -ell; m1 <= ell; ++m1) {
        int m2 = M - m1;
        if (std::abs(m2) > ell) continue;
        auto it = tab.entries.find({m1, m2});
        if (it == tab.entries.end()) continue;
        rel.add_term({ell - m1, ell - m2}, norm * it->second);
    }
    if (L == 0) {
        rel -= FreeGradedPoly::constant(gens, Scalar::parameter(sym::r()));
    } else if (L == ell) {
        int xi_id = mod2(ell + lambda) ? sym::xi_odd() : sym::xi();
        rel -= FreeGradedPoly::word(gens, {ell - M}, Scalar::parameter(xi_id));
    }
    return rel;
}

bool relation_has_classical_limit(int ell, int lambda, int L) {
    // The rejected blocks, quarantined explicitly: they degenerate at q = 1 to
    // equations like x^2 = 0 for an even generator (or anticommutators of
    // even-odd pairs) and never enter a presentation.
    if (ell == 1 && lambda == 0 && L == 2) return false;
    if (ell == 1 && lambda == 1 && L == 1) return false;
    if (ell == 2 && lambda == 0 && L == 4) return false;
    return true;
}

bool verify_coaction_covariance(int ell, int lambda, int L) {
    const CorepMatrix& Tl = corep_matrix(ell, lambda);
    const CorepMatrix& TL = corep_matrix(L, mod2(L));
    CGCTable tab = cgc_table(ell, ell, L, lambda);
    auto C = [&](int m1, int m2) -> Scalar {
        auto it = tab.entries.find({m1, m2});
        return it == tab.entries.end() ? Scalar(0) : it->second;
    };
    for (int M = -L; M <= L; ++M)
        for (int m1 = -ell; m1 <= ell; ++m1)
            for (int m2 = -ell; m2 <= ell; ++m2) {
                NCPoly lhs;
                for (int n1 = -ell; n1 <= ell; ++n1) {
                    int n2 = M - n1;
                    if (std::abs(n2) > ell) continue;
                    Scalar c = C(n1, n2);
                    if (c.is_zero()) continue;
                    NCPoly prod = mul(Tl.at(m1, n1), Tl.at(m2, n2)) * c;
                    if (mod2(static_cast<long>(m1 + n1) * (ell - m2 + lambda)))
                        prod = -prod;
                    lhs += prod;
                }
                NCPoly rhs;
                int Mp = m1 + m2;
                if (std::abs(Mp) <= L) rhs = TL.at(Mp, M) * C(m1, m2);
                if (!(lhs - rhs).is_zero()) return false;
            }
    return true;
}

bool verify_primed_basis_corep() {
    // theta'_0 = theta_0, theta'_{+-1} = -theta_{+-1} turns covariance under
    // T^1(1) into covariance under T^1(0): sigma_n T^1(1)_{mn} must equal
    // sigma_m T^1(0)_{mn} with sigma_m = (-1)^m.
    const CorepMatrix& T0 = corep_matrix(1, 0);
    const CorepMatrix& T1 = corep_matrix(1, 1);
    for (int mp = -1; mp <= 1; ++mp)
        for (int m = -1; m <= 1; ++m) {
            NCPoly lhs = T1.at(mp, m);
            if (mod2(m)) lhs = -lhs;
            NCPoly rhs = T0.at(mp, m);
            if (mod2(mp)) rhs = -rhs;
            if (!(lhs - rhs).is_zero()) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Presentations: reduction machinery
// ---------------------------------------------------------------------------

const FreeGradedPoly* Presentation::rule_for(int x, int y) const {
    for (const auto& r : rules)
        if (r.x == x && r.y == y) return &r.rhs;
    return nullptr;
}

FreeGradedPoly Presentation::normal_form(const FreeGradedPoly& p) const {
    FreeGradedPoly cur = p;
    long steps = step_bound;
    for (;;) {
        FreeGradedPoly next(gens);
        bool changed = false;
        for (const auto& [word, coeff] : cur.terms()) {
            size_t i = 0, len = 0;
            const FreeGradedPoly* rule = nullptr;
            for (; i < word.size() && rule == nullptr; ++i) {
                if (i + 1 < word.size() &&
                    (rule = rule_for(word[i], word[i + 1])) != nullptr) {
                    len = 2;
                    break;
                }
                for (const auto& wr : word_rules)
                    if (i + wr.lhs.size() <= word.size() &&
                        std::equal(wr.lhs.begin(), wr.lhs.end(), word.begin() + i)) {
                        rule = &wr.rhs;
                        len = wr.lhs.size();
                        break;
                    }
                if (rule != nullptr) break;
            }
            if (rule == nullptr) {
                next.add_term(word, coeff);
                continue;
            }
            changed = true;
            if (--steps < 0)
                throw std::runtime_error("Presentation '" + name +
                                         "': reduction step bound exceeded");
            std::vector<int> pre(word.begin(), word.begin() + i);
            std::vector<int> post(word.begin() + i + len, word.end());
            next += FreeGradedPoly::word(gens, pre, coeff) * (*rule) *
                    FreeGradedPoly::word(gens, post);
        }
        if (!changed) return next;
        cur = next;
    }
}

FreeGradedPoly Presentation::nf_word(const std::vector<int>& w, const Scalar& c) const {
    return normal_form(FreeGradedPoly::word(gens, w, c));
}

std::string Presentation::to_string() const {
    std::ostringstream out;
    out << "presentation " << name << "\n";
    for (int i = 0; i < gens->size(); ++i)
        out << "generator " << gens->names[i] << " " << gens->parities[i] << "\n";
    for (const auto& [pname, par] : parameters)
        out << "parameter " << pname << " " << par << "\n";
    for (const auto& r : rules)
        out << "rule " << gens->names[r.x] << " " << gens->names[r.y] << " -> "
            << r.rhs.to_string() << "\n";
    for (const auto& r : word_rules) {
        out << "rule";
        for (int g : r.lhs) out << " " << gens->names[g];
        out << " -> " << r.rhs.to_string() << "\n";
    }
    for (const auto& c : constants) {
        out << "constant " << c.name << " : " << c.expr.to_string();
        if (c.expected) out << " = " << (FreeGradedPoly::constant(gens, *c.expected)).to_string();
        out << "\n";
    }
    out << "step_bound " << step_bound << "\n";
    return out.str();
}

Presentation parse_presentation(const std::string& text) {
    Presentation pres;
    auto gs = std::make_shared<GeneratorSet>();
    std::istringstream in(text);
    std::string line;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_presentation: " + why + ": " + line);
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "presentation") {
            ls >> pres.name;
        } else if (head == "generator") {
            std::string gname;
            int par = 0;
            if (!(ls >> gname >> par)) fail("bad generator line");
            gs->names.push_back(gname);
            gs->parities.push_back(par);
        } else if (head == "parameter") {
            std::string pname;
            int par = 0;
            if (!(ls >> pname >> par)) fail("bad parameter line");
            if (!Symbols::known(pname)) Symbols::declare(pname, par);
            pres.parameters.emplace_back(pname, par);
        } else if (head == "rule") {
            if (!pres.gens) pres.gens = gs;
            std::vector<int> lhs;
            std::string tok;
            while (ls >> tok && tok != "->") {
                int g = pres.gens->index(tok);
                if (g < 0) fail("unknown generator in rule");
                lhs.push_back(g);
            }
            if (tok != "->" || lhs.size() < 2) fail("bad rule line");
            std::string rest;
            std::getline(ls, rest);
            if (lhs.size() == 2)
                pres.rules.push_back({lhs[0], lhs[1], parse_free_poly(rest, pres.gens)});
            else
                pres.word_rules.push_back({lhs, parse_free_poly(rest, pres.gens)});
        } else if (head == "constant") {
            if (!pres.gens) pres.gens = gs;
            std::string cname, colon;
            if (!(ls >> cname >> colon) || colon != ":") fail("bad constant line");
            std::string rest;
            std::getline(ls, rest);
            std::optional<Scalar> expected;
            // Split on the last top-level " = ".
            size_t depth_ok_pos = std::string::npos;
            int depth = 0;
            for (size_t i = 0; i + 2 < rest.size(); ++i) {
                if (rest[i] == '(' || rest[i] == '[') ++depth;
                else if (rest[i] == ')' || rest[i] == ']') --depth;
                else if (depth == 0 && rest.compare(i, 3, " = ") == 0) depth_ok_pos = i;
            }
            std::string expr_text = rest;
            if (depth_ok_pos != std::string::npos) {
                expr_text = rest.substr(0, depth_ok_pos);
                expected = parse_scalar_expr(rest.substr(depth_ok_pos + 3));
            }
            pres.constants.push_back({cname, parse_free_poly(expr_text, pres.gens), expected});
        } else if (head == "step_bound") {
            if (!(ls >> pres.step_bound)) fail("bad step_bound line");
        } else {
            fail("unknown directive");
        }
        if (!pres.gens && gs->size() > 0) pres.gens = gs;
    }
    if (!pres.gens) pres.gens = gs;
    return pres;
}

// ---------------------------------------------------------------------------
// Consistency checks
// ---------------------------------------------------------------------------

bool ConsistencyReport::condition_a_pass() const {
    return std::all_of(condition_a.begin(), condition_a.end(),
                       [](const CentralityRecord& r) { return r.residual_is_zero; });
}
bool ConsistencyReport::condition_b_pass() const {
    return std::all_of(condition_b.begin(), condition_b.end(),
                       [](const DiamondRecord& r) { return r.equal; });
}

std::string ConsistencyReport::to_string() const {
    std::ostringstream out;
    out << "condition (a): " << (condition_a_pass() ? "pass" : "FAIL") << "\n";
    for (const auto& r : condition_a)
        if (!r.residual_is_zero)
            out << "  " << r.constant << " vs " << r.generator << ": residual "
                << r.residual_text << "\n";
    out << "condition (b): " << (condition_b_pass() ? "pass" : "FAIL") << "\n";
    for (const auto& r : condition_b)
        if (!r.equal)
            out << "  diamond (" << r.triple[0] << "," << r.triple[1] << "," << r.triple[2]
                << "): " << r.nf1 << "  !=  " << r.nf2 << "\n";
    return out.str();
}

ConsistencyReport consistency_check(const Presentation& pres) {
    ConsistencyReport rep;
    const int n = pres.gens->size();

    for (const auto& c : pres.constants) {
        FreeGradedPoly red = pres.normal_form(c.expr);
        if (c.expected) {
            FreeGradedPoly res = red - FreeGradedPoly::constant(pres.gens, *c.expected);
            rep.condition_a.push_back(
                {c.name, "(value)", res.is_zero(), res.is_zero() ? "" : res.to_string()});
        }
        for (int g = 0; g < n; ++g) {
            FreeGradedPoly gw = FreeGradedPoly::word(pres.gens, {g});
            FreeGradedPoly res =
                pres.normal_form(c.expr * gw) - pres.normal_form(gw * c.expr);
            rep.condition_a.push_back({c.name, pres.gens->names[g], res.is_zero(),
                                       res.is_zero() ? "" : res.to_string()});
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const FreeGradedPoly* rij = pres.rule_for(i, j);
            if (rij == nullptr) continue;
            for (int k = 0; k < n; ++k) {
                const FreeGradedPoly* rjk = pres.rule_for(j, k);
                if (rjk == nullptr) continue;
                DiamondRecord rec{{i, j, k}, false, "", ""};
                try {
                    FreeGradedPoly p1 =
                        pres.normal_form(*rij * FreeGradedPoly::word(pres.gens, {k}));
                    FreeGradedPoly p2 =
                        pres.normal_form(FreeGradedPoly::word(pres.gens, {i}) * *rjk);
                    rec.equal = (p1 - p2).is_zero();
                    if (!rec.equal) {
                        rec.nf1 = p1.to_string();
                        rec.nf2 = p2.to_string();
                    }
                } catch (const std::runtime_error& e) {
                    rec.equal = false;
                    rec.nf1 = rec.nf2 = e.what();
                }
                rep.condition_b.push_back(rec);
            }
        }
    return rep;
}

bool verify_classical_limit(const Presentation& pres) {
    // q -> 1 probe point; radical-carrying coefficients vanish only like
    // sqrt(1 - q), hence the generous tolerance against the 1e-16 offset.
    const Rational q1(9999999999999999LL, 10000000000000000LL);
    const double tol = 1e-6;
    auto limit_of = [&](const Scalar& c) -> double {
        std::map<std::string, Real> bindings;
        for (const auto& t : c.terms()) {
            for (const auto& [id, e] : t.par.even()) bindings[Symbols::name(id)] = 1;
            for (int id : t.par.odd()) bindings[Symbols::name(id)] = 0;
        }
        return static_cast<double>(c.eval_numeric(q1, bindings, 50));
    };

    for (const auto& r : pres.rules) {
        bool odd_square = (r.x == r.y) && pres.gens->parity(r.x) == 1;
        bool swap_rule = false;
        if (r.x != r.y) {
            auto it = r.rhs.terms().find(std::vector<int>{r.y, r.x});
            swap_rule = (it != r.rhs.terms().end());
        }
        if (!swap_rule && !odd_square) continue;   // quadric constraints are exempt
        // Compare lhs and rhs in the supercommutative quotient at q -> 1:
        // sort each two-letter word (with the Koszul sign), drop odd squares,
        // and require the accumulated images to agree.
        std::map<std::pair<int, int>, double> image;
        auto accumulate = [&](const std::vector<int>& w, double v) {
            int a = w[0], b = w[1];
            if (a == b && pres.gens->parity(a)) return;   // odd square -> 0
            if (a > b) {
                std::swap(a, b);
                if (pres.gens->parity(a) && pres.gens->parity(b)) v = -v;
            }
            image[{a, b}] += v;
        };
        accumulate({r.x, r.y}, 1.0);
        for (const auto& [w, c] : r.rhs.terms()) {
            if (w.size() != 2) continue;           // deformation tails carry r, xi
            accumulate(w, -limit_of(c));
        }
        for (const auto& [w, v] : image)
            if (std::abs(v) > tol) return false;
    }
    return true;
}

bool verify_classical_limit_relations(const std::vector<RawRelation>& rels) {
    const Rational q1(9999999999999999LL, 10000000000000000LL);
    const double tol = 1e-6;
    // The deformation parameters (r, xi, ...) all vanish in the limit.
    auto limit_of = [&](const Scalar& c) -> double {
        std::map<std::string, Real> bindings;
        for (const auto& t : c.terms()) {
            for (const auto& [id, e] : t.par.even()) bindings[Symbols::name(id)] = 0;
            for (int id : t.par.odd()) bindings[Symbols::name(id)] = 0;
        }
        return static_cast<double>(c.eval_numeric(q1, bindings, 50));
    };
    for (const auto& rel : rels) {
        const auto& gens = *rel.rel.gens();
        std::map<std::vector<int>, double> image;
        for (const auto& [w, c] : rel.rel.terms()) {
            double v = limit_of(c);
            std::vector<int> sorted = w;
            // Bubble sort, tracking the Koszul sign of each transposition.
            for (size_t a = 0; a + 1 < sorted.size(); ++a)
                for (size_t b = 0; b + 1 < sorted.size() - a; ++b)
                    if (sorted[b] > sorted[b + 1]) {
                        if (gens.parity(sorted[b]) && gens.parity(sorted[b + 1])) v = -v;
                        std::swap(sorted[b], sorted[b + 1]);
                    }
            bool odd_square = false;
            for (size_t a = 0; a + 1 < sorted.size(); ++a)
                if (sorted[a] == sorted[a + 1] && gens.parity(sorted[a])) odd_square = true;
            if (!odd_square) image[sorted] += v;
        }
        for (const auto& [w, v] : image)
            if (std::abs(v) > tol) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Scalar
// ---------------------------------------------------------------------------

namespace {

Scalar coeff_of(const FreeGradedPoly& p, const std::vector<int>& w) {
    auto it = p.terms().find(w);
    return it == p.terms().end() ? Scalar(0) : it->second;
}

// Gauss-Jordan orientation: solves the given relations for the unknown
// two-letter words, producing one rewrite rule per solvable unknown plus the
// residual rows that vanish when the relation set is coherent.
struct OrientResult {
    std::vector<PresRule> rules;
    std::vector<FreeGradedPoly> residuals;
};

OrientResult orient_rules(std::shared_ptr<const GeneratorSet> gens,
                          std::vector<FreeGradedPoly> rows,
                          const std::vector<std::pair<int, int>>& unknowns) {
    std::vector<std::pair<int, int>> pivots;   // (row, unknown index)
    std::set<int> used_unknowns, used_rows;

    for (size_t row = 0; row < rows.size(); ++row) {
        int piv = -1;
        Scalar pivc;
        for (size_t u = 0; u < unknowns.size(); ++u) {
            if (used_unknowns.count(static_cast<int>(u))) continue;
            Scalar c = coeff_of(rows[row], {unknowns[u].first, unknowns[u].second});
            if (c.is_zero()) continue;
            try {
                pivc = c.inverse();
            } catch (...) {
                continue;
            }
            piv = static_cast<int>(u);
            break;
        }
        if (piv < 0) continue;
        rows[row] = rows[row].scalar_left(pivc);
        for (size_t other = 0; other < rows.size(); ++other) {
            if (other == row) continue;
            Scalar c = coeff_of(rows[other], {unknowns[piv].first, unknowns[piv].second});
            if (c.is_zero()) continue;
            rows[other] -= rows[row].scalar_left(c);
        }
        pivots.emplace_back(static_cast<int>(row), piv);
        used_unknowns.insert(piv);
        used_rows.insert(static_cast<int>(row));
    }

    OrientResult out;
    for (const auto& [row, u] : pivots) {
        FreeGradedPoly rhs =
            FreeGradedPoly::word(gens, {unknowns[u].first, unknowns[u].second}) - rows[row];
        out.rules.push_back({unknowns[u].first, unknowns[u].second, rhs});
    }
    for (size_t row = 0; row < rows.size(); ++row)
        if (!used_rows.count(static_cast<int>(row)) && !rows[row].is_zero())
            out.residuals.push_back(rows[row]);
    return out;
}

} // namespace

std::optional<std::vector<Scalar>> express_in_span(
    const FreeGradedPoly& target, const std::vector<FreeGradedPoly>& relations) {
    // Rows carry their expansion in the original relations.
    struct Row {
        FreeGradedPoly poly;
        std::vector<Scalar> combo;
    };
    std::vector<Row> rows;
    for (size_t i = 0; i < relations.size(); ++i) {
        std::vector<Scalar> combo(relations.size(), Scalar(0));
        combo[i] = Scalar(1);
        rows.push_back({relations[i], std::move(combo)});
    }

    std::vector<std::vector<int>> pivot_words;
    std::vector<size_t> pivot_rows;
    for (size_t row = 0; row < rows.size(); ++row) {
        // Prefer single-term pivots, fall back to any invertible coefficient.
        const std::vector<int>* pw = nullptr;
        Scalar pinv;
        for (int pass = 0; pass < 2 && pw == nullptr; ++pass)
            for (const auto& [w, c] : rows[row].poly.terms()) {
                if (pass == 0 && c.terms().size() != 1) continue;
                bool taken = false;
                for (const auto& seen : pivot_words)
                    if (seen == w) { taken = true; break; }
                if (taken) continue;
                try {
                    pinv = c.inverse();
                } catch (...) {
                    continue;
                }
                pw = &rows[row].poly.terms().find(w)->first;
                break;
            }
        if (pw == nullptr) continue;
        std::vector<int> w = *pw;
        rows[row].poly = rows[row].poly.scalar_left(pinv);
        for (auto& c : rows[row].combo) c = pinv * c;
        for (size_t other = 0; other < rows.size(); ++other) {
            if (other == row) continue;
            Scalar c = coeff_of(rows[other].poly, w);
            if (c.is_zero()) continue;
            rows[other].poly -= rows[row].poly.scalar_left(c);
            for (size_t k = 0; k < rows[other].combo.size(); ++k)
                rows[other].combo[k] -= c * rows[row].combo[k];
        }
        pivot_words.push_back(w);
        pivot_rows.push_back(row);
    }

    FreeGradedPoly rem = target;
    std::vector<Scalar> coeffs(relations.size(), Scalar(0));
    for (size_t p = 0; p < pivot_words.size(); ++p) {
        Scalar c = coeff_of(rem, pivot_words[p]);
        if (c.is_zero()) continue;
        rem -= rows[pivot_rows[p]].poly.scalar_left(c);
        for (size_t k = 0; k < coeffs.size(); ++k)
            coeffs[k] += c * rows[pivot_rows[p]].combo[k];
    }
    if (!rem.is_zero()) return std::nullopt;

    // Defensive recomputation of the certificate.
    FreeGradedPoly check = target;
    for (size_t k = 0; k < relations.size(); ++k)
        check -= relations[k].scalar_left(coeffs[k]);
    if (!check.is_zero()) return std::nullopt;
    return coeffs;
}

// ---------------------------------------------------------------------------
// The concrete algebras
// ---------------------------------------------------------------------------

Presentation superspace0(const Scalar& r, const Scalar& xi) {
    auto gens = covariant_generators(1, 0);
    std::vector<FreeGradedPoly> rels;
    rels.push_back(composite_relation(1, 0, 0, 0));
    for (int M = 1; M >= -1; --M) rels.push_back(composite_relation(1, 0, 1, M));
    auto oriented = orient_rules(gens, rels, {{0, 1}, {1, 2}, {0, 2}, {1, 1}});
    if (oriented.rules.size() != 4 || !oriented.residuals.empty())
        throw std::logic_error("superspace0: unexpected relation rank");

    Presentation pres;
    pres.name = "superspace0";
    pres.gens = gens;
    pres.parameters = {{"r", 0}, {"xi_odd", 1}};
    pres.rules = std::move(oriented.rules);
    for (auto& rule : pres.rules) {
        rule.rhs = poly_substitute(rule.rhs, sym::r(), r);
        rule.rhs = poly_substitute(rule.rhs, sym::xi_odd(), xi);
    }
    PresConstant radius{"radius",
                        composite_relation(1, 0, 0, 0) +
                            FreeGradedPoly::constant(gens, Scalar::parameter(sym::r())),
                        r};
    pres.constants.push_back(std::move(radius));
    return pres;
}

Presentation superspace1(Superspace1Kind kind, const Scalar& r) {
    auto gens = covariant_generators(1, 1);
    std::vector<FreeGradedPoly> rels;
    for (int M = 2; M >= -2; --M) rels.push_back(composite_relation(1, 1, 2, M));
    std::vector<std::pair<int, int>> unknowns = {{0, 0}, {2, 2}, {0, 1}, {1, 2}, {0, 2}};
    if (kind == Superspace1Kind::with_radius) {
        rels.push_back(composite_relation(1, 1, 0, 0));
        unknowns.push_back({1, 1});
    }
    auto oriented = orient_rules(gens, rels, unknowns);
    if (oriented.rules.size() != unknowns.size() || !oriented.residuals.empty())
        throw std::logic_error("superspace1: unexpected relation rank");

    Presentation pres;
    pres.name = (kind == Superspace1Kind::with_radius) ? "superspace1_with_radius"
                                                       : "superspace1_L2";
    pres.gens = gens;
    pres.rules = std::move(oriented.rules);
    if (kind == Superspace1Kind::with_radius) {
        pres.parameters = {{"r", 0}};
        for (auto& rule : pres.rules) rule.rhs = poly_substitute(rule.rhs, sym::r(), r);
        PresConstant radius{"radius",
                            composite_relation(1, 1, 0, 0) +
                                FreeGradedPoly::constant(gens, Scalar::parameter(sym::r())),
                            r};
        pres.constants.push_back(std::move(radius));
    }
    return pres;
}

Scalar sphere_constant(const std::string& name) {
    static const std::map<std::string, std::string> defs = {
        {"kappa1", "sqrt([4]/(q*[2]))"},
        {"kappa2", "sqrt(q^-1*[3])"},
        {"kappa3", "sqrt([4]/(q*[2]))*sqrt(q^-1*[3])"},
        {"mu11", "q + q^-1*[2]/[4]"},
        {"mu12", "q^-1 + q*[2]/[4]"},
        {"mu21", "([2]/[4])*(q^-2 + q^(3/2)*[2])"},
        {"mu22", "([2]/[4])*(q^2 - q^(-3/2)*[2])"},
        {"mu23", "([2]*[2]/[4])*([8]/[4] + 2*[4]/[2] + 1)"},
        {"mu31", "-(sqrt([4]!)/([2]*[2]))*omega"},
        {"mu32", "sqrt([4]/[3]!)*(q^2 + q^(-1/2)*[2])"},
        {"mu33", "sqrt([4]/[3]!)*(q^-2 - q^(1/2)*[2])"},
        {"F1", "varpi*(q^2 + q + 1 + q^-1 + q^-2)*[2]*[2]/[4]"},
        {"F2", "varpi*(q^2 + 2*q + 2*q^-1 + q^-2)*([3]!*[2]/([6]*[4]))*xi"},
    };
    auto it = defs.find(name);
    if (it == defs.end()) throw std::invalid_argument("sphere_constant: unknown name " + name);
    return parse_scalar_expr(it->second);
}

namespace {

// The printed final supersphere relations (lhs - rhs), in display order:
// twelve commutation relations followed by the three constraints.
std::vector<std::pair<std::string, std::string>> final_sphere_relation_texts() {
    const std::string MU11 = "(q + q^-1*[2]/[4])";
    const std::string MU12 = "(q^-1 + q*[2]/[4])";
    const std::string MU31 = "(-(sqrt([4]!)/([2]*[2]))*omega)";
    const std::string F1 = "(varpi*(q^2 + q + 1 + q^-1 + q^-2)*[2]*[2]/[4])";
    const std::string F2 = "(varpi*(q^2 + 2*q + 2*q^-1 + q^-2)*([3]!*[2]/([6]*[4]))*xi)";
    const std::string RT = "sqrt([3]!/[4])";
    return {
        {"comm Y2Y1", "Y2*Y1 - q^2*Y1*Y2"},
        {"comm Ym1Ym2", "Ym1*Ym2 - q^2*Ym2*Ym1"},
        {"comm Y2Y0", "q^-2*Y2*Y0 - q^2*Y0*Y2 - varpi*([4]*[3]/[6])*xi*Y2"},
        {"comm Y0Ym2", "q^-2*Y0*Ym2 - q^2*Ym2*Y0 - varpi*([4]*[3]/[6])*xi*Ym2"},
        {"comm Y2Ym1", "q^-3*Y2*Ym1 - q^3*Ym1*Y2 - varpi*([3]*sqrt([4]!)/[6])*xi*Y1"},
        {"comm Y1Ym2", "q^-3*Y1*Ym2 - q^3*Ym2*Y1 - varpi*([3]*sqrt([4]!)/[6])*xi*Ym1"},
        {"comm Y1Y0", "q^-1*Y1*Y0 - q*Y0*Y1 - varpi*([3]!/[6])*xi*Y1"},
        {"comm Y0Ym1", "q^-1*Y0*Ym1 - q*Ym1*Y0 - varpi*([3]!/[6])*xi*Ym1"},
        {"comm Y2Ym2", "q^-1*" + MU11 + "*Y2*Ym2 - q*" + MU12 + "*Ym2*Y2 + " + F1 +
                           "*Y0*Y0 - " + F2 + "*Y0"},
        {"comm Y1Ym1", "q^(-1/2)*Y1*Ym1 + q^(1/2)*Ym1*Y1 - omega*Y0*Y0 "
                       "- (varpi/(q + 1 + q^-1))*xi*Y0"},
        {"square Y1", "Y1*Y1 - (1/" + MU31 + ")*(Y2*Y0 - Y0*Y2)"},
        {"square Ym1", "Ym1*Ym1 - (1/" + MU31 + ")*(Y0*Ym2 - Ym2*Y0)"},
        {"constraint Y2Ym1", "Y2*Ym1 - (q^2/[3])*" + RT + "*Y1*Y0 - q^(1/2)*([2]/[6])*" +
                                 RT + "*xi*Y1"},
        {"constraint Y1Ym2", "Y1*Ym2 - (q^2/[3])*" + RT + "*Y0*Ym1 - q^(1/2)*([2]/[6])*" +
                                 RT + "*xi*Ym1"},
        {"constraint Y0^2", "Y0*Y0 - q^-1*([4]/[2])*Y2*Ym2 + q^(-1/2)*(q + q^-1)*" + MU12 +
                                "*Y1*Ym1 + q^(-3/2)*([3]!/[6])*xi*Y0"},
    };
}

const std::vector<std::pair<int, int>>& sphere_unknowns() {
    // All ascending pairs and the three reducible squares, plus the three
    // descending words forced by the constraints and the radius relation:
    // each quadratic constraint, combined with the matching commutation
    // relation, reduces one more descending word, and the radius relation
    // reduces Ym2*Y2.
    static const std::vector<std::pair<int, int>> u = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
        {2, 3}, {2, 4}, {3, 4}, {1, 1}, {3, 3}, {2, 2},
        {3, 0}, {4, 1}, {4, 0}};
    return u;
}

// Resolve the overlaps the quadratic rules leave open: whenever the two
// reduction paths of a diamond meet in distinct normal forms, their
// difference is a consequence of the relations; orient it toward the most
// "spread" normal word (the one furthest from the middle generator, matching
// the quadratic orientation) and add it as a completion rule.
void complete_overlaps(Presentation& pres) {
    const int n = pres.gens->size();
    const double center = (n - 1) / 2.0;
    for (int round = 0; round < 8; ++round) {
        FreeGradedPoly diff(pres.gens);
        bool found = false;
        for (int i = 0; i < n && !found; ++i)
            for (int j = 0; j < n && !found; ++j) {
                const FreeGradedPoly* rij = pres.rule_for(i, j);
                if (rij == nullptr) continue;
                for (int k = 0; k < n && !found; ++k) {
                    const FreeGradedPoly* rjk = pres.rule_for(j, k);
                    if (rjk == nullptr) continue;
                    FreeGradedPoly d =
                        pres.normal_form(*rij * FreeGradedPoly::word(pres.gens, {k})) -
                        pres.normal_form(FreeGradedPoly::word(pres.gens, {i}) * *rjk);
                    if (!d.is_zero()) {
                        diff = d;
                        found = true;
                    }
                }
            }
        if (!found) return;
        const std::vector<int>* lhs = nullptr;
        Scalar lc;
        auto spread = [&](const std::vector<int>& w) {
            double s = 0;
            for (int g : w) s += std::abs(g - center);
            return s;
        };
        for (const auto& [w, c] : diff.terms()) {
            if (lhs != nullptr &&
                (w.size() < lhs->size() ||
                 (w.size() == lhs->size() && spread(w) < spread(*lhs)) ||
                 (w.size() == lhs->size() && spread(w) == spread(*lhs) && w < *lhs)))
                continue;
            try {
                Scalar inv = c.inverse();
                lhs = &w;
                lc = inv;
            } catch (...) {
            }
        }
        if (lhs == nullptr) throw std::logic_error("completion: no orientable term");
        std::vector<int> lhs_word = *lhs;
        FreeGradedPoly rhs =
            FreeGradedPoly::word(pres.gens, lhs_word) - diff.scalar_left(lc);
        pres.word_rules.push_back({std::move(lhs_word), std::move(rhs)});
    }
    throw std::logic_error("completion did not converge");
}

} // namespace

std::vector<RawRelation> final_sphere_relations() {
    auto gens = covariant_generators(2, 0);
    std::vector<RawRelation> out;
    for (const auto& [id, text] : final_sphere_relation_texts())
        out.push_back({id, parse_free_poly(text, gens)});
    return out;
}

Presentation supersphere(const std::optional<Scalar>& r, const Scalar& xi) {
    // Consistency of the printed relation set ties the radius to xi; the
    // default honours that (the explicit-r overload lets tests exhibit the
    // failure for an unrelated radius).
    const Scalar r_eff =
        r ? *r : parse_scalar_expr("[3]!*[3]!/([6]*[6])") * xi * xi;
    auto gens = covariant_generators(2, 0);
    std::vector<FreeGradedPoly> rels;
    for (const auto& [id, text] : final_sphere_relation_texts())
        rels.push_back(parse_free_poly(text, gens));
    rels.push_back(composite_relation(2, 0, 0, 0));   // the radius relation
    auto oriented = orient_rules(gens, rels, sphere_unknowns());
    if (oriented.rules.size() != sphere_unknowns().size())
        throw std::logic_error("supersphere: unexpected relation rank");
    for (const auto& res : oriented.residuals)
        if (!res.is_zero())
            throw std::logic_error("supersphere: printed relations are not coherent: " +
                                   res.to_string());

    Presentation pres;
    pres.name = "supersphere";
    pres.gens = gens;
    pres.parameters = {{"r", 0}, {"xi", 0}};
    pres.rules = std::move(oriented.rules);
    for (auto& rule : pres.rules) {
        rule.rhs = poly_substitute(rule.rhs, sym::xi(), xi);
        rule.rhs = poly_substitute(rule.rhs, sym::r(), r_eff);
    }
    complete_overlaps(pres);
    PresConstant radius{"radius",
                        composite_relation(2, 0, 0, 0) +
                            FreeGradedPoly::constant(gens, Scalar::parameter(sym::r())),
                        r_eff};
    pres.constants.push_back(std::move(radius));
    return pres;
}

Presentation sphere_raw_presentation() {
    auto gens = covariant_generators(2, 0);
    std::vector<FreeGradedPoly> rels;
    for (int L : {2, 3})
        for (const auto& raw : raw_sphere_relations(L)) rels.push_back(raw.rel);
    // Without the L = 1 constraints only the twelve L in {2,3} relations are
    // available; solve them for the twelve reorderable words (leaving Y0^2
    // untouched) and let the consistency check exhibit the failure.
    std::vector<std::pair<int, int>> unknowns = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
        {2, 3}, {2, 4}, {3, 4}, {1, 1}, {3, 3}};
    auto oriented = orient_rules(gens, rels, unknowns);

    Presentation pres;
    pres.name = "sphere_raw_L23";
    pres.gens = gens;
    pres.parameters = {{"xi", 0}};
    pres.rules = std::move(oriented.rules);
    pres.step_bound = 20000;
    return pres;
}

std::vector<RawRelation> raw_sphere_relations(int L) {
    if (L < 1 || L > 3) throw std::domain_error("raw_sphere_relations: L must be 1, 2 or 3");
    std::vector<RawRelation> out;
    for (int M = L; M >= -L; --M)
        out.push_back({"L" + std::to_string(L) + ":M=" + std::to_string(M),
                       composite_relation(2, 0, L, M)});
    return out;
}

LinearCombinationReport verify_linear_combination_report() {
    auto gens = covariant_generators(2, 0);
    std::vector<FreeGradedPoly> raws;
    for (int L : {1, 2, 3})
        for (const auto& raw : raw_sphere_relations(L)) raws.push_back(raw.rel);

    LinearCombinationReport rep;
    for (const auto& [id, text] : final_sphere_relation_texts()) {
        FreeGradedPoly target = parse_free_poly(text, gens);
        auto combo = express_in_span(target, raws);
        rep.records.push_back({id, combo.has_value(),
                               combo ? *combo : std::vector<Scalar>{}});
    }
    return rep;
}

bool LinearCombinationReport::all_found() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CombinationRecord& r) { return r.found; });
}

std::string LinearCombinationReport::to_string() const {
    std::ostringstream out;
    for (const auto& r : records) {
        out << (r.found ? "ok   " : "FAIL ") << r.target;
        if (r.found) {
            out << " =";
            for (size_t k = 0; k < r.coefficients.size(); ++k)
                if (!r.coefficients[k].is_zero())
                    out << " + (" << r.coefficients[k].to_string() << ")*R" << k;
        }
        out << "\n";
    }
    return out.str();
}

bool verify_linear_combination() { return verify_linear_combination_report().all_found(); }

} // namespace ospq
