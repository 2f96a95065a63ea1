#include "ospq/afun.hpp"

#include "ospq/expr.hpp"
#include "ospq/free_poly.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

const std::array<std::string, 6> kNames = {"a", "alpha", "b", "c", "delta", "d"};
const std::array<int, 6> kParities = {0, 1, 0, 0, 1, 0};

Scalar q_pow(int k) { return Scalar::q_power(k); }
Scalar s_pow(int k) { return Scalar::s_power(k); }

int scalar_parity(const Scalar& c) {
    if (c.is_zero() || !c.has_parameters()) return 0;
    return c.parity();
}

} // namespace

int agen_parity(AGen g) { return kParities[static_cast<int>(g)]; }
const std::string& agen_name(AGen g) { return kNames[static_cast<int>(g)]; }

int AMonomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

std::vector<AGen> AMonomial::letters() const {
    std::vector<AGen> out;
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < e[i]; ++k) out.push_back(static_cast<AGen>(i));
    return out;
}

std::string AMonomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << kNames[i];
        if (e[i] > 1) out << "^" << e[i];
    }
    return first ? "1" : out.str();
}

NCPoly::NCPoly(Scalar constant) {
    if (!constant.is_zero()) terms_.emplace(AMonomial{}, std::move(constant));
}

NCPoly NCPoly::gen(AGen g) {
    AMonomial m;
    m.e[static_cast<int>(g)] = 1;
    return mono(m);
}

NCPoly NCPoly::mono(AMonomial m, Scalar coeff) {
    NCPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool NCPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second.is_one();
}

Scalar NCPoly::coeff(const AMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

int NCPoly::parity() const {
    int p = -1;
    for (const auto& [m, c] : terms_) {
        int mp = (m.parity() + scalar_parity(c)) % 2;
        if (p < 0) p = mp;
        else if (p != mp) throw std::domain_error("NCPoly: mixed parity");
    }
    return p < 0 ? 0 : p;
}

void NCPoly::add_term(const AMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator*(const Scalar& c) const {
    NCPoly r;
    for (const auto& [m, c1] : terms_) r.add_term(m, c1 * c);
    return r;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (!m.is_unit()) out << "*" << m.to_string();
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Rewrite engine
// ---------------------------------------------------------------------------

namespace {

NCPoly mono_times_gen(const AMonomial& M, AGen g, bool det);

NCPoly poly_times_gen(const NCPoly& p, AGen g, bool det) {
    NCPoly out;
    for (const auto& [m, c] : p.terms()) {
        NCPoly piece = mono_times_gen(m, g, det);
        for (const auto& [pm, pc] : piece.terms()) out.add_term(pm, c * pc);
    }
    return out;
}

NCPoly poly_times_letters(const NCPoly& p, const std::vector<AGen>& ls, bool det) {
    NCPoly acc = p;
    for (AGen g : ls) acc = poly_times_gen(acc, g, det);
    return acc;
}

// Rule table, LHS = x*y with x after y in the canonical order (or an odd
// square, or the superdeterminant pair a*d).
std::vector<ARule> build_rules() {
    using G = AGen;
    const Scalar q = q_pow(1), qi = q_pow(-1), qi2 = q_pow(-2);
    const Scalar om = omega_const(), lam = lambda_R(), rho = rho_R();
    auto w = [](std::initializer_list<G> gs, Scalar c) {
        AMonomial m;
        for (G g : gs) m.e[static_cast<int>(g)] += 1;
        return NCPoly::mono(m, std::move(c));
    };
    std::vector<ARule> rules;
    auto add = [&](G x, G y, NCPoly rhs, bool det_only = false) {
        rules.push_back({x, y, std::move(rhs), det_only});
    };
    add(G::alpha, G::a, w({G::a, G::alpha}, qi));
    add(G::b, G::a, w({G::a, G::b}, qi2));
    add(G::c, G::a, w({G::a, G::c}, qi2));
    add(G::delta, G::a, w({G::a, G::delta}, qi) - w({G::alpha, G::c}, qi * om));
    add(G::d, G::a, w({G::a, G::d}, Scalar(1)) + w({G::alpha, G::delta}, lam) -
                        w({G::b, G::c}, rho));
    add(G::b, G::alpha, w({G::alpha, G::b}, qi));
    add(G::c, G::alpha, w({G::alpha, G::c}, qi));
    add(G::delta, G::alpha,
        w({G::alpha, G::delta}, -qi) - w({G::b, G::c}, lam));
    add(G::d, G::alpha, w({G::alpha, G::d}, qi) - w({G::b, G::delta}, qi * om));
    add(G::c, G::b, w({G::b, G::c}, Scalar(1)));
    add(G::delta, G::b, w({G::b, G::delta}, qi));
    add(G::d, G::b, w({G::b, G::d}, qi2));
    add(G::delta, G::c, w({G::c, G::delta}, qi));
    add(G::d, G::c, w({G::c, G::d}, qi2));
    add(G::d, G::delta, w({G::delta, G::d}, qi));
    add(G::alpha, G::alpha, w({G::a, G::b}, -qi * kulish(2)));
    add(G::delta, G::delta, w({G::c, G::d}, -qi * kulish(2)));
    add(G::a, G::d,
        NCPoly(Scalar(1)) + w({G::b, G::c}, q) + w({G::alpha, G::delta}, s_pow(1)),
        /*det_only=*/true);
    return rules;
}

const ARule* find_rule(AGen x, AGen y, bool det) {
    for (const ARule& r : afun_rules()) {
        if (r.x == x && r.y == y && (det || !r.det_only)) return &r;
    }
    return nullptr;
}

// Eliminates a mixed a...d monomial using the superdeterminant rule: one a is
// walked rightward through the middle block (picking up the a*delta
// correction) until it meets the d block, where a*d expands.
NCPoly det_reduce(const AMonomial& M) {
    const int k = M.e[0], m = M.e[5];
    if (k == 0 || m == 0) return NCPoly::mono(M);
    struct Item {
        Scalar coeff;
        std::vector<AGen> word;
        bool pending;   // the walking a is still to the right of `word`
    };
    std::vector<Item> items{{Scalar(1), {}, true}};
    std::vector<AGen> middle;
    for (int i = 1; i <= 4; ++i)
        for (int n = 0; n < M.e[i]; ++n) middle.push_back(static_cast<AGen>(i));
    const Scalar q = q_pow(1), q2 = q_pow(2), om = omega_const();
    for (AGen l : middle) {
        std::vector<Item> next;
        for (Item& it : items) {
            if (!it.pending) {
                it.word.push_back(l);
                next.push_back(std::move(it));
                continue;
            }
            if (l == AGen::delta) {
                Item main = it;
                main.coeff *= q;
                main.word.push_back(AGen::delta);
                next.push_back(std::move(main));
                Item corr = std::move(it);
                corr.coeff *= q * om;
                corr.word.push_back(AGen::c);
                corr.word.push_back(AGen::alpha);
                corr.pending = false;
                next.push_back(std::move(corr));
            } else {
                it.coeff *= (l == AGen::alpha) ? q : q2;
                it.word.push_back(l);
                next.push_back(std::move(it));
            }
        }
        items = std::move(next);
    }
    NCPoly out;
    auto emit = [&](const Scalar& c, std::vector<AGen> word) {
        std::vector<AGen> full(static_cast<size_t>(k - 1), AGen::a);
        full.insert(full.end(), word.begin(), word.end());
        NCPoly piece = nf_word(full, true);
        out += piece * c;
    };
    const ARule* ad = find_rule(AGen::a, AGen::d, true);
    for (Item& it : items) {
        if (it.pending) {
            // a has reached the d block: substitute the a*d expansion.
            for (const auto& [rm, rc] : ad->rhs.terms()) {
                std::vector<AGen> word = it.word;
                for (AGen g : rm.letters()) word.push_back(g);
                for (int n = 0; n < m - 1; ++n) word.push_back(AGen::d);
                emit(it.coeff * rc, std::move(word));
            }
        } else {
            std::vector<AGen> word = std::move(it.word);
            for (int n = 0; n < m; ++n) word.push_back(AGen::d);
            emit(it.coeff, std::move(word));
        }
    }
    return out;
}

NCPoly mono_times_gen(const AMonomial& M, AGen g, bool det) {
    const int gi = static_cast<int>(g);
    int hi = -1;
    for (int i = 5; i >= 0; --i)
        if (M.e[i] > 0) { hi = i; break; }
    if (hi > gi || (hi == gi && (g == AGen::alpha || g == AGen::delta))) {
        // apply the swap or square rule on the trailing letter
        const ARule* r = find_rule(static_cast<AGen>(hi), g, det);
        if (!r) {   // only possible for the (d, a) pair when... never: rule exists
            throw std::logic_error("afun: missing rewrite rule");
        }
        AMonomial M2 = M;
        M2.e[hi] -= 1;
        NCPoly prefix = NCPoly::mono(M2);
        NCPoly out;
        for (const auto& [rm, rc] : r->rhs.terms()) {
            NCPoly piece = poly_times_letters(prefix, rm.letters(), det);
            out += piece * rc;
        }
        return out;
    }
    AMonomial M2 = M;
    M2.e[gi] += 1;
    if (det && M2.e[0] > 0 && M2.e[5] > 0) return det_reduce(M2);
    return NCPoly::mono(M2);
}

} // namespace

const std::vector<ARule>& afun_rules() {
    static const std::vector<ARule> rules = build_rules();
    return rules;
}

NCPoly nf_word(const std::vector<AGen>& word, bool use_det) {
    NCPoly acc(Scalar(1));
    for (AGen g : word) acc = poly_times_gen(acc, g, use_det);
    return acc;
}

NCPoly mul(const NCPoly& x, const NCPoly& y, bool use_det) {
    NCPoly out;
    for (const auto& [m1, c1] : x.terms()) {
        NCPoly base = NCPoly::mono(m1);
        for (const auto& [m2, c2] : y.terms()) {
            Scalar c = c1 * c2;
            if ((scalar_parity(c2) & 1) && (m1.parity() & 1)) c = -c;
            NCPoly piece = poly_times_letters(base, m2.letters(), use_det);
            for (const auto& [pm, pc] : piece.terms()) out.add_term(pm, c * pc);
        }
    }
    return out;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) { return mul(x, y, true); }

bool verify_termination_order() {
    // Weighted word order: compare total letter weight, then length, then the
    // lexicographic order on letters.  The weights make every rule (including
    // the superdeterminant expansion and the odd-square rules) strictly
    // decreasing, and both the weight and the length are additive under
    // context, so the order certifies termination of the full rewrite system.
    auto weight = [](AGen g) {
        switch (g) {
            case AGen::a: case AGen::d: return 7;
            case AGen::alpha: case AGen::delta: return 6;
            default: return 4;   // b, c
        }
    };
    auto less = [&](const std::vector<AGen>& u, const std::vector<AGen>& v) {
        int wu = 0, wv = 0;
        for (AGen g : u) wu += weight(g);
        for (AGen g : v) wv += weight(g);
        if (wu != wv) return wu < wv;
        if (u.size() != v.size()) return u.size() < v.size();
        for (size_t i = 0; i < u.size(); ++i)
            if (u[i] != v[i]) return static_cast<int>(u[i]) < static_cast<int>(v[i]);
        return false;
    };
    for (const ARule& r : afun_rules()) {
        std::vector<AGen> lhs{r.x, r.y};
        for (const auto& [m, c] : r.rhs.terms()) {
            if (!less(m.letters(), lhs)) return false;
        }
    }
    return true;
}

bool verify_local_confluence() {
    for (bool det : {false, true}) {
        for (const ARule& r1 : afun_rules()) {
            if (r1.det_only && !det) continue;
            for (const ARule& r2 : afun_rules()) {
                if (r2.det_only && !det) continue;
                if (r1.y != r2.x) continue;
                // overlap word x y z with rules on (x,y) and (y,z)
                AGen x = r1.x, z = r2.y;
                NCPoly path1, path2;
                for (const auto& [m, c] : r1.rhs.terms()) {
                    std::vector<AGen> w = m.letters();
                    w.push_back(z);
                    path1 += nf_word(w, det) * c;
                }
                for (const auto& [m, c] : r2.rhs.terms()) {
                    std::vector<AGen> w{x};
                    for (AGen g : m.letters()) w.push_back(g);
                    path2 += nf_word(w, det) * c;
                }
                if (!(path1 == path2)) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Tensor square
// ---------------------------------------------------------------------------

TensorPoly TensorPoly::simple(const NCPoly& left, const NCPoly& right, bool) {
    TensorPoly t;
    for (const auto& [lm, lc] : left.terms())
        for (const auto& [rm, rc] : right.terms()) t.add_term(lm, rm, lc * rc);
    return t;
}

void TensorPoly::add_term(const AMonomial& l, const AMonomial& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    TensorPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    TensorPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

TensorPoly TensorPoly::operator*(const Scalar& c) const {
    TensorPoly r;
    for (const auto& [k, c1] : terms_) r.add_term(k.first, k.second, c1 * c);
    return r;
}

std::string TensorPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")*(" << k.first.to_string() << " (x) "
            << k.second.to_string() << ")";
    }
    return out.str();
}

TensorPoly mul(const TensorPoly& x, const TensorPoly& y, bool use_det) {
    TensorPoly out;
    for (const auto& [k1, c1] : x.terms()) {
        for (const auto& [k2, c2] : y.terms()) {
            Scalar c = c1 * c2;
            if ((k1.second.parity() & 1) && (k2.first.parity() & 1)) c = -c;
            NCPoly l = mul(NCPoly::mono(k1.first), NCPoly::mono(k2.first), use_det);
            NCPoly r = mul(NCPoly::mono(k1.second), NCPoly::mono(k2.second), use_det);
            for (const auto& [lm, lc] : l.terms())
                for (const auto& [rm, rc] : r.terms())
                    out.add_term(lm, rm, c * lc * rc);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Derived entries and Hopf maps
// ---------------------------------------------------------------------------

namespace {

NCPoly gen_word(std::initializer_list<AGen> gs, Scalar c) {
    std::vector<AGen> w(gs);
    return nf_word(w, true) * c;
}

} // namespace

NCPoly e_poly() {
    using G = AGen;
    return NCPoly(Scalar(1)) - gen_word({G::alpha, G::delta}, s_pow(-1)) +
           gen_word({G::b, G::c}, q_pow(1) - Scalar(1));
}

NCPoly beta_poly() {
    using G = AGen;
    return gen_word({G::b, G::delta}, s_pow(-3)) - gen_word({G::d, G::alpha}, s_pow(1));
}

NCPoly gamma_poly() {
    using G = AGen;
    return gen_word({G::a, G::delta}, s_pow(-1)) - gen_word({G::c, G::alpha}, s_pow(3));
}

NCPoly sdet_poly() {
    using G = AGen;
    AMonomial ad;
    ad.e[0] = ad.e[5] = 1;
    return NCPoly::mono(ad) - gen_word({G::b, G::c}, q_pow(1)) -
           gen_word({G::alpha, G::delta}, s_pow(1));
}

namespace {

// Delta on the six generators, from Delta(T) = T (.x) T with the middle
// row/column entries e, beta, gamma substituted by their polynomials.
const std::array<TensorPoly, 6>& coproduct_table() {
    static const std::array<TensorPoly, 6> table = [] {
        using G = AGen;
        auto P = [](AGen g) { return NCPoly::gen(g); };
        NCPoly e = e_poly(), be = beta_poly(), ga = gamma_poly();
        std::array<TensorPoly, 6> t;
        auto S = [](const NCPoly& l, const NCPoly& r) { return TensorPoly::simple(l, r); };
        t[0] = S(P(G::a), P(G::a)) + S(P(G::alpha), ga) + S(P(G::b), P(G::c));
        t[1] = S(P(G::a), P(G::alpha)) + S(P(G::alpha), e) + S(P(G::b), P(G::delta));
        t[2] = S(P(G::a), P(G::b)) + S(P(G::alpha), be) + S(P(G::b), P(G::d));
        t[3] = S(P(G::c), P(G::a)) + S(P(G::delta), ga) + S(P(G::d), P(G::c));
        t[4] = S(P(G::c), P(G::alpha)) + S(P(G::delta), e) + S(P(G::d), P(G::delta));
        t[5] = S(P(G::c), P(G::b)) + S(P(G::delta), be) + S(P(G::d), P(G::d));
        return t;
    }();
    return table;
}

TensorPoly coproduct_word(const std::vector<AGen>& word, bool det) {
    TensorPoly acc = TensorPoly::simple(NCPoly(Scalar(1)), NCPoly(Scalar(1)));
    for (AGen g : word) acc = mul(acc, coproduct_table()[static_cast<int>(g)], det);
    return acc;
}

// Antipode on the six generators, from the printed S(T) matrix.
const std::array<NCPoly, 6>& antipode_table() {
    static const std::array<NCPoly, 6> table = [] {
        using G = AGen;
        std::array<NCPoly, 6> t;
        t[0] = NCPoly::gen(G::d);
        t[1] = beta_poly() * s_pow(-1);
        t[2] = NCPoly::gen(G::b) * (-q_pow(-1));
        t[3] = NCPoly::gen(G::c) * (-q_pow(1));
        t[4] = gamma_poly() * (-s_pow(1));
        t[5] = NCPoly::gen(G::a);
        return t;
    }();
    return table;
}

NCPoly antipode_word(const std::vector<AGen>& word, bool det) {
    // S(x1...xn) = (-1)^(sum_{i<j} parity(xi) parity(xj)) S(xn)...S(x1)
    int odd = 0;
    for (AGen g : word) odd += agen_parity(g);
    int sign_exp = odd * (odd - 1) / 2;
    NCPoly acc(Scalar(1));
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = mul(acc, antipode_table()[static_cast<int>(*it)], det);
    return (sign_exp % 2) ? -acc : acc;
}

} // namespace

TensorPoly coproduct(const NCPoly& p, bool use_det) {
    TensorPoly out;
    for (const auto& [m, c] : p.terms()) out = out + coproduct_word(m.letters(), use_det) * c;
    return out;
}

Scalar counit(const NCPoly& p) {
    Scalar out;
    for (const auto& [m, c] : p.terms()) {
        if (m.e[1] == 0 && m.e[2] == 0 && m.e[3] == 0 && m.e[4] == 0) out += c;
    }
    return out;
}

NCPoly antipode(const NCPoly& p, bool use_det) {
    NCPoly out;
    for (const auto& [m, c] : p.terms()) out += antipode_word(m.letters(), use_det) * c;
    return out;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

bool Report::all_pass() const {
    for (const auto& r : records)
        if (!r.residual_is_zero) return false;
    return true;
}

std::string Report::to_string() const {
    std::ostringstream out;
    for (const auto& r : records) {
        out << r.id << ": " << (r.residual_is_zero ? "ok" : "FAIL");
        if (!r.residual_is_zero) out << "  residual = " << r.residual_text;
        out << "\n";
    }
    return out.str();
}

namespace {

void record(Report& rep, const std::string& id, const NCPoly& residual) {
    rep.records.push_back({id, residual.is_zero(),
                           residual.is_zero() ? "" : residual.to_string()});
}

void record(Report& rep, const std::string& id, const TensorPoly& residual) {
    rep.records.push_back({id, residual.is_zero(),
                           residual.is_zero() ? "" : residual.to_string()});
}

// The T-matrix with e, beta, gamma substituted.
std::array<std::array<NCPoly, 3>, 3> t_matrix() {
    using G = AGen;
    return {{{NCPoly::gen(G::a), NCPoly::gen(G::alpha), NCPoly::gen(G::b)},
             {gamma_poly(), e_poly(), beta_poly()},
             {NCPoly::gen(G::c), NCPoly::gen(G::delta), NCPoly::gen(G::d)}}};
}

const std::array<int, 3> kIdxPar = {0, 1, 0};   // parities of basis 1, 0, -1

// The defining relations, kept as word sums (lhs - rhs = 0) so that the
// coalgebra maps can be applied to the unreduced two-sided forms.
struct WordSum {
    std::string id;
    std::vector<std::pair<Scalar, std::vector<AGen>>> terms;
};

std::vector<WordSum> defining_relations(bool with_det) {
    using G = AGen;
    const Scalar one(1), q = q_pow(1), q2 = q_pow(2), qi = q_pow(-1);
    const Scalar om = omega_const(), lam = lambda_R(), rho = rho_R();
    const Scalar two = kulish(2);
    std::vector<WordSum> rels;
    auto add = [&](const std::string& id,
                   std::vector<std::pair<Scalar, std::vector<AGen>>> ts) {
        rels.push_back({id, std::move(ts)});
    };
    add("ab=q2ba", {{one, {G::a, G::b}}, {-q2, {G::b, G::a}}});
    add("ac=q2ca", {{one, {G::a, G::c}}, {-q2, {G::c, G::a}}});
    add("[a,d]", {{one, {G::a, G::d}}, {-one, {G::d, G::a}},
                  {lam, {G::alpha, G::delta}}, {-rho, {G::b, G::c}}});
    add("a.alpha", {{one, {G::a, G::alpha}}, {-q, {G::alpha, G::a}}});
    add("a.delta", {{one, {G::a, G::delta}}, {-q, {G::delta, G::a}},
                    {-q * om, {G::c, G::alpha}}});
    add("[b,c]", {{one, {G::b, G::c}}, {-one, {G::c, G::b}}});
    add("bd=q2db", {{one, {G::b, G::d}}, {-q2, {G::d, G::b}}});
    add("b.alpha", {{one, {G::b, G::alpha}}, {-qi, {G::alpha, G::b}}});
    add("b.delta", {{one, {G::b, G::delta}}, {-q, {G::delta, G::b}}});
    add("cd=q2dc", {{one, {G::c, G::d}}, {-q2, {G::d, G::c}}});
    add("c.alpha", {{one, {G::c, G::alpha}}, {-qi, {G::alpha, G::c}}});
    add("c.delta", {{one, {G::c, G::delta}}, {-q, {G::delta, G::c}}});
    add("d.alpha", {{one, {G::d, G::alpha}}, {-qi, {G::alpha, G::d}},
                    {om, {G::delta, G::b}}});
    add("d.delta", {{one, {G::d, G::delta}}, {-qi, {G::delta, G::d}}});
    add("alpha.delta", {{one, {G::alpha, G::delta}}, {q, {G::delta, G::alpha}},
                        {q * lam, {G::b, G::c}}});
    add("alpha^2", {{one, {G::alpha, G::alpha}}, {qi * two, {G::a, G::b}}});
    add("delta^2", {{one, {G::delta, G::delta}}, {qi * two, {G::c, G::d}}});
    if (with_det)
        add("D=1", {{one, {G::a, G::d}}, {-q, {G::b, G::c}},
                    {-s_pow(1), {G::alpha, G::delta}}, {-one, {}}});
    return rels;
}

} // namespace

Report verify_rtt() {
    Report rep;
    const auto T = t_matrix();
    const Scalar om = omega_const(), lam = lambda_R(), rho = rho_R();
    // 9x9 R-matrix, basis ordering (1,1),(1,0),(1,-1),(0,1),...,(-1,-1)
    std::array<std::array<Scalar, 9>, 9> R{};
    R[0][0] = q_pow(1);
    R[1][1] = Scalar(1);
    R[2][2] = q_pow(-1);
    R[3][1] = om;  R[3][3] = Scalar(1);
    R[4][2] = -lam; R[4][4] = Scalar(1);
    R[5][5] = Scalar(1);
    R[6][2] = rho; R[6][4] = -lam; R[6][6] = q_pow(-1);
    R[7][5] = om;  R[7][7] = Scalar(1);
    R[8][8] = q_pow(1);

    // T1 = T (x) I and T2 = I (x) T with the Koszul sign of the super
    // Kronecker product: (A (x) B)_{(i,k),(j,l)} = (-1)^(k^(i^+j^)) A_ij B_kl.
    std::array<std::array<NCPoly, 9>, 9> T1, T2;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) {
                    NCPoly& t1 = T1[3 * i + k][3 * j + l];
                    NCPoly& t2 = T2[3 * i + k][3 * j + l];
                    if (k == l) {
                        t1 = T[i][j];
                        if (kIdxPar[k] && ((kIdxPar[i] + kIdxPar[j]) % 2)) t1 = -t1;
                    }
                    if (i == j) t2 = T[k][l];
                }
    auto matmul = [](const auto& A, const auto& B) {
        std::array<std::array<NCPoly, 9>, 9> C;
        for (int u = 0; u < 9; ++u)
            for (int w = 0; w < 9; ++w) {
                if (A[u][w].is_zero()) continue;
                for (int v = 0; v < 9; ++v) {
                    if (B[w][v].is_zero()) continue;
                    C[u][v] += mul(A[u][w], B[w][v], true);
                }
            }
        return C;
    };
    std::array<std::array<NCPoly, 9>, 9> Rm, lhs, rhs;
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v) Rm[u][v] = NCPoly(R[u][v]);
    lhs = matmul(matmul(Rm, T1), T2);
    rhs = matmul(matmul(T2, T1), Rm);
    for (int u = 0; u < 9; ++u)
        for (int v = 0; v < 9; ++v)
            record(rep, "rtt(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")",
                   lhs[u][v] - rhs[u][v]);
    return rep;
}

Report verify_orthosymplectic() {
    Report rep;
    const auto T = t_matrix();
    std::array<std::array<Scalar, 3>, 3> C{}, Ci{};
    C[0][2] = -s_pow(-1); C[1][1] = Scalar(1); C[2][0] = s_pow(1);
    Ci[0][2] = s_pow(-1); Ci[1][1] = Scalar(1); Ci[2][0] = -s_pow(1);
    // supertranspose: (T^st)_ij = (-1)^(i^ (j^+1)) T_ji
    std::array<std::array<NCPoly, 3>, 3> Tst;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Tst[i][j] = T[j][i];
            if (kIdxPar[i] && ((kIdxPar[j] + 1) % 2)) Tst[i][j] = -Tst[i][j];
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            NCPoly lhs1, lhs2;
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v) {
                    if (!C[u][v].is_zero())
                        lhs1 += mul(Tst[i][u] * C[u][v], T[v][j], true);
                    if (!Ci[u][v].is_zero())
                        lhs2 += mul(T[i][u] * Ci[u][v], Tst[v][j], true);
                }
            record(rep, "TstCT(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                   lhs1 - NCPoly(C[i][j]));
            record(rep, "TCiTst(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                   lhs2 - NCPoly(Ci[i][j]));
        }
    // centrality of D from the 17 relations alone (no D = 1 reduction)
    NCPoly D = sdet_poly();
    for (int g = 0; g < 6; ++g) {
        NCPoly gp = NCPoly::gen(static_cast<AGen>(g));
        record(rep, "central(D," + kNames[g] + ")",
               mul(D, gp, false) - mul(gp, D, false));
    }
    return rep;
}

Report verify_derived_generators() {
    using G = AGen;
    Report rep;
    NCPoly a = NCPoly::gen(G::a), b = NCPoly::gen(G::b), c = NCPoly::gen(G::c),
           d = NCPoly::gen(G::d), al = NCPoly::gen(G::alpha), de = NCPoly::gen(G::delta);
    NCPoly e = e_poly(), be = beta_poly(), ga = gamma_poly();
    const Scalar q = q_pow(1), qi = q_pow(-1), om = omega_const(), lam = lambda_R();
    const Scalar two = kulish(2);
    auto M = [](const NCPoly& x, const NCPoly& y) { return mul(x, y, true); };
    auto com = [&](const NCPoly& x, const NCPoly& y) { return M(x, y) - M(y, x); };
    auto acom = [&](const NCPoly& x, const NCPoly& y) { return M(x, y) + M(y, x); };

    record(rep, "[a,e]=om.ga.al", com(a, e) - M(ga, al) * om);
    record(rep, "a.be", M(a, be) - M(be, a) * q - M(b, ga) * (q * om));
    record(rep, "a.ga", M(a, ga) - M(ga, a) * q);
    record(rep, "[b,e]", com(b, e));
    record(rep, "b.be", M(b, be) - M(be, b) * q);
    record(rep, "b.ga", M(b, ga) - M(ga, b) * qi);
    record(rep, "[c,e]", com(c, e));
    record(rep, "c.be", M(c, be) - M(be, c) * q);
    record(rep, "c.ga", M(c, ga) - M(ga, c) * qi);
    record(rep, "[d,e]=om.de.be", com(d, e) - M(de, be) * om);
    record(rep, "d.be", M(d, be) - M(be, d) * qi);
    record(rep, "d.ga", M(d, ga) - M(ga, d) * qi + M(be, c) * om);
    record(rep, "[e,al]", com(e, al) + M(ga, b) * lam);
    record(rep, "[e,be]", com(e, be) - M(b, de) * lam);
    record(rep, "[e,ga]", com(e, ga) - M(al, c) * lam);
    record(rep, "[e,de]", com(e, de) + M(c, be) * lam);
    record(rep, "{al,be}", acom(al, be) + M(e, b) * om);
    record(rep, "{al,ga}", acom(al, ga));
    record(rep, "be.ga", M(be, ga) + M(ga, be) * qi + (b * c) * lam);
    record(rep, "{be,de}", acom(be, de));
    record(rep, "{ga,de}", acom(ga, de) - M(c, e) * om);
    record(rep, "be^2", M(be, be) + M(b, d) * (qi * two));
    record(rep, "ga^2", M(ga, ga) + M(a, c) * (qi * two));
    record(rep, "al.de=ga.be", M(al, de) - M(ga, be));
    record(rep, "e^2", M(e, e) - NCPoly(Scalar(1)) + M(al, de) * (Scalar(2) * s_pow(-1)) -
                           M(b, c) * om);
    record(rep, "e.al", M(e, al) - (M(b, ga) - M(be, a)) * s_pow(1));
    record(rep, "e.be", M(e, be) - M(de, b) * s_pow(1) + M(al, d) * s_pow(-1));
    record(rep, "e.ga", M(e, ga) - (M(de, a) - M(c, al)) * s_pow(1));
    record(rep, "e.de", M(e, de) - M(ga, d) * s_pow(-1) + M(be, c) * s_pow(1));
    return rep;
}

Report verify_hopf() {
    Report rep;
    const auto T = t_matrix();
    // S(T) from the printed matrix
    std::array<std::array<NCPoly, 3>, 3> St = {{
        {NCPoly::gen(AGen::d), beta_poly() * s_pow(-1), NCPoly::gen(AGen::b) * (-q_pow(-1))},
        {NCPoly::gen(AGen::delta) * (-s_pow(1)), e_poly(), NCPoly::gen(AGen::alpha) * s_pow(-1)},
        {NCPoly::gen(AGen::c) * (-q_pow(1)), gamma_poly() * (-s_pow(1)), NCPoly::gen(AGen::a)},
    }};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            NCPoly p1, p2;
            for (int k = 0; k < 3; ++k) {
                p1 += mul(St[i][k], T[k][j], true);
                p2 += mul(T[i][k], St[k][j], true);
            }
            NCPoly id = (i == j) ? NCPoly(Scalar(1)) : NCPoly();
            record(rep, "S(T)T(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                   p1 - id);
            record(rep, "TS(T)(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                   p2 - id);
        }
    // the antipode maps agree with applying S generator-wise
    for (int g = 0; g < 6; ++g) {
        NCPoly gp = NCPoly::gen(static_cast<AGen>(g));
        int i = (g == 0 || g == 1 || g == 2) ? 0 : 2;
        int j = (g == 0 || g == 3) ? 0 : (g == 1 || g == 4) ? 1 : 2;
        record(rep, "S(" + kNames[g] + ")", antipode(gp) - St[i][j]);
    }
    // Delta and S annihilate every defining relation; counit consistency
    for (const WordSum& rel : defining_relations(true)) {
        TensorPoly dres;
        NCPoly sres;
        Scalar eres;
        for (const auto& [c, w] : rel.terms) {
            dres = dres + coproduct_word(w, true) * c;
            sres += antipode_word(w, true) * c;
            // epsilon is multiplicative on generators: eps(word) is 1 exactly
            // when the word uses only a and d.
            bool diag = true;
            for (AGen g : w)
                if (g != AGen::a && g != AGen::d) diag = false;
            if (diag) eres += c;
        }
        record(rep, "Delta(" + rel.id + ")", dres);
        record(rep, "S(" + rel.id + ")", sres);
        rep.records.push_back(
            {"eps(" + rel.id + ")", eres.is_zero(), eres.is_zero() ? "" : eres.to_string()});
    }
    // group-like superdeterminant: in the D = 1 quotient (where the middle
    // entries e, beta, gamma are polynomial), Delta(D) = D (x) D reads
    // Delta(D) = 1 (x) 1.
    TensorPoly dD;
    for (const auto& [c, w] :
         std::vector<std::pair<Scalar, std::vector<AGen>>>{
             {Scalar(1), {AGen::a, AGen::d}},
             {-q_pow(1), {AGen::b, AGen::c}},
             {-s_pow(1), {AGen::alpha, AGen::delta}}})
        dD = dD + coproduct_word(w, true) * c;
    record(rep, "Delta(D)-DxD",
           dD - TensorPoly::simple(NCPoly(Scalar(1)), NCPoly(Scalar(1))));
    // counit is an algebra morphism on generators: eps(Delta legs) recovers T
    for (int g = 0; g < 6; ++g) {
        NCPoly gp = NCPoly::gen(static_cast<AGen>(g));
        TensorPoly dg = coproduct(gp);
        NCPoly left_eps, right_eps;
        for (const auto& [k, c] : dg.terms()) {
            Scalar el = counit(NCPoly::mono(k.first));
            Scalar er = counit(NCPoly::mono(k.second));
            left_eps += NCPoly::mono(k.second, c * el);
            right_eps += NCPoly::mono(k.first, c * er);
        }
        record(rep, "(eps x id)Delta(" + kNames[g] + ")", left_eps - gp);
        record(rep, "(id x eps)Delta(" + kNames[g] + ")", right_eps - gp);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Parsing and pretty printing
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<const GeneratorSet> afun_gens() {
    static const auto gens = std::make_shared<const GeneratorSet>(GeneratorSet{
        {kNames.begin(), kNames.end()}, {kParities.begin(), kParities.end()}});
    return gens;
}

} // namespace

NCPoly parse_ncpoly(const std::string& text) {
    FreeGradedPoly fp = parse_free_poly(text, afun_gens());
    NCPoly out;
    for (const auto& [w, c] : fp.terms()) {
        std::vector<AGen> word;
        word.reserve(w.size());
        for (int g : w) word.push_back(static_cast<AGen>(g));
        NCPoly piece = nf_word(word, true);
        for (const auto& [m, pc] : piece.terms()) out.add_term(m, c * pc);
    }
    return out;
}

NCPoly normal_form(const std::string& text) { return parse_ncpoly(text); }

namespace {

// Renders a coefficient as a short (+-) q-power [n] product when possible.
bool snap_coefficient(const Scalar& c, std::string& out) {
    for (int sign = 1; sign >= -1; sign -= 2) {
        for (int n = 1; n <= 8; ++n) {
            Scalar base = (n == 1) ? Scalar(1) : kulish(n);
            for (int e = -8; e <= 8; ++e) {
                Scalar cand = base * s_pow(e) * Scalar(sign);
                if (!(c == cand)) continue;
                std::ostringstream os;
                if (sign < 0) os << "-";
                bool printed = false;
                if (e != 0) {
                    if (e % 2 == 0) {
                        int k = e / 2;
                        if (k == 1) os << "q";
                        else if (k == -1) os << "(1/q)";
                        else if (k > 0) os << "q^" << k;
                        else os << "(1/q^" << -k << ")";
                    } else {
                        os << "q^(" << e << "/2)";
                    }
                    printed = true;
                }
                if (n > 1) {
                    if (printed) os << "*";
                    os << "[" << n << "]";
                    printed = true;
                }
                if (!printed) os << "1";
                out = os.str();
                return true;
            }
        }
    }
    return false;
}

} // namespace

std::string pretty_ncpoly(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::string coeff;
        bool snapped = snap_coefficient(c, coeff);
        if (!snapped) coeff = "(" + c.to_string() + ")";
        if (!first) {
            if (!coeff.empty() && coeff[0] == '-') {
                out << " - ";
                coeff = coeff.substr(1);
            } else {
                out << " + ";
            }
        }
        first = false;
        if (m.is_unit()) {
            out << coeff;
        } else if (coeff == "1") {
            out << m.to_string();
        } else {
            out << coeff << "*" << m.to_string();
        }
    }
    return out.str();
}

} // namespace ospq
