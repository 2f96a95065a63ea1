#include "ospq/realize.hpp"

#include "ospq/expr.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

Scalar g_ratio() { return parse_scalar("[3]!/[4]"); }
Scalar g_ratio_sqrt() { return parse_scalar("sqrt([3]!/[4])"); }

Scalar scalar_pow(const Scalar& x, long k) {
    Scalar out(1);
    for (long i = 0; i < k; ++i) out = out * x;
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// The embedding constraint
// ---------------------------------------------------------------------------

Scalar fold_g_constraint(const Scalar& x) {
    Scalar out;
    for (const auto& t : x.terms()) {
        const auto& even = t.par.even();
        auto exp_of = [&](int id) -> long {
            auto it = even.find(id);
            return it == even.end() ? 0 : it->second;
        };
        // Count half-units of g1 and g3 (g = sqrt_g^2).
        long t1 = 2 * exp_of(sym::g1()) + exp_of(sym::sqrt_g1());
        long t3 = 2 * exp_of(sym::g3()) + exp_of(sym::sqrt_g3());
        long k = std::min(t1, t3);
        if (k <= 0 || t1 < 0 || t3 < 0) {
            out += Scalar::term(t.coef, t.rad, t.par);
            continue;
        }
        std::map<int, long> rest = even;
        rest.erase(sym::g1());
        rest.erase(sym::sqrt_g1());
        rest.erase(sym::g3());
        rest.erase(sym::sqrt_g3());
        auto put = [&](int gid, int sqrt_gid, long half_units) {
            if (half_units / 2) rest[gid] = half_units / 2;
            if (half_units % 2) rest[sqrt_gid] = 1;
        };
        put(sym::g1(), sym::sqrt_g1(), t1 - k);
        put(sym::g3(), sym::sqrt_g3(), t3 - k);
        rest[sym::g2()] += k;
        if (rest[sym::g2()] == 0) rest.erase(sym::g2());
        Scalar base = Scalar::term(t.coef, t.rad,
                                   ParameterMonomial::build(rest, t.par.odd()));
        Scalar extra = scalar_pow(g_ratio(), k / 2);
        if (k % 2) extra = extra * g_ratio_sqrt();
        out += base * extra;
    }
    return out;
}

NCPoly fold_g_constraint(const NCPoly& p) {
    NCPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, fold_g_constraint(c));
    return out;
}

// ---------------------------------------------------------------------------
// Embedding of the supersphere
// ---------------------------------------------------------------------------

EmbeddingMap embed_sphere() {
    const CorepMatrix& T = corep_matrix(2, 0);
    const Scalar g1 = Scalar::parameter(sym::g1());
    const Scalar g2 = Scalar::parameter(sym::g2());
    const Scalar g3 = Scalar::parameter(sym::g3());
    EmbeddingMap em;
    for (int k = 2; k >= -2; --k)
        em.Y[2 - k] = T.at(2, k) * g1 + T.at(0, k) * g2 + T.at(-2, k) * g3;
    em.r = parse_scalar("[2]*[2]") * g2 * g2;
    em.xi = parse_scalar("[6]/[3]") * g2;
    return em;
}

namespace {

// Evaluates a covariant relation under generator images in the function
// algebra, after substituting the sphere parameters.
NCPoly eval_relation_afun(const FreeGradedPoly& rel,
                          const std::array<NCPoly, 5>& images,
                          const Scalar& r_val, const Scalar& xi_val) {
    NCPoly out;
    for (const auto& [w, c] : rel.terms()) {
        Scalar cs = c.substitute(sym::xi(), xi_val).substitute(sym::r(), r_val);
        NCPoly word(Scalar(1));
        for (int idx : w) word = word * images[idx];
        out += word * cs;
    }
    return out;
}

void record(Report& rep, const std::string& id, const NCPoly& residual) {
    rep.records.push_back({id, residual.is_zero(),
                           residual.is_zero() ? "" : residual.to_string()});
}

std::vector<std::pair<std::string, FreeGradedPoly>> sphere_relation_list() {
    std::vector<std::pair<std::string, FreeGradedPoly>> rels;
    rels.emplace_back("radius", composite_relation(2, 0, 0, 0));
    for (int L : {1, 2, 3})
        for (const auto& rr : raw_sphere_relations(L))
            rels.emplace_back("raw L=" + std::to_string(L) + " " + rr.id, rr.rel);
    for (const auto& rr : final_sphere_relations())
        rels.emplace_back("final " + rr.id, rr.rel);
    return rels;
}

} // namespace

Report verify_embedding() {
    EmbeddingMap em = embed_sphere();
    Report rep;
    for (const auto& [id, rel] : sphere_relation_list())
        record(rep, id,
               fold_g_constraint(eval_relation_afun(rel, em.Y, em.r, em.xi)));
    return rep;
}

// ---------------------------------------------------------------------------
// Twisted-primitive annihilation
// ---------------------------------------------------------------------------

NCPoly right_action_PR(const NCPoly& p) {
    const Scalar sg1 = Scalar::parameter(sym::sqrt_g1());
    const Scalar sg3 = Scalar::parameter(sym::sqrt_g3());
    return right_action(p, Gen::Vplus) * (-sg3) +
           right_action(p, Gen::Vminus) * sg1;
}

Report twisted_primitive_annihilation() {
    EmbeddingMap em = embed_sphere();
    const Scalar sg1 = Scalar::parameter(sym::sqrt_g1());
    const Scalar sg3 = Scalar::parameter(sym::sqrt_g3());
    const Scalar g[3] = {Scalar::parameter(sym::g1()),
                         Scalar::parameter(sym::g2()),
                         Scalar::parameter(sym::g3())};
    const int rows[3] = {2, 0, -2};
    Report rep;

    // Annihilation via the closed right-action forms.
    for (int k = 2; k >= -2; --k) {
        NCPoly vp, vm;
        for (int i = 0; i < 3; ++i) {
            vp += corep_right_action_closed(Gen::Vplus, 2, 0, rows[i], k) * g[i];
            vm += corep_right_action_closed(Gen::Vminus, 2, 0, rows[i], k) * g[i];
        }
        NCPoly res = fold_g_constraint(vp * (-sg3) + vm * sg1);
        record(rep, "Y" + std::to_string(k) + " closed annihilation", res);

        // Closed forms agree with the pairing-based action on Y_k.
        NCPoly dp = vp - right_action(em.at(k), Gen::Vplus);
        NCPoly dm = vm - right_action(em.at(k), Gen::Vminus);
        record(rep, "Y" + std::to_string(k) + " closed vs pairing v+", dp);
        record(rep, "Y" + std::to_string(k) + " closed vs pairing v-", dm);

        record(rep, "Y" + std::to_string(k) + " direct annihilation",
               fold_g_constraint(right_action_PR(em.at(k))));

        // Composition law a (.) (uv) = (a (.) u) (.) v on the word v+ v-.
        NCPoly comp = right_action(em.at(k), parse_uword("v+ v-")) -
                      right_action(right_action(em.at(k), Gen::Vplus), Gen::Vminus);
        record(rep, "Y" + std::to_string(k) + " action composition", comp);
    }

    // Twisted-primitive product rule and the subalgebra property.
    for (int j = 2; j >= -2; --j)
        for (int k = 2; k >= -2; --k) {
            NCPoly prod = em.at(j) * em.at(k);
            NCPoly lhs = right_action_PR(prod);
            int pb = em.at(k).is_zero() ? 0 : em.at(k).parity();
            NCPoly rhs = right_action(em.at(j), Gen::K) * right_action_PR(em.at(k));
            NCPoly tail = right_action_PR(em.at(j)) *
                          right_action(em.at(k), Gen::Kinv);
            rhs = (pb % 2) ? rhs - tail : rhs + tail;
            std::string id = "Y" + std::to_string(j) + "Y" + std::to_string(k);
            record(rep, id + " product rule", lhs - rhs);
            record(rep, id + " subalgebra", fold_g_constraint(lhs));
        }
    return rep;
}

// ---------------------------------------------------------------------------
// The covariant oscillator
// ---------------------------------------------------------------------------

OscPoly::OscPoly(Scalar constant) {
    if (!constant.is_zero()) terms_[OscMonomial{}] = std::move(constant);
}

OscPoly OscPoly::abar() { return mono({1, 0, 0}); }
OscPoly OscPoly::a() { return mono({0, 1, 0}); }
OscPoly OscPoly::c() { return mono({0, 0, 1}); }

OscPoly OscPoly::mono(OscMonomial m, Scalar coeff) {
    OscPoly p;
    p.add_term(m, coeff);
    return p;
}

Scalar OscPoly::coeff(const OscMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void OscPoly::add_term(const OscMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OscPoly OscPoly::operator-() const {
    OscPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

OscPoly OscPoly::operator+(const OscPoly& o) const {
    OscPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

OscPoly OscPoly::operator-(const OscPoly& o) const { return *this + (-o); }

OscPoly OscPoly::operator*(const Scalar& s) const {
    OscPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
}

namespace {

// Normal form of (abar^i a^j c^eps) * abar.
void append_abar(const OscMonomial& m, const Scalar& c, OscPoly& out);
// Normal form of (abar^i a^j c^eps) * a.
void append_a(const OscMonomial& m, const Scalar& c, OscPoly& out) {
    Scalar f = m.eps ? c * Scalar::q_power(1) : c;    // c*a = q*a*c
    out.add_term({m.i, m.j + 1, m.eps}, f);
}

void append_abar(const OscMonomial& m, const Scalar& c, OscPoly& out) {
    if (m.eps) {
        // c*abar = q^-1*abar*c: reduce abar^i a^j abar, then restore the c.
        OscPoly body;
        append_abar({m.i, m.j, 0}, c * Scalar::q_power(-1), body);
        for (const auto& [bm, bc] : body.terms())
            out.add_term({bm.i, bm.j, 1}, bc);
        return;
    }
    if (m.j == 0) {
        out.add_term({m.i + 1, 0, 0}, c);
        return;
    }
    // a^j abar = a^(j-1) + q^-2 a^(j-1) abar a.
    out.add_term({m.i, m.j - 1, 0}, c);
    OscPoly shifted;
    append_abar({m.i, m.j - 1, 0}, c * Scalar::q_power(-2), shifted);
    for (const auto& [sm, sc] : shifted.terms()) append_a(sm, sc, out);
}

// Normal form of (abar^i a^j c^eps) * c.
void append_c(const OscMonomial& m, const Scalar& c, OscPoly& out) {
    if (!m.eps) {
        out.add_term({m.i, m.j, 1}, c);
        return;
    }
    // c^2 = q^-1*[2]*abar*a + varpi^-1.
    OscPoly raised;
    append_abar({m.i, m.j, 0}, c * Scalar::q_power(-1) * kulish(2), raised);
    for (const auto& [rm, rc] : raised.terms()) append_a(rm, rc, out);
    out.add_term({m.i, m.j, 0}, c * varpi().inverse());
}

} // namespace

OscPoly OscPoly::operator*(const OscPoly& o) const {
    OscPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Scalar c = c1 * c2;
            if ((m1.eps & 1) && c2.is_homogeneous() && (c2.parity() & 1))
                c = -c;                       // odd coefficient crosses the c
            OscPoly acc = mono(m1, c);
            auto push = [&](void (*step)(const OscMonomial&, const Scalar&,
                                         OscPoly&)) {
                OscPoly next;
                for (const auto& [am, ac] : acc.terms()) step(am, ac, next);
                acc = std::move(next);
            };
            for (int t = 0; t < m2.i; ++t) push(&append_abar);
            for (int t = 0; t < m2.j; ++t) push(&append_a);
            for (int t = 0; t < m2.eps; ++t) push(&append_c);
            out = out + acc;
        }
    return out;
}

std::string OscPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int t = 0; t < m.i; ++t) os << "*abar";
        for (int t = 0; t < m.j; ++t) os << "*a";
        if (m.eps) os << "*c";
    }
    return os.str();
}

namespace {

std::shared_ptr<const GeneratorSet> osc_generator_set() {
    static auto gens = std::make_shared<GeneratorSet>(
        GeneratorSet{{"abar", "a", "c"}, {0, 0, 1}});
    return gens;
}

OscPoly eval_osc(const FreeGradedPoly& p, const std::array<OscPoly, 3>& images,
                 const std::map<int, Scalar>& subs = {}) {
    OscPoly out;
    for (const auto& [w, c] : p.terms()) {
        Scalar cs = c;
        for (const auto& [id, val] : subs) cs = cs.substitute(id, val);
        OscPoly word(Scalar(1));
        for (int idx : w) word = word * images[idx];
        out += word * cs;
    }
    return out;
}

// Evaluates a covariant relation on the five-generator oscillator images.
OscPoly eval_osc5(const FreeGradedPoly& p, const std::array<OscPoly, 5>& images,
                  const std::map<int, Scalar>& subs) {
    OscPoly out;
    for (const auto& [w, c] : p.terms()) {
        Scalar cs = c;
        for (const auto& [id, val] : subs) cs = cs.substitute(id, val);
        OscPoly word(Scalar(1));
        for (int idx : w) word = word * images[idx];
        out += word * cs;
    }
    return out;
}

} // namespace

OscPoly oscillator_normal_form(const std::string& text) {
    FreeGradedPoly p = parse_free_poly(text, osc_generator_set());
    return eval_osc(p, {OscPoly::abar(), OscPoly::a(), OscPoly::c()});
}

bool superplane_iso_check() {
    const Scalar r0 = Scalar(-1) * Scalar::q_power(1) * varpi().inverse();
    Presentation pres = superspace0(r0);
    const std::array<OscPoly, 3> im = {OscPoly::abar(), OscPoly::c(),
                                       -OscPoly::a()};
    auto eval3 = [&](const FreeGradedPoly& p) {
        OscPoly out;
        for (const auto& [w, c] : p.terms()) {
            OscPoly word(Scalar(1));
            for (int idx : w) word = word * im[idx];
            out += word * c;
        }
        return out;
    };
    for (const auto& rule : pres.rules) {
        OscPoly lhs = im[rule.x] * im[rule.y];
        if (!(lhs - eval3(rule.rhs)).is_zero()) return false;
    }
    for (const auto& cst : pres.constants) {
        OscPoly want(cst.expected ? *cst.expected : Scalar());
        if (!(eval3(cst.expr) - want).is_zero()) return false;
    }
    // The radius combination itself evaluates to r0.
    FreeGradedPoly rad = composite_relation(1, 0, 0, 0);
    OscPoly res;
    for (const auto& [w, c] : rad.terms()) {
        OscPoly word(Scalar(1));
        for (int idx : w) word = word * im[idx];
        res += word * c.substitute(sym::r(), r0);
    }
    return res.is_zero();
}

Scalar oscillator_r() {
    // r = (q^2/varpi^2) * [4]/[3]!.
    return Scalar::q_power(2) * varpi().inverse() * varpi().inverse() *
           kulish(4) * kulish_factorial(3).inverse();
}

Scalar oscillator_xi() {
    return kulish(6) * kulish_factorial(3).inverse() *
           sqrt_scalar(oscillator_r());
}

std::array<OscPoly, 5> oscillator_sphere_generators() {
    const OscPoly A = OscPoly::abar(), a = OscPoly::a(), c = OscPoly::c();
    const Scalar s_inv = Scalar::s_power(-1);
    const Scalar root42 = sqrt_scalar(kulish(4) / kulish(2));
    std::array<OscPoly, 5> Y;
    Y[0] = A * A;
    Y[1] = (A * c) * (s_inv * root42);
    Y[2] = (A * a) * (Scalar(-1) * sqrt_scalar(kulish_factorial(4)) /
                      (Scalar::q_power(1) * kulish(2))) +
           OscPoly(Scalar(-1) * s_inv * varpi().inverse() *
                   sqrt_scalar(kulish(4) / kulish_factorial(3)));
    Y[3] = (c * a) * (Scalar(-1) * s_inv * root42);
    Y[4] = a * a;
    return Y;
}

bool oscillator_sphere_check() {
    const auto Y = oscillator_sphere_generators();
    const std::map<int, Scalar> subs = {{sym::r(), oscillator_r()},
                                        {sym::xi(), oscillator_xi()}};
    for (const auto& [id, rel] : sphere_relation_list())
        if (!eval_osc5(rel, Y, subs).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Fock-space matrix model
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Real>>;

Matrix zeros(int n) { return Matrix(n, std::vector<Real>(n, Real(0))); }

Matrix identity(int n) {
    Matrix m = zeros(n);
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
    int n = static_cast<int>(x.size());
    Matrix out = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (y[k][j] != 0) out[i][j] += x[i][k] * y[k][j];
        }
    return out;
}

Matrix axpy(Matrix m, const Real& f, const Matrix& t) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] += f * t[i][j];
    return m;
}

// Max |entry| over columns of level <= max_level.
Real column_residual(const Matrix& m, int max_level) {
    int n = static_cast<int>(m.size());
    Real worst = 0;
    for (int j = 0; j < std::min(n, 2 * (max_level + 1)); ++j)
        for (int i = 0; i < n; ++i) {
            Real v = boost::multiprecision::abs(m[i][j]);
            if (v > worst) worst = v;
        }
    return worst;
}

Matrix eval_osc_matrix(const OscPoly& p, const Matrix& A, const Matrix& a,
                       const Matrix& c, const Rational& q, int precision) {
    int n = static_cast<int>(A.size());
    Matrix out = zeros(n);
    for (const auto& [m, coeff] : p.terms()) {
        Matrix word = identity(n);
        for (int t = 0; t < m.i; ++t) word = matmul(word, A);
        for (int t = 0; t < m.j; ++t) word = matmul(word, a);
        if (m.eps) word = matmul(word, c);
        out = axpy(std::move(out), coeff.eval_numeric(q, {}, precision), word);
    }
    return out;
}

} // namespace

Real FockModel::max_residual() const {
    Real worst = 0;
    for (const auto& [id, v] : residuals)
        if (v > worst) worst = v;
    return worst;
}

FockModel fock_representation(int cutoff, const Rational& q, int precision) {
    if (cutoff < 8) throw std::invalid_argument("fock_representation: cutoff < 8");
    if (q <= 0 || q >= 1) throw std::invalid_argument("fock_representation: q not in (0,1)");
    // Coefficients multiply matrix entries that grow like q^(-2*cutoff); use
    // the full numeric headroom internally regardless of the display precision.
    const int eval_digits = kMaxEvalDigits;

    FockModel M;
    M.cutoff = cutoff;
    M.q = q;
    M.precision = precision;
    const int dim = 2 * cutoff;
    const Real qr = static_cast<Real>(q);
    const Real qinv2 = 1 / (qr * qr);
    const Real sqrt_q = boost::multiprecision::sqrt(qr);
    const Real varpi_num = sqrt_q + 1 / sqrt_q;

    // Ladder weights from a*abar - q^-2*abar*a = 1 with a|0> = 0.
    std::vector<Real> lam(cutoff + 1, Real(0));
    for (int n = 1; n <= cutoff; ++n) lam[n] = 1 + qinv2 * lam[n - 1];

    M.abar = zeros(dim);
    M.a = zeros(dim);
    M.c = zeros(dim);
    for (int n = 0; n < cutoff; ++n)
        for (int p = 0; p < 2; ++p) {
            int col = 2 * n + p;
            if (n + 1 < cutoff)
                M.abar[2 * (n + 1) + p][col] = boost::multiprecision::sqrt(lam[n + 1]);
            if (n > 0) M.a[2 * (n - 1) + p][col] = boost::multiprecision::sqrt(lam[n]);
            M.c[2 * n + (1 - p)][col] =
                boost::multiprecision::pow(qr, -n) / boost::multiprecision::sqrt(varpi_num);
        }

    // Oscillator relations on interior states (level <= cutoff-2).
    auto eval_scalar = [&](const Scalar& x) {
        return x.eval_numeric(q, {}, eval_digits);
    };
    const Matrix I = identity(dim);
    {
        Matrix r1 = axpy(axpy(matmul(M.a, M.abar), -eval_scalar(Scalar::q_power(-2)),
                              matmul(M.abar, M.a)),
                         Real(-1), I);
        M.residuals["osc a*abar"] = column_residual(r1, cutoff - 2);
        Matrix r2 = axpy(matmul(M.abar, M.c), -eval_scalar(Scalar::q_power(1)),
                         matmul(M.c, M.abar));
        M.residuals["osc abar*c"] = column_residual(r2, cutoff - 2);
        Matrix r3 = axpy(matmul(M.a, M.c), -eval_scalar(Scalar::q_power(-1)),
                         matmul(M.c, M.a));
        M.residuals["osc a*c"] = column_residual(r3, cutoff - 2);
        Matrix r4 = axpy(axpy(matmul(M.c, M.c),
                              -eval_scalar(Scalar::q_power(-1) * kulish(2)),
                              matmul(M.abar, M.a)),
                         -eval_scalar(varpi().inverse()), I);
        M.residuals["osc c^2"] = column_residual(r4, cutoff - 2);
    }

    // Sphere suite: quartic words reach cutoff-1 from level cutoff-5.
    const auto Yosc = oscillator_sphere_generators();
    std::array<Matrix, 5> Y;
    for (int i = 0; i < 5; ++i)
        Y[i] = eval_osc_matrix(Yosc[i], M.abar, M.a, M.c, q, eval_digits);
    const Scalar r_val = oscillator_r();
    const Scalar xi_val = oscillator_xi();
    const int interior = cutoff - 5;
    for (const auto& [id, rel] : sphere_relation_list()) {
        Matrix acc = zeros(dim);
        for (const auto& [w, coeff] : rel.terms()) {
            Scalar cs = coeff.substitute(sym::xi(), xi_val)
                             .substitute(sym::r(), r_val);
            Matrix word = I;
            for (int idx : w) word = matmul(word, Y[idx]);
            acc = axpy(std::move(acc), eval_scalar(cs), word);
        }
        M.residuals["sphere " + id] = column_residual(acc, interior);
    }

    // The evaluated radius combination against the exact oscillator r.
    {
        FreeGradedPoly rad = composite_relation(2, 0, 0, 0);
        Matrix acc = zeros(dim);
        for (const auto& [w, coeff] : rad.terms()) {
            if (w.empty()) continue;   // drop the -r term: compare to r directly
            Matrix word = I;
            for (int idx : w) word = matmul(word, Y[idx]);
            acc = axpy(std::move(acc), eval_scalar(coeff), word);
        }
        acc = axpy(std::move(acc), -eval_scalar(r_val), I);
        M.residuals["radius vs exact r"] = column_residual(acc, interior);
    }
    return M;
}

} // namespace ospq
