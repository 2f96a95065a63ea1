#include "ospq/corep.hpp"

#include "ospq/cgc.hpp"
#include "ospq/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

Scalar s_pow(int k) { return Scalar::s_power(k); }

Scalar cgc(int ell1, int ell2, int ell, int m1, int m2, int lambda) {
    CGCQuery qry{ell1, ell2, ell, m1, m2, lambda};
    if (!qry.in_domain()) return Scalar();
    return cgc_closed(qry);
}

CorepMatrix build_corep(int ell, int lambda);

std::map<std::pair<int, int>, CorepMatrix>& corep_cache() {
    static std::map<std::pair<int, int>, CorepMatrix> cache;
    return cache;
}

CorepMatrix build_corep(int ell, int lambda) {
    CorepMatrix T;
    T.ell = ell;
    T.lambda = lambda;
    T.entries.assign(2 * ell + 1, std::vector<NCPoly>(2 * ell + 1));
    if (lambda == 1) {
        const CorepMatrix& base = corep_matrix(ell, 0);
        for (int mp = ell; mp >= -ell; --mp)
            for (int m = ell; m >= -ell; --m) {
                NCPoly v = base.at(mp, m);
                if (((mp + m) % 2 + 2) % 2) v = -v;
                T.entries[ell - mp][ell - m] = v;
            }
        return T;
    }
    if (ell == 0) {
        T.entries[0][0] = NCPoly(Scalar(1));
        return T;
    }
    if (ell == 1) {
        using G = AGen;
        T.entries = {{NCPoly::gen(G::a), NCPoly::gen(G::alpha), NCPoly::gen(G::b)},
                     {gamma_poly(), e_poly(), beta_poly()},
                     {NCPoly::gen(G::c), NCPoly::gen(G::delta), NCPoly::gen(G::d)}};
        return T;
    }
    // fuse T^(ell-1)(0) with T^1(0): both coupled-basis contractions target
    // the top component ell, and Lambda = (ell-1) + 1 + ell mod 2 = 0.
    const CorepMatrix& A = corep_matrix(ell - 1, 0);
    const CorepMatrix& B = corep_matrix(1, 0);
    const int l1 = ell - 1, l2 = 1;
    for (int mp = ell; mp >= -ell; --mp)
        for (int m = ell; m >= -ell; --m) {
            NCPoly sum;
            for (int m1p = l1; m1p >= -l1; --m1p) {
                int m2p = mp - m1p;
                if (m2p < -l2 || m2p > l2) continue;
                Scalar cp = cgc(l1, l2, ell, m1p, m2p, 0);
                if (cp.is_zero()) continue;
                for (int m1 = l1; m1 >= -l1; --m1) {
                    int m2 = m - m1;
                    if (m2 < -l2 || m2 > l2) continue;
                    Scalar c = cgc(l1, l2, ell, m1, m2, 0);
                    if (c.is_zero()) continue;
                    int p = (m1p + m1) * (l2 - m2p) + (l1 - m1p) * (l2 - m2p) +
                            (ell - mp) * (l1 + l2 + ell);
                    Scalar coeff = cp * c;
                    if (((p % 2) + 2) % 2) coeff = -coeff;
                    sum += mul(A.at(m1p, m1), B.at(m2p, m2), true) * coeff;
                }
            }
            T.entries[ell - mp][ell - m] = sum;
        }
    return T;
}

} // namespace

const CorepMatrix& corep_matrix(int ell, int lambda) {
    if (ell < 0 || (lambda != 0 && lambda != 1))
        throw std::invalid_argument("corep_matrix: bad labels");
    auto key = std::make_pair(ell, lambda);
    auto& cache = corep_cache();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_corep(ell, lambda)).first;
    return it->second;
}

Report verify_corep_coproduct(int ell, int lambda) {
    Report rep;
    const CorepMatrix& T = corep_matrix(ell, lambda);
    for (int mp = ell; mp >= -ell; --mp)
        for (int m = ell; m >= -ell; --m) {
            TensorPoly expected;
            for (int k = ell; k >= -ell; --k)
                expected = expected + TensorPoly::simple(T.at(mp, k), T.at(k, m));
            TensorPoly got = coproduct(T.at(mp, m));
            TensorPoly res = got - expected;
            std::ostringstream id;
            id << "Delta(T^" << ell << "(" << lambda << ")_{" << mp << "," << m << "})";
            rep.records.push_back({id.str(), res.is_zero(),
                                   res.is_zero() ? "" : res.to_string()});
        }
    return rep;
}

Report verify_corep_counit(int ell, int lambda) {
    Report rep;
    const CorepMatrix& T = corep_matrix(ell, lambda);
    for (int mp = ell; mp >= -ell; --mp)
        for (int m = ell; m >= -ell; --m) {
            Scalar res = counit(T.at(mp, m)) - (mp == m ? Scalar(1) : Scalar());
            std::ostringstream id;
            id << "eps(T^" << ell << "(" << lambda << ")_{" << mp << "," << m << "})";
            rep.records.push_back({id.str(), res.is_zero(),
                                   res.is_zero() ? "" : res.to_string()});
        }
    return rep;
}

Report verify_product_law(int ell1, int ell2, int ellp, int lambda) {
    Report rep;
    const CorepMatrix& A = corep_matrix(ell1, lambda);
    const CorepMatrix& B = corep_matrix(ell2, lambda);
    for (int ell = std::abs(ell1 - ell2); ell <= ell1 + ell2; ++ell) {
        int Lambda = (((ell1 + ell2 + ell) % 2) + 2) % 2;
        const CorepMatrix* E = (ellp == ell) ? &corep_matrix(ell, Lambda) : nullptr;
        for (int mp = ellp; mp >= -ellp; --mp)
            for (int m = ell; m >= -ell; --m) {
                NCPoly sum;
                for (int m1p = ell1; m1p >= -ell1; --m1p) {
                    int m2p = mp - m1p;
                    if (m2p < -ell2 || m2p > ell2) continue;
                    Scalar cp = cgc(ell1, ell2, ellp, m1p, m2p, lambda);
                    if (cp.is_zero()) continue;
                    for (int m1 = ell1; m1 >= -ell1; --m1) {
                        int m2 = m - m1;
                        if (m2 < -ell2 || m2 > ell2) continue;
                        Scalar c = cgc(ell1, ell2, ell, m1, m2, lambda);
                        if (c.is_zero()) continue;
                        int p = (m1p + m1) * (ell2 - m2p + lambda) +
                                (ell1 - m1p) * (ell2 - m2p) +
                                (ellp - mp) * (ell1 + ell2 + ellp);
                        Scalar coeff = cp * c;
                        if (((p % 2) + 2) % 2) coeff = -coeff;
                        sum += mul(A.at(m1p, m1), B.at(m2p, m2), true) * coeff;
                    }
                }
                NCPoly res = E ? sum - E->at(mp, m) : sum;
                std::ostringstream id;
                id << "pl(" << ell1 << "," << ell2 << ";" << ellp << "->" << ell
                   << ";" << lambda << ")_{" << mp << "," << m << "}";
                rep.records.push_back({id.str(), res.is_zero(),
                                       res.is_zero() ? "" : res.to_string()});
            }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Regular actions
// ---------------------------------------------------------------------------

namespace {

// weights of the six generators within the defining corepresentation:
// (m1, m2) = (row, column) of the entry.
int gen_m1(AGen g) {
    switch (g) {
        case AGen::a: case AGen::alpha: case AGen::b: return 1;
        default: return -1;
    }
}
int gen_m2(AGen g) {
    switch (g) {
        case AGen::a: case AGen::c: return 1;
        case AGen::alpha: case AGen::delta: return 0;
        default: return -1;
    }
}

Scalar rho_norm() {
    static const Scalar v = sqrt_scalar(kulish(2) * varrho());
    return v;
}

// v+ (.) g and v- (.) g on the six letters (column index shifts).
NCPoly left_vplus_gen(AGen g) {
    switch (g) {
        case AGen::alpha: return NCPoly::gen(AGen::a) * rho_norm();
        case AGen::b: return NCPoly::gen(AGen::alpha) * rho_norm();
        case AGen::delta: return NCPoly::gen(AGen::c) * rho_norm();
        case AGen::d: return NCPoly::gen(AGen::delta) * rho_norm();
        default: return NCPoly();
    }
}
NCPoly left_vminus_gen(AGen g) {
    switch (g) {
        case AGen::a: return NCPoly::gen(AGen::alpha) * (-rho_norm());
        case AGen::alpha: return NCPoly::gen(AGen::b) * rho_norm();
        case AGen::c: return NCPoly::gen(AGen::delta) * (-rho_norm());
        case AGen::delta: return NCPoly::gen(AGen::d) * rho_norm();
        default: return NCPoly();
    }
}

// g (.) v+ and g (.) v- on the six letters (row index shifts; the middle-row
// images are the derived entries).
NCPoly right_vplus_gen(AGen g) {
    switch (g) {
        case AGen::a: return gamma_poly() * rho_norm();
        case AGen::alpha: return e_poly() * (-rho_norm());
        case AGen::b: return beta_poly() * rho_norm();
        default: return NCPoly();
    }
}
NCPoly right_vminus_gen(AGen g) {
    switch (g) {
        case AGen::c: return gamma_poly() * rho_norm();
        case AGen::delta: return e_poly() * (-rho_norm());
        case AGen::d: return beta_poly() * rho_norm();
        default: return NCPoly();
    }
}

int word_m2_sum(const std::vector<AGen>& w, size_t from, size_t to) {
    int s = 0;
    for (size_t i = from; i < to; ++i) s += gen_m2(w[i]);
    return s;
}
int word_m1_sum(const std::vector<AGen>& w, size_t from, size_t to) {
    int s = 0;
    for (size_t i = from; i < to; ++i) s += gen_m1(w[i]);
    return s;
}

// v+- acting from the left on the suffix word[i..], using the coproduct
// Delta(v) = v (x) K^-1 + K (x) v and the Koszul sign of the odd generator
// crossing the first letter.
NCPoly left_v_word(bool plus, const std::vector<AGen>& w, size_t i) {
    if (i == w.size()) return NCPoly();
    AGen g = w[i];
    NCPoly out;
    // (v (.) g) * (K^-1 (.) rest)
    NCPoly head = plus ? left_vplus_gen(g) : left_vminus_gen(g);
    if (!head.is_zero()) {
        NCPoly rest = nf_word(std::vector<AGen>(w.begin() + i + 1, w.end()), true);
        out += mul(head, rest, true) * s_pow(-word_m2_sum(w, i + 1, w.size()));
    }
    // (-1)^parity(g) (K (.) g) * (v (.) rest)
    NCPoly tail = left_v_word(plus, w, i + 1);
    if (!tail.is_zero()) {
        Scalar c = s_pow(gen_m2(g));
        if (agen_parity(g)) c = -c;
        out += mul(NCPoly::gen(g), tail, true) * c;
    }
    return out;
}

// v+- acting from the right on the prefix word[0..n), processed at the last
// letter: (w g) (.) v = (-1)^parity(g) (w (.) v)(g (.) K^-1) + (w (.) K)(g (.) v).
NCPoly right_v_word(bool plus, const std::vector<AGen>& w, size_t n) {
    if (n == 0) return NCPoly();
    AGen g = w[n - 1];
    NCPoly out;
    NCPoly head = right_v_word(plus, w, n - 1);
    if (!head.is_zero()) {
        Scalar c = s_pow(-gen_m1(g));
        if (agen_parity(g)) c = -c;
        out += mul(head, NCPoly::gen(g), true) * c;
    }
    NCPoly tail = plus ? right_vplus_gen(g) : right_vminus_gen(g);
    if (!tail.is_zero()) {
        NCPoly prefix = nf_word(std::vector<AGen>(w.begin(), w.begin() + (n - 1)), true);
        out += mul(prefix * s_pow(word_m1_sum(w, 0, n - 1)), tail, true);
    }
    return out;
}

} // namespace

NCPoly left_action(Gen g, const NCPoly& p) {
    NCPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<AGen> w = m.letters();
        switch (g) {
            case Gen::K:
                out += NCPoly::mono(m, c * s_pow(word_m2_sum(w, 0, w.size())));
                break;
            case Gen::Kinv:
                out += NCPoly::mono(m, c * s_pow(-word_m2_sum(w, 0, w.size())));
                break;
            case Gen::Vplus:
                out += left_v_word(true, w, 0) * c;
                break;
            case Gen::Vminus:
                out += left_v_word(false, w, 0) * c;
                break;
        }
    }
    return out;
}

NCPoly right_action(const NCPoly& p, Gen g) {
    NCPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<AGen> w = m.letters();
        switch (g) {
            case Gen::K:
                out += NCPoly::mono(m, c * s_pow(word_m1_sum(w, 0, w.size())));
                break;
            case Gen::Kinv:
                out += NCPoly::mono(m, c * s_pow(-word_m1_sum(w, 0, w.size())));
                break;
            case Gen::Vplus:
                out += right_v_word(true, w, w.size()) * c;
                break;
            case Gen::Vminus:
                out += right_v_word(false, w, w.size()) * c;
                break;
        }
    }
    return out;
}

NCPoly left_action(const UWord& w, const NCPoly& p) {
    NCPoly acc = p;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        acc = left_action(*it, acc);
    return acc;
}

NCPoly right_action(const NCPoly& p, const UWord& w) {
    NCPoly acc = p;
    for (Gen g : w.letters) acc = right_action(acc, g);
    return acc;
}

Scalar pairing(const UWord& w, const NCPoly& p) { return counit(left_action(w, p)); }

int UWord::parity() const {
    int p = 0;
    for (Gen g : letters) p += gen_parity(g);
    return p % 2;
}

UWord parse_uword(const std::string& text) {
    UWord out;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
            ++pos;
    };
    skip();
    if (pos < text.size() && text[pos] == '1' && pos + 1 == text.size()) return out;
    while (pos < text.size()) {
        Gen g;
        if (text.compare(pos, 4, "Kinv") == 0) {
            g = Gen::Kinv;
            pos += 4;
        } else if (text[pos] == 'K') {
            g = Gen::K;
            ++pos;
        } else if (text[pos] == 'v' && pos + 1 < text.size() &&
                   (text[pos + 1] == '+' || text[pos + 1] == '-')) {
            g = (text[pos + 1] == '+') ? Gen::Vplus : Gen::Vminus;
            pos += 2;
        } else {
            throw ParseError("unknown generator in word", static_cast<int>(pos));
        }
        long exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool paren = pos < text.size() && text[pos] == '(';
            if (paren) ++pos;
            bool neg = pos < text.size() && text[pos] == '-';
            if (neg) ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected integer exponent", static_cast<int>(pos));
            exp = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                exp = exp * 10 + (text[pos++] - '0');
            if (paren) {
                if (pos >= text.size() || text[pos] != ')')
                    throw ParseError("expected ')'", static_cast<int>(pos));
                ++pos;
            }
            if (neg) {
                if (g == Gen::K) g = Gen::Kinv;
                else if (g == Gen::Kinv) g = Gen::K;
                else throw ParseError("negative power of an odd generator",
                                      static_cast<int>(pos));
            }
        }
        for (long i = 0; i < exp; ++i) out.letters.push_back(g);
        skip();
    }
    return out;
}

NCPoly corep_left_action_closed(Gen g, int ell, int lambda, int mp, int m) {
    const CorepMatrix& T = corep_matrix(ell, lambda);
    switch (g) {
        case Gen::K: return T.at(mp, m) * s_pow(m);
        case Gen::Kinv: return T.at(mp, m) * s_pow(-m);
        case Gen::Vplus: {
            if (m + 1 > ell) return NCPoly();
            Scalar c = sqrt_scalar(kulish(ell - m) * kulish(ell + m + 1) * varrho());
            if (((ell + mp + lambda) % 2 + 2) % 2) c = -c;
            return T.at(mp, m + 1) * c;
        }
        case Gen::Vminus: {
            if (m - 1 < -ell) return NCPoly();
            Scalar c = sqrt_scalar(kulish(ell + m) * kulish(ell - m + 1) * varrho());
            if (((mp + m + lambda + 1) % 2 + 2) % 2) c = -c;
            return T.at(mp, m - 1) * c;
        }
    }
    return NCPoly();
}

NCPoly corep_right_action_closed(Gen g, int ell, int lambda, int mp, int m) {
    const CorepMatrix& T = corep_matrix(ell, lambda);
    switch (g) {
        case Gen::K: return T.at(mp, m) * s_pow(mp);
        case Gen::Kinv: return T.at(mp, m) * s_pow(-mp);
        case Gen::Vplus: {
            if (mp - 1 < -ell) return NCPoly();
            Scalar c = sqrt_scalar(kulish(ell - mp + 1) * kulish(ell + mp) * varrho());
            if (((ell + m + lambda) % 2 + 2) % 2) c = -c;
            return T.at(mp - 1, m) * c;
        }
        case Gen::Vminus: {
            if (mp + 1 > ell) return NCPoly();
            Scalar c = sqrt_scalar(kulish(ell + mp + 1) * kulish(ell - mp) * varrho());
            if (((mp + m + lambda) % 2 + 2) % 2) c = -c;
            return T.at(mp + 1, m) * c;
        }
    }
    return NCPoly();
}

} // namespace ospq
