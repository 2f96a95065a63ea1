#include "ospq/cgc.hpp"
#include "ospq/expr.hpp"
#include "ospq/urep.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

bool odd_exp(long e) { return ((e % 2) + 2) % 2 == 1; }

// Phi_d(s^2), the d-th cyclotomic polynomial evaluated at q = s^2, as an SPoly.
const SPoly& cyclo(int d) {
    static std::map<int, SPoly> cache;
    static std::recursive_mutex mx;
    std::lock_guard<std::recursive_mutex> lock(mx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // (s^2)^d - 1 divided by the proper-divisor cyclotomics.
    SPoly f = SPoly::monomial(Rational(1), 2 * d) - SPoly(Rational(1));
    for (int e = 1; e < d; ++e)
        if (d % e == 0) f = f.divided_by(cyclo(e));
    return cache.emplace(d, std::move(f)).first->second;
}

// Kulish brackets and varrho in cyclotomic-factored form:
//   [n]    = sign * s^(1-n) * prod_d Phi_d(s^2)^{e_d}
//   varrho = -s^7 / (Phi_1 Phi_4 Phi_8)
// For even n the product runs over d | n (sign -1); for odd n over the
// divisors of 2n not dividing n (sign +1); Phi_2 from 1/(s^-1+s) cancels.
struct CycloFactors {
    std::map<int, int> phi;
    int s_exp = 0;
    int sign = 1;
};

const CycloFactors& bracket_cyclo(int n) {
    static std::map<int, CycloFactors> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CycloFactors f;
    f.s_exp = 1 - n;
    if (n % 2 == 0) {
        f.sign = -1;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) f.phi[d] += 1;
    } else {
        for (int d = 1; d <= 2 * n; ++d)
            if ((2 * n) % d == 0 && n % d != 0) f.phi[d] += 1;
    }
    f.phi[2] -= 1;
    if (f.phi[2] == 0) f.phi.erase(2);
    return cache.emplace(n, std::move(f)).first->second;
}

// A product of Kulish brackets and varrho powers kept in factored (exponent)
// form, so that values and square roots are assembled by exponent arithmetic
// over pairwise-coprime cyclotomic factors, without large polynomial gcds.
struct FactorMap {
    std::map<int, int> br;   // bracket n (>= 2) -> exponent
    int rho = 0;

    void bracket(int n, int e) {
        if (n >= 2 && e != 0) {
            int& cur = br[n];
            cur += e;
            if (cur == 0) br.erase(n);
        }
    }
    void factorial(int n, int e) {
        if (n < 0) throw std::domain_error("FactorMap: negative factorial");
        for (int j = 2; j <= n; ++j) bracket(j, e);
    }

    CycloFactors combined() const {
        CycloFactors t;
        auto add = [&](const CycloFactors& f, int e) {
            for (auto& [d, ed] : f.phi) {
                int& cur = t.phi[d];
                cur += ed * e;
                if (cur == 0) t.phi.erase(d);
            }
            t.s_exp += f.s_exp * e;
            if (f.sign < 0 && odd_exp(e)) t.sign = -t.sign;
        };
        for (auto& [n, e] : br) add(bracket_cyclo(n), e);
        CycloFactors rf;
        rf.phi = {{1, -1}, {4, -1}, {8, -1}};
        rf.s_exp = 7;
        rf.sign = -1;
        add(rf, rho);
        return t;
    }

    LaurentRational value() const {
        CycloFactors t = combined();
        SPoly num(Rational(t.sign)), den(Rational(1));
        for (auto& [d, e] : t.phi) {
            SPoly& dst = e > 0 ? num : den;
            for (int i = 0; i < std::abs(e); ++i) dst = dst * cyclo(d);
        }
        return LaurentRational(std::move(num), std::move(den), t.s_exp);
    }

    // Principal square root: the total is positive on s in (0, 1), so the even
    // part multiplies out (sign-corrected to stay positive there) and only the
    // residual square-free kernel goes under the radical.
    Scalar sqrt() const {
        CycloFactors t = combined();
        SPoly out_num(Rational(1)), out_den(Rational(1));
        SPoly ker(Rational(t.sign));
        bool out_negative = false;   // only Phi_1 is negative on (0, 1)
        auto floor2 = [](int e) { return e >= 0 ? e / 2 : -((-e + 1) / 2); };
        for (auto& [d, e] : t.phi) {
            int h = floor2(e);
            SPoly& dst = h > 0 ? out_num : out_den;
            for (int i = 0; i < std::abs(h); ++i) dst = dst * cyclo(d);
            if (e - 2 * h) ker = ker * cyclo(d);
            if (d == 1 && odd_exp(h)) out_negative = !out_negative;
        }
        int h = floor2(t.s_exp);
        if (out_negative) out_num = -out_num;
        LaurentRational out(std::move(out_num), std::move(out_den), h);
        LaurentRational klr(std::move(ker), SPoly(Rational(1)), t.s_exp - 2 * h);
        Scalar result{out};
        if (!klr.is_one()) result = result * sqrt_scalar(Scalar(klr));
        return result;
    }
};

// Radicand of the v-^j action on e^l_m (coefficient of e^l_{m-j}); the sign
// (-1)^((l-m)j + j(j+1)/2) is applied by the caller.
FactorMap lowering_radicand(int l, int m, int j) {
    FactorMap f;
    f.factorial(l + m, 1);
    f.factorial(l - m + j, 1);
    f.factorial(l - m, -1);
    f.factorial(l + m - j, -1);
    f.rho += j;
    return f;
}

} // namespace

namespace {

// Decomposition C = pre * principal-sqrt(rad): pre carries the sign, the
// s-power and the k-sum; rad is the factored radicand.  pre = 0 out of domain.
struct ClosedParts {
    LaurentRational pre;
    FactorMap rad;
};

ClosedParts closed_parts(const CGCQuery& qry) {
    ClosedParts out;
    if (!qry.in_domain()) return out;
    const int l1 = qry.ell1, l2 = qry.ell2, l = qry.ell;
    const int m1 = qry.m1, m2 = qry.m2, m = qry.m(), lam = qry.lambda;

    long sign_exp = static_cast<long>(l1 - l + m2) * (l - m + lam) +
                    static_cast<long>(l1 - l + m2) * (l1 - l + m2 + 1) / 2;
    long s_exp = static_cast<long>(m2) * (m + 1) +
                 (static_cast<long>(l1 - l2) * (l1 + l2 + 1) - static_cast<long>(l) * (l + 1)) / 2;

    out.rad.bracket(2 * l + 1, 1);
    out.rad.factorial(l1 + l2 - l, 1);
    out.rad.factorial(l + m, 1);
    out.rad.factorial(l - m, 1);
    out.rad.factorial(l1 - m1, 1);
    out.rad.factorial(l2 - m2, 1);
    out.rad.factorial(l1 + l2 + l + 1, -1);
    out.rad.factorial(l1 - l2 + l, -1);
    out.rad.factorial(-l1 + l2 + l, -1);
    out.rad.factorial(l1 + m1, -1);
    out.rad.factorial(l2 + m2, -1);

    LaurentRational ksum;
    int k_lo = std::max(0, l - l1 - m2);
    int k_hi = std::min({l - m, l2 - m2, l1 + l - m2});
    for (int k = k_lo; k <= k_hi; ++k) {
        FactorMap f;
        f.factorial(l1 + l - m2 - k, 1);
        f.factorial(l2 + m2 + k, 1);
        f.factorial(k, -1);
        f.factorial(l - m - k, -1);
        f.factorial(l1 - l + m2 + k, -1);
        f.factorial(l2 - m2 - k, -1);
        LaurentRational t = f.value() * LaurentRational::s_power(k * (l + m + 1));
        if (odd_exp(static_cast<long>(k) * (k - 1) / 2 + static_cast<long>(k) * (l1 + l2 - m)))
            t = -t;
        ksum = ksum + t;
    }

    out.pre = LaurentRational::s_power(static_cast<int>(s_exp)) * ksum;
    if (odd_exp(sign_exp)) out.pre = -out.pre;
    return out;
}

// Exact product of two closed-form coefficients without canonicalizing the
// full radicand product.
Scalar closed_product(const ClosedParts& a, const ClosedParts& b) {
    if (a.pre.is_zero() || b.pre.is_zero()) return Scalar(0);
    FactorMap comb = a.rad;
    for (auto& [n, e] : b.rad.br) comb.bracket(n, e);
    comb.rho += b.rad.rho;
    return Scalar(a.pre * b.pre) * comb.sqrt();
}

} // namespace

bool CGCQuery::in_domain() const {
    if (ell1 < 0 || ell2 < 0 || ell < 0) return false;
    if (ell < std::abs(ell1 - ell2) || ell > ell1 + ell2) return false;
    if (std::abs(m1) > ell1 || std::abs(m2) > ell2) return false;
    return std::abs(m()) <= ell;
}

Scalar cgc_closed(const CGCQuery& qry) {
    ClosedParts p = closed_parts(qry);
    if (p.pre.is_zero()) return Scalar(0);
    return Scalar(p.pre) * p.rad.sqrt();
}

std::map<std::pair<int, int>, Scalar> cgc_lowering_vector(int ell1, int ell2, int ell,
                                                          int m, int lambda) {
    std::map<std::pair<int, int>, Scalar> out;
    if (ell < std::abs(ell1 - ell2) || ell > ell1 + ell2 || std::abs(m) > ell) return out;
    const int n = ell - m;

    // Highest-weight normalization A_{l1, l - l1}: radicand and s-exponent.
    // The q-exponent is -(-l1+l2+l+1)(l1+l2-l)/4; the product in the numerator
    // is always even, and it vanishes at l = l1+l2 so the top coefficient is 1.
    FactorMap hw_rad;
    hw_rad.factorial(2 * ell + 1, 1);
    hw_rad.factorial(2 * ell1, 1);
    hw_rad.factorial(ell1 + ell2 + ell + 1, -1);
    hw_rad.factorial(ell1 - ell2 + ell, -1);
    long hw_s2 = -static_cast<long>(-ell1 + ell2 + ell + 1) * (ell1 + ell2 - ell);
    if (hw_s2 % 2 != 0) throw std::logic_error("cgc_lowering_vector: odd s exponent");

    // Overall normalization of the lowered vector (sign (-1)^(n(n+1)/2)).
    FactorMap norm_rad;
    norm_rad.factorial(ell + m, 1);
    norm_rad.factorial(2 * ell, -1);
    norm_rad.factorial(n, -1);
    norm_rad.rho -= n;

    for (int m1 = std::max(-ell1, ell - ell2); m1 <= ell1; ++m1) {
        int m2 = ell - m1;   // highest-weight support: m1 + m2 = ell
        // Recurrence solution for the highest-weight coefficient.
        FactorMap a_rad = hw_rad;
        a_rad.factorial(ell1 + ell2 - ell, 1);
        a_rad.factorial(ell1 + m1, 1);
        a_rad.factorial(ell2 + m2, 1);
        a_rad.factorial(ell2 - ell1 + ell, -1);
        a_rad.factorial(2 * ell1, -1);
        a_rad.factorial(ell1 - m1, -1);
        a_rad.factorial(ell2 - m2, -1);
        long a_sign = static_cast<long>(lambda) * (ell1 - m1) +
                      static_cast<long>(ell1 - m1) * (ell1 - m1 + 1) / 2;

        // Apply Delta(v-^n) with the graded binomial expansion.
        for (int k = 0; k <= n; ++k) {
            int j = n - k;                       // v- power on the left factor
            if (m1 - j < -ell1 || m2 - k < -ell2) continue;

            FactorMap rad = a_rad;
            for (auto& [b, e] : norm_rad.br) rad.bracket(b, e);
            rad.rho += norm_rad.rho;
            FactorMap left = lowering_radicand(ell1, m1, j);
            FactorMap right = lowering_radicand(ell2, m2, k);
            for (auto& [b, e] : left.br) rad.bracket(b, e);
            for (auto& [b, e] : right.br) rad.bracket(b, e);
            rad.rho += left.rho + right.rho;     // j + k - n = 0 overall

            FactorMap binom;                     // [n]! / ([n-k]! [k]!)
            binom.factorial(n, 1);
            binom.factorial(n - k, -1);
            binom.factorial(k, -1);

            int s_exp = static_cast<int>(hw_s2 / 2 + (ell + 1) * (ell1 - m1) +
                                         k * m1 + (k - n) * m2);
            Scalar term = Scalar(binom.value() * LaurentRational::s_power(s_exp)) *
                          rad.sqrt();
            long extra = static_cast<long>(n) * (n + 1) / 2 + a_sign +
                         static_cast<long>(ell1 - m1) * j +
                         static_cast<long>(j) * (j + 1) / 2 +
                         static_cast<long>(ell2 - m2) * k +
                         static_cast<long>(k) * (k + 1) / 2 +
                         static_cast<long>(k) * (n - k) +
                         static_cast<long>(k) * (ell1 - m1 + lambda);
            if (odd_exp(extra)) term = -term;
            auto key = std::make_pair(m1 - j, m2 - k);
            auto it = out.find(key);
            if (it == out.end()) out[key] = term;
            else {
                it->second += term;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

Scalar cgc_lowering(const CGCQuery& qry) {
    if (!qry.in_domain()) return Scalar(0);
    auto vec = cgc_lowering_vector(qry.ell1, qry.ell2, qry.ell, qry.m(), qry.lambda);
    auto it = vec.find({qry.m1, qry.m2});
    return it == vec.end() ? Scalar(0) : it->second;
}

CGCTable cgc_table(int ell1, int ell2, int ell, int lambda) {
    CGCTable t{ell1, ell2, ell, lambda, {}, {}};
    for (int m1 = -ell1; m1 <= ell1; ++m1)
        for (int m2 = -ell2; m2 <= ell2; ++m2) {
            Scalar v = cgc_closed({ell1, ell2, ell, m1, m2, lambda});
            if (!v.is_zero()) t.entries[{m1, m2}] = v;
        }
    // Registered display factors from the appendix layouts; keys are |m|.
    auto set_rows = [&](std::initializer_list<const char*> by_abs_m) {
        int am = 0;
        for (const char* expr : by_abs_m) {
            Scalar v = parse_scalar(expr);
            t.row_factors[am] = v;
            if (am > 0) t.row_factors[-am] = v;
            ++am;
        }
    };
    if (ell1 == 1 && ell2 == 1) {
        if (ell == 2) set_rows({"[2]/sqrt([4]!)", "sqrt([2]/[4])", "1"});
        else if (ell == 1) set_rows({"sqrt([2]/[4])", "sqrt([2]/[4])"});
        else if (ell == 0) set_rows({"1/sqrt([3])"});
    } else if (ell1 == 2 && ell2 == 2) {
        if (ell == 4)
            set_rows({"[4]!/sqrt([8]!)", "sqrt([5]!/[8]!)", "sqrt([3]*[4]/([7]*[8]))",
                      "sqrt([4]/[8])", "1"});
        else if (ell == 3)
            set_rows({"sqrt([7]/[8]!)*[4]!", "sqrt([7]*[3]/[8]!)*[4]!",
                      "sqrt([4]!/([6]*[8]))", "sqrt([4]/[8])"});
        else if (ell == 2)
            set_rows({"sqrt([3]*[4]/([6]*[7]))", "sqrt([3]*[4]/([6]*[7]))",
                      "sqrt([3]*[4]/([6]*[7]))"});
        else if (ell == 1)
            set_rows({"sqrt([3]*[4]/([5]*[6]))", "sqrt([3]!/([5]*[6]))"});
        else if (ell == 0)
            set_rows({"1/sqrt([5])"});
    }
    return t;
}

bool verify_orthogonality(int ell1, int ell2, int lambda) {
    const int lmin = std::abs(ell1 - ell2), lmax = ell1 + ell2;
    std::map<int, std::map<std::pair<int, int>, ClosedParts>> C;
    for (int l = lmin; l <= lmax; ++l)
        for (int m1 = -ell1; m1 <= ell1; ++m1)
            for (int m2 = -ell2; m2 <= ell2; ++m2)
                C[l][{m1, m2}] = closed_parts({ell1, ell2, l, m1, m2, lambda});

    // First relation: sum over (m1, m2).
    for (int lp = lmin; lp <= lmax; ++lp)
        for (int l = lmin; l <= lmax; ++l)
            for (int mp = -lp; mp <= lp; ++mp)
                for (int m = -l; m <= l; ++m) {
                    Scalar sum;
                    for (int m1 = -ell1; m1 <= ell1; ++m1) {
                        int m2 = m - m1;
                        if (std::abs(m2) > ell2 || m1 + m2 != mp) continue;
                        Scalar t = closed_product(C[lp][{m1, m2}], C[l][{m1, m2}]);
                        if (odd_exp(static_cast<long>(ell1 - m1 + lambda) *
                                    (ell2 - m2 + lambda)))
                            t = -t;
                        sum += t;
                    }
                    Scalar expect;
                    if (lp == l && mp == m) {
                        expect = Scalar(1);
                        if (odd_exp(static_cast<long>(l - m + lambda) *
                                    (ell1 + ell2 + l + lambda)))
                            expect = -expect;
                    }
                    if (!(sum == expect)) return false;
                }

    // Second relation: sum over (l, m); and the lambda-free inversion formula.
    for (int m1p = -ell1; m1p <= ell1; ++m1p)
        for (int m2p = -ell2; m2p <= ell2; ++m2p)
            for (int m1 = -ell1; m1 <= ell1; ++m1)
                for (int m2 = -ell2; m2 <= ell2; ++m2) {
                    if (m1p + m2p != m1 + m2) continue;   // both sums vanish trivially
                    int m = m1 + m2;
                    Scalar sum, inv_sum;
                    for (int l = std::max(lmin, std::abs(m)); l <= lmax; ++l) {
                        Scalar t = closed_product(C[l][{m1p, m2p}], C[l][{m1, m2}]);
                        Scalar u = t;
                        if (odd_exp(static_cast<long>(l - m + lambda) *
                                    (ell1 + ell2 + l + lambda)))
                            t = -t;
                        if (odd_exp(static_cast<long>(l - m) * (ell1 + ell2 + l)))
                            u = -u;
                        sum += t;
                        inv_sum += u;
                    }
                    Scalar expect, inv_expect;
                    if (m1p == m1 && m2p == m2) {
                        expect = Scalar(1);
                        if (odd_exp(static_cast<long>(ell1 - m1 + lambda) *
                                    (ell2 - m2 + lambda)))
                            expect = -expect;
                        inv_expect = Scalar(1);
                        if (odd_exp(static_cast<long>(ell1 - m1) * (ell2 - m2)))
                            inv_expect = -inv_expect;
                    }
                    if (!(sum == expect)) return false;
                    if (!(inv_sum == inv_expect)) return false;
                }
    return true;
}

bool verify_coupled_transform(int ell1, int ell2, int ell, int lambda) {
    if (ell < std::abs(ell1 - ell2) || ell > ell1 + ell2)
        throw std::domain_error("verify_coupled_transform: triangle condition");
    const int d1 = 2 * ell1 + 1, d2 = 2 * ell2 + 1;
    const int dim = d1 * d2;

    // Coupled vectors w_m in the tensor basis.
    std::vector<std::vector<Scalar>> w(2 * ell + 1, std::vector<Scalar>(dim));
    for (int im = 0; im <= 2 * ell; ++im) {
        int m = ell - im;
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d2; ++j)
                if ((ell1 - i) + (ell2 - j) == m)
                    w[im][i * d2 + j] =
                        cgc_closed({ell1, ell2, ell, ell1 - i, ell2 - j, lambda});
        // pseudo-norm check
        Scalar norm;
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d2; ++j) {
                Scalar t = w[im][i * d2 + j] * w[im][i * d2 + j];
                if (odd_exp(static_cast<long>(ell1 - (ell1 - i) + lambda) *
                            (ell2 - (ell2 - j) + lambda)))
                    t = -t;
                norm += t;
            }
        Scalar expect(1);
        if (odd_exp(static_cast<long>(ell - m + lambda) * (ell1 + ell2 + ell + lambda)))
            expect = -expect;
        if (!(norm == expect)) return false;
    }

    // Transformation: Delta(g) w_m = sum_mp D^ell(g)_{mp m} w_mp.
    for (Gen g : {Gen::K, Gen::Kinv, Gen::Vplus, Gen::Vminus}) {
        GradedMatrix big = tensor_rep(g, ell1, ell2, lambda);
        GradedMatrix small = rep_generator(g, ell, lambda);
        for (int im = 0; im <= 2 * ell; ++im) {
            for (int row = 0; row < dim; ++row) {
                Scalar lhs;
                for (int colv = 0; colv < dim; ++colv)
                    if (!w[im][colv].is_zero()) lhs += big.at(row, colv) * w[im][colv];
                Scalar rhs;
                for (int imp = 0; imp <= 2 * ell; ++imp)
                    if (!small.at(imp, im).is_zero())
                        rhs += w[imp][row] * small.at(imp, im);
                if (!(lhs == rhs)) return false;
            }
        }
    }
    return true;
}

std::string emit_table(int ell1, int ell2, int lambda, const std::string& format) {
    if (format != "json" && format != "csv" && format != "latex")
        throw std::domain_error("emit_table: unknown format " + format);
    std::ostringstream out;
    bool json = format == "json";
    if (json) out << "[\n";
    bool first_tab = true;
    for (int l = ell1 + ell2; l >= std::abs(ell1 - ell2); --l) {
        CGCTable t = cgc_table(ell1, ell2, l, lambda);
        if (json) {
            if (!first_tab) out << ",\n";
            out << "  {\"ell1\": " << ell1 << ", \"ell2\": " << ell2 << ", \"ell\": " << l
                << ", \"lambda\": " << lambda << ", \"entries\": {";
            bool first = true;
            for (auto& [key, v] : t.entries) {
                if (!first) out << ", ";
                first = false;
                out << "\"" << key.first << "," << key.second << "\": \"" << v.to_string()
                    << "\"";
            }
            out << "}}";
        } else if (format == "csv") {
            out << "ell1,ell2,ell,lambda,m1,m2,value\n";
            for (auto& [key, v] : t.entries)
                out << ell1 << "," << ell2 << "," << l << "," << lambda << "," << key.first
                    << "," << key.second << ",\"" << v.to_string() << "\"\n";
        } else {
            // latex layout: rows m, columns m1, optional OF column
            bool has_of = !t.row_factors.empty();
            out << "% CGC table ell1=" << ell1 << " ell2=" << ell2 << " ell=" << l
                << " lambda=" << lambda << "\n\\begin{array}{c|";
            for (int i = 0; i < 2 * ell1 + 1; ++i) out << "c";
            out << (has_of ? "|c}" : "}") << "\n m ";
            for (int m1 = ell1; m1 >= -ell1; --m1) out << "& m_1 = " << m1 << " ";
            if (has_of) out << "& \\mathrm{OF} ";
            out << "\\\\\n\\hline\n";
            for (int m = l; m >= -l; --m) {
                out << m << " ";
                Scalar of = has_of && t.row_factors.count(m) ? t.row_factors[m] : Scalar(1);
                for (int m1 = ell1; m1 >= -ell1; --m1) {
                    auto it = t.entries.find({m1, m - m1});
                    Scalar shown = it == t.entries.end() ? Scalar(0) : it->second / of;
                    out << "& " << shown.to_string() << " ";
                }
                if (has_of) out << "& " << of.to_string() << " ";
                out << "\\\\\n";
            }
            out << "\\end{array}\n";
        }
        first_tab = false;
    }
    if (json) out << "\n]\n";
    return out.str();
}

} // namespace ospq
