#include "ospq/urep.hpp"

#include <stdexcept>

namespace ospq {

int gen_parity(Gen g) { return (g == Gen::Vplus || g == Gen::Vminus) ? 1 : 0; }

std::vector<int> basis_parities(int ell, int lambda) {
    std::vector<int> p(2 * ell + 1);
    for (int i = 0; i <= 2 * ell; ++i) p[i] = (i + lambda) % 2;
    return p;
}

GradedMatrix rep_generator(Gen g, int ell, int lambda) {
    if (ell < 0 || (lambda != 0 && lambda != 1))
        throw std::domain_error("rep_generator: invalid label");
    auto par = basis_parities(ell, lambda);
    GradedMatrix mat(par, par);
    mat.label = GradedMatrix::Label{-1, ell, lambda};
    for (int i = 0; i <= 2 * ell; ++i) {
        int m = ell - i;
        switch (g) {
            case Gen::K:
                mat.at(i, i) = Scalar::s_power(m);
                break;
            case Gen::Kinv:
                mat.at(i, i) = Scalar::s_power(-m);
                break;
            case Gen::Vplus:
                if (m < ell)
                    mat.at(i - 1, i) =
                        sqrt_scalar(kulish(ell - m) * kulish(ell + m + 1) * varrho());
                break;
            case Gen::Vminus:
                if (m > -ell) {
                    Scalar v = sqrt_scalar(kulish(ell + m) * kulish(ell - m + 1) * varrho());
                    if (((ell - m - 1) % 2 + 2) % 2) v = -v;
                    mat.at(i + 1, i) = v;
                }
                break;
        }
    }
    return mat;
}

Scalar casimir_eigenvalue(int ell) {
    Scalar num = Scalar::s_power(2 * ell + 1) - Scalar::s_power(-2 * ell - 1);
    Scalar den = Scalar::q_power(4) - Scalar::q_power(-4);
    Scalar v = num / den;
    return v * v;
}

GradedMatrix casimir(int ell, int lambda) {
    GradedMatrix K = rep_generator(Gen::K, ell, lambda);
    GradedMatrix Ki = rep_generator(Gen::Kinv, ell, lambda);
    GradedMatrix vp = rep_generator(Gen::Vplus, ell, lambda);
    GradedMatrix vm = rep_generator(Gen::Vminus, ell, lambda);
    GradedMatrix K2 = K * K, Ki2 = Ki * Ki;

    Scalar d = (Scalar::q_power(4) - Scalar::q_power(-4)).inverse();
    GradedMatrix first = (K2 * Scalar::s_power(1) - Ki2 * Scalar::s_power(-1)) * d;
    first = first * first;

    Scalar mid_den = ((Scalar::q_power(1) + Scalar::q_power(-1)) *
                      (Scalar::q_power(2) + Scalar::q_power(-2))).inverse();
    GradedMatrix mid = (K2 * Scalar::q_power(1) + Ki2 * Scalar::q_power(-1)) * mid_den;
    mid = mid * (vm * vp);

    GradedMatrix last = (vm * vm) * (vp * vp) * (varpi() * varpi());

    GradedMatrix c = first - mid - last;
    c.label = GradedMatrix::Label{-1, ell, lambda};
    return c;
}

bool check_defining_relations(const GradedMatrix& K, const GradedMatrix& Kinv,
                              const GradedMatrix& vp, const GradedMatrix& vm) {
    GradedMatrix id = GradedMatrix::identity(K.row_parities());
    if (!(K * Kinv == id) || !(Kinv * K == id)) return false;
    if (!(K * vp == vp * K * Scalar::s_power(1))) return false;
    if (!(K * vm == vm * K * Scalar::s_power(-1))) return false;
    Scalar d = (Scalar::q_power(4) - Scalar::q_power(-4)).inverse();
    GradedMatrix rhs = (K * K - Kinv * Kinv) * (-d);
    return vp * vm + vm * vp == rhs;
}

bool verify_defining_relations(int ell, int lambda) {
    return check_defining_relations(rep_generator(Gen::K, ell, lambda),
                                    rep_generator(Gen::Kinv, ell, lambda),
                                    rep_generator(Gen::Vplus, ell, lambda),
                                    rep_generator(Gen::Vminus, ell, lambda));
}

GradedMatrix graded_adjoint(const GradedMatrix& a, int op_parity) {
    GradedMatrix r(a.col_parities(), a.row_parities());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Scalar v = a.at(j, i);
            if (op_parity && a.row_parity(j)) v = -v;
            r.at(i, j) = v;
        }
    return r;
}

bool verify_grade_star(int ell, int lambda) {
    int eps = (lambda + 1) % 2;
    GradedMatrix K = rep_generator(Gen::K, ell, lambda);
    GradedMatrix vp = rep_generator(Gen::Vplus, ell, lambda);
    GradedMatrix vm = rep_generator(Gen::Vminus, ell, lambda);
    if (!(graded_adjoint(K, 0) == K)) return false;
    // v+-^* = +-(-1)^eps v-+
    GradedMatrix vp_exp = eps ? -vm : vm;
    GradedMatrix vm_exp = eps ? vp : -vp;
    return graded_adjoint(vp, 1) == vp_exp && graded_adjoint(vm, 1) == vm_exp;
}

GradedMatrix tensor_rep(Gen g, int ell1, int ell2, int lambda) {
    GradedMatrix K1 = rep_generator(Gen::K, ell1, lambda);
    GradedMatrix K2 = rep_generator(Gen::K, ell2, lambda);
    GradedMatrix result;
    switch (g) {
        case Gen::K:
            result = GradedMatrix::kron(K1, K2, 0);
            break;
        case Gen::Kinv:
            result = GradedMatrix::kron(rep_generator(Gen::Kinv, ell1, lambda),
                                        rep_generator(Gen::Kinv, ell2, lambda), 0);
            break;
        case Gen::Vplus:
        case Gen::Vminus: {
            GradedMatrix v1 = rep_generator(g, ell1, lambda);
            GradedMatrix v2 = rep_generator(g, ell2, lambda);
            result = GradedMatrix::kron(v1, rep_generator(Gen::Kinv, ell2, lambda), 0) +
                     GradedMatrix::kron(K1, v2, 1);
            break;
        }
    }
    result.label = GradedMatrix::Label{ell1, ell2, lambda};
    return result;
}

} // namespace ospq
