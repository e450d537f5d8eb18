#include "shrinker/calculus.hpp"
#include "shrinker/linsolve.hpp"

#include <stdexcept>

namespace shrinker {

namespace {

BigRat inv_rsq(const RadicalField& f, int b) { return BigRat(1, 2 * (b == 1 ? f.k1 : f.k2)); }

RadicalScalar inv_r(const RadicalField& f, int b) { return RadicalScalar::r(f, b) * inv_rsq(f, b); }

void require_no_flat(const NormalField& V, const char* op) {
    if (V.has_flat_part())
        throw std::invalid_argument(std::string(op) + ": fields with flat normal components are not supported");
}

}  // namespace

SpherePoly tangential_gradient_pair(const SpherePoly& p, const SpherePoly& q, int factor) {
    const auto& f = p.field();
    SpherePoly out(f);
    for (int i = p.var_begin(factor); i < p.var_end(factor); ++i) out += p.partial(i) * q.partial(i);
    out -= p.euler(factor) * q.euler(factor) * inv_rsq(f, factor);
    return out;
}

SpherePoly gradient_pair(const SpherePoly& p, const SpherePoly& q) {
    return tangential_gradient_pair(p, q, 1) + tangential_gradient_pair(p, q, 2);
}

std::vector<SpherePoly> tangential_gradient(const SpherePoly& q, int factor) {
    const auto& f = q.field();
    std::vector<SpherePoly> g(q.nvars(), SpherePoly(f));
    for (int b = 1; b <= 2; ++b) {
        if (factor && factor != b) continue;
        SpherePoly e = q.euler(b) * inv_rsq(f, b);
        for (int i = q.var_begin(b); i < q.var_end(b); ++i) {
            Mono m{};
            m[i] = 1;
            SpherePoly xi(f);
            xi.add_term(m, RadicalScalar(f, 1));
            g[i] = q.partial(i) - e * xi;
        }
    }
    return g;
}

SpherePoly factor_laplacian(const SpherePoly& p, int factor) {
    const auto& f = p.field();
    const int k = factor == 1 ? f.k1 : f.k2;
    const BigRat rho = inv_rsq(f, factor);
    const int lo = p.var_begin(factor), hi = p.var_end(factor);
    SpherePoly out(f);
    for (const auto& [m, c] : p.terms()) {
        int d = 0;
        for (int i = lo; i < hi; ++i) {
            d += m[i];
            if (m[i] >= 2) {
                Mono t = m;
                t[i] -= 2;
                out.add_term(t, c * BigRat(m[i] * (m[i] - 1)));
            }
        }
        if (d) out.add_term(m, c * BigRat(-rho * d * (d + k - 1)));
    }
    return out;
}

SpherePoly laplace_beltrami(const SpherePoly& p) { return factor_laplacian(p, 1) + factor_laplacian(p, 2); }

SpherePoly hessian_contract(const SpherePoly& p, const SpherePoly& q1, const SpherePoly& q2) {
    const auto& f = p.field();
    auto g1 = tangential_gradient(q1);
    auto g2 = tangential_gradient(q2);
    SpherePoly out(f);
    for (int i = 0; i < p.nvars(); ++i) {
        if (g1[i].has_zero_representative()) continue;
        SpherePoly pi = p.partial(i);
        if (pi.has_zero_representative()) continue;
        SpherePoly row(f);
        for (int j = 0; j < p.nvars(); ++j) {
            if (g2[j].has_zero_representative()) continue;
            SpherePoly pij = pi.partial(j);
            if (!pij.has_zero_representative()) row += pij * g2[j];
        }
        out += row * g1[i];
    }
    for (int b = 1; b <= 2; ++b) {
        SpherePoly pair(f);
        for (int i = p.var_begin(b); i < p.var_end(b); ++i) pair += g1[i] * g2[i];
        out -= p.euler(b) * pair * inv_rsq(f, b);
    }
    return out;
}

NormalField apply_L(const NormalField& V) {
    NormalField out = V;
    out.u1 = laplace_beltrami(V.u1) + V.u1;
    out.u2 = laplace_beltrami(V.u2) + V.u2;
    for (std::size_t i = 0; i < V.z.size(); ++i) out.z[i] = laplace_beltrami(V.z[i]) + V.z[i] * BigRat(1, 2);
    return out;
}

NormalField d2phi_normal(const NormalField& V, const NormalField& W, D2Variant variant) {
    require_no_flat(V, "d2phi_normal");
    require_no_flat(W, "d2phi_normal");
    const auto& f = V.field();
    NormalField out(f);
    for (int b = 1; b <= 2; ++b) {
        const RadicalScalar two_over_rb = inv_r(f, b) * BigRat(2);
        SpherePoly acc = -(V.u(b) * W.u(b)) * inv_r(f, b);
        for (int a = 1; a <= 2; ++a) {
            const RadicalScalar two_over_ra = inv_r(f, a) * BigRat(2);
            acc += tangential_gradient_pair(V.u(a), W.u(a), b) * two_over_rb;
            // The Laplacian lives on factor a, so the curvature weight is 2/r_a; the printed
            // variant weights it by 2/r_b, which only differs when k1 != k2.
            const RadicalScalar& lap_weight = variant == D2Variant::Printed ? two_over_rb : two_over_ra;
            acc -= (W.u(a) * factor_laplacian(V.u(b), a) + V.u(a) * factor_laplacian(W.u(b), a)) * lap_weight;
            acc -= (tangential_gradient_pair(V.u(b), W.u(a), a) + tangential_gradient_pair(W.u(b), V.u(a), a)) *
                   two_over_ra;
        }
        out.u(b) = std::move(acc);
    }
    return out;
}

NormalField d3phi_normal(const NormalField& V) {
    require_no_flat(V, "d3phi_normal");
    const auto& f = V.field();
    NormalField out(f);
    for (int b = 1; b <= 2; ++b) {
        const SpherePoly& ub = V.u(b);
        out.u(b) += ub * ub * ub * BigRat(3) * inv_rsq(f, b);
    }
    for (int a = 1; a <= 2; ++a) {
        const SpherePoly& ua = V.u(a);
        for (int b = 1; b <= 2; ++b) {
            const SpherePoly& ub = V.u(b);
            const BigRat rho_b = inv_rsq(f, b);
            SpherePoly full_ab = gradient_pair(ua, ub);
            out.u(b) -= ua * full_ab * BigRat(6);
            out.u(b) -= tangential_gradient_pair(ua, ua, b) * ub * BigRat(18 * rho_b);
            out.u(a) += ub * ub * factor_laplacian(ua, b) * BigRat(18 * rho_b);
            out.u(a) -= hessian_contract(ua, ub, ub) * BigRat(6);
            out.u(a) += ub * tangential_gradient_pair(ub, ua, b) * BigRat(36 * rho_b);
            out.u(a) -= full_ab * laplace_beltrami(ub) * BigRat(6);
        }
    }
    return out;
}

RadicalScalar l2_inner(const NormalField& V, const NormalField& W) {
    RadicalScalar acc = (V.u1 * W.u1).integrate() + (V.u2 * W.u2).integrate();
    std::size_t n = std::min(V.z.size(), W.z.size());
    for (std::size_t i = 0; i < n; ++i) acc += (V.z[i] * W.z[i]).integrate();
    return acc;
}

Projector::Projector(std::vector<NormalField> basis) : basis_(std::move(basis)) {
    const std::size_t n = basis_.size();
    if (n == 0) return;
    const auto& f = basis_[0].field();
    gram_.assign(n, std::vector<RadicalScalar>(n, RadicalScalar(f)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            gram_[i][j] = l2_inner(basis_[i], basis_[j]);
            gram_[j][i] = gram_[i][j];
            if (i != j && !gram_[i][j].is_zero()) diagonal_ = false;
        }
        if (gram_[i][i].is_zero()) throw std::logic_error("Projector: basis element with zero norm");
    }
}

std::vector<RadicalScalar> Projector::coefficients(const NormalField& V) const {
    const std::size_t n = basis_.size();
    std::vector<RadicalScalar> rhs;
    rhs.reserve(n);
    for (const auto& b : basis_) rhs.push_back(l2_inner(V, b));
    if (diagonal_) {
        for (std::size_t i = 0; i < n; ++i)
            if (!rhs[i].is_zero()) rhs[i] = rhs[i] / gram_[i][i];
        return rhs;
    }
    auto x = solve_linear(gram_, rhs);
    if (!x) throw std::logic_error("Projector: singular Gram matrix");
    return *x;
}

NormalField Projector::apply(const NormalField& V) const {
    NormalField out(V.field(), static_cast<int>(V.z.size()));
    auto c = coefficients(V);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!c[i].is_zero()) out += basis_[i] * c[i];
    return out;
}

JacobiBasis jacobi_basis(int k1, int k2, int N) {
    if (N < k1 + k2 + 2) throw std::invalid_argument("jacobi_basis: N must be at least k1 + k2 + 2");
    const auto& f = RadicalField::get(k1, k2);
    const int flat = N - (k1 + k2 + 2);
    JacobiBasis jb{k1, k2, N, {}, {}, {}, {}, {}, {}};
    const RadicalScalar r1 = RadicalScalar::r1(f), r2 = RadicalScalar::r2(f);
    for (int i = 0; i <= k1; ++i) {
        for (int j = 0; j <= k2; ++j) {
            SpherePoly xy = SpherePoly::coord(f, 1, i) * SpherePoly::coord(f, 2, j);
            SpherePoly zero(f);
            std::vector<SpherePoly> z(flat, zero);
            jb.K.emplace_back(xy, zero, z);
            jb.K.emplace_back(zero, xy, z);
            // normal part of the rotation x_i d/dy_j - y_j d/dx_i, up to scale
            jb.K0.emplace_back(xy * r2, -(xy * r1), z);
            jb.K1.emplace_back(xy * r1, xy * r2, z);
        }
    }
    for (int alpha = 0; alpha < flat; ++alpha) {
        for (int b = 1; b <= 2; ++b) {
            int n = b == 1 ? k1 + 1 : k2 + 1;
            for (int i = 0; i < n; ++i) {
                NormalField V(f, flat);
                V.z[alpha] = SpherePoly::coord(f, b, i);
                jb.K.push_back(V);
                jb.K0.push_back(V);
            }
        }
    }
    jb.PK = Projector(jb.K);
    jb.PK0 = Projector(jb.K0);
    jb.PK1 = Projector(jb.K1);
    return jb;
}

NormalField project_K(const NormalField& V, const JacobiBasis& basis, Subspace which) {
    switch (which) {
        case Subspace::K: return basis.PK.apply(V);
        case Subspace::K0: return basis.PK0.apply(V);
        case Subspace::K1: return basis.PK1.apply(V);
    }
    throw std::logic_error("project_K: bad subspace");
}

NormalField k1_field(const RadicalField& f, const std::vector<std::vector<BigRat>>& c) {
    SpherePoly u(f);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c[i].size(); ++j)
            if (c[i][j] != 0) u += SpherePoly::coord(f, 1, i) * SpherePoly::coord(f, 2, j) * c[i][j];
    return NormalField(u * RadicalScalar::r1(f), u * RadicalScalar::r2(f));
}

SpherePoly diagonal_u(const RadicalField& f, const std::vector<BigRat>& a) {
    if (static_cast<int>(a.size()) > std::min(f.k1, f.k2) + 1)
        throw std::invalid_argument("diagonal coefficients: more than min(k1,k2)+1 entries");
    SpherePoly u(f);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) u += SpherePoly::coord(f, 1, i) * SpherePoly::coord(f, 2, i) * a[i];
    return u;
}

NormalField k1_field_diagonal(const RadicalField& f, const std::vector<BigRat>& a) {
    SpherePoly u = diagonal_u(f, a);
    return NormalField(u * RadicalScalar::r1(f), u * RadicalScalar::r2(f));
}

SvdResult svd_diagonalize(const std::vector<std::vector<BigRat>>& c, long max_den) {
    const Eigen::Index m = static_cast<Eigen::Index>(c.size());
    const Eigen::Index n = m ? static_cast<Eigen::Index>(c[0].size()) : 0;
    Eigen::MatrixXd C(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (static_cast<Eigen::Index>(c[i].size()) != n) throw std::invalid_argument("svd_diagonalize: ragged matrix");
        for (Eigen::Index j = 0; j < n; ++j) C(i, j) = c[i][j].get_d();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out;
    out.R1 = svd.matrixU().transpose();
    out.R2 = svd.matrixV().transpose();
    const auto& s = svd.singularValues();
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(m, n);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        out.a.push_back(s(i));
        out.a_rational.push_back(snap_to_rational(s(i), max_den));
        D(i, i) = s(i);
    }
    out.residual = (C - out.R1.transpose() * D * out.R2).norm();
    return out;
}

}  // namespace shrinker
