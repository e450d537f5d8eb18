#include "shrinker/numeric.hpp"
#include "shrinker/calculus.hpp"
#include "shrinker/obstruction.hpp"
#include "shrinker/simd.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace shrinker::numeric {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sphere_area(int k, double r) { return 2 * std::pow(kPi, (k + 1) / 2.0) / std::tgamma((k + 1) / 2.0) * std::pow(r, k); }

// Householder reflection swapping e_last and w (row-major m x m)
std::vector<double> reflector(const std::vector<double>& w) {
    const std::size_t m = w.size();
    std::vector<double> H(m * m, 0.0), v(w.size());
    for (std::size_t i = 0; i < m; ++i) v[i] = (i + 1 == m ? 1.0 : 0.0) - w[i];
    double vv = 0;
    for (double x : v) vv += x * x;
    for (std::size_t i = 0; i < m; ++i) {
        H[i * m + i] = 1;
        if (vv > 1e-24)
            for (std::size_t j = 0; j < m; ++j) H[i * m + j] -= 2 * v[i] * v[j] / vv;
    }
    return H;
}

std::vector<std::pair<std::vector<double>, double>> gauss_legendre(int m) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) J(k, k - 1) = J(k - 1, k) = k / std::sqrt(4.0 * k * k - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    std::vector<std::pair<std::vector<double>, double>> out;
    for (int i = 0; i < m; ++i) {
        double v0 = es.eigenvectors()(0, i);
        out.push_back({{es.eigenvalues()(i)}, v0 * v0});  // weights sum to 1
    }
    return out;
}

double radical_inverse(std::uint64_t i, int base) {
    double f = 1, r = 0;
    while (i) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

// quadrature rule on the unit sphere S^k, weights summing to 1
std::vector<std::pair<std::vector<double>, double>> sphere_rule(int k, int resolution) {
    std::vector<std::pair<std::vector<double>, double>> out;
    if (k == 1) {
        for (int j = 0; j < resolution; ++j) {
            double t = 2 * kPi * (j + 0.5) / resolution;
            out.push_back({{std::cos(t), std::sin(t)}, 1.0 / resolution});
        }
    } else if (k == 2) {
        for (const auto& [z, wz] : gauss_legendre(std::max(2, resolution / 2))) {
            double rho = std::sqrt(std::max(0.0, 1 - z[0] * z[0]));
            for (int j = 0; j < resolution; ++j) {
                double t = 2 * kPi * (j + 0.5) / resolution;
                out.push_back({{rho * std::cos(t), rho * std::sin(t), z[0]}, wz / resolution});
            }
        }
    } else {
        static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
        if (k + 1 > 16) throw std::invalid_argument("sphere_rule: dimension too large");
        const int count = resolution * resolution;
        for (int i = 0; i < count; ++i) {
            std::vector<double> v(k + 1);
            double nn = 0;
            for (int c = 0; c <= k; ++c) {
                double u = radical_inverse(static_cast<std::uint64_t>(i) + 1, primes[c]);
                v[c] = std::sqrt(2.0) * boost::math::erf_inv(2 * u - 1);
                nn += v[c] * v[c];
            }
            for (double& x : v) x /= std::sqrt(nn);
            out.push_back({std::move(v), 1.0 / count});
        }
    }
    return out;
}

}  // namespace

Product::Product(int k1_, int k2_, int N_) : k1(k1_), k2(k2_), N(N_), r1(std::sqrt(2.0 * k1_)), r2(std::sqrt(2.0 * k2_)) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("Product: k1, k2 must be >= 1");
    if (N < k1 + k2 + 2) throw std::invalid_argument("Product: N must be >= k1 + k2 + 2");
}

double Product::area() const { return sphere_area(k1, r1) * sphere_area(k2, r2); }

std::vector<double> sphere_coords(const Product& P, const SamplePoint& p) {
    std::vector<double> x;
    for (double w : p.w1) x.push_back(P.r1 * w);
    for (double w : p.w2) x.push_back(P.r2 * w);
    return x;
}

CompiledPoly::CompiledPoly(const SpherePoly& p) {
    for (const auto& [m, c] : p.terms()) {
        Term t{c.to_double(), {}};
        for (int i = 0; i < kMaxVars; ++i)
            if (m[i]) t.powers.emplace_back(i, m[i]);
        terms_.push_back(std::move(t));
    }
}

double CompiledPoly::operator()(const double* x) const {
    double sum = 0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (const auto& [i, e] : t.powers)
            for (int k = 0; k < e; ++k) v *= x[i];
        sum += v;
    }
    return sum;
}

CompiledField::CompiledField(const NormalField& V) : u1(V.u1), u2(V.u2) {
    for (const auto& z0 : V.z) z.emplace_back(z0);
}

Deformation::Deformation(const NormalField& U_) : U(U_), uu(l2_inner(U_, U_).to_double()) {}

Deformation::Deformation(const NormalField& U_, const NormalField& W_)
    : U(U_), W(W_), has_W(true), uu(l2_inner(U_, U_).to_double()), uw(l2_inner(U_, W_).to_double()),
      ww(l2_inner(W_, W_).to_double()) {}

double Deformation::norm_V(double s) const { return std::sqrt(s * s * uu + s * s * s * uw + s * s * s * s * ww / 4); }

PointDerivs point_derivs(const Product& P, const Deformation& D, const SamplePoint& p, double h, int order,
                         bool second) {
    if (order != 2 && order != 4) throw std::invalid_argument("point_derivs: order must be 2 or 4");
    const int m1 = P.k1 + 1, m2 = P.k2 + 1, n = P.dim(), N = P.N, ms = m1 + m2;
    const std::vector<double> H1 = reflector(p.w1), H2 = reflector(p.w2);
    PointDerivs d;
    d.n = n;
    d.N = N;
    for (int t = 0; t < 3; ++t) {
        std::size_t sz = t == 0 ? N : t == 1 ? n * N : n * n * N;
        d.base[t].assign(sz, 0.0);
        d.dU[t].assign(sz, 0.0);
        d.dW[t].assign(sz, 0.0);
    }
    // analytic derivatives of the round product in the chart
    for (int c = 0; c < m1; ++c) d.base[0][c] = P.r1 * p.w1[c];
    for (int c = 0; c < m2; ++c) d.base[0][m1 + c] = P.r2 * p.w2[c];
    for (int i = 0; i < n; ++i) {
        bool first = i < P.k1;
        int li = first ? i : i - P.k1, m = first ? m1 : m2, off = first ? 0 : m1;
        const auto& H = first ? H1 : H2;
        for (int c = 0; c < m; ++c) d.base[1][i * N + off + c] = H[c * m + li];
        const auto& w = first ? p.w1 : p.w2;
        double r = first ? P.r1 : P.r2;
        for (int c = 0; c < m; ++c) d.base[2][(i * n + i) * N + off + c] = -w[c] / r;
    }
    d.normals.assign(static_cast<std::size_t>(N - ms + 2) * N, 0.0);
    for (int c = 0; c < m1; ++c) d.normals[c] = p.w1[c];
    for (int c = 0; c < m2; ++c) d.normals[N + m1 + c] = p.w2[c];
    for (int a = 0; a < N - ms; ++a) d.normals[(2 + a) * N + ms + a] = 1;

    // displacement maps of U and W at chart coordinates y
    std::vector<double> hs(n);
    for (int i = 0; i < n; ++i) hs[i] = h * (i < P.k1 ? P.r1 : P.r2);
    std::vector<double> x(ms), out(2 * N);
    auto eval = [&](const std::vector<double>& y) -> const std::vector<double>& {
        double q1 = 0, q2 = 0;
        for (int i = 0; i < P.k1; ++i) q1 += y[i] * y[i];
        for (int i = P.k1; i < n; ++i) q2 += y[i] * y[i];
        std::vector<double> a(m1), b(m2);
        for (int i = 0; i < P.k1; ++i) a[i] = y[i];
        a[m1 - 1] = std::sqrt(P.r1 * P.r1 - q1);
        for (int i = 0; i < P.k2; ++i) b[i] = y[P.k1 + i];
        b[m2 - 1] = std::sqrt(P.r2 * P.r2 - q2);
        for (int c = 0; c < m1; ++c) {
            double s = 0;
            for (int e = 0; e < m1; ++e) s += H1[c * m1 + e] * a[e];
            x[c] = s;
        }
        for (int c = 0; c < m2; ++c) {
            double s = 0;
            for (int e = 0; e < m2; ++e) s += H2[c * m2 + e] * b[e];
            x[m1 + c] = s;
        }
        std::fill(out.begin(), out.end(), 0.0);
        auto fill = [&](const CompiledField& V, double* o) {
            double a1 = V.u1(x.data()) / P.r1, a2 = V.u2(x.data()) / P.r2;
            for (int c = 0; c < m1; ++c) o[c] = a1 * x[c];
            for (int c = 0; c < m2; ++c) o[m1 + c] = a2 * x[m1 + c];
            for (std::size_t z = 0; z < V.z.size() && ms + static_cast<int>(z) < N; ++z) o[ms + z] = V.z[z](x.data());
        };
        fill(D.U, out.data());
        if (D.has_W) fill(D.W, out.data() + N);
        return out;
    };
    auto store = [&](int t, std::size_t idx, const std::vector<double>& v, double scale) {
        for (int c = 0; c < N; ++c) {
            d.dU[t][idx * N + c] += scale * v[c];
            d.dW[t][idx * N + c] += scale * v[N + c];
        }
    };

    std::vector<double> y(n, 0.0);
    const std::vector<double> f0 = eval(y);
    store(0, 0, f0, 1.0);
    // 1D stencils: offsets and weights for first and second derivatives
    const std::vector<int> off = order == 4 ? std::vector<int>{-2, -1, 1, 2} : std::vector<int>{-1, 1};
    const std::vector<double> w1 = order == 4 ? std::vector<double>{1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12}
                                              : std::vector<double>{-0.5, 0.5};
    const std::vector<double> w2 = order == 4 ? std::vector<double>{-1.0 / 12, 16.0 / 12, 16.0 / 12, -1.0 / 12}
                                              : std::vector<double>{1.0, 1.0};
    const double w2c = order == 4 ? -30.0 / 12 : -2.0;
    for (int i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < off.size(); ++a) {
            y.assign(n, 0.0);
            y[i] = off[a] * hs[i];
            const auto& v = eval(y);
            store(1, i, v, w1[a] / hs[i]);
            if (second) store(2, i * n + i, v, w2[a] / (hs[i] * hs[i]));
        }
        if (second) store(2, i * n + i, f0, w2c / (hs[i] * hs[i]));
    }
    if (second) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                for (std::size_t a = 0; a < off.size(); ++a)
                    for (std::size_t b = 0; b < off.size(); ++b) {
                        y.assign(n, 0.0);
                        y[i] = off[a] * hs[i];
                        y[j] = off[b] * hs[j];
                        store(2, i * n + j, eval(y), w1[a] * w1[b] / (hs[i] * hs[j]));
                    }
                for (int c = 0; c < N; ++c) {
                    d.dU[2][(j * n + i) * N + c] = d.dU[2][(i * n + j) * N + c];
                    d.dW[2][(j * n + i) * N + c] = d.dW[2][(i * n + j) * N + c];
                }
            }
    }
    return d;
}

template <class T>
Geometry<T> geometry(const PointDerivs& d, const T& s, bool need_phi) {
    using std::exp;
    using std::sqrt;
    const int n = d.n, N = d.N;
    const T half_s2 = s * s * 0.5;
    auto lift = [&](int t) {
        std::vector<T> v(d.base[t].size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = T(d.base[t][i]) + s * d.dU[t][i] + half_s2 * d.dW[t][i];
        return v;
    };
    Geometry<T> g;
    g.F = lift(0);
    const std::vector<T> F1 = lift(1);
    auto dot = [&](const T* a, const T* b) {
        T sum(0.0);
        for (int c = 0; c < N; ++c) sum += a[c] * b[c];
        return sum;
    };
    // metric and its inverse by Gauss-Jordan (g is close to the identity)
    std::vector<T> G(n * n), inv(n * n, T(0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) G[i * n + j] = dot(&F1[i * N], &F1[j * N]);
        inv[i * n + i] = T(1.0);
    }
    T det(1.0);
    for (int c = 0; c < n; ++c) {
        T piv = G[c * n + c];
        det = det * piv;
        for (int j = 0; j < n; ++j) {
            G[c * n + j] = G[c * n + j] / piv;
            inv[c * n + j] = inv[c * n + j] / piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            T f = G[r * n + c];
            for (int j = 0; j < n; ++j) {
                G[r * n + j] -= f * G[c * n + j];
                inv[r * n + j] -= f * inv[c * n + j];
            }
        }
    }
    g.sqrt_det = sqrt(det);
    if (!need_phi) return g;
    if (value_of(det) <= 0) throw std::runtime_error("geometry: metric not positive definite");

    // phi = x^perp / 2 - H = Pi(F / 2 + g^{ij} F_ij)
    const std::vector<T> F2 = lift(2);
    std::vector<T> Y(N);
    for (int c = 0; c < N; ++c) Y[c] = g.F[c] * 0.5;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < N; ++c) Y[c] += inv[i * n + j] * F2[(i * n + j) * N + c];
    std::vector<T> proj(n);
    for (int j = 0; j < n; ++j) proj[j] = dot(&F1[j * N], Y.data());
    g.phi = Y;
    for (int i = 0; i < n; ++i) {
        T coef(0.0);
        for (int j = 0; j < n; ++j) coef += inv[i * n + j] * proj[j];
        for (int c = 0; c < N; ++c) g.phi[c] -= coef * F1[i * N + c];
    }
    return g;
}

template Geometry<double> geometry(const PointDerivs&, const double&, bool);
template Geometry<JetT<1>> geometry(const PointDerivs&, const JetT<1>&, bool);
template Geometry<JetT<3>> geometry(const PointDerivs&, const JetT<3>&, bool);

std::vector<double> phi_pointwise(const Product& P, const Deformation& D, double s, const SamplePoint& p, double h,
                                  int order) {
    if (h < 1e-6 || h > 1e-2) throw std::invalid_argument("phi_pointwise: h must lie in [1e-6, 1e-2]");
    return geometry<double>(point_derivs(P, D, p, h, order), s).phi;
}

PhiTaylor phi_taylor(const Product& P, const Deformation& D, const SamplePoint& p, double h, int order) {
    PointDerivs d = point_derivs(P, D, p, h, order);
    auto g = geometry<JetT<3>>(d, JetT<3>::variable(0.0));
    PhiTaylor out;
    const int rows = static_cast<int>(d.normals.size()) / d.N;
    for (int r = 0; r < rows; ++r) {
        JetT<3> c(0.0);
        for (int k = 0; k < d.N; ++k) c += g.phi[k] * d.normals[r * d.N + k];
        out.comp.push_back({c.derivative(0), c.derivative(1), c.derivative(2), c.derivative(3)});
    }
    return out;
}

Quadrature product_quadrature(const Product& P, int resolution) {
    if (resolution < 2) throw std::invalid_argument("product_quadrature: resolution must be >= 2");
    auto a = sphere_rule(P.k1, resolution), b = sphere_rule(P.k2, resolution);
    Quadrature q;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            q.points.push_back({wa, wb});
            q.weights.push_back(ca * cb);
        }
    return q;
}

std::vector<SamplePoint> random_points(const Product& P, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    auto dir = [&](int m) {
        std::vector<double> v(m);
        double nn = 0;
        for (double& x : v) {
            x = nd(rng);
            nn += x * x;
        }
        for (double& x : v) x /= std::sqrt(nn);
        return v;
    };
    std::vector<SamplePoint> out;
    for (int i = 0; i < count; ++i) {
        SamplePoint p{dir(P.k1 + 1), {}};
        p.w2 = dir(P.k2 + 1);
        out.push_back(std::move(p));
    }
    return out;
}

double phi_norm(const Product& P, const Deformation& D, double s, const Quadrature& Q, Norm norm, double h, int order,
                ThreadPool* pool) {
    std::vector<double> vals(Q.points.size());
    parallel_for(pool, vals.size(), [&](std::size_t i) {
        auto phi = phi_pointwise(P, D, s, Q.points[i], h, order);
        double sq = 0;
        for (double x : phi) sq += x * x;
        vals[i] = norm == Norm::L2 ? sq : std::sqrt(sq);
    });
    if (norm == Norm::Sup) return vals.empty() ? 0.0 : *std::max_element(vals.begin(), vals.end());
    return std::sqrt(simd::active_kernels().weighted_sum(Q.weights.data(), vals.data(), vals.size()));
}

namespace {
template <class T>
T area_sum(const Product& P, const Deformation& D, const T& s, const Quadrature& Q, double h, ThreadPool* pool,
           std::vector<double>* derivs) {
    using std::exp;
    std::vector<double> v0(Q.points.size()), v1(Q.points.size());
    parallel_for(pool, Q.points.size(), [&](std::size_t i) {
        auto g = geometry<T>(point_derivs(P, D, Q.points[i], h, 4, false), s, false);
        T r2(0.0);
        for (const auto& c : g.F) r2 += c * c;
        T val = exp(r2 * -0.25) * g.sqrt_det;
        if constexpr (std::is_same_v<T, double>) {
            v0[i] = val;
        } else {
            v0[i] = val.c[0];
            v1[i] = val.c[1];
        }
    });
    const double scale = std::pow(4 * kPi, -P.dim() / 2.0) * P.area();
    const auto& k = simd::active_kernels();
    if (derivs) derivs->push_back(scale * k.weighted_sum(Q.weights.data(), v1.data(), v1.size()));
    return T(scale * k.weighted_sum(Q.weights.data(), v0.data(), v0.size()));
}
}  // namespace

double gaussian_area(const Product& P, const Deformation& D, double s, const Quadrature& Q, double h,
                     ThreadPool* pool) {
    return area_sum<double>(P, D, s, Q, h, pool, nullptr);
}

std::pair<double, double> gaussian_area_jet(const Product& P, const Deformation& D, double s, const Quadrature& Q,
                                            double h, ThreadPool* pool) {
    std::vector<double> d;
    auto v = area_sum<JetT<1>>(P, D, JetT<1>::variable(s), Q, h, pool, &d);
    return {v.value(), d.at(0)};
}

FitReport loglog_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 4) throw std::invalid_argument("loglog_fit: need at least 4 points");
    double lo = *std::min_element(x.begin(), x.end()), hi = *std::max_element(x.begin(), x.end());
    if (lo <= 0 || std::log10(hi / lo) < 1.5) throw std::invalid_argument("loglog_fit: grid must span >= 1.5 decades");
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i] <= 0) throw std::invalid_argument("loglog_fit: nonpositive value");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        mx += lx[i] / n;
        my += ly[i] / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    FitReport r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    for (std::size_t i = 0; i < n; ++i) r.max_residual = std::max(r.max_residual, std::abs(ly[i] - r.intercept - r.slope * lx[i]));
    r.window_min = lo;
    r.window_max = hi;
    r.n_points = static_cast<int>(n);
    return r;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i) g[i] = lo * std::pow(hi / lo, count == 1 ? 0.0 : double(i) / (count - 1));
    return g;
}

namespace {
std::vector<CurveRow> sweep(const Product& P, const Deformation& D, const std::vector<double>& s_grid,
                            const OracleOptions& opt, bool with_area) {
    Quadrature Q = product_quadrature(P, opt.resolution);
    double F0 = with_area ? gaussian_area(P, D, 0.0, Q, opt.h, opt.pool) : 0.0;
    std::vector<CurveRow> rows;
    for (double s : s_grid) {
        if (s <= 0) continue;
        CurveRow r{s, phi_norm(P, D, s, Q, Norm::L2, opt.h, opt.order, opt.pool), D.norm_V(s), 0.0};
        if (with_area) r.F_minus_F0 = gaussian_area(P, D, s, Q, opt.h, opt.pool) - F0;
        rows.push_back(r);
    }
    return rows;
}
}  // namespace

FitResult taylor_order_fit(const Product& P, const Deformation& D, const std::vector<double>& s_grid,
                           const OracleOptions& opt) {
    FitResult out{{}, sweep(P, D, s_grid, opt, false)};
    std::vector<double> x, y;
    for (const auto& r : out.curve) {
        x.push_back(r.s);
        y.push_back(r.norm_phi);
    }
    out.fit = loglog_fit(x, y);
    return out;
}

FitResult loja_exponent(const Product& P, const Deformation& D, const std::vector<double>& s_grid,
                        const OracleOptions& opt) {
    if (D.uu <= 0) throw std::invalid_argument("loja_exponent: U must be nonzero");
    FitResult out{{}, sweep(P, D, s_grid, opt, false)};
    std::vector<double> x, y;
    for (const auto& r : out.curve) {
        x.push_back(r.norm_V);
        y.push_back(r.norm_phi);
    }
    out.fit = loglog_fit(x, y);
    return out;
}

FitResult gradient_loja_fit(const Product& P, const Deformation& D, const std::vector<double>& s_grid,
                            const OracleOptions& opt) {
    FitResult out{{}, sweep(P, D, s_grid, opt, true)};
    std::vector<double> x, y;
    for (const auto& r : out.curve) {
        x.push_back(r.norm_phi);
        y.push_back(std::abs(r.F_minus_F0));
    }
    out.fit = loglog_fit(x, y);
    return out;
}

FlowResult reduced_flow(const Product& P, const Deformation& D, double s0, double tau_min, double tau_max,
                        int samples, const OracleOptions& opt, bool reverse) {
    if (!(tau_min > 0 && tau_max > tau_min)) throw std::invalid_argument("reduced_flow: need 0 < tau_min < tau_max");
    if (D.uu <= 0) throw std::invalid_argument("reduced_flow: U must be nonzero");
    FlowResult out;
    const std::vector<double> taus = log_grid(tau_min, tau_max, samples);
    if (s0 == 0) {
        for (double t : taus) out.trajectory.emplace_back(t, 0.0);
        return out;
    }
    const Quadrature Q = product_quadrature(P, opt.resolution);
    // weighted L2 metric: the Gaussian weight is constant on the round product
    const double wmetric = std::pow(4 * kPi, -P.dim() / 2.0) * std::exp(-P.dim() / 2.0) * P.area();
    auto rhs = [&](double s) {
        double m = wmetric * (D.uu + 2 * s * D.uw + s * s * D.ww);
        return (reverse ? 1 : -1) * gaussian_area_jet(P, D, s, Q, opt.h, opt.pool).second / m;
    };
    auto rk4 = [&](double s, double dt) {
        double a = rhs(s), b = rhs(s + dt / 2 * a), c = rhs(s + dt / 2 * b), d = rhs(s + dt * c);
        return s + dt / 6 * (a + 2 * b + 2 * c + d);
    };
    double tau = 0, s = s0, dt = 1e-2;
    for (double target : taus) {
        while (tau < target) {
            double step = std::min(dt, target - tau);
            double big = rk4(s, step);
            double small = rk4(rk4(s, step / 2), step / 2);
            double err = std::abs(big - small) / 15, tol = 1e-10 * std::abs(s) + 1e-300;
            ++out.steps;
            if (err <= tol) {
                tau += step;
                s = small + (small - big) / 15;
                dt = step * std::clamp(0.9 * std::pow(tol / std::max(err, 1e-300), 0.2), 0.2, 5.0);
            } else {
                dt = step * std::max(0.2, 0.9 * std::pow(tol / err, 0.2));
            }
            if (dt < 1e-14 * std::max(1.0, tau)) throw std::runtime_error("reduced_flow: step size underflow");
        }
        out.trajectory.emplace_back(tau, s);
    }
    std::vector<double> x, y;
    for (const auto& [t, v] : out.trajectory) {
        x.push_back(t);
        y.push_back(v);
    }
    out.fit = loglog_fit(x, y);
    return out;
}

Deformation clifford_direction(int k1, int k2, bool corrected) {
    const auto& f = RadicalField::get(k1, k2);
    NormalField U = k1_field_diagonal(f, {1});
    if (!corrected) return Deformation(U);
    return Deformation(U, solve_w_closed({1}, k1, k2).W);
}

}  // namespace shrinker::numeric
