#pragma once

#include "shrinker/jet.hpp"
#include "shrinker/parallel.hpp"
#include "shrinker/sphere_poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shrinker::numeric {

// S^{k1}(r1) x S^{k2}(r2) in R^N, r_b = sqrt(2 k_b)
struct Product {
    int k1, k2, N;
    double r1, r2;
    Product(int k1, int k2, int N);
    int dim() const { return k1 + k2; }
    double area() const;
};

struct SamplePoint {
    std::vector<double> w1, w2;  // unit directions in R^{k1+1}, R^{k2+1}
};
// point (r1 w1, r2 w2) as ambient coordinates of the sphere factors
std::vector<double> sphere_coords(const Product& P, const SamplePoint& p);

// Dense double copy of a SpherePoly for fast evaluation.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const SpherePoly& p);
    double operator()(const double* x) const;
    bool empty() const { return terms_.empty(); }

private:
    struct Term {
        double coeff;
        std::vector<std::pair<int, int>> powers;
    };
    std::vector<Term> terms_;
};

struct CompiledField {
    CompiledPoly u1, u2;
    std::vector<CompiledPoly> z;
    CompiledField() = default;
    explicit CompiledField(const NormalField& V);
};

// V(s) = s U + (s^2/2) W
struct Deformation {
    CompiledField U, W;
    bool has_W = false;
    // normalized L2 products (mean over Sigma) from exact integration
    double uu = 0, uw = 0, ww = 0;
    Deformation(const NormalField& U);
    Deformation(const NormalField& U, const NormalField& W);
    double norm_V(double s) const;
};

// Derivatives of the displacement maps in the orthographic chart at a point.
struct PointDerivs {
    int n = 0, N = 0;
    std::vector<double> base[3], dU[3], dW[3];  // [0]: N, [1]: n*N, [2]: n*n*N
    std::vector<double> normals;                // rows N1, N2, flat e_alpha (N each)
};
PointDerivs point_derivs(const Product& P, const Deformation& D, const SamplePoint& p, double h, int order,
                         bool second = true);

template <class T>
struct Geometry {
    std::vector<T> F, phi;
    T sqrt_det;
};
template <class T>
Geometry<T> geometry(const PointDerivs& d, const T& s, bool need_phi = true);

// phi of the graph of V(s) at the image of p, in ambient coordinates
std::vector<double> phi_pointwise(const Product& P, const Deformation& D, double s, const SamplePoint& p,
                                  double h = 1e-3, int order = 4);
// s-Taylor coefficients of the base-frame normal components of phi at s = 0
struct PhiTaylor {
    std::vector<std::array<double, 4>> comp;  // per normal direction: phi, phi', phi'', phi'''
};
PhiTaylor phi_taylor(const Product& P, const Deformation& D, const SamplePoint& p, double h = 1e-3, int order = 4);

struct Quadrature {
    std::vector<SamplePoint> points;
    std::vector<double> weights;  // sum to 1
};
// tensor Gauss-Legendre x trapezoid for k_b <= 2, Halton points for k_b >= 3
Quadrature product_quadrature(const Product& P, int resolution);
std::vector<SamplePoint> random_points(const Product& P, int count, std::uint64_t seed);

enum class Norm { L2, Sup };
double phi_norm(const Product& P, const Deformation& D, double s, const Quadrature& Q, Norm norm = Norm::L2,
                double h = 1e-3, int order = 4, ThreadPool* pool = nullptr);
double gaussian_area(const Product& P, const Deformation& D, double s, const Quadrature& Q, double h = 1e-3,
                     ThreadPool* pool = nullptr);
// value and s-derivative of the Gaussian area
std::pair<double, double> gaussian_area_jet(const Product& P, const Deformation& D, double s, const Quadrature& Q,
                                            double h = 1e-3, ThreadPool* pool = nullptr);

struct FitReport {
    double slope = 0, intercept = 0, max_residual = 0;
    double window_min = 0, window_max = 0;
    int n_points = 0;
};
// least squares of log y on log x; needs >= 4 points spanning >= 1.5 decades of x
FitReport loglog_fit(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> log_grid(double lo, double hi, int count);

struct CurveRow {
    double s, norm_phi, norm_V, F_minus_F0;
};
struct FitResult {
    FitReport fit;
    std::vector<CurveRow> curve;
};

struct OracleOptions {
    double h = 1e-3;
    int order = 4;
    int resolution = 24;
    ThreadPool* pool = nullptr;
};

FitResult taylor_order_fit(const Product& P, const Deformation& D, const std::vector<double>& s_grid,
                           const OracleOptions& opt = {});
FitResult loja_exponent(const Product& P, const Deformation& D, const std::vector<double>& s_grid,
                        const OracleOptions& opt = {});
FitResult gradient_loja_fit(const Product& P, const Deformation& D, const std::vector<double>& s_grid,
                            const OracleOptions& opt = {});

struct FlowResult {
    FitReport fit;
    std::vector<std::pair<double, double>> trajectory;  // (tau, s)
    int steps = 0;
};
// ds/dtau = -f'(s) / |dV/ds|^2 with f the Gaussian area along V(s); `reverse`
// integrates the time-reversed flow ds/dtau = +f'(s) / |dV/ds|^2
FlowResult reduced_flow(const Product& P, const Deformation& D, double s0, double tau_min, double tau_max,
                        int samples, const OracleOptions& opt = {}, bool reverse = false);

// Default K1 direction x1 y1 (r1 N1 + r2 N2) and its corrector.
Deformation clifford_direction(int k1, int k2, bool corrected);

}  // namespace shrinker::numeric
