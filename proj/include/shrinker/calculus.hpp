#pragma once

#include "shrinker/sphere_poly.hpp"

#include <Eigen/Dense>

#include <vector>

namespace shrinker {

// <grad^b p, grad^b q> on the factor sphere b (1 or 2)
SpherePoly tangential_gradient_pair(const SpherePoly& p, const SpherePoly& q, int factor);
// <grad p, grad q> on the product
SpherePoly gradient_pair(const SpherePoly& p, const SpherePoly& q);
// tangential gradient of q along factor b (or both factors when factor == 0),
// as ambient components indexed like the variables
std::vector<SpherePoly> tangential_gradient(const SpherePoly& q, int factor = 0);

SpherePoly factor_laplacian(const SpherePoly& p, int factor);
SpherePoly laplace_beltrami(const SpherePoly& p);
// (Hess p)(grad q1, grad q2) on the product
SpherePoly hessian_contract(const SpherePoly& p, const SpherePoly& q1, const SpherePoly& q2);

// (Delta + 1) on N_b components, (Delta + 1/2) on flat components
NormalField apply_L(const NormalField& V);
// normal projections of the polarised second variation and the third variation;
// both reject fields with flat components
enum class D2Variant { Corrected, Printed };

// Polarised second variation of phi at the base product, normal part.
NormalField d2phi_normal(const NormalField& V, const NormalField& W, D2Variant variant = D2Variant::Corrected);
NormalField d3phi_normal(const NormalField& V);

RadicalScalar l2_inner(const NormalField& V, const NormalField& W);

// Exact L2 projection onto span(basis); the Gram matrix is formed once.
class Projector {
public:
    Projector() = default;
    explicit Projector(std::vector<NormalField> basis);
    const std::vector<NormalField>& basis() const { return basis_; }
    std::vector<RadicalScalar> coefficients(const NormalField& V) const;
    NormalField apply(const NormalField& V) const;

private:
    std::vector<NormalField> basis_;
    std::vector<std::vector<RadicalScalar>> gram_;
    bool diagonal_ = true;
};

struct JacobiBasis {
    int k1, k2, N;
    std::vector<NormalField> K, K0, K1;
    Projector PK, PK0, PK1;
};
JacobiBasis jacobi_basis(int k1, int k2, int N);

enum class Subspace { K, K0, K1 };
NormalField project_K(const NormalField& V, const JacobiBasis& basis, Subspace which);

// U = u (r1 N1 + r2 N2) with u = sum_{ij} c_ij x_i y_j
NormalField k1_field(const RadicalField& f, const std::vector<std::vector<BigRat>>& c);
NormalField k1_field_diagonal(const RadicalField& f, const std::vector<BigRat>& a);
SpherePoly diagonal_u(const RadicalField& f, const std::vector<BigRat>& a);

struct SvdResult {
    std::vector<double> a;           // singular values, descending
    Eigen::MatrixXd R1, R2;          // c = R1^T diag(a) R2
    std::vector<BigRat> a_rational;  // snapped singular values
    double residual;                 // ||c - R1^T diag R2||_F
};
SvdResult svd_diagonalize(const std::vector<std::vector<BigRat>>& c, long max_den = 1000000);

}  // namespace shrinker
