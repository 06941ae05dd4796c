#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vemlat/materials.hpp"
#include "vemlat/mesh.hpp"

namespace vemlat::vem {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

// Scaled monomial basis over an element: xi = (x - x_E)/h_E, eta = (y - y_E)/h_E,
// m1 = (1,0), m2 = (0,1), m3 = (-eta, xi), m4 = (eta, xi), m5 = (xi, 0), m6 = (0, eta).
struct ScaledMonomialBasis {
  Vec2 x_E;
  double h_E = 1.0;

  double xi(const Vec2& p) const { return (p.x - x_E.x) / h_E; }
  double eta(const Vec2& p) const { return (p.y - x_E.y) / h_E; }

  // Value of monomial alpha (0-based, 0..5) at p.
  Vec2 value(int alpha, const Vec2& p) const;
};

// Voigt engineering strains (exx, eyy, gxy) of the six monomials, one column
// per monomial. Columns 1-3 vanish (rigid modes).
Eigen::Matrix<double, 3, 6> monomial_strains(const PolyElement& el);
Eigen::Matrix<double, 3, 6> monomial_strains(double h_E);

struct ElementMatrices {
  int n_vertices = 0;
  double h_E = 1.0;
  Eigen::MatrixXd D;       // 2N x 6, D(i, a) = dof_i(m_a)
  Matrix6d G;              // projection system matrix
  Eigen::MatrixXd Btilde;  // 6 x 2N
  Eigen::MatrixXd Pi;      // 6 x 2N, G Pi = Btilde
  Eigen::MatrixXd Kc;      // consistency
  Eigen::MatrixXd Ks;      // stabilization
  Eigen::MatrixXd Ke;      // Kc + Ks
  double g_condition = 0.0;
};

// DOF matrix, projection system and energy projector. Local DOF order is
// block-wise: all x-displacements first, then all y-displacements, vertices
// in loop order. Throws on a singular G (collinear vertices).
ElementMatrices projection_system(const PolygonalMesh& mesh, int elem,
                                  const ConstitutiveMatrix& C);

// Full element stiffness: Kc = Pi^T Gtilde Pi, Ks = (I - D Pi)^T S (I - D Pi)
// with S_ii = max(tr(C)/3, Kc_ii).
ElementMatrices element_stiffness(const PolygonalMesh& mesh, int elem,
                                  const ConstitutiveMatrix& C);

// Local (block-order) DOF -> global interleaved DOF (2*node, 2*node + 1).
std::vector<int> element_dof_map(const PolygonalMesh& mesh, int elem);

struct ElementStress {
  Eigen::Vector3d voigt = Eigen::Vector3d::Zero();  // sxx, syy, txy
  double principal_major = 0.0;                     // s1 >= s2
  double principal_minor = 0.0;
  double principal_angle = 0.0;                     // of the major direction, radians
};

// Constant stress of the projected displacement field. `local_d` in the
// element's block DOF order.
ElementStress element_stress(const ElementMatrices& em, const ConstitutiveMatrix& C,
                             const Eigen::VectorXd& local_d);

// The projected displacement (an affine field) evaluated at a point.
Vec2 projected_displacement(const ElementMatrices& em, const PolyElement& el,
                            const Eigen::VectorXd& local_d, const Vec2& p);

}  // namespace vemlat::vem
