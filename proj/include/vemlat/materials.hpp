#pragma once

#include <Eigen/Dense>
#include <string>

namespace vemlat {

enum class AnalysisMode { PlaneStress, PlaneStrain };

std::string to_string(AnalysisMode mode);
AnalysisMode analysis_mode_from_string(const std::string& s);

// Isotropic linear-elastic phase. Voigt engineering-shear convention is used
// throughout the project: strain vectors are (exx, eyy, gxy) with gxy = 2*exy.
struct MaterialPhase {
  double E = 1.0;
  double nu = 0.0;
  AnalysisMode mode = AnalysisMode::PlaneStrain;

  // Throws on E <= 0 or nu outside (-1, 0.5).
  void validate() const;
};

// Symmetric positive-definite 3x3 matrix mapping (exx, eyy, gxy) to
// (sxx, syy, txy).
struct ConstitutiveMatrix {
  Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
  double trace() const { return C.trace(); }
};

struct LameParameters {
  double lambda = 0.0;  // plane stress: the effective lambda* = 2*lambda*mu/(lambda+2*mu)
  double mu = 0.0;
};

ConstitutiveMatrix constitutive_matrix(const MaterialPhase& phase);
LameParameters lame_parameters(const MaterialPhase& phase);

}  // namespace vemlat
