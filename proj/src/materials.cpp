#include "vemlat/materials.hpp"

#include <stdexcept>

namespace vemlat {

std::string to_string(AnalysisMode mode) {
  return mode == AnalysisMode::PlaneStress ? "plane_stress" : "plane_strain";
}

AnalysisMode analysis_mode_from_string(const std::string& s) {
  if (s == "plane_stress") return AnalysisMode::PlaneStress;
  if (s == "plane_strain") return AnalysisMode::PlaneStrain;
  throw std::invalid_argument("unknown analysis mode: '" + s +
                              "' (expected plane_stress or plane_strain)");
}

void MaterialPhase::validate() const {
  if (!(E > 0.0)) throw std::invalid_argument("Young's modulus must be positive");
  if (!(nu > -1.0 && nu < 0.5))
    throw std::invalid_argument("Poisson's ratio must lie in (-1, 0.5)");
}

ConstitutiveMatrix constitutive_matrix(const MaterialPhase& phase) {
  phase.validate();
  const double E = phase.E;
  const double nu = phase.nu;
  ConstitutiveMatrix out;
  if (phase.mode == AnalysisMode::PlaneStress) {
    const double f = E / (1.0 - nu * nu);
    out.C << f, f * nu, 0.0,
             f * nu, f, 0.0,
             0.0, 0.0, f * (1.0 - nu) / 2.0;
  } else {
    const double f = E / ((1.0 + nu) * (1.0 - 2.0 * nu));
    out.C << f * (1.0 - nu), f * nu, 0.0,
             f * nu, f * (1.0 - nu), 0.0,
             0.0, 0.0, f * (1.0 - 2.0 * nu) / 2.0;
  }
  return out;
}

LameParameters lame_parameters(const MaterialPhase& phase) {
  phase.validate();
  const double mu = phase.E / (2.0 * (1.0 + phase.nu));
  const double lambda = phase.E * phase.nu / ((1.0 + phase.nu) * (1.0 - 2.0 * phase.nu));
  LameParameters out;
  out.mu = mu;
  out.lambda = phase.mode == AnalysisMode::PlaneStrain
                   ? lambda
                   : 2.0 * lambda * mu / (lambda + 2.0 * mu);
  return out;
}

}  // namespace vemlat
