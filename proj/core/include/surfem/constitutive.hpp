#ifndef SURFEM_CONSTITUTIVE_HPP
#define SURFEM_CONSTITUTIVE_HPP

#include <variant>

#include "surfem/tensor.hpp"

namespace surfem {

// Compressible neo-Hookean volume response.
struct VolumeMaterial {
  double lambda = 0.0;  // first Lame parameter
  double mu = 0.0;      // shear modulus
};

// Neo-Hookean surface response extended by surface tension. The moduli carry
// force-per-length units.
struct SurfaceMaterial {
  double lambda = 0.0;
  double mu = 0.0;
  double gamma = 0.0;  // surface tension
};

// Free energy psi = 1/2 lambda ln^2 J + 1/2 mu [F:F - 3 - 2 ln J].
double volume_energy(const Tensor2 &F, double J, const VolumeMaterial &mat);

// Piola-Kirchhoff stress P = lambda ln J f^t + mu [F - f^t].
Tensor2 volume_stress(const Tensor2 &F, const Tensor2 &f, double J, const VolumeMaterial &mat);

// Exact Piola stress tangent dP/dF. Stored dense: the otimes_over/under terms
// break minor symmetry, but major symmetry holds.
Tensor4 volume_tangent(const Tensor2 &f, double J, const VolumeMaterial &mat);

// Surface free energy psi_hat = 1/2 lambda ln^2 J_hat
//   + 1/2 mu [F_hat:F_hat - 2 - 2 ln J_hat] + gamma J_hat.
// Nonzero at the reference configuration whenever gamma != 0.
double surface_energy(const Tensor2 &F_hat, double J_hat, const SurfaceMaterial &mat);

// Surface Piola-Kirchhoff stress
//   P_hat = lambda ln J_hat f_hat^t + mu [F_hat - f_hat^t] + gamma J_hat f_hat^t;
// satisfies P_hat . N = 0.
Tensor2 surface_stress(const Tensor2 &F_hat, const Tensor2 &f_hat, double J_hat, const SurfaceMaterial &mat);

// Exact surface Piola stress tangent for superficial variations; n is the
// spatial unit normal.
Tensor4 surface_tangent(const Tensor2 &f_hat, double J_hat, const Vec3 &N, const Vec3 &n, const SurfaceMaterial &mat);

enum class PointLocus { volume, surface };

// Lagrangian continuum point: kinematic and kinetic state at one quadrature
// point, plus its material parameters and material integration weight. The
// surface variant reuses F/f/J for the superficial measures and carries both
// unit normals.
struct ContinuumPoint {
  PointLocus locus = PointLocus::volume;
  Tensor2 F = Tensor2::identity();
  Tensor2 f = Tensor2::identity();
  double J = 1.0;
  Vec3 N, n;  // surface only

  double psi = 0.0;
  Tensor2 P;
  Tensor4 A;

  std::variant<VolumeMaterial, SurfaceMaterial> material;
  double JxW0 = 0.0;

  // Recomputes psi, P and A from the stored kinematics.
  void update_kinetics();
};

}  // namespace surfem

#endif
