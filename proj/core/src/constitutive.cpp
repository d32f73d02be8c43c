#include "surfem/constitutive.hpp"

#include <cmath>

#include "surfem/errors.hpp"

namespace surfem {

namespace {

void require_admissible(double J, const char *what) {
  if (!(J > 0.0)) throw InadmissibleStateError(std::string(what) + ": nonpositive Jacobian determinant");
}

}  // namespace

double volume_energy(const Tensor2 &F, double J, const VolumeMaterial &mat) {
  require_admissible(J, "volume_energy");
  const double lnJ = std::log(J);
  return 0.5 * mat.lambda * lnJ * lnJ + 0.5 * mat.mu * (ddot2(F, F) - 3.0 - 2.0 * lnJ);
}

Tensor2 volume_stress(const Tensor2 &F, const Tensor2 &f, double J, const VolumeMaterial &mat) {
  require_admissible(J, "volume_stress");
  const Tensor2 ft = transpose(f);
  return mat.lambda * std::log(J) * ft + mat.mu * (F - ft);
}

Tensor4 volume_tangent(const Tensor2 &f, double J, const VolumeMaterial &mat) {
  require_admissible(J, "volume_tangent");
  const Tensor2 ft = transpose(f);
  const Tensor4 D = -1.0 * otimes_under(ft, f);                          // d f^t / dF
  const Tensor4 I4 = otimes_over(Tensor2::identity(), Tensor2::identity());  // dF/dF
  return mat.lambda * (otimes(ft, ft) + std::log(J) * D) + mat.mu * (I4 - D);
}

double surface_energy(const Tensor2 &F_hat, double J_hat, const SurfaceMaterial &mat) {
  require_admissible(J_hat, "surface_energy");
  const double lnJ = std::log(J_hat);
  return 0.5 * mat.lambda * lnJ * lnJ + 0.5 * mat.mu * (ddot2(F_hat, F_hat) - 2.0 - 2.0 * lnJ) + mat.gamma * J_hat;
}

Tensor2 surface_stress(const Tensor2 &F_hat, const Tensor2 &f_hat, double J_hat, const SurfaceMaterial &mat) {
  require_admissible(J_hat, "surface_stress");
  const Tensor2 ft = transpose(f_hat);
  return mat.lambda * std::log(J_hat) * ft + mat.mu * (F_hat - ft) + mat.gamma * J_hat * ft;
}

Tensor4 surface_tangent(const Tensor2 &f_hat, double J_hat, const Vec3 &N, const Vec3 &n,
                        const SurfaceMaterial &mat) {
  require_admissible(J_hat, "surface_tangent");
  const Tensor2 ft = transpose(f_hat);
  const Tensor2 I_hat = Tensor2::identity() - outer(N, N);
  // D_hat = d f_hat^t / dF_hat along superficial variations; the n(x)n term
  // tracks the rotation of the spatial tangent plane.
  const Tensor4 D_hat = -1.0 * otimes_under(ft, f_hat) + otimes_over(outer(n, n), f_hat * ft);
  const Tensor4 I4_hat = otimes_over(Tensor2::identity(), I_hat);
  return mat.lambda * (otimes(ft, ft) + std::log(J_hat) * D_hat) + mat.mu * (I4_hat - D_hat) +
         mat.gamma * J_hat * (otimes(ft, ft) + D_hat);
}

void ContinuumPoint::update_kinetics() {
  if (locus == PointLocus::volume) {
    const auto &mat = std::get<VolumeMaterial>(material);
    psi = volume_energy(F, J, mat);
    P = volume_stress(F, f, J, mat);
    A = volume_tangent(f, J, mat);
  } else {
    const auto &mat = std::get<SurfaceMaterial>(material);
    psi = surface_energy(F, J, mat);
    P = surface_stress(F, f, J, mat);
    A = surface_tangent(f, J, N, n, mat);
  }
}

}  // namespace surfem
