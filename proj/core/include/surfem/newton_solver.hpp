#ifndef SURFEM_NEWTON_SOLVER_HPP
#define SURFEM_NEWTON_SOLVER_HPP

#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "surfem/assembly.hpp"
#include "surfem/linear_solver.hpp"
#include "surfem/section_timer.hpp"

namespace surfem {

// Uniform pseudo-time stepping: prescribed displacements, tractions and (when
// ramped) the surface tension scale affinely with step / n_steps.
struct TimeStepper {
  double total_time = 1.0;
  int n_steps = 1;
  int current = 0;

  double dt() const { return total_time / n_steps; }
  double time() const { return current * dt(); }
  double load_factor() const { return static_cast<double>(current) / n_steps; }
};

struct IterationRecord {
  int iteration = 0;
  std::size_t lin_iterations = 0;
  double lin_residual = 0.0;
  double r_norm = 0.0;   // relative to the first iteration of the step
  double du_norm = 0.0;  // relative to the first iteration of the step
};

struct StepHistory {
  int step = 0;
  std::vector<IterationRecord> iterations;
  bool converged = false;
};

class NewtonDivergenceError : public NonConvergenceError {
 public:
  NewtonDivergenceError(const std::string &what, StepHistory history)
      : NonConvergenceError(what), history_(std::move(history)) {}

  const StepHistory &history() const { return history_; }

 private:
  StepHistory history_;
};

struct SolverOptions {
  double newton_tolerance = 1e-9;  // on both relative norms
  int newton_max_iterations = 15;
  int diverge_after = 3;  // consecutive residual increases
  double linear_tolerance = 1e-6;
  std::size_t linear_max_iterations = 0;  // 0 -> 10 * n_dofs
  unsigned threads = 1;
};

struct FemProblem {
  Triangulation tri;
  SurfaceTriangulation surf;
  DofMap dofs;  // constraints hold the final prescribed values
  SurfaceToVolumeDofMap surface_to_volume;
  VolumeMaterial volume_material;
  SurfaceMaterial surface_material;
  bool ramp_surface_tension = true;
  bool ramp_neumann = true;
  std::map<int, Vec3> tractions;  // boundary id -> dead traction per reference area
  Vec3 body_force;
};

// Total-Lagrangian Newton-Raphson driver: per time step, iterate
// constrain / assemble / solve / update until both relative norms fall below
// the tolerance. Norms are restricted to unconstrained dofs and normalized by
// their values at iteration 0 of the step.
class Simulation {
 public:
  Simulation(FemProblem problem, TimeStepper stepper, SolverOptions options = {});

  void set_console(std::ostream *os) { console_ = os; }
  void set_run_log(std::ostream *os) { run_log_ = os; }
  void set_timer(SectionTimer *timer) { timer_ = timer; }

  // Advances one time step; throws NewtonDivergenceError or propagates
  // InvertedCellError (tagged with the step) on failure.
  StepHistory solve_nonlinear_timestep();

  using StepCallback = std::function<void(const Simulation &, int step)>;

  // Loops over all remaining steps; invokes the callback after each converged
  // step and prints the timing summary at the end when a timer is attached.
  std::vector<StepHistory> run(const StepCallback &post_step = {});

  const FemProblem &problem() const { return problem_; }
  const TimeStepper &stepper() const { return stepper_; }
  const SolverOptions &options() const { return options_; }
  std::span<const double> displacement() const { return u_; }
  const std::vector<ContinuumPoint> &volume_points() const { return volume_points_; }
  const std::vector<ContinuumPoint> &surface_points() const { return surface_points_; }

  SurfaceMaterial effective_surface_material() const;
  double neumann_scale() const;

  // l2 norm over unconstrained dofs.
  double unconstrained_norm(std::span<const double> v) const;

 private:
  void ensure_setup();
  void update_points();
  std::map<std::size_t, double> step_increments() const;

  FemProblem problem_;
  TimeStepper stepper_;
  SolverOptions options_;

  bool setup_done_ = false;
  std::vector<double> u_, residual_, rhs_, delta_u_;
  SparseMatrix matrix_;
  std::vector<ContinuumPoint> volume_points_, surface_points_;
  QuadratureRule<3> volume_rule_;
  QuadratureRule<2> surface_rule_;

  std::ostream *console_ = nullptr;
  std::ostream *run_log_ = nullptr;
  SectionTimer *timer_ = nullptr;
};

}  // namespace surfem

#endif
