#pragma once

#include <functional>
#include <optional>

#include "psoclust/rng.hpp"
#include "psoclust/types.hpp"

namespace psoclust {

/// Raised when a velocity update produces a non-finite component.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Called after every completed iteration with the post-move swarm.
using SwarmObserver = std::function<void(const Swarm&, const IterationRecord&)>;

/// Builds P particles with centroids drawn uniformly inside the data's
/// per-dimension bounding box and zero velocity. Particle 0 is replaced by
/// `seed_particle` if given, else by cfg.manual_init if given.
Swarm init_swarm(const RunConfig& cfg, const DataSet& data, RngStream& rng,
                 const std::optional<CentroidSet>& seed_particle = std::nullopt);

/// Inertia, cognitive and social terms with explicit random factors. `r1`
/// and `r2` are K x d and applied component-wise.
Matrix velocity_update(const ParticleState& particle, const CentroidSet& global_best, double w,
                       double c1, double c2, const Matrix& r1, const Matrix& r2);

/// Draws r1 then r2 according to cfg.r_sampling and applies the update.
Matrix velocity_update(const ParticleState& particle, const CentroidSet& global_best,
                       const RunConfig& cfg, RngStream& rng);

CentroidSet position_update(const ParticleState& particle, const Matrix& new_velocity);

/// Strict improvement replaces the personal best; ties keep the old one.
/// Returns true when the best changed.
bool update_personal_best(ParticleState& particle, double new_fitness);

/// Copies the best personal best (lowest particle index on ties) into the
/// swarm's global best.
void update_global_best(Swarm& swarm);

/// One iteration over every particle in index order: assign, evaluate,
/// update bests, then move.
IterationRecord pso_step(Swarm& swarm, const DataSet& data, const RunConfig& cfg, RngStream& rng,
                         std::size_t iteration);

/// Largest absolute velocity component across the swarm.
double max_abs_velocity(const Swarm& swarm);

RunReport pso_run(const DataSet& data, const RunConfig& cfg, const SwarmObserver& observer = {});

/// Seeds particle 0 with a converged K-Means solution, then runs PSO.
RunReport hybrid_run(const DataSet& data, const RunConfig& cfg,
                     const SwarmObserver& observer = {});

/// Dispatches on cfg.algorithm.
RunReport run_algorithm(const DataSet& data, const RunConfig& cfg,
                        const SwarmObserver& observer = {});

}  // namespace psoclust
