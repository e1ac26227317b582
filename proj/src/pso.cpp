#include "psoclust/pso.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "psoclust/data_io.hpp"
#include "psoclust/fitness.hpp"
#include "psoclust/kmeans.hpp"

namespace psoclust {

namespace {

void check_like(const CentroidSet& reference, const Matrix& m, const char* what) {
  if (m.rows() != reference.k() || m.cols() != reference.dim()) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(reference.k()) + "x" +
                     std::to_string(reference.dim()) + ", got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

ParticleState make_particle(CentroidSet position) {
  ParticleState p;
  p.velocity = Matrix(position.k(), position.dim(), 0.0);
  p.best_position = position;
  p.position = std::move(position);
  return p;
}

RunReport make_report(const DataSet& data, const RunConfig& cfg) {
  RunReport report;
  report.config = cfg;
  report.data_points = data.size();
  report.data_fingerprint = data_fingerprint(data);
  return report;
}

void finish_report(RunReport& report, const DataSet& data, CentroidSet final_centroids) {
  report.final_assignment = assign_points(data, final_centroids);
  report.final_fitness = quantization_error(data, final_centroids, report.final_assignment);
  report.final_centroids = std::move(final_centroids);
}

RunReport run_swarm(const DataSet& data, const RunConfig& cfg, Swarm swarm, RngStream& rng,
                    const SwarmObserver& observer) {
  RunReport report = make_report(data, cfg);
  report.stop_reason = StopReason::iterations;
  for (std::size_t t = 0; t < cfg.iterations; ++t) {
    report.per_iteration.push_back(pso_step(swarm, data, cfg, rng, t));
    if (observer) observer(swarm, report.per_iteration.back());
    if (cfg.velocity_epsilon && max_abs_velocity(swarm) < *cfg.velocity_epsilon) {
      report.stop_reason = StopReason::velocity;
      break;
    }
  }
  finish_report(report, data, swarm.global_best_position);
  return report;
}

}  // namespace

Swarm init_swarm(const RunConfig& cfg, const DataSet& data, RngStream& rng,
                 const std::optional<CentroidSet>& seed_particle) {
  validate_config(cfg, data);
  const std::size_t k = cfg.centroids;
  const std::size_t d = data.dim();
  if (seed_particle && (seed_particle->k() != k || seed_particle->dim() != d)) {
    throw ShapeError("seed_particle: expected " + std::to_string(k) + "x" + std::to_string(d) +
                     ", got " + std::to_string(seed_particle->k()) + "x" +
                     std::to_string(seed_particle->dim()));
  }

  std::vector<double> lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) lo[c] = hi[c] = data.points()(0, c);
  for (std::size_t p = 1; p < data.size(); ++p) {
    for (std::size_t c = 0; c < d; ++c) {
      lo[c] = std::min(lo[c], data.points()(p, c));
      hi[c] = std::max(hi[c], data.points()(p, c));
    }
  }

  Swarm swarm;
  swarm.particles.reserve(cfg.particles);
  for (std::size_t i = 0; i < cfg.particles; ++i) {
    // Particle 0 still consumes its draws when replaced so the other
    // particles do not depend on whether a seed was supplied.
    Matrix pos(k, d);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < d; ++c) pos(j, c) = rng.uniform(lo[c], hi[c]);
    }
    if (i == 0 && seed_particle) {
      pos = seed_particle->positions();
    } else if (i == 0 && cfg.manual_init) {
      pos = *cfg.manual_init;
    }
    swarm.particles.push_back(make_particle(CentroidSet(std::move(pos))));
  }
  swarm.global_best_position = swarm.particles.front().position;
  swarm.check_shapes();
  return swarm;
}

Matrix velocity_update(const ParticleState& particle, const CentroidSet& global_best, double w,
                       double c1, double c2, const Matrix& r1, const Matrix& r2) {
  const CentroidSet& x = particle.position;
  check_like(x, particle.velocity, "velocity");
  check_like(x, particle.best_position.positions(), "best_position");
  check_like(x, global_best.positions(), "global_best");
  check_like(x, r1, "r1");
  check_like(x, r2, "r2");

  Matrix out(x.k(), x.dim());
  for (std::size_t j = 0; j < x.k(); ++j) {
    for (std::size_t c = 0; c < x.dim(); ++c) {
      const double pos = x.positions()(j, c);
      const double inertia = w * particle.velocity(j, c);
      const double cognitive = c1 * r1(j, c) * (particle.best_position.positions()(j, c) - pos);
      const double social = c2 * r2(j, c) * (global_best.positions()(j, c) - pos);
      const double v = inertia + cognitive + social;
      if (!std::isfinite(v)) {
        throw DivergenceError("velocity_update: non-finite velocity at centroid " +
                              std::to_string(j) + ", dimension " + std::to_string(c));
      }
      out(j, c) = v;
    }
  }
  return out;
}

Matrix velocity_update(const ParticleState& particle, const CentroidSet& global_best,
                       const RunConfig& cfg, RngStream& rng) {
  const std::size_t k = particle.position.k();
  const std::size_t d = particle.position.dim();
  Matrix r1(k, d), r2(k, d);
  if (cfg.r_sampling == RSampling::per_component) {
    for (double& r : r1.values()) r = rng.uniform01();
    for (double& r : r2.values()) r = rng.uniform01();
  } else {
    const double s1 = rng.uniform01();
    const double s2 = rng.uniform01();
    std::fill(r1.values().begin(), r1.values().end(), s1);
    std::fill(r2.values().begin(), r2.values().end(), s2);
  }
  return velocity_update(particle, global_best, cfg.w, cfg.c1, cfg.c2, r1, r2);
}

CentroidSet position_update(const ParticleState& particle, const Matrix& new_velocity) {
  check_like(particle.position, new_velocity, "velocity");
  Matrix next = particle.position.positions();
  auto out = next.values();
  auto vel = new_velocity.values();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += vel[i];
  return CentroidSet(std::move(next));
}

bool update_personal_best(ParticleState& particle, double new_fitness) {
  particle.fitness = new_fitness;
  if (new_fitness < particle.best_fitness) {
    particle.best_fitness = new_fitness;
    particle.best_position = particle.position;
    return true;
  }
  return false;
}

void update_global_best(Swarm& swarm) {
  if (swarm.particles.empty()) throw ShapeError("swarm: needs at least one particle");
  std::size_t best = 0;
  for (std::size_t i = 1; i < swarm.particles.size(); ++i) {
    if (swarm.particles[i].best_fitness < swarm.particles[best].best_fitness) best = i;
  }
  swarm.global_best_fitness = swarm.particles[best].best_fitness;
  swarm.global_best_position = swarm.particles[best].best_position;
}

IterationRecord pso_step(Swarm& swarm, const DataSet& data, const RunConfig& cfg, RngStream& rng,
                         std::size_t iteration) {
  swarm.check_shapes();
  IterationRecord record;
  record.iteration = iteration;
  record.particle_fitness.reserve(swarm.particles.size());

  for (auto& particle : swarm.particles) {
    const double f = evaluate(data, particle.position);
    update_personal_best(particle, f);
    record.particle_fitness.push_back(f);
  }
  update_global_best(swarm);

  for (auto& particle : swarm.particles) {
    Matrix v = velocity_update(particle, swarm.global_best_position, cfg, rng);
    particle.position = position_update(particle, v);
    particle.velocity = std::move(v);
  }

  record.global_best_fitness = swarm.global_best_fitness;
  record.global_best_position = swarm.global_best_position;
  return record;
}

double max_abs_velocity(const Swarm& swarm) {
  double m = 0.0;
  for (const auto& p : swarm.particles) {
    for (double v : p.velocity.values()) m = std::max(m, std::abs(v));
  }
  return m;
}

RunReport pso_run(const DataSet& data, const RunConfig& cfg, const SwarmObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(cfg, data);
  RngStream rng(cfg.rng_seed);
  RunReport report = run_swarm(data, cfg, init_swarm(cfg, data, rng), rng, observer);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RunReport hybrid_run(const DataSet& data, const RunConfig& cfg, const SwarmObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(cfg, data);
  RngStream rng(cfg.rng_seed);
  KMeansResult seed = kmeans_run(data, cfg.centroids, rng, cfg.kmeans_max_iters, cfg.kmeans_tol);
  Swarm swarm = init_swarm(cfg, data, rng, seed.centroids);
  RunReport report = run_swarm(data, cfg, std::move(swarm), rng, observer);
  report.kmeans_seed = std::move(seed.centroids);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RunReport run_algorithm(const DataSet& data, const RunConfig& cfg, const SwarmObserver& observer) {
  switch (cfg.algorithm) {
    case Algorithm::pso: return pso_run(data, cfg, observer);
    case Algorithm::hybrid: return hybrid_run(data, cfg, observer);
    case Algorithm::kmeans: return kmeans_baseline(data, cfg, observer);
  }
  throw ConfigError("algorithm: unknown value");
}

}  // namespace psoclust
