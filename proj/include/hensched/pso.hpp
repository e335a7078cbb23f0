#ifndef HENSCHED_PSO_HPP
#define HENSCHED_PSO_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace hensched {

using Objective = std::function<double(const std::vector<double>&)>;

struct SwarmConfig {
    int particle_count = 30;
    int dimensions = 0;
    int iterations = 100;
    double c1 = 2.0;
    double c2 = 2.0;
    double inertia_max = 0.9;
    double inertia_min = 0.4;
    std::vector<std::pair<double, double>> position_bounds;  // per-dimension [low, high]
    std::vector<std::pair<double, double>> velocity_bounds;
    std::uint64_t seed = 0;

    // Inertia schedule, overridable; empty means the linear default.
    std::function<double(const SwarmConfig&, int)> inertia_policy;
};

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> personal_best_position;
    double personal_best_fitness = 0.0;
};

struct Swarm {
    std::vector<Particle> particles;
    std::vector<double> best_position;  // Gbest
    double best_fitness = 0.0;
};

struct OptimizationTrace {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<double> fitness_history;  // best-so-far per iteration
};

// Linearly decreasing inertia from inertia_max at iteration 0 to inertia_min
// at the final iteration.
double inertia_weight(const SwarmConfig& config, int iteration);

// Uniform random positions/velocities within their bounds; personal bests
// start at the initial positions (fitness not yet evaluated).
Swarm init_swarm(const SwarmConfig& config, std::mt19937_64& rng);

// Canonical velocity update with fresh uniform draws per dimension, clamped
// sign-symmetrically to +/-|velocity high bound|.
std::vector<double> update_velocity(const Particle& p, const std::vector<double>& gbest,
                                    double theta, const SwarmConfig& config,
                                    std::mt19937_64& rng);

// x' = x + v clamped into the position box; a clamped component zeroes its velocity.
std::vector<double> update_position(Particle& p, const SwarmConfig& config);

// Full minimization run, reproducible from config.seed.
OptimizationTrace optimize(const Objective& objective, const SwarmConfig& config);

}  // namespace hensched

#endif
