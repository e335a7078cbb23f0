#include "hensched/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hensched {

double inertia_weight(const SwarmConfig& config, int iteration) {
    const double span = config.inertia_max - config.inertia_min;
    const double frac = config.iterations > 0
                            ? static_cast<double>(iteration) / config.iterations
                            : 0.0;
    return std::clamp(config.inertia_max - span * frac, config.inertia_min,
                      config.inertia_max);
}

Swarm init_swarm(const SwarmConfig& config, std::mt19937_64& rng) {
    Swarm swarm;
    swarm.particles.resize(static_cast<std::size_t>(config.particle_count));
    for (auto& p : swarm.particles) {
        p.position.resize(static_cast<std::size_t>(config.dimensions));
        p.velocity.resize(static_cast<std::size_t>(config.dimensions));
        for (int d = 0; d < config.dimensions; ++d) {
            const auto& [plo, phi] = config.position_bounds[d];
            const auto& [vlo, vhi] = config.velocity_bounds[d];
            p.position[d] = std::uniform_real_distribution<double>(plo, phi)(rng);
            p.velocity[d] = std::uniform_real_distribution<double>(vlo, vhi)(rng);
        }
        p.personal_best_position = p.position;
        p.personal_best_fitness = std::numeric_limits<double>::infinity();
    }
    swarm.best_fitness = std::numeric_limits<double>::infinity();
    return swarm;
}

std::vector<double> update_velocity(const Particle& p, const std::vector<double>& gbest,
                                    double theta, const SwarmConfig& config,
                                    std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(p.velocity.size());
    for (std::size_t d = 0; d < v.size(); ++d) {
        const double r1 = unit(rng);
        const double r2 = unit(rng);
        double nv = theta * p.velocity[d]
                  + config.c1 * r1 * (p.personal_best_position[d] - p.position[d])
                  + config.c2 * r2 * (gbest[d] - p.position[d]);
        const double vmax = std::fabs(config.velocity_bounds[d].second);
        v[d] = std::clamp(nv, -vmax, vmax);
    }
    return v;
}

std::vector<double> update_position(Particle& p, const SwarmConfig& config) {
    std::vector<double> x(p.position.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        const auto& [lo, hi] = config.position_bounds[d];
        x[d] = p.position[d] + p.velocity[d];
        if (x[d] < lo) {
            x[d] = lo;
            p.velocity[d] = 0.0;
        } else if (x[d] > hi) {
            x[d] = hi;
            p.velocity[d] = 0.0;
        }
    }
    return x;
}

OptimizationTrace optimize(const Objective& objective, const SwarmConfig& config) {
    std::mt19937_64 rng(config.seed);
    Swarm swarm = init_swarm(config, rng);

    for (auto& p : swarm.particles) {
        p.personal_best_fitness = objective(p.position);
        if (p.personal_best_fitness < swarm.best_fitness) {
            swarm.best_fitness = p.personal_best_fitness;
            swarm.best_position = p.personal_best_position;
        }
    }

    const auto theta_of = config.inertia_policy
                              ? config.inertia_policy
                              : [](const SwarmConfig& c, int i) { return inertia_weight(c, i); };

    OptimizationTrace trace;
    trace.fitness_history.reserve(static_cast<std::size_t>(config.iterations));
    for (int iter = 1; iter <= config.iterations; ++iter) {
        const double theta = theta_of(config, iter);
        for (auto& p : swarm.particles) {
            p.velocity = update_velocity(p, swarm.best_position, theta, config, rng);
            p.position = update_position(p, config);
            const double fitness = objective(p.position);
            if (fitness < p.personal_best_fitness) {
                p.personal_best_fitness = fitness;
                p.personal_best_position = p.position;
            }
            if (fitness < swarm.best_fitness) {
                swarm.best_fitness = fitness;
                swarm.best_position = p.position;
            }
        }
        trace.fitness_history.push_back(swarm.best_fitness);
    }
    trace.best_position = swarm.best_position;
    trace.best_fitness = swarm.best_fitness;
    return trace;
}

}  // namespace hensched
