#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace consensus {

// Single source of randomness. All stochastic test drivers and simulators
// take an explicit seed and draw through this wrapper, so any run is
// reproducible from its seed alone.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(engine_);
    }

    // Uniform integer in [lo, hi], both ends included.
    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(engine_);
    }

    // Vector with entries uniform in [-1, 1], then shifted to zero mean.
    std::vector<double> centered_vector(int n) {
        std::vector<double> x(n);
        double mean = 0.0;
        for (double& v : x) {
            v = uniform(-1.0, 1.0);
            mean += v;
        }
        mean /= n;
        for (double& v : x) v -= mean;
        return x;
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace consensus
