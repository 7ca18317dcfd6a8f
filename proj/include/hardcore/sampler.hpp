#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "hardcore/graph.hpp"
#include "hardcore/rational.hpp"

namespace hardcore {

/// Glauber chain state. The occupied set is independent after every step.
struct ChainState {
    VertexSet occupied = 0;
    std::uint64_t steps = 0;
    std::mt19937_64 rng;

    explicit ChainState(std::uint64_t seed) : rng(seed) {}
    /// Text form of the generator state, as written by operator<<.
    std::string rng_state() const;
};

/// One single-site update at a uniform vertex: occupied with probability lambda/(1+lambda)
/// when no neighbour is occupied, vacated otherwise.
void glauber_step(ChainState& state, const Graph& g, double occupy_probability);

/// Probability lambda/(1+lambda) in double precision.
double occupy_probability(const Rational& lambda);

struct EstimateReport {
    std::string graph;
    Rational lambda;
    std::uint64_t steps = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t seed = 0;
    int batches = 0;
    double n_e = 0;     // estimate of E|I| = nE
    double n_e_se = 0;  // batch-means standard error
    double n_v = 0;     // estimate of Var|I| = nV
    double n_v_se = 0;
};

inline constexpr std::uint64_t default_burn_in = 100000;
inline constexpr int default_batches = 50;

/// Runs burn_in steps, then records |I| after each of `steps` steps. Requires
/// steps >= 10 * burn_in and steps >= batches; batches >= 30.
EstimateReport estimate(const Graph& g, const Rational& lambda, std::uint64_t steps, std::uint64_t burn_in,
                        std::uint64_t seed, int batches = default_batches);

nlohmann::json to_json(const EstimateReport& report);

}  // namespace hardcore
