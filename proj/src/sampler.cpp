#include "hardcore/sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hardcore/random.hpp"

namespace hardcore {

std::string ChainState::rng_state() const
{
    std::ostringstream out;
    out << rng;
    return out.str();
}

double occupy_probability(const Rational& lambda)
{
    if (lambda < 0)
        throw std::invalid_argument("lambda must be nonnegative");
    return Rational(lambda / (1 + lambda)).get_d();
}

void glauber_step(ChainState& state, const Graph& g, double occupy_probability)
{
    const int u = static_cast<int>(uniform_index(state.rng, static_cast<std::size_t>(g.order())));
    const VertexSet bit = VertexSet{1} << u;
    const double r = uniform01(state.rng);
    if ((g.neighbors(u) & state.occupied) == 0 && r < occupy_probability)
        state.occupied |= bit;
    else
        state.occupied &= ~bit;
    ++state.steps;
}

namespace {

// Mean and standard error of the mean from consecutive batch averages.
std::pair<double, double> batch_means(const std::vector<double>& batch)
{
    const double b = static_cast<double>(batch.size());
    double mean = 0;
    for (double x : batch)
        mean += x;
    mean /= b;
    double ss = 0;
    for (double x : batch)
        ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (b - 1) / b)};
}

}  // namespace

EstimateReport estimate(const Graph& g, const Rational& lambda, std::uint64_t steps, std::uint64_t burn_in,
                        std::uint64_t seed, int batches)
{
    if (g.order() == 0)
        throw std::invalid_argument("sampling needs at least one vertex");
    if (batches < 30)
        throw std::invalid_argument("batch means need at least 30 batches");
    if (steps < 10 * burn_in || steps < static_cast<std::uint64_t>(batches))
        throw std::invalid_argument("steps must be at least 10 * burn_in and at least the batch count");
    const double p = occupy_probability(lambda);
    ChainState state(seed);
    for (std::uint64_t i = 0; i < burn_in; ++i)
        glauber_step(state, g, p);

    std::vector<std::uint8_t> sizes(steps);
    for (std::uint64_t i = 0; i < steps; ++i) {
        glauber_step(state, g, p);
        sizes[i] = static_cast<std::uint8_t>(__builtin_popcountll(state.occupied));
    }
    double total = 0;
    for (auto s : sizes)
        total += s;
    const double mean = total / static_cast<double>(steps);

    const std::uint64_t per_batch = steps / static_cast<std::uint64_t>(batches);
    std::vector<double> first(static_cast<std::size_t>(batches)), second(static_cast<std::size_t>(batches));
    for (int b = 0; b < batches; ++b) {
        double s1 = 0, s2 = 0;
        for (std::uint64_t i = b * per_batch; i < (b + 1) * per_batch; ++i) {
            const double x = sizes[i];
            s1 += x;
            s2 += (x - mean) * (x - mean);
        }
        first[static_cast<std::size_t>(b)] = s1 / static_cast<double>(per_batch);
        second[static_cast<std::size_t>(b)] = s2 / static_cast<double>(per_batch);
    }

    EstimateReport r;
    r.graph = g.label().empty() ? "g6:" + encode_graph6(g) : g.label();
    r.lambda = lambda;
    r.steps = steps;
    r.burn_in = burn_in;
    r.seed = seed;
    r.batches = batches;
    std::tie(r.n_e, r.n_e_se) = batch_means(first);
    std::tie(r.n_v, r.n_v_se) = batch_means(second);
    return r;
}

nlohmann::json to_json(const EstimateReport& r)
{
    return {{"graph", r.graph},     {"lambda", to_string(r.lambda)}, {"steps", r.steps},   {"burn_in", r.burn_in},
            {"seed", r.seed},       {"batches", r.batches},          {"nE", r.n_e},        {"nE_se", r.n_e_se},
            {"nV", r.n_v},          {"nV_se", r.n_v_se}};
}

}  // namespace hardcore
