#include "msae/band_plan.hpp"

#include <cmath>
#include <string>

#include "msae/errors.hpp"

namespace msae {

void BandPlan::validate() const {
    if (edges.size() < 2)
        throw DomainError("band plan needs at least 2 edges");
    if (edges.front() != 0.0)
        throw DomainError("first band edge must be 0");
    if (edges.back() != 1.0)
        throw DomainError("last band edge must be 1 (Nyquist)");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i] > edges[i - 1]))
            throw DomainError("band edges must be strictly increasing");
}

BandPlan constant_q_plan(int num_bands, double quality_factor) {
    if (num_bands < 1)
        throw DomainError("num_bands must be >= 1");
    if (!(quality_factor > 0.5))
        throw DomainError("quality factor must exceed 0.5, got " + std::to_string(quality_factor));

    const double rho = (2.0 * quality_factor + 1.0) / (2.0 * quality_factor - 1.0);
    BandPlan plan;
    plan.quality_factor = quality_factor;
    plan.edges.resize(static_cast<std::size_t>(num_bands) + 1);
    plan.edges[0] = 0.0;
    for (int b = 1; b <= num_bands; ++b)
        plan.edges[static_cast<std::size_t>(b)] = std::pow(rho, static_cast<double>(b - num_bands));
    plan.edges.back() = 1.0; // pow(rho, 0) exactly
    plan.validate();
    return plan;
}

BandPlan uniform_plan(int num_bands) {
    if (num_bands < 1)
        throw DomainError("num_bands must be >= 1");
    BandPlan plan;
    plan.edges.resize(static_cast<std::size_t>(num_bands) + 1);
    for (int b = 0; b <= num_bands; ++b)
        plan.edges[static_cast<std::size_t>(b)] =
            static_cast<double>(b) / static_cast<double>(num_bands);
    plan.validate();
    return plan;
}

BandPlan explicit_plan(std::vector<double> edges) {
    BandPlan plan;
    plan.edges = std::move(edges);
    plan.validate();
    return plan;
}

double measured_q(const BandPlan& plan, int band) {
    if (band < 1 || band > plan.num_bands())
        throw DomainError("band index out of range");
    const double lo = plan.edges[static_cast<std::size_t>(band - 1)];
    const double hi = plan.edges[static_cast<std::size_t>(band)];
    return (hi + lo) / (2.0 * (hi - lo));
}

} // namespace msae
