#pragma once

#include <optional>
#include <vector>

namespace msae {

/// B+1 normalized band edges (1.0 = Nyquist) splitting the spectrum across
/// branches. Edges are strictly increasing with edges.front() == 0 and
/// edges.back() == 1.
struct BandPlan {
    std::vector<double> edges;
    std::optional<double> quality_factor;

    int num_bands() const { return static_cast<int>(edges.size()) - 1; }
    void validate() const;
};

/// Constant-Q design: with ratio rho = (2Q+1)/(2Q-1), edge b is rho^(b-B)
/// for 0 < b <= B and edge 0 is pinned to 0. Requires Q > 0.5. Q = 1.5
/// yields the dyadic decomposition (rho = 2).
BandPlan constant_q_plan(int num_bands, double quality_factor);

/// B bands of uniform width: edge b = b/B.
BandPlan uniform_plan(int num_bands);

/// A plan from explicit edges (validated).
BandPlan explicit_plan(std::vector<double> edges);

/// The quality factor realized by band b (1-based):
/// (edge_b + edge_{b-1}) / (2 (edge_b - edge_{b-1})). For a Constant-Q plan
/// this equals Q for b >= 2; band 1 includes DC and measures 0.5.
double measured_q(const BandPlan& plan, int band);

} // namespace msae
