#include "heplus/equilibrium.hpp"

#include <cmath>

namespace heplus {

namespace {

constexpr double kGapRelTol = 1e-9;

bool gaps_equal(double g1, double g2) {
    const double scale = std::max(std::abs(g1), std::abs(g2));
    return std::abs(g1 - g2) <= kGapRelTol * scale;
}

}  // namespace

WeightProfile weight_profile(const ProductState& state) {
    return {state.electron_weights(), state.nucleus_weights()};
}

double p_eq(const WeightProfile& profile) {
    double se = 0.0, sc = 0.0;
    for (double w : profile.weights_e) se += w * w;
    for (double w : profile.weights_c) sc += w * w;
    return se + sc - se * sc;
}

double analytic_time_average(const ProductState& state, const CorrectionTable& table) {
    const auto We = state.electron_weights();
    const auto Wc = state.nucleus_weights();
    const auto& en = state.electron_levels;
    const auto& nn = state.nucleus_levels;

    double avg = 0.0;
    for (std::size_t i = 0; i < en.size(); ++i) {
        for (std::size_t j = 0; j < en.size(); ++j) {
            if (i == j) {
                // gap == 0 for all N; every indicator is 1.
                avg += We[i] * We[j];
                continue;
            }
            double inner = 0.0;
            for (std::size_t k = 0; k < nn.size(); ++k) {
                const double gap_k =
                    table.value(en[i], nn[k]) - table.value(en[j], nn[k]);
                for (std::size_t l = 0; l < nn.size(); ++l) {
                    const double gap_l =
                        table.value(en[i], nn[l]) - table.value(en[j], nn[l]);
                    if (gaps_equal(gap_k, gap_l)) inner += Wc[k] * Wc[l];
                }
            }
            avg += We[i] * We[j] * inner;
        }
    }
    return avg;
}

std::vector<GapCollision> degenerate_gap_report(const ProductState& state,
                                                const CorrectionTable& table) {
    const auto& en = state.electron_levels;
    const auto& nn = state.nucleus_levels;
    std::vector<GapCollision> collisions;

    auto scan_pair = [&](int n, int n_prime) {
        for (std::size_t k = 0; k + 1 < nn.size(); ++k) {
            const double gap_k = table.value(n, nn[k]) - table.value(n_prime, nn[k]);
            for (std::size_t l = k + 1; l < nn.size(); ++l) {
                const double gap_l = table.value(n, nn[l]) - table.value(n_prime, nn[l]);
                if (gaps_equal(gap_k, gap_l))
                    collisions.push_back({n, n_prime, nn[k], nn[l], gap_k});
            }
        }
    };

    if (en.size() == 1) {
        scan_pair(en[0], en[0]);  // all pairs trivially degenerate
        return collisions;
    }
    for (std::size_t i = 0; i < en.size(); ++i)
        for (std::size_t j = i + 1; j < en.size(); ++j) scan_pair(en[i], en[j]);
    return collisions;
}

}  // namespace heplus
