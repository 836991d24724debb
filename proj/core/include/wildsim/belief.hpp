#ifndef WILDSIM_BELIEF_HPP
#define WILDSIM_BELIEF_HPP

#include "wildsim/grid.hpp"
#include "wildsim/sensing.hpp"
#include "wildsim/world.hpp"

#include <vector>

namespace wildsim {

struct LikelihoodParams {
    double tpr = 0.85;
    double fpr = 0.05;

    bool valid() const {
        return tpr > 0.0 && tpr < 1.0 && fpr > 0.0 && fpr < 1.0;
    }
};

struct BeliefParams {
    LikelihoodParams thermal{0.85, 0.05};
    LikelihoodParams ground{0.90, 0.02};
    LikelihoodParams satellite{0.55, 0.35};
    double drift_rate = 0.02;  // per-step mixing toward the risk prior
    double prior_scale = 0.05; // drift target = prior_scale * risk
    double initial = 0.01;
};

struct RiskWeights {
    double fuel = 0.5;
    double proximity = 0.5;
    double humidity = 0.3;
};

struct RiskMap {
    Field<double> value;
    int step = 0;
};

// Digital-twin risk prior: monotone in fuel and burning-neighbor fraction,
// antitone in humidity, clamped to [0,1].
RiskMap compute_risk(const GridWorld& world, const RiskWeights& weights);

// Per-step evidence for the belief update. Coverage lists may contain
// duplicates (overlapping footprints); each entry is one independent look.
struct DeliveredEvidence {
    std::vector<Observation> observations; // delivered this step
    std::vector<int> thermal_covered;      // cell indices
    std::vector<int> ground_covered;       // cell indices
};

class BeliefMap {
public:
    BeliefMap() = default;
    BeliefMap(int width, int height, double initial);

    const Field<double>& probabilities() const { return p_; }
    double at(Cell c) const { return p_.at(c); }
    double at(int index) const { return p_.at(index); }
    int step() const { return step_; }
    int width() const { return p_.width(); }
    int height() const { return p_.height(); }

    // Factored Bernoulli update: per-cell posterior odds are multiplied by
    // the modality likelihood ratio for each detection and each covered
    // non-detection; cells with no look this step drift toward the risk
    // prior. Evidence is folded per cell as counts, so delivery order
    // within a step cannot change the result.
    // Throws std::invalid_argument if a likelihood parameter is outside
    // (0,1).
    void update(const DeliveredEvidence& evidence, const RiskMap& risk,
                const BeliefParams& params, const RegionTiling& tiling,
                int step);

private:
    Field<double> p_;
    int step_ = 0;

    // Scratch per-cell evidence counters, reset via the touched list.
    struct Counts {
        std::uint16_t det[3] = {0, 0, 0};
        std::uint16_t cov[3] = {0, 0, 0};
    };
    std::vector<Counts> counts_;
    std::vector<int> touched_;
};

// Single-cell Bayes posterior for one detection; the building block the
// map update composes, exposed for direct use in tests and verification.
double bayes_posterior(double prior, bool detection,
                       const LikelihoodParams& lp);

} // namespace wildsim

#endif
