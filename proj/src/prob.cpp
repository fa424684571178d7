#include "bayesbound/prob.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bayesbound/errors.hpp"

namespace bayesbound {

double Pmf::max_weight() const {
    return *std::max_element(w_.begin(), w_.end());
}

double Pmf::sum_squares() const {
    double s = 0.0;
    for (double w : w_) s += w * w;
    return s;
}

Pmf Pmf::uniform(std::size_t m) {
    return make_pmf(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

Pmf make_pmf(std::vector<double> weights) {
    if (weights.empty()) throw EmptyDistribution("probability vector must be nonempty");
    double sum = 0.0;
    for (double& w : weights) {
        if (w < Pmf::kNegativeClamp)
            throw NegativeWeight("negative weight " + std::to_string(w));
        if (w < 0.0) w = 0.0;
        sum += w;
    }
    if (std::abs(sum - 1.0) > Pmf::kSumTolerance)
        throw SumOutOfTolerance("weights sum to " + std::to_string(sum) + ", expected 1");
    for (double& w : weights) w /= sum;
    return Pmf(std::move(weights));
}

double entropy(const Pmf& p) {
    double h = 0.0;
    for (double w : p.weights())
        if (w > 0.0) h -= w * std::log2(w);
    return h < 0.0 ? 0.0 : h;
}

double entropy(const Posterior& p) { return entropy(p.dist()); }

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("binary_entropy argument must be in [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h < 0.0 ? 0.0 : h;
}

Posterior posterior_from_likelihoods(const Pmf& priors, const std::vector<double>& likelihoods) {
    if (likelihoods.size() != priors.size())
        throw DimensionMismatch("likelihood vector length does not match prior length");
    std::vector<double> joint(priors.size());
    double evidence = 0.0;
    for (std::size_t i = 0; i < priors.size(); ++i) {
        if (likelihoods[i] < 0.0)
            throw NegativeWeight("negative likelihood " + std::to_string(likelihoods[i]));
        joint[i] = priors[i] * likelihoods[i];
        evidence += joint[i];
    }
    if (evidence <= 0.0) throw ZeroEvidence("all prior-likelihood products are zero");
    for (double& j : joint) j /= evidence;
    return Posterior(make_pmf(std::move(joint)));
}

double map_conditional_error(const Posterior& p) {
    return 1.0 - p.dist().max_weight();
}

}  // namespace bayesbound
