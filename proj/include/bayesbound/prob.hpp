#pragma once

#include <cstddef>
#include <vector>

namespace bayesbound {

/// A validated finite probability vector.
///
/// Construction (see make_pmf) clamps tiny negative entries, accepts a sum
/// within 1e-9 of one and renormalizes it exactly; afterwards every weight is
/// in [0, 1] and the weights sum to 1 within 1e-12. Instances are immutable.
class Pmf {
public:
    static constexpr double kSumTolerance = 1e-9;
    static constexpr double kNegativeClamp = -1e-12;

    const std::vector<double>& weights() const { return w_; }
    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }

    double max_weight() const;
    /// Sum of squared weights (the Bayesian distance of the vector).
    double sum_squares() const;

    static Pmf uniform(std::size_t m);

private:
    friend Pmf make_pmf(std::vector<double> weights);
    explicit Pmf(std::vector<double> w) : w_(std::move(w)) {}
    std::vector<double> w_;
};

/// Validates and exactly renormalizes a weight vector.
/// Throws EmptyDistribution, NegativeWeight or SumOutOfTolerance.
Pmf make_pmf(std::vector<double> weights);

/// A Pmf tagged as an a-posteriori distribution over hypotheses given one
/// observation.
class Posterior {
public:
    explicit Posterior(Pmf dist) : dist_(std::move(dist)) {}
    const Pmf& dist() const { return dist_; }
    std::size_t size() const { return dist_.size(); }
    double operator[](std::size_t i) const { return dist_[i]; }

private:
    Pmf dist_;
};

/// Shannon entropy in bits, with the 0 log2(0) = 0 convention.
double entropy(const Pmf& p);
double entropy(const Posterior& p);

/// Entropy in bits of a (p, 1-p) coin; p must be in [0, 1].
double binary_entropy(double p);

/// Bayes rule: posterior weights proportional to prior * likelihood.
/// Throws ZeroEvidence when every joint term vanishes.
Posterior posterior_from_likelihoods(const Pmf& priors, const std::vector<double>& likelihoods);

/// Conditional error of the MAP decision: 1 - max_i p_i, in [0, 1 - 1/M].
double map_conditional_error(const Posterior& p);

}  // namespace bayesbound
