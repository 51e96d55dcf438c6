#include "photonstat/prob_dist.hpp"

#include <algorithm>
#include <cmath>

#include "photonstat/errors.hpp"

namespace photonstat {

ProbDist::ProbDist(std::vector<double> weights) : p_(std::move(weights)) {
    if (p_.empty()) fail_numeric("ProbDist: empty weight vector");
    double peak = 0.0;
    for (double w : p_) peak = std::max(peak, std::fabs(w));
    double sum = 0.0;
    for (double& w : p_) {
        if (!std::isfinite(w)) fail_numeric("ProbDist: non-finite weight");
        if (w < 0.0) {
            // tolerate roundoff-scale negatives only
            if (w < -1e-12 * peak) fail_numeric("ProbDist: negative weight");
            w = 0.0;
        }
        sum += w;
    }
    if (!(sum > 0.0)) fail_numeric("ProbDist: zero total weight");
    for (double& w : p_) w /= sum;
}

double ProbDist::mean() const {
    double m = 0.0;
    for (std::size_t n = 0; n < p_.size(); ++n) m += static_cast<double>(n) * p_[n];
    return m;
}

double ProbDist::variance() const {
    const double m = mean();
    double v = 0.0;
    for (std::size_t n = 0; n < p_.size(); ++n) {
        const double d = static_cast<double>(n) - m;
        v += d * d * p_[n];
    }
    return v;
}

}  // namespace photonstat
