#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace photonstat {

// Finite probability distribution over photon (or photoelectron) numbers
// 0..n_max. Construction renormalizes the truncation remainder; entries are
// non-negative and sum to 1 within 1e-9.
class ProbDist {
public:
    ProbDist() = default;
    // `weights` are unnormalized, non-negative values for n = 0..weights.size()-1.
    explicit ProbDist(std::vector<double> weights);

    int n_max() const { return static_cast<int>(p_.size()) - 1; }
    std::size_t size() const { return p_.size(); }
    bool empty() const { return p_.empty(); }

    // 0 outside the stored range
    double operator[](int n) const {
        return (n >= 0 && n < static_cast<int>(p_.size())) ? p_[static_cast<std::size_t>(n)] : 0.0;
    }
    std::span<const double> probs() const { return p_; }

    double mean() const;
    double variance() const;

private:
    std::vector<double> p_;
};

}  // namespace photonstat
