#pragma once

#include <vector>

namespace wgb {

// A system of weights W = (w_1, ..., w_n), one positive integer per variable.
// Derived constants:
//   delta = gcd(w_1..w_n), product = w_1 * ... * w_n,
//   S_1 = 0, S_i = S_{i-1} + w_i * gcd(W_{i-1}) / gcd(W_i),
//   T_1 = 0, T_i = T_{i-1} + w_i * (gcd(W_{i-1}) / gcd(W_i) - 1) - 1,
// where W_i is the prefix (w_1..w_i).  S and T drive the monomial-count
// brackets; for W = 1 they collapse to S_i = i-1, T_i = -(i-1).
class WeightSystem {
public:
    explicit WeightSystem(std::vector<int> weights);

    int nvars() const { return static_cast<int>(weights_.size()); }
    int weight(int i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }

    long long delta() const { return delta_; }
    long long product() const { return product_; }
    // Prefix gcd g_i = gcd(w_1..w_i), 0-based.
    long long prefix_gcd(int i) const { return prefix_gcd_[i]; }
    // Prefix product P_i = w_1 * ... * w_i, 0-based; product() = P_{n-1}.
    long long prefix_product(int i) const { return prefix_product_[i]; }
    const std::vector<long long>& s_values() const { return s_; }
    const std::vector<long long>& t_values() const { return t_; }
    long long max_weight() const { return max_weight_; }
    bool all_ones() const { return max_weight_ == 1; }

    bool operator==(const WeightSystem& other) const {
        return weights_ == other.weights_;
    }

private:
    std::vector<int> weights_;
    std::vector<long long> prefix_gcd_;
    std::vector<long long> prefix_product_;
    std::vector<long long> s_;
    std::vector<long long> t_;
    long long delta_ = 1;
    long long product_ = 1;
    long long max_weight_ = 1;
};

}  // namespace wgb
