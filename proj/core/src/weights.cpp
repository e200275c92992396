#include "wgb/weights.hpp"

#include <numeric>
#include <stdexcept>

namespace wgb {

WeightSystem::WeightSystem(std::vector<int> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("empty weight vector");
    const int n = nvars();
    prefix_gcd_.resize(n);
    prefix_product_.resize(n);
    s_.resize(n);
    t_.resize(n);
    for (int i = 0; i < n; ++i) {
        if (weights_[i] < 1) throw std::invalid_argument("weights must be >= 1");
        prefix_gcd_[i] = i == 0 ? weights_[0]
                                : std::gcd(prefix_gcd_[i - 1],
                                           static_cast<long long>(weights_[i]));
        prefix_product_[i] =
            (i == 0 ? 1LL : prefix_product_[i - 1]) * weights_[i];
        if (i == 0) {
            s_[0] = 0;
            t_[0] = 0;
        } else {
            const long long ratio = prefix_gcd_[i - 1] / prefix_gcd_[i];
            s_[i] = s_[i - 1] + weights_[i] * ratio;
            t_[i] = t_[i - 1] + weights_[i] * (ratio - 1) - 1;
        }
        if (weights_[i] > max_weight_) max_weight_ = weights_[i];
    }
    delta_ = prefix_gcd_[n - 1];
    product_ = prefix_product_[n - 1];
}

}  // namespace wgb
