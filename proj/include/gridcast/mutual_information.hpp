#pragma once

#include <cstdint>
#include <span>

namespace gridcast {

/// Kraskov-Stoegbauer-Grassberger estimator (algorithm 1) of I(X;Y) in nats,
/// max-norm in the joint space. Ties are broken with uniform jitter of
/// 1e-10 * std drawn from `seed`. Returns 0 when either input is constant.
double ksg_mutual_information(std::span<const double> x, std::span<const double> y, int k = 3,
                              std::uint64_t seed = 0);

}  // namespace gridcast
