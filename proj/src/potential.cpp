#include "oksphere/potential.hpp"

#include <cmath>
#include <string>

#include "oksphere/error.hpp"
#include "segments.hpp"

namespace oksphere {

double v_diff(const AxisymPattern& p, std::size_t k) {
  if (k > p.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "v_diff index " + std::to_string(k) + " outside 0.." + std::to_string(p.size()));
  }
  const auto xi = xi_profile(p);
  return detail::segment_xi_integral(p.z_at(k), p.z_at(k + 1), xi.nodes[k], xi.slopes[k]);
}

PotentialAtInterfaces v_at_interfaces(const AxisymPattern& p) {
  const std::size_t n = p.size();
  const auto xi = xi_profile(p);
  PotentialAtInterfaces out;
  out.values.reserve(n);
  out.differences.reserve(n > 0 ? n - 1 : 0);
  double v = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d =
        detail::segment_xi_integral(p.z_at(k), p.z_at(k + 1), xi.nodes[k], xi.slopes[k]);
    if (k > 0) out.differences.push_back(d);
    v += d;
    out.values.push_back(v);
  }
  return out;
}

double grad_v_normal(const AxisymPattern& p, std::size_t k) {
  if (k < 1 || k > p.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "grad_v_normal index " + std::to_string(k) + " outside 1.." +
                    std::to_string(p.size()));
  }
  const double z = p.z_at(k);
  const auto xi = xi_profile(p);
  return AxisymPattern::sign_after(k) * xi.nodes[k] / std::sqrt(1.0 - z * z);
}

}  // namespace oksphere
