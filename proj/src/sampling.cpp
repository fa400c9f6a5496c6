#include "reebspec/sampling.hpp"

namespace reebspec {

Rational random_rational(SplitMix64& rng, std::uint64_t max_num, std::uint64_t max_den) {
  Int num(static_cast<long long>(rng.range(1, max_num)));
  Int den(static_cast<long long>(rng.range(1, max_den)));
  return Rational(num, den);
}

EllipsoidParams random_ellipsoid_with_n(SplitMix64& rng, std::size_t n) {
  std::vector<ExactScalar> axes;
  axes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    axes.push_back(ExactScalar(random_rational(rng, 12, 6)));
  }
  return EllipsoidParams(std::move(axes));
}

EllipsoidParams random_ellipsoid(SplitMix64& rng, std::size_t max_axes) {
  return random_ellipsoid_with_n(rng, static_cast<std::size_t>(rng.range(1, max_axes)));
}

EllipsoidParams random_enlargement(SplitMix64& rng, const EllipsoidParams& params) {
  std::vector<ExactScalar> axes;
  axes.reserve(params.n());
  for (const ExactScalar& a : params.axes()) {
    // Enlarge by a factor in [1, 3] in steps of 1/4.
    Rational factor = Rational(static_cast<long long>(rng.range(4, 12)), 4);
    axes.push_back(a * ExactScalar(factor));
  }
  return EllipsoidParams(std::move(axes));
}

}  // namespace reebspec
