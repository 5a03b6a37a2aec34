#include "circ/metric.hpp"

namespace circ::reference {

DiameterBound diameter_bounds_serial(const Configuration& config, const DiameterOptions& options) {
  const std::vector<double> cand = diameter_candidates(config, options);
  DiameterBound bound;
  bound.lo = -1.0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = 0; j < cand.size(); ++j) {
      const double d = distance(config, Angle(cand[i]), Angle(cand[j])).length;
      if (d > bound.lo) {
        bound.lo = d;
        bound.p = Angle(cand[i]);
        bound.q = Angle(cand[j]);
      }
    }
  }
  bound.hi = bound.lo + 2.0 * options.step;
  bound.step = options.step;
  bound.candidates = cand.size();
  return bound;
}

}  // namespace circ::reference
