#include "grasslin/ring/trunc_series.hpp"

namespace grasslin {

IntSeries evaluate(const PolySeries& f, const Triple& t) {
  std::vector<BigInt> values;
  values.reserve(f.order());
  for (const auto& c : f.coeffs()) values.push_back(c.evaluate(t));
  return IntSeries(f.order(), std::move(values));
}

}  // namespace grasslin
