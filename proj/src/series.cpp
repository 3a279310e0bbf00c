#include "dmv/series.hpp"

#include "dmv/errors.hpp"

namespace dmv {

PowerSeries exp_series(double c, int order) {
  if (order < 0) throw DomainError("exp_series: negative order");
  PowerSeries r(order);
  double term = 1.0;
  for (int j = 0; j <= order; ++j) {
    r[j] = term;
    term *= c / double(j + 1);
  }
  return r;
}

}  // namespace dmv
