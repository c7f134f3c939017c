#include "grasslin/chern/engine.hpp"

namespace grasslin {

namespace {

void require_proper(int d, int m) {
  if (d < 1 || d >= m) throw std::invalid_argument("need 1 <= d < m for Gr(d,m)");
}

}  // namespace

GeneralClass chern_universal(int d, int m) {
  require_proper(d, m);
  GeneralClass out;
  for (int k = 0; k <= d; ++k) {
    std::vector<int> parts(static_cast<std::size_t>(d), 0);
    for (int s = 0; s < k; ++s) parts[static_cast<std::size_t>(s)] = 1;
    out.emplace(PartitionD{parts}, k % 2 == 0 ? BigInt(1) : BigInt(-1));
  }
  return out;
}

GeneralClass chern_quotient(int d, int m) {
  require_proper(d, m);
  GeneralClass out;
  for (int k = 0; k <= m - d; ++k) {
    std::vector<int> parts(static_cast<std::size_t>(d), 0);
    parts[0] = k;
    out.emplace(PartitionD{parts}, BigInt(1));
  }
  return out;
}

}  // namespace grasslin
