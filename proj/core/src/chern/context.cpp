#include "grasslin/chern/context.hpp"

#include <stdexcept>
#include <string>

namespace grasslin {

EmbeddingContext::EmbeddingContext(int m, int n) : m_(m), n_(n) {
  if (m < 4 || n < m) {
    throw std::invalid_argument("need n >= m >= 4, got (m,n) = (" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
}

std::ostream& operator<<(std::ostream& os, const EmbeddingContext& ctx) {
  return os << "Gr(2," << ctx.m() << ") -> Gr(2," << ctx.n() << ')';
}

}  // namespace grasslin
