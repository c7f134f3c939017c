#include "grasslin/schubert/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace grasslin {

std::ostream& operator<<(std::ostream& os, const Partition2& p) {
  return os << "ω_{" << p.i << ',' << p.j << '}';
}

namespace {

int parse_nonneg_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || value < 0) {
    throw std::invalid_argument("malformed partition '" + std::string(whole) + "': expected i,j with i >= j >= 0");
  }
  return value;
}

}  // namespace

Partition2 parse_partition2(std::string_view token) {
  auto comma = token.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("malformed partition '" + std::string(token) + "': expected i,j");
  }
  Partition2 p{parse_nonneg_int(token.substr(0, comma), token), parse_nonneg_int(token.substr(comma + 1), token)};
  if (p.i < p.j) {
    throw std::invalid_argument("malformed partition '" + std::string(token) + "': i < j");
  }
  return p;
}

Ambient Ambient::of(int m) {
  if (m < 2) throw std::invalid_argument("Gr(2,m) needs m >= 2, got " + std::to_string(m));
  return Ambient(m);
}

int Ambient::m() const {
  if (!m_) throw std::logic_error("stable ambient has no finite m");
  return *m_;
}

std::ostream& operator<<(std::ostream& os, const Ambient& amb) {
  if (amb.is_stable()) return os << "stable";
  return os << "Gr(2," << amb.m() << ')';
}

int PartitionD::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool PartitionD::is_valid() const {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0) return false;
    if (k > 0 && parts[k] > parts[k - 1]) return false;
  }
  return true;
}

bool PartitionD::fits_box(int d, int m) const {
  return is_valid() && static_cast<int>(parts.size()) == d && (parts.empty() || parts.front() <= m - d);
}

std::ostream& operator<<(std::ostream& os, const PartitionD& p) {
  os << "ω_{";
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    if (k) os << ',';
    os << p.parts[k];
  }
  return os << '}';
}

}  // namespace grasslin
