#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace grasslin {

/// Type (i, j) of a Schubert cycle on Gr(2, m), i >= j >= 0.
struct Partition2 {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Partition2& p);

/// Parses "i,j". Throws std::invalid_argument on malformed input or i < j.
Partition2 parse_partition2(std::string_view token);

/// The ambient Grassmannian Gr(2, m), or the stable limit with no truncation.
class Ambient {
 public:
  static Ambient stable() { return Ambient(); }
  static Ambient of(int m);

  bool is_stable() const { return !m_.has_value(); }
  /// Throws std::logic_error for the stable ambient.
  int m() const;
  /// Complex dimension 2m - 4 of Gr(2, m).
  int top_degree() const { return 2 * m() - 4; }

  /// Box condition m - 2 >= i >= j >= 0 (only i >= j >= 0 when stable).
  bool contains(const Partition2& p) const {
    if (p.j < 0 || p.i < p.j) return false;
    return !m_ || p.i <= *m_ - 2;
  }

  friend bool operator==(const Ambient&, const Ambient&) = default;

 private:
  Ambient() = default;
  explicit Ambient(int m) : m_(m) {}

  std::optional<int> m_;
};

std::ostream& operator<<(std::ostream& os, const Ambient& amb);

/// Weakly decreasing d-tuple a_1 >= ... >= a_d >= 0, the type of a Schubert
/// cycle on Gr(d, m).
struct PartitionD {
  std::vector<int> parts;

  std::size_t length() const { return parts.size(); }
  int degree() const;
  bool is_valid() const;
  bool fits_box(int d, int m) const;

  friend auto operator<=>(const PartitionD&, const PartitionD&) = default;
};

std::ostream& operator<<(std::ostream& os, const PartitionD& p);

}  // namespace grasslin
