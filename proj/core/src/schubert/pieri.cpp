#include "grasslin/schubert/pieri.hpp"

#include <stdexcept>
#include <string>

namespace grasslin {

namespace {

void extend(const PartitionD& a, int upper, std::size_t k, int remaining, std::vector<int>& current,
            std::vector<PartitionD>& out) {
  if (k == a.parts.size()) {
    if (remaining == 0) out.push_back(PartitionD{current});
    return;
  }
  // b_{k+1} ranges over [a_{k+1}, upper] where upper is m-d for the first part
  // and a_k afterwards.
  const int lo = a.parts[k];
  for (int b = lo; b <= upper && b - lo <= remaining; ++b) {
    current.push_back(b);
    extend(a, a.parts[k], k + 1, remaining - (b - lo), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PartitionD> pieri_set(int d, int m, const PartitionD& a, int h) {
  if (h < 0 || h > m - d) {
    throw std::out_of_range("pieri: h = " + std::to_string(h) + " outside [0, " + std::to_string(m - d) + "]");
  }
  if (!a.fits_box(d, m)) throw std::out_of_range("pieri: partition outside the box");
  std::vector<PartitionD> out;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(d));
  extend(a, m - d, 0, h, current, out);
  return out;
}

GeneralClass pieri_special(int d, int m, const GeneralClass& cls, int h) {
  GeneralClass out;
  for (const auto& [a, coeff] : cls) {
    for (auto& b : pieri_set(d, m, a, h)) {
      auto& slot = out[b];
      slot += coeff;
      if (slot == 0) out.erase(b);
    }
  }
  return out;
}

GeneralClass to_general(const SchubertClass& cls) {
  GeneralClass out;
  for (const auto& [p, v] : cls.terms()) out.emplace(PartitionD{{p.i, p.j}}, v);
  return out;
}

SchubertClass from_general(int m, const GeneralClass& cls) {
  SchubertClass out(Ambient::of(m));
  for (const auto& [p, v] : cls) {
    if (p.length() != 2) throw std::invalid_argument("from_general: expected two-part partitions");
    out.add_term({p.parts[0], p.parts[1]}, v);
  }
  return out;
}

}  // namespace grasslin
