#pragma once

#include <map>
#include <vector>

#include "grasslin/ring/bigint.hpp"
#include "grasslin/schubert/graded_class.hpp"
#include "grasslin/schubert/partition.hpp"

namespace grasslin {

/// A class on Gr(d, m) in the Schubert basis, keyed by d-part partitions.
using GeneralClass = std::map<PartitionD, BigInt>;

/// The index set of Pieri's formula for ω_a · ω_{h,0,...,0} on Gr(d, m): every
/// b with m-d >= b_1 >= a_1 >= b_2 >= a_2 >= ... >= b_d >= a_d >= 0 and
/// |b| = |a| + h. Returned in lexicographic order.
std::vector<PartitionD> pieri_set(int d, int m, const PartitionD& a, int h);

/// Linear extension of Pieri's formula to a class. Throws std::out_of_range
/// when h is not in [0, m-d] or a partition falls outside the (m-d) x d box.
GeneralClass pieri_special(int d, int m, const GeneralClass& cls, int h);

/// Conversions between the d = 2 view of a class and the general one.
GeneralClass to_general(const SchubertClass& cls);
SchubertClass from_general(int m, const GeneralClass& cls);

}  // namespace grasslin
