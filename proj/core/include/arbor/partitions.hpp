#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace arbor {

// A partition is a weakly decreasing sequence of positive parts. The empty
// vector is the unique partition of 0.
using Partition = std::vector<int>;

namespace detail {

template <typename Fn>
void partition_rec(int remaining, int max_part, int min_part, Partition& cur, Fn& fn) {
    if (remaining == 0) {
        fn(static_cast<const Partition&>(cur));
        return;
    }
    for (int part = std::min(max_part, remaining); part >= min_part; --part) {
        cur.push_back(part);
        partition_rec(remaining - part, part, min_part, cur, fn);
        cur.pop_back();
    }
}

}  // namespace detail

/* Visits every partition of n with all parts >= min_part, in
 * reverse-lexicographic order (largest first part first). The Partition
 * reference handed to fn is reused between calls; copy it to keep it. */
template <typename Fn>
void for_each_partition(int n, int min_part, Fn&& fn) {
    if (n < 0)
        throw std::invalid_argument("for_each_partition: n must be >= 0");
    if (min_part < 1)
        throw std::invalid_argument("for_each_partition: min_part must be >= 1");
    Partition cur;
    detail::partition_rec(n, n, min_part, cur, fn);
}

// All partitions of n (parts >= 1), reverse-lexicographic.
std::vector<Partition> partitions_all(int n);

// Partitions of r with every part >= 2, reverse-lexicographic.
// r=0 yields the single empty partition, r=1 yields nothing.
std::vector<Partition> partitions_min2(int r);

/* Multiplicity view of a partition: returns (i_1,...,i_n) where i_k counts
 * the parts equal to k. Every part must be <= n. */
std::vector<int> to_frequency(const Partition& p, int n);

}  // namespace arbor
