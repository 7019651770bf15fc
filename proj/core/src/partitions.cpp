#include "arbor/partitions.hpp"

namespace arbor {

std::vector<Partition> partitions_all(int n) {
    std::vector<Partition> out;
    for_each_partition(n, 1, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_min2(int r) {
    std::vector<Partition> out;
    for_each_partition(r, 2, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<int> to_frequency(const Partition& p, int n) {
    if (n < 1)
        throw std::invalid_argument("to_frequency: n must be >= 1");
    std::vector<int> freq(static_cast<size_t>(n), 0);
    for (int part : p) {
        if (part < 1 || part > n)
            throw std::invalid_argument("to_frequency: part out of range 1..n");
        ++freq[static_cast<size_t>(part - 1)];
    }
    return freq;
}

}  // namespace arbor
