#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace partmod3 {

/// Residues of the partition function p(0..n_max) mod a small prime.
/// Built by the pentagonal-number recurrence, entirely independent of the
/// series kernel, so it can serve as an oracle against it.
struct PartitionTable {
    uint32_t modulus;
    std::vector<uint8_t> values;  // values[n] = p(n) mod modulus, n <= n_max

    uint64_t n_max() const { return values.size() - 1; }
    uint8_t at(uint64_t n) const { return values[n]; }
};

/// Exact p(n) mod m for 0 <= n <= n_max via
/// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)],
/// all arithmetic done modulo m from the start.
PartitionTable partition_table(uint64_t n_max, uint32_t modulus);

/// For each residue class r mod 3^s, the least positive N <= n_max with
/// N = r (mod 3^s) and p(N) not divisible by 3; absent if none in range.
/// Index r of the result is the class.
std::vector<std::optional<uint64_t>> direct_witness_scan(uint32_t s, uint64_t n_max);

/// Same scan over a prebuilt mod-3 table (table.n_max() bounds the search).
std::vector<std::optional<uint64_t>> direct_witness_scan(uint32_t s,
                                                         const PartitionTable& table);

}  // namespace partmod3
