#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace foldhilb {

// C(a, b); 0 when b < 0, b > a or a < 0
std::int64_t binom(std::int64_t a, std::int64_t b);

// all vectors of length `parts` with entries >= lo summing to `total`, lexicographic order
std::vector<std::vector<int>> compositions(int total, int parts, int lo);

// all subsets of {0..n-1} as sorted index lists, ordered by bitmask
std::vector<std::vector<int>> subsets(int n);
std::vector<std::vector<int>> subsets_of_size(int n, int k);

std::vector<int> mask_to_set(std::uint64_t mask, int n);
std::uint64_t set_to_mask(const std::vector<int>& s);

}  // namespace foldhilb
