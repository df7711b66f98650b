#include "foldhilb/combinat.hpp"

#include <stdexcept>

namespace foldhilb {

std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
  }
  return r;
}

static void comp_rec(int total, int parts, int lo, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (parts == 1) {
    if (total >= lo) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = lo; total - v >= lo * (parts - 1); ++v) {
    cur.push_back(v);
    comp_rec(total - v, parts - 1, lo, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts, int lo) {
  std::vector<std::vector<int>> out;
  if (parts < 0) return out;
  std::vector<int> cur;
  comp_rec(total, parts, lo, cur, out);
  return out;
}

std::vector<int> mask_to_set(std::uint64_t mask, int n) {
  std::vector<int> s;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) s.push_back(i);
  return s;
}

std::uint64_t set_to_mask(const std::vector<int>& s) {
  std::uint64_t m = 0;
  for (int i : s) m |= std::uint64_t(1) << i;
  return m;
}

std::vector<std::vector<int>> subsets(int n) {
  if (n > 30) throw std::invalid_argument("subsets: n too large");
  std::vector<std::vector<int>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) out.push_back(mask_to_set(m, n));
  return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (auto& s : subsets(n))
    if (static_cast<int>(s.size()) == k) out.push_back(s);
  return out;
}

}  // namespace foldhilb
