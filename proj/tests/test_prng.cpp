#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "qot/prng.hpp"

TEST_CASE("generator output is pinned for all time") {
  qot::SplitMix64 zero(0);
  CHECK(zero.next() == UINT64_C(0xe220a8397b1dcdaf));
  CHECK(zero.next() == UINT64_C(0x6e789e6aa1b965f4));
  CHECK(zero.next() == UINT64_C(0x06c45d188009454f));

  qot::SplitMix64 forty_two(42);
  CHECK(forty_two.next() == UINT64_C(0xbdd732262feb6e95));
  CHECK(forty_two.next() == UINT64_C(0x28efe333b266f103));
  CHECK(forty_two.next() == UINT64_C(0x47526757130f9f52));
}

TEST_CASE("index shuffle is pinned and is a permutation") {
  qot::SplitMix64 rng(42);
  auto perm = qot::shuffled_indices(10, rng);
  std::vector<std::size_t> want = {0, 9, 5, 8, 6, 4, 7, 2, 1, 3};
  CHECK(perm == want);

  qot::SplitMix64 rng7(7);
  auto big = qot::shuffled_indices(100, rng7);
  std::vector<std::size_t> sorted = big;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> iota(100);
  std::iota(iota.begin(), iota.end(), std::size_t{0});
  CHECK(sorted == iota);
  CHECK(big != iota);  // a 100-element identity draw would be a broken rng
}

TEST_CASE("degenerate shuffles consume no randomness") {
  qot::SplitMix64 a(5);
  qot::SplitMix64 b(5);
  CHECK(qot::shuffled_indices(0, a).empty());
  CHECK(qot::shuffled_indices(1, a) == std::vector<std::size_t>{0});
  CHECK(a.next() == b.next());  // state untouched by the two calls above
}
