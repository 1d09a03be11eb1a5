#include <doctest.h>

#include <random>

#include "enumlab/corpus.hpp"
#include "enumlab/rapidity.hpp"

using namespace enumlab;

namespace {

TimeProfile tp(std::vector<std::uint64_t> steps) { return TimeProfile{std::move(steps), Mode::Deterministic}; }

// Least M < H with sum_{i=1..n} h < sum_{i=1..n} g for all M < n <= H,
// where term i is profile entry i - 1.
std::optional<std::size_t> brute_witness(const TimeProfile& th, const TimeProfile& tg) {
  const std::size_t h = th.size();
  for (std::size_t m = 0; m < h; ++m) {
    bool all = true;
    for (std::size_t n = m + 1; n <= h; ++n) {
      std::uint64_t a = 0, b = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        a += th.steps[i - 1];
        b += tg.steps[i - 1];
      }
      if (a >= b) all = false;
    }
    if (all) return m;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("strict rapidity") {
  auto r = strictly_more_rapid(tp({1, 2, 3}), tp({2, 3, 4}));
  CHECK(r.strictly_more_rapid);
  CHECK_FALSE(r.first_failure);
  CHECK(r.horizon == 3);
  auto f = strictly_more_rapid(tp({1, 3, 3}), tp({2, 3, 4}));
  CHECK_FALSE(f.strictly_more_rapid);
  CHECK(*f.first_failure == 1);
  CHECK_THROWS(strictly_more_rapid(tp({1}), tp({1, 2})));
  CHECK_THROWS(more_rapid(tp({}), tp({})));
}

TEST_CASE("cumulative sums") {
  CHECK(cumulative(tp({3, 1, 4, 1, 5})) == std::vector<std::uint64_t>{3, 4, 8, 9, 14});
}

TEST_CASE("eventual rapidity witness") {
  // h slower early, faster later
  auto r = more_rapid(tp({10, 10, 1, 1, 1, 1, 1, 1}), tp({1, 1, 5, 5, 5, 5, 5, 5}));
  // sums 10 20 21 22 23 24 25 26 against 1 2 7 12 17 22 27 32; the last
  // failure is the sixth sum
  REQUIRE(r.witness_m);
  CHECK(*r.witness_m == 6);
  CHECK_FALSE(more_rapid(tp({1, 1, 9}), tp({2, 2, 2})).witness_m);
  CHECK(*more_rapid(tp({1}), tp({2})).witness_m == 0);
  CHECK_FALSE(more_rapid(tp({2}), tp({2})).witness_m);
  CHECK(*more_rapid(tp({1, 2, 2, 2}), tp({5, 1, 1, 1})).witness_m == 0);
  CHECK(*more_rapid(tp({1, 1, 1}), tp({2, 2, 2})).witness_m == 0);
  CHECK(*more_rapid(tp({1, 2}), tp({5, 5})).witness_m == 0);
}

TEST_CASE("eventual witness agrees with the definition on random profiles") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t h = 1 + rng() % 12;
    std::vector<std::uint64_t> a(h), b(h);
    for (std::size_t i = 0; i < h; ++i) {
      a[i] = rng() % 10;
      b[i] = rng() % 10;
    }
    CHECK(more_rapid(tp(a), tp(b)).witness_m == brute_witness(tp(a), tp(b)));
    CHECK_FALSE(more_rapid(tp(a), tp(a)).witness_m);
    auto m1 = more_rapid(tp(a), tp(b)).witness_m, m2 = more_rapid(tp(b), tp(a)).witness_m;
    CHECK_FALSE((m1 && m2));
  }
}

TEST_CASE("primes is strictly more rapid than primes_padded") {
  auto th = time_profile(corpus::listing("primes"), 100);
  auto tg = time_profile(corpus::listing("primes_padded"), 100);
  for (std::size_t n = 0; n < 100; ++n) CHECK(tg.steps[n] == th.steps[n] + 3 * n + 7);
  CHECK(strictly_more_rapid(th, tg).strictly_more_rapid);
  CHECK(*more_rapid(th, tg).witness_m == 0);
  CHECK_FALSE(strictly_more_rapid(tg, th).strictly_more_rapid);
  CHECK_FALSE(more_rapid(tg, th).witness_m);
}
