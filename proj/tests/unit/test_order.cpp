#include <doctest.h>

#include <algorithm>
#include <random>

#include "enumlab/corpus.hpp"
#include "enumlab/order.hpp"
#include "enumlab/sat.hpp"
#include "oracles.hpp"

using namespace enumlab;

namespace {

Prefix to_prefix(const std::vector<oracle::Big>& v) { return Prefix{v}; }

}  // namespace

TEST_CASE("rank patterns") {
  CHECK(rank_pattern(Prefix{{10, 30, 20}}).ranks == std::vector<std::size_t>{0, 2, 1});
  CHECK(rank_pattern(Prefix{{}}).ranks.empty());
  try {
    rank_pattern(Prefix{{4, 1, 9, 1, 4}});
    FAIL("expected an injectivity error");
  } catch (const InjectivityError& e) {
    // earliest repeat in input order: value 1 at 1 and 3
    CHECK(e.first() == 1);
    CHECK(e.second() == 3);
  }
}

TEST_CASE("co-order of increasing listings") {
  auto r = coorder_prefix(prefix(corpus::listing("primes"), 50),
                          prefix(corpus::listing("identity"), 50));
  CHECK(r.co_order);
  CHECK_FALSE(r.violating_pair);
  CHECK(r.prefix_length == 50);
}

TEST_CASE("swap_order against identity fails on the first pair") {
  auto r = coorder_prefix(prefix(corpus::listing("swap_order"), 4),
                          prefix(corpus::listing("identity"), 4));
  CHECK_FALSE(r.co_order);
  REQUIRE(r.violating_pair);
  CHECK(r.violating_pair->i == 0);
  CHECK(r.violating_pair->j == 1);
  CHECK_FALSE(r.violating_pair->a_less);
  CHECK(r.violating_pair->b_less);
}

TEST_CASE("violating pair is the lexicographically least") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 2 + rng() % 30;
    auto a = oracle::random_injective(rng, k, 60);
    auto b = oracle::random_injective(rng, k, 60);
    auto r = coorder_prefix(to_prefix(a), to_prefix(b));
    std::optional<std::pair<std::size_t, std::size_t>> least;
    for (std::size_t i = 0; i < k && !least; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if ((a[i] < a[j]) != (b[i] < b[j])) {
          least = {i, j};
          break;
        }
      }
    }
    CHECK(r.co_order == !least);
    if (least) {
      REQUIRE(r.violating_pair);
      CHECK(r.violating_pair->i == least->first);
      CHECK(r.violating_pair->j == least->second);
    }
  }
}

TEST_CASE("co-order is an equivalence relation on random permutations") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng() % 40;
    auto a = oracle::random_injective(rng, k, 1000);
    // b and c share a's pattern through increasing maps
    std::vector<oracle::Big> b, c;
    for (const auto& v : a) {
      b.push_back(v * 3 + 7);
      c.push_back(v * v);
    }
    CHECK(coorder_prefix(to_prefix(a), to_prefix(a)).co_order);
    CHECK(coorder_prefix(to_prefix(a), to_prefix(b)).co_order);
    CHECK(coorder_prefix(to_prefix(b), to_prefix(a)).co_order);
    CHECK(coorder_prefix(to_prefix(b), to_prefix(c)).co_order);
  }
}

TEST_CASE("co-order rejects bad input") {
  CHECK_THROWS(coorder_prefix(Prefix{{1, 2}}, Prefix{{1}}));
  CHECK_THROWS_AS(coorder_prefix(Prefix{{1, 1}}, Prefix{{1, 2}}), InjectivityError);
}

TEST_CASE("co-order search finds a witness and reports skipped listings") {
  auto spin = make_listing("spin", std::make_shared<const Program>(assemble("loop:\nJZ r9, loop\n")));
  spin.fuel = 100;
  std::vector<Listing> a{corpus::listing("swap_order"), spin, corpus::listing("squares")};
  std::vector<Listing> b{corpus::listing("evens"), corpus::listing("primes")};
  auto r = coorder_search(a, b, 20);
  REQUIRE(r.witness);
  CHECK(r.witness->listing_a == "squares");
  CHECK(r.witness->listing_b == "evens");
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0].name == "spin");

  std::vector<Listing> only_swap{corpus::listing("swap_order")};
  CHECK_FALSE(coorder_search(only_swap, b, 20).witness);
}

TEST_CASE("increasing listing from a decider") {
  auto p = increasing_listing(*corpus::program("is_prime"), 10, kDefaultFuel, 1000);
  auto sieve = oracle::sieve_primes(10);
  for (std::size_t i = 0; i < 10; ++i) CHECK(p.values[i] == sieve[i]);
  CHECK_THROWS_AS(increasing_listing(*corpus::program("is_empty"), 3, kDefaultFuel, 100),
                  InsufficientMembersError);
}

TEST_CASE("SAT codes listed by filter-and-count are co-order with the decider's increasing listing") {
  auto host = satisfiable_codes(8);
  auto machine = increasing_listing(*corpus::program("sat_decider"), 8, kDefaultFuel, 1u << 20);
  CHECK(host == machine);
  CHECK(coorder_prefix(host, prefix(corpus::listing("identity"), 8)).co_order);
}
