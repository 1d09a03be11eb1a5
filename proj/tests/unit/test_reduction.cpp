#include <doctest.h>

#include "enumlab/corpus.hpp"
#include "enumlab/reduction.hpp"

using namespace enumlab;

namespace {

const Program& P(const char* name) { return *corpus::program(name); }

}  // namespace

TEST_CASE("even to odd is verified with linear evidence") {
  BoundSpec b{1, 3.0, 0};
  ReductionOptions opt;
  opt.bound = b;
  auto r = verify_reduction(P("even_to_odd"), P("is_even"), P("is_odd"), {0, 999},
                            Mode::Deterministic, opt);
  CHECK(r.verified());
  CHECK(r.polynomial_evidence());
  CHECK(r.f_profile.size() == 1000);
  REQUIRE(r.fit);
  CHECK(std::abs(r.fit->exponent_estimate) < 0.05);  // constant time
  REQUIRE(r.bound);
  CHECK(r.bound->holds);
}

TEST_CASE("odd to even fails only at zero") {
  auto r = verify_reduction(P("odd_to_even"), P("is_odd"), P("is_even"), {0, 999},
                            Mode::Deterministic);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] == Violation{0, false, true});
  CHECK(verify_reduction(P("odd_to_even"), P("is_odd"), P("is_even"), {1, 999},
                         Mode::Deterministic)
            .verified());
}

TEST_CASE("the identity is not a reduction from EVEN to ODD") {
  auto r = verify_reduction(P("broken_even_to_odd"), P("is_even"), P("is_odd"), {0, 9},
                            Mode::Deterministic);
  CHECK_FALSE(r.verified());
  CHECK(r.violations.size() == 10);
  CHECK(r.violations.front() == Violation{0, true, false});
  CHECK_FALSE(r.fit);  // under 16 points
}

TEST_CASE("a failing bound removes polynomial evidence") {
  ReductionOptions opt;
  opt.bound = BoundSpec{0, 1.0, 0};
  auto r = verify_reduction(P("even_to_odd"), P("is_even"), P("is_odd"), {0, 20},
                            Mode::Deterministic, opt);
  CHECK(r.verified());
  CHECK_FALSE(r.polynomial_evidence());
}

TEST_CASE("reduction errors") {
  CHECK_THROWS(verify_reduction(P("even_to_odd"), P("is_even"), P("is_odd"), {5, 4},
                                Mode::Deterministic));
  auto spin = assemble("JZ r0, stop\nloop:\nJZ r9, loop\nstop:\nHALT\n", "spin");
  ReductionOptions opt;
  opt.fuel = 100;
  try {
    verify_reduction(spin, P("is_nat"), P("is_nat"), {0, 5}, Mode::Deterministic, opt);
    FAIL("expected a reduction error");
  } catch (const ReductionError& e) {
    CHECK(e.x() == 1);
  }
  CHECK_THROWS(verify_reduction(P("guess_identity"), P("is_nat"), P("is_nat"), {0, 5},
                                Mode::Deterministic));
}

TEST_CASE("PU and NPU equivalence of EVEN and ODD") {
  std::pair<Prefix, Prefix> prefixes{prefix(corpus::listing("evens"), 100),
                                     prefix(corpus::listing("odds"), 100)};
  auto pu = equivalence(P("even_to_odd"), P("odd_to_even"), P("is_even"), P("is_odd"), {1, 999},
                        EquivalenceKind::Pu, prefixes);
  CHECK(pu.valid());
  CHECK(pu.forward.mode == Mode::Deterministic);
  auto npu = equivalence(P("even_to_odd"), P("odd_to_even"), P("is_even"), P("is_odd"), {1, 999},
                         EquivalenceKind::Npu, prefixes);
  CHECK(npu.valid());
  CHECK(npu.forward.mode == Mode::Nondeterministic);
  CHECK(npu.forward.violations == pu.forward.violations);
  CHECK(npu.backward.violations == pu.backward.violations);
  CHECK(npu.forward.f_profile.steps == pu.forward.f_profile.steps);

  auto np = equivalence(P("even_to_odd"), P("odd_to_even"), P("is_even"), P("is_odd"), {1, 999},
                        EquivalenceKind::NpEquiv, std::nullopt);
  CHECK(np.valid());
  CHECK_FALSE(np.coorder);

  CHECK_THROWS(equivalence(P("even_to_odd"), P("odd_to_even"), P("is_even"), P("is_odd"),
                           {1, 9}, EquivalenceKind::Pu, std::nullopt));

  std::pair<Prefix, Prefix> crossed{prefix(corpus::listing("evens"), 10),
                                    prefix(corpus::listing("swap_order"), 10)};
  auto bad = equivalence(P("even_to_odd"), P("odd_to_even"), P("is_even"), P("is_odd"), {1, 99},
                         EquivalenceKind::Pu, crossed);
  CHECK_FALSE(bad.valid());
}

TEST_CASE("verified reductions decide A consistently") {
  for (const auto& e : corpus::entries()) {
    if (e.kind != EntryKind::Reduction) continue;
    auto r = verify_reduction(P(e.name.c_str()), P(e.from.c_str()), P(e.to.c_str()), {0, 999},
                              Mode::Deterministic);
    auto c = turing_consistency(P(e.name.c_str()), P(e.from.c_str()), P(e.to.c_str()), {0, 999});
    INFO(e.name);
    // mismatches are exactly the violations
    std::vector<std::uint64_t> xs;
    for (const auto& v : r.violations) xs.push_back(v.x);
    CHECK(c.mismatches == xs);
    if (r.verified()) CHECK(c.consistent());
  }
}
