#include "enumlab/rapidity.hpp"

namespace enumlab {

namespace {

void require_matching(const TimeProfile& th, const TimeProfile& tg) {
  if (th.size() != tg.size()) {
    throw Error("rapidity needs profiles of equal length, got " + std::to_string(th.size()) +
                " and " + std::to_string(tg.size()));
  }
  if (th.size() == 0) throw Error("rapidity needs non-empty profiles");
}

}  // namespace

StrictReport strictly_more_rapid(const TimeProfile& th, const TimeProfile& tg) {
  require_matching(th, tg);
  StrictReport r;
  r.horizon = th.size();
  for (std::size_t n = 0; n < th.size(); ++n) {
    if (th.steps[n] >= tg.steps[n]) {
      r.strictly_more_rapid = false;
      r.first_failure = n;
      break;
    }
  }
  return r;
}

std::vector<std::uint64_t> cumulative(const TimeProfile& t) {
  std::vector<std::uint64_t> sums(t.size());
  std::uint64_t acc = 0;
  for (std::size_t n = 0; n < t.size(); ++n) {
    acc += t.steps[n];
    sums[n] = acc;
  }
  return sums;
}

EventualReport more_rapid(const TimeProfile& th, const TimeProfile& tg) {
  require_matching(th, tg);
  EventualReport r;
  r.horizon = th.size();
  const auto sh = cumulative(th);
  const auto sg = cumulative(tg);
  // Sums run over i = 1..n, so profile entry i is term n = i + 1 and M
  // covers the entries from index M on.
  const std::size_t last = th.size() - 1;
  if (sh[last] >= sg[last]) return r;
  std::size_t m = 0;
  for (std::size_t i = last; i-- > 0;) {
    if (sh[i] >= sg[i]) {
      m = i + 1;
      break;
    }
  }
  r.witness_m = m;
  return r;
}

}  // namespace enumlab
