#include "enumlab/corpus.hpp"

#include <map>
#include <mutex>

#include "enumlab/sat.hpp"

namespace enumlab {

std::string_view to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Listing: return "listing";
    case EntryKind::Decider: return "decider";
    case EntryKind::Reduction: return "reduction";
  }
  return "?";
}

UnknownNameError::UnknownNameError(std::string_view name)
    : Error("unknown corpus entry '" + std::string(name) + "'") {}

namespace {

// Conventions shared by the hand-written programs: r9 is never written and
// serves as the condition of unconditional jumps (JZ r9, label).

constexpr const char* kIdentity = R"(# h(n) = n
HALT
)";

constexpr const char* kEvens = R"(# h(n) = 2n
ADD r0, r0, r0
HALT
)";

constexpr const char* kOdds = R"(# h(n) = 2n + 1
SET r1, 1
ADD r0, r0, r0
ADD r0, r1, r0
HALT
)";

constexpr const char* kSquares = R"(# h(n) = n^2 as the sum of the first n odd numbers
CPY r0, r1
SET r2, 0
SET r3, 1
SET r4, 1
SET r5, 2
loop:
JZ r1, done
ADD r2, r3, r2
ADD r3, r5, r3
SUB r1, r4, r1
JZ r9, loop
done:
CPY r2, r0
HALT
)";

constexpr const char* kSwapOrder = R"(# h(n) = n + 1 for even n, n - 1 for odd n: 1, 0, 3, 2, ...
CPY r0, r1
SET r2, 1
SET r3, 2
parity:
JZ r1, even
JLE r1, r2, odd
SUB r1, r3, r1
JZ r9, parity
even:
ADD r0, r2, r0
HALT
odd:
SUB r0, r2, r0
HALT
)";

// Trial division by odd divisors up to the square root, with remainders by
// repeated subtraction of doubled divisors (no division instruction).
constexpr const char* kPrimesBody = R"(SET r1, 1
SET r2, 2
JZ r0, two
CPY r0, r10
SET r11, 3
candidate:
SET r3, 3
SET r4, 9
trial:
JLE r4, r11, divide
JZ r9, found
divide:
CPY r11, r5
reduce:
JLE r3, r5, shift
JZ r5, next
ADD r4, r3, r4
ADD r4, r3, r4
ADD r4, r3, r4
ADD r4, r3, r4
ADD r4, r2, r4
ADD r4, r2, r4
ADD r3, r2, r3
JZ r9, trial
shift:
CPY r3, r6
grow:
ADD r6, r6, r7
JLE r7, r5, doubled
SUB r5, r6, r5
JZ r9, reduce
doubled:
CPY r7, r6
JZ r9, grow
found:
SUB r10, r1, r10
JZ r10, done
next:
ADD r11, r2, r11
JZ r9, candidate
done:
CPY r11, r0
HALT
two:
SET r0, 2
HALT
)";

const std::string kPrimes =
    std::string(
    "# h(n) = the n-th prime, h(0) = 2\n"
    "# r10 odd primes still to find, r11 candidate, r3 divisor, r4 divisor^2, r5 remainder\n") +
    kPrimesBody;

const std::string kPrimesPadded =
    std::string("# same values as primes, after a busy loop of n + 1 rounds\n"
    "SET r1, 1\n"
    "CPY r0, r12\n"
    "ADD r12, r1, r12\n"
    "pad:\n"
    "JZ r12, body\n"
    "SUB r12, r1, r12\n"
    "JZ r9, pad\n"
    "body:\n") +
    kPrimesBody;

constexpr const char* kExpPadded = R"(# h(n) = n after 2^floor(n / 16) busy rounds
SET r1, 1
SET r2, 16
CPY r0, r3
SET r4, 1
div:
JLE r2, r3, chunk
JZ r9, spin
chunk:
SUB r3, r2, r3
ADD r4, r4, r4
JZ r9, div
spin:
JZ r4, done
SUB r4, r1, r4
JZ r9, spin
done:
HALT
)";

constexpr const char* kGuessIdentity = R"(# h(n) = n by guessing y in 0..n and keeping y = n
CHOOSE r1, r0
JLE r0, r1, accept
FAIL
accept:
CPY r1, r0
HALT
)";

constexpr const char* kIsNat = R"(# every natural
SET r0, 1
HALT
)";

constexpr const char* kIsEmpty = R"(# no natural
SET r0, 0
HALT
)";

constexpr const char* kIsEven = R"(# 1 if r0 is even
SET r1, 2
SET r2, 1
loop:
JLE r0, r2, base
SUB r0, r1, r0
JZ r9, loop
base:
SUB r2, r0, r0
HALT
)";

constexpr const char* kIsOdd = R"(# 1 if r0 is odd
SET r1, 2
SET r2, 1
loop:
JLE r0, r2, base
SUB r0, r1, r0
JZ r9, loop
base:
HALT
)";

constexpr const char* kIsPrime = R"(# 1 if r0 is prime; trial division up to the square root
SET r1, 1
SET r2, 2
JLE r0, r1, composite
SET r3, 2
SET r4, 4
trial:
JLE r4, r0, divide
JZ r9, prime
divide:
CPY r0, r5
reduce:
JLE r3, r5, shift
JZ r5, composite
JLE r3, r2, three
ADD r4, r3, r4
ADD r4, r3, r4
ADD r4, r3, r4
ADD r4, r3, r4
ADD r4, r2, r4
ADD r4, r2, r4
ADD r3, r2, r3
JZ r9, trial
three:
SET r3, 3
SET r4, 9
JZ r9, trial
shift:
CPY r3, r6
grow:
ADD r6, r6, r7
JLE r7, r5, doubled
SUB r5, r6, r5
JZ r9, reduce
doubled:
CPY r7, r6
JZ r9, grow
prime:
SET r0, 1
HALT
composite:
SET r0, 0
HALT
)";

constexpr const char* kIsSquare = R"(# 1 if r0 is a perfect square
SET r2, 1
SET r3, 2
loop:
JLE r0, r1, check
ADD r1, r2, r1
ADD r2, r3, r2
JZ r9, loop
check:
JLE r1, r0, yes
SET r0, 0
HALT
yes:
SET r0, 1
HALT
)";

constexpr const char* kEvenToOdd = R"(# x -> x + 1
SET r1, 1
ADD r0, r1, r0
HALT
)";

constexpr const char* kOddToEven = R"(# x -> x - 1, truncated at 0
SET r1, 1
SUB r0, r1, r0
HALT
)";

constexpr const char* kBrokenEvenToOdd = R"(# x -> x, not a reduction from EVEN to ODD
HALT
)";

CorpusEntry listing_entry(std::string name, std::string src, std::string set, std::string decider,
                          std::string notes, Mode mode = Mode::Deterministic) {
  CorpusEntry e;
  e.name = std::move(name);
  e.kind = EntryKind::Listing;
  e.mode = mode;
  e.source = std::move(src);
  e.set = std::move(set);
  e.decider = std::move(decider);
  e.notes = std::move(notes);
  return e;
}

CorpusEntry decider_entry(std::string name, std::string src, std::string set, std::string notes,
                          Mode mode = Mode::Deterministic) {
  CorpusEntry e;
  e.name = std::move(name);
  e.kind = EntryKind::Decider;
  e.mode = mode;
  e.source = std::move(src);
  e.set = std::move(set);
  e.notes = std::move(notes);
  return e;
}

CorpusEntry reduction_entry(std::string name, const char* src, std::string from, std::string to,
                            std::string notes) {
  CorpusEntry e;
  e.name = std::move(name);
  e.kind = EntryKind::Reduction;
  e.source = src;
  e.from = std::move(from);
  e.to = std::move(to);
  e.notes = std::move(notes);
  return e;
}

std::vector<CorpusEntry> build_entries() {
  std::vector<CorpusEntry> v;
  v.push_back(listing_entry("identity", kIdentity, "N", "is_nat", "n"));
  v.push_back(listing_entry("evens", kEvens, "EVEN", "is_even", "2n"));
  v.push_back(listing_entry("odds", kOdds, "ODD", "is_odd", "2n + 1"));
  v.push_back(listing_entry("squares", kSquares, "SQUARE", "is_square", "n^2"));
  v.push_back(listing_entry("primes", kPrimes, "PRIME", "is_prime", "n-th prime, trial division"));
  v.push_back(listing_entry("primes_padded", kPrimesPadded, "PRIME", "is_prime",
                            "values of primes, 3n + 7 extra steps"));
  v.push_back(listing_entry("swap_order", kSwapOrder, "N", "is_nat", "1, 0, 3, 2, ..."));
  v.push_back(listing_entry("exp_padded", kExpPadded, "N", "is_nat",
                            "n after 2^floor(n/16) busy rounds"));
  v.push_back(listing_entry("guess_identity", kGuessIdentity, "N", "is_nat",
                            "n, guessed and checked", Mode::Nondeterministic));
  v.push_back(decider_entry("is_nat", kIsNat, "N", "always 1"));
  v.push_back(decider_entry("is_empty", kIsEmpty, "EMPTY", "always 0"));
  v.push_back(decider_entry("is_even", kIsEven, "EVEN", "parity by subtraction"));
  v.push_back(decider_entry("is_odd", kIsOdd, "ODD", "parity by subtraction"));
  v.push_back(decider_entry("is_prime", kIsPrime, "PRIME", "trial division"));
  v.push_back(decider_entry("is_square", kIsSquare, "SQUARE", "sums of odd numbers"));
  v.push_back(decider_entry("sat_decider", sat_decider_source(), "SAT",
                            "brute force over SAT codes"));
  v.push_back(decider_entry("sat_guess", sat_guess_source(), "SAT",
                            "guess an assignment, then check; FAILs on rejection",
                            Mode::Nondeterministic));
  v.push_back(reduction_entry("even_to_odd", kEvenToOdd, "is_even", "is_odd", "x + 1"));
  v.push_back(reduction_entry("odd_to_even", kOddToEven, "is_odd", "is_even",
                              "x - 1; a reduction on x >= 1"));
  v.push_back(reduction_entry("broken_even_to_odd", kBrokenEvenToOdd, "is_even", "is_odd",
                              "identity; fails everywhere"));
  return v;
}

}  // namespace

namespace corpus {

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> all = build_entries();
  return all;
}

const CorpusEntry& get(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e;
  }
  throw UnknownNameError(name);
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

std::shared_ptr<const Program> program(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Program>, std::less<>> cache;
  const auto& e = get(name);
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto p = std::make_shared<const Program>(assemble(e.source, e.name));
  cache.emplace(e.name, p);
  return p;
}

Listing listing(std::string_view name) {
  const auto& e = get(name);
  if (e.kind != EntryKind::Listing) {
    throw Error("corpus entry '" + e.name + "' is a " + std::string(to_string(e.kind)) +
                ", not a listing");
  }
  return make_listing(e.name, program(name), e.mode, e.set);
}

}  // namespace corpus
}  // namespace enumlab
