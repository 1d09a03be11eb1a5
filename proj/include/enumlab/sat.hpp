#pragma once

// Integer coding of small CNF formulas, and machine programs over it.
//
// Codes are read most significant bit first:
//
//   1 | var count (4 bits) | clause count (5 bits) | clause ... clause
//
// where each clause is a run of 5-bit literals (2 * variable + negated,
// variables numbered from 1) closed by a 00000 terminator. The leading 1 is a
// sentinel that fixes the code length, so every formula within the caps has
// exactly one code and every code decodes to at most one formula.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "enumlab/listing.hpp"
#include "enumlab/machine.hpp"

namespace enumlab {

inline constexpr unsigned kSatMaxVars = 12;
inline constexpr unsigned kSatMaxClauses = 16;

/// Clauses hold DIMACS-style literals: v for x_v, -v for its negation.
struct Cnf {
  unsigned num_vars = 0;
  std::vector<std::vector<int>> clauses;
  friend bool operator==(const Cnf&, const Cnf&) = default;
};

class SatCodeError : public Error {
 public:
  using Error::Error;
};

Natural sat_encode(const Cnf& formula);
Cnf sat_decode(const Natural& code);
/// sat_decode without the exception on malformed codes.
std::optional<Cnf> sat_try_decode(const Natural& code);

/// Exhaustive assignment search. Throws SatCodeError on malformed codes.
bool sat_brute_force(const Natural& code);
bool sat_brute_force(const Cnf& formula);

/// DIMACS-like text, e.g. "p cnf 2 1\n1 -2 0\n".
std::string to_string(const Cnf& formula);

/// Deterministic decider over codes: 1 for codes of satisfiable formulas,
/// 0 for everything else. Tries assignments in binary counting order and
/// re-parses the code for each one.
std::string sat_decider_source();

/// Nondeterministic acceptor over codes: one deterministic pass rejects
/// malformed codes, then it guesses one bit per variable and checks once.
/// Halts with 1 on accepting branches, FAILs otherwise.
std::string sat_guess_source();

/// Guess-and-check program specialised to one formula. Ignores its input;
/// halts with 1 exactly on satisfying guesses.
Program sat_guess_program(const Cnf& formula);

/// The first k codes of satisfiable formulas in increasing order, by
/// filter-and-count over all naturals.
Prefix satisfiable_codes(std::size_t k);

}  // namespace enumlab
