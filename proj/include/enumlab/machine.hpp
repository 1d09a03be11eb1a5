#pragma once

// Step-counted register machine.
//
// Each instruction costs exactly one step. Registers hold unbounded naturals;
// r0 carries the input at start and the output at HALT, every other register
// starts at 0. There is no multiplication, so a register value can at most
// double per step, which keeps polynomial step bounds meaningful relative to
// Turing-machine time.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enumlab/natural.hpp"

namespace enumlab {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;
inline constexpr std::uint64_t kDefaultBranchCap = 100'000;
inline constexpr std::uint32_t kMaxRegister = 4095;

enum class Opcode : std::uint8_t { Set, Cpy, Add, Sub, Jz, Jle, Choose, Fail, Halt };

std::string_view opcode_name(Opcode op);

/// Operand slots by opcode:
///   SET a, constant      CPY a -> b           ADD/SUB a, b -> c
///   JZ a, target         JLE a, b, target     CHOOSE a (dest), b (bound)
struct Instruction {
  Opcode op = Opcode::Halt;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  Natural constant;
  std::size_t target = 0;
  std::size_t line = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

class AssembleError : public Error {
 public:
  AssembleError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised for runs that cannot produce an outcome: running a nondeterministic
/// program deterministically, or falling off the end of the program.
class MachineError : public Error {
 public:
  using Error::Error;
};

/// Immutable assembled program. Construct through assemble().
class Program {
 public:
  const std::string& name() const noexcept { return name_; }
  const std::vector<Instruction>& instructions() const noexcept { return code_; }
  bool deterministic() const noexcept { return deterministic_; }
  std::size_t register_count() const noexcept { return registers_; }
  std::size_t size() const noexcept { return code_.size(); }
  const std::map<std::string, std::size_t>& labels() const noexcept { return labels_; }
  /// True when every SET constant fits in 64 bits.
  bool small_constants() const noexcept { return small_constants_; }

  /// Canonical source text; assembling it yields an equal program.
  std::string to_text() const;

 private:
  friend Program assemble(std::string_view, std::string);

  std::string name_;
  std::vector<Instruction> code_;
  std::map<std::string, std::size_t> labels_;
  bool deterministic_ = true;
  bool small_constants_ = true;
  std::size_t registers_ = 1;
};

/// Parses the line-oriented program format. Errors carry the 1-based line.
Program assemble(std::string_view text, std::string name = "program");

enum class RunStatus : std::uint8_t { Halted, Failed, FuelExhausted };
std::string_view to_string(RunStatus status);

struct RunOutcome {
  RunStatus status = RunStatus::FuelExhausted;
  std::optional<Natural> output;  // present iff Halted
  std::uint64_t steps = 0;

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/// Executes a deterministic program on `input` for at most `fuel` steps.
RunOutcome run_det(const Program& program, const Natural& input,
                   std::uint64_t fuel = kDefaultFuel);

enum class NondetStatus : std::uint8_t { Halted, NoSuccess, Indeterminate };
std::string_view to_string(NondetStatus status);

struct NondetRunOutcome {
  NondetStatus status = NondetStatus::NoSuccess;
  std::optional<Natural> output;  // present iff Halted
  std::uint64_t min_steps = 0;    // depth of the shallowest halting branch
  std::uint64_t branches_explored = 0;
  bool consistent = true;  // every halting branch found agreed on the output

  friend bool operator==(const NondetRunOutcome&, const NondetRunOutcome&) = default;
};

/// Breadth-first exploration of the configuration tree. `fuel` bounds the
/// depth of every branch, `branch_cap` the number of configurations expanded.
/// CHOOSE rX, rY with rY = v forks v + 1 children setting rX to 0..v.
///
/// Conflicting outputs do not throw here: the outcome reports
/// consistent = false and callers that need a function decide what to do.
NondetRunOutcome run_nondet(const Program& program, const Natural& input,
                            std::uint64_t fuel = kDefaultFuel,
                            std::uint64_t branch_cap = kDefaultBranchCap);

}  // namespace enumlab
