#include "enumlab/machine.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

namespace enumlab {

Natural parse_natural(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char ch) { return std::isdigit(ch); })) {
    throw Error("not a natural number: '" + std::string(text) + "'");
  }
  return Natural(std::string(text));
}

std::string to_string(const Natural& value) { return value.str(); }

std::optional<std::uint64_t> to_u64(const Natural& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value.convert_to<std::uint64_t>();
}

std::string_view opcode_name(Opcode op) {
  switch (op) {
    case Opcode::Set: return "SET";
    case Opcode::Cpy: return "CPY";
    case Opcode::Add: return "ADD";
    case Opcode::Sub: return "SUB";
    case Opcode::Jz: return "JZ";
    case Opcode::Jle: return "JLE";
    case Opcode::Choose: return "CHOOSE";
    case Opcode::Fail: return "FAIL";
    case Opcode::Halt: return "HALT";
  }
  return "?";
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Halted: return "halted";
    case RunStatus::Failed: return "failed";
    case RunStatus::FuelExhausted: return "fuel_exhausted";
  }
  return "?";
}

std::string_view to_string(NondetStatus status) {
  switch (status) {
    case NondetStatus::Halted: return "halted";
    case NondetStatus::NoSuccess: return "no_success";
    case NondetStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

AssembleError::AssembleError(std::size_t line, const std::string& message)
    : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

// ---------------------------------------------------------------------------
// Assembler

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_label(std::string_view name) {
  if (name.empty()) return false;
  auto first = static_cast<unsigned char>(name.front());
  if (!(std::islower(first) || first == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char ch) {
    return std::islower(ch) || std::isdigit(ch) || ch == '_';
  });
}

std::uint32_t parse_register(std::string_view tok, std::size_t line) {
  if (tok.size() < 2 || tok.front() != 'r') {
    throw AssembleError(line, "invalid register '" + std::string(tok) + "'");
  }
  auto digits = tok.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char ch) { return std::isdigit(ch); }) ||
      digits.size() > 6) {
    throw AssembleError(line, "invalid register '" + std::string(tok) + "'");
  }
  auto index = std::stoul(std::string(digits));
  if (index > kMaxRegister) {
    throw AssembleError(line, "register index out of range '" + std::string(tok) + "'");
  }
  return static_cast<std::uint32_t>(index);
}

struct PendingJump {
  std::size_t instruction;
  std::string label;
  std::size_t line;
};

}  // namespace

Program assemble(std::string_view text, std::string name) {
  Program prog;
  prog.name_ = std::move(name);

  std::vector<PendingJump> jumps;
  std::vector<std::pair<std::string, std::size_t>> dangling;  // labels awaiting an instruction
  std::uint32_t max_reg = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto line = trim(raw);
    if (line.empty()) continue;

    if (line.back() == ':') {
      auto label = trim(line.substr(0, line.size() - 1));
      if (!valid_label(label)) {
        throw AssembleError(line_no, "invalid label name '" + std::string(label) + "'");
      }
      std::string key(label);
      if (prog.labels_.count(key) ||
          std::any_of(dangling.begin(), dangling.end(),
                      [&](const auto& d) { return d.first == key; })) {
        throw AssembleError(line_no, "duplicate label '" + key + "'");
      }
      dangling.emplace_back(std::move(key), line_no);
      continue;
    }

    auto split = line.find_first_of(" \t");
    std::string mnemonic(line.substr(0, split));
    std::transform(mnemonic.begin(), mnemonic.end(), mnemonic.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    std::vector<std::string_view> args;
    if (split != std::string_view::npos) {
      auto rest = trim(line.substr(split));
      std::size_t start = 0;
      while (true) {
        auto comma = rest.find(',', start);
        auto arg = trim(rest.substr(start, comma == std::string_view::npos ? rest.npos
                                                                            : comma - start));
        if (arg.empty()) throw AssembleError(line_no, "empty operand");
        args.push_back(arg);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }

    Instruction ins;
    ins.line = line_no;
    auto expect = [&](std::size_t n) {
      if (args.size() != n) {
        throw AssembleError(line_no, mnemonic + " expects " + std::to_string(n) +
                                         " operand(s), got " + std::to_string(args.size()));
      }
    };
    auto reg = [&](std::size_t i) {
      auto r = parse_register(args[i], line_no);
      max_reg = std::max(max_reg, r);
      return r;
    };
    auto jump_to = [&](std::size_t i) {
      if (!valid_label(args[i])) {
        throw AssembleError(line_no, "invalid label operand '" + std::string(args[i]) + "'");
      }
      jumps.push_back({prog.code_.size(), std::string(args[i]), line_no});
    };

    if (mnemonic == "SET") {
      expect(2);
      ins.op = Opcode::Set;
      ins.a = reg(0);
      try {
        ins.constant = parse_natural(args[1]);
      } catch (const Error&) {
        throw AssembleError(line_no, "invalid constant '" + std::string(args[1]) + "'");
      }
      if (!to_u64(ins.constant)) prog.small_constants_ = false;
    } else if (mnemonic == "CPY") {
      expect(2);
      ins.op = Opcode::Cpy;
      ins.a = reg(0);
      ins.b = reg(1);
    } else if (mnemonic == "ADD" || mnemonic == "SUB") {
      expect(3);
      ins.op = mnemonic == "ADD" ? Opcode::Add : Opcode::Sub;
      ins.a = reg(0);
      ins.b = reg(1);
      ins.c = reg(2);
    } else if (mnemonic == "JZ") {
      expect(2);
      ins.op = Opcode::Jz;
      ins.a = reg(0);
      jump_to(1);
    } else if (mnemonic == "JLE") {
      expect(3);
      ins.op = Opcode::Jle;
      ins.a = reg(0);
      ins.b = reg(1);
      jump_to(2);
    } else if (mnemonic == "CHOOSE") {
      expect(2);
      ins.op = Opcode::Choose;
      ins.a = reg(0);
      ins.b = reg(1);
      prog.deterministic_ = false;
    } else if (mnemonic == "FAIL" || mnemonic == "HALT") {
      expect(0);
      ins.op = mnemonic == "FAIL" ? Opcode::Fail : Opcode::Halt;
    } else {
      throw AssembleError(line_no, "unknown opcode '" + mnemonic + "'");
    }

    for (auto& [label, _] : dangling) prog.labels_.emplace(std::move(label), prog.code_.size());
    dangling.clear();
    prog.code_.push_back(std::move(ins));
  }

  if (!dangling.empty()) {
    throw AssembleError(dangling.front().second,
                        "label '" + dangling.front().first + "' is not followed by an instruction");
  }
  if (prog.code_.empty()) throw AssembleError(0, "empty program");

  for (const auto& j : jumps) {
    auto it = prog.labels_.find(j.label);
    if (it == prog.labels_.end()) {
      throw AssembleError(j.line, "unresolved label '" + j.label + "'");
    }
    prog.code_[j.instruction].target = it->second;
  }
  prog.registers_ = static_cast<std::size_t>(max_reg) + 1;
  return prog;
}

std::string Program::to_text() const {
  std::multimap<std::size_t, std::string> by_index;
  std::map<std::size_t, std::string> target_name;
  for (const auto& [label, index] : labels_) {
    by_index.emplace(index, label);
    target_name.emplace(index, label);  // first name in sorted order wins
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < code_.size(); ++i) {
    auto [lo, hi] = by_index.equal_range(i);
    for (auto it = lo; it != hi; ++it) out << it->second << ":\n";
    const auto& ins = code_[i];
    out << opcode_name(ins.op);
    switch (ins.op) {
      case Opcode::Set: out << " r" << ins.a << ", " << ins.constant; break;
      case Opcode::Cpy: out << " r" << ins.a << ", r" << ins.b; break;
      case Opcode::Add:
      case Opcode::Sub: out << " r" << ins.a << ", r" << ins.b << ", r" << ins.c; break;
      case Opcode::Jz: out << " r" << ins.a << ", " << target_name.at(ins.target); break;
      case Opcode::Jle:
        out << " r" << ins.a << ", r" << ins.b << ", " << target_name.at(ins.target);
        break;
      case Opcode::Choose: out << " r" << ins.a << ", r" << ins.b; break;
      case Opcode::Fail:
      case Opcode::Halt: break;
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Execution
//
// Runs start on 64-bit words and restart on unbounded integers the first time
// a register would overflow. Both paths execute identical instruction
// sequences, so outcomes (including step counts) do not depend on which one
// finished the run.

namespace {

struct Overflow {};

struct WideArith {
  using Word = Natural;
  static Word from(const Natural& n) { return n; }
  static Natural to_natural(const Word& w) { return w; }
  static Word add(const Word& x, const Word& y) { return x + y; }
  static Word sub(const Word& x, const Word& y) { return x > y ? Word(x - y) : Word(0); }
  static bool is_zero(const Word& w) { return w.is_zero(); }
};

struct NarrowArith {
  using Word = std::uint64_t;
  static Word from(const Natural& n) { return n.convert_to<std::uint64_t>(); }
  static Natural to_natural(Word w) { return Natural(w); }
  static Word add(Word x, Word y) {
    Word out;
    if (__builtin_add_overflow(x, y, &out)) throw Overflow{};
    return out;
  }
  static Word sub(Word x, Word y) { return x > y ? x - y : 0; }
  static bool is_zero(Word w) { return w == 0; }
};

[[noreturn]] void fell_off(const Program& p) {
  throw MachineError("program '" + p.name() + "' ran past its last instruction without HALT");
}

template <class Arith>
RunOutcome execute_det(const Program& p, const Natural& input, std::uint64_t fuel) {
  using Word = typename Arith::Word;
  const auto& code = p.instructions();
  std::vector<Word> regs(p.register_count(), Word(0));
  regs[0] = Arith::from(input);
  std::size_t pc = 0;
  std::uint64_t steps = 0;
  while (true) {
    if (pc >= code.size()) fell_off(p);
    if (steps == fuel) return {RunStatus::FuelExhausted, std::nullopt, steps};
    ++steps;
    const auto& ins = code[pc];
    switch (ins.op) {
      case Opcode::Set: regs[ins.a] = Arith::from(ins.constant); ++pc; break;
      case Opcode::Cpy: regs[ins.b] = regs[ins.a]; ++pc; break;
      case Opcode::Add: regs[ins.c] = Arith::add(regs[ins.a], regs[ins.b]); ++pc; break;
      case Opcode::Sub: regs[ins.c] = Arith::sub(regs[ins.a], regs[ins.b]); ++pc; break;
      case Opcode::Jz: pc = Arith::is_zero(regs[ins.a]) ? ins.target : pc + 1; break;
      case Opcode::Jle: pc = regs[ins.a] <= regs[ins.b] ? ins.target : pc + 1; break;
      case Opcode::Choose:
        throw MachineError("CHOOSE reached in deterministic run of '" + p.name() + "'");
      case Opcode::Fail: return {RunStatus::Failed, std::nullopt, steps};
      case Opcode::Halt: return {RunStatus::Halted, Arith::to_natural(regs[0]), steps};
    }
  }
}

template <class Arith>
NondetRunOutcome execute_nondet(const Program& p, const Natural& input, std::uint64_t fuel,
                                std::uint64_t cap) {
  using Word = typename Arith::Word;
  struct Config {
    std::size_t pc;
    std::vector<Word> regs;
  };
  const auto& code = p.instructions();

  NondetRunOutcome out;
  bool found = false;
  bool capped = false;

  std::vector<Config> frontier;
  frontier.push_back({0, std::vector<Word>(p.register_count(), Word(0))});
  frontier.back().regs[0] = Arith::from(input);

  for (std::uint64_t depth = 0; depth < fuel && !frontier.empty() && !capped; ++depth) {
    std::vector<Config> next;
    for (auto& cfg : frontier) {
      if (out.branches_explored == cap) {
        capped = true;
        break;
      }
      ++out.branches_explored;
      if (cfg.pc >= code.size()) fell_off(p);
      const auto& ins = code[cfg.pc];
      auto& regs = cfg.regs;
      std::size_t next_pc = cfg.pc + 1;
      switch (ins.op) {
        case Opcode::Set: regs[ins.a] = Arith::from(ins.constant); break;
        case Opcode::Cpy: regs[ins.b] = regs[ins.a]; break;
        case Opcode::Add: regs[ins.c] = Arith::add(regs[ins.a], regs[ins.b]); break;
        case Opcode::Sub: regs[ins.c] = Arith::sub(regs[ins.a], regs[ins.b]); break;
        case Opcode::Jz:
          if (Arith::is_zero(regs[ins.a])) next_pc = ins.target;
          break;
        case Opcode::Jle:
          if (regs[ins.a] <= regs[ins.b]) next_pc = ins.target;
          break;
        case Opcode::Choose: {
          const Natural bound = Arith::to_natural(regs[ins.b]);
          if (Natural(next.size()) + bound + 1 > Natural(cap)) {
            capped = true;
            break;
          }
          const auto n = bound.template convert_to<std::uint64_t>();
          for (std::uint64_t v = 0; v <= n; ++v) {
            Config child{next_pc, regs};
            child.regs[ins.a] = Arith::from(Natural(v));
            next.push_back(std::move(child));
          }
          continue;
        }
        case Opcode::Fail: continue;
        case Opcode::Halt: {
          Natural value = Arith::to_natural(regs[0]);
          if (!found) {
            found = true;
            out.min_steps = depth + 1;
            out.output = std::move(value);
          } else if (value != *out.output) {
            out.consistent = false;
          }
          continue;
        }
      }
      if (capped) break;
      cfg.pc = next_pc;
      next.push_back(std::move(cfg));
    }
    frontier = std::move(next);
  }

  if (found) {
    out.status = NondetStatus::Halted;
  } else {
    // Live branches left at the fuel limit are as inconclusive as a cap hit.
    out.status = capped || !frontier.empty() ? NondetStatus::Indeterminate
                                             : NondetStatus::NoSuccess;
  }
  return out;
}

bool narrow_ok(const Program& p, const Natural& input) {
  return p.small_constants() && to_u64(input).has_value();
}

void require_natural(const Natural& input) {
  if (input < 0) throw Error("machine input must be a natural number");
}

}  // namespace

RunOutcome run_det(const Program& program, const Natural& input, std::uint64_t fuel) {
  require_natural(input);
  if (!program.deterministic()) {
    throw MachineError("program '" + program.name() + "' is nondeterministic; use run_nondet");
  }
  if (narrow_ok(program, input)) {
    try {
      return execute_det<NarrowArith>(program, input, fuel);
    } catch (const Overflow&) {
    }
  }
  return execute_det<WideArith>(program, input, fuel);
}

NondetRunOutcome run_nondet(const Program& program, const Natural& input, std::uint64_t fuel,
                            std::uint64_t branch_cap) {
  require_natural(input);
  if (fuel == 0) throw Error("run_nondet requires fuel > 0");
  if (branch_cap == 0) throw Error("run_nondet requires branch_cap > 0");
  if (narrow_ok(program, input)) {
    try {
      return execute_nondet<NarrowArith>(program, input, fuel, branch_cap);
    } catch (const Overflow&) {
    }
  }
  return execute_nondet<WideArith>(program, input, fuel, branch_cap);
}

}  // namespace enumlab
