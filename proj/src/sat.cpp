#include "enumlab/sat.hpp"

#include <cstdlib>
#include <sstream>

namespace enumlab {

namespace {

class BitWriter {
 public:
  BitWriter() : code_(1) {}
  void put(unsigned value, unsigned width) {
    code_ <<= width;
    code_ += value;
  }
  Natural take() { return std::move(code_); }

 private:
  Natural code_;
};

class BitReader {
 public:
  explicit BitReader(const Natural& code) : code_(code) {
    left_ = code_ > 0 ? static_cast<std::size_t>(boost::multiprecision::msb(code_)) : 0;
  }
  bool valid_sentinel() const { return code_ > 0; }
  std::optional<unsigned> get(unsigned width) {
    if (left_ < width) return std::nullopt;
    unsigned v = 0;
    for (unsigned i = 0; i < width; ++i) {
      --left_;
      v = (v << 1) | (boost::multiprecision::bit_test(code_, static_cast<unsigned>(left_)) ? 1u : 0u);
    }
    return v;
  }
  std::size_t left() const { return left_; }

 private:
  const Natural& code_;
  std::size_t left_;
};

void check_caps(const Cnf& f) {
  if (f.num_vars > kSatMaxVars) {
    throw SatCodeError("formula has " + std::to_string(f.num_vars) + " variables, cap is " +
                       std::to_string(kSatMaxVars));
  }
  if (f.clauses.size() > kSatMaxClauses) {
    throw SatCodeError("formula has " + std::to_string(f.clauses.size()) + " clauses, cap is " +
                       std::to_string(kSatMaxClauses));
  }
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      const unsigned v = static_cast<unsigned>(std::abs(lit));
      if (lit == 0 || v > f.num_vars) {
        throw SatCodeError("literal " + std::to_string(lit) + " outside variables 1.." +
                           std::to_string(f.num_vars));
      }
    }
  }
}

bool evaluate_under(const Cnf& f, unsigned long assignment) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const unsigned v = static_cast<unsigned>(std::abs(lit));
      const bool value = (assignment >> (v - 1)) & 1u;
      if (value != (lit < 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

Natural sat_encode(const Cnf& f) {
  check_caps(f);
  BitWriter w;
  w.put(f.num_vars, 4);
  w.put(static_cast<unsigned>(f.clauses.size()), 5);
  for (const auto& clause : f.clauses) {
    for (int lit : clause) w.put(2u * static_cast<unsigned>(std::abs(lit)) + (lit < 0 ? 1u : 0u), 5);
    w.put(0, 5);
  }
  return w.take();
}

std::optional<Cnf> sat_try_decode(const Natural& code) {
  if (code <= 0) return std::nullopt;
  BitReader r(code);
  auto nv = r.get(4);
  auto nc = r.get(5);
  if (!nv || !nc || *nv > kSatMaxVars || *nc > kSatMaxClauses) return std::nullopt;
  Cnf f;
  f.num_vars = *nv;
  f.clauses.resize(*nc);
  for (auto& clause : f.clauses) {
    while (true) {
      auto lit = r.get(5);
      if (!lit) return std::nullopt;
      if (*lit == 0) break;
      const unsigned v = *lit >> 1;
      if (v == 0 || v > f.num_vars) return std::nullopt;
      clause.push_back((*lit & 1u) ? -static_cast<int>(v) : static_cast<int>(v));
    }
  }
  if (r.left() != 0) return std::nullopt;
  return f;
}

Cnf sat_decode(const Natural& code) {
  auto f = sat_try_decode(code);
  if (!f) throw SatCodeError("malformed SAT code " + code.str());
  return *f;
}

bool sat_brute_force(const Cnf& f) {
  check_caps(f);
  const unsigned long total = 1ul << f.num_vars;
  for (unsigned long a = 0; a < total; ++a) {
    if (evaluate_under(f, a)) return true;
  }
  return false;
}

bool sat_brute_force(const Natural& code) { return sat_brute_force(sat_decode(code)); }

std::string to_string(const Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Machine programs over codes.
//
// Register map:
//   r0 input / verdict     r1 constant 1        r2 unread bits, left aligned
//   r3 T = 2^(L0 - 1)      r4 bits left         r5 bit scratch
//   r6 doubling scratch    r7 variable count    r8 clause count
//   r9 always 0            r10 clauses left     r11 clause satisfied
//   r12 variable           r13 sign bit         r14 variable value
//   r15, r16 saved r2, r4  r17 power of two     r18 syntax pass flag
//   r20..r31 values of x1..x12
//   r40..r56 constants 0..16
//
// Reading a bit never halves anything: with T fixed at the top bit position,
// the next bit is 1 iff T <= r2; the bit is subtracted off and r2 doubled.

namespace {

class SatAsm {
 public:
  explicit SatAsm(bool guess) : guess_(guess) {}

  std::string build() {
    line("# SAT code " + std::string(guess_ ? "acceptor (guess and check)" : "decider (brute force)"));
    line("SET r1, 1");
    for (int i = 1; i <= 16; ++i) line("SET r" + std::to_string(40 + i) + ", " + std::to_string(i));
    line("JZ r0, reject");
    // L0 and T from the sentinel
    line("SET r17, 1");
    line("SET r4, 0");
    line("SET r3, 0");
    label("pow");
    line("ADD r17, r17, r6");
    line("JLE r6, r0, pow_up");
    line("JZ r9, pow_done");
    label("pow_up");
    line("CPY r17, r3");
    line("CPY r6, r17");
    line("ADD r4, r1, r4");
    line("JZ r9, pow");
    label("pow_done");
    line("SUB r0, r17, r2");
    field("r7", 4);
    field("r8", 5);
    line("JLE r7, r52, nv_ok");
    line("JZ r9, reject");
    label("nv_ok");
    line("JLE r8, r56, nc_ok");
    line("JZ r9, reject");
    label("nc_ok");
    line("CPY r2, r15");
    line("CPY r4, r16");
    // the acceptor makes one syntax pass (r18 = 1) before it branches
    if (guess_) line("SET r18, 1");
    label("assign");
    line("CPY r15, r2");
    line("CPY r16, r4");
    line("CPY r8, r10");
    label("clause");
    line("JZ r10, formula_end");
    line("SUB r10, r1, r10");
    line("SET r11, 0");
    label("literal");
    field("r12", 4);
    bit("r13");
    line("JZ r12, lit_zero");
    line("JLE r12, r7, var_ok");
    line("JZ r9, reject");
    label("var_ok");
    for (int v = 1; v <= 11; ++v) {
      line("JLE r12, r" + std::to_string(40 + v) + ", val_" + std::to_string(v));
    }
    line("JZ r9, val_12");
    for (int v = 1; v <= 12; ++v) {
      label("val_" + std::to_string(v));
      line("CPY r" + std::to_string(19 + v) + ", r14");
      if (v < 12) line("JZ r9, have_val");
    }
    label("have_val");
    line("JLE r14, r13, maybe_eq");
    line("JZ r9, lit_true");
    label("maybe_eq");
    line("JLE r13, r14, literal");
    label("lit_true");
    line("SET r11, 1");
    line("JZ r9, literal");
    label("lit_zero");
    line("JZ r13, clause_end");
    line("JZ r9, reject");
    label("clause_end");
    line("JZ r11, clause_false");
    line("JZ r9, clause");
    label("formula_end");
    if (guess_) {
      line("JZ r4, well_formed");
      line("JZ r9, reject");
      label("well_formed");
      line("JZ r18, accept");
      line("SET r18, 0");
      for (int v = 1; v <= 12; ++v) {
        line("JLE r7, r" + std::to_string(40 + v - 1) + ", assign");
        line("CHOOSE r" + std::to_string(19 + v) + ", r1");
      }
      line("JZ r9, assign");
    } else {
      line("JZ r4, accept");
      line("JZ r9, reject");
    }
    label("accept");
    line("SET r0, 1");
    line("HALT");
    label("clause_false");
    if (guess_) {
      line("JZ r18, refuted");
      line("JZ r9, clause");
      label("refuted");
      line("FAIL");
    } else {
      // binary increment over x1..x_nv; overflow means every assignment failed
      for (int v = 1; v <= 12; ++v) {
        line("JLE r7, r" + std::to_string(40 + v - 1) + ", reject");
        line("JZ r" + std::to_string(19 + v) + ", inc_" + std::to_string(v));
        line("SET r" + std::to_string(19 + v) + ", 0");
      }
      line("JZ r9, reject");
      for (int v = 1; v <= 12; ++v) {
        label("inc_" + std::to_string(v));
        line("SET r" + std::to_string(19 + v) + ", 1");
        line("JZ r9, assign");
      }
    }
    label("reject");
    if (guess_) {
      line("FAIL");
    } else {
      line("SET r0, 0");
      line("HALT");
    }
    return out_.str();
  }

 private:
  void line(const std::string& s) { out_ << s << '\n'; }
  void label(const std::string& s) { out_ << s << ":\n"; }

  void bit(const std::string& dst) {
    const auto id = std::to_string(counter_++);
    line("JZ r4, reject");
    line("SUB r4, r1, r4");
    line("SET " + dst + ", 0");
    line("JLE r3, r2, one_" + id);
    line("JZ r9, shift_" + id);
    label("one_" + id);
    line("SUB r2, r3, r2");
    line("SET " + dst + ", 1");
    label("shift_" + id);
    line("ADD r2, r2, r2");
  }

  void field(const std::string& dst, int width) {
    line("SET " + dst + ", 0");
    for (int i = 0; i < width; ++i) {
      line("ADD " + dst + ", " + dst + ", " + dst);
      bit("r5");
      line("ADD " + dst + ", r5, " + dst);
    }
  }

  bool guess_;
  int counter_ = 0;
  std::ostringstream out_;
};

}  // namespace

std::string sat_decider_source() { return SatAsm(false).build(); }

std::string sat_guess_source() { return SatAsm(true).build(); }

Program sat_guess_program(const Cnf& f) {
  check_caps(f);
  std::ostringstream out;
  out << "# guess and check for one formula; x_v lives in r(10 + v)\n";
  out << "SET r1, 1\n";
  for (unsigned v = 1; v <= f.num_vars; ++v) out << "CHOOSE r" << 10 + v << ", r1\n";
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& clause = f.clauses[j];
    for (std::size_t i = 0; i < clause.size(); ++i) {
      const int lit = clause[i];
      const unsigned reg = 10 + static_cast<unsigned>(std::abs(lit));
      if (lit > 0) {
        out << "JZ r" << reg << ", c" << j << "_l" << i + 1 << '\n';
        out << "JZ r9, ok_" << j << '\n';
        out << "c" << j << "_l" << i + 1 << ":\n";
      } else {
        out << "JZ r" << reg << ", ok_" << j << '\n';
      }
    }
    out << "FAIL\n";
    out << "ok_" << j << ":\n";
  }
  out << "SET r0, 1\n";
  out << "HALT\n";
  return assemble(out.str(), "sat_guess_formula");
}

Prefix satisfiable_codes(std::size_t k) {
  Prefix out;
  out.values.reserve(k);
  for (std::uint64_t x = 0; out.size() < k; ++x) {
    auto f = sat_try_decode(Natural(x));
    if (f && sat_brute_force(*f)) out.values.emplace_back(x);
  }
  return out;
}

}  // namespace enumlab
