#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

struct Line {
  std::string op;
  std::vector<std::string> args;
};

struct Parsed {
  std::vector<Line> code;
  std::map<std::string, std::size_t> labels;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Parsed parse(const std::string& source) {
  Parsed p;
  std::istringstream in(source);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto line = trim(raw);
    if (line.empty()) continue;
    if (line.back() == ':') {
      p.labels[line.substr(0, line.size() - 1)] = p.code.size();
      continue;
    }
    Line l;
    auto sp = line.find_first_of(" \t");
    l.op = line.substr(0, sp);
    for (auto& c : l.op) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (sp != std::string::npos) {
      std::stringstream rest(line.substr(sp));
      std::string arg;
      while (std::getline(rest, arg, ',')) l.args.push_back(trim(arg));
    }
    p.code.push_back(std::move(l));
  }
  return p;
}

int reg(const std::string& s) { return std::stoi(s.substr(1)); }

struct State {
  std::size_t pc = 0;
  std::map<int, Big> r;
  Big get(const std::string& name) const {
    auto it = r.find(reg(name));
    return it == r.end() ? Big(0) : it->second;
  }
};

enum class Effect { Continue, Halt, Fail, Choose };

// One instruction; CHOOSE is left to the caller.
Effect step(const Parsed& p, State& s) {
  if (s.pc >= p.code.size()) throw std::runtime_error("ran off the end");
  const auto& l = p.code[s.pc];
  const auto& a = l.args;
  if (l.op == "SET") {
    s.r[reg(a[0])] = Big(a[1]);
  } else if (l.op == "CPY") {
    s.r[reg(a[1])] = s.get(a[0]);
  } else if (l.op == "ADD") {
    s.r[reg(a[2])] = s.get(a[0]) + s.get(a[1]);
  } else if (l.op == "SUB") {
    Big x = s.get(a[0]), y = s.get(a[1]);
    s.r[reg(a[2])] = x > y ? Big(x - y) : Big(0);
  } else if (l.op == "JZ") {
    if (s.get(a[0]) == 0) {
      s.pc = p.labels.at(a[1]);
      return Effect::Continue;
    }
  } else if (l.op == "JLE") {
    if (s.get(a[0]) <= s.get(a[1])) {
      s.pc = p.labels.at(a[2]);
      return Effect::Continue;
    }
  } else if (l.op == "HALT") {
    return Effect::Halt;
  } else if (l.op == "FAIL") {
    return Effect::Fail;
  } else if (l.op == "CHOOSE") {
    return Effect::Choose;
  } else {
    throw std::runtime_error("unknown op " + l.op);
  }
  ++s.pc;
  return Effect::Continue;
}

void dfs(const Parsed& p, State s, std::uint64_t depth, std::uint64_t fuel, DfsOutcome& out) {
  while (depth < fuel) {
    ++depth;
    switch (step(p, s)) {
      case Effect::Continue: break;
      case Effect::Halt:
        if (!out.min_steps || depth < *out.min_steps) out.min_steps = depth;
        out.outputs.insert(s.get("r0"));
        ++out.halting_branches;
        return;
      case Effect::Fail: return;
      case Effect::Choose: {
        const auto& a = p.code[s.pc].args;
        const Big bound = s.get(a[1]);
        for (Big v = 0; v <= bound; ++v) {
          State child = s;
          child.r[reg(a[0])] = v;
          ++child.pc;
          dfs(p, child, depth, fuel, out);
        }
        return;
      }
    }
  }
}

}  // namespace

RefOutcome ref_run(const std::string& source, const Big& input, std::uint64_t fuel) {
  const auto p = parse(source);
  State s;
  s.r[0] = input;
  RefOutcome out;
  while (out.steps < fuel) {
    ++out.steps;
    switch (step(p, s)) {
      case Effect::Continue: break;
      case Effect::Halt:
        out.status = RefOutcome::Halted;
        out.output = s.get("r0");
        return out;
      case Effect::Fail: out.status = RefOutcome::Failed; return out;
      case Effect::Choose: throw std::runtime_error("CHOOSE in a deterministic run");
    }
  }
  out.status = RefOutcome::OutOfFuel;
  return out;
}

DfsOutcome dfs_all_branches(const std::string& source, const Big& input, std::uint64_t fuel) {
  const auto p = parse(source);
  State s;
  s.r[0] = input;
  DfsOutcome out;
  dfs(p, s, 0, fuel, out);
  return out;
}

std::vector<std::uint64_t> sieve_primes(std::size_t count) {
  std::size_t limit = 64;
  while (true) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::size_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      if (primes.size() == count) return primes;
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    limit *= 2;
  }
}

bool truth_table_sat(unsigned num_vars, const std::vector<std::vector<int>>& clauses) {
  for (std::uint32_t row = 0; row < (1u << num_vars); ++row) {
    bool all = true;
    for (const auto& clause : clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = (row >> (std::abs(lit) - 1)) & 1u;
        if (lit > 0 ? value : !value) any = true;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool all_pairs_coorder(const std::vector<Big>& a, const std::vector<Big>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

Big closed_form(const std::string& listing, std::uint64_t n) {
  if (listing == "identity" || listing == "exp_padded" || listing == "guess_identity") return n;
  if (listing == "evens") return Big(2) * n;
  if (listing == "odds") return Big(2) * n + 1;
  if (listing == "squares") return Big(n) * n;
  if (listing == "primes" || listing == "primes_padded") return sieve_primes(n + 1).back();
  if (listing == "swap_order") return n % 2 == 0 ? Big(n + 1) : Big(n - 1);
  throw std::runtime_error("no closed form for " + listing);
}

bool member(const std::string& decider, const Big& x) {
  if (decider == "is_nat") return true;
  if (decider == "is_empty") return false;
  if (decider == "is_even") return x % 2 == 0;
  if (decider == "is_odd") return x % 2 == 1;
  if (decider == "is_square") {
    Big r = boost::multiprecision::sqrt(x);
    return r * r == x;
  }
  if (decider == "is_prime") {
    if (x < 2) return false;
    for (Big d = 2; d * d <= x; ++d) {
      if (x % d == 0) return false;
    }
    return true;
  }
  throw std::runtime_error("no membership oracle for " + decider);
}

std::vector<Big> random_injective(std::mt19937_64& rng, std::size_t k, std::uint64_t range) {
  std::set<std::uint64_t> seen;
  std::vector<Big> out;
  std::uniform_int_distribution<std::uint64_t> dist(0, range - 1);
  while (out.size() < k) {
    auto v = dist(rng);
    if (seen.insert(v).second) out.emplace_back(v);
  }
  return out;
}

}  // namespace oracle
