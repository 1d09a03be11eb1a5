#include "enumlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "enumlab/enumlab.hpp"
#include "enumlab/report_io.hpp"

namespace enumlab::cli {

namespace {

using io::json;

struct Config {
  std::uint64_t fuel = kDefaultFuel;
  std::uint64_t branch_cap = kDefaultBranchCap;
  std::size_t prefix = 100;
  std::size_t horizon = 100;
  std::string format = "json";
  std::string out_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "@path" assembles a file, anything else names a corpus entry.
std::shared_ptr<const Program> resolve_program(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') {
    const auto path = spec.substr(1);
    return std::make_shared<const Program>(assemble(read_file(path), path));
  }
  return corpus::program(spec);
}

Listing resolve_listing(const std::string& spec, const Config& cfg) {
  Listing l;
  if (!spec.empty() && spec.front() == '@') {
    auto p = resolve_program(spec);
    l = make_listing(spec, p, p->deterministic() ? Mode::Deterministic : Mode::Nondeterministic);
  } else {
    l = corpus::listing(spec);
  }
  l.fuel = cfg.fuel;
  l.branch_cap = cfg.branch_cap;
  return l;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Mode parse_mode(const std::string& m) {
  if (m == "det" || m == "deterministic") return Mode::Deterministic;
  if (m == "nondet" || m == "nondeterministic") return Mode::Nondeterministic;
  throw UsageError("mode must be det or nondet, got '" + m + "'");
}

// Reductions name their deciders in the corpus; explicit flags override.
void default_deciders(const std::string& f, std::string& a, std::string& b) {
  if (!a.empty() && !b.empty()) return;
  if (f.empty() || f.front() == '@') {
    throw UsageError("--a-decider and --b-decider are required for reductions outside the corpus");
  }
  const auto& e = corpus::get(f);
  if (e.kind != EntryKind::Reduction) throw UsageError("'" + f + "' is not a reduction");
  if (a.empty()) a = e.from;
  if (b.empty()) b = e.to;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"enumlab: enumeration-order experiments on a step-counted register machine",
                 "enumlab"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    app.add_option("--fuel", cfg_.fuel, "Step limit per run")->check(CLI::PositiveNumber);
    app.add_option("--branch-cap", cfg_.branch_cap, "Configuration limit per nondeterministic run")
        ->check(CLI::PositiveNumber);
    app.add_option("-k,--prefix", cfg_.prefix, "Prefix length")->check(CLI::PositiveNumber);
    app.add_option("--horizon", cfg_.horizon, "Number of profiled inputs")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg_.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg_.out_path, "Write the report to a file instead of stdout");

    std::function<int()> action;
    add_commands(app, action);

    std::vector<std::string> argv_store{"enumlab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n\n" << app.help();
      return kUsage;
    }

    if (app.count("--fuel") == 0) {
      if (const char* env = std::getenv("ENUMLAB_FUEL")) {
        try {
          auto v = std::stoull(env);
          if (v == 0) throw std::invalid_argument("zero");
          cfg_.fuel = v;
        } catch (const std::exception&) {
          err_ << "error: ENUMLAB_FUEL must be a positive integer\n";
          return kUsage;
        }
      }
    }

    try {
      return action();
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const UnknownNameError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kRuntime;
    }
  }

 private:
  void emit(const std::string& text) {
    if (cfg_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + cfg_.out_path + "'");
    f << text;
  }
  void emit(const json& j) { emit(j.dump(2) + "\n"); }

  void add_commands(CLI::App& app, std::function<int()>& action) {
    // asm <file>
    {
      auto* cmd = app.add_subcommand("asm", "Assemble and validate a program file");
      auto* path = str();
      cmd->add_option("file", *path, "Program source")->required();
      cmd->callback([this, &action, path] {
        action = [this, path] {
          auto p = assemble(read_file(*path), *path);
          emit(io::to_json(p));
          return kOk;
        };
      });
    }
    // run <program> <input>
    {
      auto* cmd = app.add_subcommand("run", "Run a program on one input");
      auto* prog = str();
      auto* input = str();
      auto* mode = str("auto");
      cmd->add_option("program", *prog, "Corpus name or @path")->required();
      cmd->add_option("input", *input, "Input natural")->required();
      cmd->add_option("--mode", *mode, "auto, det or nondet")
          ->check(CLI::IsMember({"auto", "det", "nondet"}));
      cmd->callback([this, &action, prog, input, mode] {
        action = [this, prog, input, mode] {
          auto p = resolve_program(*prog);
          const Natural x = parse_natural(*input);
          const bool nondet = *mode == "nondet" || (*mode == "auto" && !p->deterministic());
          if (nondet) {
            emit(io::to_json(run_nondet(*p, x, cfg_.fuel, cfg_.branch_cap)));
          } else {
            emit(io::to_json(run_det(*p, x, cfg_.fuel)));
          }
          return kOk;
        };
      });
    }
    // profile
    {
      auto* cmd = app.add_subcommand("profile", "Values and step counts of a listing prefix");
      auto* name = str();
      auto* mode = str();
      cmd->add_option("--listing", *name, "Corpus name or @path")->required();
      cmd->add_option("--mode", *mode, "det or nondet (default: the listing's own)");
      cmd->callback([this, &action, name, mode] {
        action = [this, name, mode] {
          auto l = resolve_listing(*name, cfg_);
          if (!mode->empty()) l = with_mode(l, parse_mode(*mode));
          auto s = sample(l, cfg_.prefix);
          if (cfg_.format == "csv") {
            emit(io::sample_csv(s));
          } else {
            emit(io::to_json(s));
          }
          return kOk;
        };
      });
    }
    // coorder
    {
      auto* cmd = app.add_subcommand("coorder", "Co-order check of two listing prefixes");
      auto* a = str();
      auto* b = str();
      cmd->add_option("--a", *a, "First listing")->required();
      cmd->add_option("--b", *b, "Second listing")->required();
      cmd->callback([this, &action, a, b] {
        action = [this, a, b] {
          auto pa = prefix(resolve_listing(*a, cfg_), cfg_.prefix);
          auto pb = prefix(resolve_listing(*b, cfg_), cfg_.prefix);
          auto r = coorder_prefix(pa, pb);
          emit(io::to_json(r));
          return r.co_order ? kOk : kNegative;
        };
      });
    }
    // coorder-search
    {
      auto* cmd = app.add_subcommand("coorder-search", "Search two listing families for a co-order pair");
      auto* a = str();
      auto* b = str();
      cmd->add_option("--a", *a, "Comma-separated listings")->required();
      cmd->add_option("--b", *b, "Comma-separated listings")->required();
      cmd->callback([this, &action, a, b] {
        action = [this, a, b] {
          std::vector<Listing> fa, fb;
          for (const auto& n : split_list(*a)) fa.push_back(resolve_listing(n, cfg_));
          for (const auto& n : split_list(*b)) fb.push_back(resolve_listing(n, cfg_));
          auto r = coorder_search(fa, fb, cfg_.prefix);
          emit(io::to_json(r));
          return r.witness ? kOk : kNegative;
        };
      });
    }
    // rapidity
    {
      auto* cmd = app.add_subcommand("rapidity", "Compare enumeration speed of two listings");
      auto* a = str();
      auto* b = str();
      cmd->add_option("--a", *a, "Listing h")->required();
      cmd->add_option("--b", *b, "Listing g")->required();
      cmd->callback([this, &action, a, b] {
        action = [this, a, b] {
          auto th = time_profile(resolve_listing(*a, cfg_), cfg_.horizon);
          auto tg = time_profile(resolve_listing(*b, cfg_), cfg_.horizon);
          auto strict = strictly_more_rapid(th, tg);
          auto eventual = more_rapid(th, tg);
          if (cfg_.format == "csv") {
            emit(io::cumulative_csv(*a, th, *b, tg));
          } else {
            emit(json{{"strict", io::to_json(strict)}, {"eventual", io::to_json(eventual)}});
          }
          return eventual.witness_m ? kOk : kNegative;
        };
      });
    }
    // fit
    {
      auto* cmd = app.add_subcommand("fit", "Fit a polynomial exponent to a listing's profile");
      auto* name = str();
      auto* lower = keep(0.5);
      cmd->add_option("--listing", *name, "Listing")->required();
      cmd->add_option("--lower-fraction", *lower, "Start of the fitted range, as a fraction");
      cmd->callback([this, &action, name, lower] {
        action = [this, name, lower] {
          auto t = time_profile(resolve_listing(*name, cfg_), cfg_.horizon);
          emit(io::to_json(fit_poly_exponent(t, *lower)));
          return kOk;
        };
      });
    }
    // bound
    {
      auto* cmd = app.add_subcommand("bound", "Check steps[n] <= c (n + 1)^k from n0 on");
      auto* name = str();
      auto* b = bound_spec(cmd);
      cmd->add_option("--listing", *name, "Listing")->required();
      cmd->callback([this, &action, name, b] {
        action = [this, name, b] {
          auto t = time_profile(resolve_listing(*name, cfg_), cfg_.horizon);
          auto r = check_bound(t, b->k, b->c, b->n0);
          emit(io::to_json(r));
          return r.holds ? kOk : kNegative;
        };
      });
    }
    // certify {p|np}
    {
      auto* cmd = app.add_subcommand("certify", "Build a P or NP co-order certificate");
      auto* kind = str();
      auto* subject = str();
      auto* subject_decider = str();
      auto* witness = str();
      auto* search_cap = keep<std::uint64_t>(1'000'000);
      auto* b = bound_spec(cmd);
      cmd->add_option("kind", *kind, "p or np")->required()->check(CLI::IsMember({"p", "np"}));
      auto* s1 = cmd->add_option("--subject", *subject, "Subject listing");
      auto* s2 = cmd->add_option("--subject-decider", *subject_decider,
                                 "Subject set given by a decider, listed increasingly");
      s1->excludes(s2);
      cmd->add_option("--witness", *witness, "Witness listing")->required();
      cmd->add_option("--search-cap", *search_cap, "Scan limit for --subject-decider");
      cmd->callback([this, &action, kind, subject, subject_decider, witness, search_cap, b] {
        action = [this, kind, subject, subject_decider, witness, search_cap, b] {
          Subject s;
          if (!subject->empty()) {
            auto l = resolve_listing(*subject, cfg_);
            s = Subject{l.set, prefix(l, cfg_.horizon)};
          } else if (!subject_decider->empty()) {
            auto d = resolve_program(*subject_decider);
            const auto set = subject_decider->front() == '@' ? *subject_decider
                                                              : corpus::get(*subject_decider).set;
            s = Subject{set, increasing_listing(*d, cfg_.horizon, cfg_.fuel, *search_cap)};
          } else {
            throw UsageError("certify needs --subject or --subject-decider");
          }
          auto w = resolve_listing(*witness, cfg_);
          auto cert = *kind == "p" ? certify_p_coorder(s, w, b->k, b->c, b->n0, cfg_.horizon)
                                   : certify_np_coorder(s, w, b->k, b->c, b->n0, cfg_.horizon);
          emit(io::to_json(cert));
          return cert.valid() ? kOk : kNegative;
        };
      });
    }
    // verify <certificate.json>
    {
      auto* cmd = app.add_subcommand("verify", "Recompute a stored certificate");
      auto* path = str();
      cmd->add_option("certificate", *path, "Certificate JSON file")->required();
      cmd->callback([this, &action, path] {
        action = [this, path] {
          json j;
          try {
            j = json::parse(read_file(*path));
          } catch (const json::exception& e) {
            throw Error(std::string("certificate is not valid JSON: ") + e.what());
          }
          auto cert = io::certificate_from_json(j);
          auto w = resolve_listing(cert.witness_listing, cfg_);
          auto v = verify_certificate(cert, w);
          emit(json{{"reproduced", v.reproduced},
                    {"differences", v.differences},
                    {"valid", v.valid}});
          return v.reproduced && v.valid ? kOk : kNegative;
        };
      });
    }
    // reduce
    {
      auto* cmd = app.add_subcommand("reduce", "Verify a many-one reduction on a domain");
      auto* f = str();
      auto* a = str();
      auto* bd = str();
      auto* mode = str("det");
      auto* dom = domain(cmd);
      auto* b = optional_bound(cmd);
      cmd->add_option("--f", *f, "Reduction program")->required();
      cmd->add_option("--a-decider", *a, "Decider of the source set");
      cmd->add_option("--b-decider", *bd, "Decider of the target set");
      cmd->add_option("--mode", *mode, "det or nondet");
      cmd->callback([this, &action, f, a, bd, mode, dom, b] {
        action = [this, f, a, bd, mode, dom, b] {
          default_deciders(*f, *a, *bd);
          auto r = verify_reduction(*resolve_program(*f), *resolve_program(*a),
                                    *resolve_program(*bd), *dom, parse_mode(*mode), options(*b));
          if (cfg_.format == "csv") {
            emit(io::violations_csv(r));
          } else {
            emit(io::to_json(r));
          }
          return r.verified() ? kOk : kNegative;
        };
      });
    }
    // equiv {np|pu|npu}
    {
      auto* cmd = app.add_subcommand("equiv", "Check an np / pu / npu equivalence");
      auto* kind = str();
      auto* fab = str();
      auto* fba = str();
      auto* a = str();
      auto* bd = str();
      auto* la = str();
      auto* lb = str();
      auto* dom = domain(cmd);
      auto* b = optional_bound(cmd);
      cmd->add_option("kind", *kind, "np, pu or npu")->required()->check(
          CLI::IsMember({"np", "pu", "npu"}));
      cmd->add_option("--f-ab", *fab, "Reduction from A to B")->required();
      cmd->add_option("--f-ba", *fba, "Reduction from B to A")->required();
      cmd->add_option("--a-decider", *a, "Decider of A");
      cmd->add_option("--b-decider", *bd, "Decider of B");
      cmd->add_option("--a-listing", *la, "Listing of A for the co-order half");
      cmd->add_option("--b-listing", *lb, "Listing of B for the co-order half");
      cmd->callback([this, &action, kind, fab, fba, a, bd, la, lb, dom, b] {
        action = [this, kind, fab, fba, a, bd, la, lb, dom, b] {
          default_deciders(*fab, *a, *bd);
          const EquivalenceKind k = *kind == "np"   ? EquivalenceKind::NpEquiv
                                    : *kind == "pu" ? EquivalenceKind::Pu
                                                    : EquivalenceKind::Npu;
          std::optional<std::pair<Prefix, Prefix>> prefixes;
          if (!la->empty() || !lb->empty()) {
            if (la->empty() || lb->empty()) throw UsageError("give both --a-listing and --b-listing");
            prefixes.emplace(prefix(resolve_listing(*la, cfg_), cfg_.prefix),
                             prefix(resolve_listing(*lb, cfg_), cfg_.prefix));
          } else if (k != EquivalenceKind::NpEquiv) {
            throw UsageError(*kind + " needs --a-listing and --b-listing");
          }
          auto r = equivalence(*resolve_program(*fab), *resolve_program(*fba),
                               *resolve_program(*a), *resolve_program(*bd), *dom, k, prefixes,
                               options(*b));
          emit(io::to_json(r));
          return r.valid() ? kOk : kNegative;
        };
      });
    }
    // consistency
    {
      auto* cmd = app.add_subcommand("consistency", "Decide A through a reduction and compare");
      auto* f = str();
      auto* a = str();
      auto* bd = str();
      auto* mode = str("det");
      auto* dom = domain(cmd);
      cmd->add_option("--f", *f, "Reduction program")->required();
      cmd->add_option("--a-decider", *a, "Decider of A");
      cmd->add_option("--b-decider", *bd, "Decider of B");
      cmd->add_option("--mode", *mode, "det or nondet");
      cmd->callback([this, &action, f, a, bd, mode, dom] {
        action = [this, f, a, bd, mode, dom] {
          default_deciders(*f, *a, *bd);
          ReductionOptions opt;
          opt.fuel = cfg_.fuel;
          opt.branch_cap = cfg_.branch_cap;
          auto r = turing_consistency(*resolve_program(*f), *resolve_program(*a),
                                      *resolve_program(*bd), *dom, parse_mode(*mode), opt);
          emit(io::to_json(r));
          return r.consistent() ? kOk : kNegative;
        };
      });
    }
    // corpus list | corpus show <name>
    {
      auto* cmd = app.add_subcommand("corpus", "Inspect the built-in corpus");
      cmd->require_subcommand(1);
      auto* list = cmd->add_subcommand("list", "One entry per line with its kind");
      list->callback([this, &action] {
        action = [this] {
          std::ostringstream s;
          for (const auto& e : corpus::entries()) s << e.name << '\t' << to_string(e.kind) << '\n';
          emit(s.str());
          return kOk;
        };
      });
      auto* show = cmd->add_subcommand("show", "Print an entry's program source");
      auto* name = str();
      show->add_option("name", *name, "Entry name")->required();
      show->callback([this, &action, name] {
        action = [this, name] {
          emit(corpus::get(*name).source);
          return kOk;
        };
      });
    }
  }

  // Option targets live as long as the runner.
  template <class T>
  T* keep(T init) {
    auto p = std::make_shared<T>(std::move(init));
    owned_.push_back(p);
    return p.get();
  }
  std::string* str(std::string init = {}) { return keep(std::move(init)); }

  BoundSpec* bound_spec(CLI::App* cmd) {
    auto* b = keep(BoundSpec{});
    cmd->add_option("--k", b->k, "Polynomial degree")->required();
    cmd->add_option("--c", b->c, "Constant factor")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--n0", b->n0, "First index the bound applies to");
    return b;
  }

  // Reductions take an optional bound; it is active when --k is given.
  struct OptionalBound {
    BoundSpec spec;
    CLI::Option* k = nullptr;
    std::optional<BoundSpec> get() const {
      if (k->count() == 0) return std::nullopt;
      return spec;
    }
  };

  OptionalBound* optional_bound(CLI::App* cmd) {
    auto* ob = keep(OptionalBound{});
    ob->k = cmd->add_option("--k", ob->spec.k, "Polynomial degree for a bound check on f");
    cmd->add_option("--c", ob->spec.c, "Constant factor")->check(CLI::PositiveNumber)->needs(ob->k);
    cmd->add_option("--n0", ob->spec.n0, "First index the bound applies to")->needs(ob->k);
    return ob;
  }

  Domain* domain(CLI::App* cmd) {
    auto* d = keep(Domain{0, 999});
    cmd->add_option("--lo", d->lo, "First point of the domain");
    cmd->add_option("--hi", d->hi, "Last point of the domain (inclusive)");
    return d;
  }

  ReductionOptions options(const OptionalBound& b) const {
    ReductionOptions opt;
    opt.fuel = cfg_.fuel;
    opt.branch_cap = cfg_.branch_cap;
    opt.bound = b.get();
    return opt;
  }

  std::ostream& out_;
  std::ostream& err_;
  Config cfg_;
  std::vector<std::shared_ptr<void>> owned_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace enumlab::cli
