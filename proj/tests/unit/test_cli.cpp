#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "enumlab/cli.hpp"
#include "enumlab/report_io.hpp"

using enumlab::io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = enumlab::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "enumlab_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("coorder exit codes") {
  auto ok = cli({"coorder", "--a", "primes", "--b", "identity", "-k", "50"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["co_order"] == true);
  auto no = cli({"coorder", "--a", "swap_order", "--b", "identity", "-k", "4"});
  CHECK(no.code == 1);
  CHECK(json::parse(no.out)["co_order"] == false);
  // global flags before the subcommand too
  CHECK(cli({"-k", "4", "coorder", "--a", "swap_order", "--b", "identity"}).out == no.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == 2);
  auto bad = cli({"frobnicate"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(bad.out.empty());
  CHECK(cli({"coorder", "--a", "primes"}).code == 2);
  CHECK(cli({"-k", "0", "coorder", "--a", "primes", "--b", "identity"}).code == 2);
  CHECK(cli({"--format", "xml", "corpus", "list"}).code == 2);
  CHECK(cli({"profile", "--listing", "nope"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("runtime errors exit 3") {
  auto r = cli({"--fuel", "10", "profile", "--listing", "primes", "-k", "20"});
  CHECK(r.code == 3);
  CHECK(r.err.find("primes") != std::string::npos);
  CHECK(cli({"asm", scratch("missing.asm").string()}).code == 3);
  CHECK(cli({"run", "primes", "abc"}).code == 3);
}

TEST_CASE("profile as CSV") {
  auto r = cli({"profile", "--listing", "primes", "-k", "100", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,value,steps\n0,2,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 101);
}

TEST_CASE("run, asm and @path programs") {
  auto path = scratch("double.asm");
  std::ofstream(path) << "# doubles its input\nADD r0, r0, r0\nHALT\n";
  auto a = cli({"asm", path.string()});
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["instructions"] == 2);
  auto r = cli({"run", "@" + path.string(), "21"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["output"] == 42);
  auto n = cli({"run", "guess_identity", "5"});
  CHECK(json::parse(n.out)["min_steps"] == 4);
  auto c = cli({"coorder", "--a", "@" + path.string(), "--b", "identity", "-k", "30"});
  CHECK(c.code == 0);

  auto broken = scratch("broken.asm");
  std::ofstream(broken) << "HALT\nJZ r1, nowhere\n";
  auto e = cli({"asm", broken.string()});
  CHECK(e.code == 3);
  CHECK(e.err.find("line 2") != std::string::npos);
}

TEST_CASE("rapidity, fit and bound") {
  auto r = cli({"rapidity", "--a", "primes", "--b", "primes_padded"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["strict"]["strictly_more_rapid_within_horizon"] == true);
  CHECK(j["eventual"]["witness_m"] == 0);
  CHECK(cli({"rapidity", "--a", "primes_padded", "--b", "primes"}).code == 1);
  auto csv = cli({"--horizon", "3", "--format", "csv", "rapidity", "--a", "identity", "--b", "evens"});
  CHECK(csv.out == "listing,0,1,2\nidentity,1,2,3\nevens,2,4,6\n");

  auto f = cli({"fit", "--listing", "squares", "--horizon", "64"});
  CHECK(f.code == 0);
  CHECK(json::parse(f.out)["sample_range"] == json::array({32, 63}));
  CHECK(cli({"bound", "--listing", "evens", "--k", "0", "--c", "2"}).code == 0);
  CHECK(cli({"bound", "--listing", "squares", "--k", "0", "--c", "2"}).code == 1);
  CHECK(cli({"bound", "--listing", "squares", "--k", "1", "--c", "0"}).code == 2);
}

TEST_CASE("certify then verify") {
  auto out = scratch("cert.json");
  auto c = cli({"--horizon", "50", "--out", out.string(), "certify", "p", "--subject-decider",
                "is_prime", "--witness", "identity", "--k", "1", "--c", "1"});
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  auto v = cli({"verify", out.string()});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["reproduced"] == true);

  auto j = json::parse(std::ifstream(out));
  j["witness_profile"]["steps"][0] = 5;
  std::ofstream(out) << j.dump();
  auto tampered = cli({"verify", out.string()});
  CHECK(tampered.code == 1);
  CHECK(json::parse(tampered.out)["differences"] == json::array({"witness_profile"}));

  auto np = cli({"--horizon", "20", "certify", "np", "--subject", "squares", "--witness",
                 "guess_identity", "--k", "1", "--c", "4"});
  CHECK(np.code == 0);
  CHECK(json::parse(np.out)["kind"] == "NP_coorder");
  CHECK(cli({"certify", "p", "--witness", "identity", "--k", "1", "--c", "1"}).code == 2);
}

TEST_CASE("reductions, equivalences and consistency") {
  auto broken = cli({"reduce", "--f", "broken_even_to_odd", "--lo", "0", "--hi", "999"});
  CHECK(broken.code == 1);
  CHECK(json::parse(broken.out)["violations"][0]["x"] == 0);
  auto good = cli({"reduce", "--f", "even_to_odd", "--lo", "0", "--hi", "999", "--k", "1", "--c", "3"});
  CHECK(good.code == 0);
  CHECK(json::parse(good.out)["bound"]["holds"] == true);
  auto csv = cli({"--format", "csv", "reduce", "--f", "broken_even_to_odd", "--hi", "1"});
  CHECK(csv.out == "x,a_bit,b_bit\n0,1,0\n1,0,1\n");

  auto pu = cli({"equiv", "pu", "--f-ab", "even_to_odd", "--f-ba", "odd_to_even", "--lo", "1",
                 "--hi", "999", "--a-listing", "evens", "--b-listing", "odds"});
  CHECK(pu.code == 0);
  CHECK(json::parse(pu.out)["valid"] == true);
  CHECK(cli({"equiv", "npu", "--f-ab", "even_to_odd", "--f-ba", "odd_to_even", "--lo", "0",
             "--hi", "99", "--a-listing", "evens", "--b-listing", "odds"})
            .code == 1);
  CHECK(cli({"equiv", "pu", "--f-ab", "even_to_odd", "--f-ba", "odd_to_even"}).code == 2);

  CHECK(cli({"consistency", "--f", "even_to_odd"}).code == 0);
  CHECK(cli({"consistency", "--f", "broken_even_to_odd", "--hi", "5"}).code == 1);
}

TEST_CASE("coorder-search and corpus") {
  auto s = cli({"-k", "20", "coorder-search", "--a", "swap_order,squares", "--b", "evens"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["witness"]["listing_a"] == "squares");
  CHECK(cli({"-k", "20", "coorder-search", "--a", "swap_order", "--b", "evens"}).code == 1);

  auto list = cli({"corpus", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("primes\tlisting\n") != std::string::npos);
  CHECK(list.out.find("is_even\tdecider\n") != std::string::npos);
  auto show = cli({"corpus", "show", "identity"});
  CHECK(show.out.find("HALT") != std::string::npos);
}

TEST_CASE("fuel from the environment") {
  ::setenv("ENUMLAB_FUEL", "10", 1);
  CHECK(cli({"profile", "--listing", "primes", "-k", "20"}).code == 3);
  CHECK(cli({"--fuel", "1000000", "profile", "--listing", "primes", "-k", "20"}).code == 0);
  ::setenv("ENUMLAB_FUEL", "zero", 1);
  CHECK(cli({"corpus", "list"}).code == 2);
  ::unsetenv("ENUMLAB_FUEL");
}
