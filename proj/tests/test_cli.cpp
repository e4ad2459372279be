#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "semilab/cli.hpp"
#include "semilab/report.hpp"
#include "semilab/sg_io.hpp"

using namespace semilab;
using namespace semilab::testing;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Writes content to a throwaway file and returns the path.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = "semilab_test_" + std::to_string(counter++) + ".sg";
    std::ofstream f(path_);
    f << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("validate") {
  TempFile good(write_sg(b2()));
  const CliResult ok = run_cli({"validate", good.path()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("n=5") != std::string::npos);
  CHECK(ok.out.find("zero=0") != std::string::npos);

  TempFile bad("2\n1 0\n0 0\n");
  const CliResult broken = run_cli({"validate", bad.path()});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("associativity") != std::string::npos);

  const CliResult missing = run_cli({"validate", "does_not_exist.sg"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("does_not_exist.sg") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"no-such-command"}).code == 1);
  CHECK(run_cli({"validate"}).code == 1);
  CHECK(run_cli({"enumerate", "--order", "2", "--filter", "bogus"}).code == 1);
  CHECK(run_cli({"construct", "nonsense"}).code == 1);
}

TEST_CASE("analyze text and json") {
  TempFile b2f(write_sg(b2()));
  const CliResult text = run_cli({"analyze", b2f.path()});
  CHECK(text.code == 0);
  CHECK(text.out.find("graph=yes algebra=yes prime-ideal=yes") != std::string::npos);
  CHECK(text.out.find("max subsemilattice 3") != std::string::npos);

  const CliResult js = run_cli({"analyze", b2f.path(), "--json"});
  CHECK(js.code == 0);
  const AnalysisReport parsed = report_from_json(js.out);
  CHECK(parsed == analyze(b2()));

  SUBCASE("identical invocations are byte-identical") {
    CHECK(run_cli({"analyze", b2f.path(), "--json"}).out == js.out);
  }
  SUBCASE("round trip across report shapes") {
    // with and without a zero, with and without the square-root section
    for (const Semigroup& s : {chain(3).sg, cyclic_group(3), null_semigroup(2)}) {
      const AnalysisReport r = analyze(s);
      CHECK(report_from_json(report_to_json(r)) == r);
    }
  }
}

TEST_CASE("construct output re-validates") {
  for (const char* kind : {"b2", "brandt:3", "chain:4", "semilattice:F"}) {
    const CliResult r = run_cli({"construct", kind});
    REQUIRE(r.code == 0);
    CHECK_NOTHROW(read_sg_string(r.out));
  }
  TempFile b2f(write_sg(b2()));
  TempFile c3f(write_sg(chain(3).sg));
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"construct", "times0", c3f.path(), b2f.path()},
        std::vector<std::string>{"construct", "adjoin-zero", b2f.path()},
        std::vector<std::string>{"construct", "zprime", b2f.path()},
        std::vector<std::string>{"construct", "embed", c3f.path()},
        std::vector<std::string>{"construct", "munn", c3f.path()}}) {
    const CliResult r = run_cli(args);
    REQUIRE(r.code == 0);
    CHECK_NOTHROW(read_sg_string(r.out));
  }
}

TEST_CASE("iso command") {
  TempFile b2f(write_sg(b2()));
  TempFile brandt2(run_cli({"construct", "brandt:2"}).out);
  const CliResult hit = run_cli({"iso", b2f.path(), brandt2.path()});
  CHECK(hit.code == 0);
  CHECK(hit.out.find("isomorphic") != std::string::npos);

  TempFile companion(write_sg(b2_companion()));
  const CliResult miss = run_cli({"iso", b2f.path(), companion.path()});
  CHECK(miss.code == 0);
  CHECK(miss.out.find("none (idempotent count") != std::string::npos);
}

TEST_CASE("enumerate command") {
  const CliResult r = run_cli({"enumerate", "--order", "2", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5 classes") != std::string::npos);

  const CliResult listed = run_cli({"enumerate", "--order", "2"});
  CHECK(listed.out.find("# class 4") != std::string::npos);

  const CliResult zero = run_cli({"enumerate", "--order", "2", "--filter", "zero",
                                  "--count-only"});
  CHECK(zero.out.find("2 classes") != std::string::npos);

  // Of the five order-2 classes only the 2-chain maps onto a nontrivial
  // semilattice, and only the trivial semigroup is B2-combinatorial at
  // order 1.
  const CliResult indec = run_cli({"enumerate", "--order", "2", "--filter", "s-indec",
                                   "--count-only"});
  CHECK(indec.out.find("4 classes") != std::string::npos);
  const CliResult b2c = run_cli({"enumerate", "--order", "1", "--filter", "b2c",
                                 "--count-only"});
  CHECK(b2c.out.find("1 classes") != std::string::npos);
}

TEST_CASE("classify-b2c command") {
  const CliResult r = run_cli({"classify-b2c", "--order", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 B2-combinatorial classes") != std::string::npos);
  CHECK(r.out.find("semilattices swept: 15") != std::string::npos);
  CHECK(run_cli({"classify-b2c", "--order", "7"}).code == 2);
}

TEST_CASE("algebra command") {
  TempFile b2f(write_sg(b2()));
  const CliResult full = run_cli({"algebra", b2f.path(), "--blocks"});
  CHECK(full.code == 0);
  CHECK(full.out.find("dim 5, radical 0, blocks 2, 1-dim blocks 1") != std::string::npos);
  CHECK(full.out.find("{1 2}") != std::string::npos);
  const CliResult contracted = run_cli({"algebra", b2f.path(), "--contracted"});
  CHECK(contracted.out.find("dim 4, radical 0, blocks 1, 1-dim blocks 0") !=
        std::string::npos);
}

TEST_CASE("verify-prop8 command") {
  TempFile b2f(write_sg(b2()));
  const CliResult r = run_cli({"verify-prop8", b2f.path()});
  CHECK(r.code == 0);
  CHECK(r.out.find("(i)") != std::string::npos);
  CHECK(r.out.find("NO") == std::string::npos);

  const CliResult js = run_cli({"verify-prop8", b2f.path(), "--json"});
  CHECK(js.code == 0);
  CHECK(js.out.find("\"all_ok\": true") != std::string::npos);

  TempFile chain2(write_sg(chain(2).sg));
  CHECK(run_cli({"verify-prop8", chain2.path()}).code == 2);
}
