#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "antipode/antipode.hpp"
#include "antipode/cli.hpp"
#include "antipode/codes.hpp"
#include "antipode/constructions.hpp"
#include "antipode/registry.hpp"

using namespace antipode;
namespace C = antipode::constructions;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("antipode_cli_" + name); }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, BuildLeech) {
  const Result r = run({"build", "leech"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  std::istringstream is(r.out);
  const ScaledLattice l = read_lattice(is);
  EXPECT_EQ(l.rank(), 24u);
  EXPECT_EQ(determinant(l), Rat(1));
}

TEST(Cli, BuildRoundTripsEveryLatticeName) {
  for (const auto& name : lattice_names()) {
    std::vector<std::string> args{"build", name, "--out", temp_file(name).string()};
    if (name == "zn" || name == "an" || name == "dn") args.insert(args.end(), {"--dim", "3"});
    const Result r = run(args);
    ASSERT_EQ(r.code, kExitPass) << name << ": " << r.err;
    std::ifstream f(temp_file(name));
    const ScaledLattice back = read_lattice(f);
    EXPECT_TRUE(lattice_equal(back, *named_lattice(name, 3))) << name;
    fs::remove(temp_file(name));
  }
  const Result z1 = run({"build", "zn", "--dim", "1"});
  EXPECT_EQ(z1.code, kExitPass);
  EXPECT_EQ(z1.out, "1 1\nscale 1\n1 1\n1\n");
}

TEST(Cli, BuildRoundTripsEveryPackingAndCode) {
  for (const auto& name : C::packing_names()) {
    const Result r = run({"build", name});
    ASSERT_EQ(r.code, kExitPass) << name << ": " << r.err;
    std::istringstream is(r.out);
    const TranslatePacking back = read_packing(is);
    const NamedPacking want = build_named_packing(name, false);
    EXPECT_TRUE(lattice_equal(back.base, want.packing.base)) << name;
    EXPECT_EQ(back.translates, want.packing.translates) << name;
  }
  EXPECT_TRUE(has(run({"build", "v22"}).out, "translates 3\n"));
  for (const auto& name : code_names()) {
    const Result r = run({"build", name});
    ASSERT_EQ(r.code, kExitPass) << name;
    std::istringstream is(r.out);
    EXPECT_EQ(read_code(is).generator(), named_code(name)->generator()) << name;
  }
}

TEST(Cli, VerifyPaperPackings) {
  const Result v20 = run({"verify", "v20", "--level", "enumerate"});
  EXPECT_EQ(v20.code, kExitPass) << v20.out;
  EXPECT_TRUE(has(v20.out, "min_sqdist 7/2"));
  EXPECT_TRUE(has(v20.out, "kissing 15360"));
  const Result v47 = run({"verify", "v47p", "--level", "algebraic"});
  EXPECT_EQ(v47.code, kExitPass) << v47.out;
  EXPECT_TRUE(has(v47.out, "mu assumed"));
  EXPECT_EQ(run({"verify", "zn", "--dim", "4"}).code, kExitPass);
  EXPECT_EQ(run({"verify", "golay24"}).code, kExitPass);
  const Result threads = run({"verify", "v22", "--threads", "2"});
  EXPECT_EQ(threads.code, kExitPass);
  EXPECT_EQ(threads.out, run({"verify", "v22"}).out);
}

TEST(Cli, ReportTable) {
  const Result r = run({"report"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_TRUE(has(r.out, "0.1315377881"));
  EXPECT_TRUE(has(r.out, "0.3325496246"));
  EXPECT_TRUE(has(r.out, "2719.936460"));
  EXPECT_TRUE(has(r.out, "1.259336185"));
  EXPECT_TRUE(has(r.out, "1.000000000"));
  const auto rows = reproduction_table(false);
  for (const auto& row : rows) {
    EXPECT_TRUE(has(r.out, row.density_sq.str())) << row.packing;
    if (row.packing == "v20") {
      EXPECT_EQ(row.ratio.squared, improvement_ratio(4, Rat(1, 2), Rat(4), 20).squared);
      EXPECT_EQ(row.density, center_density(build_named_packing("v20", true).packing).decimal);
    }
  }
}

TEST(Cli, SearchWritesTheSet) {
  const fs::path lat = temp_file("d4dual.txt");
  {
    std::ofstream f(lat);
    write_lattice(f, rescale(dual(C::make_root(C::RootFamily::D, 4)), Rat(1, 2)));
  }
  const Result r = run({"search", "--lattice", lat.string(), "--size", "4"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_TRUE(has(r.out, "points 4\n"));
  EXPECT_TRUE(has(r.out, "beta 1/2\n"));
  const Result one = run({"search", "--lattice", lat.string(), "--size", "1"});
  EXPECT_TRUE(has(one.out, "beta 0\n"));
  const Result none = run({"search", "--lattice", lat.string(), "--size", "4", "--cap", "1/4"});
  EXPECT_EQ(none.code, kExitInfeasible);
  EXPECT_TRUE(has(none.err, "infeasible at this cap"));
  fs::remove(lat);
}

TEST(Cli, CountCommand) {
  const fs::path lat = temp_file("z2.txt");
  {
    std::ofstream f(lat);
    write_lattice(f, ScaledLattice(RatMatrix::identity(2), Rat(1)));
  }
  const Result r = run({"count", "--lattice", lat.string(), "--bound", "1"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(has(r.out, "norm 1 4\n"));
  const Result listed = run({"count", "--lattice", lat.string(), "--bound", "1/2", "--offset", "1/2 1/2", "--list"});
  EXPECT_TRUE(has(listed.out, "norm 1/2 4\n"));
  EXPECT_TRUE(has(listed.out, "vector -1/2 -1/2\n"));
  fs::remove(lat);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"build", "nonsense"}).code, kExitBadInput);
  EXPECT_EQ(run({"build", "zn"}).code, kExitBadInput);
  EXPECT_EQ(run({}).code, kExitBadInput);
  EXPECT_EQ(run({"verify", "v20", "--level", "sideways"}).code, kExitBadInput);
  EXPECT_EQ(run({"verify", "v46q", "--level", "enumerate"}).code, kExitBadInput);
  EXPECT_EQ(run({"search", "--lattice", "/nonexistent/file", "--size", "2"}).code, kExitBadInput);
  EXPECT_EQ(run({"report", "--format", "json"}).code, kExitBadInput);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, VerifyPackingFileDetectsTampering) {
  const fs::path good = temp_file("v20.txt");
  ASSERT_EQ(run({"build", "v20", "--out", good.string()}).code, kExitPass);
  EXPECT_EQ(run({"verify", "--packing", good.string(), "--mu", "4", "--beta", "1/2"}).code, kExitPass);
  // Claiming beta = 0 asserts d >= 4, which the enumeration refutes.
  const Result bad = run({"verify", "--packing", good.string(), "--mu", "4"});
  EXPECT_EQ(bad.code, kExitVerifyFailed);
  EXPECT_TRUE(has(bad.out, "status FAIL"));
  EXPECT_EQ(run({"verify", "--packing", good.string()}).code, kExitBadInput);
  fs::remove(good);
}
