#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "qrep/io.hpp"

using qrep::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qrep::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QREP_TEST_DATA_DIR) + "/" + name; }

TEST(Cli, DispatchTableCoversEveryOperationOnce) {
  std::map<std::string, int> seen;
  std::set<std::string> paths;
  for (const auto& c : qrep::cli::dispatch_table()) {
    EXPECT_TRUE(paths.insert(c.path).second) << c.path;
    for (const auto& op : c.operations) ++seen[op];
  }
  for (const auto& [op, count] : seen) EXPECT_EQ(count, 1) << op;
  for (const char* op :
       {"parse_scalar", "arith", "rref", "kernel", "subspace_ops", "kron", "shuffle_23", "make_idempotent", "std_idempotents",
        "algebra_X", "algebra_Xi", "koszul_dual", "product", "structural_equalities", "cohom_algebra", "graded_dim",
        "extends_to_hom", "qa_context", "pbw_context", "s_embedding_context", "table_context", "check_manin",
        "commute_entrywise", "direct_sum", "dot_tensor", "multiplicative_check", "cohom_map", "validate_comonoid",
        "coend_comonoid", "corep_check", "corep_morphism_check", "corep_direct_sum", "corep_coproduct", "corep_tensor",
        "corep_dual", "hom_corep", "dequantise", "scenario_mq", "scenario_matrix_algebra", "scenario_yangian_eval",
        "scenario_so_quadratic", "scenario_finite_group", "load", "save"})
    EXPECT_EQ(seen.count(op), 1U) << op;
}

TEST(Cli, EveryCommandHasHelp) {
  for (const auto& c : qrep::cli::dispatch_table()) {
    std::vector<std::string> args;
    std::istringstream words(c.path);
    for (std::string w; words >> w;) args.push_back(w);
    args.push_back("--help");
    Outcome r = run(args);
    EXPECT_EQ(r.code, 0) << c.path << ": " << r.err;
  }
}

TEST(Cli, Hilbert) {
  Outcome r = run({"algebra", "hilbert", "--name", "polyalg3", "--k", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["result"]["dim"], 15);
  EXPECT_EQ(j["result"]["values"], json::array({1, 3, 6, 10, 15}));
}

TEST(Cli, GalleryJson) {
  Outcome r = run({"gallery", "mq", "--m", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["result"]["facts"]["relation_span_dim"], 6);
  Outcome list = run({"gallery", "list", "--format", "json"});
  EXPECT_EQ(list.code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"manin", "check", "--doc", data("manin_universal.json"), "--a", "A", "--b", "A", "--x", "M"}).code, 0);
  Outcome fail = run({"manin", "check", "--doc", data("manin_mutated.json"), "--a", "A", "--b", "A", "--x", "M", "--format", "json"});
  EXPECT_EQ(fail.code, 1);
  json j = json::parse(fail.out);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_EQ(j["report"]["witness"].size(), 4U);
  for (const char* bad : {"bad_reference.json", "division_by_zero.json", "malformed.json"}) {
    Outcome r = run({"doc", "check", "--doc", data(bad)});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"manin", "check", "--doc", data("manin_universal.json")}).code, 2);
  EXPECT_EQ(run({"algebra", "hilbert", "--name", "polyalg3", "--k", "99"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--help-format"}).code, 0);
}

TEST(Cli, OutWritesNormalizedBundle) {
  auto dir = std::filesystem::temp_directory_path() / "qrep_cli_test";
  std::filesystem::create_directories(dir);
  std::string bundle = (dir / "bundle.json").string();
  std::string again = (dir / "again.json").string();
  ASSERT_EQ(run({"gallery", "finite_group", "--out", bundle}).code, 0);
  ASSERT_EQ(run({"doc", "normalize", "--doc", bundle, "--out", again}).code, 0);
  auto read = [](const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(read(bundle), read(again));
  EXPECT_EQ(run({"corep", "hom", "--doc", bundle, "--a", "regular", "--b", "sign", "--inverse", "R"}).code, 0);
  EXPECT_EQ(run({"corep", "morphism", "--doc", bundle, "--k", "K", "--src", "regular", "--dst", "sign"}).code, 0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, TextOutput) {
  Outcome r = run({"manin", "check", "--doc", data("manin_mutated.json"), "--a", "A", "--b", "A", "--x", "M"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("witness ijkl = 1 2 1 2"), std::string::npos);
}

}  // namespace
