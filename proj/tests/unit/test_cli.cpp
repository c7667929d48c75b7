#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <cmath>
#include <sstream>

#include "commands.hpp"

using qcorr::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QCORR_TEST_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

double jsonNumber(const std::string& json, const std::string& key) {
  const auto pos = json.find("\"" + key + "\":");
  if (pos == std::string::npos) return std::nan("");
  return std::stod(json.substr(pos + key.size() + 3));
}

}  // namespace

TEST(Cli, AnalyzeSinglet) {
  const auto r = call({"analyze", data("singlet.json"), "--restarts", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(jsonNumber(r.out, "smut"), 2.0, 1e-9);
  EXPECT_NEAR(jsonNumber(r.out, "q_p"), 1.0, 1e-9);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"analyze", data("non_psd.json")}).code, qcorr::cli::kInvalidState);
  EXPECT_EQ(call({"analyze", data("not_hermitian.json")}).code, qcorr::cli::kInvalidState);
  EXPECT_EQ(call({"analyze", data("wrong_dims.json")}).code, qcorr::cli::kInvalidState);
  EXPECT_EQ(call({"analyze", data("bad_syntax.json")}).code, qcorr::cli::kIoOrParse);
  EXPECT_EQ(call({"analyze", data("missing.json")}).code, qcorr::cli::kIoOrParse);
  EXPECT_EQ(call({"no-such-command"}).code, qcorr::cli::kIoOrParse);
  EXPECT_EQ(call({"campaign", "bounds", "--dims", "4"}).code, qcorr::cli::kUnsupportedDimension);
  const auto r = call({"analyze", data("non_psd.json")});
  EXPECT_NE(r.err.find("positive semidefinite"), std::string::npos) << r.err;
}

TEST(Cli, WernerScanSchema) {
  const auto r = call({"werner-scan", "--dims", "2,3,10", "--alpha-steps", "11"});
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 1u + 3u * 11u);
  EXPECT_EQ(l[0], "d,alpha,smut,ipmax,q");
  EXPECT_EQ(l[1], "2,0,0,0,0");
  EXPECT_EQ(l[11], "2,1,2,1,1");
}

TEST(Cli, Dqc1ScanSchemaAndDeterminism) {
  const auto a = call({"dqc1-scan", "--n", "4", "--phase-model", "haar", "--seed", "7",
                       "--alpha-steps", "20"});
  const auto b = call({"dqc1-scan", "--n", "4", "--phase-model", "haar", "--seed", "7",
                       "--alpha-steps", "20"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto l = lines(a.out);
  ASSERT_EQ(l.size(), 21u);
  EXPECT_EQ(l[0], "alpha,smut,ipmax,q");
  EXPECT_EQ(l[1], "0,0,0,0");
  EXPECT_EQ(call({"dqc1-scan", "--phase-model", "gaussian"}).code, qcorr::cli::kIoOrParse);
}

TEST(Cli, Campaigns) {
  const auto p = call({"campaign", "prop1", "--samples", "30", "--dims", "2..3"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(lines(p.out).size(), 31u);
  EXPECT_EQ(lines(p.out)[0], "sample,seed,dim_a,dim_b,outcomes_a,outcomes_b,info,s_a,s_b,smut,ok");
  EXPECT_NE(p.err.find("30 passed, 0 failed"), std::string::npos);

  const auto b = call({"campaign", "bounds", "--samples", "10", "--dims", "3"});
  EXPECT_EQ(b.code, 0) << b.err;
  // prop2, two prop3 bounds, prop4 and both corollary bounds per sample.
  EXPECT_EQ(lines(b.out).size(), 1u + 10u * 6u);

  const auto q = call({"campaign", "qVsDiscord", "--samples", "4", "--restarts", "2"});
  EXPECT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(lines(q.out).size(), 5u);
}

TEST(Cli, CampaignReplayReproducesSample) {
  const auto full = call({"campaign", "prop1", "--samples", "3", "--seed", "5"});
  const auto l = lines(full.out);
  const std::string row = l[3];
  const std::string seed = row.substr(row.find(',') + 1, row.find(',', row.find(',') + 1) - row.find(',') - 1);
  const auto one = call({"campaign", "prop1", "--replay", seed});
  ASSERT_EQ(lines(one.out).size(), 2u);
  EXPECT_EQ(lines(one.out)[1].substr(lines(one.out)[1].find(',')), row.substr(row.find(',')));
}

TEST(Cli, LockAndTrine) {
  const auto lock = call({"lock", "--d", "2", "--restarts", "4"});
  ASSERT_EQ(lock.code, 0);
  EXPECT_NEAR(jsonNumber(lock.out, "unlock_gain"), 0.5, 5e-3);
  const auto sigma = call({"lock", "--d", "2", "--variant", "shift", "--restarts", "4"});
  EXPECT_NEAR(jsonNumber(sigma.out, "unlock_gain"), 0.0, 1e-6);
  const auto trine = call({"trine", "--grid", "30", "--restarts", "6"});
  ASSERT_EQ(trine.code, 0) << trine.err;
  EXPECT_GT(jsonNumber(trine.out, "gap"), 1e-3);
}

TEST(Cli, ExportThenAnalyzeRoundTrip) {
  const std::string path = ::testing::TempDir() + "qcorr_locking.json";
  const auto e = call({"export-state", "locking", "--d", "2", "--out", path});
  ASSERT_EQ(e.code, 0) << e.err;
  const auto r = call({"analyze", path, "--restarts", "4", "--no-discord-b"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(jsonNumber(r.out, "q_p"), 0.5, 5e-3);
  std::remove(path.c_str());
  EXPECT_EQ(call({"export-state", "werner", "--d", "2", "--alpha", "3"}).code,
            qcorr::cli::kInvalidState);
  EXPECT_EQ(call({"export-state", "unknown"}).code, qcorr::cli::kIoOrParse);
}

TEST(Cli, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 2.0, 1e-300, 0.20751874963942196})
    EXPECT_EQ(std::stod(qcorr::cli::formatDouble(x)), x);
  EXPECT_EQ(qcorr::cli::formatDouble(0.5), "0.5");
}
