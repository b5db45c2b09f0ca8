#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bicomplex-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = bicomplex::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Csv {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t k = 0; k < header.size(); ++k) {
      if (header[k] == name) return k;
    }
    throw std::runtime_error("no column " + name);
  }
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      csv.meta.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line, ',');
    } else {
      std::vector<double> row;
      for (const auto& c : split(line, ',')) row.push_back(std::stod(c));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("bicomplex-cli-test-" + std::to_string(::getpid()) + "-" +
                                         std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(CliEval, SquareAtOnePlusJ) {
  const Result r = run({"eval", "--f1", "z^2", "--f2", "z^2", "--zeta", "1+1j"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("F(zeta) = 2 j\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("F(zeta) idempotent = [0 - 2 i | 0 + 2 i]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("F'(zeta) = 2 + 2 j\n"), std::string::npos) << r.out;
}

TEST(CliEval, IdentityAtI) {
  const Result r = run({"eval", "--f1", "z", "--f2", "z", "--zeta", "i"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("F(zeta) = i\n"), std::string::npos) << r.out;
}

TEST(CliEval, JsonAndIdempotentInput) {
  const Result r = run({"eval", "--f1", "exp(z)", "--f2", "z^3", "--zeta", "[0 | 0]", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  const json& d = doc["meta"]["derivative"]["idempotent"];
  EXPECT_EQ(d[0], json::parse("[1, 0]"));
  EXPECT_LE(std::abs(d[1][0].get<double>()) + std::abs(d[1][1].get<double>()), 1e-30);
  EXPECT_EQ(doc["rows"].size(), 3u);
}

TEST(CliEval, ExitCodes) {
  EXPECT_EQ(run({"eval", "--f1", "z", "--zeta", "1 + + j"}).code, 2);
  EXPECT_EQ(run({"eval", "--f1", "z +", "--zeta", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--f1", "abs(z)", "--zeta", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--f1", "1/z", "--zeta", "0"}).code, 3);
  EXPECT_EQ(run({"eval", "--f1", "z", "--omega1", "0,1,0,1", "--zeta", "5"}).code, 3);
  EXPECT_EQ(run({"eval", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const Result bad = run({"eval", "--f1", "z", "--zeta", "nonsense"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_TRUE(bad.out.empty());
}

TEST(CliPoisson, StepDataSurface) {
  const Result r = run({"poisson", "--b1", "-1;1", "--b1-breaks", "0", "--diagonal", "--x1", "-5,5", "--y1", "0.1,5",
                        "--nx", "51", "--ny", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.header, (std::vector<std::string>{"x1", "y1", "x2", "y2", "u1", "u2"}));
  ASSERT_EQ(csv.rows.size(), 51u * 50u);
  double worst = 0.0;
  for (const auto& row : csv.rows) {
    EXPECT_EQ(row[0], row[2]);
    EXPECT_EQ(row[1], row[3]);
    const double want = 2.0 / std::numbers::pi * std::atan(row[0] / row[1]);
    worst = std::max({worst, std::abs(row[4] - want), std::abs(row[5] - want)});
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(CliPoisson, ConstantDataAndOffDiagonal) {
  const Csv one = parse_csv(run({"poisson", "--b1", "1", "--y1", "0.5,2", "--nx", "4", "--ny", "3"}).out);
  ASSERT_EQ(one.rows.size(), 12u);
  for (const auto& row : one.rows) {
    EXPECT_NEAR(row[4], 1.0, 1e-10);
    EXPECT_NEAR(row[5], 1.0, 1e-10);
  }
  const Result r = run({"poisson", "--b1", "-1;1", "--b1-breaks", "0", "--x1", "-2,2", "--y1", "0.5,2", "--x2",
                        "1,3", "--y2", "1,4", "--nx", "5", "--ny", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  int distinct = 0;
  for (const auto& row : csv.rows) {
    EXPECT_NEAR(row[4], 2.0 / std::numbers::pi * std::atan(row[0] / row[1]), 1e-8);
    EXPECT_NEAR(row[5], 2.0 / std::numbers::pi * std::atan(row[2] / row[3]), 1e-8);
    distinct += row[4] != row[5];
  }
  EXPECT_GT(distinct, 20);
}

TEST(CliPoisson, Errors) {
  EXPECT_EQ(run({"poisson", "--b1", "1", "--y1", "0,1"}).code, 3);
  EXPECT_EQ(run({"poisson", "--b1", "1", "--y1", "-1,1"}).code, 3);
  EXPECT_EQ(run({"poisson", "--b1", "1;2", "--y1", "1,2"}).code, 2);
  EXPECT_EQ(run({"poisson", "--b1", "t", "--b1-bound", "3", "--y1", "1,2"}).code, 2);
  EXPECT_EQ(run({"poisson", "--b1", "1", "--y1", "1,2", "--nx", "1"}).code, 2);
}

TEST(CliCertify, PassAndFail) {
  const Result pass = run({"certify", "--f1", "z^3", "--f2", "exp(z)", "--part", "re"});
  EXPECT_EQ(pass.code, 0) << pass.err;
  const json p = json::parse(pass.out);
  EXPECT_TRUE(p["meta"]["verdict"].get<bool>());
  EXPECT_EQ(p["rows"].size(), 21u * 21u);

  const Result fail = run({"certify", "--u1", "x^2", "--u2", "x"});
  EXPECT_EQ(fail.code, 4);
  const json f = json::parse(fail.out);
  EXPECT_FALSE(f["meta"]["verdict"].get<bool>());
  EXPECT_NEAR(f["meta"]["residual1"].get<double>(), 2.0, 1e-6);
  EXPECT_LE(f["meta"]["residual2"].get<double>(), 1e-6);
  EXPECT_FALSE(f["meta"]["component1"].get<bool>());
  EXPECT_TRUE(f["meta"]["component2"].get<bool>());
}

TEST(CliCertify, RefinementRatioOnSmoothInput) {
  const Result r = run({"certify", "--u1", "exp(x)*sin(2*y)", "--u2", "x^4 + y^4", "--h", "0.04", "--nx", "5",
                        "--ny", "5"});
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["meta"]["refinement_ratio1"].get<double>(), 4.0, 0.5);
  EXPECT_NEAR(doc["meta"]["refinement_ratio2"].get<double>(), 4.0, 0.5);
}

TEST(CliCertify, DomainViolation) {
  EXPECT_EQ(run({"certify", "--u1", "log(y)", "--omega1", "-10,10,0,10", "--y1", "0,1"}).code, 3);
}

TEST(CliConjugate, PolynomialColumns) {
  const Result r = run({"conjugate", "--u1", "x^2 - y^2", "--u2", "x", "--basepoint1", "0,0", "--basepoint2",
                        "0,0", "--nx", "6", "--ny", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.header, (std::vector<std::string>{"x1", "y1", "u1", "ustar1", "x2", "y2", "u2", "ustar2"}));
  for (const auto& row : csv.rows) {
    EXPECT_NEAR(row[3], 2 * row[0] * row[1], 1e-8);
    EXPECT_NEAR(row[7], row[5], 1e-8);
  }
  bool found = false;
  for (const auto& m : csv.meta) {
    if (m.rfind("# cr_residual1: ", 0) == 0) {
      found = true;
      EXPECT_LT(std::stod(m.substr(16)), 1e-5);
    }
  }
  EXPECT_TRUE(found);
}

TEST(CliConjugate, ConstantAndBasepointShift) {
  const Csv c = parse_csv(run({"conjugate", "--u1", "3", "--nx", "3", "--ny", "3"}).out);
  for (const auto& row : c.rows) {
    EXPECT_EQ(row[3], 0.0);
    EXPECT_EQ(row[7], 0.0);
  }
  const std::vector<std::string> base{"conjugate", "--f1", "z^2", "--f2", "exp(z)", "--part", "re", "--nx", "5",
                                      "--ny", "5"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return parse_csv(run(a).out);
  };
  const Csv a = with({"--basepoint1", "0,0", "--basepoint2", "0,0"});
  const Csv b = with({"--basepoint1", "0.5,-0.5", "--basepoint2", "-0.25,0.75"});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  const double d3 = a.rows[0][3] - b.rows[0][3], d7 = a.rows[0][7] - b.rows[0][7];
  EXPECT_GT(std::abs(d3), 1e-3);
  for (std::size_t n = 0; n < a.rows.size(); ++n) {
    EXPECT_NEAR(a.rows[n][3] - b.rows[n][3], d3, 1e-7);
    EXPECT_NEAR(a.rows[n][7] - b.rows[n][7], d7, 1e-7);
  }
}

TEST(CliConjugate, RequireHarmonic) {
  EXPECT_EQ(run({"conjugate", "--u1", "x^2", "--nx", "3", "--ny", "3"}).code, 0);
  EXPECT_EQ(run({"conjugate", "--u1", "x^2", "--nx", "3", "--ny", "3", "--require-harmonic"}).code, 4);
  EXPECT_EQ(run({"conjugate", "--u1", "x*y", "--nx", "3", "--ny", "3", "--require-harmonic"}).code, 0);
}

TEST(CliGridInfo, DescribesGrids) {
  const Result r = run({"grid-info", "--x1", "0,2", "--y1", "1,3", "--x2", "-1,1", "--nx", "3", "--ny", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["meta"]["grid1"]["dx"].get<double>(), 1.0);
  EXPECT_EQ(doc["meta"]["grid1"]["dy"].get<double>(), 0.5);
  EXPECT_EQ(doc["meta"]["grid2"]["x"], json::parse("[-1, 1]"));
  EXPECT_EQ(doc["meta"]["grid2"]["y"], json::parse("[1, 3]"));
  EXPECT_EQ(doc["meta"]["grid1"]["points"].get<int>(), 15);
  const json diag = json::parse(run({"grid-info", "--x1", "0,2", "--x2", "5,6", "--diagonal"}).out);
  EXPECT_EQ(diag["meta"]["grid2"]["x"], json::parse("[0, 2]"));
}

TEST(CliConfig, FileFlagsAndOverrides) {
  TempDir dir;
  const fs::path cfg =
      dir.write("run.json", R"({"b1": "-1;1", "b1-breaks": [0], "x1": [-1, 1], "y1": [0.5, 1], "nx": 3, "ny": 2})");
  const Result a = run({"poisson", "--config", cfg.string()});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(parse_csv(a.out).rows.size(), 6u);
  const Result b = run({"poisson", "--config", cfg.string(), "--nx", "4"});
  ASSERT_EQ(b.code, 0) << b.err;
  const Csv cb = parse_csv(b.out);
  EXPECT_EQ(cb.rows.size(), 8u);
  EXPECT_NEAR(cb.rows[0][4], 2.0 / std::numbers::pi * std::atan(-1.0 / 0.5), 1e-10);

  const fs::path unknown = dir.write("bad.json", R"({"b1": "1", "colour": "blue"})");
  const Result c = run({"poisson", "--config", unknown.string()});
  EXPECT_EQ(c.code, 2);
  EXPECT_NE(c.err.find("colour"), std::string::npos);
  EXPECT_EQ(run({"poisson", "--config", dir.write("x.json", "{not json").string()}).code, 2);
  EXPECT_EQ(run({"poisson", "--config", (dir.path() / "missing.json").string()}).code, 2);
}

TEST(CliOutput, DeterministicFilesAndOutputDirectory) {
  TempDir dir;
  const std::vector<std::string> args{"poisson", "--b1", "-1;1", "--b1-breaks", "0", "--b2", "1/(1+t^2)",
                                      "--x1", "-2,2", "--y1", "0.25,2", "--nx", "7", "--ny", "6"};
  auto to = [&](const fs::path& p) {
    auto a = args;
    a.insert(a.end(), {"-o", p.string()});
    return run(a);
  };
  ASSERT_EQ(to(dir.path() / "a.csv").code, 0);
  ASSERT_EQ(to(dir.path() / "b.csv").code, 0);
  const std::string a = slurp(dir.path() / "a.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir.path() / "b.csv"));
  EXPECT_EQ(a, run(args).out);

  ::setenv("BICOMPLEX_OUTPUT_DIR", dir.path().c_str(), 1);
  const Result r = to("relative.json");
  ::unsetenv("BICOMPLEX_OUTPUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(slurp(dir.path() / "relative.json"));
  EXPECT_EQ(doc["rows"].size(), 42u);
  EXPECT_EQ(doc["rows"][0]["x1"].get<double>(), -2.0);
}

TEST(CliOutput, SeventeenSignificantDigits) {
  const Csv csv = parse_csv(run({"poisson", "--b1", "1/(1+t^2)", "--x1", "0.3,1", "--y1", "0.7,1", "--nx", "2",
                                 "--ny", "2"}).out);
  const double want = (0.7 + 1.0) / (0.09 + 1.7 * 1.7);
  EXPECT_NEAR(csv.rows[0][4], want, 1e-14);
  EXPECT_EQ(csv.rows[0][1], 0.7);
}
