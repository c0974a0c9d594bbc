#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "mink/config.hpp"
#include "support.hpp"

using mink::ErrorCode;
using mink::Generator;

TEST(Config, ExampleDefaults) {
  const auto cfg = mink::parse_config(R"({"source": {"generator": "example"}})");
  EXPECT_EQ(cfg.source.generator, Generator::Example);
  EXPECT_DOUBLE_EQ(cfg.effective_lambda(), 4.0 / 3.0);
  EXPECT_EQ(cfg.n_samples, 50);
  EXPECT_DOUBLE_EQ(cfg.h, 1e-4);
  EXPECT_DOUBLE_EQ(cfg.tol.geodesic, 1e-6);
  EXPECT_FALSE(cfg.interval.has_value());
  EXPECT_EQ(cfg.derivatives, mink::DiffMode::Taylor);
}

TEST(Config, ExampleAlias) {
  const auto cfg = mink::parse_config(R"({"source": {"generator": "paper_example"}})");
  EXPECT_EQ(cfg.source.generator, Generator::Example);
}

TEST(Config, GeneratorFields) {
  const auto cfg = mink::parse_config(R"({
    "source": {"generator": "hyperbolic_helix", "kappa": 2, "tau": 1},
    "lambda": -0.4, "n_samples": 12, "h": 1e-3, "interval": [-0.5, 0.5],
    "tolerances": {"geodesic": 1e-5}, "output": "out"})");
  EXPECT_EQ(cfg.source.generator, Generator::HyperbolicHelix);
  EXPECT_DOUBLE_EQ(cfg.source.kappa, 2.0);
  EXPECT_DOUBLE_EQ(*cfg.lambda, -0.4);
  EXPECT_EQ(cfg.n_samples, 12);
  EXPECT_DOUBLE_EQ(cfg.interval->lo, -0.5);
  EXPECT_DOUBLE_EQ(cfg.tol.geodesic, 1e-5);
  EXPECT_DOUBLE_EQ(cfg.tol.helix, 1e-6);
  EXPECT_EQ(cfg.output, "out");
}

TEST(Config, ValidationErrors) {
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "example", "samples": []}})"),
                    ErrorCode::ValidationError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {}})"), ErrorCode::ValidationError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "circular_helix", "kappa": 1, "tau": 2}})"),
                    ErrorCode::ValidationError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "example"}, "n_samples": 0})"),
                    ErrorCode::ValidationError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "example"}, "h": -1})"),
                    ErrorCode::ValidationError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "example"}, "interval": [1, 0]})"),
                    ErrorCode::ValidationError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "example"}, "tolerances": {"angle": 0}})"),
                    ErrorCode::ValidationError);
}

TEST(Config, ParseErrorsNameTheProblem) {
  try {
    mink::parse_config("{\n  \"source\": {\"generator\": \"example\"},\n  \"lambda\": ,\n}");
    FAIL() << "expected ParseError";
  } catch (const mink::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    mink::parse_config(R"({"source": {"generator": "example"}, "lamda": 1})");
    FAIL() << "expected ParseError";
  } catch (const mink::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("lamda"), std::string::npos);
  }
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "example"}, "lambda": "x"})"),
                    ErrorCode::ParseError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "example"}, "derivatives": "spline"})"),
                    ErrorCode::ParseError);
  EXPECT_MINK_ERROR(mink::parse_config(R"({"source": {"generator": "spiral", "kappa": 1, "tau": 2}, "lambda": 1})"),
                    ErrorCode::ParseError);
}

TEST(Config, RoundTripPreservesFields) {
  auto cfg = mink::parse_config(R"({
    "source": {"generator": "circular_helix", "kappa": 0.5, "tau": 4},
    "lambda": 1.5, "n_samples": 33, "interval": [0, 1], "derivatives": "finite_difference", "h": 2e-4,
    "tolerances": {"classification": 1e-10, "angle": 1e-8}})");
  const auto text = mink::emit_config(cfg);
  const auto back = mink::parse_config(text);
  EXPECT_EQ(mink::emit_config(back), text);
  EXPECT_EQ(back.source.generator, cfg.source.generator);
  EXPECT_EQ(back.source.tau, cfg.source.tau);
  EXPECT_EQ(*back.lambda, *cfg.lambda);
  EXPECT_EQ(back.n_samples, cfg.n_samples);
  EXPECT_EQ(back.derivatives, mink::DiffMode::FiniteDifference);
  EXPECT_EQ(back.h, 2e-4);
  EXPECT_EQ(back.interval->hi, cfg.interval->hi);
  EXPECT_EQ(back.tol.classification, cfg.tol.classification);
  EXPECT_EQ(back.tol.angle, cfg.tol.angle);

  const auto example = mink::example_config();
  EXPECT_EQ(mink::emit_config(mink::parse_config(mink::emit_config(example))), mink::emit_config(example));
}

TEST(Config, InlineAndFileSamples) {
  std::string rows = "[";
  std::string csv = "s,x1,x2,x3\n";
  for (int i = 0; i < 9; ++i) {
    const double s = 0.1 * i;
    const auto p = oracle::alpha(s);
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s[%.17g, %.17g, %.17g, %.17g]", i ? ", " : "", s, p(0), p(1), p(2));
    rows += buf;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s, p(0), p(1), p(2));
    csv += buf;
  }
  rows += "]";
  const auto inline_cfg = mink::parse_config(R"({"source": {"samples": )" + rows + R"(}, "lambda": 1.5})");
  ASSERT_EQ(inline_cfg.source.samples.size(), 9u);

  const auto dir = std::filesystem::temp_directory_path() / "mink_config_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "rows.csv") << csv;
  std::ofstream(dir / "cfg.json") << R"({"source": {"samples_file": "rows.csv"}, "lambda": 1.5})";
  const auto file_cfg = mink::load_config(dir / "cfg.json");
  ASSERT_EQ(file_cfg.source.samples.size(), 9u);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(file_cfg.source.samples[i].s, inline_cfg.source.samples[i].s);
    EXPECT_EQ(file_cfg.source.samples[i].point, inline_cfg.source.samples[i].point);
  }
  std::ofstream(dir / "bad.json") << R"({"source": {"samples_file": "missing.csv"}, "lambda": 1.5})";
  EXPECT_MINK_ERROR(mink::load_config(dir / "bad.json"), ErrorCode::IoError);
  std::filesystem::remove_all(dir);
}

TEST(Config, SampleRowsParser) {
  const auto rows = mink::parse_sample_rows("s,x1,x2,x3\n0,1,2,3\n\n1,2,3,4\r\n", "t");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].point(2), 4.0);
  EXPECT_MINK_ERROR(mink::parse_sample_rows("0,1,2\n", "t"), ErrorCode::ParseError);
  EXPECT_MINK_ERROR(mink::parse_sample_rows("0,1,2,3\n1,a,2,3\n", "t"), ErrorCode::ParseError);
}
