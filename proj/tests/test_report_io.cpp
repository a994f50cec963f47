#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/link_engine.hpp"
#include "qot/report_io.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Two channels either side of 193.5 THz with round-number powers so every
// CSV field is predictable by hand.
qot::ChannelPlan two_channel_plan() {
  std::vector<qot::Channel> chs = {
      {0, -50e9, 50e9, 1e-3},
      {1, 50e9, 50e9, 2e-3},
  };
  return qot::ChannelPlan(chs, 193.5e12);
}

qot::LinkReport one_span_report() {
  qot::LinkReport report;
  report.span_states = {{
      {1e-3, 1e-6, 5e-7},
      {2e-3, 1e-6, 5e-7},
  }};
  return report;
}

qot::GsnrTable make_table(std::vector<double> freq,
                          std::vector<std::vector<double>> gsnr) {
  qot::GsnrTable t;
  t.freq_thz = std::move(freq);
  t.gsnr_db = std::move(gsnr);
  return t;
}

}  // namespace

TEST_CASE("gsnr csv bytes are pinned") {
  std::string csv = qot::render_gsnr_csv(two_channel_plan(), one_span_report());
  CHECK(csv ==
        "span,channel,freq_thz,signal_dbm,ase_dbm,nli_dbm,gsnr_db\n"
        "1,0,193.45,0,-30,-33.0103,28.2391\n"
        "1,1,193.55,3.0103,-30,-33.0103,31.2494\n");
}

TEST_CASE("rendered gsnr csv parses back to the same table") {
  auto plan = two_channel_plan();
  qot::LinkReport report;
  report.span_states = {one_span_report().span_states[0],
                        {{0.9e-3, 2e-6, 8e-7}, {1.9e-3, 2e-6, 8e-7}}};

  auto direct = qot::table_from_report(plan, report);
  auto parsed = qot::parse_gsnr_csv(qot::render_gsnr_csv(plan, report));

  REQUIRE(parsed.freq_thz.size() == 2);
  REQUIRE(parsed.gsnr_db.size() == 2);
  CHECK_THAT(parsed.freq_thz[0], WithinRel(193.45, 1e-12));
  CHECK_THAT(parsed.freq_thz[1], WithinRel(193.55, 1e-12));
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < 2; ++i) {
      // %.6g keeps 6 significant digits, so the reparse agrees to ~1e-5 rel
      CHECK_THAT(parsed.gsnr_db[s][i], WithinRel(direct.gsnr_db[s][i], 1e-5));
    }
  }
}

TEST_CASE("table_from_report rejects a report of the wrong width") {
  qot::LinkReport bad;
  bad.span_states = {{{1e-3, 1e-6, 5e-7}}};  // one channel, plan has two
  CHECK_THROWS_AS(qot::table_from_report(two_channel_plan(), bad), qot::DomainError);
  CHECK_THROWS_AS(qot::render_gsnr_csv(two_channel_plan(), bad), qot::DomainError);
}

TEST_CASE("comparison metrics on a hand-built error pattern") {
  auto a = make_table({193.45, 193.55}, {{20.0, 21.0}, {19.0, 20.0}});
  auto b = make_table({193.45, 193.55}, {{20.1, 21.3}, {19.0, 20.2}});
  // |a-b| = {{0.1, 0.3}, {0.0, 0.2}}
  auto m = qot::compare_tables(a, b);
  CHECK_THAT(m.mae_db, WithinRel(0.15, 1e-12));
  CHECK_THAT(m.max_ae_db, WithinRel(0.3, 1e-12));
  REQUIRE(m.per_channel_abs_err.size() == 2);
  CHECK_THAT(m.per_channel_abs_err[0], WithinAbs(0.05, 1e-12));
  CHECK_THAT(m.per_channel_abs_err[1], WithinRel(0.25, 1e-12));
  CHECK(m.worst_channel_index == 1);
  CHECK(m.worst_span_index == 1);
  m.validate();

  // metrics are symmetric in the operands
  auto r = qot::compare_tables(b, a);
  CHECK(r.mae_db == m.mae_db);
  CHECK(r.max_ae_db == m.max_ae_db);
  CHECK(r.per_channel_abs_err == m.per_channel_abs_err);
  CHECK(r.worst_channel_index == m.worst_channel_index);
  CHECK(r.worst_span_index == m.worst_span_index);

  auto same = qot::compare_tables(a, a);
  CHECK(same.mae_db == 0.0);
  CHECK(same.max_ae_db == 0.0);

  // a constant offset shows up unchanged in both aggregates
  auto shifted = a;
  for (auto& row : shifted.gsnr_db) {
    for (double& v : row) v += 0.5;
  }
  auto off = qot::compare_tables(a, shifted);
  CHECK_THAT(off.mae_db, WithinRel(0.5, 1e-12));
  CHECK_THAT(off.max_ae_db, WithinRel(0.5, 1e-12));
}

TEST_CASE("comparison csv lists both readings and the gap") {
  auto a = make_table({193.45, 193.55}, {{20.0, 21.0}});
  auto b = make_table({193.45, 193.55}, {{20.1, 20.75}});
  CHECK(qot::render_comparison_csv(a, b) ==
        "span,channel,freq_thz,gsnr_a_db,gsnr_b_db,abs_err_db\n"
        "1,0,193.45,20,20.1,0.1\n"
        "1,1,193.55,21,20.75,0.25\n");
}

TEST_CASE("mismatched tables are rejected") {
  auto a = make_table({193.45, 193.55}, {{20.0, 21.0}});
  auto fewer_channels = make_table({193.45}, {{20.0}});
  auto more_spans = make_table({193.45, 193.55}, {{20.0, 21.0}, {19.0, 20.0}});
  auto other_freqs = make_table({193.45, 194.55}, {{20.0, 21.0}});
  auto ragged = make_table({193.45, 193.55}, {{20.0}});
  CHECK_THROWS_AS(qot::compare_tables(a, fewer_channels), qot::ConfigError);
  CHECK_THROWS_AS(qot::compare_tables(a, more_spans), qot::ConfigError);
  CHECK_THROWS_AS(qot::compare_tables(a, other_freqs), qot::ConfigError);
  CHECK_THROWS_AS(qot::compare_tables(a, ragged), qot::ConfigError);
  CHECK_THROWS_AS(qot::render_comparison_csv(a, other_freqs), qot::ConfigError);
  auto empty = make_table({}, {});
  CHECK_THROWS_AS(qot::compare_tables(empty, empty), qot::ConfigError);
}

TEST_CASE("malformed gsnr csv inputs are rejected with the offending line") {
  const std::string header = "span,channel,freq_thz,signal_dbm,ase_dbm,nli_dbm,gsnr_db\n";
  const std::string row1 = "1,0,193.45,0,-30,-33.0103,28.2391\n";

  CHECK_THROWS_MATCHES(qot::parse_gsnr_csv("wrong,header\n" + row1), qot::ConfigError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("header")));
  CHECK_THROWS_MATCHES(qot::parse_gsnr_csv(header), qot::ConfigError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("no data rows")));
  CHECK_THROWS_MATCHES(
      qot::parse_gsnr_csv(header + "1,0,193.45,0,-30\n"), qot::ConfigError,
      Catch::Matchers::MessageMatches(ContainsSubstring("line 2") &&
                                      ContainsSubstring("7 fields")));
  CHECK_THROWS_MATCHES(
      qot::parse_gsnr_csv(header + "1,0,oops,0,-30,-33.0103,28.2391\n"), qot::ConfigError,
      Catch::Matchers::MessageMatches(ContainsSubstring("not a number")));
  CHECK_THROWS_MATCHES(
      qot::parse_gsnr_csv(header + "x,0,193.45,0,-30,-33.0103,28.2391\n"), qot::ConfigError,
      Catch::Matchers::MessageMatches(ContainsSubstring("not an integer")));
  // first row must be span 1, channel 0
  CHECK_THROWS_MATCHES(
      qot::parse_gsnr_csv(header + "2,0,193.45,0,-30,-33.0103,28.2391\n"), qot::ConfigError,
      Catch::Matchers::MessageMatches(ContainsSubstring("span-major")));
  // channel numbering must be contiguous
  CHECK_THROWS_MATCHES(
      qot::parse_gsnr_csv(header + row1 + "1,2,193.65,0,-30,-33.0103,28.2391\n"),
      qot::ConfigError, Catch::Matchers::MessageMatches(ContainsSubstring("span-major")));
  // spans must agree on the channel set
  CHECK_THROWS_MATCHES(
      qot::parse_gsnr_csv(header + row1 + "2,0,193.55,0,-30,-33.0103,28.2391\n"),
      qot::ConfigError,
      Catch::Matchers::MessageMatches(ContainsSubstring("frequency differs")));
  CHECK_THROWS_AS(
      qot::parse_gsnr_csv(header + row1 + "1,1,193.55,0,-30,-33.0103,28.2391\n" +
                          "2,0,193.45,0,-30,-33.0103,28.2391\n" +
                          "2,1,193.55,0,-30,-33.0103,28.2391\n" +
                          "3,0,193.45,0,-30,-33.0103,28.2391\n"),
      qot::ConfigError);  // final span is one channel short
}

TEST_CASE("text files round-trip and report IO failures") {
  std::string path = "report_io_test_scratch.csv";
  std::string content = "span,channel\n1,0\r\n";  // \r survives binary IO
  qot::write_text_file(path, content);
  CHECK(qot::read_text_file(path) == content);
  std::remove(path.c_str());

  CHECK_THROWS_AS(qot::read_text_file("no_such_dir_qot/x.csv"), qot::IoError);
  CHECK_THROWS_AS(qot::write_text_file("no_such_dir_qot/x.csv", "y"), qot::IoError);
}
