#include <catch2/catch_amalgamated.hpp>

#include "qot/channel.hpp"

using Catch::Matchers::WithinRel;

namespace {

std::vector<qot::Channel> grid3() {
  return {
      {0, -100e9, 40e9, 1.5e-3},
      {1, 0.0, 40e9, 1.0e-3},
      {2, 100e9, 40e9, 2.0e-3},
  };
}

}  // namespace

TEST_CASE("ChannelPlan derived totals") {
  qot::ChannelPlan plan(grid3(), 193.5e12);
  CHECK(plan.size() == 3);
  CHECK(plan.total_power() == 1.5e-3 + 1.0e-3 + 2.0e-3);
  CHECK_THAT(plan.total_bandwidth(), WithinRel(240e9, 1e-15));
  CHECK(plan.band_lo() == -120e9);
  CHECK(plan.band_hi() == 120e9);
  CHECK(plan.absolute_ref_freq() == 193.5e12);
}

TEST_CASE("ChannelPlan rejects bad loadouts") {
  // unsorted
  auto chs = grid3();
  std::swap(chs[0].center_freq, chs[2].center_freq);
  CHECK_THROWS_AS(qot::ChannelPlan(chs, 193.5e12), qot::DomainError);

  // overlapping
  chs = grid3();
  chs[1].bandwidth = 180e9;
  CHECK_THROWS_AS(qot::ChannelPlan(chs, 193.5e12), qot::DomainError);

  // touching edges is allowed (gapless Nyquist grid)
  chs = grid3();
  for (auto& c : chs) c.bandwidth = 100e9;
  CHECK_NOTHROW(qot::ChannelPlan(chs, 193.5e12));

  // non-positive power
  chs = grid3();
  chs[1].launch_power = 0.0;
  CHECK_THROWS_AS(qot::ChannelPlan(chs, 193.5e12), qot::DomainError);

  // index mismatch
  chs = grid3();
  chs[2].index = 7;
  CHECK_THROWS_AS(qot::ChannelPlan(chs, 193.5e12), qot::DomainError);

  // empty
  CHECK_THROWS_AS(qot::ChannelPlan({}, 193.5e12), qot::DomainError);
}

TEST_CASE("ChannelPlan with_powers re-derives and re-checks") {
  qot::ChannelPlan plan(grid3(), 193.5e12);
  qot::ChannelPlan scaled = plan.with_powers({3e-3, 2e-3, 4e-3});
  CHECK(scaled.total_power() == 3e-3 + 2e-3 + 4e-3);  // same summation order, bitwise equal
  CHECK(scaled.at(1).launch_power == 2e-3);
  CHECK(plan.at(1).launch_power == 1.0e-3);  // original untouched
  CHECK_THROWS_AS(plan.with_powers({1e-3, 0.0, 1e-3}), qot::DomainError);
  CHECK_THROWS_AS(plan.with_powers({1e-3, 1e-3}), qot::DomainError);
}

TEST_CASE("SpanConfig and LinkConfig validation") {
  qot::SpanConfig span;
  span.fiber = qot::default_ssmf();
  span.amp_gain_db = 20.5;
  span.amp_nf_db = 4.5;
  span.lumped_loss_db = 0.5;
  CHECK_NOTHROW(span.validate());

  span.amp_gain_db = -1.0;
  CHECK_THROWS_AS(span.validate(), qot::DomainError);
  span.amp_gain_db = 20.5;
  span.lumped_loss_db = -0.5;
  CHECK_THROWS_AS(span.validate(), qot::DomainError);
  span.lumped_loss_db = 0.5;

  qot::LinkConfig link;
  CHECK_THROWS_AS(link.validate(), qot::DomainError);  // zero spans
  link.spans = {span, span};
  CHECK_NOTHROW(link.validate());
  link.coherence_epsilon = -0.1;
  CHECK_THROWS_AS(link.validate(), qot::DomainError);
}
