#include <catch2/catch_amalgamated.hpp>

#include "qot/units.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("db_to_linear basic points") {
  CHECK(qot::db_to_linear(0.0) == 1.0);
  CHECK_THAT(qot::db_to_linear(20.5), WithinRel(112.20184543019634, 1e-14));
  CHECK_THAT(qot::db_to_linear(-3.0103), WithinAbs(0.5, 1e-4));
  CHECK_THAT(qot::db_to_linear(-3.0103), WithinRel(0.49999999500797389, 1e-14));
}

TEST_CASE("db round trip") {
  for (double db : {-30.0, -3.0, 0.0, 0.1, 7.25, 20.5}) {
    CHECK_THAT(qot::linear_to_db(qot::db_to_linear(db)), WithinAbs(db, 1e-12));
  }
}

TEST_CASE("dbm conversions") {
  CHECK_THAT(qot::dbm_to_watt(0.0), WithinRel(1e-3, 1e-14));
  CHECK_THAT(qot::dbm_to_watt(30.0), WithinRel(1.0, 1e-14));
  CHECK_THAT(qot::watt_to_dbm(1e-3), WithinAbs(0.0, 1e-12));
  CHECK_THAT(qot::watt_to_dbm(qot::dbm_to_watt(-4.25)), WithinAbs(-4.25, 1e-12));
}

TEST_CASE("attenuation conversion") {
  CHECK(qot::attenuation_from_db_per_km(0.0) == 0.0);
  CHECK_THAT(qot::attenuation_from_db_per_km(0.2), WithinRel(4.6051701859880914e-5, 1e-14));
  CHECK_THAT(qot::attenuation_from_db_per_km(10.0), WithinRel(2.3025850929940457e-3, 1e-14));
  CHECK_THROWS_AS(qot::attenuation_from_db_per_km(-0.1), qot::DomainError);
}

TEST_CASE("attenuation round trip") {
  for (double a : {0.16, 0.2, 0.25, 10.0}) {
    CHECK_THAT(qot::attenuation_to_db_per_km(qot::attenuation_from_db_per_km(a)),
               WithinRel(a, 1e-12));
  }
}
