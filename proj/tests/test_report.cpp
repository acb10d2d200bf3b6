#include <doctest.h>

#include "tribo/catalog.hpp"
#include "tribo/report.hpp"

using namespace tribo;

TEST_CASE("summary JSON round-trips byte for byte") {
  const SummaryReport s = Catalog::standard().verify_all({});
  const std::string once = to_json(s);
  const SummaryReport back = summary_from_json(once);
  CHECK(to_json(back) == once);
  CHECK(back.reports.size() == s.reports.size());
  CHECK(back.known_discrepancies == 2);
}

TEST_CASE("single report JSON round-trips") {
  const VerifyReport r = Catalog::standard().verify("S2", {});
  const std::string once = to_json(r);
  const VerifyReport back = report_from_json(once);
  CHECK(to_json(back) == once);
  CHECK(back.status == Status::KnownDiscrepancy);
  REQUIRE(back.discrepancy.has_value());
  CHECK(back.discrepancy == r.discrepancy);
  CHECK(back.params == r.params);
  CHECK(back.range == r.range);
}

TEST_CASE("numbers are written as strings") {
  const VerifyReport r = Catalog::standard().verify("GT2", {});
  const std::string j = to_json(r);
  CHECK(j.find("\"checked\": \"244\"") != std::string::npos);
  CHECK(j.find("\"m_max\": \"60\"") != std::string::npos);
  CHECK(j.find("\"first_failure\": null") != std::string::npos);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(summary_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(summary_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("[1,2]"), std::invalid_argument);
}

TEST_CASE("TSV and text share the id ordering") {
  const SummaryReport s = Catalog::standard().verify_all({});
  const std::string tsv = to_tsv(s);
  const std::string text = to_text(s, true);
  CHECK(tsv.rfind("id\tstatus", 0) == 0);
  std::size_t ptsv = 0, ptext = 0;
  for (const auto& r : s.reports) {
    const auto a = tsv.find("\n" + r.id + "\t", ptsv);
    const auto b = text.find(r.id + ": ", ptext);
    REQUIRE(a != std::string::npos);
    REQUIRE(b != std::string::npos);
    ptsv = a + 1;
    ptext = b + 1;
  }
  CHECK(text.find("printed differs at n=1,printed,k=0") != std::string::npos);
  CHECK(render(s, Format::Json) == to_json(s));
}
