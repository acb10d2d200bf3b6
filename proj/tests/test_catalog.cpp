#include <doctest.h>

#include <set>

#include "tribo/catalog.hpp"
#include "tribo/errors.hpp"

using namespace tribo;

namespace {

std::vector<Check> rows_of(const Catalog& cat, const std::string& id, IndexRange range,
                           const VerifyOptions& options = {}) {
  Params params;
  std::vector<std::string> notes;
  EvalContext ctx{range, options, params, notes};
  return cat.find(id).evaluate(ctx);
}

IdentityRecord fixed(std::string id, Expectation e, std::vector<Check> rows) {
  return {std::move(id), "fixture", {0, 3}, 10, 0, e,
          [rows](EvalContext&) { return rows; }};
}

}  // namespace

TEST_CASE("registered identities") {
  const Catalog cat = Catalog::standard();
  const std::vector<std::string> expected{"GF",  "GT2", "GT3", "GT4", "GT5", "L-CONST", "L2",  "L7",
                                          "L8",  "L9",  "LCC", "P1",  "P2",  "P3",      "S1",  "S2",
                                          "S3",  "T1",  "T2",  "T2R", "T3",  "T3R",     "T4",  "T4R"};
  CHECK(cat.ids() == expected);
  CHECK(cat.contains("P3"));
  CHECK_FALSE(cat.contains("P9"));
  CHECK_THROWS_AS(cat.find("P9"), UnknownIdentity);
  CHECK(cat.find("S2").expectation == Expectation::KnownDiscrepancy);
  CHECK(cat.find("P1").expectation == Expectation::ExpectedPass);
}

TEST_CASE("every expected-pass entry passes on its default range") {
  const Catalog cat = Catalog::standard();
  for (const auto& id : cat.ids()) {
    if (cat.find(id).expectation != Expectation::ExpectedPass) continue;
    CAPTURE(id);
    const VerifyReport r = cat.verify(id, {});
    CHECK(r.status == Status::Pass);
    CHECK(r.failed == 0);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("the squared-cofactor sum keeps its printed discrepancy and corrected form") {
  const VerifyReport r = Catalog::standard().verify("S2", {});
  CHECK(r.status == Status::KnownDiscrepancy);
  REQUIRE(r.discrepancy.has_value());
  CHECK(r.discrepancy->index == "n=1,printed,k=0");
  CHECK(r.discrepancy->lhs == "3/484");
  CHECK(r.discrepancy->rhs == "1/160");
  std::size_t corrected = 0;
  for (const auto& s : r.per_index) {
    if (s.role != CheckRole::Corrected) continue;
    ++corrected;
    CHECK(s.ok);
  }
  CHECK(corrected == 6 * (4 + 11));
}

TEST_CASE("the pair-square table differs from the exact values from n = 2") {
  const VerifyReport r = Catalog::standard().verify("S3", {});
  CHECK(r.status == Status::KnownDiscrepancy);
  for (const auto& s : r.per_index) {
    if (s.role == CheckRole::Corrected) CHECK(s.ok);
    if (s.role == CheckRole::Printed && s.index.rfind("n=1,", 0) == 0) CHECK(s.ok);
  }
  REQUIRE(r.discrepancy.has_value());
  CHECK(r.discrepancy->index.rfind("n=2,", 0) == 0);
}

TEST_CASE("two-fold general identity at n = 1 is the concrete two-fold identity") {
  const Catalog cat = Catalog::standard();
  const auto general = rows_of(cat, "GT2", {1, 1, std::pair{0L, 60L}});
  const auto concrete = rows_of(cat, "P3", {0, 60});
  REQUIRE(general.size() == concrete.size());
  for (std::size_t m = 0; m < general.size(); ++m) {
    CHECK(general[m].lhs == concrete[m].lhs);
    CHECK(general[m].rhs == concrete[m].rhs);
  }
}

TEST_CASE("three-fold identity: two D values and a vanishing D coefficient") {
  VerifyOptions o;
  o.d_values = {Rational(0), Rational(1)};
  const auto rows = rows_of(Catalog::standard(), "T2", {0, 30}, o);
  std::size_t slopes = 0;
  for (const auto& r : rows) {
    CHECK(r.ok());
    if (r.index.rfind("dD,", 0) == 0) ++slopes;
  }
  CHECK(slopes == 31);
  o.d_values = {make_rational(-7, 3), Rational(5)};
  CHECK(Catalog::standard().verify("T2", o).status == Status::Pass);
}

TEST_CASE("generic parameter points come from the seed") {
  const Catalog cat = Catalog::standard();
  VerifyOptions a, b;
  a.seed = 1;
  b.seed = 2;
  const auto ra = cat.verify("T3", a);
  const auto rb = cat.verify("T3", b);
  CHECK(ra.status == Status::Pass);
  CHECK(rb.status == Status::Pass);
  CHECK(ra.params != rb.params);
  CHECK(cat.verify("T4", b).status == Status::Pass);
}

TEST_CASE("range overrides and caps") {
  const Catalog cat = Catalog::standard();
  VerifyOptions o;
  o.n_max = 60;
  const auto r = cat.verify("P3", o);
  CHECK(r.range.n_max == 60);
  CHECK(r.checked == 61);
  o.n_max = 100000;
  CHECK_THROWS_AS(cat.verify("P3", o), RangeTooLarge);
  VerifyOptions m;
  m.m_max = 100000;
  CHECK_THROWS_AS(cat.verify("GT2", m), RangeTooLarge);
  CHECK_THROWS_AS(cat.verify("nope", {}), UnknownIdentity);
}

TEST_CASE("empty ranges are vacuous") {
  VerifyOptions o;
  o.n_max = 1;
  CHECK(Catalog::standard().verify("T1", o).status == Status::Vacuous);
}

TEST_CASE("status folding") {
  const Check good{"0", Rational(1), Rational(1)};
  const Check bad{"1", Rational(1), Rational(2)};
  const Check printed_bad{"2", Rational(1), Rational(3), CheckRole::Printed};
  const Check corrected_bad{"3", Rational(1), Rational(4), CheckRole::Corrected};
  auto fold = [](Expectation e, std::vector<Check> rows) {
    const auto rec = fixed("X", e, rows);
    return summarize(rec, rec.default_range, {}, {}, rows);
  };
  CHECK(fold(Expectation::ExpectedPass, {good}).status == Status::Pass);
  CHECK(fold(Expectation::ExpectedPass, {good, bad}).status == Status::Fail);
  CHECK(fold(Expectation::ExpectedPass, {}).status == Status::Vacuous);
  CHECK(fold(Expectation::ExpectedPass, {printed_bad}).status == Status::Fail);
  CHECK(fold(Expectation::KnownDiscrepancy, {good, printed_bad}).status == Status::KnownDiscrepancy);
  CHECK(fold(Expectation::KnownDiscrepancy, {good}).status == Status::Pass);
  CHECK(fold(Expectation::KnownDiscrepancy, {printed_bad, corrected_bad}).status == Status::Fail);
  const auto r = fold(Expectation::ExpectedPass, {good, bad, bad});
  CHECK(r.failed == 2);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->index == "1");
  CHECK(r.first_failure->rhs == "2");
}

TEST_CASE("verify_all merges by id and counts statuses") {
  Catalog cat;
  cat.add(fixed("b", Expectation::ExpectedPass, {{"0", Rational(2), Rational(2)}}));
  cat.add(fixed("a", Expectation::ExpectedPass, {{"0", Rational(1), Rational(5)}}));
  cat.add(fixed("c", Expectation::KnownDiscrepancy,
                {{"0", Rational(1), Rational(5), CheckRole::Printed}}));
  const SummaryReport s = cat.verify_all({});
  REQUIRE(s.reports.size() == 3);
  CHECK(s.reports[0].id == "a");
  CHECK(s.reports[1].id == "b");
  CHECK(s.reports[2].id == "c");
  CHECK(s.passed == 1);
  CHECK(s.failed == 1);
  CHECK(s.known_discrepancies == 1);
  CHECK_FALSE(s.ok());
}

TEST_CASE("the full run is green and deterministic") {
  const Catalog cat = Catalog::standard();
  const SummaryReport a = cat.verify_all({});
  const SummaryReport b = cat.verify_all({});
  CHECK(a.ok());
  CHECK(a.known_discrepancies == 2);
  CHECK(a.failed == 0);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].id == b.reports[i].id);
    CHECK(a.reports[i].per_index == b.reports[i].per_index);
    CHECK(a.reports[i].notes == b.reports[i].notes);
  }
}

TEST_CASE("verify_all clamps oversized overrides instead of throwing") {
  VerifyOptions o;
  o.n_max = 20;
  const SummaryReport s = Catalog::standard().verify_all(o);
  for (const auto& r : s.reports) {
    if (r.id == "GT2") {
      CHECK(r.range.n_max == 12);
      CHECK(r.status == Status::Pass);
    }
  }
}
