#pragma once

// Registry of verifiable identities. Each record evaluates both sides of a
// published statement exactly, one row per index, and the runner folds the
// rows into a VerifyReport.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tribo/rational.hpp"

namespace tribo {

enum class Expectation { ExpectedPass, KnownDiscrepancy };
enum class Status { Pass, Fail, KnownDiscrepancy, Vacuous };

/// Claim:     a statement expected to hold.
/// Printed:   a published value the exact oracle may contradict.
/// Corrected: the oracle's replacement for a Printed value; must hold.
enum class CheckRole { Claim, Printed, Corrected };

std::string_view to_string(Expectation e);
std::string_view to_string(Status s);
std::string_view to_string(CheckRole r);
std::optional<Expectation> parse_expectation(std::string_view s);
std::optional<Status> parse_status(std::string_view s);
std::optional<CheckRole> parse_role(std::string_view s);

struct Check {
  std::string index;
  Rational lhs;
  Rational rhs;
  CheckRole role = CheckRole::Claim;

  bool ok() const { return lhs == rhs; }
};

struct IndexRange {
  long n_min = 0;
  long n_max = -1;
  /// Second index (m) for the two-index families.
  std::optional<std::pair<long, long>> m;

  bool empty() const { return n_max < n_min || (m && m->second < m->first); }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct VerifyOptions {
  std::optional<long> n_max;
  std::optional<long> m_max;
  std::uint64_t seed = 42;
  /// Sample of the free parameter D of the three-fold identity.
  std::vector<Rational> d_values{Rational(0), Rational(1)};
};

using Params = std::vector<std::pair<std::string, std::string>>;

struct EvalContext {
  IndexRange range;
  const VerifyOptions& options;
  Params& params;
  std::vector<std::string>& notes;
};

using Evaluator = std::function<std::vector<Check>(EvalContext&)>;

struct IdentityRecord {
  std::string id;
  std::string paper_label;
  IndexRange default_range;
  /// Largest n (resp. m) accepted; beyond them verify() throws RangeTooLarge.
  long n_cap = 0;
  long m_cap = 0;
  Expectation expectation = Expectation::ExpectedPass;
  Evaluator evaluate;
};

struct IndexStatus {
  std::string index;
  CheckRole role = CheckRole::Claim;
  bool ok = true;
  friend bool operator==(const IndexStatus&, const IndexStatus&) = default;
};

struct Failure {
  std::string index;
  CheckRole role = CheckRole::Claim;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerifyReport {
  std::string id;
  std::string paper_label;
  Expectation expectation = Expectation::ExpectedPass;
  IndexRange range;
  Params params;
  Status status = Status::Vacuous;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// In-memory only; serialized reports keep the counts and failures.
  std::vector<IndexStatus> per_index;
  std::optional<Failure> first_failure;
  /// For known-discrepancy entries: the first printed value that the oracle
  /// contradicts, with both evaluations.
  std::optional<Failure> discrepancy;
  std::vector<std::string> notes;
};

struct SummaryReport {
  std::uint64_t seed = 0;
  std::vector<VerifyReport> reports;  // sorted by id
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t known_discrepancies = 0;
  std::size_t vacuous = 0;

  bool ok() const { return failed == 0; }
};

class Catalog {
 public:
  /// Every identity registered with its default range.
  static Catalog standard();

  void add(IdentityRecord record);
  bool contains(std::string_view id) const;
  /// Throws UnknownIdentity.
  const IdentityRecord& find(std::string_view id) const;
  std::vector<std::string> ids() const;

  /// Throws UnknownIdentity or RangeTooLarge.
  VerifyReport verify(std::string_view id, const VerifyOptions& options) const;
  /// Runs every record (concurrently) and merges the reports by id.
  SummaryReport verify_all(const VerifyOptions& options) const;

 private:
  std::map<std::string, IdentityRecord, std::less<>> records_;
};

/// Folds evaluated rows into a report; exposed for tests.
VerifyReport summarize(const IdentityRecord& record, IndexRange range, Params params,
                       std::vector<std::string> notes, const std::vector<Check>& rows);

}  // namespace tribo
