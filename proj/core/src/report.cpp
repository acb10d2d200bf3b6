#include "tribo/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tribo {

namespace {

using json = nlohmann::ordered_json;

json failure_json(const std::optional<Failure>& f) {
  if (!f) return nullptr;
  return {{"index", f->index}, {"role", std::string(to_string(f->role))},
          {"lhs", f->lhs}, {"rhs", f->rhs}};
}

std::optional<Failure> failure_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  const auto role = parse_role(j.at("role").get<std::string>());
  if (!role) throw std::invalid_argument("bad role in report");
  return Failure{j.at("index").get<std::string>(), *role, j.at("lhs").get<std::string>(),
                 j.at("rhs").get<std::string>()};
}

json range_json(const IndexRange& r) {
  json j = {{"n_min", std::to_string(r.n_min)}, {"n_max", std::to_string(r.n_max)}};
  if (r.m) {
    j["m_min"] = std::to_string(r.m->first);
    j["m_max"] = std::to_string(r.m->second);
  }
  return j;
}

IndexRange range_from(const json& j) {
  IndexRange r;
  r.n_min = std::stol(j.at("n_min").get<std::string>());
  r.n_max = std::stol(j.at("n_max").get<std::string>());
  if (j.contains("m_min")) {
    r.m = std::pair{std::stol(j.at("m_min").get<std::string>()),
                    std::stol(j.at("m_max").get<std::string>())};
  }
  return r;
}

json report_json(const VerifyReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"id", r.id},
          {"paper_label", r.paper_label},
          {"expectation", std::string(to_string(r.expectation))},
          {"range", range_json(r.range)},
          {"params", params},
          {"status", std::string(to_string(r.status))},
          {"checked", std::to_string(r.checked)},
          {"failed", std::to_string(r.failed)},
          {"first_failure", failure_json(r.first_failure)},
          {"discrepancy", failure_json(r.discrepancy)},
          {"notes", r.notes}};
}

VerifyReport report_from(const json& j) {
  VerifyReport r;
  r.id = j.at("id").get<std::string>();
  r.paper_label = j.at("paper_label").get<std::string>();
  const auto e = parse_expectation(j.at("expectation").get<std::string>());
  const auto s = parse_status(j.at("status").get<std::string>());
  if (!e || !s) throw std::invalid_argument("bad expectation or status in report");
  r.expectation = *e;
  r.status = *s;
  r.range = range_from(j.at("range"));
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
  r.checked = std::stoul(j.at("checked").get<std::string>());
  r.failed = std::stoul(j.at("failed").get<std::string>());
  r.first_failure = failure_from(j.at("first_failure"));
  r.discrepancy = failure_from(j.at("discrepancy"));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string failure_text(const Failure& f) {
  return f.index + " [" + std::string(to_string(f.role)) + "]: lhs=" + f.lhs + " rhs=" + f.rhs;
}

}  // namespace

std::string to_json(const VerifyReport& report) { return report_json(report).dump(2) + "\n"; }

std::string to_json(const SummaryReport& summary) {
  json reports = json::array();
  for (const auto& r : summary.reports) reports.push_back(report_json(r));
  const json j = {{"seed", std::to_string(summary.seed)},
                  {"passed", std::to_string(summary.passed)},
                  {"failed", std::to_string(summary.failed)},
                  {"known_discrepancies", std::to_string(summary.known_discrepancies)},
                  {"vacuous", std::to_string(summary.vacuous)},
                  {"reports", reports}};
  return j.dump(2) + "\n";
}

VerifyReport report_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] { return report_from(j); });
}

SummaryReport summary_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    SummaryReport s;
    s.seed = std::stoull(j.at("seed").get<std::string>());
    s.passed = std::stoul(j.at("passed").get<std::string>());
    s.failed = std::stoul(j.at("failed").get<std::string>());
    s.known_discrepancies = std::stoul(j.at("known_discrepancies").get<std::string>());
    s.vacuous = std::stoul(j.at("vacuous").get<std::string>());
    for (const auto& r : j.at("reports")) s.reports.push_back(report_from(r));
    return s;
  });
}

std::string to_tsv(const SummaryReport& summary) {
  std::ostringstream out;
  out << "id\tstatus\tchecked\tfailed\tfirst_failure\tlhs\trhs\n";
  for (const auto& r : summary.reports) {
    const auto& f = r.first_failure;
    out << r.id << '\t' << to_string(r.status) << '\t' << r.checked << '\t' << r.failed << '\t'
        << (f ? f->index : "-") << '\t' << (f ? f->lhs : "-") << '\t' << (f ? f->rhs : "-")
        << '\n';
  }
  return out.str();
}

std::string to_text(const SummaryReport& summary, bool verbose) {
  std::ostringstream out;
  for (const auto& r : summary.reports) {
    out << r.id << ": " << to_string(r.status) << " (" << r.checked << " checked";
    if (r.failed) out << ", " << r.failed << " failed";
    out << ")  " << r.paper_label << '\n';
    if (r.discrepancy) out << "  printed differs at " << failure_text(*r.discrepancy) << '\n';
    if (r.status == Status::Fail && r.first_failure)
      out << "  first failure " << failure_text(*r.first_failure) << '\n';
    if (verbose) {
      for (const auto& [k, v] : r.params) out << "  " << k << " = " << v << '\n';
      for (const auto& n : r.notes) out << "  note: " << n << '\n';
    }
  }
  out << "passed " << summary.passed << ", failed " << summary.failed << ", known discrepancies "
      << summary.known_discrepancies << ", vacuous " << summary.vacuous << " (seed "
      << summary.seed << ")\n";
  return out.str();
}

std::string render(const SummaryReport& summary, Format format, bool verbose) {
  switch (format) {
    case Format::Json: return to_json(summary);
    case Format::Tsv: return to_tsv(summary);
    case Format::Text: break;
  }
  return to_text(summary, verbose);
}

}  // namespace tribo
