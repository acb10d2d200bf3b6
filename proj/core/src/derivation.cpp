#include "tribo/derivation.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "tribo/errors.hpp"

namespace tribo {

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::CPower: return "cpower";
    case FamilyKind::CofactorPower: return "cofactor";
    case FamilyKind::SumCofactorConst: return "sumcofactor";
    case FamilyKind::SumCofactorSqConst: return "sumcofactorsq";
    case FamilyKind::PairSumSqPower: return "pairsumsq";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (auto kind : {FamilyKind::CPower, FamilyKind::CofactorPower, FamilyKind::SumCofactorConst,
                    FamilyKind::SumCofactorSqConst, FamilyKind::PairSumSqPower}) {
    if (family_name(kind) == name) return kind;
  }
  return std::nullopt;
}

CSymmetric c_symmetric() {
  const FieldElement c = c_element();
  return {trace(c), trace(cofactor_element()), norm(c)};
}

FieldElement family_element(const PowerFamily& fam) {
  if (fam.n == 0) throw std::invalid_argument("power families start at n = 1");
  switch (fam.kind) {
    case FamilyKind::CPower:
      return c_element().pow(fam.n);
    case FamilyKind::CofactorPower:
      return cofactor_element().pow(fam.n);
    case FamilyKind::SumCofactorConst:
      return FieldElement::constant(pow(c_symmetric().e2, fam.n));
    case FamilyKind::SumCofactorSqConst: {
      // sum_{i<j} (c_i c_j)^2 = e2^2 - 2 e1 e3
      const auto e = c_symmetric();
      return FieldElement::constant(pow(e.e2 * e.e2 - 2 * e.e1 * e.e3, fam.n));
    }
    case FamilyKind::PairSumSqPower: {
      const FieldElement c2 = c_element() * c_element();
      return (FieldElement::constant(trace(c2)) - c2).pow(fam.n);
    }
  }
  throw std::invalid_argument("unknown family");
}

ScaledSeq derive(const PowerFamily& fam) { return normalize_egf(family_element(fam)); }

namespace {

using Triple = std::array<Rational, 3>;

Triple as_rationals(const InitTriple& t) { return {Rational(t.s0), Rational(t.s1), Rational(t.s2)}; }

Rational checked_div(const Rational& num, const Rational& den, const std::string& what) {
  if (den == 0) throw DivisionByZero(what + " has a vanishing denominator");
  return num / den;
}

// s0 = +-lcm(den(ratio1), den(ratio2)), s1 = ratio1 s0, s2 = ratio2 s0, with
// the sign making the dominant-root coefficient of T^(s) positive.
InitTriple assemble(const Rational& ratio1, const Rational& ratio2) {
  const Integer base = lcm(ratio1.get_den(), ratio2.get_den());
  const Rational s1 = ratio1 * base;
  const Rational s2 = ratio2 * base;
  InitTriple t{base, s1.get_num(), s2.get_num()};
  const FieldElement r = element_from_traces(as_rationals(t));
  if (sign_at_real_root(r) < 0) t = {-t.s0, -t.s1, -t.s2};
  return t;
}

struct Step {
  std::map<std::string, Rational> helpers;
  ScaledSeq next;
};

Step cpower_step(const ScaledSeq& prev) {
  const auto [s0, s1, s2] = as_rationals(prev.triple);
  Step step;
  auto& h = step.helpers;
  const Rational den_b = 5 * s2 * s1 - 4 * s1 * s0 - 3 * s1 * s1;
  h["B"] = checked_div(2 * s2 * s1 + 5 * s1 * s0 + s1 * s1, den_b, "B");
  h["D"] = 9 * s2 * s2 * s1 + 6 * s2 * s1 * s0 + 18 * s2 * s1 * s1 - 2 * s1 * s1 * s0 -
           7 * s1 * s1 * s1;
  h["C"] = checked_div(h["D"], (3 * s2 - s1) * den_b, "C");
  const InitTriple t = assemble(h["B"], h["C"]);
  const Rational scale =
      checked_div(prev.scale, s1, "A_1") * Rational(3 * t.s2 - 2 * t.s1 - t.s0);
  step.next = {scale, t};
  return step;
}

Step cofactor_step(const ScaledSeq& prev) {
  const auto [s0, s1, s2] = as_rationals(prev.triple);
  Step step;
  auto& h = step.helpers;
  h["A"] = 10 * s2 - 10 * s1 - 2 * s0;
  h["B"] = -6 * s2 + 6 * s1 - 12 * s0;
  h["C"] = -8 * s2 + 8 * s1 + 6 * s0;
  h["D"] = -6 * s2 + 14 * s1 - 2 * s0;
  h["E"] = 8 * s2 - 26 * s1 + 10 * s0;
  h["F"] = 18 * s2 - 20 * s1 - 16 * s0;
  h["M"] = checked_div(h["F"] * h["A"] - h["C"] * h["D"], h["B"] * h["D"] - h["A"] * h["E"], "M");
  h["N"] = checked_div(-(h["B"] * h["M"] + h["C"]), h["A"], "N");
  const InitTriple t = assemble(h["M"], h["N"]);
  const Rational scale = checked_div(prev.scale, s2 - s1 - s0, "A_2") *
                         Rational(-8 * t.s2 + 18 * t.s1 + 2 * t.s0);
  step.next = {scale, t};
  return step;
}

Step pairsumsq_step(const ScaledSeq& prev) {
  const auto [s0, s1, s2] = as_rationals(prev.triple);
  Step step;
  auto& h = step.helpers;
  const Rational den = s2 - 4 * s1 + 3 * s0;
  h["M"] = checked_div(3 * s2 - 4 * s1 - s0, den, "M");
  h["N"] = checked_div(-7 * s2 + 10 * s1 + 5 * s0, den, "N");
  const InitTriple t = assemble(h["M"], h["N"]);
  const Rational scale = checked_div(44 * prev.scale * Rational(t.s0), den, "A_5");
  step.next = {scale, t};
  return step;
}

}  // namespace

RecursionReport derive_paper_recursive(FamilyKind kind, unsigned n_max) {
  if (n_max < 2) throw std::invalid_argument("replication starts at n = 2");
  Step (*advance)(const ScaledSeq&) = nullptr;
  switch (kind) {
    case FamilyKind::CPower: advance = cpower_step; break;
    case FamilyKind::CofactorPower: advance = cofactor_step; break;
    case FamilyKind::PairSumSqPower: advance = pairsumsq_step; break;
    default:
      throw std::invalid_argument("no published step recursion for family " +
                                  std::string(family_name(kind)));
  }
  RecursionReport report{kind, {}, true};
  ScaledSeq current = derive({kind, 1});
  bool broken = false;
  for (unsigned n = 2; n <= n_max; ++n) {
    RecursiveStep row;
    row.n = n;
    row.direct = derive({kind, n});
    if (!broken) {
      try {
        Step step = advance(current);
        row.helpers = std::move(step.helpers);
        row.replicated = step.next;
        row.match = step.next == row.direct;
        current = step.next;
      } catch (const DivisionByZero& e) {
        row.error = e.what();
        broken = true;
      }
    } else {
      row.error = "skipped after an earlier failure";
    }
    report.all_match = report.all_match && row.match;
    report.steps.push_back(std::move(row));
  }
  return report;
}

ConjectureReport conjecture_check(unsigned n_max) {
  ConjectureReport report;
  for (unsigned n = 1; n <= n_max; ++n) {
    ConjectureRow row;
    row.n = n;
    row.a1_2n = derive({FamilyKind::CPower, 2 * n}).scale;
    row.a2_n = derive({FamilyKind::CofactorPower, n}).scale;
    row.equal = row.a1_2n == row.a2_n;
    if (!row.equal && !report.first_counterexample) report.first_counterexample = n;
    report.holds = report.holds && row.equal;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace tribo
