#pragma once

// Power families of per-root coefficients and their canonical presentations.
//
// Each family is a single element of K whose embedding at alpha is the
// coefficient of e^(alpha x):
//   CPower(n)             c^n                    -> c_i^n
//   CofactorPower(n)      cofactor^n             -> (c_j c_k)^n
//   SumCofactorConst(n)   (c1c2 + c2c3 + c3c1)^n  (a rational constant)
//   SumCofactorSqConst(n) ((c1c2)^2 + (c2c3)^2 + (c3c1)^2)^n
//   PairSumSqPower(n)     (trace(c^2) - c^2)^n   -> (c_j^2 + c_k^2)^n
//
// derive() (field power, then normalize_egf) is the authoritative path.
// derive_paper_recursive() replays the closed-form step recursions exactly
// as published and reports where they disagree with it.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tribo/field.hpp"
#include "tribo/rational.hpp"
#include "tribo/sequences.hpp"

namespace tribo {

enum class FamilyKind { CPower, CofactorPower, SumCofactorConst, SumCofactorSqConst, PairSumSqPower };

struct PowerFamily {
  FamilyKind kind;
  unsigned n;
};

/// CLI names: cpower, cofactor, sumcofactor, sumcofactorsq, pairsumsq.
std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);

/// Elementary symmetric functions of (c1, c2, c3): (0, -1/22, 1/44).
struct CSymmetric {
  Rational e1, e2, e3;
};
CSymmetric c_symmetric();

/// Throws std::invalid_argument for n = 0.
FieldElement family_element(const PowerFamily& fam);

ScaledSeq derive(const PowerFamily& fam);

struct RecursiveStep {
  unsigned n = 0;
  /// Helper quantities of the step recursion (B, C, D or A..F, M, N ...).
  std::map<std::string, Rational> helpers;
  std::optional<ScaledSeq> replicated;
  ScaledSeq direct;
  bool match = false;
  /// Set when a printed denominator vanished; later steps are skipped.
  std::optional<std::string> error;
};

struct RecursionReport {
  FamilyKind kind;
  std::vector<RecursiveStep> steps;  // n = 2 .. n_max
  bool all_match = false;
};

/// Replays the published recursion for CPower, CofactorPower or
/// PairSumSqPower from the n = 1 presentation up to n_max (>= 2), choosing
/// the sign of s0 by the dominant-root rule. Throws std::invalid_argument
/// for other families or n_max < 2.
RecursionReport derive_paper_recursive(FamilyKind kind, unsigned n_max);

struct ConjectureRow {
  unsigned n = 0;
  Rational a1_2n;  // scale of CPower(2n)
  Rational a2_n;   // scale of CofactorPower(n)
  bool equal = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  bool holds = true;
  std::optional<unsigned> first_counterexample;
};

/// Compares the scales of CPower(2n) and CofactorPower(n) for n = 1..n_max.
ConjectureReport conjecture_check(unsigned n_max);

}  // namespace tribo
