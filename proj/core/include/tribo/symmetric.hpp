#pragma once

// Parameterized expansions of (a+b+c)^d, d = 3, 4, 5, in products of power
// sums p_k = a^k + b^k + c^k, e2 = ab + bc + ca and e3 = abc. Each family has
// free parameters; the remaining coefficients are fixed by linear
// constraints and are always recomputed from them.
//
//   d = 3:  A p3 + B e3 + C p2 p1 + D e2 p1
//   d = 4:  A p4 + C p3 p1 + D p2^2 + E p2 e2 + F e2^2 + G p2 p1^2
//           + H e2 p1^2 + I e3 p1
//   d = 5:  A p5 + B e3 e2 + C e3 p2 + D e3 p1^2 + E p4 p1 + H p3 p2
//           + I p3 e2 + L p3 p1^2 + N p2^2 p1 + P e2^2 p1 + Q p2 e2 p1
//           + R p2 p1^3 + S e2 p1^3

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "tribo/rational.hpp"

namespace tribo {

struct SymParams3 {
  Rational D;
};
struct SymCoeffs3 {
  Rational A, B, C;
};

struct SymParams4 {
  Rational D, E, G, H;
};
struct SymCoeffs4 {
  Rational A, C, F, I;
};

struct SymParams5 {
  Rational D, I, L, N, P, Q, R, S;
};
struct SymCoeffs5 {
  Rational A, B, C, E, H;
};

using SymParams = std::variant<SymParams3, SymParams4, SymParams5>;

SymCoeffs3 coeffs3(const SymParams3& p);
SymCoeffs4 coeffs4(const SymParams4& p);
SymCoeffs5 coeffs5(const SymParams5& p);

unsigned degree_of(const SymParams& p);

/// Right-hand side of the expansion at (a, b, c).
Rational sym_rhs(const SymParams& p, const Rational& a, const Rational& b, const Rational& c);

struct SymCheck {
  bool holds = true;
  /// First grid point where the two sides differ.
  std::optional<std::array<long, 3>> counterexample;
  Rational lhs;
  Rational rhs;
};

/// Compares (a+b+c)^d with the expansion on {0, ..., grid-1}^3. With
/// grid >= d + 1 agreement everywhere proves the identity, since both sides
/// have degree at most d in each variable. Throws std::invalid_argument
/// when grid <= d or when `degree` does not match the parameter type.
SymCheck certify_sym_identity(unsigned degree, const SymParams& p, unsigned grid);

inline bool verify_sym_identity(unsigned degree, const SymParams& p, unsigned grid) {
  return certify_sym_identity(degree, p, grid).holds;
}

/// Parameter draws with numerators in [-10, 10] and denominators in [1, 10].
/// Uses the raw engine output so draws are identical on every platform.
SymParams random_sym_params(unsigned degree, std::mt19937_64& rng);

/// "D=0, E=1/2, ..." in declaration order.
std::string describe(const SymParams& p);

}  // namespace tribo
