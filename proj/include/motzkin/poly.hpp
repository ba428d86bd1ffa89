#pragma once

// Exact polynomials over arbitrary-precision integers.
//
// UniPoly is dense in q. MultiPoly is sparse over one of a few fixed variable
// lists; exponents are packed 16 bits per variable into a 64-bit key so that
// monomial multiplication is key addition.
//
// Canonical text: terms ascending by total degree (ties: larger exponent of
// an earlier variable first), coefficient 1 and exponent 1 suppressed, "*"
// between factors, " + " / " - " between terms, "0" for the zero polynomial.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motzkin {

using BigInt = mpz_class;

class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(BigInt constant);
  explicit UniPoly(std::vector<BigInt> coeffs);

  /// c * q^exp
  static UniPoly monomial(int exp, BigInt c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^k; zero outside the stored range.
  const BigInt& coeff(int k) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);

  /// Multiplication by q^k, k >= 0.
  UniPoly shifted(int k) const;

  BigInt evaluate(const BigInt& q) const;

  std::string to_string(std::string_view var = "q") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// The variable lists a MultiPoly can live over.
enum class VarSet : std::uint8_t { Q, YQ, XYPQ, ABCD };

std::span<const std::string_view> var_names(VarSet vars);
int var_count(VarSet vars);
/// Index of `name` in the list; throws std::invalid_argument when absent.
int var_index(VarSet vars, std::string_view name);

class MultiPoly {
 public:
  static constexpr int kMaxVars = 4;
  static constexpr int kExpBits = 16;
  using Key = std::uint64_t;
  using Exponents = std::array<int, kMaxVars>;

  struct Term {
    Key key;
    BigInt coeff;
  };

  explicit MultiPoly(VarSet vars = VarSet::Q) : vars_(vars) {}
  MultiPoly(VarSet vars, long constant);
  MultiPoly(VarSet vars, const BigInt& constant);

  static MultiPoly monomial(VarSet vars, const Exponents& exps, BigInt c = 1);
  /// name^exp
  static MultiPoly variable(VarSet vars, std::string_view name, int exp = 1);
  static MultiPoly from_uni(VarSet vars, std::string_view name, const UniPoly& p);
  /// Sums duplicate keys and drops zeros.
  static MultiPoly from_terms(VarSet vars, std::vector<Term> terms);

  /// Throws std::overflow_error for an exponent of 2^16 or more.
  static Key pack(const Exponents& exps);
  static Exponents unpack(Key key);

  VarSet vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  BigInt coefficient(const Exponents& exps) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  /// Multiplies every term by the monomial with the given packed key.
  MultiPoly times_monomial(Key key, const BigInt& c = 1) const;

  /// Sets one variable to an integer value; the result keeps the same
  /// variable list with that exponent zero everywhere.
  MultiPoly substitute(std::string_view name, const BigInt& value) const;

  /// Requires every other variable to be absent; throws std::invalid_argument.
  UniPoly to_uni(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_same(const MultiPoly& other) const;
  void normalize();

  VarSet vars_;
  std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

}  // namespace motzkin
