#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eulerlab {

enum class Field { F2, Q };

std::string_view to_string(Field f);
Field parse_field(std::string_view s);

/// Brings an exact rational into the canonical range of the field:
/// {0,1} for F2 (odd denominators only), lowest terms for Q.
mpq_class normalize_coefficient(Field f, const mpq_class& c);

/// Exponent vector t_1^{r_1} ... t_l^{r_l}; index j holds the exponent of T_{j+1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  /// T_{j+1}^power in nvars variables (j is zero-based).
  static Monomial variable(std::size_t nvars, std::size_t j, std::uint32_t power = 1);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t j) const { return exps_[j]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::uint32_t degree() const;

  Monomial operator*(const Monomial& other) const;
  /// Lowers the exponent of variable j by `power`; requires exps[j] >= power.
  Monomial divided_by_power(std::size_t j, std::uint32_t power) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order with T_l > ... > T_1.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Pure lexicographic order with T_l > ... > T_1.
bool lex_less(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over F2 or Q in canonical form:
/// no stored zero coefficients, terms keyed in graded-lex order.
class Poly {
 public:
  using Terms = std::map<Monomial, mpq_class, GrlexLess>;

  Poly() = default;
  Poly(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Poly constant(Field field, std::size_t nvars, const mpq_class& c);
  static Poly variable(Field field, std::size_t nvars, std::size_t j);
  static Poly monomial(Field field, const Monomial& m, const mpq_class& c = 1);
  /// sum_j coeffs[j] * T_{j+1}
  static Poly linear_form(Field field, std::span<const mpq_class> coeffs);
  /// Normalizes and drops zero coefficients.
  static Poly from_terms(Field field, std::size_t nvars, Terms terms);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  mpq_class coefficient(const Monomial& m) const;
  /// Largest exponent of variable j among the terms (0 for the zero polynomial).
  std::uint32_t degree_in(std::size_t j) const;
  /// Largest index j+1 whose variable occurs, 0 for constants.
  std::size_t highest_variable() const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;
  Poly scaled(const mpq_class& c) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Text form `c*T1^a*T2^b + ...`, terms in ascending graded-lex order.
  std::string to_string() const;
  /// Accepts arbitrary whitespace and term order; variables `T<i>` or `t<i>`.
  static Poly parse(std::string_view text, Field field, std::size_t nvars);

 private:
  void check_compatible(const Poly& other) const;

  Field field_ = Field::F2;
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Complete homogeneous symmetric polynomial h_degree(T_first, ..., T_last),
/// indices one-based and inclusive.
Poly complete_homogeneous(Field field, std::size_t nvars, std::size_t first, std::size_t last,
                          std::uint32_t degree);

/// Relations g_1..g_l with g_j in T_1..T_j, monic (up to an invertible constant)
/// of degree d_j >= 1 in T_j and of lower T_j-degree in every other term.
class TriangularSystem {
 public:
  TriangularSystem() = default;
  explicit TriangularSystem(std::vector<Poly> generators);

  Field field() const { return field_; }
  std::size_t nvars() const { return generators_.size(); }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  const mpq_class& leading_coefficient(std::size_t j) const { return leading_[j]; }
  /// prod_j d_j
  std::uint64_t quotient_dimension() const;

  friend bool operator==(const TriangularSystem& a, const TriangularSystem& b) {
    return a.generators_ == b.generators_;
  }

 private:
  Field field_ = Field::F2;
  std::vector<Poly> generators_;
  std::vector<std::uint32_t> degrees_;
  std::vector<mpq_class> leading_;
};

enum class ReductionOrder {
  /// Eliminate T_l first, then T_{l-1}, ... (default).
  HighestVariableFirst,
  /// Always rewrite the lex-largest reducible term.
  LexLeadingTerm,
};

/// Unique normal form r with deg_{T_j}(r) < d_j for all j and p - r in the ideal.
Poly reduce(const Poly& p, const TriangularSystem& system,
            ReductionOrder order = ReductionOrder::HighestVariableFirst);

/// Monomials prod T_j^{r_j}, 0 <= r_j < d_j, in ascending graded-lex order.
std::vector<Monomial> quotient_basis(const TriangularSystem& system);
std::vector<Monomial> quotient_basis_in_degree(const TriangularSystem& system, std::uint32_t degree);

/// Coefficients of prod_j (1 + q + ... + q^{d_j - 1}).
std::vector<std::uint64_t> hilbert_series(const TriangularSystem& system);

struct ZeroTest {
  bool is_zero;
  Poly normal_form;  ///< nonzero certificate when !is_zero
};

ZeroTest is_zero_in_quotient(const Poly& p, const TriangularSystem& system);

}  // namespace eulerlab
