#pragma once

// Representations of E = (Z/2)^l and of rank-l tori, flags, subgroups,
// flag decompositions and Euler-class polynomials.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eulerlab/errors.hpp"
#include "eulerlab/linalg.hpp"
#include "eulerlab/poly.hpp"

namespace eulerlab {

/// A character of E, i.e. an element of E* = F2^l. Coordinate j+1 lives in bit j,
/// so numeric order compares the last coordinate first.
struct CharF2 {
  std::uint64_t bits = 0;

  static CharF2 from_coords(std::span<const int> coords);
  std::vector<int> coords(int rank) const;
  bool is_trivial() const { return bits == 0; }
  bool fits(int rank) const { return rank >= 64 || (bits >> rank) == 0; }

  friend CharF2 operator+(CharF2 a, CharF2 b) { return {a.bits ^ b.bits}; }
  friend auto operator<=>(const CharF2&, const CharF2&) = default;
};

/// A weight of a torus: an element of L* = Z^l.
struct Weight {
  std::vector<std::int64_t> coords;

  bool is_trivial() const;
  bool fits(int rank) const { return static_cast<int>(coords.size()) == rank; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Primitive representative of the rational line through w (gcd 1, first nonzero
/// entry positive). The zero weight maps to itself.
Weight primitive(const Weight& w);
/// Order used for deterministic tie-breaks: compares from the last coordinate.
bool colex_less(const Weight& a, const Weight& b);
std::string to_string(const Weight& w);
std::string to_string(CharF2 c, int rank);

/// Finite table key -> positive multiplicity, for a group of the given rank.
template <class Key>
class RepTable {
 public:
  using Entries = std::map<Key, std::int64_t>;

  RepTable() = default;
  explicit RepTable(int rank) : rank_(rank) {
    if (rank < 0) throw InputError("negative group rank");
  }

  int rank() const { return rank_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Adds m >= 0 copies of key.
  RepTable& add(const Key& key, std::int64_t m) {
    if (m < 0) throw InputError("negative multiplicity");
    if (!key.fits(rank_)) throw StructuralError("character does not match group rank");
    if (m > 0) entries_[key] += m;
    return *this;
  }

  std::int64_t multiplicity(const Key& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
  }

  std::int64_t dim() const {
    std::int64_t d = 0;
    for (const auto& [k, m] : entries_) d += m;
    return d;
  }

  /// Dimension of the fixed subspace (trivial summand).
  std::int64_t fixed_dim() const {
    std::int64_t d = 0;
    for (const auto& [k, m] : entries_) {
      if (k.is_trivial()) d += m;
    }
    return d;
  }

  /// The same table without its trivial summand.
  RepTable nontrivial_part() const {
    RepTable r(rank_);
    for (const auto& [k, m] : entries_) {
      if (!k.is_trivial()) r.entries_.emplace(k, m);
    }
    return r;
  }

  /// Direct sum.
  RepTable operator+(const RepTable& other) const {
    if (other.rank_ != rank_) throw StructuralError("direct sum of representations of different rank");
    RepTable r = *this;
    for (const auto& [k, m] : other.entries_) r.entries_[k] += m;
    return r;
  }

  friend bool operator==(const RepTable&, const RepTable&) = default;

 private:
  int rank_ = 0;
  Entries entries_;
};

using RepE = RepTable<CharF2>;
using RepT = RepTable<Weight>;

/// Complete flag in E*, carried by an adapted dual basis T_1..T_l with
/// E^i = span(T_1..T_i).
class FlagE {
 public:
  FlagE() = default;
  FlagE(int rank, std::vector<CharF2> dual_basis);

  static FlagE standard(int rank);
  /// spans[i] spans E^{i+1}; each step is represented by its numerically least
  /// element of E^{i+1} \ E^i.
  static FlagE from_chain(int rank, const std::vector<std::vector<CharF2>>& spans);

  int rank() const { return rank_; }
  const std::vector<CharF2>& dual_basis() const { return basis_; }
  /// c with alpha = sum_j c_j T_j, packed like a character.
  std::uint64_t coordinates(CharF2 alpha) const;
  /// Least j with alpha in E^j (0 for the trivial character).
  int level(CharF2 alpha) const;

  friend bool operator==(const FlagE& a, const FlagE& b) {
    return a.rank_ == b.rank_ && a.basis_ == b.basis_;
  }

 private:
  int rank_ = 0;
  std::vector<CharF2> basis_;
  std::vector<linalg::F2Vec> raw_;
};

/// Complete flag in E* = Q^l, carried by primitive, sign-normalized covectors.
class RationalFlag {
 public:
  RationalFlag() = default;
  RationalFlag(int rank, std::vector<Weight> dual_basis);

  static RationalFlag standard(int rank);

  int rank() const { return rank_; }
  const std::vector<Weight>& dual_basis() const { return basis_; }
  /// c in Q^l with alpha = sum_j c_j T_j.
  linalg::QVec coordinates(const Weight& alpha) const;
  int level(const Weight& alpha) const;

  friend bool operator==(const RationalFlag& a, const RationalFlag& b) {
    return a.rank_ == b.rank_ && a.basis_ == b.basis_;
  }

 private:
  int rank_ = 0;
  std::vector<Weight> basis_;
  linalg::QMat inverse_;  // rows of T inverted
};

/// F <= E, stored as its canonical row-echelon basis (vectors of E = F2^l).
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(int rank, std::vector<linalg::F2Vec> generators);

  static Subgroup trivial(int rank) { return Subgroup(rank, {}); }
  static Subgroup whole(int rank);

  int rank() const { return rank_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<linalg::F2Vec>& basis() const { return basis_; }
  bool contains(linalg::F2Vec v) const { return linalg::f2_in_span(basis_, v); }
  bool contains(const Subgroup& other) const;
  /// True iff alpha vanishes on F.
  bool annihilated_by(CharF2 alpha) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  int rank_ = 0;
  std::vector<linalg::F2Vec> basis_;
};

template <class Rep>
struct Decomposition {
  Rep fixed;               ///< trivial summand U^G
  std::vector<Rep> parts;  ///< U_1, ..., U_l

  std::vector<std::int64_t> dims() const {
    std::vector<std::int64_t> d;
    for (const auto& p : parts) d.push_back(p.dim());
    return d;
  }
};

Decomposition<RepE> decompose(const RepE& u, const FlagE& flag);
Decomposition<RepT> decompose(const RepT& u, const RationalFlag& flag);

/// Deterministic basis of the annihilator F° in E*; it identifies E/F with
/// F2^{l - dim F} via v + F -> (b_1(v), ..., b_m(v)).
std::vector<CharF2> annihilator_basis(const Subgroup& f);
/// Characters vanishing on F, rewritten as a representation of E/F.
RepE fixed_subrep(const RepE& u, const Subgroup& f);
/// Image of a subgroup containing F in E/F coordinates.
Subgroup quotient_image(const Subgroup& larger, const Subgroup& f);
/// Character of E/F (in annihilator-basis coordinates) as an element of E*.
CharF2 lift_character(CharF2 c, const std::vector<CharF2>& annihilator);

/// prod_alpha alpha^{dim U^alpha} in flag coordinates. Throws HypothesisFailure
/// if the trivial character occurs.
Poly euler_poly(const RepE& u, const FlagE& flag);
Poly euler_poly(const RepT& u, const RationalFlag& flag);

}  // namespace eulerlab
