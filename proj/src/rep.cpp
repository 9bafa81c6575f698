#include "eulerlab/rep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eulerlab {

using linalg::F2Vec;

CharF2 CharF2::from_coords(std::span<const int> coords) {
  if (coords.size() > 64) throw ResourceError("ranks above 64 are not supported");
  CharF2 c;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] != 0 && coords[j] != 1) throw InputError("character coordinates must be 0 or 1");
    if (coords[j] == 1) c.bits |= std::uint64_t{1} << j;
  }
  return c;
}

std::vector<int> CharF2::coords(int rank) const {
  std::vector<int> out(rank);
  for (int j = 0; j < rank; ++j) out[j] = static_cast<int>((bits >> j) & 1u);
  return out;
}

bool Weight::is_trivial() const {
  return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
}

Weight primitive(const Weight& w) {
  std::int64_t g = 0;
  for (auto x : w.coords) g = std::gcd(g, x);
  if (g == 0) return w;
  Weight p = w;
  for (auto& x : p.coords) x /= g;
  auto first = std::find_if(p.coords.begin(), p.coords.end(), [](auto x) { return x != 0; });
  if (*first < 0) {
    for (auto& x : p.coords) x = -x;
  }
  return p;
}

bool colex_less(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords.rbegin(), a.coords.rend(), b.coords.rbegin(),
                                      b.coords.rend());
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < w.coords.size(); ++j) os << (j ? "," : "") << w.coords[j];
  os << ')';
  return os.str();
}

std::string to_string(CharF2 c, int rank) {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < rank; ++j) os << ((c.bits >> j) & 1u);
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// FlagE

FlagE::FlagE(int rank, std::vector<CharF2> dual_basis) : rank_(rank), basis_(std::move(dual_basis)) {
  if (rank < 1) throw InputError("group rank must be at least 1");
  if (static_cast<int>(basis_.size()) != rank) {
    throw InputError("flag needs exactly " + std::to_string(rank) + " dual basis vectors");
  }
  for (auto c : basis_) {
    if (!c.fits(rank)) throw InputError("flag covector does not match group rank");
    raw_.push_back(c.bits);
  }
  if (linalg::f2_rank(raw_) != rank) throw InputError("flag dual basis is not linearly independent");
}

FlagE FlagE::standard(int rank) {
  std::vector<CharF2> b;
  for (int j = 0; j < rank; ++j) b.push_back(CharF2{std::uint64_t{1} << j});
  return FlagE(rank, std::move(b));
}

FlagE FlagE::from_chain(int rank, const std::vector<std::vector<CharF2>>& spans) {
  if (static_cast<int>(spans.size()) != rank) throw InputError("flag chain must have rank steps");
  if (rank > 20) throw ResourceError("flag chains are limited to rank 20");
  std::vector<CharF2> basis;
  std::vector<F2Vec> prev;  // rref of E^{i-1}
  for (int i = 0; i < rank; ++i) {
    std::vector<F2Vec> gens;
    for (auto c : spans[i]) gens.push_back(c.bits);
    auto cur = linalg::f2_rref(gens);
    if (static_cast<int>(cur.size()) != i + 1) throw InputError("flag chain step has wrong dimension");
    for (F2Vec p : prev) {
      if (!linalg::f2_in_span(cur, p)) throw InputError("flag chain is not nested");
    }
    F2Vec best = 0;
    bool found = false;
    for (F2Vec e : linalg::f2_span_elements(cur)) {
      if (linalg::f2_in_span(prev, e)) continue;
      if (!found || e < best) best = e;
      found = true;
    }
    basis.push_back(CharF2{best});
    prev = std::move(cur);
  }
  return FlagE(rank, std::move(basis));
}

std::uint64_t FlagE::coordinates(CharF2 alpha) const {
  auto c = linalg::f2_coordinates(raw_, alpha.bits);
  if (!c) throw StructuralError("character outside the flag's group");
  return *c;
}

int FlagE::level(CharF2 alpha) const {
  const auto c = coordinates(alpha);
  return c == 0 ? 0 : 64 - __builtin_clzll(c);
}

// ---------------------------------------------------------------------------
// RationalFlag

RationalFlag::RationalFlag(int rank, std::vector<Weight> dual_basis) : rank_(rank) {
  if (rank < 1) throw InputError("torus rank must be at least 1");
  if (static_cast<int>(dual_basis.size()) != rank) {
    throw InputError("flag needs exactly " + std::to_string(rank) + " dual basis vectors");
  }
  linalg::QMat m;
  for (auto& w : dual_basis) {
    if (!w.fits(rank)) throw InputError("flag covector does not match torus rank");
    if (w.is_trivial()) throw InputError("flag covector is zero");
    basis_.push_back(primitive(w));
    linalg::QVec row;
    for (auto x : basis_.back().coords) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  auto inv = linalg::q_inverse(m);
  if (!inv) throw InputError("flag dual basis is not linearly independent");
  inverse_ = std::move(*inv);
}

RationalFlag RationalFlag::standard(int rank) {
  std::vector<Weight> b;
  for (int j = 0; j < rank; ++j) {
    Weight w{std::vector<std::int64_t>(rank, 0)};
    w.coords[j] = 1;
    b.push_back(std::move(w));
  }
  return RationalFlag(rank, std::move(b));
}

linalg::QVec RationalFlag::coordinates(const Weight& alpha) const {
  if (!alpha.fits(rank_)) throw StructuralError("weight does not match torus rank");
  // alpha = c * M with M rows T_j, so c = alpha * M^{-1}.
  linalg::QVec c(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    if (alpha.coords[i] == 0) continue;
    const mpq_class a(static_cast<long>(alpha.coords[i]));
    for (int j = 0; j < rank_; ++j) c[j] += a * inverse_[i][j];
  }
  return c;
}

int RationalFlag::level(const Weight& alpha) const {
  const auto c = coordinates(alpha);
  for (int j = rank_; j-- > 0;) {
    if (c[j] != 0) return j + 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(int rank, std::vector<F2Vec> generators) : rank_(rank) {
  if (rank < 0 || rank > 64) throw InputError("subgroup rank out of range");
  for (F2Vec g : generators) {
    if (rank < 64 && (g >> rank) != 0) throw InputError("subgroup generator does not match rank");
  }
  basis_ = linalg::f2_rref(std::move(generators));
}

Subgroup Subgroup::whole(int rank) {
  std::vector<F2Vec> gens;
  for (int j = 0; j < rank; ++j) gens.push_back(F2Vec{1} << j);
  return Subgroup(rank, std::move(gens));
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](F2Vec v) { return contains(v); });
}

bool Subgroup::annihilated_by(CharF2 alpha) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](F2Vec v) { return linalg::pairing(alpha.bits, v) == 0; });
}

// ---------------------------------------------------------------------------

Decomposition<RepE> decompose(const RepE& u, const FlagE& flag) {
  if (u.rank() != flag.rank()) throw StructuralError("flag rank does not match representation rank");
  Decomposition<RepE> d{RepE(u.rank()), std::vector<RepE>(flag.rank(), RepE(u.rank()))};
  for (const auto& [alpha, m] : u.entries()) {
    const int lvl = flag.level(alpha);
    (lvl == 0 ? d.fixed : d.parts[lvl - 1]).add(alpha, m);
  }
  return d;
}

Decomposition<RepT> decompose(const RepT& u, const RationalFlag& flag) {
  if (u.rank() != flag.rank()) throw StructuralError("flag rank does not match representation rank");
  Decomposition<RepT> d{RepT(u.rank()), std::vector<RepT>(flag.rank(), RepT(u.rank()))};
  for (const auto& [alpha, m] : u.entries()) {
    const int lvl = flag.level(alpha);
    (lvl == 0 ? d.fixed : d.parts[lvl - 1]).add(alpha, m);
  }
  return d;
}

std::vector<CharF2> annihilator_basis(const Subgroup& f) {
  std::vector<CharF2> out;
  for (F2Vec v : linalg::f2_annihilator(f.basis(), f.rank())) out.push_back(CharF2{v});
  return out;
}

RepE fixed_subrep(const RepE& u, const Subgroup& f) {
  if (u.rank() != f.rank()) throw StructuralError("subgroup rank does not match representation rank");
  const auto ann = annihilator_basis(f);
  std::vector<F2Vec> raw;
  for (auto c : ann) raw.push_back(c.bits);
  RepE out(static_cast<int>(ann.size()));
  for (const auto& [alpha, m] : u.entries()) {
    if (!f.annihilated_by(alpha)) continue;
    out.add(CharF2{*linalg::f2_coordinates(raw, alpha.bits)}, m);
  }
  return out;
}

Subgroup quotient_image(const Subgroup& larger, const Subgroup& f) {
  if (larger.rank() != f.rank()) throw StructuralError("subgroup ranks differ");
  if (!larger.contains(f)) throw InputError("quotient_image requires F <= F'");
  const auto ann = annihilator_basis(f);
  std::vector<F2Vec> gens;
  for (F2Vec v : larger.basis()) {
    F2Vec img = 0;
    for (std::size_t k = 0; k < ann.size(); ++k) {
      if (linalg::pairing(ann[k].bits, v)) img |= F2Vec{1} << k;
    }
    gens.push_back(img);
  }
  return Subgroup(static_cast<int>(ann.size()), std::move(gens));
}

CharF2 lift_character(CharF2 c, const std::vector<CharF2>& annihilator) {
  CharF2 out;
  for (std::size_t k = 0; k < annihilator.size(); ++k) {
    if ((c.bits >> k) & 1u) out = out + annihilator[k];
  }
  return out;
}

Poly euler_poly(const RepE& u, const FlagE& flag) {
  if (u.rank() != flag.rank()) throw StructuralError("flag rank does not match representation rank");
  const auto l = static_cast<std::size_t>(flag.rank());
  Poly e = Poly::constant(Field::F2, l, 1);
  for (const auto& [alpha, m] : u.entries()) {
    if (alpha.is_trivial()) {
      throw HypothesisFailure("euler class vanishes identically: trivial character has multiplicity " +
                              std::to_string(m));
    }
    const auto c = flag.coordinates(alpha);
    std::vector<mpq_class> coeffs(l, 0);
    for (std::size_t j = 0; j < l; ++j) coeffs[j] = static_cast<long>((c >> j) & 1u);
    e = e * Poly::linear_form(Field::F2, coeffs).pow(static_cast<unsigned>(m));
  }
  return e;
}

Poly euler_poly(const RepT& u, const RationalFlag& flag) {
  if (u.rank() != flag.rank()) throw StructuralError("flag rank does not match representation rank");
  const auto l = static_cast<std::size_t>(flag.rank());
  Poly e = Poly::constant(Field::Q, l, 1);
  for (const auto& [alpha, m] : u.entries()) {
    if (alpha.is_trivial()) {
      throw HypothesisFailure("euler class vanishes identically: trivial weight has multiplicity " +
                              std::to_string(m));
    }
    const auto c = flag.coordinates(alpha);
    e = e * Poly::linear_form(Field::Q, c).pow(static_cast<unsigned>(m));
  }
  return e;
}

}  // namespace eulerlab
