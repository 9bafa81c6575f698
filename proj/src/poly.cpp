#include "eulerlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eulerlab/errors.hpp"

namespace eulerlab {

std::string_view to_string(Field f) { return f == Field::F2 ? "F2" : "Q"; }

Field parse_field(std::string_view s) {
  if (s == "F2" || s == "f2") return Field::F2;
  if (s == "Q" || s == "q") return Field::Q;
  throw InputError("unknown field '" + std::string(s) + "' (expected F2 or Q)");
}

mpq_class normalize_coefficient(Field f, const mpq_class& c) {
  mpq_class r = c;
  r.canonicalize();
  if (f == Field::Q) return r;
  if (mpz_even_p(r.get_den_mpz_t())) {
    throw InputError("coefficient " + r.get_str() + " has no image in F2");
  }
  // den is odd, hence invertible mod 2 and equal to 1 there.
  return mpz_odd_p(r.get_num_mpz_t()) ? mpq_class(1) : mpq_class(0);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t j, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(j) = power;
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] += other.exps_[j];
  return r;
}

Monomial Monomial::divided_by_power(std::size_t j, std::uint32_t power) const {
  Monomial r = *this;
  r.exps_[j] -= power;
  return r;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t j = a.nvars(); j-- > 0;) {
    if (a[j] != b[j]) return a[j] < b[j];
  }
  return false;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return lex_less(a, b);
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(Field field, std::size_t nvars, const mpq_class& c) {
  Poly p(field, nvars);
  auto v = normalize_coefficient(field, c);
  if (v != 0) p.terms_.emplace(Monomial(nvars), v);
  return p;
}

Poly Poly::variable(Field field, std::size_t nvars, std::size_t j) {
  return monomial(field, Monomial::variable(nvars, j));
}

Poly Poly::monomial(Field field, const Monomial& m, const mpq_class& c) {
  Poly p(field, m.nvars());
  auto v = normalize_coefficient(field, c);
  if (v != 0) p.terms_.emplace(m, v);
  return p;
}

Poly Poly::linear_form(Field field, std::span<const mpq_class> coeffs) {
  Poly p(field, coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    auto v = normalize_coefficient(field, coeffs[j]);
    if (v != 0) p.terms_.emplace(Monomial::variable(coeffs.size(), j), v);
  }
  return p;
}

Poly Poly::from_terms(Field field, std::size_t nvars, Terms terms) {
  Poly p(field, nvars);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.nvars() != nvars) throw StructuralError("monomial variable count mismatch");
    it->second = normalize_coefficient(field, it->second);
    if (it->second == 0) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  p.terms_ = std::move(terms);
  return p;
}

mpq_class Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::uint32_t Poly::degree_in(std::size_t j) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[j]);
  return d;
}

std::size_t Poly::highest_variable() const {
  std::size_t h = 0;
  for (const auto& [m, c] : terms_) {
    for (std::size_t j = nvars_; j-- > h;) {
      if (m[j] != 0) {
        h = j + 1;
        break;
      }
    }
  }
  return h;
}

void Poly::check_compatible(const Poly& other) const {
  if (field_ != other.field_) throw StructuralError("polynomials over different fields");
  if (nvars_ != other.nvars_) {
    throw StructuralError("polynomials in " + std::to_string(nvars_) + " and " +
                          std::to_string(other.nvars_) + " variables");
  }
}

namespace {

void accumulate(Field field, Poly::Terms& terms, const Monomial& m, const mpq_class& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (field == Field::F2) it->second = normalize_coefficient(field, it->second);
  if (it->second == 0) terms.erase(it);
}

}  // namespace

Poly Poly::operator+(const Poly& other) const {
  check_compatible(other);
  Poly r = *this;
  for (const auto& [m, c] : other.terms_) accumulate(field_, r.terms_, m, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  if (field_ == Field::Q) {
    for (auto& [m, c] : r.terms_) c = -c;
  }
  return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  check_compatible(other);
  Poly r(field_, nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) accumulate(field_, r.terms_, ma * mb, ca * cb);
  }
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  auto v = normalize_coefficient(field_, c);
  if (v == 0) return Poly(field_, nvars_);
  Poly r = *this;
  if (v != 1) {
    for (auto& [m, coeff] : r.terms_) coeff *= v;
  }
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_, nvars_, 1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.degree() == 0 || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t j = 0; j < m.nvars(); ++j) {
      if (m[j] == 0) continue;
      if (wrote) os << '*';
      os << 'T' << (j + 1);
      if (m[j] > 1) os << '^' << m[j];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, Field field, std::size_t nvars)
      : text_(text), field_(field), nvars_(nvars) {}

  Poly parse() {
    Poly::Terms terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (!first) {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          sign = -1;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
        skip_ws();
      }
      // Unary signs in front of a term ("a + -3*T1", "-T1").
      while (!at_end() && (peek() == '-' || peek() == '+')) {
        if (peek() == '-') sign = -sign;
        ++pos_;
        skip_ws();
      }
      auto [m, c] = parse_term();
      accumulate(Field::Q, terms, m, c * sign);
      first = false;
    }
    return Poly::from_terms(field_, nvars_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  std::string read_digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  std::pair<Monomial, mpq_class> parse_term() {
    Monomial m(nvars_);
    mpq_class c = 1;
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        mpz_class num(read_digits());
        mpz_class den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          auto d = read_digits();
          if (d.empty()) fail("expected denominator");
          den = mpz_class(d);
          if (den == 0) fail("zero denominator");
        }
        mpq_class q(num, den);
        q.canonicalize();
        c *= q;
      } else if (ch == 'T' || ch == 't') {
        ++pos_;
        auto idx = read_digits();
        if (idx.empty()) fail("expected variable index");
        const auto j = std::stoul(idx);
        if (j == 0 || j > nvars_) {
          throw StructuralError("variable T" + idx + " outside T1..T" + std::to_string(nvars_));
        }
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          auto es = read_digits();
          if (es.empty()) fail("expected exponent");
          e = static_cast<std::uint32_t>(std::stoul(es));
        }
        m = m * Monomial::variable(nvars_, j - 1, e);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return {m, c};
    }
  }

  std::string_view text_;
  Field field_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, Field field, std::size_t nvars) {
  return PolyParser(text, field, nvars).parse();
}

Poly complete_homogeneous(Field field, std::size_t nvars, std::size_t first, std::size_t last,
                          std::uint32_t degree) {
  Poly::Terms terms;
  if (first == 0 || last > nvars || first > last) {
    throw StructuralError("complete_homogeneous: bad variable range");
  }
  // Enumerate exponent vectors on T_first..T_last summing to degree.
  const std::size_t k = last - first + 1;
  std::vector<std::uint32_t> exps(nvars, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
    const std::size_t var = first - 1 + pos;
    if (pos + 1 == k) {
      exps[var] = remaining;
      terms.emplace(Monomial(exps), 1);
      exps[var] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
      exps[var] = e;
      self(self, pos + 1, remaining - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, degree);
  return Poly::from_terms(field, nvars, std::move(terms));
}

// ---------------------------------------------------------------------------
// TriangularSystem

TriangularSystem::TriangularSystem(std::vector<Poly> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw StructuralError("triangular system needs at least one relation");
  field_ = generators_.front().field();
  const auto l = generators_.size();
  for (std::size_t j = 0; j < l; ++j) {
    const Poly& g = generators_[j];
    const std::string name = "g" + std::to_string(j + 1);
    if (g.field() != field_) throw StructuralError(name + " is over a different field");
    if (g.nvars() != l) {
      throw StructuralError(name + " has " + std::to_string(g.nvars()) + " variables, expected " +
                            std::to_string(l));
    }
    if (g.highest_variable() > j + 1) {
      throw StructuralError(name + " involves a variable beyond T" + std::to_string(j + 1));
    }
    const auto d = g.degree_in(j);
    if (d == 0) throw StructuralError(name + " has degree 0 in T" + std::to_string(j + 1));
    const Monomial lead = Monomial::variable(l, j, d);
    for (const auto& [m, c] : g.terms()) {
      if (m[j] == d && !(m == lead)) {
        throw StructuralError(name + ": coefficient of T" + std::to_string(j + 1) + "^" +
                              std::to_string(d) + " is not a constant");
      }
    }
    const auto lc = g.coefficient(lead);
    if (lc == 0) throw StructuralError(name + ": leading coefficient is not invertible");
    degrees_.push_back(d);
    leading_.push_back(lc);
  }
}

std::uint64_t TriangularSystem::quotient_dimension() const {
  std::uint64_t n = 1;
  for (auto d : degrees_) n *= d;
  return n;
}

namespace {

// terms -= (c / lc) * (m / T_j^d) * g
void eliminate(Field field, Poly::Terms& terms, const Monomial& m, const mpq_class& c,
               std::size_t j, const TriangularSystem& system) {
  const auto d = system.degrees()[j];
  const Monomial quotient = m.divided_by_power(j, d);
  mpq_class factor = c / system.leading_coefficient(j);
  for (const auto& [mg, cg] : system.generators()[j].terms()) {
    accumulate(field, terms, quotient * mg, -(factor * cg));
  }
}

}  // namespace

Poly reduce(const Poly& p, const TriangularSystem& system, ReductionOrder order) {
  if (p.field() != system.field()) throw StructuralError("polynomial and system over different fields");
  if (p.nvars() != system.nvars()) throw StructuralError("polynomial and system variable counts differ");
  const Field field = p.field();
  Poly::Terms terms = p.terms();
  const auto& degs = system.degrees();
  const auto l = system.nvars();

  if (order == ReductionOrder::HighestVariableFirst) {
    for (std::size_t j = l; j-- > 0;) {
      // Highest T_j-degree first: new terms have lower T_j-degree, so each
      // monomial is eliminated at most once.
      while (true) {
        auto it = terms.end();
        for (auto t = terms.begin(); t != terms.end(); ++t) {
          if (t->first[j] >= degs[j] && (it == terms.end() || t->first[j] > it->first[j])) it = t;
        }
        if (it == terms.end()) break;
        const Monomial m = it->first;
        const mpq_class c = it->second;
        eliminate(field, terms, m, c, j, system);
      }
    }
  } else {
    while (true) {
      const Monomial* best = nullptr;
      std::size_t best_j = 0;
      for (const auto& [m, c] : terms) {
        for (std::size_t j = 0; j < l; ++j) {
          if (m[j] >= degs[j]) {
            if (best == nullptr || lex_less(*best, m)) {
              best = &m;
              best_j = j;
            }
            break;
          }
        }
      }
      if (best == nullptr) break;
      const Monomial m = *best;
      const mpq_class c = terms.at(m);
      eliminate(field, terms, m, c, best_j, system);
    }
  }
  return Poly::from_terms(field, p.nvars(), std::move(terms));
}

std::vector<Monomial> quotient_basis(const TriangularSystem& system) {
  const auto& degs = system.degrees();
  const auto l = degs.size();
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(l, 0);
  while (true) {
    out.emplace_back(exps);
    std::size_t j = 0;
    while (j < l && ++exps[j] == degs[j]) exps[j++] = 0;
    if (j == l) break;
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Monomial> quotient_basis_in_degree(const TriangularSystem& system, std::uint32_t degree) {
  std::vector<Monomial> out;
  for (auto& m : quotient_basis(system)) {
    if (m.degree() == degree) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::uint64_t> hilbert_series(const TriangularSystem& system) {
  std::vector<std::uint64_t> series{1};
  for (auto d : system.degrees()) {
    std::vector<std::uint64_t> next(series.size() + d - 1, 0);
    for (std::size_t i = 0; i < series.size(); ++i) {
      for (std::uint32_t k = 0; k < d; ++k) next[i + k] += series[i];
    }
    series = std::move(next);
  }
  return series;
}

ZeroTest is_zero_in_quotient(const Poly& p, const TriangularSystem& system) {
  Poly r = reduce(p, system);
  const bool zero = r.is_zero();
  return {zero, std::move(r)};
}

}  // namespace eulerlab
