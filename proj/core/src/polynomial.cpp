#include "ncgeom/polynomial.hpp"

#include <algorithm>

#include "ncgeom/errors.hpp"

namespace ncgeom {

Polynomial Polynomial::constant(const GaussianRational& c, std::size_t nvars) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars) {
    throw DimensionMismatch("variable index " + std::to_string(index + 1) +
                            " exceeds variable count " + std::to_string(nvars));
  }
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(m, GaussianRational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const GaussianRational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.size() != nvars_) {
    throw DimensionMismatch("monomial arity does not match variable count");
  }
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

GaussianRational Polynomial::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_constant()) throw Error("constant_value() on nonconstant polynomial");
  return terms_.begin()->second;
}

const std::pair<const Monomial, GaussianRational>& Polynomial::lex_lead() const {
  if (terms_.empty()) throw Error("lex_lead() on zero polynomial");
  return *terms_.rbegin();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t t = 0;
    for (std::uint32_t e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

void Polynomial::check_same_space(const Polynomial& o) const {
  if (nvars_ != o.nvars_) {
    throw DimensionMismatch("polynomials live over different variable counts");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_space(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (std::size_t k = 0; k < a.nvars_; ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::scale(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = Polynomial::constant(GaussianRational(1), nvars_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) {
    throw DimensionMismatch("derivative index exceeds variable count");
  }
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * GaussianRational(BigInt(m[var])));
  }
  return out;
}

GaussianRational Polynomial::eval(const std::vector<GaussianRational>& point) const {
  if (point.size() != nvars_) {
    throw DimensionMismatch("evaluation point arity does not match variable count");
  }
  GaussianRational acc(0);
  for (const auto& [m, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (std::uint32_t e = 0; e < m[k]; ++e) term *= point[k];
    }
    acc += term;
  }
  return acc;
}

std::map<std::uint32_t, Polynomial> Polynomial::collect(std::size_t var) const {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t d = m[var];
    Monomial rest = m;
    rest[var] = 0;
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Polynomial(nvars_)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::assemble(std::size_t var,
                                const std::map<std::uint32_t, Polynomial>& coeffs,
                                std::size_t nvars) {
  Polynomial out(nvars);
  for (const auto& [d, p] : coeffs) {
    for (const auto& [m, c] : p.terms()) {
      Monomial full = m;
      full[var] += d;
      out.add_term(full, c);
    }
  }
  return out;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  Polynomial q(a.nvars());
  Polynomial r = a;
  const auto& [mb, cb] = b.lex_lead();
  while (!r.is_zero()) {
    const auto& [mr, cr] = r.lex_lead();
    Monomial m(r.nvars());
    for (std::size_t k = 0; k < r.nvars(); ++k) {
      if (mr[k] < mb[k]) throw Error("exact_div: not divisible");
      m[k] = mr[k] - mb[k];
    }
    Polynomial t = Polynomial::monomial(m, cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, std::size_t var) {
  if (b.is_zero()) throw DivisionByZero();
  std::uint32_t db = b.degree_in(var);
  auto b_coeffs = b.collect(var);
  const Polynomial& lcb = b_coeffs.at(db);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    std::uint32_t dr = r.degree_in(var);
    auto r_coeffs = r.collect(var);
    const Polynomial& lcr = r_coeffs.at(dr);
    // lcb * r - lcr * x^(dr-db) * b kills the degree-dr coefficient exactly.
    Monomial shift(r.nvars(), 0);
    shift[var] = dr - db;
    Polynomial step = lcb * r - lcr * Polynomial::monomial(shift, GaussianRational(1)) * b;
    r = std::move(step);
  }
  return r;
}

Polynomial content(const Polynomial& a, std::size_t var) {
  Polynomial g(a.nvars());
  for (const auto& [d, coeff] : a.collect(var)) {
    g = gcd(g, coeff);
    if (g.is_constant() && !g.is_zero()) break;  // unit content, done early
  }
  return g;
}

Polynomial primitive_part(const Polynomial& a, std::size_t var) {
  if (a.is_zero()) return a;
  return exact_div(a, content(a, var));
}

namespace {

// Highest variable index occurring with positive degree, or npos if constant.
std::size_t top_variable(const Polynomial& a, const Polynomial& b) {
  std::size_t n = a.nvars();
  for (std::size_t k = n; k > 0; --k) {
    if (a.degree_in(k - 1) > 0 || b.degree_in(k - 1) > 0) return k - 1;
  }
  return static_cast<std::size_t>(-1);
}

Polynomial make_monic(Polynomial p) {
  if (p.is_zero()) return p;
  GaussianRational lc = p.lex_lead().second;
  p.scale(lc.inverse());
  return p;
}

// Dense univariate gcd over Q(i) by monic Euclid; coefficient vectors are
// low-degree, ascending, no trailing zeros.
using UniPoly = std::vector<GaussianRational>;

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    GaussianRational q = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= q * b[k];
    uni_trim(a);
  }
  return a;
}

std::size_t uni_gcd_degree(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Specialise every variable except `var` at the integer point t+1, t+2, ...
// and read off the univariate coefficient vector in `var`.
UniPoly specialise(const Polynomial& p, std::size_t var, int offset) {
  std::vector<GaussianRational> point;
  point.reserve(p.nvars());
  for (std::size_t k = 0; k < p.nvars(); ++k) {
    point.emplace_back(BigInt(offset + static_cast<int>(k) + 1));
  }
  UniPoly out(p.degree_in(var) + 1, GaussianRational(0));
  for (const auto& [d, coeff] : p.collect(var)) {
    out[d] = coeff.eval(point);
  }
  uni_trim(out);
  return out;
}

// Exact shortcut for the dominant coprime case.  If some specialisation of
// the side variables keeps f's leading coefficient in `var` nonzero and makes
// the univariate images coprime, then any common divisor G of the primitive
// parts would have deg_var G = deg_var G(point) = 0 (its leading coefficient
// divides f's, hence survives), so the primitive parts are coprime.  A failed
// probe proves nothing and we fall back to the remainder sequence.
bool provably_coprime_in(const Polynomial& f, const Polynomial& g, std::size_t var) {
  std::uint32_t df = f.degree_in(var);
  auto lc = f.collect(var).at(df);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<GaussianRational> point;
    for (std::size_t k = 0; k < f.nvars(); ++k) {
      point.emplace_back(BigInt(attempt * static_cast<int>(f.nvars()) + static_cast<int>(k) + 1));
    }
    if (lc.eval(point).is_zero()) continue;
    UniPoly uf = specialise(f, var, attempt * static_cast<int>(f.nvars()));
    UniPoly ug = specialise(g, var, attempt * static_cast<int>(f.nvars()));
    if (ug.empty()) continue;
    if (uni_gcd_degree(std::move(uf), std::move(ug)) == 0) return true;
  }
  return false;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionMismatch("gcd over different variable counts");
  }
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);

  std::size_t var = top_variable(a, b);
  if (var == static_cast<std::size_t>(-1)) {
    // Both nonzero constants: coprime up to units.
    return Polynomial::constant(GaussianRational(1), a.nvars());
  }

  // Work in S[x_var] with S the ring in the remaining variables.  Contents
  // recurse on strictly smaller top variables, so this terminates.
  Polynomial ca = content(a, var);
  Polynomial cb = content(b, var);
  Polynomial c = gcd(ca, cb);
  Polynomial f = exact_div(a, ca);
  Polynomial g = exact_div(b, cb);

  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  if (g.degree_in(var) > 0 && provably_coprime_in(f, g, var)) {
    return make_monic(c);
  }
  Polynomial result(a.nvars());
  while (true) {
    if (g.is_zero()) {
      result = primitive_part(f, var);
      break;
    }
    if (g.degree_in(var) == 0) {
      // Primitive and degree zero in the main variable: a unit.
      result = Polynomial::constant(GaussianRational(1), a.nvars());
      break;
    }
    Polynomial r = pseudo_rem(f, g, var);
    f = std::move(g);
    g = r.is_zero() ? r : primitive_part(r, var);
  }
  return make_monic(c * result);
}

namespace {

bool display_negative(const GaussianRational& c) {
  if (c.is_real()) return c.re() < 0;
  return c.re() == 0 && c.im() < 0;
}

std::string monomial_string(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(k + 1);
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

std::string term_string(const GaussianRational& c, const Monomial& m) {
  std::string mono = monomial_string(m);
  if (mono.empty()) return c.to_string();
  if (c.is_one()) return mono;
  return c.to_string() + "*" + mono;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = display_negative(c);
    GaussianRational shown = neg ? -c : c;
    if (out.empty()) {
      out = (neg ? "-" : "") + term_string(shown, m);
    } else {
      out += (neg ? " - " : " + ") + term_string(shown, m);
    }
  }
  return out;
}

}  // namespace ncgeom
