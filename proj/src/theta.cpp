#include "sgdops/theta.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sgdops/cone.hpp"

namespace sgdops {

bool MonOrder::less(const Monomial& a, const Monomial& b) const {
  size_t start = 0;
  if (elim0) {
    if (a[0] != b[0]) return a[0] < b[0];
    start = 1;
  }
  int da = 0, db = 0;
  for (size_t i = start; i < a.size(); ++i) da += a[i];
  for (size_t i = start; i < b.size(); ++i) db += b[i];
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > start;) {
    if (a[i] != b[i]) return a[i] > b[i];  // grevlex: larger tail exponent loses
  }
  return false;
}

ThetaPoly ThetaPoly::constant(int nvars, const Rat& c) {
  ThetaPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

ThetaPoly ThetaPoly::variable(int nvars, int i) {
  ThetaPoly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

bool ThetaPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

int ThetaPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

void ThetaPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
  ThetaPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
  ThetaPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
  ThetaPoly r(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

ThetaPoly ThetaPoly::operator*(const Rat& c) const {
  ThetaPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

ThetaPoly ThetaPoly::operator-() const { return *this * Rat(-1); }

Rat ThetaPoly::eval(const Vec& point) const {
  std::vector<Rat> q(point.size());
  for (size_t i = 0; i < point.size(); ++i) q[i] = rat_of(point[i]);
  return eval(q);
}

Rat ThetaPoly::eval(const std::vector<Rat>& point) const {
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

Monomial ThetaPoly::leading_monomial(const MonOrder& ord) const {
  auto it = terms_.begin();
  Monomial best = it->first;
  for (++it; it != terms_.end(); ++it)
    if (ord.less(best, it->first)) best = it->first;
  return best;
}

ThetaPoly ThetaPoly::lift_front() const {
  ThetaPoly r(nvars_ + 1);
  for (const auto& [m, c] : terms_) {
    Monomial lm(nvars_ + 1, 0);
    for (int i = 0; i < nvars_; ++i) lm[i + 1] = m[i];
    r.terms_.emplace(lm, c);
  }
  return r;
}

ThetaPoly ThetaPoly::drop_front() const {
  ThetaPoly r(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[0] != 0) throw ComputationError("drop_front on polynomial involving the front variable");
    Monomial dm(m.begin() + 1, m.end());
    r.terms_.emplace(dm, c);
  }
  return r;
}

Rat LinearForm::eval(const std::vector<Rat>& p) const {
  Rat s = rat_of(shift);
  for (size_t i = 0; i < coeffs.size(); ++i) s += rat_of(coeffs[i]) * p[i];
  return s;
}

ThetaPoly LinearForm::to_poly(int nvars) const {
  ThetaPoly p(nvars);
  for (int i = 0; i < nvars; ++i)
    if (coeffs[i] != 0) {
      Monomial m(nvars, 0);
      m[i] = 1;
      p.add_term(m, rat_of(coeffs[i]));
    }
  if (shift != 0) p.add_term(Monomial(nvars, 0), rat_of(shift));
  return p;
}

LinearForm LinearForm::primitive_form(Rat& scale) const {
  long long g = content(coeffs);
  g = gcd_ll(g, shift);
  if (g == 0) {
    scale = 1;
    return *this;
  }
  long long lead = 0;
  for (long long c : coeffs)
    if (c != 0) {
      lead = c;
      break;
    }
  if (lead == 0) lead = shift;
  long long s = (lead < 0) ? -g : g;
  LinearForm out;
  out.coeffs.resize(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] = coeffs[i] / s;
  out.shift = shift / s;
  scale = rat_of(s);
  return out;
}

void FactoredGenerator::canonicalize() {
  std::vector<LinearForm> out;
  for (const LinearForm& f : factors) {
    Rat sc;
    LinearForm p = f.primitive_form(sc);
    if (p.is_constant()) {
      // constant factor folds into the scalar
      scalar *= rat_of(p.shift) * sc;
      continue;
    }
    scalar *= sc;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  factors = std::move(out);
}

ThetaPoly FactoredGenerator::expand(int nvars) const {
  ThetaPoly p = ThetaPoly::constant(nvars, scalar);
  for (const LinearForm& f : factors) p = p * f.to_poly(nvars);
  return p;
}

Rat FactoredGenerator::eval(const Vec& p) const {
  Rat v = scalar;
  for (const LinearForm& f : factors) {
    v *= f.eval(p);
    if (v == 0) return v;
  }
  return v;
}

FactoredGenerator FactoredGenerator::times(const FactoredGenerator& o) const {
  FactoredGenerator r;
  r.scalar = scalar * o.scalar;
  r.factors = factors;
  r.factors.insert(r.factors.end(), o.factors.begin(), o.factors.end());
  std::sort(r.factors.begin(), r.factors.end());
  return r;
}

FactoredGenerator descending_factorial(const LinearForm& h, long long n) {
  FactoredGenerator g;
  for (long long i = 0; i <= n; ++i) g.push(h.offset(-i));
  g.canonicalize();
  return g;
}

std::vector<LinearForm> multiset_gcd(const std::vector<LinearForm>& a,
                                     const std::vector<LinearForm>& b) {
  std::vector<LinearForm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<LinearForm> multiset_sub(const std::vector<LinearForm>& a,
                                     const std::vector<LinearForm>& b) {
  std::vector<LinearForm> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<LinearForm> multiset_union_max(const std::vector<LinearForm>& a,
                                           const std::vector<LinearForm>& b) {
  std::vector<LinearForm> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const Rat& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "theta" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

// Match c.theta against a facet support function; returns "h<i+1>".
std::optional<std::string> facet_name(const Vec& coeffs, const ConeData* cone) {
  if (!cone) return std::nullopt;
  int idx = cone->facet_index_of(coeffs);
  if (idx < 0) return std::nullopt;
  return "h" + std::to_string(idx + 1);
}

std::string affine_str(const std::string& base, long long shift) {
  if (shift == 0) return base;
  if (shift > 0) return base + "+" + std::to_string(shift);
  return base + "-" + std::to_string(-shift);
}

}  // namespace

std::string poly_to_string(const ThetaPoly& p, const ConeData*) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> terms(p.terms().begin(), p.terms().end());
  MonOrder ord;
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  std::string s;
  for (const auto& [m, c] : terms) {
    Rat ac = c < 0 ? Rat(-c) : c;
    std::string mono = monomial_str(m);
    std::string piece;
    if (mono.empty())
      piece = rat_str(ac);
    else if (ac == 1)
      piece = mono;
    else
      piece = rat_str(ac) + "*" + mono;
    if (s.empty())
      s = (c < 0 ? "-" : "") + piece;
    else
      s += (c < 0 ? " - " : " + ") + piece;
  }
  return s;
}

std::string linear_form_to_string(const LinearForm& f, int nvars, const ConeData* cone) {
  if (auto hn = facet_name(f.coeffs, cone)) return affine_str(*hn, f.shift);
  return poly_to_string(f.to_poly(nvars), cone);
}

std::string factored_to_string(const FactoredGenerator& g, int nvars, const ConeData* cone) {
  if (g.factors.empty()) return rat_str(g.scalar);
  // Group equal-direction factors into descending-factorial runs.
  std::map<Vec, std::vector<long long>> by_dir;
  for (const LinearForm& f : g.factors) by_dir[f.coeffs].push_back(f.shift);
  std::vector<std::string> pieces;
  if (g.scalar != 1) pieces.push_back(rat_str(g.scalar));
  for (auto& [dir, shifts] : by_dir) {
    std::sort(shifts.begin(), shifts.end(), std::greater<long long>());
    size_t i = 0;
    while (i < shifts.size()) {
      size_t j = i;
      while (j + 1 < shifts.size() && shifts[j + 1] == shifts[j] - 1) ++j;
      long long run = static_cast<long long>(j - i);
      LinearForm top(dir, shifts[i]);
      std::string base = linear_form_to_string(top, nvars, cone);
      if (run == 0) {
        bool atomic = base.find_first_of("+- ") == std::string::npos;
        pieces.push_back(atomic ? base : "(" + base + ")");
      } else {
        pieces.push_back("df(" + base + "," + std::to_string(run) + ")");
      }
      i = j + 1;
    }
  }
  std::string s;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i) s += "*";
    s += pieces[i];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  int nvars;
  const ConeData* cone;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long parse_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  }

  ThetaPoly parse_expr() {
    ThetaPoly p = parse_term();
    while (true) {
      skip_ws();
      if (eat('+'))
        p = p + parse_term();
      else if (eat('-'))
        p = p - parse_term();
      else
        return p;
    }
  }

  ThetaPoly parse_term() {
    ThetaPoly p = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        p = p * parse_factor();
      } else {
        // implicit multiplication before '(' or an identifier
        if (pos < text.size() &&
            (text[pos] == '(' || std::isalpha(static_cast<unsigned char>(text[pos]))))
          p = p * parse_factor();
        else
          return p;
      }
    }
  }

  ThetaPoly parse_factor() {
    ThetaPoly base = parse_primary();
    skip_ws();
    if (eat('^')) {
      long long e = parse_integer();
      if (e < 0) fail("negative exponent");
      ThetaPoly r = ThetaPoly::constant(nvars, Rat(1));
      for (long long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  ThetaPoly parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      ThetaPoly p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos;
      return -parse_primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = parse_integer();
      if (eat('/')) {
        long long den = parse_integer();
        if (den == 0) fail("zero denominator");
        Rat q(int_of(num), int_of(den));
        q.canonicalize();
        return ThetaPoly::constant(nvars, q);
      }
      return ThetaPoly::constant(nvars, rat_of(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string word = text.substr(start, pos - start);
      if (word == "df") {
        if (!eat('(')) fail("expected '(' after df");
        ThetaPoly alpha = parse_expr();
        if (!eat(',')) fail("expected ',' in df");
        long long n = parse_integer();
        if (!eat(')')) fail("expected ')' after df");
        ThetaPoly r = ThetaPoly::constant(nvars, Rat(1));
        for (long long i = 0; i <= n; ++i) r = r * (alpha - ThetaPoly::constant(nvars, rat_of(i)));
        return r;
      }
      long long idx = parse_integer();
      if (word == "theta") {
        if (idx < 1 || idx > nvars) fail("theta index out of range");
        return ThetaPoly::variable(nvars, static_cast<int>(idx - 1));
      }
      if (word == "h") {
        if (!cone) fail("h-variables need a cone context");
        if (idx < 1 || idx > cone->num_facets()) fail("facet index out of range");
        return LinearForm(cone->facet(static_cast<int>(idx - 1)).normal, 0).to_poly(nvars);
      }
      fail("unknown identifier '" + word + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

ThetaPoly parse_poly(const std::string& text, int nvars, const ConeData* cone) {
  Parser p{text, 0, nvars, cone};
  ThetaPoly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace sgdops
