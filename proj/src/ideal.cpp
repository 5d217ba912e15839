#include "sgdops/ideal.hpp"

#include "sgdops/intmat.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace sgdops {

namespace {

using Term = std::pair<Monomial, Rat>;

// Polynomial as a term vector sorted descending under the active order.
struct OPoly {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().first; }
  const Rat& lc() const { return t.front().second; }
};

OPoly to_opoly(const ThetaPoly& p, const MonOrder& ord) {
  OPoly o;
  o.t.assign(p.terms().begin(), p.terms().end());
  std::sort(o.t.begin(), o.t.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
  return o;
}

ThetaPoly from_opoly(const OPoly& o, int nvars) {
  ThetaPoly p(nvars);
  for (const Term& t : o.t) p.add_term(t.first, t.second);
  return p;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

// f -= c * x^q * g, both sorted descending; classic merge.
OPoly sub_scaled(const OPoly& f, const Rat& c, const Monomial& q, const OPoly& g,
                 const MonOrder& ord) {
  OPoly r;
  r.t.reserve(f.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < f.t.size() || j < g.t.size()) {
    if (j >= g.t.size()) {
      r.t.push_back(f.t[i++]);
      continue;
    }
    Monomial gm = mono_mul(g.t[j].first, q);
    if (i >= f.t.size()) {
      r.t.emplace_back(std::move(gm), -c * g.t[j].second);
      ++j;
      continue;
    }
    if (f.t[i].first == gm) {
      Rat v = f.t[i].second - c * g.t[j].second;
      if (v != 0) r.t.emplace_back(f.t[i].first, std::move(v));
      ++i;
      ++j;
    } else if (ord.greater(f.t[i].first, gm)) {
      r.t.push_back(f.t[i++]);
    } else {
      r.t.emplace_back(std::move(gm), -c * g.t[j].second);
      ++j;
    }
  }
  return r;
}

OPoly normal_form_op(OPoly f, const std::vector<OPoly>& basis, const MonOrder& ord) {
  OPoly rem;
  while (!f.zero()) {
    bool reduced = false;
    for (const OPoly& g : basis) {
      if (g.zero()) continue;
      if (divides(g.lm(), f.lm())) {
        Rat c = f.lc() / g.lc();
        f = sub_scaled(f, c, mono_div(f.lm(), g.lm()), g, ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.t.push_back(f.t.front());
      f.t.erase(f.t.begin());
    }
  }
  return rem;
}

std::vector<OPoly> buchberger_op(std::vector<OPoly> g, const MonOrder& ord) {
  g.erase(std::remove_if(g.begin(), g.end(), [](const OPoly& p) { return p.zero(); }), g.end());

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  auto make_pair = [&](size_t i, size_t j) {
    return Pair{i, j, mono_lcm(g[i].lm(), g[j].lm())};
  };
  std::list<Pair> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.push_back(make_pair(i, j));

  auto pending = [&](size_t a, size_t b) {
    for (const Pair& p : pairs)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  while (!pairs.empty()) {
    // normal strategy: smallest lcm first
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (ord.less(it->lcm, best->lcm)) best = it;
    Pair p = *best;
    pairs.erase(best);

    if (p.lcm == mono_mul(g[p.i].lm(), g[p.j].lm())) continue;  // coprime criterion
    bool chained = false;
    for (size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(g[k].lm(), p.lcm) && !pending(p.i, k) && !pending(p.j, k)) chained = true;
    }
    if (chained) continue;

    OPoly s = sub_scaled(
        sub_scaled(OPoly{}, Rat(-1) / g[p.i].lc(), mono_div(p.lcm, g[p.i].lm()), g[p.i], ord),
        Rat(1) / g[p.j].lc(), mono_div(p.lcm, g[p.j].lm()), g[p.j], ord);
    OPoly r = normal_form_op(std::move(s), g, ord);
    if (!r.zero()) {
      g.push_back(std::move(r));
      for (size_t i = 0; i + 1 < g.size(); ++i) pairs.push_back(make_pair(i, g.size() - 1));
    }
  }

  // minimalize: drop polys whose leading monomial another one divides
  std::vector<OPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(g[j].lm(), g[i].lm())) {
        if (g[j].lm() == g[i].lm())
          redundant = j < i;  // keep the earliest among equal leads
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // fully reduce each element by the others; make monic
  std::vector<OPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    OPoly r = normal_form_op(minimal[i], others, ord);
    if (r.zero()) continue;
    Rat inv = Rat(1) / r.lc();
    for (Term& t : r.t) t.second *= inv;
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OPoly& a, const OPoly& b) { return ord.greater(a.lm(), b.lm()); });
  return reduced;
}

}  // namespace

ThetaPoly normal_form(const ThetaPoly& f, const std::vector<ThetaPoly>& basis,
                      const MonOrder& ord) {
  std::vector<OPoly> b;
  for (const ThetaPoly& g : basis) b.push_back(to_opoly(g, ord));
  return from_opoly(normal_form_op(to_opoly(f, ord), b, ord), f.nvars());
}

std::vector<ThetaPoly> buchberger(std::vector<ThetaPoly> gens, const MonOrder& ord) {
  if (gens.empty()) return {};
  int nvars = gens.front().nvars();
  std::vector<OPoly> g;
  for (const ThetaPoly& p : gens)
    if (!p.is_zero()) g.push_back(to_opoly(p, ord));
  std::vector<OPoly> basis = buchberger_op(std::move(g), ord);
  std::vector<ThetaPoly> out;
  for (const OPoly& p : basis) out.push_back(from_opoly(p, nvars));
  return out;
}

ThetaIdeal ThetaIdeal::unit(int nvars) {
  ThetaIdeal i(nvars);
  FactoredGenerator one;
  i.add_generator(one);
  return i;
}

ThetaIdeal ThetaIdeal::principal(int nvars, FactoredGenerator g) {
  ThetaIdeal i(nvars);
  i.add_generator(std::move(g));
  return i;
}

void ThetaIdeal::add_generator(ThetaPoly p) {
  gb_.reset();
  if (p.is_zero()) return;
  gens_.push_back(IdealGen{std::move(p), std::nullopt});
}

void ThetaIdeal::add_generator(FactoredGenerator g) {
  gb_.reset();
  g.canonicalize();
  if (g.scalar == 0) return;
  ThetaPoly p = g.expand(nvars_);
  gens_.push_back(IdealGen{std::move(p), std::move(g)});
}

const std::vector<ThetaPoly>& ThetaIdeal::groebner() const {
  if (!gb_) {
    std::vector<ThetaPoly> gens;
    for (const IdealGen& g : gens_) gens.push_back(g.poly);
    MonOrder ord;
    if (gens.empty())
      gb_ = std::make_shared<std::vector<ThetaPoly>>();
    else
      gb_ = std::make_shared<std::vector<ThetaPoly>>(buchberger(std::move(gens), ord));
  }
  return *gb_;
}

bool ThetaIdeal::is_zero_ideal() const { return groebner().empty(); }

bool ThetaIdeal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool ThetaIdeal::contains(const ThetaPoly& f) const {
  if (f.is_zero()) return true;
  MonOrder ord;
  return normal_form(f, groebner(), ord).is_zero();
}

bool ThetaIdeal::contains(const ThetaIdeal& other) const {
  for (const IdealGen& g : other.gens_)
    if (!contains(g.poly)) return false;
  return true;
}

std::optional<std::vector<LinearForm>> ThetaIdeal::common_factored_content() const {
  if (gens_.empty()) return std::nullopt;
  std::optional<std::vector<LinearForm>> content;
  for (const IdealGen& g : gens_) {
    if (!g.factored) return std::nullopt;
    if (!content)
      content = g.factored->factors;
    else
      content = multiset_gcd(*content, g.factored->factors);
  }
  return content;
}

ThetaIdeal ThetaIdeal::cancel_content(const std::vector<LinearForm>& content) const {
  ThetaIdeal out(nvars_);
  for (const IdealGen& g : gens_) {
    if (!g.factored) throw ComputationError("cancel_content needs factored generators");
    FactoredGenerator f;
    f.scalar = g.factored->scalar;
    f.factors = multiset_sub(g.factored->factors, content);
    out.add_generator(std::move(f));
  }
  return out;
}

bool ideal_equal(const ThetaIdeal& a, const ThetaIdeal& b) {
  auto ca = a.common_factored_content();
  auto cb = b.common_factored_content();
  if (ca && cb) {
    std::vector<LinearForm> common = multiset_gcd(*ca, *cb);
    if (!common.empty())
      return a.cancel_content(common).groebner() == b.cancel_content(common).groebner();
  }
  return a.groebner() == b.groebner();
}

ThetaIdeal ideal_sum(const ThetaIdeal& a, const ThetaIdeal& b) {
  ThetaIdeal out(a.nvars());
  for (const IdealGen& g : a.generators()) {
    if (g.factored)
      out.add_generator(*g.factored);
    else
      out.add_generator(g.poly);
  }
  for (const IdealGen& g : b.generators()) {
    if (g.factored)
      out.add_generator(*g.factored);
    else
      out.add_generator(g.poly);
  }
  return out;
}

ThetaIdeal ideal_intersection(const ThetaIdeal& a, const ThetaIdeal& b) {
  if (a.is_zero_ideal() || b.is_zero_ideal()) return ThetaIdeal::zero(a.nvars());

  // Principal factored inputs: the intersection is the least common multiple.
  if (a.generators().size() == 1 && b.generators().size() == 1 &&
      a.generators()[0].factored && b.generators()[0].factored) {
    const FactoredGenerator& fa = *a.generators()[0].factored;
    const FactoredGenerator& fb = *b.generators()[0].factored;
    FactoredGenerator lcm;
    lcm.factors = multiset_union_max(fa.factors, fb.factors);
    return ThetaIdeal::principal(a.nvars(), std::move(lcm));
  }

  // General case: eliminate t from t*I + (1-t)*J.
  int n = a.nvars();
  MonOrder ord{true};
  std::vector<ThetaPoly> gens;
  ThetaPoly t = ThetaPoly::variable(n + 1, 0);
  ThetaPoly one_minus_t = ThetaPoly::constant(n + 1, Rat(1)) - t;
  for (const IdealGen& g : a.generators()) gens.push_back(t * g.poly.lift_front());
  for (const IdealGen& g : b.generators()) gens.push_back(one_minus_t * g.poly.lift_front());
  std::vector<ThetaPoly> gb = buchberger(std::move(gens), ord);
  ThetaIdeal out(n);
  for (const ThetaPoly& p : gb) {
    bool aux_free = true;
    for (const auto& [m, c] : p.terms())
      if (m[0] != 0) aux_free = false;
    if (aux_free) out.add_generator(p.drop_front());
  }
  return out;
}

std::vector<LinearForm> stratum_linear_forms(const Vec& base, const std::vector<Vec>& directions) {
  int k = static_cast<int>(base.size());
  std::vector<Vec> kernel = integer_kernel_basis(directions, k);
  std::vector<LinearForm> forms;
  for (const Vec& w : kernel) {
    LinearForm f(w, -dot(w, base));
    Rat sc;
    forms.push_back(f.primitive_form(sc));
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

ThetaIdeal vanishing_ideal_of_stratum(const Vec& base, const std::vector<Vec>& directions) {
  int k = static_cast<int>(base.size());
  ThetaIdeal ideal(k);
  for (const LinearForm& f : stratum_linear_forms(base, directions)) {
    FactoredGenerator g;
    g.push(f);
    ideal.add_generator(std::move(g));
  }
  return ideal;
}

}  // namespace sgdops
