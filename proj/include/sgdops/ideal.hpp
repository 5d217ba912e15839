#ifndef SGDOPS_IDEAL_HPP
#define SGDOPS_IDEAL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "sgdops/theta.hpp"

namespace sgdops {

struct IdealGen {
  ThetaPoly poly;
  std::optional<FactoredGenerator> factored;
};

// Finitely generated ideal of Q[theta_1..theta_n] with a cached reduced
// Groebner basis (grevlex). Generators keep their factored provenance when
// available; ideal comparisons cancel common factored content first.
class ThetaIdeal {
 public:
  ThetaIdeal() = default;
  explicit ThetaIdeal(int nvars) : nvars_(nvars) {}

  static ThetaIdeal zero(int nvars) { return ThetaIdeal(nvars); }
  static ThetaIdeal unit(int nvars);
  static ThetaIdeal principal(int nvars, FactoredGenerator g);

  int nvars() const { return nvars_; }
  const std::vector<IdealGen>& generators() const { return gens_; }
  void add_generator(ThetaPoly p);
  void add_generator(FactoredGenerator g);

  // Reduced monic Groebner basis under grevlex; unique per ideal, computed
  // once and cached (callers must serialize the first computation).
  const std::vector<ThetaPoly>& groebner() const;

  bool is_zero_ideal() const;
  bool is_unit() const;
  bool contains(const ThetaPoly& f) const;
  bool contains(const ThetaIdeal& other) const;

  // Largest factored multiset dividing every generator, when all generators
  // carry factored forms; nullopt otherwise.
  std::optional<std::vector<LinearForm>> common_factored_content() const;
  // The ideal with the given content multiset cancelled from every generator.
  ThetaIdeal cancel_content(const std::vector<LinearForm>& content) const;

 private:
  int nvars_ = 0;
  std::vector<IdealGen> gens_;
  mutable std::shared_ptr<std::vector<ThetaPoly>> gb_;
};

// Normal form of f modulo a Groebner basis (full reduction).
ThetaPoly normal_form(const ThetaPoly& f, const std::vector<ThetaPoly>& basis,
                      const MonOrder& ord);

// Buchberger with the coprime-lcm and chain criteria; output reduced + monic,
// sorted descending by leading monomial (deterministic).
std::vector<ThetaPoly> buchberger(std::vector<ThetaPoly> gens, const MonOrder& ord);

bool ideal_equal(const ThetaIdeal& a, const ThetaIdeal& b);
ThetaIdeal ideal_sum(const ThetaIdeal& a, const ThetaIdeal& b);

// Intersection via the auxiliary-variable elimination t*I + (1-t)*J.
ThetaIdeal ideal_intersection(const ThetaIdeal& a, const ThetaIdeal& b);

// Vanishing ideal of an affine flat given by a base point and integer
// direction basis: generated by codim-many primitive linear forms.
ThetaIdeal vanishing_ideal_of_stratum(const Vec& base, const std::vector<Vec>& directions);
std::vector<LinearForm> stratum_linear_forms(const Vec& base, const std::vector<Vec>& directions);

}  // namespace sgdops

#endif
