#include "sgdops/render.hpp"

#include <sstream>

namespace sgdops {

namespace {

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

nlohmann::json vec_json(const Vec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

std::string facet_poly_str(const SupportFunction& h, int) {
  std::string s;
  for (size_t i = 0; i < h.normal.size(); ++i) {
    long long c = h.normal[i];
    if (c == 0) continue;
    std::string var = "theta" + std::to_string(i + 1);
    if (s.empty()) {
      if (c == 1)
        s = var;
      else if (c == -1)
        s = "-" + var;
      else
        s = std::to_string(c) + "*" + var;
    } else {
      s += (c > 0 ? " + " : " - ");
      long long a = c > 0 ? c : -c;
      s += (a == 1 ? var : std::to_string(a) + "*" + var);
    }
  }
  return s;
}

}  // namespace

std::string analyze_report(const RingSession& session, const Box& probe_window) {
  const SemigroupData& sg = *session.sg;
  const ConeData& cone = sg.cone();
  std::ostringstream os;
  os << "ring: " << (session.config.name.empty() ? "(unnamed)" : session.config.name) << "\n";
  os << "k = " << cone.dim() << ", l = " << cone.matrix().cols() << "\n";
  os << "generators:";
  for (const Vec& g : sg.generators()) os << " " << vec_str(g);
  os << "\n";
  os << "facets (" << cone.num_facets() << "):\n";
  for (const auto& h : cone.facets())
    os << "  h" << (h.facet_index + 1) << " = " << facet_poly_str(h, cone.dim()) << "\n";
  os << "face lattice:\n";
  for (const Face& f : cone.face_lattice()) {
    os << "  dim " << f.dim << ": facets {";
    bool first = true;
    for (int i : f.facet_set) {
      os << (first ? "" : ",") << (i + 1);
      first = false;
    }
    os << "}\n";
  }
  SemigroupData::Classification cls = sg.classify(probe_window);
  os << "normal = " << (cls.normal ? "true" : "false")
     << ", scored = " << (cls.scored ? "true" : "false") << "\n";
  if (!sg.hole_sections().empty()) {
    os << "hole sections:";
    for (const auto& [i, c] : sg.hole_sections()) os << " {h" << (i + 1) << "=" << c << "}";
    os << "\n";
  }
  if (!sg.isolated_holes().empty()) {
    os << "isolated holes:";
    for (const Vec& p : sg.isolated_holes()) os << " " << vec_str(p);
    os << "\n";
  }
  RadicalMonomialIdeal omega = interior_ideal(sg);
  const std::vector<Vec>& gens = omega.minimal_generators();
  os << "interior ideal generators:";
  for (const Vec& g : gens) os << " " << vec_str(g);
  os << "\n";
  os << "omega principal = " << (gens.size() == 1 ? "true" : "false") << "\n";
  GorensteinProbe probe = gorenstein_probe(sg, probe_window);
  os << "gorenstein probe: omega_principal = " << (probe.omega_principal ? "true" : "false")
     << ", jd_equals_drj_on_window = "
     << (probe.jd_equals_drj_on_window ? "true" : "false")
     << (probe.omega_principal == probe.jd_equals_drj_on_window ? " (flags agree)"
                                                                : " (flags disagree)")
     << "\n";
  if (!session.config.interior && session.ideal) {
    os << "configured ideal faces:";
    for (const Face& f : session.ideal->faces()) {
      os << " {";
      bool first = true;
      for (int i : f.facet_set) {
        os << (first ? "" : ",") << (i + 1);
        first = false;
      }
      os << "}";
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json piece_to_json(const GradedPiece& piece, const ConeData& cone) {
  nlohmann::json rec;
  rec["degree"] = vec_json(piece.degree);
  rec["which"] = piece_kind_name(piece.which);
  nlohmann::json fac = nlohmann::json::array();
  nlohmann::json expd = nlohmann::json::array();
  for (const IdealGen& g : piece.ideal.generators()) {
    if (g.factored)
      fac.push_back(factored_to_string(*g.factored, cone.dim(), &cone));
    else
      fac.push_back(nullptr);
    expd.push_back(poly_to_string(g.poly, &cone));
  }
  rec["generators_factored"] = fac;
  rec["generators_expanded"] = expd;
  nlohmann::json gb = nlohmann::json::array();
  for (const ThetaPoly& p : piece.ideal.groebner()) gb.push_back(poly_to_string(p, &cone));
  rec["groebner"] = gb;
  return rec;
}

nlohmann::json quotient_to_json(const QuotientPiece& q, const ConeData& cone) {
  nlohmann::json rec;
  rec["degree"] = vec_json(q.degree);
  rec["which"] = "QUOT";
  auto dump = [&](const ThetaIdeal& ideal) {
    nlohmann::json a = nlohmann::json::array();
    for (const IdealGen& g : ideal.generators()) {
      if (g.factored)
        a.push_back(factored_to_string(*g.factored, cone.dim(), &cone));
      else
        a.push_back(poly_to_string(g.poly, &cone));
    }
    return a;
  };
  rec["numerator"] = dump(q.numerator);
  rec["denominator"] = dump(q.denominator);
  rec["is_zero"] = q.is_zero;
  return rec;
}

ThetaIdeal ideal_from_json(const nlohmann::json& record, int nvars, const ConeData* cone) {
  ThetaIdeal ideal(nvars);
  for (const auto& s : record.at("generators_expanded"))
    ideal.add_generator(parse_poly(s.get<std::string>(), nvars, cone));
  return ideal;
}

std::string piece_text(const GradedPiece& piece, const ConeData& cone) {
  std::ostringstream os;
  os << piece_kind_name(piece.which) << " at degree " << vec_str(piece.degree) << ":\n";
  if (piece.ideal.is_unit()) {
    os << "  < 1 >  (full polynomial ring)\n";
    return os.str();
  }
  os << "  generators:\n";
  for (const IdealGen& g : piece.ideal.generators()) {
    os << "    ";
    if (g.factored)
      os << factored_to_string(*g.factored, cone.dim(), &cone);
    else
      os << poly_to_string(g.poly, &cone);
    os << "\n";
  }
  os << "  expanded:\n";
  for (const IdealGen& g : piece.ideal.generators())
    os << "    " << poly_to_string(g.poly, &cone) << "\n";
  return os.str();
}

std::string compare_table(const CompareReport& report, const ConeData& cone) {
  std::ostringstream os;
  if (report.all_equal) {
    os << "ALL_EQUAL\n";
    return os.str();
  }
  os << "DIFFER at " << report.differing.size() << " degrees:\n";
  for (const DegreeComparison& c : report.entries) {
    if (c.equal) continue;
    os << "  d = " << vec_str(c.degree) << "\n    JD  = <";
    bool first = true;
    for (const IdealGen& g : c.jd.generators()) {
      os << (first ? " " : ", ")
         << (g.factored ? factored_to_string(*g.factored, cone.dim(), &cone)
                        : poly_to_string(g.poly, &cone));
      first = false;
    }
    os << " >\n    DRJ = <";
    first = true;
    for (const IdealGen& g : c.drj.generators()) {
      os << (first ? " " : ", ")
         << (g.factored ? factored_to_string(*g.factored, cone.dim(), &cone)
                        : poly_to_string(g.poly, &cone));
      first = false;
    }
    os << " >\n";
  }
  return os.str();
}

namespace {

// Chamber colors in the style of the paper's 2-D figures.
std::string signature_color(const ChamberSignature& sig, bool in_j, bool member) {
  bool any_neg = false;
  for (Sign s : sig.signs)
    if (s == Sign::NEG) any_neg = true;
  if (!any_neg) {
    if (in_j) return "red";
    return member ? "blue" : "orange";
  }
  bool all_neg = true;
  for (Sign s : sig.signs)
    if (s != Sign::NEG) all_neg = false;
  if (all_neg) return "violet";
  return sig.signs[0] != Sign::NEG ? "yellow" : "green";
}

}  // namespace

std::string chambers_svg(const RingSession& session, const Box& window) {
  const SemigroupData& sg = *session.sg;
  if (sg.dim() != 2) throw InputError("chamber figures are only available for k = 2");
  const double scale = 24.0;
  long long w = window.hi[0] - window.lo[0], h = window.hi[1] - window.lo[1];
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << (w + 2) * scale << "' height='"
     << (h + 2) * scale << "' viewBox='0 0 " << (w + 2) * scale << " " << (h + 2) * scale
     << "'>\n";
  auto X = [&](double x) { return (x - window.lo[0] + 1) * scale; };
  auto Y = [&](double y) { return (window.hi[1] - y + 1) * scale; };
  // facet lines through the origin
  for (const auto& hf : sg.cone().facets()) {
    // direction spanning the facet: kernel of the normal
    std::vector<Vec> ker = integer_kernel_basis({hf.normal}, 2);
    if (ker.empty()) continue;
    Vec dir = ker.front();
    double t = 4.0 * std::max(w, h);
    os << "<line x1='" << X(-t * dir[0]) << "' y1='" << Y(-t * dir[1]) << "' x2='"
       << X(t * dir[0]) << "' y2='" << Y(t * dir[1])
       << "' stroke='steelblue' stroke-width='2'/>\n";
  }
  window.for_each([&](const Vec& p) {
    ChamberSignature sig = sg.cone().chamber_signature(p);
    bool in_j = session.ideal && session.ideal->member(p);
    std::string color = signature_color(sig, in_j, sg.member(p));
    os << "<circle cx='" << X(static_cast<double>(p[0])) << "' cy='"
       << Y(static_cast<double>(p[1])) << "' r='4' fill='" << color << "'>"
       << "<title>" << vec_str(p) << " " << sig.str() << "</title></circle>\n";
  });
  os << "</svg>\n";
  return os.str();
}

std::string chambers_tikz(const RingSession& session, const Box& window) {
  const SemigroupData& sg = *session.sg;
  if (sg.dim() != 2) throw InputError("chamber figures are only available for k = 2");
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.5]\n";
  for (const auto& hf : sg.cone().facets()) {
    std::vector<Vec> ker = integer_kernel_basis({hf.normal}, 2);
    if (ker.empty()) continue;
    Vec dir = ker.front();
    os << "\\draw[blue, thick] (" << -4 * dir[0] << "," << -4 * dir[1] << ") -- (" << 4 * dir[0]
       << "," << 4 * dir[1] << ");\n";
  }
  window.for_each([&](const Vec& p) {
    ChamberSignature sig = sg.cone().chamber_signature(p);
    bool in_j = session.ideal && session.ideal->member(p);
    std::string color = signature_color(sig, in_j, sg.member(p));
    os << "\\node[draw,circle,inner sep=2pt," << color << ",fill] at (" << p[0] << "," << p[1]
       << ") {};\n";
  });
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace sgdops
