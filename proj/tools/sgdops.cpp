#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sgdops/oracle.hpp"
#include "sgdops/render.hpp"

using namespace sgdops;

namespace {

Box window_for(const RingSession& session, int radius_override) {
  if (radius_override > 0) return Box::cube(session.sg->dim(), radius_override);
  return session.default_window();
}

VanishingSpec spec_for(const std::string& which, const Vec& d) {
  if (which == "D") return VanishingSpec{SetKind::SEMIGROUP, SetKind::SEMIGROUP, d};
  if (which == "II") return VanishingSpec{SetKind::IDEAL_J, SetKind::IDEAL_J, d};
  if (which == "DRJ") return VanishingSpec{SetKind::SEMIGROUP, SetKind::IDEAL_J, d};
  throw InputError("no vanishing spec for " + which);
}

int run_piece(const RingSession& session, const Vec& d, const std::string& which, bool verify,
              bool as_json) {
  const SemigroupData& sg = *session.sg;
  const ConeData& cone = sg.cone();
  if (which == "QUOT") {
    QuotientPiece q = quotient_piece(*session.ideal, d);
    if (as_json)
      std::cout << quotient_to_json(q, cone).dump(2) << "\n";
    else {
      std::cout << "quotient II(J)/D(R,J) at degree (";
      for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i];
      std::cout << "): " << (q.is_zero ? "zero" : "nonzero") << "\n";
      GradedPiece num{d, PieceKind::IDEALIZER, q.numerator, {}};
      GradedPiece den{d, PieceKind::DRJ, q.denominator, {}};
      std::cout << piece_text(num, cone) << piece_text(den, cone);
    }
    return 0;
  }

  GradedPiece piece;
  if (which == "D")
    piece = graded_D(sg, d);
  else if (which == "II")
    piece = graded_idealizer(*session.ideal, d);
  else if (which == "DRJ")
    piece = graded_DRJ(*session.ideal, d);
  else if (which == "JD")
    piece = graded_JD(*session.ideal, d);
  else
    throw InputError("unknown piece kind: " + which);

  if (as_json)
    std::cout << piece_to_json(piece, cone).dump(2) << "\n";
  else
    std::cout << piece_text(piece, cone);

  if (verify) {
    if (which == "JD") {
      std::cout << "verify: JD pieces are sums of D pieces; verify those instead\n";
    } else {
      const RadicalMonomialIdeal* j = which == "D" ? nullptr : session.ideal.get();
      VerifyReport rep = verify_piece(piece, sg, j, spec_for(which, d));
      std::cout << "verify: " << (rep.pass ? "PASS" : "FAIL " + rep.detail) << "\n";
      if (!rep.pass) return 2;
    }
  }
  return 0;
}

int run_selftest(const RingSession& session, const Box& window) {
  const SemigroupData& sg = *session.sg;
  const RadicalMonomialIdeal& j = *session.ideal;
  int failures = 0, checks = 0;
  std::vector<Vec> degrees;
  window.for_each([&](const Vec& d) { degrees.push_back(d); });
  std::sort(degrees.begin(), degrees.end());

  for (const Vec& d : degrees) {
    struct Entry {
      std::string name;
      GradedPiece piece;
      const RadicalMonomialIdeal* j;
      VanishingSpec spec;
    };
    std::vector<Entry> entries;
    entries.push_back({"D", graded_D(sg, d), nullptr, spec_for("D", d)});
    entries.push_back({"II", graded_idealizer(j, d), &j, spec_for("II", d)});
    entries.push_back({"DRJ", graded_DRJ(j, d), &j, spec_for("DRJ", d)});
    for (const Entry& e : entries) {
      ++checks;
      VerifyReport rep = verify_piece(e.piece, sg, e.j, e.spec);
      if (!rep.pass) {
        ++failures;
        std::cout << "FAIL " << e.name << " at (";
        for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i];
        std::cout << "): " << rep.detail << "\n";
      }
    }
    // containment chain JD <= DRJ <= II <= D
    GradedPiece jd = graded_JD(j, d);
    ++checks;
    if (!entries[2].piece.ideal.contains(jd.ideal) ||
        !entries[1].piece.ideal.contains(entries[2].piece.ideal) ||
        !entries[0].piece.ideal.contains(entries[1].piece.ideal)) {
      ++failures;
      std::cout << "FAIL containment chain at (";
      for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i];
      std::cout << ")\n";
    }
  }
  std::cout << (failures == 0 ? "selftest PASS" : "selftest FAIL") << " (" << checks
            << " checks, " << failures << " failures)\n";
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded differential operator pieces on affine semigroup rings"};
  app.require_subcommand(1);

  std::string cfg_path;
  std::vector<long long> degree;
  std::string which = "D";
  std::string emit = "svg";
  std::string outfile;
  int window_radius = 0;
  bool verify = false, as_json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("config", cfg_path, "ring config file")->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "facets, faces, flags, interior ideal");
  add_common(analyze);

  CLI::App* piece = app.add_subcommand("piece", "one graded piece at a degree");
  add_common(piece);
  piece->add_option("-d,--degree", degree, "multidegree")->required()->expected(-1);
  piece->add_option("--which", which, "D, II, DRJ, JD or QUOT");
  piece->add_flag("--verify", verify, "cross-check against the brute-force oracle");
  piece->add_flag("--json", as_json, "machine-readable output");

  CLI::App* compare = app.add_subcommand("compare", "JD(R) vs D(R,J) over a window");
  add_common(compare);
  compare->add_option("--window", window_radius, "cube window radius");
  compare->add_flag("--json", as_json, "machine-readable output");

  CLI::App* chambers = app.add_subcommand("chambers", "2-D chamber figure");
  add_common(chambers);
  chambers->add_option("--emit", emit, "svg or tikz");
  chambers->add_option("-o,--output", outfile, "output file")->required();
  chambers->add_option("--window", window_radius, "cube window radius");

  CLI::App* selftest = app.add_subcommand("selftest", "oracle cross-check over a window");
  add_common(selftest);
  selftest->add_option("--window", window_radius, "cube window radius");

  CLI11_PARSE(app, argc, argv);

  try {
    RingSession session = make_session(load_ring_config(cfg_path));
    Box window = window_for(session, window_radius);

    if (app.got_subcommand(analyze)) {
      Box probe = session.sg->ray_window(session.sg->probe_scale());
      std::cout << analyze_report(session, probe);
      return 0;
    }
    if (app.got_subcommand(piece)) {
      Vec d(degree.begin(), degree.end());
      if (static_cast<int>(d.size()) != session.sg->dim())
        throw InputError("degree dimension does not match the ring");
      return run_piece(session, d, which, verify, as_json);
    }
    if (app.got_subcommand(compare)) {
      CompareReport report = compare_JD_DRJ(*session.ideal, window);
      if (as_json) {
        nlohmann::json out;
        out["all_equal"] = report.all_equal;
        nlohmann::json diff = nlohmann::json::array();
        for (const Vec& v : report.differing) {
          nlohmann::json a = nlohmann::json::array();
          for (long long x : v) a.push_back(x);
          diff.push_back(a);
        }
        out["differing"] = diff;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << compare_table(report, session.sg->cone());
      }
      return 0;
    }
    if (app.got_subcommand(chambers)) {
      std::string body =
          emit == "tikz" ? chambers_tikz(session, window) : chambers_svg(session, window);
      std::ofstream out(outfile);
      if (!out) throw InputError("cannot write " + outfile);
      out << body;
      return 0;
    }
    if (app.got_subcommand(selftest)) return run_selftest(session, window);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
