#include "sgdops/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace sgdops {

namespace {

struct SpanCandidate {
  int dim;
  std::vector<LinearForm> forms;  // canonical flat key
  std::vector<Vec> pts;
  size_t grown = 0;
};

bool on_flat(const std::vector<LinearForm>& forms, const Vec& p) {
  for (const LinearForm& f : forms)
    if (f.eval(p) != 0) return false;
  return true;
}

int affine_rank_of(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(diffs);
}

}  // namespace

ThetaIdeal brute_vanishing_ideal(const SemigroupData& sg, const RadicalMonomialIdeal* j,
                                 const VanishingSpec& spec, long long window_scale) {
  const int k = sg.dim();
  const long long far = far_radius_for(sg, spec.d);
  Box w1 = base_window_for(sg, spec.d).scaled(window_scale);
  Box w2 = w1.scaled(2);
  std::vector<Vec> pts = required_vanishing(sg, j, spec, w1);
  std::vector<Vec> grown = required_vanishing(sg, j, spec, w2);
  if (pts.empty() && grown.empty()) return ThetaIdeal::unit(k);
  if (pts.empty())
    throw ComputationError("oracle: empty window but nonempty doubled window");

  auto subsample = [](const std::vector<Vec>& src, size_t limit) {
    if (src.size() <= limit) return src;
    std::vector<Vec> picked;
    double step = static_cast<double>(src.size()) / static_cast<double>(limit);
    for (size_t i = 0; i < limit; ++i) picked.push_back(src[static_cast<size_t>(i * step)]);
    return picked;
  };

  auto accept_spans = [&](const std::vector<Vec>& seeds) {
    std::map<std::vector<LinearForm>, int> flats;  // key -> dim
    for (size_t a = 0; a < seeds.size(); ++a)
      for (size_t b = a + 1; b < seeds.size(); ++b) {
        std::vector<LinearForm> key = stratum_linear_forms(seeds[a], {seeds[b] - seeds[a]});
        flats.emplace(std::move(key), 1);
      }
    if (k >= 3) {
      for (size_t a = 0; a < seeds.size(); ++a)
        for (size_t b = a + 1; b < seeds.size(); ++b)
          for (size_t c = b + 1; c < seeds.size(); ++c) {
            std::vector<Vec> dirs = {seeds[b] - seeds[a], seeds[c] - seeds[a]};
            if (rank(dirs) != 2) continue;
            std::vector<LinearForm> key = stratum_linear_forms(seeds[a], dirs);
            flats.emplace(std::move(key), 2);
          }
    }
    std::vector<SpanCandidate> accepted;
    for (const auto& [forms, dim] : flats) {
      SpanCandidate cand;
      cand.dim = dim;
      cand.forms = forms;
      for (const Vec& p : pts)
        if (on_flat(forms, p)) cand.pts.push_back(p);
      for (const Vec& p : grown)
        if (on_flat(forms, p)) cand.grown++;
      if (cand.grown <= cand.pts.size()) continue;
      if (dim >= 2 && 2 * cand.grown < 5 * cand.pts.size()) continue;
      std::vector<Vec> far_pts;
      for (const Vec& p : cand.pts)
        if (linf_norm(p) >= far) far_pts.push_back(p);
      if (affine_rank_of(far_pts) != dim) continue;
      accepted.push_back(std::move(cand));
    }
    return accepted;
  };

  // Discover spans, then retry with the points the current cover missed as
  // extra seeds; a fixed subsample can alias against a whole stratum.
  std::vector<std::vector<LinearForm>> chosen;
  std::unordered_set<Vec, VecHash> covered;
  std::vector<Vec> uncovered = pts;
  for (int round = 0; round < 6 && !uncovered.empty(); ++round) {
    std::vector<Vec> seeds = subsample(pts, 32);
    std::vector<Vec> extra = subsample(uncovered, 24);
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::vector<SpanCandidate> accepted = accept_spans(seeds);
    std::sort(accepted.begin(), accepted.end(),
              [](const SpanCandidate& a, const SpanCandidate& b) {
                if (a.dim != b.dim) return a.dim > b.dim;
                if (a.pts.size() != b.pts.size()) return a.pts.size() > b.pts.size();
                return a.forms < b.forms;
              });
    size_t before = covered.size();
    for (const SpanCandidate& cand : accepted) {
      bool adds = false;
      for (const Vec& p : cand.pts)
        if (!covered.count(p)) {
          adds = true;
          break;
        }
      if (!adds) continue;
      bool already = false;
      for (const auto& f : chosen)
        if (f == cand.forms) already = true;
      if (already) continue;
      for (const Vec& p : cand.pts) covered.insert(p);
      chosen.push_back(cand.forms);
    }
    std::vector<Vec> still;
    for (const Vec& p : uncovered)
      if (!covered.count(p)) still.push_back(p);
    uncovered = std::move(still);
    if (covered.size() == before) break;  // no progress; leftovers are isolated
  }
  for (const Vec& p : uncovered) chosen.push_back(stratum_linear_forms(p, {}));
  if (getenv("SGDOPS_ORACLE_DEBUG")) {
    for (const auto& f : chosen) {
      fprintf(stderr, "oracle flat:");
      for (const auto& lf : f) {
        fprintf(stderr, " [");
        for (auto c : lf.coeffs) fprintf(stderr, "%lld,", c);
        fprintf(stderr, "|%lld]", lf.shift);
      }
      fprintf(stderr, "\n");
    }
  }

  ThetaIdeal result = ThetaIdeal::unit(k);
  for (const auto& forms : chosen) {
    ThetaIdeal q(k);
    for (const LinearForm& f : forms) {
      FactoredGenerator g;
      g.push(f);
      q.add_generator(std::move(g));
    }
    result = ideal_intersection(result, q);
  }
  return result;
}

VerifyReport verify_piece(const GradedPiece& piece, const SemigroupData& sg,
                          const RadicalMonomialIdeal* j, const VanishingSpec& spec) {
  VerifyReport report;

  // Soundness: every pipeline generator must vanish on the sampled set.
  Box w2 = base_window_for(sg, spec.d).scaled(2);
  std::vector<Vec> pts = required_vanishing(sg, j, spec, w2);
  for (const IdealGen& g : piece.ideal.generators()) {
    for (const Vec& p : pts) {
      Rat v = g.factored ? g.factored->eval(p) : g.poly.eval(p);
      if (v != 0) {
        std::ostringstream os;
        os << "generator does not vanish at (";
        for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
        os << ")";
        report.detail = os.str();
        return report;
      }
    }
  }

  ThetaIdeal oracle = brute_vanishing_ideal(sg, j, spec);
  if (!ideal_equal(piece.ideal, oracle)) {
    report.detail = "pipeline and oracle ideals differ";
    return report;
  }
  ThetaIdeal oracle2 = brute_vanishing_ideal(sg, j, spec, 2);
  if (!ideal_equal(oracle, oracle2)) {
    report.detail = "oracle ideal unstable under window doubling";
    return report;
  }
  report.pass = true;
  report.detail = "PASS";
  return report;
}

}  // namespace sgdops
