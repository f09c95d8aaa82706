#include <algorithm>
#include <deque>

#include "kneser/decomposition.hpp"
#include "kneser/error.hpp"
#include "kneser/metric.hpp"

namespace kneser {

const char* to_string(CertificateKind kind) {
  return kind == CertificateKind::CertifiedWeaklyIrreducible ? "CertifiedWeaklyIrreducible" : "NotCertified";
}

bool is_nontrivial_sphere(const Triangulation& tri, const NormalCoordinates& s) {
  if (!s.has_quad()) return false;
  return reconstruct(tri, s).is_connected_sphere();
}

Certificate certify_from_solutions(const Triangulation& tri, const std::vector<NormalCoordinates>& solutions) {
  Certificate cert;
  cert.inspected = solutions.size();
  for (const auto& s : solutions)
    if (is_nontrivial_sphere(tri, s)) cert.witnesses.push_back(s);
  cert.kind = cert.witnesses.empty() ? CertificateKind::CertifiedWeaklyIrreducible : CertificateKind::NotCertified;
  return cert;
}

Certificate certify_weakly_irreducible(const Triangulation& tri, const EnumerationOptions& options) {
  return certify_from_solutions(tri, enumerate_vertex_solutions(tri, options));
}

std::optional<EssentialSphere> select_essential_sphere(const Triangulation& tri,
                                                       const std::vector<NormalCoordinates>& solutions) {
  std::optional<EssentialSphere> best;
  for (const auto& s : solutions) {
    if (!is_nontrivial_sphere(tri, s)) continue;
    EssentialSphere cand{s, pl_area(tri, s)};
    if (!best || cand.area < best->area || (cand.area.equivalent(best->area) && cand.coords < best->coords))
      best = std::move(cand);
  }
  return best;
}

std::optional<EssentialSphere> find_essential_sphere(const Triangulation& tri, const EnumerationOptions& options) {
  return select_essential_sphere(tri, enumerate_vertex_solutions(tri, options));
}

bool same_nontrivial_multiset(std::vector<AbelianGroup> a, std::vector<AbelianGroup> b) {
  const auto trivial = [](const AbelianGroup& g) { return g.trivial(); };
  a.erase(std::remove_if(a.begin(), a.end(), trivial), a.end());
  b.erase(std::remove_if(b.begin(), b.end(), trivial), b.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool DecompositionReport::all_certified() const {
  return std::all_of(pieces.begin(), pieces.end(), [](const PieceRecord& p) { return p.certificate.certified(); });
}

bool DecompositionReport::oracle_agrees() const {
  return std::all_of(oracle.begin(), oracle.end(), [](const OracleRecord& o) { return o.agree; });
}

namespace {

std::vector<AbelianGroup> h1_of(const std::vector<Triangulation>& pieces) {
  std::vector<AbelianGroup> out;
  for (const auto& p : pieces) out.push_back(homology(p, 1));
  return out;
}

}  // namespace

DecompositionReport decompose(const Triangulation& tri, const DecompositionOptions& options) {
  if (!tri.is_closed() || !tri.is_orientable())
    throw Error(ErrorCode::InvalidArgument, "decompose requires a closed orientable triangulation");
  DecompositionReport report;
  report.input_tetrahedra = tri.size();
  report.input_h1 = homology(tri, 1);

  std::deque<std::pair<Triangulation, int>> work;
  int created = 0;
  for (auto& c : split_components(tri, Requirements::closed_orientable())) work.emplace_back(std::move(c), created++);

  while (!work.empty()) {
    auto [piece, id] = std::move(work.front());
    work.pop_front();
    const auto solutions = enumerate_vertex_solutions(piece, options.enumeration);
    ++report.enumerations;
    auto cert = certify_from_solutions(piece, solutions);
    if (cert.certified()) {
      auto h1 = homology(piece, 1);
      report.pieces.push_back({std::move(piece), std::move(cert), std::move(h1)});
      continue;
    }
    if (report.crushes >= tri.size())
      throw Error(ErrorCode::TerminationGuardTripped, "more crushes than input tetrahedra");
    auto sphere = select_essential_sphere(piece, solutions);
    SphereRecord rec;
    rec.coords = sphere->coords;
    rec.area = sphere->area;
    rec.piece = id;
    const auto metrics = support_metrics(piece, sphere->coords.support());
    rec.support_size = metrics.size;
    rec.diameter = metrics.diameter;
    rec.diameter_ok = static_cast<long long>(metrics.diameter) <= rec.area.weight * rec.area.weight;
    report.spheres.push_back(rec);

    auto parts = crush(piece, sphere->coords);
    ++report.crushes;
    if (options.oracle_check) {
      OracleRecord o;
      o.crush_h1 = h1_of(parts);
      o.cut_h1 = h1_of(cut_and_cap(piece, sphere->coords));
      o.agree = same_nontrivial_multiset(o.crush_h1, o.cut_h1);
      report.oracle.push_back(std::move(o));
    }
    for (auto& p : parts) work.emplace_back(std::move(p), created++);
  }

  for (const auto& s : report.spheres) report.c3 = std::max(report.c3, s.area.weight);
  report.c1 = report.c3 * report.c3;
  AbelianGroup total;
  for (const auto& p : report.pieces) {
    total = direct_sum(total, p.h1);
    if (!p.h1.trivial()) report.pieces_h1.push_back(p.h1);
  }
  std::sort(report.pieces_h1.begin(), report.pieces_h1.end());
  report.balanced = isomorphic(total, report.input_h1);
  return report;
}

}  // namespace kneser
