#include "vlink/json_io.hpp"

namespace vlink {

namespace {

ordered_json site_json(const SitePos& p) {
  return ordered_json::array({p.component, p.index});
}

ordered_json positions_json(const std::vector<SitePos>& positions) {
  ordered_json arr = ordered_json::array();
  for (const SitePos& p : positions) arr.push_back(site_json(p));
  return arr;
}

}  // namespace

ordered_json surface_json(const SurfaceReport& report) {
  ordered_json pieces = ordered_json::array();
  for (const PieceReport& piece : report.pieces) {
    pieces.push_back({{"chi", piece.chi},
                      {"boundary", piece.boundary},
                      {"genus", piece.genus}});
  }
  return {{"chi", report.chi},
          {"boundary", report.boundary},
          {"genus", report.genus},
          {"pieces", pieces}};
}

ordered_json matrix_json(const LinkingMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.entries) rows.push_back(row);
  return rows;
}

ordered_json homology_json(const HomologyClass& h) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : h.pairwise) rows.push_back(row);
  return {{"components", h.n}, {"pairwise", rows}};
}

ordered_json certificate_json(const ClassicalityCertificate& cert) {
  ordered_json out;
  out["verdict"] = to_string(cert.verdict);
  if (cert.verdict == ClassicalityCertificate::Verdict::non_classical) {
    out["witness"] =
        ordered_json::array({cert.witness_j + 1, cert.witness_k + 1});
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

ordered_json presentation_json(const Presentation& p) {
  ordered_json out;
  out["kind"] = p.kind == Presentation::Kind::group ? "group" : "quandle";
  out["generators"] = p.generators;
  ordered_json relations = ordered_json::array();
  if (p.kind == Presentation::Kind::group) {
    for (const auto& word : p.word_relations) {
      ordered_json w = ordered_json::array();
      for (const auto& [gen, exp] : word) {
        w.push_back(ordered_json::array({gen, exp}));
      }
      relations.push_back(w);
    }
  } else {
    for (const auto& triple : p.triple_relations) {
      relations.push_back(ordered_json::array({triple[0], triple[1], triple[2]}));
    }
  }
  out["relations"] = relations;
  return out;
}

ordered_json validation_json(const ValidationReport& report) {
  ordered_json out;
  out["ok"] = report.ok();
  if (!report.ok()) {
    out["kind"] = to_string(report.kind);
    out["crossing"] = report.crossing_id;
    out["message"] = report.message;
  }
  return out;
}

ordered_json move_json(const Move& move, const std::string& result_key) {
  ordered_json out;
  out["kind"] = to_string(move.kind);
  ordered_json site;
  switch (move.kind) {
    case MoveKind::r1_add:
      site["gap"] = site_json(move.gaps.at(0));
      site["sign"] = move.sign;
      site["order"] = move.over_first ? "OU" : "UO";
      break;
    case MoveKind::r2_add:
      site["gap_over"] = site_json(move.gaps.at(0));
      site["gap_under"] = site_json(move.gaps.at(1));
      site["orientation"] = move.parallel ? "parallel" : "antiparallel";
      site["lead_sign"] = move.sign;
      site["block"] = move.over_first ? "over-first" : "under-first";
      break;
    case MoveKind::r1_remove:
    case MoveKind::r2_remove:
    case MoveKind::r3:
      site["positions"] = positions_json(move.positions);
      break;
  }
  out["site"] = site;
  out["result"] = result_key;
  return out;
}

ordered_json report_json(const LinkDiagram& d) {
  const LinkingMatrix m = linking_matrix(d);
  const Presentations pres = presentations(d);
  ordered_json out;
  out["code"] = serialize(d);
  out["components"] = static_cast<int>(d.components.size());
  out["crossings"] = crossing_count(d);
  out["linking_matrix"] = matrix_json(m);
  out["homology_class"] = homology_json(homology_class(d));
  out["surface"] = surface_json(surface_report(d));
  out["certificate"] = certificate_json(classicality_certificate(d));
  out["presentations"] = {{"group", presentation_json(pres.group)},
                          {"quandle", presentation_json(pres.quandle)}};
  return out;
}

}  // namespace vlink
