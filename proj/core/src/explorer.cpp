#include "cq/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace cq {

namespace {

struct CellKey {
  ShapeClass shape;
  RadiatorKind radiator;
  int center;
};

// instance streams are shared across centers; the cell stream drives the
// arbitrary-point radiator
std::uint64_t instance_seed(const SweepConfig& cfg, ShapeClass shape, int k) {
  return hash_combine(hash_combine(cfg.base_seed, static_cast<std::uint64_t>(shape) + 101),
                      static_cast<std::uint64_t>(k));
}

std::uint64_t cell_seed(const SweepConfig& cfg, const CellKey& key) {
  std::uint64_t h = hash_combine(cfg.base_seed, static_cast<std::uint64_t>(key.shape));
  h = hash_combine(h, static_cast<std::uint64_t>(key.radiator) + 7919);
  return hash_combine(h, static_cast<std::uint64_t>(key.center));
}

bool off_sidelines(const QuadInstance& q, Point p) {
  for (int i = 0; i < 4; ++i) {
    const Line l = Line::through(q.v[i], q.v[(i + 1) % 4]);
    if (std::abs(l.signed_distance(p)) < 1e-9 * q.diameter()) return false;
  }
  return true;
}

bool relations_match(const Relation& a, const Relation& b, double tol) {
  if (a.kind != b.kind) return false;
  if (a.kind == RelationKind::AreaRatio || a.kind == RelationKind::SameArea)
    return a.constant.same_constant(b.constant, tol);
  return true;
}

std::vector<RelationFinding> run_cell(const SweepConfig& cfg, const CenterRegistry& reg,
                                      const CellKey& key,
                                      const std::vector<QuadInstance>& instances) {
  const CenterDef& def = reg.at(key.center);
  SplitMix64 cell_rng(cell_seed(cfg, key));

  std::vector<std::vector<Relation>> per_sample;
  for (const QuadInstance& q : instances) {
    auto rad = make_radiator(q, key.radiator, cell_rng);
    if (!rad) return {};  // radiator not applicable to this shape
    if (!off_sidelines(q, rad->point)) return {};
    const CentralQuadResult cqr = central_quadrilateral(q, rad->point, def);
    if (cqr.status != EvalStatus::Finite) return {};  // infinity: cell skipped
    per_sample.push_back(detect_relations(q, cqr.quad, cfg.mode, cfg.relation_tol));
  }

  // keep relations that appear in every sample with a consistent constant
  std::vector<RelationFinding> out;
  for (const Relation& rel : per_sample.front()) {
    bool everywhere = true;
    for (std::size_t k = 1; k < per_sample.size() && everywhere; ++k) {
      const auto& sample = per_sample[k];
      everywhere = std::any_of(sample.begin(), sample.end(), [&](const Relation& o) {
        return relations_match(rel, o, 1e-6);
      });
    }
    if (everywhere) {
      RelationFinding f;
      f.shape = key.shape;
      f.radiator = key.radiator;
      f.center = key.center;
      f.relation = rel;
      f.confirmations = static_cast<int>(per_sample.size());
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace

std::vector<RelationFinding> run_sweep(const SweepConfig& cfg, const CenterRegistry& reg) {
  if (cfg.samples_per_shape < 3)
    throw std::invalid_argument("run_sweep: samples_per_shape must be >= 3");
  std::vector<int> missing;
  for (int n : cfg.centers)
    if (!reg.contains(n)) missing.push_back(n);
  if (!missing.empty()) {
    std::string msg = "run_sweep: centers missing from registry:";
    for (int n : missing) msg += " " + std::to_string(n);
    throw std::invalid_argument(msg);
  }

  // deterministic instance set per shape, shared across all cells
  std::map<ShapeClass, std::vector<QuadInstance>> instances;
  for (ShapeClass s : cfg.shapes) {
    if (instances.count(s)) continue;
    auto& v = instances[s];
    for (int k = 0; k < cfg.samples_per_shape; ++k)
      v.push_back(generate(s, instance_seed(cfg, s, k)));
  }

  std::vector<CellKey> cells;
  for (ShapeClass s : cfg.shapes)
    for (RadiatorKind r : cfg.radiators)
      for (int n : cfg.centers) cells.push_back({s, r, n});

  std::vector<std::vector<RelationFinding>> results(cells.size());
  const unsigned workers =
      cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      results[i] = run_cell(cfg, reg, cells[i], instances.at(cells[i].shape));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<RelationFinding> findings;
  for (auto& r : results)
    findings.insert(findings.end(), r.begin(), r.end());
  return findings;
}

void suppress_inherited(std::vector<RelationFinding>& findings) {
  auto same_cell_relation = [](const RelationFinding& a, const RelationFinding& b) {
    return a.center == b.center && relations_match(a.relation, b.relation, 1e-6);
  };

  for (RelationFinding& f : findings) {
    // proved radiator coincidence on this shape or an ancestor
    for (const RadiatorCoincidence& rule : radiator_coincidences()) {
      if (rule.kind != f.radiator) continue;
      if (f.shape == rule.shape || is_ancestor(rule.shape, f.shape)) {
        f.suppressed_by = std::string(radiator_name(rule.kind)) + "=" +
                          std::string(radiator_name(rule.same_as)) + " on " +
                          std::string(shape_name(rule.shape));
        break;
      }
    }
    if (f.suppressed()) continue;

    for (const RelationFinding& g : findings) {
      if (&g == &f || !same_cell_relation(f, g)) continue;
      const bool ancestor_shape = is_ancestor(g.shape, f.shape);
      // same radiator, ancestor shape
      if (g.radiator == f.radiator && ancestor_shape) {
        f.suppressed_by = std::string(shape_name(g.shape));
        break;
      }
      // an arbitrary-point relation holds for every radiator
      if (g.radiator == RadiatorKind::ArbitraryPoint &&
          f.radiator != RadiatorKind::ArbitraryPoint &&
          (ancestor_shape || g.shape == f.shape)) {
        f.suppressed_by = std::string(shape_name(g.shape)) + "/arbitrary";
        break;
      }
    }
  }
}

std::vector<RelationFinding> sweep_and_suppress(const SweepConfig& cfg,
                                                const CenterRegistry& reg) {
  SweepConfig closure = cfg;
  std::set<ShapeClass> shapes(cfg.shapes.begin(), cfg.shapes.end());
  for (ShapeClass s : cfg.shapes)
    for (ShapeClass a : ancestors(s)) shapes.insert(a);
  closure.shapes.assign(shapes.begin(), shapes.end());
  // arbitrary-point findings subsume every radiator, so that sweep is
  // always part of the suppression context
  std::set<RadiatorKind> radiators(cfg.radiators.begin(), cfg.radiators.end());
  radiators.insert(RadiatorKind::ArbitraryPoint);
  closure.radiators.assign(radiators.begin(), radiators.end());

  auto findings = run_sweep(closure, reg);
  suppress_inherited(findings);

  const std::set<ShapeClass> requested_shapes(cfg.shapes.begin(), cfg.shapes.end());
  const std::set<RadiatorKind> requested_rads(cfg.radiators.begin(), cfg.radiators.end());
  std::erase_if(findings, [&](const RelationFinding& f) {
    return requested_shapes.count(f.shape) == 0 ||
           requested_rads.count(f.radiator) == 0;
  });
  return findings;
}

std::vector<SquareTableEntry> square_ratio_table(const CenterRegistry& reg,
                                                 const std::vector<int>& indices) {
  std::vector<SquareTableEntry> out;
  const double rt2 = std::sqrt(2.0);
  for (int n : indices) {
    if (!reg.contains(n)) continue;
    const EvalResult r = eval_center(reg.at(n), rt2, 1.0, 1.0);
    if (r.status != EvalStatus::Finite) continue;
    const double k = r.coords.u;      // XM/EM along the axis
    // centers whose coordinates degenerate at the isosceles right triangle
    // produce roundoff-driven positions; require local stability
    const EvalResult probe = eval_center(reg.at(n), rt2 * (1 + 1e-8), 1.0, 1.0);
    if (probe.status != EvalStatus::Finite) continue;
    if (std::abs(probe.coords.u - k) > 1e-4) continue;
    const double ef_em = 1.0 - k;     // EF/EM by the signed-distance identity
    if (std::abs(ef_em) < 1e-9) continue;  // center at the apex: omitted
    SquareTableEntry e;
    e.center = n;
    e.ratio = recognize_constant(2.0 / (ef_em * ef_em), RecognitionMode::Extended);
    out.push_back(e);
  }
  return out;
}

// ------------------------------------------------------------------ reports

std::string format_center_list(std::vector<int> centers) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < centers.size()) {
    std::size_t j = i;
    while (j + 1 < centers.size() && centers[j + 1] == centers[j] + 1) ++j;
    if (!first) os << ", ";
    first = false;
    if (j - i >= 2) os << centers[i] << "-" << centers[j];
    else {
      os << centers[i];
      for (std::size_t k = i + 1; k <= j; ++k) os << ", " << centers[k];
    }
    i = j + 1;
  }
  return os.str();
}

namespace {

std::string_view radiator_label(RadiatorKind r) {
  switch (r) {
    case RadiatorKind::ArbitraryPoint: return "an arbitrary point";
    case RadiatorKind::DiagonalPoint: return "the diagonal point";
    case RadiatorKind::PonceletPoint: return "the Poncelet point";
    case RadiatorKind::SteinerPoint: return "the Steiner point";
    case RadiatorKind::Circumcenter: return "the circumcenter";
    case RadiatorKind::Incenter: return "the incenter";
    case RadiatorKind::Anticenter: return "the anticenter";
    case RadiatorKind::Orthocenter: return "the orthocenter";
    case RadiatorKind::VertexCentroid: return "the vertex centroid";
    case RadiatorKind::ThirdDiagonalMidpoint: return "the midpoint of the 3rd diagonal";
  }
  return "?";
}

std::string relation_label(const Relation& rel) {
  switch (rel.kind) {
    case RelationKind::SameArea: return "[ABCD] = [FGHI]";
    case RelationKind::AreaRatio:
      return "[ABCD] = " + rel.constant.to_string() + " [FGHI]";
    case RelationKind::Congruent: return "ABCD congruent FGHI";
    case RelationKind::Similar: return "ABCD similar FGHI";
    case RelationKind::SamePerimeter: return "perimeter ABCD = perimeter FGHI";
    case RelationKind::CongruentCircumcircles: return "circumcircles congruent";
    case RelationKind::SameCircumcircle: return "same circumcircle";
  }
  return "?";
}

// sort key: area relations by decreasing constant first, then other kinds
std::pair<int, double> relation_order(const Relation& rel) {
  if (rel.kind == RelationKind::SameArea) return {0, -1.0};
  if (rel.kind == RelationKind::AreaRatio) return {0, -rel.constant.value};
  return {static_cast<int>(rel.kind), 0.0};
}

nlohmann::json constant_json(const RecognizedConstant& c) {
  nlohmann::json j;
  switch (c.kind) {
    case RecognizedConstant::Kind::Rational: j["kind"] = "rational"; break;
    case RecognizedConstant::Kind::QuadIrrational: j["kind"] = "quadIrrational"; break;
    case RecognizedConstant::Kind::Unrecognized: j["kind"] = "unrecognized"; break;
  }
  j["p"] = c.p;
  j["q"] = c.q;
  j["d"] = c.d;
  j["r"] = c.r;
  j["value"] = c.value;
  return j;
}

RecognizedConstant constant_from_json(const nlohmann::json& j) {
  RecognizedConstant c;
  const std::string kind = j.value("kind", "unrecognized");
  if (kind == "rational") c.kind = RecognizedConstant::Kind::Rational;
  else if (kind == "quadIrrational") c.kind = RecognizedConstant::Kind::QuadIrrational;
  else c.kind = RecognizedConstant::Kind::Unrecognized;
  c.p = j.value("p", 0ll);
  c.q = j.value("q", 0ll);
  c.d = j.value("d", 0);
  c.r = j.value("r", 1ll);
  c.value = j.value("value", 0.0);
  return c;
}

}  // namespace

std::string emit_report(const std::vector<RelationFinding>& findings,
                        ReportFormat format, bool include_suppressed) {
  std::vector<const RelationFinding*> kept;
  for (const auto& f : findings)
    if (include_suppressed || !f.suppressed()) kept.push_back(&f);

  auto key_less = [](const RelationFinding* a, const RelationFinding* b) {
    if (a->radiator != b->radiator) return a->radiator < b->radiator;
    if (a->shape != b->shape) return a->shape < b->shape;
    const auto oa = relation_order(a->relation), ob = relation_order(b->relation);
    if (oa != ob) return oa < ob;
    return a->center < b->center;
  };
  std::sort(kept.begin(), kept.end(), key_less);

  if (format == ReportFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto* f : kept) {
      nlohmann::json j;
      j["shape"] = std::string(shape_name(f->shape));
      j["radiator"] = std::string(radiator_name(f->radiator));
      j["center"] = f->center;
      j["relation"] = std::string(relation_name(f->relation.kind));
      j["constant"] = constant_json(f->relation.constant);
      j["confirmations"] = f->confirmations;
      if (f->suppressed()) j["suppressed_by"] = f->suppressed_by;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }

  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "radiator,shape,relation,constant,center,confirmations,suppressed_by\n";
    for (const auto* f : kept) {
      os << radiator_name(f->radiator) << "," << shape_name(f->shape) << ","
         << relation_name(f->relation.kind) << ","
         << f->relation.constant.to_string() << "," << f->center << ","
         << f->confirmations << "," << f->suppressed_by << "\n";
    }
    return os.str();
  }

  // markdown: one table per radiator, rows grouped by (shape, relation)
  std::ostringstream os;
  std::size_t i = 0;
  while (i < kept.size()) {
    const RadiatorKind rad = kept[i]->radiator;
    os << "## Central quadrilaterals formed by " << radiator_label(rad) << "\n\n";
    os << "| quadrilateral type | relationship | centers |\n";
    os << "|---|---|---|\n";
    std::size_t rows = 0;
    while (i < kept.size() && kept[i]->radiator == rad) {
      const ShapeClass shape = kept[i]->shape;
      const Relation rel = kept[i]->relation;
      std::vector<int> centers;
      std::vector<std::string> suppressors;
      while (i < kept.size() && kept[i]->radiator == rad && kept[i]->shape == shape &&
             relations_match(kept[i]->relation, rel, 1e-6)) {
        centers.push_back(kept[i]->center);
        if (kept[i]->suppressed()) suppressors.push_back(kept[i]->suppressed_by);
        ++i;
      }
      os << "| " << shape_name(shape) << " | " << relation_label(rel) << " | "
         << format_center_list(centers);
      if (!suppressors.empty()) os << " (suppressed: " << suppressors.front() << ")";
      os << " |\n";
      ++rows;
    }
    if (rows == 0) os << "| - | No relationships were found | - |\n";
    os << "\n";
  }
  if (kept.empty()) os << "No relationships were found.\n";
  return os.str();
}

std::vector<RelationFinding> findings_from_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  std::vector<RelationFinding> out;
  for (const auto& j : arr) {
    RelationFinding f;
    f.shape = shape_from_name(j.at("shape").get<std::string>());
    f.radiator = radiator_from_name(j.at("radiator").get<std::string>());
    f.center = j.at("center").get<int>();
    f.relation.kind = relation_from_name(j.at("relation").get<std::string>());
    f.relation.constant = constant_from_json(j.at("constant"));
    f.confirmations = j.value("confirmations", 0);
    f.suppressed_by = j.value("suppressed_by", std::string());
    out.push_back(f);
  }
  return out;
}

}  // namespace cq
