// cqexplore: sweep quadrilateral shapes x radiators x triangle centers and
// report relationships between the reference and central quadrilaterals.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cq/explorer.hpp"

namespace {

std::vector<cq::ShapeClass> parse_shapes(const std::string& arg) {
  if (arg == "all") return cq::all_shapes();
  std::vector<cq::ShapeClass> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(cq::shape_from_name(tok));
  return out;
}

std::vector<cq::RadiatorKind> parse_radiators(const std::string& arg) {
  if (arg == "all") return cq::all_radiators();
  std::vector<cq::RadiatorKind> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(cq::radiator_from_name(tok));
  return out;
}

// "2,5,100-110" or "all" (everything in the registry)
std::vector<int> parse_centers(const std::string& arg, const cq::CenterRegistry& reg) {
  if (arg == "all") return reg.indices();
  std::vector<int> out;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) {
      out.push_back(std::stoi(tok));
    } else {
      const int lo = std::stoi(tok.substr(0, dash));
      const int hi = std::stoi(tok.substr(dash + 1));
      for (int n = lo; n <= hi; ++n)
        if (reg.contains(n)) out.push_back(n);
    }
  }
  return out;
}

cq::ReportFormat parse_format(const std::string& f) {
  if (f == "md") return cq::ReportFormat::Markdown;
  if (f == "csv") return cq::ReportFormat::Csv;
  if (f == "json") return cq::ReportFormat::Json;
  throw CLI::ValidationError("--format must be md, csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"central-quadrilateral explorer"};
  app.require_subcommand(1);

  // ---- sweep
  auto* sweep = app.add_subcommand("sweep", "discover relationships");
  std::string shapes_arg = "all", radiators_arg = "all", centers_arg = "all";
  std::string mode_arg = "rational", format_arg = "md";
  int samples = 5;
  std::uint64_t seed = 1;
  double tol = 1e-7;
  bool include_suppressed = false, serial = false;
  sweep->add_option("--shapes", shapes_arg, "comma list or 'all'");
  sweep->add_option("--radiators", radiators_arg, "comma list or 'all'");
  sweep->add_option("--centers", centers_arg, "comma list/ranges or 'all'");
  sweep->add_option("--samples", samples, "instances per shape (>= 3)");
  sweep->add_option("--seed", seed, "base seed");
  sweep->add_option("--mode", mode_arg, "rational|extended");
  sweep->add_option("--format", format_arg, "md|csv|json");
  sweep->add_option("--tol", tol, "relation tolerance");
  sweep->add_flag("--include-suppressed", include_suppressed);
  sweep->add_flag("--serial", serial, "disable the cell thread pool");

  // ---- square-table
  auto* sq = app.add_subcommand("square-table",
                                "area ratios for a square with its diagonal point");
  std::string sq_centers = "all";
  sq->add_option("--centers", sq_centers, "comma list/ranges or 'all'");

  // ---- classify
  auto* cls = app.add_subcommand("classify", "triangle-center behavior classifiers");
  std::string cls_kind = "right", cls_centers = "all";
  cls->add_option("--kind", cls_kind, "right|isosceles")->required();
  cls->add_option("--centers", cls_centers, "comma list/ranges or 'all'");

  // ---- verify
  auto* ver = app.add_subcommand("verify", "re-check a findings JSON file");
  std::string claims_path;
  ver->add_option("--claims", claims_path, "findings JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const cq::CenterRegistry& reg = cq::default_registry();

    if (*sweep) {
      cq::SweepConfig cfg;
      cfg.shapes = parse_shapes(shapes_arg);
      cfg.radiators = parse_radiators(radiators_arg);
      cfg.centers = parse_centers(centers_arg, reg);
      cfg.samples_per_shape = samples;
      cfg.base_seed = seed;
      cfg.mode = mode_arg == "extended" ? cq::RecognitionMode::Extended
                                        : cq::RecognitionMode::RationalOnly;
      cfg.relation_tol = tol;
      cfg.parallel = !serial;
      const auto findings = cq::sweep_and_suppress(cfg, reg);
      std::cout << cq::emit_report(findings, parse_format(format_arg),
                                   include_suppressed);
      return 0;
    }

    if (*sq) {
      const auto table = cq::square_ratio_table(reg, parse_centers(sq_centers, reg));
      std::printf("%-8s %-24s %s\n", "center", "[ABCD]/[FGHI]", "value");
      for (const auto& e : table)
        std::printf("%-8d %-24s %.12g\n", e.center, e.ratio.to_string().c_str(),
                    e.ratio.value);
      return 0;
    }

    if (*cls) {
      const auto indices = parse_centers(cls_centers, reg);
      if (cls_kind == "right") {
        std::printf("%-8s %-22s %s\n", "center", "behavior", "AM:AX");
        for (int n : indices) {
          const auto c = cq::classify_right_triangle_ratio(reg.at(n));
          const char* label = "";
          std::string ratio;
          switch (c.behavior) {
            case cq::RightBehavior::AtHypotenuseMidpoint:
              label = "hypotenuseMidpoint"; ratio = "1"; break;
            case cq::RightBehavior::ConstantRatio: {
              label = "constantRatio";
              if (c.ratio_rational)
                ratio = std::to_string(c.ratio_rational->num) +
                        (c.ratio_rational->den != 1
                             ? "/" + std::to_string(c.ratio_rational->den) : "");
              else
                ratio = std::to_string(c.ratio);
              break;
            }
            case cq::RightBehavior::OnMedianNonConstant: label = "onMedian"; break;
            case cq::RightBehavior::NotOnMedian: label = "notOnMedian"; break;
            case cq::RightBehavior::AtInfinity: label = "atInfinity"; break;
          }
          std::printf("%-8d %-22s %s\n", n, label, ratio.c_str());
        }
      } else if (cls_kind == "isosceles") {
        std::printf("%-8s %-22s %s\n", "center", "behavior", "XM:AM");
        for (int n : indices) {
          const auto c = cq::classify_isosceles_behavior(reg.at(n));
          const char* label = "";
          std::string ratio;
          switch (c.behavior) {
            case cq::IsoBehavior::AtApex: label = "apex"; break;
            case cq::IsoBehavior::AtBaseMidpoint: label = "baseMidpoint"; break;
            case cq::IsoBehavior::AtInfinity: label = "atInfinity"; break;
            case cq::IsoBehavior::ConstantRatio: {
              label = "constantRatio";
              if (c.ratio_rational)
                ratio = std::to_string(c.ratio_rational->num) +
                        (c.ratio_rational->den != 1
                             ? "/" + std::to_string(c.ratio_rational->den) : "");
              else
                ratio = std::to_string(c.ratio);
              break;
            }
            case cq::IsoBehavior::NonConstant: label = "nonConstant"; break;
          }
          std::printf("%-8d %-22s %s\n", n, label, ratio.c_str());
        }
      } else {
        std::cerr << "--kind must be right or isosceles\n";
        return 2;
      }
      return 0;
    }

    if (*ver) {
      std::ifstream in(claims_path);
      if (!in) {
        std::cerr << "cannot open " << claims_path << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      const auto claims = cq::findings_from_json(buf.str());
      int failed = 0;
      for (const auto& claim : claims) {
        cq::SweepConfig cfg;
        cfg.shapes = {claim.shape};
        cfg.radiators = {claim.radiator};
        cfg.centers = {claim.center};
        cfg.base_seed = 99;  // fresh instances, independent of the claim run
        cfg.mode = cq::RecognitionMode::Extended;
        auto findings = cq::run_sweep(cfg, reg);
        const bool ok = std::any_of(
            findings.begin(), findings.end(), [&](const cq::RelationFinding& f) {
              return f.relation.kind == claim.relation.kind &&
                     (f.relation.kind != cq::RelationKind::AreaRatio ||
                      f.relation.constant.same_constant(claim.relation.constant));
            });
        std::printf("%-4s %s x %s x X%d : %s\n", ok ? "ok" : "FAIL",
                    std::string(cq::shape_name(claim.shape)).c_str(),
                    std::string(cq::radiator_name(claim.radiator)).c_str(),
                    claim.center,
                    std::string(cq::relation_name(claim.relation.kind)).c_str());
        if (!ok) ++failed;
      }
      std::printf("%zu claims, %d failed\n", claims.size(), failed);
      return failed == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
