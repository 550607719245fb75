#include "rrs/ris/codebook.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "rrs/common/error.hpp"
#include "rrs/common/json_util.hpp"
#include "rrs/common/parallel.hpp"
#include "rrs/ris/partition.hpp"

namespace rrs::ris {

void Codebook::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].codeword.size() != elements.size()) {
      throw Error(ErrorCode::ValidationError,
                  fmt::format("codeword {} has {} states, part has {} elements", i,
                              entries[i].codeword.size(), elements.size()));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[i].reference_point == entries[j].reference_point) {
        throw Error(ErrorCode::ValidationError,
                    fmt::format("reference points {} and {} coincide", j, i));
      }
    }
  }
}

std::string evaluator_hash(const channel::RisPanel& panel, std::size_t part,
                           std::span<const Vec3> grid, const CodebookContext& context) {
  std::string s;
  auto put = [&s](double v) { s += fmt::format("{:.17g};", v); };
  auto put_vec = [&](Vec3 v) {
    put(v.x);
    put(v.y);
    put(v.z);
  };
  s += fmt::format("panel={};part={};", panel.id, part);
  for (const auto& e : panel.elements) put_vec(e);
  for (const auto& st : panel.states) {
    put(st.phase_rad);
    put(st.amplitude);
  }
  for (auto p : panel.part_of) s += fmt::format("{},", p);
  s += "|grid:";
  for (const auto& g : grid) put_vec(g);
  s += "|tx:";
  put_vec(context.tx);
  put(context.tx_power_dbm);
  put(context.model.freq_hz);
  put(context.model.path_loss.exponent);
  put(context.model.path_loss.d0_m);
  put(context.model.path_loss.blockage_penalty_db);
  put(context.model.element_gain_db);
  s += context.model.scatter_floor ? "scatter;" : "noscatter;";
  for (const auto& b : context.obstacles) {
    put_vec(b.min);
    put_vec(b.max);
  }
  for (auto st : context.frozen.states) s += fmt::format("{},", st);
  s += fmt::format("|passes={},{}", context.options.passes, context.options.until_converged);
  return hex64(fnv1a64(s));
}

Codebook build_codebook(const channel::RisPanel& panel, std::size_t part,
                        std::span<const Vec3> grid, const CodebookContext& context) {
  if (grid.empty()) throw Error(ErrorCode::ValidationError, "codebook grid is empty");
  panel.validate();
  if (part >= panel.part_count()) {
    throw Error(ErrorCode::ValidationError,
                fmt::format("part {} not on panel {} ({} parts)", part, panel.id,
                            panel.part_count()));
  }
  const RisConfig frozen =
      context.frozen.size() == 0 ? RisConfig::zeros(panel.size()) : context.frozen;
  panel.check_config(frozen);

  Codebook cb;
  cb.panel_id = panel.id;
  cb.part = part;
  cb.elements = panel.part_elements(part);
  cb.entries.resize(grid.size());
  cb.metadata.grid = context.grid_description;
  cb.metadata.build_date = context.build_date;
  cb.metadata.evaluator_hash = evaluator_hash(panel, part, grid, context);

  IterativeOptions options = context.options;
  options.record_candidates = false;
  options.initial.reset();

  parallel_for(grid.size(), [&](std::size_t i) {
    auto shared = std::make_shared<RisConfig>(frozen);
    auto model = std::make_shared<const channel::CascadeModel>(context.tx, panel, grid[i],
                                                               context.model, context.obstacles);
    const PartEvaluator evaluator(model, shared, cb.elements, context.tx_power_dbm);
    auto result = iterative_optimize(std::cref(evaluator), evaluator.size(),
                                     panel.states.size(), options);
    cb.entries[i] = {grid[i], std::move(result.config)};
  });
  cb.validate();
  return cb;
}

CodewordSelection select_codeword(const Codebook& codebook, Vec3 ue_location_estimate) {
  if (codebook.entries.empty()) {
    throw Error(ErrorCode::EmptyCodebook,
                fmt::format("panel {} part {} has no codewords", codebook.panel_id,
                            codebook.part));
  }
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < codebook.entries.size(); ++i) {
    const Vec3 d = codebook.entries[i].reference_point - ue_location_estimate;
    const double d2 = dot(d, d);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  return {best, codebook.entries[best].codeword, 0};
}

std::vector<Vec3> angular_grid(Vec3 center, Vec3 normal, Vec3 up, double radius_m,
                               std::span<const double> angles_deg) {
  const Vec3 n = normalized(normal);
  const Vec3 side = normalized(cross(up, n));
  std::vector<Vec3> out;
  out.reserve(angles_deg.size());
  for (double a : angles_deg) {
    const double t = deg_to_rad(a);
    out.push_back(center + radius_m * (std::cos(t) * n + std::sin(t) * side));
  }
  return out;
}

Json to_json(const Codebook& codebook) {
  Json entries = Json::array();
  for (const auto& e : codebook.entries) {
    entries.push_back({{"reference_point", vec3_to_json(e.reference_point)},
                       {"states", e.codeword.states}});
  }
  return Json{{"format", "rrs-codebook"},
              {"version", codebook.metadata.format_version},
              {"panel", codebook.panel_id},
              {"part", codebook.part},
              {"elements", codebook.elements},
              {"metadata",
               {{"grid", codebook.metadata.grid},
                {"build_date", codebook.metadata.build_date},
                {"evaluator_hash", codebook.metadata.evaluator_hash}}},
              {"entries", std::move(entries)}};
}

Codebook codebook_from_json(const Json& doc) {
  if (optional_or<std::string>(doc, "format", "", "") != "rrs-codebook") {
    throw Error(ErrorCode::ParseError, "not an rrs-codebook document");
  }
  Codebook cb;
  cb.metadata.format_version = require<int>(doc, "version", "");
  if (cb.metadata.format_version != kCodebookFormatVersion) {
    throw Error(ErrorCode::ParseError,
                fmt::format("unsupported codebook version {}", cb.metadata.format_version));
  }
  cb.panel_id = require<std::uint32_t>(doc, "panel", "");
  cb.part = require<std::size_t>(doc, "part", "");
  cb.elements = require<std::vector<std::size_t>>(doc, "elements", "");
  const Json meta = optional_or<Json>(doc, "metadata", Json::object(), "");
  cb.metadata.grid = optional_or<std::string>(meta, "grid", "", "metadata.");
  cb.metadata.build_date = optional_or<std::string>(meta, "build_date", "", "metadata.");
  cb.metadata.evaluator_hash = optional_or<std::string>(meta, "evaluator_hash", "", "metadata.");
  const Json entries = require<Json>(doc, "entries", "");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string ctx = fmt::format("entries[{}].", i);
    CodebookEntry e;
    e.reference_point = vec3_from_json(require<Json>(entries[i], "reference_point", ctx),
                                       ctx + "reference_point");
    e.codeword.states = require<std::vector<std::uint32_t>>(entries[i], "states", ctx);
    cb.entries.push_back(std::move(e));
  }
  cb.validate();
  return cb;
}

}  // namespace rrs::ris
