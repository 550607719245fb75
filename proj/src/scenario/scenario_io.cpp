#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "rrs/common/error.hpp"
#include "rrs/scenario/scenario.hpp"

namespace rrs::scenario {

namespace {

sim::SimTime ms_or(const Json& obj, const std::string& key, sim::SimTime fallback,
                   const std::string& ctx) {
  return sim::SimTime{optional_or<std::int64_t>(obj, key, fallback.ms, ctx)};
}

const Json& section(const Json& doc, const std::string& key) {
  static const Json empty = Json::object();
  if (!doc.contains(key) || doc.at(key).is_null()) return empty;
  const Json& s = doc.at(key);
  if (!s.is_object()) throw Error(ErrorCode::ParseError, fmt::format("'{}' must be an object", key));
  return s;
}

const Json& array_at(const Json& doc, const std::string& key, const std::string& ctx) {
  static const Json empty = Json::array();
  if (!doc.contains(key) || doc.at(key).is_null()) return empty;
  const Json& a = doc.at(key);
  if (!a.is_array()) throw Error(ErrorCode::ParseError, fmt::format("'{}{}' must be an array", ctx, key));
  return a;
}

Ticks parse_ticks(const Json& j) {
  const std::string c = "ticks.";
  Ticks t;
  t.nonrt = ms_or(j, "nonrt_ms", t.nonrt, c);
  t.nearrt = ms_or(j, "nearrt_ms", t.nearrt, c);
  t.sample = ms_or(j, "sample_ms", t.sample, c);
  t.heartbeat = ms_or(j, "heartbeat_ms", t.heartbeat, c);
  return t;
}

channel::ChannelParams parse_channel(const Json& j) {
  const std::string c = "channel.";
  channel::ChannelParams p;
  p.ground.exponent = optional_or(j, "exponent", p.ground.exponent, c);
  p.ground.d0_m = optional_or(j, "d0_m", p.ground.d0_m, c);
  p.ground.blockage_penalty_db = optional_or(j, "blockage_penalty_db", p.ground.blockage_penalty_db, c);
  p.air_exponent = optional_or(j, "air_exponent", p.air_exponent, c);
  p.bandwidth_hz = optional_or(j, "bandwidth_hz", p.bandwidth_hz, c);
  p.noise_figure_db = optional_or(j, "noise_figure_db", p.noise_figure_db, c);
  p.element_gain_db = optional_or(j, "element_gain_db", p.element_gain_db, c);
  p.scatter_floor = optional_or(j, "scatter_floor", p.scatter_floor, c);
  p.rayleigh_fading = optional_or(j, "rayleigh_fading", p.rayleigh_fading, c);
  if (j.contains("mcs")) {
    std::vector<channel::McsEntry> entries;
    for (const auto& row : array_at(j, "mcs", c)) {
      if (!row.is_array() || row.size() != 2) {
        throw Error(ErrorCode::ParseError, "channel.mcs rows must be [min_snr_db, rate_mbps]");
      }
      entries.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    try {
      p.mcs = channel::McsTable(std::move(entries));
    } catch (const Error& e) {
      throw Error(ErrorCode::ValidationError, fmt::format("channel.mcs: {}", e.detail()));
    }
  }
  if (!(p.ground.d0_m > 0.0) || !(p.ground.exponent > 0.0) || !(p.air_exponent > 0.0) ||
      !(p.bandwidth_hz > 0.0)) {
    throw Error(ErrorCode::ValidationError,
                "channel exponents, reference distance and bandwidth must be > 0");
  }
  return p;
}

CfmimoParams parse_cfmimo(const Json& j) {
  const std::string c = "cfmimo.";
  CfmimoParams p;
  p.cluster_size = optional_or(j, "cluster_size", p.cluster_size, c);
  p.realizations = optional_or(j, "realizations", p.realizations, c);
  if (j.contains("noise_dbm") && !j.at("noise_dbm").is_null()) {
    p.noise_dbm = require<double>(j, "noise_dbm", c);
  }
  p.redraw_each_sample = optional_or(j, "redraw_each_sample", p.redraw_each_sample, c);
  return p;
}

BackhaulParams parse_backhaul(const Json& j) {
  const std::string c = "planner.backhaul.";
  BackhaulParams p;
  p.freq_ghz = optional_or(j, "freq_ghz", p.freq_ghz, c);
  p.tx_power_dbm = optional_or(j, "tx_power_dbm", p.tx_power_dbm, c);
  p.antenna_gain_db = optional_or(j, "antenna_gain_db", p.antenna_gain_db, c);
  p.bandwidth_hz = optional_or(j, "bandwidth_hz", p.bandwidth_hz, c);
  p.noise_figure_db = optional_or(j, "noise_figure_db", p.noise_figure_db, c);
  p.snr_threshold_db = optional_or(j, "snr_threshold_db", p.snr_threshold_db, c);
  p.exponent = optional_or(j, "exponent", p.exponent, c);
  p.blockage_penalty_db = optional_or(j, "blockage_penalty_db", p.blockage_penalty_db, c);
  p.relay_rows = optional_or(j, "relay_rows", p.relay_rows, c);
  p.relay_cols = optional_or(j, "relay_cols", p.relay_cols, c);
  p.relay_element_gain_db = optional_or(j, "relay_element_gain_db", p.relay_element_gain_db, c);
  return p;
}

PlannerParams parse_planner(const Json& j) {
  const std::string c = "planner.";
  PlannerParams p;
  p.snr_threshold_db = optional_or(j, "snr_threshold_db", p.snr_threshold_db, c);
  p.uav_altitude_m = optional_or(j, "uav_altitude_m", p.uav_altitude_m, c);
  p.lattice_spacing_m = optional_or(j, "lattice_spacing_m", p.lattice_spacing_m, c);
  p.max_nodes = optional_or(j, "max_nodes", p.max_nodes, c);
  p.uav_tx_power_dbm = optional_or(j, "uav_tx_power_dbm", p.uav_tx_power_dbm, c);
  p.uav_freq_ghz = optional_or(j, "uav_freq_ghz", p.uav_freq_ghz, c);
  p.deploy_time = ms_or(j, "deploy_time_ms", p.deploy_time, c);
  p.satellite_snr_db = optional_or(j, "satellite_snr_db", p.satellite_snr_db, c);
  p.satellite_cost_db = optional_or(j, "satellite_cost_db", p.satellite_cost_db, c);
  p.relay_corner_offset_m = optional_or(j, "relay_corner_offset_m", p.relay_corner_offset_m, c);
  const Json& sites = array_at(j, "ris_relay_sites", c);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    p.ris_relay_sites.push_back(vec3_from_json(sites[i], fmt::format("{}ris_relay_sites[{}]", c, i)));
  }
  if (j.contains("area") && !j.at("area").is_null()) p.area = box_from_json(j.at("area"), c + "area");
  p.backhaul = parse_backhaul(section(j, "backhaul"));
  if (!(p.lattice_spacing_m > 0.0)) throw Error(ErrorCode::ValidationError, "planner lattice spacing > 0");
  if (!(p.uav_altitude_m > 0.0)) throw Error(ErrorCode::ValidationError, "planner UAV altitude > 0");
  return p;
}

RicParams parse_ric(const Json& j) {
  const std::string c = "ric.";
  RicParams p;
  p.apps = optional_or(j, "apps", p.apps, c);
  p.disabled = optional_or(j, "disabled", p.disabled, c);
  p.policy = optional_or(j, "policy", p.policy, c);
  const Json& sched = array_at(j, "schedule", c);
  for (std::size_t i = 0; i < sched.size(); ++i) {
    const std::string sc = fmt::format("{}schedule[{}].", c, i);
    p.schedule.push_back({sim::SimTime{require<std::int64_t>(sched[i], "at_ms", sc)},
                          require<std::string>(sched[i], "policy", sc)});
  }
  if (j.contains("intervals_ms")) {
    const Json& iv = j.at("intervals_ms");
    if (!iv.is_object()) throw Error(ErrorCode::ParseError, "'ric.intervals_ms' must be an object");
    for (const auto& item : iv.items()) {
      const std::string name = item.key();
      p.intervals[name] = sim::SimTime{require<std::int64_t>(iv, name, c + "intervals_ms.")};
    }
  }
  return p;
}

SurgeCurve parse_surge(const Json& j, const std::string& key, const SurgeCurve& fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  const std::string c = "traffic." + key + ".";
  const Json& s = j.at(key);
  if (s.is_array()) {
    SurgeCurve curve;
    for (const auto& row : s) {
      if (!row.is_array() || row.size() != 2) {
        throw Error(ErrorCode::ParseError, fmt::format("traffic.{} knots must be [ms, multiplier]", key));
      }
      curve.knots.push_back({sim::SimTime{row[0].get<std::int64_t>()}, row[1].get<double>()});
    }
    return curve;
  }
  SurgeShape shape;
  shape.peak = require<double>(s, "peak", c);
  shape.rise = ms_or(s, "rise_ms", shape.rise, c);
  shape.plateau = ms_or(s, "plateau_ms", shape.plateau, c);
  shape.decay = ms_or(s, "decay_ms", shape.decay, c);
  shape.floor = optional_or(s, "floor", shape.floor, c);
  return make_surge_curve(shape);
}

TrafficProfile parse_traffic(const Json& j) {
  const std::string c = "traffic.";
  TrafficProfile t;
  t.data_mbps = optional_or(j, "data_mbps", t.data_mbps, c);
  t.voice_mbps = optional_or(j, "voice_mbps", t.voice_mbps, c);
  t.data = parse_surge(j, "data_surge", t.data);
  t.voice = parse_surge(j, "voice_surge", t.voice);
  return t;
}

Node parse_node(const Json& j, std::size_t i) {
  const std::string c = fmt::format("nodes[{}].", i);
  Node n;
  n.id = require<NodeId>(j, "id", c);
  const auto kind = require<std::string>(j, "kind", c);
  const auto k = parse_node_kind(kind);
  if (!k) throw Error(ErrorCode::ParseError, fmt::format("{}kind: unknown node kind '{}'", c, kind));
  n.kind = *k;
  if (!j.contains("position")) throw Error(ErrorCode::ParseError, fmt::format("missing key '{}position'", c));
  n.position = vec3_from_json(j.at("position"), c + "position");
  const auto status = optional_or<std::string>(j, "status", "Operational", c);
  const auto s = parse_node_status(status);
  if (!s) throw Error(ErrorCode::ParseError, fmt::format("{}status: unknown status '{}'", c, status));
  n.status = *s;
  n.tx_power_dbm = optional_or(j, "tx_power_dbm", n.tx_power_dbm, c);
  n.freq_ghz = optional_or(j, "freq_ghz", n.freq_ghz, c);
  n.battery_ms = optional_or(j, "battery_ms", n.battery_ms, c);
  return n;
}

std::vector<NodeId> id_list(const Json& j, const std::string& key, const std::string& ctx) {
  return optional_or<std::vector<NodeId>>(j, key, {}, ctx);
}

std::vector<Box> box_list(const Json& j, const std::string& key, const std::string& ctx) {
  std::vector<Box> out;
  const Json& a = array_at(j, key, ctx);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(box_from_json(a[i], fmt::format("{}{}[{}]", ctx, key, i)));
  }
  return out;
}

std::vector<channel::RisState> parse_states(const Json& j, const std::string& c) {
  if (!j.contains("states") || j.at("states").is_null()) return channel::polarization_phase_states();
  const Json& s = j.at("states");
  if (s.is_string()) {
    const auto name = s.get<std::string>();
    if (name == "polarization") {
      return channel::polarization_phase_states(optional_or(j, "cross_pol_amplitude", 0.5, c));
    }
    if (name == "binary") return channel::binary_phase_states();
    throw Error(ErrorCode::ParseError, fmt::format("{}states: unknown state set '{}'", c, name));
  }
  if (!s.is_array()) throw Error(ErrorCode::ParseError, fmt::format("{}states must be a name or a list", c));
  std::vector<channel::RisState> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string sc = fmt::format("{}states[{}].", c, i);
    channel::RisState st;
    st.phase_rad = require<double>(s[i], "phase_rad", sc);
    st.amplitude = optional_or(s[i], "amplitude", 1.0, sc);
    st.label = optional_or<std::string>(s[i], "label", fmt::format("s{}", i), sc);
    out.push_back(st);
  }
  return out;
}

RisPanelSpec parse_panel(const Json& j, std::size_t i) {
  const std::string c = fmt::format("panels[{}].", i);
  RisPanelSpec p;
  p.node = require<NodeId>(j, "node", c);
  p.rows = require<std::size_t>(j, "rows", c);
  p.cols = require<std::size_t>(j, "cols", c);
  p.pitch_m = optional_or(j, "pitch_m", p.pitch_m, c);
  if (j.contains("column_axis")) p.column_axis = vec3_from_json(j.at("column_axis"), c + "column_axis");
  if (j.contains("row_axis")) p.row_axis = vec3_from_json(j.at("row_axis"), c + "row_axis");
  if (!(norm(cross(p.column_axis, p.row_axis)) > 0.0)) {
    throw Error(ErrorCode::ValidationError, fmt::format("{}column_axis and row_axis must not be parallel", c));
  }
  p.column_axis = normalized(p.column_axis);
  p.row_axis = normalized(p.row_axis);
  p.states = parse_states(j, c);
  p.parts = optional_or<std::vector<std::vector<std::size_t>>>(j, "parts", {}, c);
  const Json& pu = array_at(j, "part_ue", c);
  for (std::size_t k = 0; k < pu.size(); ++k) {
    const std::string pc = fmt::format("{}part_ue[{}].", c, k);
    p.part_ue[require<std::size_t>(pu[k], "part", pc)] = require<NodeId>(pu[k], "ue", pc);
  }
  const Json& cbs = array_at(j, "codebooks", c);
  for (std::size_t k = 0; k < cbs.size(); ++k) {
    const std::string cc = fmt::format("{}codebooks[{}].", c, k);
    PartCodebookSpec cb;
    cb.part = optional_or<std::size_t>(cbs[k], "part", 0, cc);
    cb.tx = require<NodeId>(cbs[k], "tx", cc);
    cb.radius_m = optional_or(cbs[k], "radius_m", cb.radius_m, cc);
    cb.angles_deg = require<std::vector<double>>(cbs[k], "angles_deg", cc);
    p.codebooks.push_back(std::move(cb));
  }
  return p;
}

Json ticks_to_json(const Ticks& t) {
  return {{"nonrt_ms", t.nonrt.ms}, {"nearrt_ms", t.nearrt.ms}, {"sample_ms", t.sample.ms},
          {"heartbeat_ms", t.heartbeat.ms}};
}

Json channel_to_json(const channel::ChannelParams& p) {
  Json mcs = Json::array();
  for (const auto& e : p.mcs.entries()) mcs.push_back({e.min_snr_db, e.rate_mbps});
  return {{"exponent", p.ground.exponent},
          {"d0_m", p.ground.d0_m},
          {"blockage_penalty_db", p.ground.blockage_penalty_db},
          {"air_exponent", p.air_exponent},
          {"bandwidth_hz", p.bandwidth_hz},
          {"noise_figure_db", p.noise_figure_db},
          {"element_gain_db", p.element_gain_db},
          {"scatter_floor", p.scatter_floor},
          {"rayleigh_fading", p.rayleigh_fading},
          {"mcs", mcs}};
}

Json planner_to_json(const PlannerParams& p) {
  Json sites = Json::array();
  for (const auto& s : p.ris_relay_sites) sites.push_back(vec3_to_json(s));
  const auto& b = p.backhaul;
  Json j = {{"snr_threshold_db", p.snr_threshold_db},
            {"uav_altitude_m", p.uav_altitude_m},
            {"lattice_spacing_m", p.lattice_spacing_m},
            {"max_nodes", p.max_nodes},
            {"uav_tx_power_dbm", p.uav_tx_power_dbm},
            {"uav_freq_ghz", p.uav_freq_ghz},
            {"deploy_time_ms", p.deploy_time.ms},
            {"satellite_snr_db", p.satellite_snr_db},
            {"satellite_cost_db", p.satellite_cost_db},
            {"relay_corner_offset_m", p.relay_corner_offset_m},
            {"ris_relay_sites", sites},
            {"backhaul",
             {{"freq_ghz", b.freq_ghz},
              {"tx_power_dbm", b.tx_power_dbm},
              {"antenna_gain_db", b.antenna_gain_db},
              {"bandwidth_hz", b.bandwidth_hz},
              {"noise_figure_db", b.noise_figure_db},
              {"snr_threshold_db", b.snr_threshold_db},
              {"exponent", b.exponent},
              {"blockage_penalty_db", b.blockage_penalty_db},
              {"relay_rows", b.relay_rows},
              {"relay_cols", b.relay_cols},
              {"relay_element_gain_db", b.relay_element_gain_db}}}};
  if (p.area) j["area"] = box_to_json(*p.area);
  return j;
}

Json surge_to_json(const SurgeCurve& s) {
  Json a = Json::array();
  for (const auto& k : s.knots) a.push_back({k.since_strike.ms, k.multiplier});
  return a;
}

Json panel_to_json(const RisPanelSpec& p) {
  Json states = Json::array();
  for (const auto& s : p.states) {
    states.push_back({{"phase_rad", s.phase_rad}, {"amplitude", s.amplitude}, {"label", s.label}});
  }
  Json part_ue = Json::array();
  for (const auto& [part, ue] : p.part_ue) part_ue.push_back({{"part", part}, {"ue", ue}});
  Json cbs = Json::array();
  for (const auto& cb : p.codebooks) {
    cbs.push_back({{"part", cb.part}, {"tx", cb.tx}, {"radius_m", cb.radius_m},
                   {"angles_deg", cb.angles_deg}});
  }
  return {{"node", p.node},
          {"rows", p.rows},
          {"cols", p.cols},
          {"pitch_m", p.pitch_m},
          {"column_axis", vec3_to_json(p.column_axis)},
          {"row_axis", vec3_to_json(p.row_axis)},
          {"states", states},
          {"parts", p.parts},
          {"part_ue", part_ue},
          {"codebooks", cbs}};
}

Json boxes_to_json(const std::vector<Box>& boxes) {
  Json a = Json::array();
  for (const auto& b : boxes) a.push_back(box_to_json(b));
  return a;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Scenario scenario_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "scenario document must be an object");
  Scenario s;
  s.name = optional_or<std::string>(doc, "name", s.name, "");
  s.seed = optional_or<std::uint64_t>(doc, "seed", s.seed, "");
  s.ticks = parse_ticks(section(doc, "ticks"));
  s.battery_reserve = ms_or(doc, "battery_reserve_ms", s.battery_reserve, "");
  s.channel = parse_channel(section(doc, "channel"));
  s.cfmimo = parse_cfmimo(section(doc, "cfmimo"));
  s.planner = parse_planner(section(doc, "planner"));
  s.ric = parse_ric(section(doc, "ric"));
  const Json& rec = section(doc, "recovery");
  s.recovery.target_fraction = optional_or(rec, "target_fraction", s.recovery.target_fraction, "recovery.");
  s.recovery.hold = ms_or(rec, "hold_ms", s.recovery.hold, "recovery.");
  s.traffic = parse_traffic(section(doc, "traffic"));

  const Json& nodes = array_at(doc, "nodes", "");
  for (std::size_t i = 0; i < nodes.size(); ++i) s.nodes.push_back(parse_node(nodes[i], i));
  s.obstacles = box_list(doc, "obstacles", "");
  const Json& dis = array_at(doc, "disasters", "");
  for (std::size_t i = 0; i < dis.size(); ++i) {
    const std::string c = fmt::format("disasters[{}].", i);
    DisasterEvent d;
    d.strike = sim::SimTime{require<std::int64_t>(dis[i], "strike_ms", c)};
    d.failed = id_list(dis[i], "failed", c);
    d.power_loss = id_list(dis[i], "power_loss", c);
    d.blockers = box_list(dis[i], "blockers", c);
    s.disasters.push_back(std::move(d));
  }
  const Json& panels = array_at(doc, "panels", "");
  for (std::size_t i = 0; i < panels.size(); ++i) s.panels.push_back(parse_panel(panels[i], i));
  const Json& traj = array_at(doc, "trajectories", "");
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const std::string c = fmt::format("trajectories[{}].", i);
    Trajectory t;
    t.ue = require<NodeId>(traj[i], "ue", c);
    const Json& wps = array_at(traj[i], "waypoints", c);
    for (std::size_t k = 0; k < wps.size(); ++k) {
      const std::string wc = fmt::format("{}waypoints[{}].", c, k);
      if (!wps[k].contains("position")) {
        throw Error(ErrorCode::ParseError, fmt::format("missing key '{}position'", wc));
      }
      t.waypoints.push_back({sim::SimTime{require<std::int64_t>(wps[k], "at_ms", wc)},
                             vec3_from_json(wps[k].at("position"), wc + "position")});
    }
    s.trajectories.push_back(std::move(t));
  }
  s.validate();
  return s;
}

Scenario scenario_from_json_text(const std::string& text, const std::string& source) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    throw Error(ErrorCode::ParseError, fmt::format("{}:{}:{}: {}", source, line, col, e.what()));
  }
  try {
    return scenario_from_json(doc);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", source, e.detail()));
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, fmt::format("cannot open scenario '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str(), path.string());
}

Json to_json(const Scenario& s) {
  Json nodes = Json::array();
  for (const auto& n : s.nodes) {
    Json j = {{"id", n.id},
              {"kind", std::string(to_string(n.kind))},
              {"position", vec3_to_json(n.position)},
              {"status", std::string(to_string(n.status))},
              {"tx_power_dbm", n.tx_power_dbm},
              {"freq_ghz", n.freq_ghz}};
    if (n.battery_ms != 0) j["battery_ms"] = n.battery_ms;
    nodes.push_back(std::move(j));
  }
  Json disasters = Json::array();
  for (const auto& d : s.disasters) {
    disasters.push_back({{"strike_ms", d.strike.ms},
                         {"failed", d.failed},
                         {"power_loss", d.power_loss},
                         {"blockers", boxes_to_json(d.blockers)}});
  }
  Json panels = Json::array();
  for (const auto& p : s.panels) panels.push_back(panel_to_json(p));
  Json traj = Json::array();
  for (const auto& t : s.trajectories) {
    Json wps = Json::array();
    for (const auto& w : t.waypoints) wps.push_back({{"at_ms", w.at.ms}, {"position", vec3_to_json(w.position)}});
    traj.push_back({{"ue", t.ue}, {"waypoints", wps}});
  }
  Json schedule = Json::array();
  for (const auto& c : s.ric.schedule) schedule.push_back({{"at_ms", c.at.ms}, {"policy", c.policy}});
  Json intervals = Json::object();
  for (const auto& [name, t] : s.ric.intervals) intervals[name] = t.ms;

  Json cf = {{"cluster_size", s.cfmimo.cluster_size},
             {"realizations", s.cfmimo.realizations},
             {"redraw_each_sample", s.cfmimo.redraw_each_sample}};
  if (s.cfmimo.noise_dbm) cf["noise_dbm"] = *s.cfmimo.noise_dbm;

  return {{"name", s.name},
          {"seed", s.seed},
          {"ticks", ticks_to_json(s.ticks)},
          {"battery_reserve_ms", s.battery_reserve.ms},
          {"channel", channel_to_json(s.channel)},
          {"cfmimo", cf},
          {"planner", planner_to_json(s.planner)},
          {"ric",
           {{"apps", s.ric.apps},
            {"disabled", s.ric.disabled},
            {"policy", s.ric.policy},
            {"schedule", schedule},
            {"intervals_ms", intervals}}},
          {"recovery", {{"target_fraction", s.recovery.target_fraction}, {"hold_ms", s.recovery.hold.ms}}},
          {"traffic",
           {{"data_mbps", s.traffic.data_mbps},
            {"voice_mbps", s.traffic.voice_mbps},
            {"data_surge", surge_to_json(s.traffic.data)},
            {"voice_surge", surge_to_json(s.traffic.voice)}}},
          {"nodes", nodes},
          {"obstacles", boxes_to_json(s.obstacles)},
          {"disasters", disasters},
          {"panels", panels},
          {"trajectories", traj}};
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, fmt::format("cannot write scenario '{}'", path.string()));
  out << to_json(scenario).dump(2) << '\n';
}

}  // namespace rrs::scenario
