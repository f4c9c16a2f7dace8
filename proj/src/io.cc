// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "decoy/io.h"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "decoy/errors.h"

namespace decoy {
namespace {

[[noreturn]] void Schema(const std::string& where, const std::string& what) {
  throw DecoyError(ErrorCode::kSchemaError, where + ": " + what);
}

const Json& Field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) Schema(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Schema(where, std::string("missing field '") + key + "'");
  return *it;
}

Player ParseOwner(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "P1" || s == "p1" || s == "1") return Player::kP1;
    if (s == "P2" || s == "p2" || s == "2") return Player::kP2;
  } else if (j.is_number_integer()) {
    const int v = j.get<int>();
    if (v == 1) return Player::kP1;
    if (v == 2) return Player::kP2;
  }
  Schema(where, "owner must be \"P1\" or \"P2\"");
}

std::uint64_t ParseIndex(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    Schema(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

StateId ResolveState(const GameGraph& g, const Json& ref,
                     const std::string& where) {
  if (ref.is_string()) {
    if (auto id = g.FindState(ref.get<std::string>())) return *id;
    Schema(where, "unknown state '" + ref.get<std::string>() + "'");
  }
  if (ref.is_number()) {
    const std::uint64_t id = ParseIndex(ref, where);
    if (id < g.num_states()) return static_cast<StateId>(id);
    Schema(where, "unknown state id " + std::to_string(id));
  }
  Schema(where, "state reference must be an id or a name");
}

ActionId ResolveAction(const GameGraph& g, const Json& ref, Player owner,
                       const std::string& where) {
  if (ref.is_string()) {
    if (auto id = g.FindAction(ref.get<std::string>(), owner)) return *id;
    Schema(where, "unknown " + std::string(PlayerName(owner)) + " action '" +
                      ref.get<std::string>() + "'");
  }
  if (ref.is_number()) {
    const std::uint64_t id = ParseIndex(ref, where);
    if (id < g.num_actions()) return static_cast<ActionId>(id);
    Schema(where, "unknown action id " + std::to_string(id));
  }
  Schema(where, "action reference must be an id or a name");
}

Cell ParseCell(const Json& j, const std::string& where) {
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer())
    return {j[0].get<int>(), j[1].get<int>()};
  if (j.is_object() && j.contains("row") && j.contains("col"))
    return {j["row"].get<int>(), j["col"].get<int>()};
  Schema(where, "cell must be [row, col]");
}

std::vector<Cell> ParseCells(const Json& j, const std::string& where) {
  std::vector<Cell> out;
  if (!j.is_array()) Schema(where, "expected an array of cells");
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(ParseCell(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json CellJson(Cell c) { return Json::array({c.row, c.col}); }

Json CellsJson(const std::vector<Cell>& cells) {
  Json out = Json::array();
  for (Cell c : cells) out.push_back(CellJson(c));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gridworld config

GridworldConfig GridworldConfigFromJson(const Json& j) {
  if (!j.is_object()) Schema("grid", "expected an object");
  GridworldConfig cfg;
  try {
    cfg.rows = j.value("rows", cfg.rows);
    cfg.cols = j.value("cols", cfg.cols);
    cfg.mouse_first = j.value("mouse_first", cfg.mouse_first);
  } catch (const Json::exception& e) {
    Schema("grid", e.what());
  }
  if (j.contains("obstacles")) cfg.obstacles = ParseCells(j["obstacles"], "grid.obstacles");
  if (j.contains("cheese")) cfg.cheese = ParseCells(j["cheese"], "grid.cheese");
  if (j.contains("cat_start")) cfg.cat_start = ParseCell(j["cat_start"], "grid.cat_start");
  if (j.contains("mouse_start"))
    cfg.mouse_start = ParseCell(j["mouse_start"], "grid.mouse_start");
  return cfg;
}

Json GridworldConfigToJson(const GridworldConfig& cfg) {
  Json j;
  j["rows"] = cfg.rows;
  j["cols"] = cfg.cols;
  j["obstacles"] = CellsJson(cfg.obstacles);
  j["cheese"] = CellsJson(cfg.cheese);
  j["mouse_first"] = cfg.mouse_first;
  if (cfg.cat_start) j["cat_start"] = CellJson(*cfg.cat_start);
  if (cfg.mouse_start) j["mouse_start"] = CellJson(*cfg.mouse_start);
  return j;
}

GameDocument DocumentFromGridworld(const Gridworld& world) {
  GameDocument doc;
  doc.game = world.game;
  doc.grid = world.config;
  std::vector<std::size_t> index;
  doc.groups = world.CandidatePool(&index);
  for (std::size_t i : index) doc.group_cells.push_back(world.cells[i].cell);
  return doc;
}

// ---------------------------------------------------------------------------
// Game documents

GameDocument GameFromJson(const Json& doc, bool validate) {
  if (!doc.is_object()) Schema("document", "expected a JSON object");
  if (doc.contains("version")) {
    const Json& v = doc["version"];
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
      Schema("version", "unsupported schema version " + v.dump());
  }
  GameDocument out;
  GameGraph& g = out.game;

  const Json& states = Field(doc, "states", "document");
  if (!states.is_array()) Schema("states", "expected an array");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string where = "states[" + std::to_string(i) + "]";
    const Json& st = states[i];
    if (st.contains("id") && ParseIndex(st["id"], where + ".id") != i)
      Schema(where, "ids must be 0..n-1 in order");
    std::string name;
    if (st.contains("name")) {
      if (!st["name"].is_string()) Schema(where + ".name", "expected a string");
      name = st["name"].get<std::string>();
    }
    g.AddState(ParseOwner(Field(st, "owner", where), where + ".owner"), name);
  }

  const Json& actions = Field(doc, "actions", "document");
  if (!actions.is_array()) Schema("actions", "expected an array");
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const std::string where = "actions[" + std::to_string(i) + "]";
    const Json& ac = actions[i];
    if (ac.contains("id") && ParseIndex(ac["id"], where + ".id") != i)
      Schema(where, "ids must be 0..n-1 in order");
    std::string name;
    if (ac.contains("name")) {
      if (!ac["name"].is_string()) Schema(where + ".name", "expected a string");
      name = ac["name"].get<std::string>();
    }
    g.AddAction(ParseOwner(Field(ac, "owner", where), where + ".owner"), name);
  }

  const Json& transitions = Field(doc, "transitions", "document");
  if (!transitions.is_array()) Schema("transitions", "expected an array");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const std::string where = "transitions[" + std::to_string(i) + "]";
    const Json& tr = transitions[i];
    const StateId from = ResolveState(g, Field(tr, "from", where), where + ".from");
    const ActionId action = ResolveAction(g, Field(tr, "action", where),
                                          g.owner(from), where + ".action");
    const StateId to = ResolveState(g, Field(tr, "to", where), where + ".to");
    g.AddTransition(from, action, to);
  }

  if (doc.contains("initial"))
    g.SetInitial(ResolveState(g, doc["initial"], "initial"));
  const Json& finals = Field(doc, "finals", "document");
  if (!finals.is_array()) Schema("finals", "expected an array");
  StateSet fin(g.num_states());
  for (std::size_t i = 0; i < finals.size(); ++i)
    fin.insert(ResolveState(g, finals[i], "finals[" + std::to_string(i) + "]"));
  g.SetFinals(fin);

  if (doc.contains("grid")) out.grid = GridworldConfigFromJson(doc["grid"]);
  if (doc.contains("candidate_groups")) {
    const Json& groups = doc["candidate_groups"];
    if (!groups.is_array()) Schema("candidate_groups", "expected an array");
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const std::string where = "candidate_groups[" + std::to_string(i) + "]";
      CandidateGroup group;
      group.name = groups[i].value("name", std::to_string(i));
      const Json& members = Field(groups[i], "members", where);
      if (!members.is_array()) Schema(where + ".members", "expected an array");
      for (std::size_t k = 0; k < members.size(); ++k)
        group.members.push_back(ResolveState(
            g, members[k], where + ".members[" + std::to_string(k) + "]"));
      std::sort(group.members.begin(), group.members.end());
      out.groups.push_back(std::move(group));
      out.group_cells.push_back(
          groups[i].contains("cell")
              ? std::optional<Cell>(ParseCell(groups[i]["cell"], where + ".cell"))
              : std::nullopt);
    }
  }

  if (validate) {
    const auto violations = ValidateGame(g);
    if (!violations.empty()) {
      std::string msg = std::to_string(violations.size()) + " violation(s)";
      for (const Violation& v : violations) msg += "; " + v.message;
      throw DecoyError(ErrorCode::kValidationError, msg);
    }
  }
  return out;
}

Json GameToJson(const GameDocument& doc) {
  const GameGraph& g = doc.game;
  Json j;
  j["version"] = kSchemaVersion;
  Json states = Json::array();
  for (StateId s = 0; s < g.num_states(); ++s) {
    Json st;
    st["id"] = s;
    if (!g.state_name(s).empty()) st["name"] = g.state_name(s);
    st["owner"] = PlayerName(g.owner(s));
    states.push_back(std::move(st));
  }
  j["states"] = std::move(states);
  Json actions = Json::array();
  for (ActionId a = 0; a < g.num_actions(); ++a) {
    Json ac;
    ac["id"] = a;
    if (!g.action_name(a).empty()) ac["name"] = g.action_name(a);
    ac["owner"] = PlayerName(g.action_owner(a));
    actions.push_back(std::move(ac));
  }
  j["actions"] = std::move(actions);
  Json transitions = Json::array();
  for (StateId s = 0; s < g.num_states(); ++s)
    for (const Edge& e : g.out(s))
      transitions.push_back({{"from", s}, {"action", e.action}, {"to", e.to}});
  j["transitions"] = std::move(transitions);
  j["initial"] = g.initial();
  j["finals"] = g.finals().ToVector();
  if (doc.grid) j["grid"] = GridworldConfigToJson(*doc.grid);
  if (!doc.groups.empty()) {
    Json groups = Json::array();
    for (std::size_t i = 0; i < doc.groups.size(); ++i) {
      Json gr;
      gr["name"] = doc.groups[i].name;
      gr["members"] = doc.groups[i].members;
      if (i < doc.group_cells.size() && doc.group_cells[i])
        gr["cell"] = CellJson(*doc.group_cells[i]);
      groups.push_back(std::move(gr));
    }
    j["candidate_groups"] = std::move(groups);
  }
  return j;
}

Json GameToJson(const GameGraph& g) {
  GameDocument doc;
  doc.game = g;
  return GameToJson(doc);
}

GameDocument ParseGameText(const std::string& text, bool validate) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DecoyError(ErrorCode::kParseError, e.what());
  }
  try {
    return GameFromJson(doc, validate);
  } catch (const Json::exception& e) {
    throw DecoyError(ErrorCode::kSchemaError, e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecoyError(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DecoyError(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw DecoyError(ErrorCode::kIoError, "write failed: " + path);
}

GameDocument LoadGame(const std::string& path, bool validate) {
  return ParseGameText(ReadTextFile(path), validate);
}

void SaveGame(const GameDocument& doc, const std::string& path) {
  WriteTextFile(path, GameToJson(doc).dump(2) + "\n");
}

std::vector<StateId> ParseStateList(const GameGraph& g, const std::string& text) {
  std::vector<StateId> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    auto id = g.FindState(item);
    if (!id) throw DecoyError(ErrorCode::kUnknownState, "unknown state '" + item + "'");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Result emission

Json StateListJson(const GameGraph& g, const StateSet& set) {
  Json out = Json::array();
  set.ForEach([&](StateId s) { out.push_back(g.StateLabel(s)); });
  return out;
}

Json VodJson(const Vod& vod) {
  return {{"region", vod.region}, {"denominator", vod.denom}, {"value", vod.value()}};
}

Json SolveJson(const GameGraph& g, const SolveResult& res) {
  Json j;
  j["num_states"] = g.num_states();
  j["num_transitions"] = g.num_transitions();
  j["reacher"] = PlayerName(res.reacher);
  j["target"] = StateListJson(g, res.target);
  Json ranks = Json::object();
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (res.rank[s] == kInfiniteRank) {
      ranks[g.StateLabel(s)] = "inf";
    } else {
      ranks[g.StateLabel(s)] = res.rank[s];
    }
  }
  j["ranks"] = std::move(ranks);
  Json levels = Json::array();
  for (const StateSet& z : res.levels) levels.push_back(z.count());
  j["level_sizes"] = std::move(levels);
  const bool p2_reaches = res.reacher == Player::kP2;
  j["win1"] = StateListJson(g, p2_reaches ? res.win_opponent : res.win_reacher);
  j["win2"] = StateListJson(g, p2_reaches ? res.win_reacher : res.win_opponent);
  return j;
}

Json ViolationsJson(const GameGraph& g, const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const Violation& x : v) {
    Json e;
    e["kind"] = ViolationKindName(x.kind);
    if (x.state != kNoState) e["state"] = g.StateLabel(x.state);
    if (x.action) e["action"] = g.ActionLabel(*x.action);
    e["message"] = x.message;
    out.push_back(std::move(e));
  }
  return out;
}

Json PlacementJson(const GameGraph& g, const DecoyPlacement& p) {
  return {{"traps", StateListJson(g, StateSet::FromRange(g.num_states(), p.traps))},
          {"fakes", StateListJson(g, StateSet::FromRange(g.num_states(), p.fakes))}};
}

Json RegionJson(const GameGraph& g, Mode mode, const DecoyPlacement& p,
                const StateSet& region, const Vod& vod) {
  Json j;
  j["mode"] = ModeName(mode);
  j["placement"] = PlacementJson(g, p);
  j["region"] = StateListJson(g, region);
  j["region_ids"] = region.ToVector();
  j["vod"] = VodJson(vod);
  return j;
}

Json StrategyJson(const GameGraph& g, const StrategySupport& support) {
  Json out = Json::object();
  for (const auto& [s, acts] : support) {
    Json list = Json::array();
    for (ActionId a : acts) list.push_back(g.ActionLabel(a));
    out[g.StateLabel(s)] = std::move(list);
  }
  return out;
}

Json PlacementReportJson(const GameGraph& g, const PlacementReport& report,
                         const std::vector<std::optional<Cell>>& cells) {
  auto group_json = [&](std::size_t i) {
    Json gr;
    gr["name"] = report.candidates[i].name;
    if (i < cells.size() && cells[i]) gr["cell"] = CellJson(*cells[i]);
    return gr;
  };
  auto groups_json = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (std::size_t i : idx) out.push_back(group_json(i));
    return out;
  };
  Json j;
  j["mode"] = ModeName(report.mode);
  j["fakes"] = groups_json(report.fake_groups);
  j["traps"] = groups_json(report.trap_groups);
  j["placement"] = PlacementJson(g, report.placement);
  Json iterations = Json::array();
  for (const GreedyIteration& it : report.iterations) {
    Json ij;
    ij["kind"] = DecoyKindName(it.kind);
    ij["chosen"] = group_json(it.chosen);
    ij["best_vod"] = VodJson(it.best);
    Json heat = Json::array();
    for (const HeatEntry& h : it.heatmap) {
      Json hj = group_json(h.group);
      hj["vod"] = h.vod.value();
      hj["region"] = h.vod.region;
      heat.push_back(std::move(hj));
    }
    ij["heatmap"] = std::move(heat);
    iterations.push_back(std::move(ij));
  }
  j["iterations"] = std::move(iterations);
  j["region"] = StateListJson(g, report.final_region);
  j["vod"] = VodJson(report.final_vod);
  return j;
}

Json ExhaustiveJson(const GameGraph& g, const ExhaustiveResult& result) {
  (void)g;
  Json j;
  j["evaluated"] = result.evaluated;
  j["optimum"] = VodJson(result.optimum);
  Json best = Json::array();
  for (const ChosenGroups& c : result.best) {
    Json b;
    Json traps = Json::array(), fakes = Json::array();
    for (std::size_t i : c.trap_groups) traps.push_back(result.candidates[i].name);
    for (std::size_t i : c.fake_groups) fakes.push_back(result.candidates[i].name);
    b["traps"] = std::move(traps);
    b["fakes"] = std::move(fakes);
    best.push_back(std::move(b));
  }
  j["best"] = std::move(best);
  return j;
}

Json AuditJson(const GameGraph& g, const AuditReport& report) {
  Json j;
  j["mode"] = ModeName(report.mode);
  j["kind"] = DecoyKindName(report.kind);
  j["samples"] = report.samples.size();
  j["superadditivity_violations"] = report.superadditivity_violations;
  j["monotonicity_violations"] = report.monotonicity_violations;
  j["union_containment_violations"] = report.union_containment_violations;
  j["union_condition_everywhere"] = report.union_condition_everywhere;
  j["intersection_condition_everywhere"] = report.intersection_condition_everywhere;
  Json details = Json::array();
  for (const AuditSample& s : report.samples) {
    Json d;
    d["base"] = StateListJson(g, StateSet::FromRange(g.num_states(), s.base));
    d["s1"] = g.StateLabel(s.s1);
    d["s2"] = g.StateLabel(s.s2);
    d["base_size"] = s.base_size;
    d["single_size"] = s.single_size;
    d["grown_size"] = s.grown_size;
    d["union_size"] = s.union_size;
    d["superadditive"] = s.superadditive;
    d["monotone"] = s.monotone;
    d["union_contained"] = s.union_contained;
    d["union_condition"] = s.union_condition;
    d["intersection_condition"] = s.intersection_condition;
    details.push_back(std::move(d));
  }
  j["details"] = std::move(details);
  return j;
}

namespace {

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string HeatmapCsv(const PlacementReport& report,
                       const std::optional<GridworldConfig>& grid,
                       const std::vector<std::optional<Cell>>& cells) {
  std::ostringstream out;
  char buf[32];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return std::string(buf);
  };
  for (std::size_t k = 0; k < report.iterations.size(); ++k) {
    const GreedyIteration& it = report.iterations[k];
    out << "# iteration " << (k + 1) << " (" << DecoyKindName(it.kind) << ")\n";
    if (grid) {
      std::map<Cell, double> value;
      for (const HeatEntry& h : it.heatmap)
        if (h.group < cells.size() && cells[h.group])
          value[*cells[h.group]] = h.vod.value();
      for (int r = 0; r < grid->rows; ++r) {
        for (int c = 0; c < grid->cols; ++c) {
          if (c > 0) out << ",";
          auto v = value.find({r, c});
          out << (v == value.end() ? std::string("NA") : fmt(v->second));
        }
        out << "\n";
      }
    } else {
      out << "group,vod\n";
      for (const HeatEntry& h : it.heatmap)
        out << CsvField(report.candidates[h.group].name) << "," << fmt(h.vod.value())
            << "\n";
    }
  }
  return out.str();
}

}  // namespace decoy
