#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "egk/convergence.hpp"
#include "egk/dominance.hpp"
#include "egk/dot.hpp"
#include "egk/epistemic_types.hpp"
#include "egk/epsilon_kripke.hpp"
#include "egk/error.hpp"
#include "egk/io.hpp"
#include "egk/ordered_kripke.hpp"

namespace egk::cli {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Style {
  bool color = false;

  std::string paint(const std::string& text, const char* code) const {
    return color ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
  }
  std::string good(const std::string& t) const { return paint(t, "32"); }
  std::string bad(const std::string& t) const { return paint(t, "31"); }
  std::string head(const std::string& t) const { return paint(t, "1"); }
};

Style style_from_env() {
  const char* v = std::getenv("EGK_COLOR");
  if (v == nullptr) return {};
  const std::string s(v);
  return {!(s.empty() || s == "0" || s == "never" || s == "false")};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string set_text(const EventSet& e, const StandardKripkeModel& m) {
  std::vector<std::string> labels;
  for (int w : members(e)) labels.push_back(m.worlds[static_cast<std::size_t>(w)]);
  return "{" + join(labels, ", ") + "}";
}

std::vector<std::string> strategy_labels(const Game& g, Player p, const std::vector<int>& s) {
  std::vector<std::string> out;
  for (int x : s) out.push_back(g.strategy_label(p, x));
  return out;
}

std::string mixed_text(const Game& g, const MixedStrategy& m) {
  const auto support = m.support();
  if (support.size() == 1) return g.strategy_label(m.owner, support.front());
  std::vector<std::string> parts;
  for (int s : support) parts.push_back(to_string(m.weights(s)) + " " + g.strategy_label(m.owner, s));
  return join(parts, " + ");
}

Json mixed_json(const Game& g, const MixedStrategy& m) {
  Json out = Json::object();
  for (int s : m.support()) out[g.strategy_label(m.owner, s)] = to_string(m.weights(s));
  return out;
}

Json violations_json(const std::vector<Violation>& vs, const StandardKripkeModel& m) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json worlds = Json::array();
    for (int w : v.worlds) worlds.push_back(m.worlds[static_cast<std::size_t>(w)]);
    out.push_back({{"rule", to_string(v.rule)}, {"player", to_string(v.player)}, {"worlds", worlds},
                   {"detail", v.detail}});
  }
  return out;
}

/// Shared options and output state.
struct Context {
  bool json = false;
  Style style;
  std::ostream* out = nullptr;

  void emit(const Json& doc) const { *out << doc.dump(2) << "\n"; }
};

// ---------------------------------------------------------------- game

int game_analyze(const Context& ctx, const std::string& file, const std::string& procedure) {
  const Game game = io::load_game(file);
  std::vector<std::pair<std::string, EliminationResult>> runs;
  if (procedure == "df" || procedure == "both") runs.emplace_back("df", dekel_fudenberg(game));
  if (procedure == "iesds" || procedure == "both") runs.emplace_back("iesds", iesds(game));
  if (runs.empty()) throw InputError("unknown procedure '" + procedure + "' (df, iesds or both)");

  Json doc = Json::array();
  std::ostream& out = *ctx.out;
  for (const auto& [name, result] : runs) {
    if (ctx.json) {
      Json trace = Json::array();
      for (std::size_t r = 0; r < result.trace.rounds.size(); ++r) {
        const auto& round = result.trace.rounds[r];
        Json elim = Json::array();
        for (const auto& e : round.eliminated) {
          elim.push_back({{"player", to_string(e.player)},
                          {"strategy", game.strategy_label(e.player, e.strategy)},
                          {"dominator", mixed_json(game, e.dominator)}});
        }
        trace.push_back({{"round", r + 1}, {"phase", to_string(round.phase)}, {"eliminated", elim}});
      }
      doc.push_back({{"procedure", name},
                     {"survivors",
                      {{"1", strategy_labels(game, Player::one, result.survivors.of(Player::one))},
                       {"2", strategy_labels(game, Player::two, result.survivors.of(Player::two))}}},
                     {"trace", trace}});
      continue;
    }
    out << ctx.style.head("procedure " + name) << "\n";
    out << "round  phase   player  strategy  dominator\n";
    for (std::size_t r = 0; r < result.trace.rounds.size(); ++r) {
      const auto& round = result.trace.rounds[r];
      for (const auto& e : round.eliminated) {
        std::ostringstream row;
        row << std::left << std::setw(7) << (r + 1) << std::setw(8) << to_string(round.phase)
            << std::setw(8) << to_string(e.player) << std::setw(10)
            << game.strategy_label(e.player, e.strategy) << mixed_text(game, e.dominator);
        out << row.str() << "\n";
      }
    }
    if (result.trace.rounds.empty()) out << "(no eliminations)\n";
    out << "survivors\n";
    for (Player p : kPlayers) {
      out << "  " << to_string(p) << ": "
          << join(strategy_labels(game, p, result.survivors.of(p)), " ") << "\n";
    }
  }
  if (ctx.json) ctx.emit(runs.size() == 1 ? doc[0] : doc);
  return kOk;
}

// ---------------------------------------------------------------- model

int model_check(const Context& ctx, const std::string& file, const std::optional<std::string>& eps_text,
                const std::string& reading_text) {
  const io::ModelFile mf = io::load_model(file);
  const auto& base = mf.base;
  const TremblingReading reading = parse_trembling_reading(reading_text);
  std::string kind = "standard";
  std::vector<Violation> axioms;
  std::vector<std::pair<std::string, std::vector<Violation>>> conditions;
  Json info = Json::object();

  if (mf.ordered()) {
    kind = "ordered";
    const auto om = mf.as_ordered();
    axioms = validate_ordered(om);
    if (axioms.empty()) {
      conditions.emplace_back("caution", check_caution(om));
      conditions.emplace_back("structural", check_structural_conditions(om).violations);
      info["lambda-constant"] = check_lambda_constancy(om).empty();
    }
  }
  if (mf.probabilistic()) {
    kind = mf.ordered() ? "ordered+probabilistic" : "probabilistic";
    const auto pm = mf.as_probabilistic();
    auto v = validate_probabilistic(pm);
    if (mf.ordered()) std::erase_if(v, [](const Violation& x) { return x.rule <= Rule::sigma_constancy; });
    axioms.insert(axioms.end(), v.begin(), v.end());
    if (v.empty()) {
      conditions.emplace_back("caution (probabilistic)", check_prob_caution(pm));
      if (eps_text) {
        conditions.emplace_back("trembling", check_trembling(pm, Epsilon::parse(*eps_text), reading));
      }
    }
  }
  if (!mf.ordered() && !mf.probabilistic()) axioms = validate_standard(base);

  std::size_t total = axioms.size();
  for (const auto& c : conditions) total += c.second.size();

  if (ctx.json) {
    Json cond = Json::object();
    for (const auto& [name, vs] : conditions) cond[name] = violations_json(vs, base);
    ctx.emit({{"kind", kind},
              {"worlds", base.num_worlds()},
              {"axioms", violations_json(axioms, base)},
              {"conditions", cond},
              {"info", info},
              {"valid", total == 0}});
    return total == 0 ? kOk : kViolations;
  }
  std::ostream& out = *ctx.out;
  out << kind << " model, " << base.num_worlds() << " worlds\n";
  auto section = [&](const std::string& name, const std::vector<Violation>& vs) {
    out << name << ": " << (vs.empty() ? ctx.style.good("ok") : ctx.style.bad(std::to_string(vs.size()) + " violation(s)")) << "\n";
    for (const auto& v : vs) out << "  " << describe(v, base) << "\n";
  };
  section("axioms", axioms);
  for (const auto& [name, vs] : conditions) section(name, vs);
  for (auto it = info.begin(); it != info.end(); ++it) {
    out << it.key() << ": " << (it.value().get<bool>() ? "yes" : "no") << "\n";
  }
  return total == 0 ? kOk : kViolations;
}

/// Loads and validates; invalid models are an input error for analysis verbs.
io::ModelFile load_valid_model(const std::string& file) {
  io::ModelFile mf = io::load_model(file);
  std::vector<Violation> v;
  if (mf.ordered()) v = validate_ordered(mf.as_ordered());
  else if (mf.probabilistic()) v = validate_probabilistic(mf.as_probabilistic());
  else v = validate_standard(mf.base);
  if (!v.empty()) {
    throw InputError(file + ": invalid model: " + describe(v.front(), mf.base) +
                     (v.size() > 1 ? " (and " + std::to_string(v.size() - 1) + " more)" : ""));
  }
  return mf;
}

void write_event(const std::optional<std::string>& path, const EventSet& e, const StandardKripkeModel& m) {
  if (path) io::write_json(*path, io::event_to_json(e, m));
}

int rationality_report(const Context& ctx, const RationalitySets& r, const StandardKripkeModel& m,
                       const std::string& name, const std::optional<std::string>& event_out) {
  write_event(event_out, r.all, m);
  if (ctx.json) {
    ctx.emit({{name + "_1", io::event_list(r.of(Player::one), m)},
              {name + "_2", io::event_list(r.of(Player::two), m)},
              {name, io::event_list(r.all, m)}});
    return kOk;
  }
  *ctx.out << name << "_1 = " << set_text(r.of(Player::one), m) << "\n"
           << name << "_2 = " << set_text(r.of(Player::two), m) << "\n"
           << name << " = " << set_text(r.all, m) << "\n";
  return kOk;
}

int model_rat(const Context& ctx, const std::string& file, const std::optional<std::string>& event_out) {
  const auto mf = load_valid_model(file);
  return rationality_report(ctx, rat(mf.as_probabilistic()), mf.base, "RAT", event_out);
}

int model_lrat(const Context& ctx, const std::string& file, const std::optional<std::string>& event_out) {
  const auto mf = load_valid_model(file);
  return rationality_report(ctx, lrat(mf.as_ordered()), mf.base, "LRAT", event_out);
}

int model_operators(const Context& ctx, const std::string& file, const std::string& op,
                    const std::optional<std::string>& event_file,
                    const std::optional<std::string>& worlds_text, const std::string& player_text,
                    const std::optional<std::string>& eps_text,
                    const std::optional<std::string>& event_out) {
  const auto mf = load_valid_model(file);
  const auto& m = mf.base;
  EventSet e;
  if (event_file) {
    e = io::event_from_json(io::read_json(*event_file), m);
  } else if (worlds_text) {
    Json list = Json::array();
    std::stringstream ss(*worlds_text);
    for (std::string w; std::getline(ss, w, ',');) {
      if (!w.empty()) list.push_back(w);
    }
    e = io::event_from_json(list, m);
  } else {
    throw InputError("an event is required (--event file or --worlds w1,w2)");
  }
  const Player p = parse_player(player_text);
  auto need_eps = [&]() {
    if (!eps_text) throw InputError("operator '" + op + "' needs --eps");
    return Epsilon::parse(*eps_text);
  };

  EventSet result;
  std::string name;
  if (op == "b") {
    result = belief(m, p, e);
    name = "B_" + to_string(p);
  } else if (op == "cb") {
    result = common_belief(m, e);
    name = "CB";
  } else if (op == "b1") {
    result = level1_belief(mf.as_ordered(), p, e);
    name = "B^1_" + to_string(p);
  } else if (op == "cb1") {
    result = common_level1_belief(mf.as_ordered(), e);
    name = "CB^1";
  } else if (op == "beps") {
    const Epsilon eps = need_eps();
    result = upper_belief(mf.as_probabilistic(), p, eps, e);
    name = "B^{>" + to_string(eps.value()) + "}_" + to_string(p);
  } else if (op == "cbeps") {
    const Epsilon eps = need_eps();
    result = upper_common_belief(mf.as_probabilistic(), eps, e);
    name = "CB^{>" + to_string(eps.value()) + "}";
  } else {
    throw InputError("unknown operator '" + op + "' (b, cb, b1, cb1, beps, cbeps)");
  }
  write_event(event_out, result, m);
  if (ctx.json) {
    ctx.emit({{"operator", name}, {"input", io::event_list(e, m)}, {"event", io::event_list(result, m)}});
  } else {
    *ctx.out << name << "(" << set_text(e, m) << ") = " << set_text(result, m) << "\n";
  }
  return kOk;
}

int model_to_types(const Context& ctx, const std::string& file, const std::optional<std::string>& output) {
  const auto mf = load_valid_model(file);
  const auto extracted = extract_prob_model(mf.as_probabilistic());
  Json doc = io::to_json(extracted.model);
  Json map = Json::object();
  for (int w = 0; w < mf.base.num_worlds(); ++w) {
    map[mf.base.worlds[static_cast<std::size_t>(w)]] = {
        extracted.model.types[0][static_cast<std::size_t>(extracted.type_of_world[0][static_cast<std::size_t>(w)])],
        extracted.model.types[1][static_cast<std::size_t>(extracted.type_of_world[1][static_cast<std::size_t>(w)])]};
  }
  if (output) {
    io::write_json(*output, doc);
    if (ctx.json) {
      ctx.emit({{"written", *output}, {"world_types", map}});
    } else {
      for (auto it = map.begin(); it != map.end(); ++it) {
        *ctx.out << it.key() << " -> (" << (*it)[0].get<std::string>() << ", " << (*it)[1].get<std::string>() << ")\n";
      }
    }
    return kOk;
  }
  doc["world_types"] = map;
  ctx.emit(doc);
  return kOk;
}

// ---------------------------------------------------------------- types

template <typename Model>
Json type_rows(const Model& model, const TypeSets& survivors,
               const std::function<void(Player, int, Json&)>& extra) {
  Json out = Json::object();
  for (Player i : kPlayers) {
    Json rows = Json::array();
    for (int t = 0; t < model.num_types(i); ++t) {
      std::vector<std::string> deemed;
      for (int u : deems_possible(model, i, t)) deemed.push_back(model.types[index(opponent(i))][static_cast<std::size_t>(u)]);
      const auto& alive = survivors[index(i)];
      Json row = {{"type", model.types[index(i)][static_cast<std::size_t>(t)]},
                  {"deems_possible", deemed},
                  {"cautious", type_caution(model, i, t)},
                  {"optimal", strategy_labels(model.game, i, optimal_strategies(model, i, t))}};
      extra(i, t, row);
      row["common_full_belief"] = std::find(alive.begin(), alive.end(), t) != alive.end();
      rows.push_back(std::move(row));
    }
    out[to_string(i)] = std::move(rows);
  }
  return out;
}

int types_analyze(const Context& ctx, const std::string& file, const std::optional<std::string>& eps_text) {
  const io::TypeModel tm = io::load_types(file);
  Json doc = Json::object();
  std::array<std::vector<int>, 2> allowed;
  const Game* game = nullptr;
  if (const auto* lex = std::get_if<LexEpistemicModel>(&tm)) {
    game = &lex->game;
    const auto survivors =
        common_full_belief(*lex, conjunction(caution_property(*lex), primary_rationality_property(*lex)));
    doc["kind"] = "lexicographic";
    doc["property"] = "caution & primary belief in rationality";
    doc["types"] = type_rows(*lex, survivors, [&](Player i, int t, Json& row) {
      row["primary_belief_in_rationality"] = primary_belief_in_rationality(*lex, i, t);
    });
    allowed = permissible(*lex);
  } else {
    const auto& prob = std::get<ProbEpistemicModel>(tm);
    game = &prob.game;
    if (!eps_text) throw InputError("probabilistic type models need --eps");
    const Epsilon eps = Epsilon::parse(*eps_text);
    const auto survivors =
        common_full_belief(prob, conjunction(caution_property(prob), eps_trembling_property(prob, eps)));
    doc["kind"] = "probabilistic";
    doc["property"] = "caution & " + to_string(eps.value()) + "-perfect trembling";
    doc["types"] = type_rows(prob, survivors, [&](Player i, int t, Json& row) {
      row["eps_trembling"] = eps_trembling(prob, i, t, eps);
    });
    allowed = eps_permissible(prob, eps);
  }
  doc["permissible"] = {{"1", strategy_labels(*game, Player::one, allowed[0])},
                        {"2", strategy_labels(*game, Player::two, allowed[1])}};
  if (ctx.json) {
    ctx.emit(doc);
    return kOk;
  }
  std::ostream& out = *ctx.out;
  out << doc["kind"].get<std::string>() << " type model; property: " << doc["property"].get<std::string>() << "\n";
  auto yes = [&](const Json& v) { return v.get<bool>() ? ctx.style.good("yes") : ctx.style.bad("no"); };
  for (Player i : kPlayers) {
    out << ctx.style.head("player " + to_string(i)) << "\n";
    for (const auto& row : doc["types"][to_string(i)]) {
      out << "  " << row["type"].get<std::string>() << ": deems {"
          << join(row["deems_possible"].get<std::vector<std::string>>(), ", ") << "}, cautious "
          << yes(row["cautious"]);
      if (row.contains("primary_belief_in_rationality")) out << ", primary rationality " << yes(row["primary_belief_in_rationality"]);
      if (row.contains("eps_trembling")) out << ", trembling " << yes(row["eps_trembling"]);
      out << ", optimal {" << join(row["optimal"].get<std::vector<std::string>>(), ", ")
          << "}, common full belief " << yes(row["common_full_belief"]) << "\n";
    }
  }
  out << (std::holds_alternative<LexEpistemicModel>(tm) ? "permissible" : "eps-permissible") << "\n";
  for (Player i : kPlayers) {
    out << "  " << to_string(i) << ": " << join(doc["permissible"][to_string(i)].get<std::vector<std::string>>(), " ") << "\n";
  }
  return kOk;
}

int types_to_kripke(const Context& ctx, const std::string& file, const std::optional<std::string>& output) {
  const io::TypeModel tm = io::load_types(file);
  const auto* lex = std::get_if<LexEpistemicModel>(&tm);
  if (lex == nullptr) throw InputError(file + ": to-kripke needs a lexicographic type model");
  const Json doc = io::to_json(build_ordered_from_lex(*lex));
  if (output) {
    io::write_json(*output, doc);
    if (ctx.json) ctx.emit({{"written", *output}});
    else *ctx.out << "wrote " << *output << " (" << doc["worlds"].size() << " worlds)\n";
  } else {
    ctx.emit(doc);
  }
  return kOk;
}

// ---------------------------------------------------------------- converge

int converge(const Context& ctx, const std::string& file, const std::string& schedule_text,
             const std::string& scheme_text, const std::optional<std::string>& family_dir) {
  const auto mf = load_valid_model(file);
  const auto om = mf.as_ordered();
  const auto schedule = EpsilonSchedule::parse(schedule_text);
  const auto scheme = parse_weighting_scheme(scheme_text);
  const auto report = verify_convergence(om, schedule, scheme);
  const auto limits = check_limit_conditions(om, report.family, schedule);
  const auto& m = om.base;

  if (family_dir) {
    fs::create_directories(*family_dir);
    for (std::size_t n = 0; n < report.family.size(); ++n) {
      io::write_json(fs::path(*family_dir) / ("eps_" + std::to_string(n) + ".json"), io::to_json(report.family[n]));
    }
  }
  const int code = report.matches && limits.empty() ? kOk : kViolations;
  if (ctx.json) {
    Json rows = Json::array();
    for (std::size_t n = 0; n < report.eps.size(); ++n) {
      rows.push_back({{"n", n},
                      {"eps", to_string(report.eps[n])},
                      {"rat", io::event_list(report.rat[n], m)},
                      {"cb", io::event_list(report.cb[n], m)},
                      {"tail", io::event_list(report.tail[n], m)}});
    }
    Json lim = Json::array();
    for (const auto& v : limits) {
      lim.push_back({{"clause", v.clause}, {"n", v.n}, {"player", to_string(v.player)},
                     {"world", m.worlds[static_cast<std::size_t>(v.world)]},
                     {"other", m.worlds[static_cast<std::size_t>(v.other)]}, {"detail", v.detail}});
    }
    ctx.emit({{"scheme", to_string(scheme)},
              {"rows", rows},
              {"stabilization_index", report.stabilization_index},
              {"stabilized", io::event_list(report.stabilized, m)},
              {"cb1_lrat", io::event_list(report.level1, m)},
              {"matches", report.matches},
              {"limit_violations", lim}});
    return code;
  }
  std::ostream& out = *ctx.out;
  out << "n  eps       RAT                 CB^{>eps}(RAT)      tail\n";
  for (std::size_t n = 0; n < report.eps.size(); ++n) {
    std::ostringstream row;
    row << std::left << std::setw(3) << n << std::setw(10) << to_string(report.eps[n]) << std::setw(20)
        << set_text(report.rat[n], m) << std::setw(20) << set_text(report.cb[n], m)
        << set_text(report.tail[n], m);
    out << row.str() << "\n";
  }
  out << "stabilized from n = " << report.stabilization_index << ": " << set_text(report.stabilized, m) << "\n";
  out << "CB^1(LRAT) = " << set_text(report.level1, m) << "\n";
  out << "equal: " << (report.matches ? ctx.style.good("yes") : ctx.style.bad("no")) << "\n";
  out << "limit clauses: " << (limits.empty() ? ctx.style.good("ok") : ctx.style.bad(std::to_string(limits.size()) + " violation(s)")) << "\n";
  for (const auto& v : limits) {
    out << "  clause " << v.clause << " n=" << v.n << " player " << to_string(v.player) << " at "
        << m.worlds[static_cast<std::size_t>(v.world)] << " -> " << m.worlds[static_cast<std::size_t>(v.other)] << ": " << v.detail << "\n";
  }
  return code;
}

int export_dot(const Context& ctx, const std::string& file, const std::optional<std::string>& output) {
  const auto mf = load_valid_model(file);
  std::string text;
  if (mf.ordered()) text = to_dot(mf.as_ordered());
  else if (mf.probabilistic()) text = to_dot(mf.as_probabilistic());
  else text = to_dot(mf.base);
  if (output) {
    std::ofstream f(*output);
    if (!f) throw InputError(*output + ": cannot write file");
    f << text;
  } else {
    *ctx.out << text;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Epistemic game analysis on Kripke models", "egk"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string file;
  std::optional<std::string> eps, event_out, output, event_file, worlds, family_dir;
  std::string procedure = "df", reading = "pointwise", op, player = "1";
  std::string schedule = "geometric:1/2,9", scheme = "perfect";
  std::function<int(const Context&)> action;

  auto* game = app.add_subcommand("game", "Strategic-form games");
  game->require_subcommand(1);
  auto* analyze = game->add_subcommand("analyze", "Run Dekel-Fudenberg and/or IESDS");
  analyze->add_option("file", file, "Game JSON")->required();
  analyze->add_option("--procedure", procedure, "df, iesds or both")->capture_default_str();
  analyze->callback([&] { action = [&](const Context& c) { return game_analyze(c, file, procedure); }; });

  auto* model = app.add_subcommand("model", "Kripke models");
  model->require_subcommand(1);
  auto* check = model->add_subcommand("check", "Validate axioms and conditions");
  check->add_option("file", file, "Model JSON")->required();
  check->add_option("--eps", eps, "Also check the trembling condition at this ε (p/q)");
  check->add_option("--trembling-reading", reading, "pointwise or belief")->capture_default_str();
  check->callback([&] { action = [&](const Context& c) { return model_check(c, file, eps, reading); }; });

  auto* ops = model->add_subcommand("operators", "Apply a belief operator to an event");
  ops->add_option("file", file, "Model JSON")->required();
  ops->add_option("--op", op, "b, cb, b1, cb1, beps or cbeps")->required();
  ops->add_option("--event", event_file, "Event JSON");
  ops->add_option("--worlds", worlds, "Event as comma-separated world labels");
  ops->add_option("--player", player, "Player for b, b1, beps")->capture_default_str();
  ops->add_option("--eps", eps, "ε for beps / cbeps (p/q)");
  ops->add_option("--event-out", event_out, "Write the resulting event");
  ops->callback([&] {
    action = [&](const Context& c) {
      return model_operators(c, file, op, event_file, worlds, player, eps, event_out);
    };
  });

  auto* rat_cmd = model->add_subcommand("rat", "Rationality events of a probabilistic model");
  rat_cmd->add_option("file", file, "Model JSON")->required();
  rat_cmd->add_option("--event-out", event_out, "Write RAT as an event");
  rat_cmd->callback([&] { action = [&](const Context& c) { return model_rat(c, file, event_out); }; });

  auto* lrat_cmd = model->add_subcommand("lrat", "Lexicographic rationality events of an ordered model");
  lrat_cmd->add_option("file", file, "Model JSON")->required();
  lrat_cmd->add_option("--event-out", event_out, "Write LRAT as an event");
  lrat_cmd->callback([&] { action = [&](const Context& c) { return model_lrat(c, file, event_out); }; });

  auto* to_types = model->add_subcommand("to-types", "Extract a probabilistic type model");
  to_types->add_option("file", file, "Model JSON")->required();
  to_types->add_option("-o,--output", output, "Write the type model here");
  to_types->callback([&] { action = [&](const Context& c) { return model_to_types(c, file, output); }; });

  auto* types = app.add_subcommand("types", "Epistemic type models");
  types->require_subcommand(1);
  auto* tanalyze = types->add_subcommand("analyze", "Per-type properties and permissibility");
  tanalyze->add_option("file", file, "Types JSON")->required();
  tanalyze->add_option("--eps", eps, "ε for probabilistic models (p/q)");
  tanalyze->callback([&] { action = [&](const Context& c) { return types_analyze(c, file, eps); }; });
  auto* to_kripke = types->add_subcommand("to-kripke", "Ordered Kripke model of a lexicographic type model");
  to_kripke->add_option("file", file, "Types JSON")->required();
  to_kripke->add_option("-o,--output", output, "Write the model here");
  to_kripke->callback([&] { action = [&](const Context& c) { return types_to_kripke(c, file, output); }; });

  auto* conv = app.add_subcommand("converge", "Compare CB^1(LRAT) with the ε-model family");
  conv->add_option("file", file, "Ordered model JSON")->required();
  conv->add_option("--schedule", schedule, "geometric:r,N[,first]")->capture_default_str();
  conv->add_option("--scheme", scheme, "perfect or proper")->capture_default_str();
  conv->add_option("--emit-family", family_dir, "Write each M^ε as a model JSON into this directory");
  conv->callback([&] {
    action = [&](const Context& c) { return converge(c, file, schedule, scheme, family_dir); };
  });

  auto* exp = app.add_subcommand("export", "Export models");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "Graphviz DOT");
  dot->add_option("file", file, "Model JSON")->required();
  dot->add_option("-o,--output", output, "Write DOT here");
  dot->callback([&] { action = [&](const Context& c) { return export_dot(c, file, output); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Context ctx{json, style_from_env(), &out};
  try {
    return action(ctx);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: precondition failed: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace egk::cli
