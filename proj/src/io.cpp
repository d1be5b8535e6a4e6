#include "egk/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "egk/error.hpp"

namespace egk::io {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

Rational as_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) fail(where, "expected a rational string such as \"1/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(as_string(v[k], where + "/" + std::to_string(k)));
  return out;
}

const Json& player_block(const Json& obj, Player i, const std::string& where) {
  return member(obj, to_string(i).c_str(), where);
}

int world_of(const StandardKripkeModel& m, const std::string& label, const std::string& where) {
  if (auto w = m.find_world(label)) return *w;
  fail(where, "unknown world '" + label + "'");
}

int strategy_of(const Game& g, Player p, const std::string& label, const std::string& where) {
  if (auto s = g.find_strategy(p, label)) return *s;
  fail(where, "unknown strategy '" + label + "' of player " + to_string(p));
}

/// Per-world object for player i: {"w1": ..., ...}; every world must appear.
template <typename F>
void for_each_world(const Json& block, const StandardKripkeModel& m, const std::string& where, F f) {
  if (!block.is_object()) fail(where, "expected an object keyed by world");
  for (auto it = block.begin(); it != block.end(); ++it) world_of(m, it.key(), where);
  for (int w = 0; w < m.num_worlds(); ++w) {
    const auto& label = m.worlds[static_cast<std::size_t>(w)];
    auto it = block.find(label);
    if (it == block.end()) fail(where, "no entry for world '" + label + "'");
    f(w, *it, where + "/" + label);
  }
}

RationalRowVector world_distribution(const Json& v, const StandardKripkeModel& m,
                                     const std::string& where) {
  if (!v.is_object()) fail(where, "expected {world: weight}");
  RationalRowVector row = RationalRowVector::Zero(m.num_worlds());
  for (auto it = v.begin(); it != v.end(); ++it) {
    row(world_of(m, it.key(), where)) = as_rational(it.value(), where + "/" + it.key());
  }
  return row;
}

Json distribution_to_json(const RationalRowVector& row, const StandardKripkeModel& m) {
  Json out = Json::object();
  for (int v = 0; v < row.size(); ++v) {
    if (row(v) != 0) out[m.worlds[static_cast<std::size_t>(v)]] = to_string(row(v));
  }
  return out;
}

Game resolve_game(const Json& doc, const std::filesystem::path& dir, const std::string& where) {
  const Json& g = member(doc, "game", where);
  if (g.is_string()) return load_game(dir / g.get<std::string>());
  return game_from_json(g);
}

PairDistribution pair_distribution(const Json& v, const Game& game, Player owner,
                                   const std::vector<std::string>& opp_types,
                                   const std::string& where) {
  const Player j = opponent(owner);
  if (!v.is_object()) fail(where, "expected {\"strategy,type\": weight}");
  PairDistribution d = PairDistribution::Zero(game.num_strategies(j), static_cast<int>(opp_types.size()));
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string& key = it.key();
    const auto comma = key.find(',');
    if (comma == std::string::npos) fail(where, "pair key '" + key + "' needs the form strategy,type");
    const int s = strategy_of(game, j, key.substr(0, comma), where);
    const std::string type = key.substr(comma + 1);
    int t = -1;
    for (std::size_t k = 0; k < opp_types.size(); ++k) {
      if (opp_types[k] == type) t = static_cast<int>(k);
    }
    if (t < 0) fail(where, "unknown type '" + type + "' of player " + to_string(j));
    d(s, t) = as_rational(it.value(), where + "/" + key);
  }
  return d;
}

Json pair_distribution_to_json(const PairDistribution& d, const Game& game, Player owner,
                               const std::vector<std::string>& opp_types) {
  Json out = Json::object();
  for (int s = 0; s < d.rows(); ++s) {
    for (int t = 0; t < d.cols(); ++t) {
      if (d(s, t) != 0) {
        out[game.strategy_label(opponent(owner), s) + "," + opp_types[static_cast<std::size_t>(t)]] =
            to_string(d(s, t));
      }
    }
  }
  return out;
}

Json types_header(const Game& game, const std::array<std::vector<std::string>, 2>& types) {
  Json out = Json::object();
  out["game"] = to_json(game);
  out["types"] = Json::array({types[0], types[1]});
  return out;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << doc.dump(2) << "\n";
}

Game game_from_json(const Json& doc) {
  const std::string where = "game";
  std::array<std::string, 2> players{"1", "2"};
  if (doc.is_object() && doc.contains("players")) {
    const auto names = string_list(doc["players"], where + "/players");
    if (names.size() != 2) fail(where + "/players", "exactly two players are supported");
    players = {names[0], names[1]};
  }
  const Json& strat = member(doc, "strategies", where);
  if (!strat.is_array() || strat.size() != 2) fail(where + "/strategies", "expected two lists");
  std::array<std::vector<std::string>, 2> strategies{string_list(strat[0], where + "/strategies/0"),
                                                     string_list(strat[1], where + "/strategies/1")};
  for (const auto& list : strategies) {
    for (const auto& l : list) {
      if (l.find(',') != std::string::npos) fail(where + "/strategies", "label '" + l + "' contains ','");
    }
  }
  const Json& pay = member(doc, "payoffs", where);
  if (!pay.is_object()) fail(where + "/payoffs", "expected an object keyed by \"s1,s2\"");
  const int n1 = static_cast<int>(strategies[0].size());
  const int n2 = static_cast<int>(strategies[1].size());
  std::array<RationalMatrix, 2> u{RationalMatrix::Zero(n1, n2), RationalMatrix::Zero(n1, n2)};
  std::set<std::string> expected;
  for (const auto& a : strategies[0]) {
    for (const auto& b : strategies[1]) expected.insert(a + "," + b);
  }
  for (auto it = pay.begin(); it != pay.end(); ++it) {
    if (!expected.contains(it.key())) fail(where + "/payoffs", "unknown profile '" + it.key() + "'");
  }
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n2; ++b) {
      const std::string key = strategies[0][static_cast<std::size_t>(a)] + "," +
                              strategies[1][static_cast<std::size_t>(b)];
      const std::string cell = where + "/payoffs/" + key;
      auto it = pay.find(key);
      if (it == pay.end()) fail(where + "/payoffs", "missing cell '" + key + "'");
      if (!it->is_array() || it->size() != 2) fail(cell, "expected [u1, u2]");
      u[0](a, b) = as_rational((*it)[0], cell + "/0");
      u[1](a, b) = as_rational((*it)[1], cell + "/1");
    }
  }
  try {
    return Game(players, strategies, u);
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

Json to_json(const Game& game) {
  Json out = Json::object();
  out["players"] = {game.player_name(Player::one), game.player_name(Player::two)};
  out["strategies"] = Json::array({game.strategies(Player::one), game.strategies(Player::two)});
  Json pay = Json::object();
  for (int a = 0; a < game.num_strategies(Player::one); ++a) {
    for (int b = 0; b < game.num_strategies(Player::two); ++b) {
      pay[game.strategy_label(Player::one, a) + "," + game.strategy_label(Player::two, b)] = {
          to_string(game.payoff(Player::one, a, b)), to_string(game.payoff(Player::two, a, b))};
    }
  }
  out["payoffs"] = std::move(pay);
  return out;
}

Game load_game(const std::filesystem::path& path) {
  const Json doc = read_json(path);
  try {
    return game_from_json(doc);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ProbKripkeModel ModelFile::as_probabilistic() const {
  if (!p) throw InputError("model has no \"p\" block");
  return {base, *p};
}

OrderedKripkeModel ModelFile::as_ordered() const {
  if (!lambda) throw InputError("model has no \"lambda\" block");
  return {base, *lambda};
}

ModelFile model_from_json(const Json& doc, const std::filesystem::path& dir) {
  const std::string where = "model";
  ModelFile out{{resolve_game(doc, dir, where), {}, {}, {}}, std::nullopt, std::nullopt};
  auto& m = out.base;
  m.worlds = string_list(member(doc, "worlds", where), where + "/worlds");
  if (m.worlds.empty()) fail(where + "/worlds", "at least one world is required");
  std::set<std::string> unique(m.worlds.begin(), m.worlds.end());
  if (unique.size() != m.worlds.size()) fail(where + "/worlds", "duplicate world label");
  const int n = m.num_worlds();

  const Json& access = member(doc, "access", where);
  const Json& sigma = member(doc, "sigma", where);
  for (Player i : kPlayers) {
    const std::string pw = "/" + to_string(i);
    auto& r = m.access[index(i)];
    r = AccessRelation::Constant(n, n, false);
    for_each_world(player_block(access, i, where + "/access"), m, where + "/access" + pw,
                   [&](int w, const Json& v, const std::string& at) {
                     for (const auto& label : string_list(v, at)) r(w, world_of(m, label, at)) = true;
                   });
    auto& s = m.sigma[index(i)];
    s.assign(static_cast<std::size_t>(n), 0);
    for_each_world(player_block(sigma, i, where + "/sigma"), m, where + "/sigma" + pw,
                   [&](int w, const Json& v, const std::string& at) {
                     s[static_cast<std::size_t>(w)] = strategy_of(m.game, i, as_string(v, at), at);
                   });
  }
  if (doc.contains("p")) {
    std::array<RationalMatrix, 2> p;
    for (Player i : kPlayers) {
      p[index(i)] = RationalMatrix::Zero(n, n);
      for_each_world(player_block(doc["p"], i, where + "/p"), m, where + "/p/" + to_string(i),
                     [&](int w, const Json& v, const std::string& at) {
                       p[index(i)].row(w) = world_distribution(v, m, at);
                     });
    }
    out.p = std::move(p);
  }
  if (doc.contains("lambda")) {
    std::array<std::vector<RationalMatrix>, 2> lambda;
    for (Player i : kPlayers) {
      lambda[index(i)].resize(static_cast<std::size_t>(n));
      for_each_world(player_block(doc["lambda"], i, where + "/lambda"), m,
                     where + "/lambda/" + to_string(i),
                     [&](int w, const Json& v, const std::string& at) {
                       if (!v.is_array() || v.empty()) fail(at, "expected a nonempty list of levels");
                       RationalMatrix lam(static_cast<Eigen::Index>(v.size()), n);
                       for (std::size_t k = 0; k < v.size(); ++k) {
                         lam.row(static_cast<Eigen::Index>(k)) =
                             world_distribution(v[k], m, at + "/" + std::to_string(k));
                       }
                       lambda[index(i)][static_cast<std::size_t>(w)] = std::move(lam);
                     });
    }
    out.lambda = std::move(lambda);
  }
  return out;
}

ModelFile load_model(const std::filesystem::path& path) {
  const Json doc = read_json(path);
  try {
    return model_from_json(doc, path.parent_path());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const StandardKripkeModel& model) {
  Json out = Json::object();
  out["game"] = to_json(model.game);
  out["worlds"] = model.worlds;
  Json access = Json::object();
  Json sigma = Json::object();
  for (Player i : kPlayers) {
    Json a = Json::object();
    Json s = Json::object();
    for (int w = 0; w < model.num_worlds(); ++w) {
      const auto& label = model.worlds[static_cast<std::size_t>(w)];
      Json list = Json::array();
      for (int v : model.accessible(i, w)) list.push_back(model.worlds[static_cast<std::size_t>(v)]);
      a[label] = std::move(list);
      s[label] = model.game.strategy_label(i, model.strategy_at(i, w));
    }
    access[to_string(i)] = std::move(a);
    sigma[to_string(i)] = std::move(s);
  }
  out["access"] = std::move(access);
  out["sigma"] = std::move(sigma);
  return out;
}

Json to_json(const ProbKripkeModel& model) {
  Json out = to_json(model.base);
  Json p = Json::object();
  for (Player i : kPlayers) {
    Json block = Json::object();
    for (int w = 0; w < model.base.num_worlds(); ++w) {
      block[model.base.worlds[static_cast<std::size_t>(w)]] =
          distribution_to_json(model.measure(i).row(w), model.base);
    }
    p[to_string(i)] = std::move(block);
  }
  out["p"] = std::move(p);
  return out;
}

Json to_json(const OrderedKripkeModel& model) {
  Json out = to_json(model.base);
  Json lambda = Json::object();
  for (Player i : kPlayers) {
    Json block = Json::object();
    for (int w = 0; w < model.base.num_worlds(); ++w) {
      Json levels = Json::array();
      const auto& lam = model.levels(i, w);
      for (int k = 0; k < lam.rows(); ++k) levels.push_back(distribution_to_json(lam.row(k), model.base));
      block[model.base.worlds[static_cast<std::size_t>(w)]] = std::move(levels);
    }
    lambda[to_string(i)] = std::move(block);
  }
  out["lambda"] = std::move(lambda);
  return out;
}

EventSet event_from_json(const Json& doc, const StandardKripkeModel& model) {
  const std::string where = "event";
  const Json& list = doc.is_object() ? member(doc, "event", where) : doc;
  EventSet e = empty_event(model.num_worlds());
  for (const auto& label : string_list(list, where)) e(world_of(model, label, where)) = true;
  return e;
}

Json event_list(const EventSet& e, const StandardKripkeModel& model) {
  Json list = Json::array();
  for (int w : members(e)) list.push_back(model.worlds[static_cast<std::size_t>(w)]);
  return list;
}

Json event_to_json(const EventSet& e, const StandardKripkeModel& model) {
  Json out = Json::object();
  out["event"] = event_list(e, model);
  return out;
}

TypeModel types_from_json(const Json& doc, const std::filesystem::path& dir) {
  const std::string where = "types";
  Game game = resolve_game(doc, dir, where);
  const Json& t = member(doc, "types", where);
  if (!t.is_array() || t.size() != 2) fail(where + "/types", "expected two lists of type labels");
  std::array<std::vector<std::string>, 2> types{string_list(t[0], where + "/types/0"),
                                                string_list(t[1], where + "/types/1")};
  const Json& beliefs = member(doc, "beliefs", where);

  // The first belief entry decides the flavour.
  bool lexicographic = false;
  {
    const Json& first = player_block(beliefs, Player::one, where + "/beliefs");
    if (!first.is_object() || first.empty()) fail(where + "/beliefs/1", "expected beliefs per type");
    lexicographic = first.begin()->is_array();
  }

  auto for_each_type = [&](Player i, auto f) {
    const std::string at = where + "/beliefs/" + to_string(i);
    const Json& block = player_block(beliefs, i, where + "/beliefs");
    if (!block.is_object()) fail(at, "expected an object keyed by type");
    const auto& labels = types[index(i)];
    for (auto it = block.begin(); it != block.end(); ++it) {
      if (std::find(labels.begin(), labels.end(), it.key()) == labels.end()) {
        fail(at, "unknown type '" + it.key() + "'");
      }
    }
    for (const auto& label : labels) {
      auto it = block.find(label);
      if (it == block.end()) fail(at, "no belief for type '" + label + "'");
      f(*it, at + "/" + label);
    }
  };

  try {
    if (lexicographic) {
      LexEpistemicModel m{game, types, {}};
      for (Player i : kPlayers) {
        for_each_type(i, [&](const Json& v, const std::string& at) {
          if (!v.is_array() || v.empty()) fail(at, "expected a nonempty list of levels");
          std::vector<PairDistribution> levels;
          for (std::size_t k = 0; k < v.size(); ++k) {
            levels.push_back(pair_distribution(v[k], game, i, types[index(opponent(i))],
                                               at + "/" + std::to_string(k)));
          }
          m.beliefs[index(i)].push_back(std::move(levels));
        });
      }
      validate(m);
      return m;
    }
    ProbEpistemicModel m{game, types, {}};
    for (Player i : kPlayers) {
      for_each_type(i, [&](const Json& v, const std::string& at) {
        if (v.is_array()) fail(at, "mixed lexicographic and probabilistic beliefs");
        m.beliefs[index(i)].push_back(pair_distribution(v, game, i, types[index(opponent(i))], at));
      });
    }
    validate(m);
    return m;
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.starts_with(where)) throw;
    fail(where, what);
  }
}

TypeModel load_types(const std::filesystem::path& path) {
  const Json doc = read_json(path);
  try {
    return types_from_json(doc, path.parent_path());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const LexEpistemicModel& model) {
  Json out = types_header(model.game, model.types);
  Json beliefs = Json::object();
  for (Player i : kPlayers) {
    Json block = Json::object();
    for (int t = 0; t < model.num_types(i); ++t) {
      Json levels = Json::array();
      for (const auto& level : model.belief(i, t)) {
        levels.push_back(pair_distribution_to_json(level, model.game, i, model.types[index(opponent(i))]));
      }
      block[model.types[index(i)][static_cast<std::size_t>(t)]] = std::move(levels);
    }
    beliefs[to_string(i)] = std::move(block);
  }
  out["beliefs"] = std::move(beliefs);
  return out;
}

Json to_json(const ProbEpistemicModel& model) {
  Json out = types_header(model.game, model.types);
  Json beliefs = Json::object();
  for (Player i : kPlayers) {
    Json block = Json::object();
    for (int t = 0; t < model.num_types(i); ++t) {
      block[model.types[index(i)][static_cast<std::size_t>(t)]] =
          pair_distribution_to_json(model.belief(i, t), model.game, i, model.types[index(opponent(i))]);
    }
    beliefs[to_string(i)] = std::move(block);
  }
  out["beliefs"] = std::move(beliefs);
  return out;
}

}  // namespace egk::io
