#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "egk/epistemic_types.hpp"
#include "egk/kripke.hpp"
#include "egk/ordered_kripke.hpp"

namespace egk::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; InputError carries the path and the parser
/// position on failure.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);

Game game_from_json(const Json& doc);
Json to_json(const Game& game);
Game load_game(const std::filesystem::path& path);

/// A model file: always access and σ, optionally "p" or "lambda".
struct ModelFile {
  StandardKripkeModel base;
  std::optional<std::array<RationalMatrix, 2>> p;
  std::optional<std::array<std::vector<RationalMatrix>, 2>> lambda;

  bool probabilistic() const { return p.has_value(); }
  bool ordered() const { return lambda.has_value(); }
  /// Throws InputError when the corresponding block is absent.
  ProbKripkeModel as_probabilistic() const;
  OrderedKripkeModel as_ordered() const;
};

/// "game" may be an inline object or a path resolved against `dir`.
ModelFile model_from_json(const Json& doc, const std::filesystem::path& dir = {});
ModelFile load_model(const std::filesystem::path& path);

Json to_json(const StandardKripkeModel& model);
Json to_json(const ProbKripkeModel& model);
Json to_json(const OrderedKripkeModel& model);

/// {"event": ["w1", ...]} or a bare list of world labels.
EventSet event_from_json(const Json& doc, const StandardKripkeModel& model);
Json event_to_json(const EventSet& e, const StandardKripkeModel& model);
Json event_list(const EventSet& e, const StandardKripkeModel& model);

using TypeModel = std::variant<LexEpistemicModel, ProbEpistemicModel>;

/// Lexicographic when beliefs are lists of distributions, probabilistic when
/// they are single distributions.
TypeModel types_from_json(const Json& doc, const std::filesystem::path& dir = {});
TypeModel load_types(const std::filesystem::path& path);
Json to_json(const LexEpistemicModel& model);
Json to_json(const ProbEpistemicModel& model);

}  // namespace egk::io
