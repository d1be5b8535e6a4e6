#include "egk/dot.hpp"

#include <functional>
#include <sstream>

namespace egk {
namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* colour(Player i) { return i == Player::one ? "blue" : "red"; }
const char* line(Player i) { return i == Player::one ? "solid" : "dashed"; }

/// `attrs(i, w, v)` returns extra edge attributes, or nothing.
std::string render(const StandardKripkeModel& m,
                   const std::function<std::string(Player, int, int)>& attrs) {
  std::ostringstream out;
  out << "digraph kripke {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (int w = 0; w < m.num_worlds(); ++w) {
    const auto& label = m.worlds[static_cast<std::size_t>(w)];
    out << "  " << dot_id(label) << " [label="
        << dot_id(label + ":(" + m.game.strategy_label(Player::one, m.strategy_at(Player::one, w)) +
                  "," + m.game.strategy_label(Player::two, m.strategy_at(Player::two, w)) + ")")
        << "];\n";
  }
  for (Player i : kPlayers) {
    for (int w = 0; w < m.num_worlds(); ++w) {
      for (int v : m.accessible(i, w)) {
        out << "  " << dot_id(m.worlds[static_cast<std::size_t>(w)]) << " -> "
            << dot_id(m.worlds[static_cast<std::size_t>(v)]) << " [color=" << colour(i)
            << ", style=" << line(i);
        const std::string extra = attrs(i, w, v);
        if (!extra.empty()) out << ", " << extra;
        out << "];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const StandardKripkeModel& model) {
  return render(model, [](Player, int, int) { return std::string(); });
}

std::string to_dot(const ProbKripkeModel& model) {
  return render(model.base, [&](Player i, int w, int v) {
    const Rational& q = model.measure(i)(w, v);
    if (q == 0) return std::string("style=dotted");
    return "label=" + dot_id(to_string(q));
  });
}

std::string to_dot(const OrderedKripkeModel& model) {
  return render(model.base, [&](Player i, int w, int v) {
    const auto& lam = model.levels(i, w);
    std::string label;
    for (int k = 0; k < lam.rows(); ++k) {
      if (lam(k, v) == 0) continue;
      if (!label.empty()) label += " ";
      label += std::to_string(k + 1) + ":" + to_string(lam(k, v));
    }
    std::string out = "label=" + dot_id(label);
    if (lam(0, v) > 0) out += ", penwidth=2.5";
    return out;
  });
}

}  // namespace egk
