#include "egk/convergence.hpp"

#include <boost/multiprecision/gmp.hpp>

#include "egk/error.hpp"

namespace egk {
namespace {

Rational power(const Rational& base, int exponent) {
  Rational out(1);
  for (int e = 0; e < exponent; ++e) out *= base;
  return out;
}

/// Level index of each world in λ (-1 when unweighted). Assumes disjoint supports.
std::vector<int> level_of(const RationalMatrix& lam) {
  std::vector<int> out(static_cast<std::size_t>(lam.cols()), -1);
  for (int k = 0; k < lam.rows(); ++k) {
    for (int v = 0; v < lam.cols(); ++v) {
      if (lam(k, v) > 0) out[static_cast<std::size_t>(v)] = k;
    }
  }
  return out;
}

std::vector<Rational> level_masses(const RationalMatrix& lam, const Rational& eps,
                                   WeightingScheme scheme) {
  const int levels = static_cast<int>(lam.rows());
  std::vector<Rational> m(static_cast<std::size_t>(levels));
  if (scheme == WeightingScheme::perfect) {
    for (int k = 0; k < levels; ++k) {
      m[static_cast<std::size_t>(k)] = power(eps, k) * (k + 1 < levels ? Rational(1) - eps : Rational(1));
    }
    return m;
  }
  // proper: m_{k+1} = ε · m_k · min positive λ_k / max λ_{k+1}, then normalise.
  m[0] = 1;
  for (int k = 0; k + 1 < levels; ++k) {
    Rational min_pos(0);
    for (int v = 0; v < lam.cols(); ++v) {
      if (lam(k, v) > 0 && (min_pos == 0 || lam(k, v) < min_pos)) min_pos = lam(k, v);
    }
    const Rational max_next = lam.row(k + 1).maxCoeff();
    m[static_cast<std::size_t>(k + 1)] = eps * m[static_cast<std::size_t>(k)] * min_pos / max_next;
  }
  Rational total(0);
  for (const auto& x : m) total += x;
  for (auto& x : m) x /= total;
  return m;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

WeightingScheme parse_weighting_scheme(std::string_view text) {
  if (text == "perfect") return WeightingScheme::perfect;
  if (text == "proper") return WeightingScheme::proper;
  throw InputError("unknown scheme '" + std::string(text) + "' (expected perfect or proper)");
}

std::string to_string(WeightingScheme scheme) {
  return scheme == WeightingScheme::perfect ? "perfect" : "proper";
}

EpsilonSchedule::EpsilonSchedule(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("empty ε schedule");
  for (std::size_t n = 0; n < values_.size(); ++n) {
    if (values_[n] <= 0 || values_[n] >= Rational(1, 2)) {
      throw InputError("schedule value " + to_string(values_[n]) + " is outside (0, 1/2)");
    }
    if (n > 0 && values_[n] >= values_[n - 1]) {
      throw InputError("schedule is not strictly decreasing at position " + std::to_string(n));
    }
  }
}

EpsilonSchedule EpsilonSchedule::parse(std::string_view text) {
  constexpr std::string_view prefix = "geometric:";
  if (!text.starts_with(prefix)) {
    throw InputError("unknown schedule '" + std::string(text) + "' (expected geometric:r,N[,first])");
  }
  text.remove_prefix(prefix.size());
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const auto comma = text.find(',', pos);
    parts.push_back(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw InputError("geometric schedule needs r,N or r,N,first");
  }
  const Rational ratio = parse_rational(parts[0]);
  const Rational count_q = parse_rational(parts[1]);
  if (boost::multiprecision::denominator(count_q) != 1 || count_q < 1 || count_q > 64) {
    throw InputError("schedule length must be an integer in 1..64");
  }
  if (ratio <= 0 || ratio >= 1) throw InputError("schedule ratio must lie in (0, 1)");
  const int count = static_cast<int>(boost::multiprecision::numerator(count_q));
  Rational value = parts.size() == 3 ? parse_rational(parts[2]) : ratio * ratio;
  std::vector<Rational> values;
  for (int n = 0; n < count; ++n) {
    values.push_back(value);
    value *= ratio;
  }
  return EpsilonSchedule(std::move(values));
}

ProbKripkeModel build_epsilon_model(const OrderedKripkeModel& model, const Epsilon& eps,
                                    WeightingScheme scheme) {
  require(eps.value() < Rational(1, 2), "ε must be below 1/2");
  const auto invalid = validate_ordered(model);
  require(invalid.empty(), "ordered model is invalid: " +
                               (invalid.empty() ? std::string() : describe(invalid.front(), model.base)));
  const auto incautious = check_caution(model);
  require(incautious.empty(),
          "caution fails: " + (incautious.empty() ? std::string() : describe(incautious.front(), model.base)));
  const auto structural = check_structural_conditions(model);
  require(structural.disjoint_supports, "disjoint supports fail");
  require(structural.surjection, "surjection fails");

  const int n = model.base.num_worlds();
  ProbKripkeModel out{model.base, {}};
  for (Player i : kPlayers) {
    RationalMatrix p = RationalMatrix::Zero(n, n);
    for (int w = 0; w < n; ++w) {
      const auto& lam = model.levels(i, w);
      const auto masses = level_masses(lam, eps.value(), scheme);
      for (int k = 0; k < lam.rows(); ++k) {
        p.row(w) += masses[static_cast<std::size_t>(k)] * lam.row(k);
      }
    }
    out.p[index(i)] = std::move(p);
  }
  return out;
}

std::vector<Violation> check_proper_condition(const OrderedKripkeModel& ordered,
                                              const ProbKripkeModel& model, const Epsilon& eps) {
  std::vector<Violation> out;
  const int n = ordered.base.num_worlds();
  for (Player i : kPlayers) {
    const auto& p = model.measure(i);
    for (int w = 0; w < n; ++w) {
      const auto level = level_of(ordered.levels(i, w));
      for (int v = 0; v < n; ++v) {
        if (ordered.base.relation(i)(w, v) && p(w, v) <= 0) {
          out.push_back({Rule::probability_measure, i, {w, v}, "accessible world has zero weight"});
        }
        for (int u = 0; u < n; ++u) {
          const int lv = level[static_cast<std::size_t>(v)];
          const int lu = level[static_cast<std::size_t>(u)];
          if (lv < 0 || lu < 0 || lv <= lu) continue;
          if (p(w, v) > eps.value() * p(w, u)) {
            out.push_back({Rule::probability_measure, i, {w, v, u},
                           "deeper-level world outweighs ε times a shallower one"});
          }
        }
      }
    }
  }
  return out;
}

ConvergenceReport verify_convergence(const OrderedKripkeModel& model,
                                     const EpsilonSchedule& schedule, WeightingScheme scheme) {
  ConvergenceReport report;
  report.level1 = common_level1_belief(model, lrat(model).all);
  for (const Rational& e : schedule.values()) {
    const Epsilon eps(e);
    ProbKripkeModel m = build_epsilon_model(model, eps, scheme);
    const RationalitySets r = rat(m);
    report.eps.push_back(e);
    report.rat.push_back(r.all);
    report.cb.push_back(upper_common_belief(m, eps, r.all));
    report.family.push_back(std::move(m));
  }
  const int count = schedule.size();
  report.tail.resize(static_cast<std::size_t>(count));
  report.tail[static_cast<std::size_t>(count - 1)] = report.cb.back();
  for (int m = count - 2; m >= 0; --m) {
    report.tail[static_cast<std::size_t>(m)] =
        report.tail[static_cast<std::size_t>(m + 1)] && report.cb[static_cast<std::size_t>(m)];
  }
  report.stabilized = report.tail.back();
  report.stabilization_index = count - 1;
  while (report.stabilization_index > 0 &&
         (report.tail[static_cast<std::size_t>(report.stabilization_index - 1)] == report.stabilized).all()) {
    --report.stabilization_index;
  }
  report.matches = (report.stabilized == report.level1).all();
  return report;
}

std::vector<LimitViolation> check_limit_conditions(const OrderedKripkeModel& model,
                                                   const std::vector<ProbKripkeModel>& family,
                                                   const EpsilonSchedule& schedule) {
  std::vector<LimitViolation> out;
  if (static_cast<int>(family.size()) != schedule.size()) {
    throw InputError("family size differs from schedule length");
  }
  const int n = model.base.num_worlds();
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    const int step = static_cast<int>(idx);
    const Rational& eps = schedule.values()[idx];
    for (Player i : kPlayers) {
      const auto& p = family[idx].measure(i);
      for (int w = 0; w < n; ++w) {
        const auto& lam = model.levels(i, w);
        const auto level = level_of(lam);
        Rational outside(0);
        for (int v = 0; v < n; ++v) {
          if (level[static_cast<std::size_t>(v)] != 0) outside += p(w, v);
        }
        for (int v = 0; v < n; ++v) {
          const int lv = level[static_cast<std::size_t>(v)];
          if (lv > 0) {
            if (p(w, v) > eps) {
              out.push_back({1, step, i, w, v, "weight " + to_string(p(w, v)) + " exceeds ε_n"});
            }
            if (idx > 0 && p(w, v) > family[idx - 1].measure(i)(w, v)) {
              out.push_back({1, step, i, w, v, "weight increased from the previous ε"});
            }
          } else if (lv == 0) {
            const Rational gap = abs(p(w, v) - lam(0, v));
            if (gap > outside) {
              out.push_back({2, step, i, w, v, "level-1 weight is " + to_string(gap) + " away from λ"});
            }
          }
        }
        for (int k = 0; k < lam.rows(); ++k) {
          for (int v = 0; v < n; ++v) {
            for (int u = v + 1; u < n; ++u) {
              if (lam(k, v) <= 0 || lam(k, u) <= 0) continue;
              if (p(w, v) * lam(k, u) != p(w, u) * lam(k, v)) {
                out.push_back({3, step, i, w, v, "ratio within level " + std::to_string(k + 1) +
                                                     " differs from λ"});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace egk
