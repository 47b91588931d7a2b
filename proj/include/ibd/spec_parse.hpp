#pragma once

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "ibd/divergence.hpp"
#include "ibd/errors.hpp"

namespace ibd {

namespace detail {

inline double parse_number(std::string_view text, std::string_view context) {
  const std::string buffer(text);
  char* end = nullptr;
  const double value = std::strtod(buffer.c_str(), &end);
  if (end != buffer.c_str() + buffer.size() || buffer.empty()) {
    throw ParseError("divergence spec: bad number '" + buffer + "' in " + std::string(context));
  }
  return value;
}

inline ComplexitySpec parse_simple_spec(std::string_view text, double default_alpha) {
  if (text == "E") return ComplexitySpec::joint_entropy();
  if (text == "I") return ComplexitySpec::max_entropy();
  if (text == "min") return ComplexitySpec::min_entropy();
  std::string_view head = text;
  double alpha = default_alpha;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    head = text.substr(0, colon);
    alpha = parse_number(text.substr(colon + 1), "alpha");
  }
  try {
    if (head == "S") return ComplexitySpec::arithmetic_mean(alpha);
    if (head == "R") return ComplexitySpec::root_mean(alpha);
    if (head == "P") return ComplexitySpec::geometric_mean(alpha);
    if (head == "D") return ComplexitySpec::harmonic_mean(alpha);
  } catch (const InvalidSpecError& e) {
    throw ParseError(std::string("divergence spec: ") + e.what());
  }
  throw ParseError("divergence spec: unknown kind '" + std::string(text) + "'");
}

}  // namespace detail

/// Parses the compact divergence-spec grammar:
///   E | I | min | S[:a] | R[:a] | P[:a] | D[:a]
///   convex:w*SPEC+w*SPEC+...    (weighted sum of child complexities)
///   nconvex:w*SPEC+w*SPEC+...   (weighted sum of child normalized divergences)
/// Kinds written without :a use `default_alpha`.
inline ComplexitySpec parse_complexity_spec(std::string_view text, double default_alpha = 0.5) {
  const bool convex = text.rfind("convex:", 0) == 0;
  const bool nconvex = text.rfind("nconvex:", 0) == 0;
  if (!convex && !nconvex) return detail::parse_simple_spec(text, default_alpha);

  std::string_view body = text.substr(convex ? 7 : 8);
  std::vector<double> weights;
  std::vector<ComplexitySpec> children;
  while (!body.empty()) {
    const auto plus = body.find('+');
    const std::string_view term = body.substr(0, plus);
    const auto star = term.find('*');
    if (star == std::string_view::npos) {
      throw ParseError("divergence spec: expected weight*kind, got '" + std::string(term) + "'");
    }
    weights.push_back(detail::parse_number(term.substr(0, star), "weight"));
    children.push_back(detail::parse_simple_spec(term.substr(star + 1), default_alpha));
    if (plus == std::string_view::npos) break;
    body = body.substr(plus + 1);
  }
  try {
    return ComplexitySpec::convex_mix(std::move(weights), std::move(children), nconvex);
  } catch (const Error& e) {
    throw ParseError(std::string("divergence spec: ") + e.what());
  }
}

}  // namespace ibd
