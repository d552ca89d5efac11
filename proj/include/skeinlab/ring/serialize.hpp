#pragma once

// JSON forms of ring elements.
//   LaurentPoly  -> [{"deg_a":int, "deg_z":int, "re":"p/q", "im":"p/q"}, ...] sorted by (deg_a, deg_z)
//   PowerSeries  -> {"order": N, "coeffs": ["re+im*i", ...]}

#include "skeinlab/ring/laurent_poly.hpp"
#include "skeinlab/ring/power_series.hpp"

#include <json.hpp>

namespace skeinlab::ring {

inline nlohmann::json to_json(const LaurentPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back({{"deg_a", e.first},
                   {"deg_z", e.second},
                   {"re", GaussRational::rational_str(c.re())},
                   {"im", GaussRational::rational_str(c.im())}});
  }
  return out;
}

inline LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw RingError("Laurent polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto& t : j) {
    GaussRational c(GaussRational::parse_rational(t.at("re").get<std::string>()),
                    GaussRational::parse_rational(t.at("im").get<std::string>()));
    if (c.is_zero()) throw RingError("zero coefficient stored in JSON");
    p.add_term(t.at("deg_a").get<int>(), t.at("deg_z").get<int>(), c);
  }
  return p;
}

inline nlohmann::json to_json(const PowerSeries& s) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

inline PowerSeries series_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
    throw RingError("series JSON: coefficient count does not match order");
  }
  PowerSeries s(order);
  for (int k = 0; k <= order; ++k) s.set(k, GaussRational::parse(coeffs[k].get<std::string>()));
  return s;
}

}  // namespace skeinlab::ring
