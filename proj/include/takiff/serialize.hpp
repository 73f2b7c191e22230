#pragma once

#include "takiff/klbgg.hpp"
#include "takiff/kostant.hpp"
#include "takiff/takiffmult.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace takiff {

/// Malformed weight text; `position` is the 0-based column of the offending token.
class WeightSyntaxError : public std::invalid_argument {
 public:
  WeightSyntaxError(std::size_t position, const std::string& message)
      : std::invalid_argument(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// "1,-1/2" or "1,0;2/3": coroot pairings, then central coordinates after ';'.
Weight parse_weight(std::string_view text, const RootSystem& rs);
RootVector parse_root_vector(std::string_view text, std::size_t rank);

/// Comma-separated input form accepted by parse_weight.
std::string weight_text(const Weight& w);

nlohmann::json to_json(const Rational& q);
/// Array of "p/q" strings: coroot pairings followed by central coordinates.
nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const RootVector& v);
nlohmann::json to_json(const Character& c);
nlohmann::json to_json(const LeviDatum& levi);
nlohmann::json to_json(const MultiplicityReport& r);
nlohmann::json to_json(const KLPolynomial& p);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json& doc);

}  // namespace takiff
