#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "suffstat/channel.hpp"
#include "suffstat/dist.hpp"

#include "json.hpp"

namespace suffstat {

// Parse failure with the offset (0-based) into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// One ket term: coefficient and outcome literal, as parsed.
struct KetTerm {
  Rat coeff;
  Value outcome;
};

// A parsed ket expression `r1|x1> + r2|x2> + ...`. Coefficients must be
// positive; converting to a distribution additionally requires them to sum
// to exactly 1.
struct KetExpr {
  std::vector<KetTerm> terms;
  Dist to_dist() const;
};

// Grammar (whitespace insignificant):
//   expr    := term ('+' term)*
//   term    := rational '|' outcome '>'
//   rational:= int | int '/' int
//   outcome := label | int | '(' outcome (',' outcome)* ')'
//            | '{' outcome ':' int (',' outcome ':' int)* '}'
KetExpr parse_ket(std::string_view text);

// Parses a single outcome literal spanning the whole string.
Value parse_outcome(std::string_view text);

// Canonical ket text, ascending outcome order: "1/8|a> + 1/2|b> + 3/8|c>".
std::string format_ket(const Dist& d);

// One "x -> ket" line per domain element.
std::string format_channel(const Channel& c);

nlohmann::json dist_to_json(const Dist& d);
nlohmann::json channel_to_json(const Channel& c);
Dist dist_from_json(const nlohmann::json& j);

}  // namespace suffstat
