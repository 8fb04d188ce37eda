#include "suffstat/ket.hpp"

#include <cctype>

namespace suffstat {

namespace {

// Hand-rolled recursive descent over the ket grammar. Positions are byte
// offsets into the original text, reported on every failure.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KetExpr parse_expr() {
    KetExpr expr;
    expr.terms.push_back(parse_term());
    skip_ws();
    while (!done() && peek() == '+') {
      ++pos_;
      expr.terms.push_back(parse_term());
      skip_ws();
    }
    expect_end();
    return expr;
  }

  Value parse_single_outcome() {
    const Value v = parse_outcome();
    expect_end();
    return v;
  }

 private:
  KetTerm parse_term() {
    const Rat coeff = parse_rational();
    skip_ws();
    expect('|');
    const Value outcome = parse_outcome();
    skip_ws();
    expect('>');
    if (coeff <= 0) {
      throw ParseError("ket coefficient must be positive", pos_);
    }
    return {coeff, outcome};
  }

  Rat parse_rational() {
    const Int num = parse_integer();
    skip_ws();
    if (!done() && peek() == '/') {
      ++pos_;
      skip_ws();
      const Int den = parse_integer();
      if (den == 0) {
        throw ParseError("zero denominator", pos_);
      }
      return make_rat(num, den);
    }
    return Rat(num);
  }

  Int parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError("expected integer", pos_);
    }
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  Value parse_outcome() {
    skip_ws();
    if (done()) {
      throw ParseError("expected outcome", pos_);
    }
    const char c = peek();
    if (c == '(') {
      ++pos_;
      std::vector<Value> items;
      items.push_back(parse_outcome());
      skip_ws();
      while (!done() && peek() == ',') {
        ++pos_;
        items.push_back(parse_outcome());
        skip_ws();
      }
      expect(')');
      return Value::tuple(std::move(items));
    }
    if (c == '{') {
      ++pos_;
      skip_ws();
      std::vector<std::pair<Value, long long>> entries;
      if (!done() && peek() == '}') {
        ++pos_;
        return Value::mset({});
      }
      entries.push_back(parse_mset_entry());
      skip_ws();
      while (!done() && peek() == ',') {
        ++pos_;
        entries.push_back(parse_mset_entry());
        skip_ws();
      }
      expect('}');
      return Value::mset(std::move(entries));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Value::of_int(parse_integer().get_si());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        ++pos_;
      }
      return Value::label(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::pair<Value, long long> parse_mset_entry() {
    const Value key = parse_outcome();
    skip_ws();
    expect(':');
    const Int count = parse_integer();
    if (count <= 0) {
      throw ParseError("multiset multiplicity must be positive", pos_);
    }
    return {key, count.get_si()};
  }

  void expect(char c) {
    skip_ws();
    if (done() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (!done()) {
      throw ParseError("trailing input", pos_);
    }
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Dist KetExpr::to_dist() const {
  std::vector<std::pair<Value, Rat>> entries;
  entries.reserve(terms.size());
  for (const auto& t : terms) {
    entries.emplace_back(t.outcome, t.coeff);
  }
  return Dist::from_terms(entries);
}

KetExpr parse_ket(std::string_view text) { return Parser(text).parse_expr(); }

Value parse_outcome(std::string_view text) {
  return Parser(text).parse_single_outcome();
}

std::string format_ket(const Dist& d) {
  std::string out;
  for (const auto& [x, r] : d.weights()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += format_rat(r) + "|" + x.to_text() + ">";
  }
  return out;
}

std::string format_channel(const Channel& c) {
  std::string out;
  for (const auto& x : c.dom()) {
    out += x.to_text() + " -> " + format_ket(c.at(x)) + "\n";
  }
  return out;
}

nlohmann::json dist_to_json(const Dist& d) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [x, r] : d.weights()) {
    entries.push_back({{"outcome", x.to_text()}, {"prob", format_rat(r)}});
  }
  return {{"kind", "dist"}, {"entries", entries}};
}

nlohmann::json channel_to_json(const Channel& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& x : c.dom()) {
    rows.push_back({{"input", x.to_text()}, {"dist", dist_to_json(c.at(x))}});
  }
  return {{"kind", "channel"}, {"rows", rows}};
}

Dist dist_from_json(const nlohmann::json& j) {
  if (j.at("kind") != "dist") {
    throw Error("dist_from_json: not a dist object");
  }
  std::vector<std::pair<Value, Rat>> terms;
  for (const auto& e : j.at("entries")) {
    terms.emplace_back(parse_outcome(e.at("outcome").get<std::string>()),
                       parse_rat(e.at("prob").get<std::string>()));
  }
  return Dist::from_terms(terms);
}

}  // namespace suffstat
