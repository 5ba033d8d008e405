#include "stokes/io.hpp"

#include "stokes/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace stokes {

namespace {

constexpr std::string_view kEmptySet = "∅";

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool consume(std::string_view s) {
    if (text_.substr(i_, s.size()) != s) return false;
    i_ += s.size();
    return true;
  }
  std::size_t pos() const { return offset_ + i_; }

  template <typename Pred>
  std::string_view take_while(Pred pred) {
    std::size_t start = i_;
    while (i_ < text_.size() && pred(text_[i_])) ++i_;
    return text_.substr(start, i_ - start);
  }

  std::string_view take_until(char c) {
    std::size_t start = i_;
    while (i_ < text_.size() && text_[i_] != c) ++i_;
    return text_.substr(start, i_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos(), what); }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t i_ = 0;
};

bool is_number_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+';
}

std::vector<Rational> parse_rational_set(std::string_view text) {
  Cursor cur(text, 0);
  std::vector<Rational> values;
  cur.skip_ws();
  if (cur.consume(kEmptySet)) {
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("trailing characters");
    return values;
  }
  if (!cur.consume('{')) cur.fail("expected '{' or '∅'");
  cur.skip_ws();
  if (!cur.consume('}')) {
    for (;;) {
      std::size_t start = cur.pos();
      std::string_view token = cur.take_while(is_number_char);
      if (token.empty()) cur.fail("expected a number");
      values.push_back(parse_rational(token, true, start));
      cur.skip_ws();
      if (cur.consume(',')) {
        cur.skip_ws();
        continue;
      }
      if (cur.consume('}')) break;
      cur.fail("expected ',' or '}'");
    }
  }
  cur.skip_ws();
  if (!cur.at_end()) cur.fail("trailing characters");
  return values;
}

Rational rational_from_json(const nlohmann::json& num, const nlohmann::json& den) {
  Integer n = integer_from_json(num);
  Integer d = integer_from_json(den);
  if (d < 1) throw InvalidInput("JSON rational needs a positive denominator");
  if (gcd(n, d) != 1) throw InvalidInput("JSON rational " + n.str() + "/" + d.str() + " is not reduced");
  return Rational(std::move(n), std::move(d));
}

std::string format_exponent(const Rational& k) {
  if (k == Rational(1)) return "z";
  if (k.is_integer()) return "z^" + k.str();
  return "z^{" + k.str() + "}";
}

// Coefficient prefix for a term, without any joining sign.
std::string format_coefficient(const Complex& c) {
  if (c.re.sign() == 0 && c.im.sign() > 0) return c.str() + "*";
  if (c.im.sign() != 0) return "(" + c.str() + ")*";
  if (c.re == Rational(1)) return "";
  return c.re.str() + "*";
}

}  // namespace

std::string format_datum(const LevelDatum& datum, DatumStyle style) {
  if (datum.empty()) return style == DatumStyle::Human ? std::string(kEmptySet) : "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < datum.size(); ++i) {
    if (i > 0) out += ",";
    out += datum[i].str();
  }
  return out + "}";
}

LevelDatum parse_level_datum(std::string_view text) {
  return LevelDatum::validate(parse_rational_set(text));
}

ExponentSet parse_exponent_set(std::string_view text) {
  return ExponentSet::from(parse_rational_set(text));
}

nlohmann::json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                      [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InvalidInput("JSON string '" + s + "' is not an integer");
    return Integer(s);
  }
  throw InvalidInput("expected a JSON integer");
}

nlohmann::json rational_to_json(const Rational& value) {
  return nlohmann::json::array({integer_to_json(value.num()), integer_to_json(value.den())});
}

nlohmann::json datum_to_json(const LevelDatum& datum) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& k : datum.levels()) out.push_back(rational_to_json(k));
  return out;
}

LevelDatum datum_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("level datum JSON must be an array");
  std::vector<Rational> levels;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidInput("level must be a [numerator, denominator] pair");
    levels.push_back(rational_from_json(pair[0], pair[1]));
    if (levels.size() > 1 && !(levels.back() < levels[levels.size() - 2]))
      throw InvalidInput("levels must be strictly decreasing");
  }
  return LevelDatum::validate(std::move(levels));
}

std::vector<Term> parse_polynomial(std::string_view text, std::size_t offset) {
  Cursor cur(text, offset);
  std::map<Rational, Complex, std::greater<>> sum;
  cur.skip_ws();
  if (cur.consume('0')) {
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("nothing may follow the zero polynomial");
    return {};
  }
  bool first = true;
  while (first || !cur.at_end()) {
    bool negative = false;
    if (cur.consume('-')) {
      negative = true;
    } else if (!cur.consume('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    cur.skip_ws();

    Complex coefficient{Rational(1), Rational(0)};
    bool has_coefficient = false;
    if (cur.peek() == '(') {
      std::size_t start = cur.pos();
      cur.consume('(');
      std::string_view inner = cur.take_until(')');
      if (!cur.consume(')')) cur.fail("unclosed '('");
      coefficient = parse_complex(inner, start + 1);
      has_coefficient = true;
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      std::size_t start = cur.pos();
      std::string_view digits = cur.take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
      Rational value = parse_rational(digits, true, start);
      coefficient = cur.consume('i') ? Complex{Rational(0), value} : Complex{value, Rational(0)};
      has_coefficient = true;
    } else if (cur.consume('i')) {
      coefficient = Complex{Rational(0), Rational(1)};
      has_coefficient = true;
    }
    cur.skip_ws();
    if (has_coefficient && cur.consume('*')) cur.skip_ws();
    if (!cur.consume('z')) cur.fail(has_coefficient ? "constant terms are not allowed; expected 'z'" : "expected a term");

    Rational exponent(1);
    if (cur.consume('^')) {
      std::size_t start = cur.pos();
      if (cur.consume('{')) {
        std::string_view inner = cur.take_until('}');
        if (!cur.consume('}')) cur.fail("unclosed '{'");
        exponent = parse_rational(inner, true, start + 1);
      } else {
        std::string_view token = cur.take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
        if (token.empty()) cur.fail("expected an exponent");
        exponent = parse_rational(token, true, start);
      }
      if (exponent.sign() <= 0) throw ParseError(start, "exponent must be positive");
    }
    if (negative) coefficient = -coefficient;
    auto [it, inserted] = sum.try_emplace(exponent, coefficient);
    if (!inserted) it->second = it->second + coefficient;
    cur.skip_ws();
  }
  std::vector<Term> terms;
  for (auto& [k, c] : sum)
    if (!c.is_zero()) terms.push_back({k, c});
  return terms;
}

std::string format_polynomial(std::span<const Term> terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Complex c = terms[i].coefficient;
    bool negative = c.im.sign() == 0 && c.re.sign() < 0;
    if (negative) {
      out += "-";
      c = -c;
    } else if (i > 0) {
      out += "+";
    }
    out += format_coefficient(c) + format_exponent(terms[i].exponent);
  }
  return out;
}

std::string format_circle(const StokesCircle& circle) {
  return format_polynomial(circle.terms()) + "@" + circle.location().str();
}

StokesCircle parse_circle(std::string_view text) {
  std::size_t at = text.rfind('@');
  if (at == std::string_view::npos) throw ParseError(text.size(), "expected '@<location>'");
  std::string_view loc = text.substr(at + 1);
  std::size_t lead = 0;
  while (lead < loc.size() && std::isspace(static_cast<unsigned char>(loc[lead]))) ++lead;
  std::size_t end = loc.size();
  while (end > lead && std::isspace(static_cast<unsigned char>(loc[end - 1]))) --end;
  Location location = parse_location(loc.substr(lead, end - lead), at + 1 + lead);
  return StokesCircle(std::move(location), parse_polynomial(text.substr(0, at), 0));
}

nlohmann::json circle_to_json(const StokesCircle& circle) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : circle.terms()) {
    terms.push_back({integer_to_json(t.exponent.num()), integer_to_json(t.exponent.den()),
                     integer_to_json(t.coefficient.re.num()), integer_to_json(t.coefficient.re.den()),
                     integer_to_json(t.coefficient.im.num()), integer_to_json(t.coefficient.im.den())});
  }
  return {{"location", circle.location().str()}, {"terms", terms}};
}

StokesCircle circle_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("location") || !j.contains("terms"))
    throw InvalidInput("circle JSON needs 'location' and 'terms'");
  if (!j["location"].is_string()) throw InvalidInput("circle location must be a string");
  Location location = parse_location(j["location"].get<std::string>());
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 6) throw InvalidInput("circle term must have six integers");
    terms.push_back({rational_from_json(t[0], t[1]), Complex{rational_from_json(t[2], t[3]), rational_from_json(t[4], t[5])}});
  }
  return StokesCircle(std::move(location), std::move(terms));
}

std::string format_invariants(const FormalInvariants& f) {
  std::string out = "location=" + f.location.str() + " ram=" + f.ram.str() + " irr=" + f.irr.str() +
                    " slope=" + f.slope().str() + " levels=" + format_datum(f.levels);
  if (f.linear) out += " linear=" + f.linear->str();
  return out;
}

nlohmann::json invariants_to_json(const FormalInvariants& f) {
  nlohmann::json j = {{"location", f.location.str()},
                      {"ram", integer_to_json(f.ram)},
                      {"irr", integer_to_json(f.irr)},
                      {"slope", rational_to_json(f.slope())},
                      {"levels", datum_to_json(f.levels)}};
  j["linear"] = f.linear ? nlohmann::json(f.linear->str()) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json step_to_json(const StepDescriptor& step) {
  return {{"case", to_string(step.kind)},
          {"scale", rational_to_json(step.scale)},
          {"ramBefore", integer_to_json(step.ram_before)},
          {"ramAfter", integer_to_json(step.ram_after)},
          {"passesThroughFinite", step.passes_through_finite}};
}

nlohmann::json trace_to_json(const SimplificationTrace& trace) {
  nlohmann::json states = nlohmann::json::array();
  for (const LevelDatum& s : trace.states) states.push_back(datum_to_json(s));
  nlohmann::json steps = nlohmann::json::array();
  for (const StepDescriptor& s : trace.steps) steps.push_back(step_to_json(s));
  return {{"mode", to_string(trace.mode)}, {"states", states}, {"steps", steps}};
}

std::string format_trace(const SimplificationTrace& trace) {
  std::string out = format_datum(trace.states.front()) + "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const StepDescriptor& s = trace.steps[i];
    out += "  -> " + format_datum(trace.states[i + 1]) + "  [" + to_string(s.kind) + " scale=" + s.scale.str() +
           " ram " + s.ram_before.str() + "->" + s.ram_after.str() +
           (s.passes_through_finite ? " via finite point" : "") + "]\n";
  }
  return out;
}

nlohmann::json tree_to_json(const TreeNode& tree) {
  nlohmann::json kids = nlohmann::json::array();
  for (const TreeNode& c : tree.children) kids.push_back(tree_to_json(c));
  return {{"datum", datum_to_json(tree.datum)},
          {"ram", integer_to_json(tree.ram)},
          {"balance", integer_to_json(tree.balance)},
          {"truncated", tree.truncated},
          {"children", kids}};
}

std::string format_table(const std::vector<TableRow>& rows, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::Markdown: {
      out << "| Number of loops | Minimal level data | Number of minimal level data |\n";
      out << "|---|---|---|\n";
      for (const TableRow& row : rows) {
        out << "| " << row.loops << " | ";
        for (std::size_t i = 0; i < row.data.size(); ++i)
          out << (i > 0 ? ", " : "") << format_datum(row.data[i], DatumStyle::Human);
        out << " | " << row.count << " |\n";
      }
      break;
    }
    case TableFormat::Csv: {
      out << "loops,data,count\n";
      for (const TableRow& row : rows) {
        out << row.loops << ",\"";
        for (std::size_t i = 0; i < row.data.size(); ++i) out << (i > 0 ? ";" : "") << format_datum(row.data[i]);
        out << "\"," << row.count << "\n";
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::json j = nlohmann::json::array();
      for (const TableRow& row : rows) {
        nlohmann::json data = nlohmann::json::array();
        for (const LevelDatum& d : row.data) data.push_back(datum_to_json(d));
        j.push_back({{"loops", row.loops}, {"data", data}, {"count", row.count}});
      }
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace stokes
