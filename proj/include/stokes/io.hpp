#pragma once

// Text and JSON forms of every value the command line exchanges.
//
//   rational     "p/q" (q >= 2) or "p"
//   level datum  "{k0,k1,...}" strictly decreasing; "{}" or "∅" when empty
//                JSON: [[num, den], ...]
//   circle       "<polynomial>@<location>", e.g. "z^{5/3}+z^{4/3}+z^{1/2}@inf",
//                "0@0"; z^k stands for z_loc^(-k)
//                JSON: {"location": "...", "terms": [[eN, eD, reN, reD, imN, imD], ...]}
//
// JSON integers that do not fit 64 bits are written as decimal strings.

#include "stokes/circle.hpp"
#include "stokes/enumerate.hpp"
#include "stokes/forest.hpp"
#include "stokes/level_datum.hpp"
#include "stokes/simplify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace stokes {

enum class DatumStyle { Machine, Human };

/// Machine style writes "{}" for the empty datum, human style "∅".
std::string format_datum(const LevelDatum& datum, DatumStyle style = DatumStyle::Machine);

/// Whitespace-tolerant. Syntax problems throw ParseError carrying the
/// offset of the first bad token; invariant violations throw
/// InvalidLevelDatum from LevelDatum::validate.
LevelDatum parse_level_datum(std::string_view text);

/// Same syntax as a level datum, integers allowed.
ExponentSet parse_exponent_set(std::string_view text);

nlohmann::json integer_to_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& value);

nlohmann::json datum_to_json(const LevelDatum& datum);
/// Requires reduced pairs in strictly decreasing order.
LevelDatum datum_from_json(const nlohmann::json& j);

/// Terms of a polynomial in z, as used for circles and twists.
std::vector<Term> parse_polynomial(std::string_view text, std::size_t offset = 0);
std::string format_polynomial(std::span<const Term> terms);

std::string format_circle(const StokesCircle& circle);
StokesCircle parse_circle(std::string_view text);
nlohmann::json circle_to_json(const StokesCircle& circle);
StokesCircle circle_from_json(const nlohmann::json& j);

std::string format_invariants(const FormalInvariants& f);
nlohmann::json invariants_to_json(const FormalInvariants& f);

nlohmann::json step_to_json(const StepDescriptor& step);
nlohmann::json trace_to_json(const SimplificationTrace& trace);
std::string format_trace(const SimplificationTrace& trace);

nlohmann::json tree_to_json(const TreeNode& tree);

enum class TableFormat { Markdown, Json, Csv };

std::string format_table(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace stokes
