#pragma once

// Text formats for matrices, complexes and codes, and JSON records.
//
//   matrix:   "q rows cols" then `rows` lines of `cols` element codes
//   complex:  "q l" then l matrix blocks A_1 .. A_l
//   code:     "css" or "subsystem", then the X block, then the Z block
//
// q is written as "p^m" for extension fields or as a plain prime. Blank
// lines and lines starting with '#' are skipped.

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chainprod/chain.hpp"
#include "chainprod/css.hpp"
#include "chainprod/distance.hpp"
#include "chainprod/mat.hpp"

namespace chainprod {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Mat read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Mat& m);

ChainComplex read_complex(std::istream& in);
void write_complex(std::ostream& out, const ChainComplex& c);

using AnyCode = std::variant<CssCode, SubsystemCode>;

AnyCode read_code(std::istream& in);
void write_code(std::ostream& out, const CssCode& code);
void write_code(std::ostream& out, const SubsystemCode& code);

/// Whole-file helpers; throw ParseError (line 0) when the file cannot be opened.
Mat load_matrix(const std::string& path);
ChainComplex load_complex(const std::string& path);
AnyCode load_code(const std::string& path);

/// "1,3,4" or "1 3 4" (1-based) into a 0-based IndexSet over {0..n-1}.
IndexSet parse_index_set(std::string_view text, std::size_t n);

/// One digit per coordinate in base q (0-9a-z) for q <= 36; dot-separated
/// decimal codes above that.
std::string certificate_string(std::span<const std::uint8_t> c, unsigned q);
Vec parse_certificate(std::string_view s, unsigned q);

nlohmann::json to_json(const DistanceValue& v);
nlohmann::json to_json(const DistanceResult& r, unsigned q);
nlohmann::json to_json(const Bound& b);
nlohmann::json to_json(const BoundPair& b);
nlohmann::json to_json(const Mat& m);

}  // namespace chainprod
