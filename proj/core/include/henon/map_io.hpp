#ifndef HENON_MAP_IO_HPP
#define HENON_MAP_IO_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "henon/family.hpp"
#include "henon/henon_map.hpp"

namespace henon {

/// Input validation failure in a map or family document. what() names the
/// line and the offending field.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& message, int line, std::string field);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Map document:
///   {"factors": [{"poly": ["c0", "c1", ..., "cd"], "delta": "num/den"}, ...]}
/// Coefficients are strings ("num/den", integers, decimals) or JSON integers.
HenonMap parse_map(const std::string& text);
HenonMap load_map(const std::string& path);

/// Family document: as a map document but every coefficient (and delta) is a
/// list of coefficients in t, lowest degree first:
///   {"factors": [{"poly": [["0", "1"], ["0"], ["1"]], "delta": ["1/2"]}]}
HenonFamily parse_family(const std::string& text);
HenonFamily load_family(const std::string& path);

nlohmann::json to_json(const HenonMap& f);
nlohmann::json to_json(const HenonFamily& f);

/// Parses "a/b,c/d" into an exact point.
ExactPoint parse_exact_point(const std::string& text);
/// Parses "x,y" where each coordinate is a real ("1.5") or complex ("1.5+2i", "-3i").
NumericPoint parse_numeric_point(const std::string& text);
Complex parse_complex(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace henon

#endif  // HENON_MAP_IO_HPP
