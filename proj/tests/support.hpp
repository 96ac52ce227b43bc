#ifndef HENON_TESTS_SUPPORT_HPP
#define HENON_TESTS_SUPPORT_HPP

#include <string>

#include "henon/family.hpp"
#include "henon/henon_map.hpp"
#include "henon/map_io.hpp"

namespace henon::testing {

inline std::string data_path(const std::string& rel) { return std::string(HENON_DATA_DIR) + "/" + rel; }

/// (y, c0 + c1 y + ... - delta x) from coefficient strings.
inline HenonMap quad(const std::string& c0, const std::string& delta, const std::string& c1 = "0") {
  return HenonMap::single(UniPoly({parse_rational(c0), parse_rational(c1), Rational(1)}), parse_rational(delta));
}

inline HenonMap half_map() { return quad("1/2", "1/2"); }          // (y, y^2 + 1/2 - x/2)
inline HenonMap dissipative_map() { return quad("-1", "3/10"); }   // (y, y^2 - 1 - 3x/10)
inline HenonMap conservative_map() { return quad("0", "1"); }      // (y, y^2 - x)

inline HenonFamily intro_f() { return load_family(data_path("families/intro_f.json")); }
inline HenonFamily intro_g() { return load_family(data_path("families/intro_g.json")); }

inline Rational q(const char* s) { return parse_rational(s); }

inline Rational frac(long a, long b) {
  Rational r(a);
  r /= b;
  return r;
}

}  // namespace henon::testing

#endif  // HENON_TESTS_SUPPORT_HPP
