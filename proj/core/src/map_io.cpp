#include "henon/map_io.hpp"

#include <fstream>
#include <sstream>

namespace henon {

using nlohmann::json;

SpecError::SpecError(const std::string& message, int line, std::string field)
    : std::runtime_error("line " + std::to_string(line) + ": " + field + ": " + message),
      line_(line),
      field_(std::move(field)) {}

namespace {

int line_at(const std::string& text, size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// Line of the occurrence-th (0-based) appearance of "key" as a JSON key.
int line_of_key(const std::string& text, const std::string& key, size_t occurrence) {
  const std::string needle = "\"" + key + "\"";
  size_t pos = 0, seen = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    size_t after = text.find_first_not_of(" \t\r\n", pos + needle.size());
    if (after != std::string::npos && text[after] == ':') {
      if (seen == occurrence) return line_at(text, pos);
      ++seen;
    }
    pos += needle.size();
  }
  return 1;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(e.what(), line_at(text, e.byte > 0 ? e.byte - 1 : 0), "document");
  }
}

Rational coefficient(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (v.is_number_float()) return parse_rational(v.dump());
  throw std::invalid_argument("expected a rational (string or number)");
}

const json& factors_of(const json& doc, const std::string& text) {
  if (!doc.is_object() || !doc.contains("factors"))
    throw SpecError("missing \"factors\" array", line_of_key(text, "factors", 0), "factors");
  const json& fs = doc.at("factors");
  if (!fs.is_array() || fs.empty())
    throw SpecError("\"factors\" must be a nonempty array", line_of_key(text, "factors", 0), "factors");
  return fs;
}

UniPoly t_poly(const json& v) {
  if (!v.is_array()) return UniPoly::constant(coefficient(v));
  std::vector<Rational> c;
  for (const auto& e : v) c.push_back(coefficient(e));
  return UniPoly(std::move(c));
}

json rational_json(const Rational& q) { return to_string(q); }

}  // namespace

HenonMap parse_map(const std::string& text) {
  json doc = parse_document(text);
  const json& fs = factors_of(doc, text);
  std::vector<ElementaryHenon> factors;
  for (size_t i = 0; i < fs.size(); ++i) {
    const json& f = fs[i];
    const std::string where = "factors[" + std::to_string(i) + "]";
    if (!f.is_object() || !f.contains("poly") || !f.contains("delta"))
      throw SpecError("factor needs \"poly\" and \"delta\"", line_of_key(text, "poly", i), where);
    const int poly_line = line_of_key(text, "poly", i), delta_line = line_of_key(text, "delta", i);
    if (!f.at("poly").is_array()) throw SpecError("\"poly\" must be an array", poly_line, where + ".poly");
    std::vector<Rational> c;
    try {
      for (const auto& e : f.at("poly")) c.push_back(coefficient(e));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what(), poly_line, where + ".poly");
    }
    Rational delta;
    try {
      delta = coefficient(f.at("delta"));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what(), delta_line, where + ".delta");
    }
    UniPoly p(std::move(c));
    if (p.degree() < 2)
      throw SpecError("polynomial degree must be >= 2 (got " + std::to_string(p.degree()) + ")", poly_line,
                      where + ".poly");
    if (delta == 0) throw SpecError("delta must be nonzero", delta_line, where + ".delta");
    factors.emplace_back(std::move(p), std::move(delta));
  }
  return HenonMap(std::move(factors));
}

HenonFamily parse_family(const std::string& text) {
  json doc = parse_document(text);
  const json& fs = factors_of(doc, text);
  std::vector<FamilyFactor> factors;
  for (size_t i = 0; i < fs.size(); ++i) {
    const json& f = fs[i];
    const std::string where = "factors[" + std::to_string(i) + "]";
    if (!f.is_object() || !f.contains("poly") || !f.contains("delta"))
      throw SpecError("factor needs \"poly\" and \"delta\"", line_of_key(text, "poly", i), where);
    const int poly_line = line_of_key(text, "poly", i), delta_line = line_of_key(text, "delta", i);
    if (!f.at("poly").is_array()) throw SpecError("\"poly\" must be an array", poly_line, where + ".poly");
    FamilyFactor ff;
    try {
      for (const auto& e : f.at("poly")) ff.poly.push_back(t_poly(e));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what(), poly_line, where + ".poly");
    }
    try {
      ff.delta = t_poly(f.at("delta"));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what(), delta_line, where + ".delta");
    }
    int d = static_cast<int>(ff.poly.size()) - 1;
    while (d >= 0 && ff.poly[static_cast<size_t>(d)].is_zero()) --d;
    if (d < 2)
      throw SpecError("polynomial degree in y must be >= 2 (got " + std::to_string(d) + ")", poly_line,
                      where + ".poly");
    if (ff.delta.is_zero()) throw SpecError("delta must not be identically zero", delta_line, where + ".delta");
    factors.push_back(std::move(ff));
  }
  return HenonFamily(std::move(factors));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open file", 0, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HenonMap load_map(const std::string& path) { return parse_map(read_file(path)); }
HenonFamily load_family(const std::string& path) { return parse_family(read_file(path)); }

json to_json(const HenonMap& f) {
  json fs = json::array();
  for (const auto& h : f.factors()) {
    json poly = json::array();
    for (const auto& c : h.poly().coeffs()) poly.push_back(rational_json(c));
    fs.push_back({{"poly", poly}, {"delta", rational_json(h.delta())}});
  }
  return {{"factors", fs}};
}

json to_json(const HenonFamily& f) {
  auto tp = [](const UniPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
    if (a.empty()) a.push_back("0");
    return a;
  };
  json fs = json::array();
  for (const auto& ff : f.factors()) {
    json poly = json::array();
    for (const auto& c : ff.poly) poly.push_back(tp(c));
    fs.push_back({{"poly", poly}, {"delta", tp(ff.delta)}});
  }
  return {{"factors", fs}};
}

ExactPoint parse_exact_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("point must be \"x,y\"");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') {
    size_t used = 0;
    double re = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed number '" + raw + "'");
    return {re, 0.0};
  }
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not an exponent sign or the leading sign.
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag_of = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("malformed complex '" + raw + "'");
    return v;
  };
  if (split == std::string::npos) return {0.0, imag_of(body)};
  size_t used = 0;
  std::string re_part = body.substr(0, split);
  double re = std::stod(re_part, &used);
  if (used != re_part.size()) throw std::invalid_argument("malformed complex '" + raw + "'");
  return {re, imag_of(body.substr(split))};
}

NumericPoint parse_numeric_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("point must be \"x,y\"");
  return {parse_complex(text.substr(0, comma)), parse_complex(text.substr(comma + 1))};
}

}  // namespace henon
