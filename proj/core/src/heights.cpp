#include "henon/heights.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace henon {

using nlohmann::json;

HeightCalculator::HeightCalculator(HenonMap f, HeightOptions options)
    : map_(std::move(f)), green_(map_, options.green), options_(options) {}

HeightValue HeightCalculator::operator()(const ExactPoint& q) const {
  HeightValue h;
  for (const PlaceId& place : relevant_places(map_, q)) {
    PlaceContribution c;
    c.place = place;
    if (place.archimedean()) {
      const NumericPoint z = to_numeric(q);
      GreenValue gp = green_.plus(z), gm = green_.minus(z);
      c.plus = gp.value;
      c.minus = gm.value;
      c.error = gp.error + gm.error;
      h.archimedean_escaped = gp.escaped || gm.escaped;
    } else {
      PadicGreenValue gp = padic_green(map_, Direction::plus, q, place.prime, options_.padic);
      PadicGreenValue gm = padic_green(map_, Direction::minus, q, place.prime, options_.padic);
      c.plus = gp.value();
      c.minus = gm.value();
      c.error = gp.error() + gm.error();
      c.exact = gp.exact && gm.exact;
      c.plus_coefficient = gp.coefficient;
      c.minus_coefficient = gm.coefficient;
      if (!c.exact) h.finite_places_exact = false;
    }
    h.h_plus += c.plus;
    h.h_minus += c.minus;
    h.error += c.error;
    h.per_place.push_back(std::move(c));
  }
  return h;
}

HeightValue canonical_height(const HenonMap& f, const ExactPoint& q, double tol, const HeightOptions& options) {
  if (!(tol > 0)) throw std::invalid_argument("canonical_height: tol must be positive");
  return HeightCalculator(f, options)(q);
}

bool is_periodic_by_height(const HeightValue& h, double eps) {
  if (!(eps > h.error))
    throw std::domain_error("is_periodic_by_height: eps must exceed the height error " + std::to_string(h.error));
  return h.total() <= eps;
}

bool is_periodic_by_height(const HenonMap& f, const ExactPoint& q, double eps, double tol,
                           const HeightOptions& options) {
  return is_periodic_by_height(canonical_height(f, q, tol, options), eps);
}

PairHeight pair_small_height(const HenonMap& f, const HenonMap& g, const ExactPoint& q, double eps, double tol,
                             const HeightOptions& options) {
  HeightValue hf = canonical_height(f, q, tol, options), hg = canonical_height(g, q, tol, options);
  PairHeight out;
  out.value = hf.total() + hg.total();
  out.error = hf.error + hg.error;
  if (!(eps > out.error))
    throw std::domain_error("pair_small_height: eps must exceed the combined error " + std::to_string(out.error));
  out.member = out.value <= eps;
  return out;
}

namespace {

std::string hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double unhex(const json& v) { return std::strtod(v.get<std::string>().c_str(), nullptr); }

}  // namespace

json to_json(const HeightValue& h) {
  json places = json::array();
  for (const auto& c : h.per_place) {
    json e = {{"place", c.place.to_string()},
              {"plus", c.plus},
              {"minus", c.minus},
              {"error", c.error},
              {"exact", c.exact},
              {"bits", {{"plus", hex(c.plus)}, {"minus", hex(c.minus)}, {"error", hex(c.error)}}}};
    if (!c.place.archimedean()) {
      e["plus_log_p_multiple"] = to_string(c.plus_coefficient);
      e["minus_log_p_multiple"] = to_string(c.minus_coefficient);
    }
    places.push_back(std::move(e));
  }
  return {{"h_plus", h.h_plus},
          {"h_minus", h.h_minus},
          {"total", h.total()},
          {"error", h.error},
          {"finite_places_exact", h.finite_places_exact},
          {"archimedean_escaped", h.archimedean_escaped},
          {"per_place", places},
          {"bits", {{"h_plus", hex(h.h_plus)}, {"h_minus", hex(h.h_minus)}, {"error", hex(h.error)}}}};
}

HeightValue height_from_json(const json& j) {
  HeightValue h;
  h.h_plus = unhex(j.at("bits").at("h_plus"));
  h.h_minus = unhex(j.at("bits").at("h_minus"));
  h.error = unhex(j.at("bits").at("error"));
  h.finite_places_exact = j.at("finite_places_exact").get<bool>();
  h.archimedean_escaped = j.at("archimedean_escaped").get<bool>();
  for (const auto& e : j.at("per_place")) {
    PlaceContribution c;
    const std::string place = e.at("place").get<std::string>();
    c.place = place == "inf" ? PlaceId::infinity() : PlaceId::finite(std::stoul(place));
    c.plus = unhex(e.at("bits").at("plus"));
    c.minus = unhex(e.at("bits").at("minus"));
    c.error = unhex(e.at("bits").at("error"));
    c.exact = e.at("exact").get<bool>();
    if (!c.place.archimedean()) {
      c.plus_coefficient = parse_rational(e.at("plus_log_p_multiple").get<std::string>());
      c.minus_coefficient = parse_rational(e.at("minus_log_p_multiple").get<std::string>());
    }
    h.per_place.push_back(std::move(c));
  }
  return h;
}

HeightCache::HeightCache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      entries_[j.at("key").get<std::string>()] = height_from_json(j.at("value"));
    } catch (const std::exception&) {
      // A torn trailing line from an interrupted append is ignored.
    }
  }
}

std::string HeightCache::key(const HenonMap& f, const ExactPoint& q) {
  return f.hash() + "|" + to_string(q.x) + "," + to_string(q.y);
}

std::size_t HeightCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void HeightCache::append(const std::string& key, const HeightValue& value) {
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  out << json{{"key", key}, {"value", to_json(value)}}.dump() << '\n';
}

HeightValue HeightCache::get_or_compute(const HeightCalculator& calc, const ExactPoint& q) {
  const std::string k = key(calc.map(), q);
  std::promise<HeightValue> promise;
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(k); it != entries_.end()) {
      ++hits_;
      return it->second;
    }
    if (auto it = in_flight_.find(k); it != in_flight_.end()) {
      auto fut = it->second;
      mutex_.unlock();
      HeightValue v = fut.get();
      mutex_.lock();
      return v;
    }
    in_flight_.emplace(k, promise.get_future().share());
  }
  HeightValue value;
  try {
    value = calc(q);
  } catch (...) {
    promise.set_exception(std::current_exception());
    std::lock_guard lock(mutex_);
    in_flight_.erase(k);
    throw;
  }
  promise.set_value(value);
  std::lock_guard lock(mutex_);
  entries_.emplace(k, value);
  in_flight_.erase(k);
  append(k, value);
  return value;
}

}  // namespace henon
