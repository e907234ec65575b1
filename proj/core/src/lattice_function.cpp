#include "radon/lattice_function.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace radon {

void LatticeFunction::check_dim(const Point& p) const {
  if (static_cast<int>(p.size()) != dim_)
    throw std::invalid_argument("LatticeFunction: point dimension mismatch");
}

void LatticeFunction::set(const Point& p, cplx v) {
  check_dim(p);
  if (v == cplx(0.0, 0.0))
    values_.erase(p);
  else
    values_[p] = v;
}

void LatticeFunction::add_at(const Point& p, cplx v) {
  check_dim(p);
  auto [it, inserted] = values_.try_emplace(p, v);
  if (!inserted) it->second += v;
  if (it->second == cplx(0.0, 0.0)) values_.erase(it);
}

LatticeFunction LatticeFunction::translated(const Point& z) const {
  check_dim(z);
  LatticeFunction g(dim_);
  for (const auto& [p, v] : values_) {
    Point q(p);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += z[i];
    g.values_.emplace(std::move(q), v);
  }
  return g;
}

LatticeFunction LatticeFunction::scaled(cplx c) const {
  LatticeFunction g(dim_);
  if (c == cplx(0.0, 0.0)) return g;
  for (const auto& [p, v] : values_) g.set(p, c * v);
  return g;
}

LatticeFunction delta(const Point& at) {
  LatticeFunction f(static_cast<int>(at.size()));
  f.set(at, 1.0);
  return f;
}

LatticeFunction add(const LatticeFunction& a, const LatticeFunction& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("add: dimension mismatch");
  LatticeFunction g = a;
  for (const auto& [p, v] : b.values()) g.add_at(p, v);
  return g;
}

LatticeFunction pointwise_abs(const LatticeFunction& f) {
  LatticeFunction g(f.dim());
  for (const auto& [p, v] : f.values()) g.set(p, std::abs(v));
  return g;
}

LatticeFunction pointwise_sup_abs(const std::vector<LatticeFunction>& fs) {
  if (fs.empty()) throw std::invalid_argument("pointwise_sup_abs: empty list");
  LatticeFunction g(fs.front().dim());
  for (const auto& f : fs) {
    if (f.dim() != g.dim()) throw std::invalid_argument("pointwise_sup_abs: dimension mismatch");
    for (const auto& [p, v] : f.values()) {
      double m = std::abs(v);
      if (m > std::abs(g.at(p))) g.set(p, m);
    }
  }
  return g;
}

LatticeFunction pointwise_sup_abs(const LatticeFunction& a, const LatticeFunction& b) {
  return pointwise_sup_abs(std::vector<LatticeFunction>{a, b});
}

double lp_norm(const LatticeFunction& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& [pt, v] : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  KahanSum s;
  for (const auto& [pt, v] : f.values()) s.add(std::pow(std::abs(v), p));
  return std::pow(s.value(), 1.0 / p);
}

void FunctionFamily::validate() const {
  for (const auto& f : members)
    if (f.dim() != dim()) throw std::invalid_argument("FunctionFamily: mixed dimensions");
}

double lp_l2_norm(const FunctionFamily& family, double p) {
  family.validate();
  std::map<Point, double> sq;
  for (const auto& f : family.members)
    for (const auto& [pt, v] : f.values()) sq[pt] += std::norm(v);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& [pt, v] : sq) m = std::max(m, std::sqrt(v));
    return m;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("lp_l2_norm: p must be >= 1");
  KahanSum s;
  for (const auto& [pt, v] : sq) s.add(std::pow(v, p / 2.0));
  return std::pow(s.value(), 1.0 / p);
}

// ---------------------------------------------------------------------------
// serialization

std::string to_json_string(const LatticeFunction& f) {
  nlohmann::ordered_json j;
  j["dim"] = f.dim();
  auto points = nlohmann::ordered_json::array();
  auto values = nlohmann::ordered_json::array();
  for (const auto& [p, v] : f.values()) {
    points.push_back(p);
    values.push_back({v.real(), v.imag()});
  }
  j["points"] = std::move(points);
  j["values"] = std::move(values);
  return j.dump();
}

LatticeFunction lattice_function_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("LatticeFunction: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("points") || !j.contains("values") ||
      j.size() != 3)
    throw std::invalid_argument("LatticeFunction: expected exactly {dim, points, values}");
  if (!j["dim"].is_number_integer() || !j["points"].is_array() || !j["values"].is_array())
    throw std::invalid_argument("LatticeFunction: schema type error");
  int dim = j["dim"].get<int>();
  if (dim < 1) throw std::invalid_argument("LatticeFunction: dim must be >= 1");
  const auto& pts = j["points"];
  const auto& vals = j["values"];
  if (pts.size() != vals.size())
    throw std::invalid_argument("LatticeFunction: points/values length mismatch");
  LatticeFunction f(dim);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].is_array() || static_cast<int>(pts[i].size()) != dim)
      throw std::invalid_argument("LatticeFunction: point arity mismatch");
    Point p;
    for (const auto& c : pts[i]) {
      if (!c.is_number_integer()) throw std::invalid_argument("LatticeFunction: non-integer coordinate");
      p.push_back(c.get<std::int64_t>());
    }
    if (!vals[i].is_array() || vals[i].size() != 2 || !vals[i][0].is_number() || !vals[i][1].is_number())
      throw std::invalid_argument("LatticeFunction: value must be [re, im]");
    f.set(p, cplx(vals[i][0].get<double>(), vals[i][1].get<double>()));
  }
  return f;
}

void save_lattice_function(const LatticeFunction& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json_string(f) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

LatticeFunction load_lattice_function(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return lattice_function_from_json(text);
}

}  // namespace radon
