#include "radon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace radon {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> diff(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

int ConvexBody::dim() const {
  if (const auto* b = std::get_if<Ball>(&shape)) return static_cast<int>(b->center.size());
  if (const auto* b = std::get_if<AxisBox>(&shape)) return static_cast<int>(b->lo.size());
  const auto& p = std::get<Polytope>(shape);
  return static_cast<int>(p.center.size());
}

std::vector<double> ConvexBody::center_point() const {
  if (const auto* b = std::get_if<Ball>(&shape)) return b->center;
  if (const auto* b = std::get_if<AxisBox>(&shape)) {
    std::vector<double> c(b->lo.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (b->lo[i] + b->hi[i]);
    return c;
  }
  return std::get<Polytope>(shape).center;
}

double ConvexBody::bounding_radius() const {
  if (const auto* b = std::get_if<Ball>(&shape)) return b->radius;
  if (const auto* b = std::get_if<AxisBox>(&shape)) {
    double s = 0.0;
    for (std::size_t i = 0; i < b->lo.size(); ++i) {
      double h = 0.5 * (b->hi[i] - b->lo[i]);
      s += h * h;
    }
    return std::sqrt(s);
  }
  const auto& p = std::get<Polytope>(shape);
  // r such that the ball of radius r about center contains the polytope:
  // for each vertex-free description fall back to max over halfspace chords.
  // A safe over-estimate: center offset satisfying all constraints lies within
  // max_i (b_i - <a_i, c>) / min nonzero |a_i| along each axis; we take a crude
  // box bound by LP-free axis sweep.
  double r = 0.0;
  const int k = static_cast<int>(p.center.size());
  for (int axis = 0; axis < k; ++axis) {
    for (double dir : {-1.0, 1.0}) {
      // max t with c + t*dir*e_axis feasible
      double t = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < p.normals.size(); ++i) {
        double a = p.normals[i][axis] * dir;
        double slack = p.offsets[i] - dot(p.normals[i], p.center);
        if (a > 1e-15) t = std::min(t, slack / a);
      }
      if (!std::isfinite(t)) throw std::invalid_argument("geometry: unbounded polytope");
      r = std::max(r, t);
    }
  }
  return r * std::sqrt(static_cast<double>(k));
}

std::optional<double> ConvexBody::inner_radius() const {
  if (const auto* b = std::get_if<Ball>(&shape)) return b->radius;
  if (const auto* b = std::get_if<AxisBox>(&shape)) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b->lo.size(); ++i) m = std::min(m, 0.5 * (b->hi[i] - b->lo[i]));
    return m;
  }
  const auto& p = std::get<Polytope>(shape);
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.normals.size(); ++i) {
    double na = norm2(p.normals[i]);
    if (na <= 0.0) continue;
    m = std::min(m, (p.offsets[i] - dot(p.normals[i], p.center)) / na);
  }
  if (!std::isfinite(m) || m <= 0.0) return std::nullopt;
  return m;
}

bool ConvexBody::contains(const std::vector<double>& x) const {
  if (const auto* b = std::get_if<Ball>(&shape)) return norm2(diff(x, b->center)) <= b->radius;
  if (const auto* b = std::get_if<AxisBox>(&shape)) {
    for (std::size_t i = 0; i < b->lo.size(); ++i)
      if (x[i] < b->lo[i] || x[i] > b->hi[i]) return false;
    return true;
  }
  const auto& p = std::get<Polytope>(shape);
  for (std::size_t i = 0; i < p.normals.size(); ++i)
    if (dot(p.normals[i], x) > p.offsets[i]) return false;
  return true;
}

bool ConvexBody::contains(const Point& x) const {
  std::vector<double> v(x.begin(), x.end());
  return contains(v);
}

double ConvexBody::boundary_distance(const std::vector<double>& x) const {
  if (const auto* b = std::get_if<Ball>(&shape)) return b->radius - norm2(diff(x, b->center));
  if (const auto* b = std::get_if<AxisBox>(&shape)) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b->lo.size(); ++i)
      m = std::min(m, std::min(x[i] - b->lo[i], b->hi[i] - x[i]));
    return m;
  }
  const auto& p = std::get<Polytope>(shape);
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.normals.size(); ++i) {
    double na = norm2(p.normals[i]);
    if (na <= 0.0) continue;
    m = std::min(m, (p.offsets[i] - dot(p.normals[i], x)) / na);
  }
  return m;
}

ConvexBody ConvexBody::ball(std::vector<double> center, double r) {
  if (r <= 0.0) throw std::invalid_argument("geometry: ball radius must be positive");
  if (center.empty()) throw std::invalid_argument("geometry: empty center");
  return ConvexBody{Ball{std::move(center), r}};
}

ConvexBody ConvexBody::box(std::vector<double> lo, std::vector<double> hi) {
  if (lo.empty() || lo.size() != hi.size()) throw std::invalid_argument("geometry: box arity");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] >= hi[i]) throw std::invalid_argument("geometry: box lo >= hi");
  return ConvexBody{AxisBox{std::move(lo), std::move(hi)}};
}

ConvexBody ConvexBody::window(int k, std::int64_t N) {
  if (k < 1 || N < 1) throw std::invalid_argument("geometry: window needs k >= 1, N >= 1");
  std::vector<double> lo(k, 0.5), hi(k, static_cast<double>(N) + 0.5);
  return box(std::move(lo), std::move(hi));
}

ConvexBody ConvexBody::polytope(std::vector<std::vector<double>> normals, std::vector<double> offsets,
                                std::vector<double> center) {
  if (normals.empty() || normals.size() != offsets.size())
    throw std::invalid_argument("geometry: polytope arity");
  for (const auto& n : normals)
    if (n.size() != center.size()) throw std::invalid_argument("geometry: polytope normal arity");
  ConvexBody b{Polytope{std::move(normals), std::move(offsets), std::move(center)}};
  const auto& p = std::get<Polytope>(b.shape);
  for (std::size_t i = 0; i < p.normals.size(); ++i)
    if (dot(p.normals[i], p.center) > p.offsets[i])
      throw std::invalid_argument("geometry: polytope center infeasible");
  return b;
}

LatticeCount lattice_points(const ConvexBody& body, bool keepPoints) {
  const int k = body.dim();
  const double r = body.bounding_radius();
  if (k <= 0) throw std::invalid_argument("geometry: bad dimension");
  if ((k == 1 && r > 1e7) || (k == 2 && r > 1e4) || (k == 3 && r > 200.0) || k > 3)
    throw std::invalid_argument("geometry: lattice scan budget exceeded (r/k too large)");
  const auto c = body.center_point();
  std::vector<std::int64_t> lo(k), hi(k);
  for (int i = 0; i < k; ++i) {
    lo[i] = static_cast<std::int64_t>(std::floor(c[i] - r));
    hi[i] = static_cast<std::int64_t>(std::ceil(c[i] + r));
  }
  LatticeCount out;
  Point x(lo.begin(), lo.end());
  std::vector<double> xd(k);
  while (true) {
    for (int i = 0; i < k; ++i) xd[i] = static_cast<double>(x[i]);
    if (body.contains(xd)) {
      ++out.count;
      if (keepPoints) out.points.push_back(x);
    }
    int axis = k - 1;
    while (axis >= 0) {
      if (++x[axis] <= hi[axis]) break;
      x[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
  return out;
}

BoundaryCount boundary_near_count(const ConvexBody& body, double s, double sigma) {
  if (s <= 0.0) throw std::invalid_argument("geometry: s must be positive");
  const auto pts = lattice_points(body, true);
  BoundaryCount out;
  std::vector<double> xd(body.dim());
  for (const auto& x : pts.points) {
    for (std::size_t i = 0; i < xd.size(); ++i) xd[i] = static_cast<double>(x[i]);
    if (body.boundary_distance(xd) < s) ++out.count;
  }
  const double r = body.bounding_radius();
  const int k = body.dim();
  out.comparisonInner = s * std::pow(r, static_cast<double>(k - 1));
  out.comparisonSigma = s * std::pow(r, static_cast<double>(k - 1) + 2.0 * sigma);
  return out;
}

ConvexBody dilate_body(const ConvexBody& body, double delta) {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("geometry: dilation factor must lie in (0, 1]");
  ConvexBody out = body;
  if (auto* b = std::get_if<Ball>(&out.shape)) {
    b->radius *= delta;
    return out;
  }
  if (auto* b = std::get_if<AxisBox>(&out.shape)) {
    for (std::size_t i = 0; i < b->lo.size(); ++i) {
      double c = 0.5 * (b->lo[i] + b->hi[i]), h = 0.5 * (b->hi[i] - b->lo[i]) * delta;
      b->lo[i] = c - h;
      b->hi[i] = c + h;
    }
    return out;
  }
  auto& p = std::get<Polytope>(out.shape);
  // <a, c + delta*(x - c)> <= b  <=>  <a, x> <= c-term + (b - <a,c>)/delta... keep
  // form: replace offsets by <a,c> + delta*(b - <a,c>)
  for (std::size_t i = 0; i < p.normals.size(); ++i) {
    double ac = dot(p.normals[i], p.center);
    p.offsets[i] = ac + delta * (p.offsets[i] - ac);
  }
  return out;
}

namespace {

std::vector<double> parse_num_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("geometry: empty number in body spec");
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("geometry: bad number '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

ConvexBody parse_body(const std::string& spec, int k) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("geometry: body spec needs kind:args");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  // split args on key= boundaries: r=, c=, half=, lo=, hi=
  std::vector<std::pair<std::string, std::string>> kv;
  std::size_t i = 0;
  while (i < args.size()) {
    auto eq = args.find('=', i);
    if (eq == std::string::npos) throw std::invalid_argument("geometry: body spec expects key=value");
    std::string key = args.substr(i, eq - i);
    if (!key.empty() && key.front() == ',') key.erase(key.begin());
    // value runs until the next ",key=" occurrence
    std::size_t j = eq + 1;
    std::size_t end = args.size();
    while (j < args.size()) {
      auto comma = args.find(',', j);
      if (comma == std::string::npos) break;
      auto nexteq = args.find('=', comma);
      auto nextcomma = args.find(',', comma + 1);
      if (nexteq != std::string::npos && (nextcomma == std::string::npos || nexteq < nextcomma)) {
        end = comma;
        break;
      }
      j = comma + 1;
    }
    kv.emplace_back(key, args.substr(eq + 1, end - eq - 1));
    i = (end == args.size()) ? end : end + 1;
  }
  auto find = [&](const std::string& key) -> const std::string* {
    for (const auto& [k2, v] : kv)
      if (k2 == key) return &v;
    return nullptr;
  };
  if (kind == "ball") {
    const auto* r = find("r");
    if (!r) throw std::invalid_argument("geometry: ball spec needs r=");
    std::vector<double> c(k, 0.0);
    if (const auto* cs = find("c")) {
      c = parse_num_list(*cs);
      if (static_cast<int>(c.size()) != k) throw std::invalid_argument("geometry: center arity");
    }
    return ConvexBody::ball(std::move(c), std::stod(*r));
  }
  if (kind == "box") {
    if (const auto* h = find("half")) {
      double half = std::stod(*h);
      return ConvexBody::box(std::vector<double>(k, -half), std::vector<double>(k, half));
    }
    const auto* lo = find("lo");
    const auto* hi = find("hi");
    if (!lo || !hi) throw std::invalid_argument("geometry: box spec needs half= or lo=,hi=");
    auto lov = parse_num_list(*lo), hiv = parse_num_list(*hi);
    if (static_cast<int>(lov.size()) != k || static_cast<int>(hiv.size()) != k)
      throw std::invalid_argument("geometry: box arity");
    return ConvexBody::box(std::move(lov), std::move(hiv));
  }
  throw std::invalid_argument("geometry: unknown body kind '" + kind + "'");
}

}  // namespace radon
