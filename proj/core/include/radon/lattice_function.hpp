#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "radon/numeric.hpp"

namespace radon {

using Point = std::vector<std::int64_t>;

// finitely supported f: Z^m -> C, sparse; exact zeros are dropped
class LatticeFunction {
 public:
  LatticeFunction() = default;
  explicit LatticeFunction(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<Point, cplx>& values() const { return values_; }
  std::size_t support_size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  cplx at(const Point& p) const {
    auto it = values_.find(p);
    return it == values_.end() ? cplx(0.0, 0.0) : it->second;
  }

  void set(const Point& p, cplx v);
  void add_at(const Point& p, cplx v);

  LatticeFunction translated(const Point& z) const;
  LatticeFunction scaled(cplx c) const;

  friend bool operator==(const LatticeFunction& a, const LatticeFunction& b) {
    return a.dim_ == b.dim_ && a.values_ == b.values_;
  }

 private:
  void check_dim(const Point& p) const;
  int dim_ = 0;
  std::map<Point, cplx> values_;
};

LatticeFunction delta(const Point& at);
LatticeFunction add(const LatticeFunction& a, const LatticeFunction& b);

// |f| as a real-valued lattice function
LatticeFunction pointwise_abs(const LatticeFunction& f);
// pointwise max of |f_i| over the list
LatticeFunction pointwise_sup_abs(const std::vector<LatticeFunction>& fs);
LatticeFunction pointwise_sup_abs(const LatticeFunction& a, const LatticeFunction& b);

// (sum_x |f(x)|^p)^{1/p}; p = infinity() gives max |f|
double lp_norm(const LatticeFunction& f, double p);

struct FunctionFamily {
  std::vector<LatticeFunction> members;
  int dim() const { return members.empty() ? 0 : members.front().dim(); }
  void validate() const;
};

// || (sum_t |f_t|^2)^{1/2} ||_{l^p}
double lp_l2_norm(const FunctionFamily& family, double p);

// JSON serialization: {"dim": m, "points": [[...],...], "values": [[re,im],...]}
std::string to_json_string(const LatticeFunction& f);
LatticeFunction lattice_function_from_json(const std::string& text);
void save_lattice_function(const LatticeFunction& f, const std::string& path);
LatticeFunction load_lattice_function(const std::string& path);

}  // namespace radon
