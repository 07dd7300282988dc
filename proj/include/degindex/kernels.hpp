#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degindex/graph.hpp"
#include "degindex/rational.hpp"

namespace degindex {

// Symmetric function f(a, b) on positive integer degree pairs. A kernel
// together with index_value() defines a degree-based topological index
// F(G) = sum over edges uv of f(d(u), d(v)).
class Kernel {
 public:
  enum class Exactness { RationalExact, Floating };

  static Kernel randic();                     // (ab)^(-1/2)
  static Kernel general_randic(double alpha); // (ab)^alpha
  static Kernel zagreb_first();               // a + b
  static Kernel zagreb_second();              // a * b
  // Symmetric table on a square degree range; CSV header "a,b,value".
  static Kernel tabulated_from_csv(std::string_view csv_text);

  const std::string& name() const { return name_; }
  std::string display_name() const;
  Exactness exactness() const { return exactness_; }
  bool rational_exact() const { return exactness_ == Exactness::RationalExact; }
  std::optional<double> alpha() const;

  // Evaluate f(a, b); throws std::domain_error outside the kernel domain.
  double operator()(int a, int b) const;
  // Exact value; only valid for rational-exact kernels.
  Rational exact(int a, int b) const;

 private:
  enum class Kind { Randic, GeneralRandic, ZagrebFirst, ZagrebSecond, Tabulated };

  Kernel(Kind kind, std::string name);
  void check_domain(int a, int b) const;
  double evaluate(int a, int b) const;
  void fill_cache();

  Kind kind_;
  std::string name_;
  Exactness exactness_ = Exactness::Floating;
  double alpha_ = 0.0;
  long alpha_integer_ = 0;        // set when alpha is a non-negative integer
  int table_lo_ = 1;              // tabulated domain [table_lo_, table_hi_]
  int table_hi_ = 0;
  std::vector<Rational> table_;   // row-major over the tabulated square
  std::vector<double> cache_;     // dense cache for small degrees
  int cache_hi_ = 0;
};

double index_value(const Graph& g, const Kernel& k);

// Exact evaluation; requires k.rational_exact().
Rational exact_index_value(const Graph& g, const Kernel& k);

}  // namespace degindex
