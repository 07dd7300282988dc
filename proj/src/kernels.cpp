#include "degindex/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace degindex {

namespace {

// Dense evaluation cache keeps the oracle's inner loops off pow().
constexpr int kCacheLimit = 64;

bool nonnegative_integer(double alpha) {
  return alpha >= 0.0 && alpha == std::floor(alpha) && alpha <= 1e6;
}

}  // namespace

Kernel::Kernel(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

Kernel Kernel::randic() {
  Kernel k(Kind::Randic, "randic");
  k.fill_cache();
  return k;
}

Kernel Kernel::general_randic(double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("exponent must be finite");
  Kernel k(Kind::GeneralRandic, "general_randic");
  k.alpha_ = alpha;
  if (nonnegative_integer(alpha)) {
    k.exactness_ = Exactness::RationalExact;
    k.alpha_integer_ = static_cast<long>(alpha);
  }
  k.fill_cache();
  return k;
}

Kernel Kernel::zagreb_first() {
  Kernel k(Kind::ZagrebFirst, "zagreb_first");
  k.exactness_ = Exactness::RationalExact;
  k.fill_cache();
  return k;
}

Kernel Kernel::zagreb_second() {
  Kernel k(Kind::ZagrebSecond, "zagreb_second");
  k.exactness_ = Exactness::RationalExact;
  k.fill_cache();
  return k;
}

Kernel Kernel::tabulated_from_csv(std::string_view csv_text) {
  std::istringstream in{std::string(csv_text)};
  std::string line;
  int line_no = 0;
  std::map<std::pair<int, int>, Rational> cells;
  int lo = 0, hi = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      std::string squashed;
      for (char c : line)
        if (c != ' ' && c != '\t') squashed.push_back(c);
      if (squashed != "a,b,value")
        throw ParseError("expected CSV header 'a,b,value'", line_no, 1);
      saw_header = true;
      continue;
    }
    auto first = line.find(',');
    auto second = first == std::string::npos ? std::string::npos : line.find(',', first + 1);
    if (second == std::string::npos)
      throw ParseError("expected 'a,b,value' row", line_no, 1);
    int a = 0, b = 0;
    try {
      a = std::stoi(line.substr(0, first));
      b = std::stoi(line.substr(first + 1, second - first - 1));
    } catch (const std::exception&) {
      throw ParseError("malformed degree in table row", line_no, 1);
    }
    if (a < 1 || b < 1) throw ParseError("table degrees must be positive", line_no, 1);
    Rational value = parse_rational(line.substr(second + 1));
    std::pair<int, int> key = std::minmax(a, b);
    auto [it, inserted] = cells.emplace(key, value);
    if (!inserted && it->second != value)
      throw ParseError("asymmetric table: conflicting values for (" + std::to_string(key.first) +
                           "," + std::to_string(key.second) + ")",
                       line_no, 1);
    lo = lo == 0 ? std::min(a, b) : std::min({lo, a, b});
    hi = std::max({hi, a, b});
  }
  if (cells.empty()) throw std::invalid_argument("empty kernel table");

  Kernel k(Kind::Tabulated, "tabulated");
  k.exactness_ = Exactness::RationalExact;
  k.table_lo_ = lo;
  k.table_hi_ = hi;
  const int width = hi - lo + 1;
  k.table_.resize(static_cast<size_t>(width) * width);
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b) {
      auto it = cells.find({a, b});
      if (it == cells.end())
        throw std::invalid_argument("incomplete table: missing value for (" + std::to_string(a) +
                                    "," + std::to_string(b) + ")");
      k.table_[static_cast<size_t>(a - lo) * width + (b - lo)] = it->second;
      k.table_[static_cast<size_t>(b - lo) * width + (a - lo)] = it->second;
    }
  k.fill_cache();
  return k;
}

std::string Kernel::display_name() const {
  if (kind_ == Kind::GeneralRandic) {
    std::ostringstream out;
    out << name_ << "(" << alpha_ << ")";
    return out.str();
  }
  return name_;
}

std::optional<double> Kernel::alpha() const {
  if (kind_ == Kind::GeneralRandic) return alpha_;
  return std::nullopt;
}

void Kernel::check_domain(int a, int b) const {
  if (a < 1 || b < 1)
    throw std::domain_error("kernel domain violation: degrees must be positive, got (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
  if (kind_ == Kind::Tabulated &&
      (a < table_lo_ || a > table_hi_ || b < table_lo_ || b > table_hi_))
    throw std::domain_error("kernel domain violation: (" + std::to_string(a) + "," +
                            std::to_string(b) + ") outside tabulated range [" +
                            std::to_string(table_lo_) + "," + std::to_string(table_hi_) + "]");
}

double Kernel::evaluate(int a, int b) const {
  switch (kind_) {
    case Kind::Randic:
      return 1.0 / std::sqrt(static_cast<double>(a) * b);
    case Kind::GeneralRandic:
      return std::pow(static_cast<double>(a) * b, alpha_);
    case Kind::ZagrebFirst:
      return static_cast<double>(a) + b;
    case Kind::ZagrebSecond:
      return static_cast<double>(a) * b;
    case Kind::Tabulated: {
      const int width = table_hi_ - table_lo_ + 1;
      return rational_to_double(table_[static_cast<size_t>(a - table_lo_) * width + (b - table_lo_)]);
    }
  }
  throw std::logic_error("unreachable kernel kind");
}

void Kernel::fill_cache() {
  cache_hi_ = kind_ == Kind::Tabulated ? table_hi_ : kCacheLimit;
  const int lo = kind_ == Kind::Tabulated ? table_lo_ : 1;
  const int width = cache_hi_ + 1;
  cache_.assign(static_cast<size_t>(width) * width,
                std::numeric_limits<double>::quiet_NaN());
  for (int a = lo; a <= cache_hi_; ++a)
    for (int b = lo; b <= cache_hi_; ++b)
      cache_[static_cast<size_t>(a) * width + b] = evaluate(a, b);
}

double Kernel::operator()(int a, int b) const {
  check_domain(a, b);
  if (a <= cache_hi_ && b <= cache_hi_) {
    double cached = cache_[static_cast<size_t>(a) * (cache_hi_ + 1) + b];
    if (!std::isnan(cached)) return cached;
  }
  return evaluate(a, b);
}

Rational Kernel::exact(int a, int b) const {
  if (!rational_exact())
    throw std::logic_error("kernel '" + name_ + "' has no exact rational evaluation");
  check_domain(a, b);
  switch (kind_) {
    case Kind::ZagrebFirst:
      return Rational(a + b);
    case Kind::ZagrebSecond:
      return Rational(static_cast<long>(a) * b);
    case Kind::GeneralRandic:
      return Rational(boost::multiprecision::pow(BigInt(static_cast<long>(a) * b),
                                                 static_cast<unsigned>(alpha_integer_)));
    case Kind::Tabulated: {
      const int width = table_hi_ - table_lo_ + 1;
      return table_[static_cast<size_t>(a - table_lo_) * width + (b - table_lo_)];
    }
    case Kind::Randic:
      break;
  }
  throw std::logic_error("unreachable kernel kind");
}

double index_value(const Graph& g, const Kernel& k) {
  double total = 0.0;
  for (const auto& [u, v] : g.edges()) total += k(g.degree(u), g.degree(v));
  return total;
}

Rational exact_index_value(const Graph& g, const Kernel& k) {
  Rational total = 0;
  for (const auto& [u, v] : g.edges()) total += k.exact(g.degree(u), g.degree(v));
  return total;
}

}  // namespace degindex
