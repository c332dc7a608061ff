#include "pickfreeze/metamodel/surrogate.hpp"

#include <cmath>
#include <fmt/format.h>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "pickfreeze/errors.hpp"
#include "pickfreeze/metamodel/nadaraya_watson.hpp"
#include "pickfreeze/parallel.hpp"

namespace pickfreeze {

namespace {

// exp(-x) underflows to zero (subnormals included) beyond this.
constexpr double kKernelCutoff = 745.2;

std::vector<double> inverse_squares(std::span<const double> h) {
  std::vector<double> out(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) out[j] = 1.0 / (h[j] * h[j]);
  return out;
}

}  // namespace

double gaussian_kernel(std::span<const double> u, std::span<const double> d,
                       std::span<const double> inv_h2) noexcept {
  double q = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double t = u[j] - d[j];
    q += t * t * inv_h2[j];
  }
  return q < kKernelCutoff ? std::exp(-q) : 0.0;
}

double Surrogate::predict(std::span<const double> u) const {
  if (kind == SurrogateKind::NadarayaWatson) return nw_eval(*this, u);
  const auto inv_h2 = inverse_squares(bandwidths);
  double sum = offset;
  for (std::size_t i = 0; i < design.size(); ++i)
    sum += weights[i] * gaussian_kernel(u, design.points.row(i), inv_h2);
  return sum;
}

std::vector<double> Surrogate::predict_batch(const Matrix& points) const {
  std::vector<double> out(points.rows);
  const auto count = static_cast<std::ptrdiff_t>(points.rows);
#pragma omp parallel for schedule(static) num_threads(resolve_workers(0))
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = predict(points.row(static_cast<std::size_t>(i)));
  return out;
}

std::vector<double> Surrogate::predict_batch_serial(const Matrix& points) const {
  std::vector<double> out(points.rows);
  for (std::size_t i = 0; i < points.rows; ++i) out[i] = predict(points.row(i));
  return out;
}

ModelSpec Surrogate::as_model(const ModelSpec& base) const {
  ModelSpec m = base;
  auto shared = std::make_shared<const Surrogate>(*this);
  m.evaluate = [shared](std::span<const double> x) { return shared->predict(x); };
  m.perturbation = nullptr;
  return m;
}

// Container layout, one item per line:
//   pickfreeze-surrogate 1
//   kind rkhs|nadaraya-watson
//   design maximin-lhs|iid
//   dimension p
//   size n
//   bandwidths h_1 .. h_p
//   nugget v
//   offset v
//   bounds lo_1 hi_1 .. lo_p hi_p      (or "bounds none")
//   points            followed by n lines of p values
//   observations      followed by n values, one per line
//   weights k         followed by k values (k = n for rkhs, 0 otherwise)
//   end
void write_surrogate(std::ostream& out, const Surrogate& s) {
  auto num = [](double v) { return fmt::format("{:.17g}", v); };
  const std::size_t p = s.design.dimension();
  const std::size_t n = s.design.size();
  out << "pickfreeze-surrogate 1\n";
  out << "kind " << (s.kind == SurrogateKind::Rkhs ? "rkhs" : "nadaraya-watson") << '\n';
  out << "design " << (s.design.kind == DesignKind::MaximinLhs ? "maximin-lhs" : "iid") << '\n';
  out << "dimension " << p << '\n';
  out << "size " << n << '\n';
  out << "bandwidths";
  for (double h : s.bandwidths) out << ' ' << num(h);
  out << "\nnugget " << num(s.nugget) << "\noffset " << num(s.offset) << "\nbounds";
  if (s.design.bounds.empty()) out << " none";
  for (const auto& b : s.design.bounds) out << ' ' << num(b.lo) << ' ' << num(b.hi);
  out << "\npoints\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) out << (j ? " " : "") << num(s.design.points(i, j));
    out << '\n';
  }
  out << "observations\n";
  for (double v : s.observations) out << num(v) << '\n';
  out << "weights " << s.weights.size() << '\n';
  for (double v : s.weights) out << num(v) << '\n';
  out << "end\n";
}

namespace {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void expect(const std::string& word) {
    std::string got;
    if (!(in_ >> got) || got != word)
      throw ConfigurationError(fmt::format("surrogate file: expected '{}', got '{}'", word, got));
  }
  std::string word() {
    std::string w;
    if (!(in_ >> w)) throw ConfigurationError("surrogate file: unexpected end of input");
    return w;
  }
  double number() {
    const std::string w = word();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(w, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != w.size() || w.empty())
      throw ConfigurationError(fmt::format("surrogate file: '{}' is not a number", w));
    return v;
  }
  std::size_t count() {
    const double v = number();
    if (v < 0 || v != std::floor(v)) throw ConfigurationError("surrogate file: bad count");
    return static_cast<std::size_t>(v);
  }

 private:
  std::istream& in_;
};

}  // namespace

Surrogate read_surrogate(std::istream& in) {
  Reader r(in);
  r.expect("pickfreeze-surrogate");
  if (const std::string version = r.word(); version != "1")
    throw ConfigurationError(fmt::format("surrogate file: unsupported version {}", version));
  Surrogate s;
  r.expect("kind");
  const std::string kind = r.word();
  if (kind == "rkhs") s.kind = SurrogateKind::Rkhs;
  else if (kind == "nadaraya-watson") s.kind = SurrogateKind::NadarayaWatson;
  else throw ConfigurationError(fmt::format("surrogate file: unknown kind '{}'", kind));
  r.expect("design");
  const std::string dkind = r.word();
  if (dkind == "maximin-lhs") s.design.kind = DesignKind::MaximinLhs;
  else if (dkind == "iid") s.design.kind = DesignKind::Iid;
  else throw ConfigurationError(fmt::format("surrogate file: unknown design '{}'", dkind));
  r.expect("dimension");
  const std::size_t p = r.count();
  r.expect("size");
  const std::size_t n = r.count();
  if (p == 0 || n == 0) throw ConfigurationError("surrogate file: empty design");
  r.expect("bandwidths");
  for (std::size_t j = 0; j < p; ++j) s.bandwidths.push_back(r.number());
  r.expect("nugget");
  s.nugget = r.number();
  r.expect("offset");
  s.offset = r.number();
  r.expect("bounds");
  {
    const std::string first = r.word();
    if (first != "none") {
      std::istringstream head(first);
      double lo = 0.0;
      head >> lo;
      if (!head || !head.eof()) throw ConfigurationError("surrogate file: bad bounds");
      s.design.bounds.push_back({lo, r.number()});
      for (std::size_t j = 1; j < p; ++j) {
        const double l = r.number();
        s.design.bounds.push_back({l, r.number()});
      }
    }
  }
  r.expect("points");
  s.design.points = Matrix(n, p);
  for (double& v : s.design.points.data) v = r.number();
  r.expect("observations");
  s.observations.resize(n);
  for (double& v : s.observations) v = r.number();
  r.expect("weights");
  const std::size_t k = r.count();
  if (k != (s.kind == SurrogateKind::Rkhs ? n : 0))
    throw ConfigurationError("surrogate file: weight count does not match kind");
  s.weights.resize(k);
  for (double& v : s.weights) v = r.number();
  r.expect("end");
  for (double h : s.bandwidths)
    if (!(h > 0.0)) throw ConfigurationError("surrogate file: bandwidths must be positive");
  return s;
}

}  // namespace pickfreeze
