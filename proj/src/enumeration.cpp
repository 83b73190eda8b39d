#include "antipode/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "antipode/errors.hpp"
#include "antipode/linalg.hpp"

namespace antipode {

namespace {

using i128 = __int128;

constexpr std::uint64_t kDefaultCap = 10'000'000;
constexpr double kSlack = 1.0 / (1 << 20);

Int to_int(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Int hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Int lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Int r = (hi << 64) + lo;
  return negative ? Int(-r) : r;
}

std::int64_t to_small(const Int& v, const char* what) {
  if (!v.fits_slong_p() || abs(v) > Int(1L << 40)) {
    throw MathError(std::string("enumeration: ") + what + " too large for the exact integer path");
  }
  return v.get_si();
}

double to_double(i128 v) { return static_cast<double>(v); }

/// Everything the traversal needs, in integer-scaled form: the exact norm of
/// sum c_i b_i + tau_i b_i (in-span part) is P / scale_den where
/// P = X^T Gnum X, X_i = q c_i + tau_num_i and scale_den = g_den q^2.
struct Setup {
  std::size_t r = 0;
  std::vector<double> diag;
  std::vector<double> mu;  // mu[j * r + k] for j > k
  std::vector<double> tau;
  std::vector<std::int64_t> gnum;
  std::vector<std::int64_t> tau_num;
  std::int64_t q = 1;
  Int scale_den;
  double scale_den_f = 1;
  Rat perp_norm;  // scale * |t_perp|^2
  bool zero_in_coset = false;
  RatMatrix basis;
  RatVector reduced_offset;
};

Setup prepare(const ScaledLattice& lattice, const RatVector& offset, bool reduce_basis) {
  const std::size_t n = lattice.ambient_dim();
  if (!offset.empty() && offset.size() != n) throw InputError("offset dimension does not match the lattice");
  Setup s;
  const ScaledLattice work = reduce_basis ? reduce(lattice) : lattice;
  s.basis = work.basis();
  s.r = work.rank();
  const RatVector t = offset.empty() ? RatVector(n, Rat(0)) : offset;
  s.reduced_offset = reduce_modulo(work, t);

  const RatMatrix& b = s.basis;
  const std::size_t r = s.r;
  RatVector tau(r, Rat(0));
  RatVector perp = s.reduced_offset;
  if (r > 0 && !is_zero(s.reduced_offset)) {
    const RatMatrix bbt = b * b.transpose();
    const RatVector rhs = s.reduced_offset * b.transpose();
    const auto sol = solve_left(bbt, rhs);
    if (!sol) throw MathError("enumeration: singular basis");
    tau = sol->particular;
    perp = s.reduced_offset - tau * b;
  }
  s.perp_norm = lattice.scale() * dot(perp, perp);

  const RatMatrix g = gram(work);
  const Int g_den = g.common_denominator();
  Int q = 1;
  for (const Rat& x : tau) q = lcm(q, x.den());
  s.q = to_small(q, "offset denominator");
  s.scale_den = g_den * q * q;
  s.scale_den_f = s.scale_den.get_d();
  s.gnum.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s.gnum[i * r + j] = to_small((g(i, j) * Rat(g_den)).num(), "Gram entry");
  s.tau_num.resize(r);
  s.tau.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    s.tau_num[i] = to_small((tau[i] * Rat(q)).num(), "offset coefficient");
    s.tau[i] = tau[i].to_double();
  }
  s.zero_in_coset = s.perp_norm.is_zero() && std::all_of(tau.begin(), tau.end(), [](const Rat& x) { return x.is_zero(); });

  if (r > 0) {
    const LdlDecomposition ldl = rational_cholesky(g);
    s.diag.resize(r);
    s.mu.assign(r * r, 0.0);
    for (std::size_t i = 0; i < r; ++i) {
      s.diag[i] = ldl.diagonal[i].to_double();
      for (std::size_t k = 0; k < i; ++k) s.mu[i * r + k] = ldl.lower(i, k).to_double();
    }
  }
  return s;
}

enum class Mode { Count, Minimize };

struct Shared {
  const Setup& setup;
  Mode mode;
  bool list;
  std::uint64_t cap;
  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> abort{false};
  std::mutex best_mutex;
  i128 best = 0;  // Minimize: current best P
};

class Worker {
 public:
  Worker(Shared& shared, i128 threshold)
      : sh_(shared),
        s_(shared.setup),
        threshold_(threshold),
        bound_f_(to_double(threshold) * (1 + kSlack) + 1e-9),
        x_(s_.r),
        c_(s_.r),
        big_x_(s_.r) {}

  /// Top level loop restricted to branch indices congruent to `part` mod `parts`.
  void run(unsigned part, unsigned parts) {
    part_ = part;
    parts_ = parts;
    level(s_.r - 1, 0.0, 0);
  }

  std::map<i128, std::uint64_t> histogram;
  std::vector<std::vector<std::int64_t>> vectors;

 private:
  void level(std::size_t k, double partial, i128 exact) {
    const std::size_t r = s_.r;
    double sum = s_.tau[k];
    i128 cross = 0;
    for (std::size_t j = k + 1; j < r; ++j) {
      sum += s_.mu[j * r + k] * x_[j];
      cross += static_cast<i128>(s_.gnum[k * r + j]) * big_x_[j];
    }
    const double center = -sum;
    // Units of 1/scale_den, matching the integer threshold.
    const double d = s_.diag[k] * s_.scale_den_f;
    const double room = bound_f_ - partial;
    if (room < 0) return;
    const double w = std::sqrt(room / d);
    const auto lo = static_cast<std::int64_t>(std::ceil(center - w));
    const auto hi = static_cast<std::int64_t>(std::floor(center + w));
    const i128 gkk = s_.gnum[k * r + k];
    const bool top = k + 1 == r;
    std::size_t index = 0;
    for (std::int64_t c = lo; c <= hi; ++c) {
      if (sh_.abort.load(std::memory_order_relaxed)) return;
      if (top && (index++ % parts_) != part_) continue;
      const double y = static_cast<double>(c) - center;
      const double l = partial + d * y * y;
      if (l > bound_f_) continue;
      c_[k] = c;
      x_[k] = static_cast<double>(c) + s_.tau[k];
      const i128 xk = static_cast<i128>(s_.q) * c + s_.tau_num[k];
      big_x_[k] = xk;
      const i128 p = exact + xk * (gkk * xk + 2 * cross);
      if (k == 0) {
        leaf(p);
      } else {
        level(k - 1, l, p);
      }
    }
  }

  void leaf(i128 p) {
    if (p > threshold_) return;
    if (s_.zero_in_coset && p == 0) return;
    if (sh_.mode == Mode::Minimize) {
      std::lock_guard lock(sh_.best_mutex);
      if (p < sh_.best) sh_.best = p;
      threshold_ = sh_.best;
      bound_f_ = to_double(threshold_) * (1 + kSlack) + 1e-9;
      return;
    }
    if (sh_.total.fetch_add(1, std::memory_order_relaxed) + 1 > sh_.cap) {
      sh_.abort.store(true);
      return;
    }
    ++histogram[p];
    if (sh_.list) vectors.push_back(c_);
  }

  Shared& sh_;
  const Setup& s_;
  i128 threshold_;
  double bound_f_;
  std::vector<double> x_;
  std::vector<std::int64_t> c_;
  std::vector<i128> big_x_;
  unsigned part_ = 0;
  unsigned parts_ = 1;
};

i128 to_i128(const Int& v) {
  if (abs(v) > (Int(1) << 120)) throw MathError("enumeration: bound too large for the exact integer path");
  const bool negative = v < 0;
  Int a = abs(v);
  const Int lo_mask = (Int(1) << 64) - 1;
  const Int lo = a & lo_mask;
  const Int hi = a >> 64;
  i128 r = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
  return negative ? -r : r;
}

struct Traversal {
  std::map<i128, std::uint64_t> histogram;
  std::vector<std::vector<std::int64_t>> vectors;
  i128 best = 0;
  bool capped = false;
};

Traversal traverse(const Setup& setup, Mode mode, i128 threshold, const EnumerationOptions& options) {
  Shared shared{setup, mode, options.list, options.cap};
  shared.best = threshold;
  const unsigned parts = std::max(1u, options.threads);
  std::vector<Worker> workers;
  workers.reserve(parts);
  for (unsigned i = 0; i < parts; ++i) workers.emplace_back(shared, threshold);
  if (parts == 1) {
    workers[0].run(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < parts; ++i) threads.emplace_back([&, i] { workers[i].run(i, parts); });
    for (auto& t : threads) t.join();
  }
  Traversal out;
  out.capped = shared.abort.load();
  out.best = shared.best;
  for (auto& w : workers) {
    for (const auto& [p, c] : w.histogram) out.histogram[p] += c;
    for (auto& v : w.vectors) out.vectors.push_back(std::move(v));
  }
  return out;
}

Rat norm_of(const Setup& s, i128 p) { return Rat(to_int(p), s.scale_den) + s.perp_norm; }

}  // namespace

std::uint64_t default_enumeration_cap() {
  if (const char* env = std::getenv("ANTIPODE_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

std::uint64_t EnumerationReport::total() const {
  std::uint64_t t = 0;
  for (const auto& [n, c] : histogram) t += c;
  return t;
}

std::uint64_t EnumerationReport::count_at(const Rat& value) const {
  const auto it = histogram.find(value);
  return it == histogram.end() ? 0 : it->second;
}

EnumerationReport count_by_norm(const ScaledLattice& lattice, const Rat& bound, const RatVector& offset,
                                const EnumerationOptions& options, std::string name) {
  if (bound.sign() <= 0) throw InputError("bound must be positive");
  const Setup s = prepare(lattice, offset, options.reduce);
  EnumerationReport report;
  report.lattice = std::move(name);
  report.offset = offset.empty() ? RatVector(lattice.ambient_dim(), Rat(0)) : offset;
  report.bound = bound;
  report.listed = options.list;
  report.basis = s.basis;

  const Rat room = bound - s.perp_norm;
  if (room.sign() < 0) return report;
  if (s.r == 0) {
    if (!s.zero_in_coset) {
      report.histogram[s.perp_norm] = 1;
      if (options.list) report.vectors.push_back(s.reduced_offset);
    }
    return report;
  }
  const i128 threshold = to_i128((room * Rat(s.scale_den)).floor());
  Traversal t = traverse(s, Mode::Count, threshold, options);
  if (t.capped) {
    throw EnumerationCapError("enumeration cap exceeded (more than " + std::to_string(options.cap) + " vectors)");
  }
  for (const auto& [p, c] : t.histogram) report.histogram[norm_of(s, p)] += c;

  if (options.list) {
    const std::size_t n = lattice.ambient_dim();
    const Int den = lcm(s.basis.common_denominator(), RatMatrix::from_rows({s.reduced_offset}, n).common_denominator());
    std::vector<std::int64_t> bnum(s.r * n), tnum(n);
    for (std::size_t i = 0; i < s.r; ++i)
      for (std::size_t j = 0; j < n; ++j) bnum[i * n + j] = to_small((s.basis(i, j) * Rat(den)).num(), "basis entry");
    for (std::size_t j = 0; j < n; ++j) tnum[j] = to_small((s.reduced_offset[j] * Rat(den)).num(), "offset entry");
    // Offset part tau * B is already inside reduced_offset; c is the integer part.
    report.vectors.reserve(t.vectors.size());
    for (const auto& c : t.vectors) {
      RatVector v(n);
      for (std::size_t j = 0; j < n; ++j) {
        i128 acc = tnum[j];
        for (std::size_t i = 0; i < s.r; ++i) acc += static_cast<i128>(c[i]) * bnum[i * n + j];
        v[j] = Rat(to_int(acc), den);
      }
      report.vectors.push_back(std::move(v));
    }
    std::sort(report.vectors.begin(), report.vectors.end());
  }
  return report;
}

CosetMinimum coset_min_norm(const ScaledLattice& lattice, const RatVector& offset, const EnumerationOptions& options) {
  const Setup s = prepare(lattice, offset, options.reduce);
  CosetMinimum result;
  result.offset_in_lattice = s.zero_in_coset;
  if (s.r == 0) {
    if (s.zero_in_coset) throw InputError("rank-0 lattice has no nonzero vectors");
    result.value = s.perp_norm;
    return result;
  }
  // Start from a known member of the coset: a basis vector when the offset is
  // in the lattice, otherwise the reduced offset itself.
  i128 start = 0;
  if (s.zero_in_coset) {
    start = s.gnum[0];
    for (std::size_t i = 0; i < s.r; ++i) start = std::min<i128>(start, s.gnum[i * s.r + i]);
  } else {
    for (std::size_t i = 0; i < s.r; ++i)
      for (std::size_t j = 0; j < s.r; ++j)
        start += static_cast<i128>(s.tau_num[i]) * s.gnum[i * s.r + j] * s.tau_num[j];
  }
  EnumerationOptions opts = options;
  opts.list = false;
  opts.cap = std::numeric_limits<std::uint64_t>::max();
  const Traversal t = traverse(s, Mode::Minimize, start, opts);
  result.value = norm_of(s, t.best);
  return result;
}

Rat min_norm(const ScaledLattice& lattice, const EnumerationOptions& options) {
  if (lattice.rank() == 0) throw InputError("min_norm needs rank >= 1");
  return coset_min_norm(lattice, {}, options).value;
}

std::map<RatVector, std::uint64_t> classify_first_block(const EnumerationReport& report, std::size_t block_size) {
  std::map<RatVector, std::uint64_t> out;
  if (report.histogram.empty()) return out;
  if (!report.listed) throw InputError("report has no vector list");
  for (const auto& v : report.vectors) {
    if (block_size > v.size()) throw InputError("block larger than the vectors");
    ++out[RatVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(block_size))];
  }
  return out;
}

void write_report(std::ostream& os, const EnumerationReport& report) {
  os << "lattice " << (report.lattice.empty() ? "-" : report.lattice) << '\n';
  os << "offset ";
  write_vector(os, report.offset);
  os << '\n';
  os << "bound " << report.bound << '\n';
  for (const auto& [value, count] : report.histogram) os << "norm " << value << ' ' << count << '\n';
}

EnumerationReport read_report(std::istream& is) {
  EnumerationReport report;
  std::string line;
  auto expect = [&](const std::string& key) {
    if (!std::getline(is, line) || line.rfind(key + " ", 0) != 0) throw InputError("report: expected '" + key + "' line");
    return line.substr(key.size() + 1);
  };
  report.lattice = expect("lattice");
  report.offset = parse_vector(expect("offset"));
  report.bound = Rat::parse(expect("bound"));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key, value;
    std::uint64_t count = 0;
    if (!(ls >> key >> value >> count) || key != "norm") throw InputError("report: bad line '" + line + "'");
    report.histogram[Rat::parse(value)] += count;
  }
  return report;
}

}  // namespace antipode
