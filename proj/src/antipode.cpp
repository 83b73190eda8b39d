#include "antipode/antipode.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "antipode/errors.hpp"
#include "antipode/linalg.hpp"

namespace antipode {

namespace {

Rat max_sqdist(const Rat& scale, const std::vector<RatVector>& points) {
  Rat best(0);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const RatVector d = points[i] - points[j];
      best = std::max(best, scale * dot(d, d));
    }
  return best;
}

// Smallest squared distance between points of the union of t_i + L.
Rat enumerate_min_sqdist(const ScaledLattice& base, const std::vector<RatVector>& translates,
                         const EnumerationOptions& options) {
  Rat d = min_norm(base, options);
  for (std::size_t i = 0; i < translates.size(); ++i)
    for (std::size_t j = i + 1; j < translates.size(); ++j)
      d = std::min(d, coset_min_norm(base, translates[j] - translates[i], options).value);
  return d;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AntipodalSet::AntipodalSet(ScaledLattice host, std::vector<RatVector> points)
    : host_(std::move(host)), points_(std::move(points)) {
  if (points_.empty()) throw InputError("antipodal set needs at least one point");
  for (const auto& p : points_) {
    if (p.size() != host_.ambient_dim()) throw InputError("point has the wrong length");
    if (!contains(host_, p)) throw InputError("not in projection lattice");
  }
  beta_ = max_sqdist(host_.scale(), points_);
}

RatVector preimage(const Splitting& split, const RatVector& u) {
  const ScaledLattice& host = split.lattice();
  const RatMatrix images = host.basis() * split.projector(Side::U);
  const auto c = integer_solve_left(images, u);
  if (!c) throw InputError("not in projection lattice");
  return *c * host.basis();
}

Rat density_squared(std::size_t s, const Rat& min_sqdist, std::size_t l, const Rat& det) {
  const Rat ss(static_cast<long>(s));
  return ss * ss * pow(min_sqdist / Rat(4), static_cast<long>(l)) / det;
}

TranslatePacking antipode_construct(const Splitting& split, const AntipodalSet& set, const ConstructOptions& options) {
  if (!lattice_equal(set.host(), project(split, Side::U))) {
    throw InputError("antipodal set host is not the projection lattice of the splitting");
  }
  const ScaledLattice& base = split.section(Side::V);
  std::vector<RatVector> lifts;
  if (options.preimages) {
    if (options.preimages->size() != set.size()) throw InputError("need one preimage per point");
    for (std::size_t i = 0; i < set.size(); ++i) {
      const RatVector& w = (*options.preimages)[i];
      if (!contains(split.lattice(), w)) throw InputError("preimage is not in the lattice");
      if (project_point(split, w, Side::U) != set.points()[i]) throw InputError("preimage does not project to its point");
      lifts.push_back(w);
    }
  } else {
    for (const auto& u : set.points()) lifts.push_back(preimage(split, u));
  }

  TranslatePacking p(base);
  for (const auto& w : lifts) p.translates.push_back(reduce_modulo(base, project_point(split, w, Side::V)));
  p.host_min_norm = options.host_min_norm;
  p.beta = set.beta();
  const Rat floor_d = p.host_min_norm - p.beta;
  if (floor_d.sign() <= 0) throw MathError("spheres vanish");
  if (options.assume_min_norm) {
    p.min_sqdist = floor_d;
    p.min_norm_assumed = true;
  } else {
    p.min_sqdist = enumerate_min_sqdist(base, p.translates, options.enumeration);
    if (p.min_sqdist < floor_d) throw MathError("violated: min_sqdist >= host_min_norm - beta");
  }
  p.radius_sq = p.min_sqdist / Rat(4);
  p.density_sq = density_squared(p.translates.size(), p.min_sqdist, base.rank(), determinant(base));
  return p;
}

TranslatePacking lattice_packing(const ScaledLattice& lattice, std::optional<Rat> assumed_min_norm,
                                 const EnumerationOptions& options) {
  TranslatePacking p(lattice);
  p.translates = {RatVector(lattice.ambient_dim(), Rat(0))};
  p.min_norm_assumed = assumed_min_norm.has_value();
  p.min_sqdist = assumed_min_norm ? *assumed_min_norm : min_norm(lattice, options);
  p.host_min_norm = p.min_sqdist;
  p.beta = 0;
  p.radius_sq = p.min_sqdist / Rat(4);
  p.density_sq = density_squared(1, p.min_sqdist, lattice.rank(), determinant(lattice));
  return p;
}

Density center_density(const TranslatePacking& packing) {
  return {packing.density_sq, decimal_sqrt(packing.density_sq, 10)};
}

Ratio improvement_ratio(std::size_t s, const Rat& beta, const Rat& mu, std::size_t l) {
  if (s == 0) throw InputError("s must be positive");
  if (beta.sign() < 0 || mu.sign() <= 0) throw InputError("need 0 <= beta and mu > 0");
  if (beta >= mu) throw MathError("spheres vanish");
  const Rat ss(static_cast<long>(s));
  Ratio r;
  r.squared = ss * ss * pow(Rat(1) - beta / mu, static_cast<long>(l));
  r.decimal = decimal_sqrt(r.squared, 10);
  r.improves = r.squared > Rat(1);
  return r;
}

AntipodalSet find_antipodal_set(const ScaledLattice& host, std::size_t s, std::optional<Rat> beta_cap,
                                const EnumerationOptions& options) {
  if (s == 0) throw InputError("s must be positive");
  const RatVector origin(host.ambient_dim(), Rat(0));
  if (s == 1) return AntipodalSet(host, {origin});
  const Rat cap = beta_cap ? *beta_cap : Rat(2) * min_norm(host, options);
  if (cap.sign() <= 0) throw InfeasibleError("infeasible at this cap");

  EnumerationOptions opts = options;
  opts.list = true;
  std::vector<RatVector> pts = count_by_norm(host, cap, {}, opts).vectors;
  pts.push_back(origin);
  std::sort(pts.begin(), pts.end());
  const std::size_t n = pts.size();
  const std::size_t zero = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), origin) - pts.begin());

  std::vector<Rat> dist(n * n);
  std::set<Rat> values;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatVector diff = pts[i] - pts[j];
      dist[i * n + j] = dist[j * n + i] = host.scale() * dot(diff, diff);
      if (dist[i * n + j] <= cap) values.insert(dist[i * n + j]);
    }

  for (const Rat& beta : values) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < n; ++i)
      if (i != zero && dist[i * n + zero] <= beta) pool.push_back(i);
    if (pool.size() + 1 < s) continue;
    std::vector<std::size_t> chosen{zero};
    std::function<bool(std::size_t)> extend = [&](std::size_t from) {
      if (chosen.size() == s) return true;
      for (std::size_t a = from; a < pool.size(); ++a) {
        if (pool.size() - a < s - chosen.size()) return false;
        const std::size_t v = pool[a];
        const bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return dist[u * n + v] <= beta; });
        if (!ok) continue;
        chosen.push_back(v);
        if (extend(a + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (extend(0)) {
      std::vector<RatVector> out;
      for (std::size_t i : chosen) out.push_back(pts[i]);
      return AntipodalSet(host, std::move(out));
    }
  }
  throw InfeasibleError("infeasible at this cap");
}

KissingReport kissing_number(const TranslatePacking& packing, const EnumerationOptions& options) {
  KissingReport k;
  const RatVector& t0 = packing.translates.at(0);
  for (const auto& t : packing.translates) {
    const EnumerationReport r = count_by_norm(packing.base, packing.min_sqdist, t - t0, options);
    k.per_translate.push_back(r.count_at(packing.min_sqdist));
    k.total += k.per_translate.back();
  }
  return k;
}

VerificationReport verify_packing(const TranslatePacking& packing, bool enumerate, const EnumerationOptions& options) {
  VerificationReport rep;
  rep.name = packing.name;
  rep.enumerated = enumerate;
  rep.min_norm_assumed = packing.min_norm_assumed;
  rep.min_sqdist = packing.min_sqdist;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
    rep.pass = rep.pass && pass;
  };

  const std::size_t s = packing.translates.size();
  const std::size_t l = packing.base.rank();
  const Rat det = determinant(packing.base);
  const Rat floor_d = packing.host_min_norm - packing.beta;

  bool distinct = true;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (contains(packing.base, packing.translates[j] - packing.translates[i])) distinct = false;
  add("distinct-cosets", distinct, std::to_string(s) + " translates");

  if (enumerate) {
    const Rat d = enumerate_min_sqdist(packing.base, packing.translates, options);
    add("min_sqdist-enumerated", d == packing.min_sqdist, "enumerated " + d.str() + ", recorded " + packing.min_sqdist.str());
    rep.min_sqdist = d;
  }
  add("min_sqdist >= host_min_norm - beta", rep.min_sqdist >= floor_d,
      rep.min_sqdist.str() + " >= " + packing.host_min_norm.str() + " - " + packing.beta.str());
  rep.tight = rep.min_sqdist == floor_d;
  add("radius_sq = min_sqdist / 4", packing.radius_sq * Rat(4) == rep.min_sqdist, packing.radius_sq.str());

  const Rat ss(static_cast<long>(s));
  const Rat rhs = ss * ss * pow(rep.min_sqdist / Rat(4), static_cast<long>(l));
  add("density_sq * det = s^2 radius_sq^l", packing.density_sq * det == rhs, "det " + det.str());

  if (rep.tight && floor_d.sign() > 0) {
    const Rat old_sq = pow(packing.host_min_norm / Rat(4), static_cast<long>(l)) / det;
    const Ratio ratio = improvement_ratio(s, packing.beta, packing.host_min_norm, l);
    add("density ratio = s^2 (1 - beta/mu)^l", packing.density_sq / old_sq == ratio.squared, ratio.decimal);
  }

  if (enumerate) {
    rep.kissing = kissing_number(packing, options);
    add("kissing-enumerated", rep.kissing->total > 0, std::to_string(rep.kissing->total));
  }
  return rep;
}

void write_verification(std::ostream& os, const VerificationReport& r) {
  os << r.kind << ' ' << (r.name.empty() ? "-" : r.name) << '\n';
  os << "status " << (r.pass ? "pass" : "FAIL") << '\n';
  os << "level " << (r.enumerated ? "enumerate" : "algebraic") << '\n';
  if (r.kind == "packing") {
    if (r.min_norm_assumed) os << "note mu assumed, min_sqdist not enumerated\n";
    os << "min_sqdist " << r.min_sqdist << '\n';
    os << "tight " << yes_no(r.tight) << '\n';
  } else if (r.kind == "lattice") {
    if (r.min_norm_assumed) os << "note mu assumed, not enumerated\n";
    if (r.enumerated || r.min_norm_assumed) os << "min_norm " << r.min_sqdist << '\n';
  }
  if (r.kissing) {
    os << "kissing " << r.kissing->total;
    for (auto c : r.kissing->per_translate) os << ' ' << c;
    os << '\n';
  }
  for (const auto& c : r.checks) os << "check " << (c.pass ? "pass" : "FAIL") << ' ' << c.name << " : " << c.detail << '\n';
}

void write_packing(std::ostream& os, const TranslatePacking& packing) {
  write_lattice(os, packing.base);
  os << "translates " << packing.translates.size() << '\n';
  for (const auto& t : packing.translates) {
    write_vector(os, t);
    os << '\n';
  }
}

TranslatePacking read_packing(std::istream& is) {
  TranslatePacking p(read_lattice(is));
  std::string line;
  while (std::getline(is, line) && line.empty()) {
  }
  std::istringstream hs(line);
  std::string key;
  long s = -1;
  if (!(hs >> key >> s) || key != "translates" || s < 1) throw InputError("packing: expected 'translates s'");
  for (long i = 0; i < s; ++i) {
    if (!std::getline(is, line)) throw InputError("packing: missing translate row");
    RatVector t = parse_vector(line);
    if (t.size() != p.base.ambient_dim()) throw InputError("packing: translate has the wrong length");
    p.translates.push_back(std::move(t));
  }
  return p;
}

void write_antipodal_set(std::ostream& os, const AntipodalSet& set) {
  os << "points " << set.size() << '\n';
  for (const auto& p : set.points()) {
    write_vector(os, p);
    os << '\n';
  }
  os << "beta " << set.beta() << '\n';
}

}  // namespace antipode
