#include "antipode/lattice.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "antipode/errors.hpp"
#include "antipode/linalg.hpp"

namespace antipode {

namespace {

// Lattice vectors of `lattice` orthogonal to every row of `complement`.
ScaledLattice compute_section(const ScaledLattice& lattice, const RatMatrix& complement) {
  const RatMatrix& b = lattice.basis();
  RatMatrix coeffs;
  if (complement.rows() == 0) {
    coeffs = RatMatrix::identity(b.rows());
  } else {
    coeffs = integer_left_kernel(b * complement.transpose());
  }
  RatMatrix basis = coeffs * b;
  if (basis.rows() > 0) basis = lll_reduce(basis, lattice.scale());
  return ScaledLattice(std::move(basis), lattice.scale());
}

RatMatrix projector_onto(const RatMatrix& span, std::size_t n) {
  if (span.rows() == 0) return RatMatrix(n, n);
  const RatMatrix st = span.transpose();
  return st * inverse(span * st) * span;
}

RatMatrix validated_span(RatMatrix u, std::size_t n) {
  if (u.cols() != n && u.rows() != 0) throw InputError("subspace rows have the wrong length");
  if (u.rows() == 0) return RatMatrix(0, n);
  if (rank(u) != u.rows()) throw InputError("subspace spanning rows are dependent");
  return u;
}

}  // namespace

ScaledLattice::ScaledLattice(RatMatrix basis, Rat scale) : basis_(std::move(basis)), scale_(std::move(scale)) {
  if (scale_.sign() <= 0) throw MathError("lattice scale must be positive");
  if (basis_.rows() > 0 && antipode::rank(basis_) != basis_.rows()) throw MathError("not a basis");
}

RatMatrix gram(const ScaledLattice& lattice) {
  const RatMatrix& b = lattice.basis();
  return lattice.scale() * (b * b.transpose());
}

Rat determinant(const ScaledLattice& lattice) {
  if (lattice.rank() == 0) return Rat(1);
  return determinant(gram(lattice));
}

Rat norm(const ScaledLattice& lattice, const RatVector& v) { return lattice.scale() * dot(v, v); }

ScaledLattice dual(const ScaledLattice& lattice) {
  if (lattice.rank() == 0) return lattice;
  return ScaledLattice(inverse(gram(lattice)) * lattice.basis(), lattice.scale());
}

ScaledLattice rescale(const ScaledLattice& lattice, const Rat& factor) {
  return ScaledLattice(lattice.basis(), lattice.scale() * factor);
}

ScaledLattice reduce(const ScaledLattice& lattice) {
  if (lattice.rank() == 0) return lattice;
  return ScaledLattice(lll_reduce(lattice.basis(), lattice.scale()), lattice.scale());
}

ScaledLattice embed(const ScaledLattice& lattice, std::size_t ambient_dim, std::size_t offset) {
  if (offset + lattice.ambient_dim() > ambient_dim) throw InputError("embed: target space too small");
  RatMatrix b(lattice.rank(), ambient_dim);
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    for (std::size_t j = 0; j < lattice.ambient_dim(); ++j) b(i, offset + j) = lattice.basis()(i, j);
  return ScaledLattice(std::move(b), lattice.scale());
}

RatMatrix canonical_basis(const ScaledLattice& lattice) {
  if (lattice.rank() == 0) return lattice.basis();
  return lattice_basis_from_generators(lattice.basis());
}

bool lattice_equal(const ScaledLattice& a, const ScaledLattice& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.rank() != b.rank()) return false;
  // sqrt(sa) x = sqrt(sb) y  <=>  y = r x with r^2 = sa / sb.
  const Rat r = exact_sqrt_or_negative(a.scale() / b.scale());
  if (r.sign() < 0) return a.rank() == 0;
  const ScaledLattice mapped(r * a.basis(), b.scale());
  return canonical_basis(mapped) == canonical_basis(b);
}

std::optional<RatVector> lattice_coordinates(const ScaledLattice& lattice, const RatVector& v) {
  if (v.size() != lattice.ambient_dim()) throw InputError("vector length does not match the lattice");
  if (lattice.rank() == 0) {
    if (is_zero(v)) return RatVector{};
    return std::nullopt;
  }
  const auto sol = solve_left(lattice.basis(), v);
  if (!sol) return std::nullopt;
  for (const auto& c : sol->particular) {
    if (!c.is_integer()) return std::nullopt;
  }
  return sol->particular;
}

bool contains(const ScaledLattice& lattice, const RatVector& v) {
  return lattice_coordinates(lattice, v).has_value();
}

RatVector reduce_modulo(const ScaledLattice& lattice, const RatVector& t) {
  if (t.size() != lattice.ambient_dim()) throw InputError("offset length does not match the lattice");
  const RatMatrix& b = lattice.basis();
  const std::size_t r = b.rows();
  std::vector<RatVector> star(r);
  std::vector<Rat> star_sq(r);
  for (std::size_t i = 0; i < r; ++i) {
    star[i] = b.row(i);
    for (std::size_t j = 0; j < i; ++j) {
      const Rat mu = dot(b.row(i), star[j]) / star_sq[j];
      if (!mu.is_zero()) star[i] = star[i] - mu * star[j];
    }
    star_sq[i] = dot(star[i], star[i]);
  }
  RatVector out = t;
  for (std::size_t i = r; i-- > 0;) {
    const Rat y = dot(out, star[i]) / star_sq[i];
    const Int q = y.round_half_up();
    if (q != 0) out = out - Rat(q) * b.row(i);
  }
  return out;
}

Splitting::Splitting(ScaledLattice lattice, RatMatrix u_span)
    : lattice_(std::move(lattice)),
      u_basis_(validated_span(std::move(u_span), lattice_.ambient_dim())),
      v_basis_(u_basis_.rows() == 0 ? RatMatrix::identity(lattice_.ambient_dim()) : kernel(u_basis_)),
      proj_u_(projector_onto(u_basis_, lattice_.ambient_dim())),
      proj_v_(RatMatrix::identity(lattice_.ambient_dim()) - proj_u_),
      section_u_(compute_section(lattice_, v_basis_)),
      section_v_(compute_section(lattice_, u_basis_)) {
  if (section_u_.rank() != k() || section_v_.rank() != l()) throw MathError("degenerate splitting");
}

const ScaledLattice& section(const Splitting& split, Side side) { return split.section(side); }

ScaledLattice project(const Splitting& split, Side side) {
  const RatMatrix gens = split.lattice().basis() * split.projector(side);
  return ScaledLattice(lattice_basis_from_generators(gens), split.lattice().scale());
}

RatVector project_point(const Splitting& split, const RatVector& w, Side side) {
  if (w.size() != split.n()) throw InputError("point length does not match the splitting");
  return w * split.projector(side);
}

void write_lattice(std::ostream& os, const ScaledLattice& lattice) {
  os << lattice.ambient_dim() << ' ' << lattice.rank() << '\n';
  os << "scale " << lattice.scale() << '\n';
  write_matrix(os, lattice.basis());
}

ScaledLattice read_lattice(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InputError("lattice: missing header");
  std::istringstream hs(line);
  long n = -1, r = -1;
  if (!(hs >> n >> r) || n < 0 || r < 0) throw InputError("lattice: bad header '" + line + "'");
  if (!std::getline(is, line) || line.rfind("scale ", 0) != 0) throw InputError("lattice: missing scale line");
  const Rat scale = Rat::parse(line.substr(6));
  RatMatrix basis = read_matrix(is);
  if (basis.rows() != static_cast<std::size_t>(r) || basis.cols() != static_cast<std::size_t>(n)) {
    throw InputError("lattice: basis shape does not match header");
  }
  return ScaledLattice(std::move(basis), scale);
}

}  // namespace antipode
