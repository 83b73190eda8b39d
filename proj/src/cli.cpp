#include "antipode/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "antipode/errors.hpp"
#include "antipode/linalg.hpp"
#include "antipode/registry.hpp"

namespace antipode {

namespace {

struct Common {
  std::string level = "auto";
  unsigned threads = 1;
  std::string out;
  std::string format = "text";
  std::optional<int> dim;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "worker threads inside enumerations")->check(CLI::Range(1u, 256u));
  cmd->add_option("--out", c.out, "write the result to FILE instead of stdout");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text"}));
}

EnumerationOptions enumeration_options(const Common& c) {
  EnumerationOptions o;
  o.threads = c.threads;
  return o;
}

// Writes through `--out` when given.
void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (c.out.empty()) {
    body(out);
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot open '" + c.out + "' for writing");
  body(f);
}

bool is_packing(const std::string& name) {
  const auto names = constructions::packing_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool is_p48_name(const std::string& name) {
  return name == "p48p" || name == "p48q" || (is_packing(name) && name != "v20" && name != "v22");
}

bool want_enumeration(const Common& c, const std::string& name) {
  if (c.level == "algebraic") return false;
  if (c.level == "enumerate") {
    if (is_p48_name(name)) throw InputError("enumerate level is out of reach in dimension 44-48; use --level algebraic");
    return true;
  }
  return !is_p48_name(name);
}

struct Expected {
  Rat det;
  std::optional<Rat> min;
  bool even = false;
};

std::optional<Expected> expected_invariants(const std::string& name, std::optional<int> dim) {
  if (name == "leech") return Expected{Rat(1), Rat(4), true};
  if (name == "lambda20") return Expected{Rat(64), Rat(4), true};
  if (name == "lambda22") return Expected{Rat(12), Rat(4), true};
  if (name == "lambda23") return Expected{Rat(4), Rat(4), true};
  if (name == "p48p" || name == "p48q") return Expected{Rat(1), std::nullopt, true};
  if (name == "e8") return Expected{Rat(1), Rat(2), true};
  if (name == "e7") return Expected{Rat(2), Rat(2), true};
  if (name == "e6") return Expected{Rat(3), Rat(2), true};
  if (!dim) return std::nullopt;
  const long n = *dim;
  if (name == "zn") return Expected{Rat(1), Rat(1), false};
  if (name == "an") return Expected{Rat(n + 1), Rat(2), true};
  if (name == "dn") return Expected{Rat(4), Rat(2), true};
  return std::nullopt;
}

void add_check(VerificationReport& r, std::string name, bool pass, std::string detail) {
  r.checks.push_back({std::move(name), pass, std::move(detail)});
  r.pass = r.pass && pass;
}

VerificationReport verify_lattice(const std::string& name, const ScaledLattice& lattice, bool enumerate,
                                  const EnumerationOptions& options, std::optional<int> dim) {
  VerificationReport r;
  r.name = name;
  r.kind = "lattice";
  r.enumerated = enumerate;
  const auto want = expected_invariants(name, dim);
  const Rat det = determinant(lattice);
  const RatMatrix g = gram(lattice);
  bool integral = g.is_integral();
  bool even = integral;
  for (std::size_t i = 0; i < g.rows() && even; ++i) even = (g(i, i).num() % 2) == 0;
  add_check(r, "det", !want || det == want->det, det.str());
  add_check(r, "gram-integral", integral, integral ? "yes" : "no");
  if (want && want->even) add_check(r, "gram-even", even, even ? "yes" : "no");
  add_check(r, "dual-involution", lattice_equal(dual(dual(lattice)), lattice), "dual(dual(L)) = L");
  if (name == "p48p" || name == "p48q") {
    RatVector v(48, Rat(0));
    v[0] = 3;
    v[1] = 3;
    add_check(r, "norm-6-vector", contains(lattice, v) && norm(lattice, v) == Rat(6), "(3, 3, 0, ..., 0)");
    r.min_norm_assumed = true;
    r.min_sqdist = 6;
  }
  if (enumerate) {
    const Rat m = min_norm(lattice, options);
    r.min_sqdist = m;
    add_check(r, "min_norm", !want || !want->min || m == *want->min, m.str());
  }
  return r;
}

VerificationReport verify_code(const std::string& name, const LinearCode& code, bool enumerate) {
  VerificationReport r;
  r.name = name;
  r.kind = "code";
  r.enumerated = enumerate;
  const bool self_orth = is_self_orthogonal(code);
  add_check(r, "self-orthogonal", self_orth, self_orth ? "yes" : "no");
  add_check(r, "self-dual", self_orth && 2 * code.dimension() == code.length(),
            std::to_string(code.dimension()) + " of " + std::to_string(code.length()));
  if (enumerate && code.dimension() <= 12) {
    std::ostringstream os;
    for (const auto& [w, c] : weight_distribution(code)) os << w << ':' << c << ' ';
    std::string text = os.str();
    if (!text.empty()) text.pop_back();
    const bool ok = name != "golay24" || text == "0:1 8:759 12:2576 16:759 24:1";
    add_check(r, "weight-distribution", ok, text);
  }
  return r;
}

int cmd_build(const std::string& name, const Common& c, std::ostream& out) {
  const EnumerationOptions opts = enumeration_options(c);
  if (is_packing(name)) {
    const NamedPacking np = build_named_packing(name, false, opts);
    emit(c, out, [&](std::ostream& os) { write_packing(os, np.packing); });
    return kExitPass;
  }
  if (auto code = named_code(name)) {
    emit(c, out, [&](std::ostream& os) { write_code(os, *code); });
    return kExitPass;
  }
  if (auto lattice = named_lattice(name, c.dim)) {
    emit(c, out, [&](std::ostream& os) { write_lattice(os, *lattice); });
    return kExitPass;
  }
  throw InputError("unknown name '" + name + "'");
}

int cmd_verify(const std::string& name, const Common& c, std::ostream& out) {
  const EnumerationOptions opts = enumeration_options(c);
  const bool enumerate = want_enumeration(c, name);
  VerificationReport rep;
  if (is_packing(name)) {
    const NamedPacking np = build_named_packing(name, enumerate, opts);
    rep = verify_packing(np.packing, enumerate, opts);
  } else if (auto code = named_code(name)) {
    rep = verify_code(name, *code, enumerate);
  } else if (auto lattice = named_lattice(name, c.dim)) {
    rep = verify_lattice(name, *lattice, enumerate, opts, c.dim);
  } else {
    throw InputError("unknown name '" + name + "'");
  }
  emit(c, out, [&](std::ostream& os) { write_verification(os, rep); });
  return rep.pass ? kExitPass : kExitVerifyFailed;
}

// A packing file carries no mu or beta; they come from the command line and
// the minimal distance is always enumerated.
int cmd_verify_file(const std::string& path, const std::string& mu, const std::string& beta, const Common& c,
                    std::ostream& out) {
  if (mu.empty()) throw InputError("--packing needs --mu");
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  TranslatePacking p = read_packing(f);
  const EnumerationOptions opts = enumeration_options(c);
  p.name = path;
  p.host_min_norm = Rat::parse(mu);
  p.beta = beta.empty() ? Rat(0) : Rat::parse(beta);
  const TranslatePacking one = lattice_packing(p.base, std::nullopt, opts);
  p.min_sqdist = one.min_sqdist;
  for (std::size_t i = 1; i < p.translates.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      p.min_sqdist = std::min(p.min_sqdist, coset_min_norm(p.base, p.translates[i] - p.translates[j], opts).value);
  p.radius_sq = p.min_sqdist / Rat(4);
  p.density_sq = density_squared(p.translates.size(), p.min_sqdist, p.base.rank(), determinant(p.base));
  const VerificationReport rep = verify_packing(p, true, opts);
  emit(c, out, [&](std::ostream& os) { write_verification(os, rep); });
  return rep.pass ? kExitPass : kExitVerifyFailed;
}

int cmd_report(const Common& c, std::ostream& out) {
  const bool kissing = c.level == "enumerate";
  const auto rows = reproduction_table(kissing, enumeration_options(c));
  emit(c, out, [&](std::ostream& os) { write_table(os, rows); });
  return kExitPass;
}

ScaledLattice load_lattice(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  return read_lattice(f);
}

int cmd_search(const std::string& path, std::size_t size, const std::string& cap, const Common& c, std::ostream& out) {
  const ScaledLattice lattice = load_lattice(path);
  std::optional<Rat> beta_cap;
  if (!cap.empty()) beta_cap = Rat::parse(cap);
  const AntipodalSet set = find_antipodal_set(lattice, size, beta_cap, enumeration_options(c));
  emit(c, out, [&](std::ostream& os) { write_antipodal_set(os, set); });
  return kExitPass;
}

int cmd_count(const std::string& path, const std::string& bound, const std::string& offset, bool list,
              const Common& c, std::ostream& out) {
  const ScaledLattice lattice = load_lattice(path);
  EnumerationOptions opts = enumeration_options(c);
  opts.list = list;
  const RatVector t = offset.empty() ? RatVector{} : parse_vector(offset);
  const EnumerationReport rep = count_by_norm(lattice, Rat::parse(bound), t, opts, path);
  emit(c, out, [&](std::ostream& os) {
    write_report(os, rep);
    for (const auto& v : rep.vectors) {
      os << "vector ";
      write_vector(os, v);
      os << '\n';
    }
  });
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antipode construction for sphere packings, in exact arithmetic", "antipode"};
  app.require_subcommand(1);
  Common common;
  std::string name, lattice_path, packing_path, cap, bound, offset, mu, beta;
  std::size_t size = 1;
  bool list = false;

  auto* build = app.add_subcommand("build", "write a named lattice, code or packing");
  build->add_option("name", name, "registry name")->required();
  build->add_option("--dim", common.dim, "dimension for zn, an, dn");
  add_common(build, common);

  auto* verify = app.add_subcommand("verify", "check a named object");
  verify->add_option("name", name, "registry name");
  verify->add_option("--packing", packing_path, "verify a packing file instead of a registry name");
  verify->add_option("--mu", mu, "host minimal norm for --packing, p/q");
  verify->add_option("--beta", beta, "antipodal diameter for --packing, p/q (default 0)");
  verify->add_option("--dim", common.dim, "dimension for zn, an, dn");
  verify->add_option("--level", common.level, "algebraic or enumerate")
      ->check(CLI::IsMember({"auto", "algebraic", "enumerate"}));
  add_common(verify, common);

  auto* report = app.add_subcommand("report", "density table for every named packing");
  report->add_option("--level", common.level, "enumerate also counts kissing numbers")
      ->check(CLI::IsMember({"auto", "algebraic", "enumerate"}));
  add_common(report, common);

  auto* search = app.add_subcommand("search", "smallest-diameter antipodal set in a lattice file");
  search->add_option("--lattice", lattice_path, "lattice file")->required();
  search->add_option("--size", size, "number of points")->required()->check(CLI::PositiveNumber);
  search->add_option("--cap", cap, "largest squared diameter to consider, p/q");
  add_common(search, common);

  auto* count = app.add_subcommand("count", "norm histogram of a lattice coset");
  count->add_option("--lattice", lattice_path, "lattice file")->required();
  count->add_option("--bound", bound, "norm bound, p/q")->required();
  count->add_option("--offset", offset, "coset offset as space-separated rationals");
  count->add_flag("--list", list, "also print the vectors");
  add_common(count, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*build) return cmd_build(name, common, out);
    if (*verify) {
      if (!packing_path.empty()) return cmd_verify_file(packing_path, mu, beta, common, out);
      if (name.empty()) throw InputError("verify needs a name or --packing FILE");
      return cmd_verify(name, common, out);
    }
    if (*report) return cmd_report(common, out);
    if (*search) return cmd_search(lattice_path, size, cap, common, out);
    if (*count) return cmd_count(lattice_path, bound, offset, list, common, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const EnumerationCapError& e) {
    err << "verification incomplete: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const MathError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace antipode
