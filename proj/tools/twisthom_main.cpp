// twisthom: exact twisted simplicial (co)homology, orthogonal tensor
// invariants and intersection products, driven by JSON files.

#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "twisthom/json_io.hpp"

namespace {

using namespace twisthom;
using json_io::json;

std::vector<long> parse_tuple(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  auto flush = [&] {
    try {
      size_t used = 0;
      out.push_back(std::stol(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::logic_error&) {
      throw ValidationError("bad integer tuple entry: '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) flush();
  return out;
}

exactfield::Field field_of_vectors(const std::vector<exactfield::Vector>& vs) {
  exactfield::Field f = exactfield::Field::rationals();
  for (const auto& v : vs)
    for (const auto& s : v) f = exactfield::Field::join(f, s.field());
  return f;
}

json cmd_ranges(int n, const std::string& mu_str) {
  const weights::DominantWeight mu(n, parse_tuple(mu_str));
  const auto range = weights::nonvanishing_range(mu);
  return json{{"i", weights::support_count(mu)},
              {"degrees", range.degrees},
              {"vanishes", weights::vanishes_identically(mu)}};
}

json cmd_branch(const std::string& mu_str) {
  const auto branches = weights::branch(parse_tuple(mu_str));
  json out = json::array();
  for (const auto& nu : branches) out.push_back(nu);
  return json{{"branches", std::move(out)}};
}

schur::SpacePtr lorentz_space_for(int n,
                                  const std::vector<exactfield::Vector>& vs) {
  for (const auto& v : vs)
    if (static_cast<int>(v.size()) != n + 1)
      throw ValidationError("vectors must have n+1 coordinates");
  return schur::QuadraticSpace::standard_lorentz(n, field_of_vectors(vs));
}

json cmd_invariant(int n, const std::string& mu_str,
                   const std::string& x_file) {
  const auto mu = weights::normalized(parse_tuple(mu_str));
  if (!weights::is_partition(mu))
    throw ValidationError("mu must be weakly decreasing and nonnegative");
  const auto x = json_io::vectors_from_json(json_io::load_json_file(x_file));
  if (mu.size() > x.size())
    throw ValidationError(
        "inadmissible tuple: an invariant for this weight needs dim(X) >= "
        "i(mu) = " +
        std::to_string(mu.size()) + ", got " + std::to_string(x.size()) +
        " vectors");
  const auto space = lorentz_space_for(n, x);
  const schur::Tensor t = schur::tau(space, x, mu);
  return json{{"tensor", json_io::tensor_to_json(t)},
              {"nonzero", !t.is_zero()}};
}

json cmd_pair(int n, const std::string& mu_str, const std::string& x_file,
              const std::string& y_file) {
  const auto mu = weights::normalized(parse_tuple(mu_str));
  if (!weights::is_partition(mu))
    throw ValidationError("mu must be weakly decreasing and nonnegative");
  const auto x = json_io::vectors_from_json(json_io::load_json_file(x_file));
  const auto y = json_io::vectors_from_json(json_io::load_json_file(y_file));
  if (mu.size() > x.size() || mu.size() > y.size())
    throw ValidationError("inadmissible tuple: dim(X) >= i(mu) fails");
  auto all = x;
  all.insert(all.end(), y.begin(), y.end());
  const auto space = lorentz_space_for(n, all);
  return json{{"value", schur::pair_invariants(space, x, y, mu).str()}};
}

struct LoadedSystem {
  localsys::SimplicialComplex complex;
  localsys::LocalSystem system;
};

LoadedSystem load_complex_and_system(const std::string& complex_file,
                                     const std::string& system_file) {
  auto K = json_io::complex_from_json(json_io::load_json_file(complex_file));
  auto L = json_io::system_from_json(json_io::load_json_file(system_file), K);
  return LoadedSystem{std::move(K), std::move(L)};
}

json cmd_homology(const std::string& complex_file,
                  const std::string& system_file, int deg, bool cohomology) {
  const auto loaded = load_complex_and_system(complex_file, system_file);
  const auto& K = loaded.complex;
  const auto& L = loaded.system;
  if (deg >= 0) {
    if (cohomology) {
      const auto res = localsys::cohomology(K, L, deg);
      json reps = json::array();
      for (const auto& r : res.representatives)
        reps.push_back(json_io::cochain_to_json(r));
      return json{{"dim", res.dim}, {"representatives", std::move(reps)}};
    }
    const auto res = localsys::homology(K, L, deg);
    json reps = json::array();
    for (const auto& r : res.representatives)
      reps.push_back(json_io::chain_to_json(r));
    return json{{"dim", res.dim}, {"representatives", std::move(reps)}};
  }
  json out;
  for (int p = 0; p <= K.dim(); ++p) {
    const int d = cohomology ? localsys::cohomology(K, L, p).dim
                             : localsys::homology(K, L, p).dim;
    out[(cohomology ? "H^" : "H") + std::to_string(p)] = d;
  }
  return out;
}

json cmd_cup(const std::string& complex_file, const std::string& e_file,
             const std::string& f_file, const std::string& g_file,
             const std::string& pairing_file, const std::string& a_file,
             const std::string& b_file) {
  auto K = json_io::complex_from_json(json_io::load_json_file(complex_file));
  auto E = json_io::system_from_json(json_io::load_json_file(e_file), K);
  auto F = json_io::system_from_json(json_io::load_json_file(f_file), K);
  auto G = json_io::system_from_json(json_io::load_json_file(g_file), K);
  auto nu = json_io::pairing_from_json(json_io::load_json_file(pairing_file),
                                       K, E, F, G);
  const auto a = json_io::cochain_from_json(json_io::load_json_file(a_file));
  const auto b = json_io::cochain_from_json(json_io::load_json_file(b_file));
  return json_io::cochain_to_json(localsys::cup(K, F, nu, a, b));
}

json cmd_dual(const std::string& complex_file, const std::string& system_file,
              const std::string& cycle_file) {
  const auto loaded = load_complex_and_system(complex_file, system_file);
  const auto Y = json_io::cycle_from_json(
      json_io::load_json_file(cycle_file), loaded.complex);
  const auto chain = localsys::to_chain(loaded.complex, loaded.system, Y);
  return json_io::cochain_to_json(
      localsys::poincare_dual(loaded.complex, loaded.system, chain));
}

json cmd_intersect(const std::string& complex_file, const std::string& e_file,
                   const std::string& f_file, const std::string& g_file,
                   const std::string& pairing_file,
                   const std::string& cycle1_file,
                   const std::string& cycle2_file) {
  auto K = json_io::complex_from_json(json_io::load_json_file(complex_file));
  auto E = json_io::system_from_json(json_io::load_json_file(e_file), K);
  auto F = json_io::system_from_json(json_io::load_json_file(f_file), K);
  auto G = json_io::system_from_json(json_io::load_json_file(g_file), K);
  auto nu = json_io::pairing_from_json(json_io::load_json_file(pairing_file),
                                       K, E, F, G);
  const auto Y1 = json_io::cycle_from_json(
      json_io::load_json_file(cycle1_file), K);
  const auto Y2 = json_io::cycle_from_json(
      json_io::load_json_file(cycle2_file), K);
  const auto data = localsys::check_general_position(K, Y1, Y2);
  if (!data.in_general_position) {
    json viols = json::array();
    for (const auto& [d, s] : data.violations)
      viols.push_back(json{{"dim", d}, {"simplex", s}});
    throw GeneralPositionViolation("cycles are not in general position: " +
                                   viols.dump());
  }
  const auto result = localsys::intersect_cycles(K, E, F, nu, Y1, Y2);
  json points = json::array();
  const auto s1 = localsys::parallel_section(K, E, Y1);
  const auto s2 = localsys::parallel_section(K, F, Y2);
  for (const auto& [v, sign] : data.points)
    points.push_back(json{
        {"vertex", v},
        {"sign", sign},
        {"coefficient",
         json_io::vector_to_json(nu.apply(s1.at(v), s2.at(v)))}});
  // Evaluate the class against the unit 0-cochain, transported to the
  // basepoint of the first cycle.
  const auto triv = localsys::LocalSystem::trivial(K, 1, G.field());
  exactfield::Matrix id_nu = exactfield::Matrix::identity(G.rank());
  const localsys::PairingRule eval_nu(K, triv, G, G, std::move(id_nu));
  const auto unit = localsys::Cochain::unit(K, triv);
  const auto value = localsys::kronecker(K, G, eval_nu, unit, result,
                                         Y1.basepoint);
  json out{{"chain", json_io::chain_to_json(result)},
           {"points", std::move(points)},
           {"evaluation", json_io::vector_to_json(value)}};
  return out;
}

json cmd_group_homology(const std::string& group_file,
                        const std::string& rep_file, int deg, int cap) {
  const auto G =
      json_io::group_from_json(json_io::load_json_file(group_file));
  const auto rho =
      json_io::rep_from_json(json_io::load_json_file(rep_file), G);
  return json{{"dim", barcomplex::group_homology(G, rho, deg, cap)}};
}

json checks_to_json(const std::vector<geometry::CheckRecord>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back(json{{"check", c.name},
                       {"status", c.passed ? "pass" : "fail"},
                       {"value", c.value}});
  return out;
}

json cmd_search(const std::string& kind, int n, long m,
                const std::string& mu_str, const std::string& mu2_str, int k,
                int q1, int q2, const std::string& x_file, long trials,
                uint64_t seed) {
  const geometry::RationalQuadraticForm form(n, m);
  if (kind == "complementary") {
    const auto mu = weights::normalized(parse_tuple(mu_str));
    std::vector<exactfield::Vector> x;
    if (!x_file.empty()) {
      x = json_io::vectors_from_json(json_io::load_json_file(x_file));
    } else {
      if (k <= 0)
        throw ValidationError("search needs --k or --x for the base tuple");
      for (int i = 0; i < k; ++i) {
        exactfield::Vector v(static_cast<size_t>(n) + 1);
        v[static_cast<size_t>(i)] = exactfield::Scalar(1);
        x.push_back(std::move(v));
      }
    }
    const auto res =
        geometry::complementary_tuple_search(form, x, mu, trials, seed);
    json tuple = json::array();
    for (const auto& v : res.tuple) tuple.push_back(json_io::vector_to_json(v));
    return json{{"kind", "complementary"},
                {"seed", res.seed},
                {"trials_used", res.trials_used},
                {"tuple", std::move(tuple)},
                {"transcript", checks_to_json(res.checks)}};
  }
  if (kind == "cup") {
    const auto mu1 = weights::normalized(parse_tuple(mu_str));
    const auto mu2 = weights::normalized(parse_tuple(mu2_str));
    const auto res = geometry::cup_tuple_search(form, q1, q2, mu1, mu2,
                                                trials, seed);
    json tuple = json::array();
    for (const auto& v : res.tuple) tuple.push_back(json_io::vector_to_json(v));
    return json{{"kind", "cup"},
                {"seed", res.seed},
                {"trials_used", res.trials_used},
                {"tuple", std::move(tuple)},
                {"pairing1", res.pairing1.str()},
                {"pairing2", res.pairing2.str()},
                {"transcript", checks_to_json(res.checks)}};
  }
  throw ValidationError("unknown search kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisthom: exact twisted homology, harmonic tensor "
               "invariants and intersection products"};
  app.require_subcommand(1);

  int n = 0, deg = -1, cap = 4, k = 0, q1 = 0, q2 = 0;
  long m = 2, trials = 10000;
  std::string mu, mu2, x_file, y_file, complex_file, system_file;
  std::string e_file, f_file, g_file, pairing_file, a_file, b_file;
  std::string cycle_file, cycle2_file, group_file, rep_file, kind;
  uint64_t seed = 0;
  bool seed_given = false;

  auto* ranges = app.add_subcommand("ranges", "nonvanishing degree range");
  ranges->add_option("--n", n)->required();
  ranges->add_option("--mu", mu)->required();

  auto* branch = app.add_subcommand("branch", "restriction branching");
  branch->add_option("--mu", mu)->required();

  auto* invariant = app.add_subcommand("invariant", "invariant tensor tau_x");
  invariant->add_option("--n", n)->required();
  invariant->add_option("--mu", mu)->required();
  invariant->add_option("--x", x_file)->required();

  auto* pair = app.add_subcommand("pair", "pairing (tau_x, tau_y)");
  pair->add_option("--n", n)->required();
  pair->add_option("--mu", mu)->required();
  pair->add_option("--x", x_file)->required();
  pair->add_option("--y", y_file)->required();

  auto* hom = app.add_subcommand("homology", "twisted homology dimensions");
  hom->add_option("--complex", complex_file)->required();
  hom->add_option("--system", system_file)->required();
  hom->add_option("--deg", deg);

  auto* cohom = app.add_subcommand("cohomology", "twisted cohomology");
  cohom->add_option("--complex", complex_file)->required();
  cohom->add_option("--system", system_file)->required();
  cohom->add_option("--deg", deg);

  auto* cupcmd = app.add_subcommand("cup", "cup product of cochains");
  cupcmd->add_option("--complex", complex_file)->required();
  cupcmd->add_option("--system-e", e_file)->required();
  cupcmd->add_option("--system-f", f_file)->required();
  cupcmd->add_option("--system-g", g_file)->required();
  cupcmd->add_option("--pairing", pairing_file)->required();
  cupcmd->add_option("--a", a_file)->required();
  cupcmd->add_option("--b", b_file)->required();

  auto* dual = app.add_subcommand("dual", "Poincare dual of a cycle");
  dual->add_option("--complex", complex_file)->required();
  dual->add_option("--system", system_file)->required();
  dual->add_option("--cycle", cycle_file)->required();

  auto* inter = app.add_subcommand("intersect",
                                   "geometric intersection product");
  inter->add_option("--complex", complex_file)->required();
  inter->add_option("--system-e", e_file)->required();
  inter->add_option("--system-f", f_file)->required();
  inter->add_option("--system-g", g_file)->required();
  inter->add_option("--pairing", pairing_file)->required();
  inter->add_option("--cycle1", cycle_file)->required();
  inter->add_option("--cycle2", cycle2_file)->required();

  auto* ghom = app.add_subcommand("group-homology",
                                  "bar-complex homology of a finite group");
  ghom->add_option("--group", group_file)->required();
  ghom->add_option("--rep", rep_file)->required();
  ghom->add_option("--deg", deg)->required();
  ghom->add_option("--cap", cap);

  auto* search = app.add_subcommand("search", "rational witness searches");
  search->add_option("--kind", kind)->required();
  search->add_option("--n", n)->required();
  search->add_option("--m", m);
  search->add_option("--mu", mu);
  search->add_option("--mu2", mu2);
  search->add_option("--k", k);
  search->add_option("--q1", q1);
  search->add_option("--q2", q2);
  search->add_option("--x", x_file);
  search->add_option("--trials", trials);
  search->add_option("--seed", seed)->each(
      [&](const std::string&) { seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    json out;
    if (*ranges) out = cmd_ranges(n, mu);
    if (*branch) out = cmd_branch(mu);
    if (*invariant) out = cmd_invariant(n, mu, x_file);
    if (*pair) out = cmd_pair(n, mu, x_file, y_file);
    if (*hom) out = cmd_homology(complex_file, system_file, deg, false);
    if (*cohom) out = cmd_homology(complex_file, system_file, deg, true);
    if (*cupcmd)
      out = cmd_cup(complex_file, e_file, f_file, g_file, pairing_file,
                    a_file, b_file);
    if (*dual) out = cmd_dual(complex_file, system_file, cycle_file);
    if (*inter)
      out = cmd_intersect(complex_file, e_file, f_file, g_file, pairing_file,
                          cycle_file, cycle2_file);
    if (*ghom) out = cmd_group_homology(group_file, rep_file, deg, cap);
    if (*search) {
      if (!seed_given) {
        seed = std::random_device{}();
      }
      out = cmd_search(kind, n, m, mu, mu2, k, q1, q2, x_file, trials, seed);
    }
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const TrialsExhaustedError& e) {
    std::cerr << json{{"error", "trials exhausted"}, {"detail", e.what()},
                      {"seed", seed}}
                     .dump()
              << "\n";
    return 4;
  } catch (const InfeasibleError& e) {
    std::cerr << json{{"error", "infeasible"}, {"detail", e.what()}}.dump()
              << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << json{{"error", "invalid input"}, {"detail", e.what()}}.dump()
              << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", "failure"}, {"detail", e.what()}}.dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "failure"}, {"detail", e.what()}}.dump()
              << "\n";
    return 1;
  }
}
