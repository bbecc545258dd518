#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lbq/arnoldi.hpp"
#include "lbq/bessel.hpp"
#include "lbq/collision.hpp"
#include "lbq/config.hpp"
#include "lbq/dispersion.hpp"
#include "lbq/mode_fit.hpp"
#include "lbq/model_factory.hpp"
#include "lbq/quartic.hpp"
#include "lbq/simulator.hpp"
#include "lbq/taylor.hpp"

namespace {

using namespace lbq;

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::string scalar = "float";
  long seed = -1;  // -1: use config / default
  int threads = 1;
};

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const Config& cfg,
            const std::vector<std::string>& columns)
      : out_(path) {
    if (!out_) throw std::runtime_error("cannot open `" + path + "` for writing");
    out_ << "# config " << cfg.hash() << "\n";
    row(columns);
  }
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ",";
      out_ << csv_quote(fields[i]);
    }
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

Config load_config(const CommonArgs& args) {
  std::ifstream in(args.config_path);
  if (!in) throw std::runtime_error("cannot read config `" + args.config_path + "`");
  std::stringstream ss;
  ss << in.rdbuf();
  Config cfg = Config::parse(ss.str());
  if (args.seed >= 0) cfg.set("seed", std::to_string(args.seed));
  return cfg;
}

std::string out_path(const CommonArgs& args, const std::string& name) {
  std::filesystem::create_directories(args.out_dir);
  return (std::filesystem::path(args.out_dir) / name).string();
}

const std::vector<std::string> kModelKeys = {
    "scheme", "model",  "lambda", "alpha", "beta", "u",    "v",
    "xi",     "a4",     "a5",     "a6",    "s_1",  "s_2",  "s_3",
    "s_4",    "s_5",    "s_6",    "s_7",   "s_8",  "s_10", "s_13",
    "s_14",   "s_16",   "sigma_1", "sigma_2", "sigma_3", "sigma_4",
    "sigma_5", "sigma_6", "sigma_7", "sigma_8", "sigma_10", "sigma_13",
    "sigma_14", "sigma_16"};

std::vector<std::string> with_model_keys(std::vector<std::string> extra) {
  extra.insert(extra.end(), kModelKeys.begin(), kModelKeys.end());
  return extra;
}

// ---------------------------------------------------------------- expand --

template <class T>
void run_expand_typed(const CommonArgs& args, const Config& cfg) {
  auto model = make_model<T>(cfg);
  int order = (int)cfg.get_int("order", 4);
  auto ex = expand(model, order);
  std::vector<std::string> cols = {"conserved_i", "source_j", "gamma", "dt_power"};
  if constexpr (std::is_same_v<T, double>)
    cols.push_back("coefficient");
  else if constexpr (std::is_same_v<T, Rational>) {
    cols.push_back("coefficient_numerator");
    cols.push_back("coefficient_denominator");
  } else {
    cols.push_back("coefficient");
  }
  CsvWriter csv(out_path(args, "pde_report.csv"), cfg, cols);
  for (int i = 0; i < ex.conserved; ++i) {
    for (const auto& term : pde_report(ex, i)) {
      std::string gamma;
      for (int a = 0; a < term.gamma.dim(); ++a) {
        if (a) gamma += ":";
        gamma += std::to_string(term.gamma[a]);
      }
      std::vector<std::string> row = {std::to_string(i), std::to_string(term.j),
                                      gamma, std::to_string(term.dt_power)};
      if constexpr (std::is_same_v<T, double>) {
        row.push_back(fmt(term.coefficient));
      } else if constexpr (std::is_same_v<T, Rational>) {
        row.push_back(term.coefficient.get_num().get_str());
        row.push_back(term.coefficient.get_den().get_str());
      } else {
        row.push_back(ScalarOps<T>::to_string(term.coefficient));
      }
      csv.row(row);
    }
  }
}

int run_expand(const CommonArgs& args) {
  Config cfg = load_config(args);
  cfg.require_known(with_model_keys({"order", "seed"}));
  if (args.scalar == "rational")
    run_expand_typed<Rational>(args, cfg);
  else if (args.scalar == "quadratic")
    run_expand_typed<Quadratic>(args, cfg);
  else
    run_expand_typed<double>(args, cfg);
  return 0;
}

// ------------------------------------------------------------------ tune --

int run_tune(const CommonArgs& args) {
  Config cfg = load_config(args);
  cfg.require_known({"family", "sigma_1", "sigma_4", "sigma_13", "alpha", "seed"});
  std::string family = cfg.get_string("family");
  auto num = [&](const std::string& key) {
    return parse_scalar<double>(cfg.get_string(key));
  };
  QuarticSolution<double> sol;
  if (family == "d1q3-thermal") {
    double s1 = num("sigma_1"), al = cfg.get_double("alpha");
    sol.family = family;
    sol.sigma = {{"2", quartic_d1q3_thermal(s1, al)}};
  } else if (family == "d2q5") {
    auto [o3, o4] = quartic_d2q5(num("sigma_1"), num("alpha"));
    sol.family = family;
    sol.sigma = {{"3", o3}, {"4", o4}};
  } else if (family == "d3q7") {
    auto [o4, o6] = quartic_d3q7(num("sigma_1"), num("alpha"));
    sol.family = family;
    sol.sigma = {{"4", o4}, {"6", o6}};
  } else if (family == "d2q9-thermal") {
    auto [xi, a4] = quartic_d2q9_thermal(num("sigma_1"));
    sol.family = family;
    sol.sigma = {{"xi", xi}, {"a4", a4}};
  } else if (family == "d2q9-thermal-trt") {
    auto [o1, o3] = quartic_d2q9_thermal_trt<double>();
    sol.family = family;
    sol.sigma = {{"1", o1}, {"3", o3}};
  } else if (family == "d2q9-stokes") {
    auto [o5, o7] = quartic_d2q9_stokes<double>();
    sol.family = family;
    sol.sigma = {{"5", o5}, {"7", o7}};
  } else if (family == "d3q19") {
    sol = quartic_d3q19(num("sigma_4"), num("sigma_13"));
  } else {
    throw std::invalid_argument("unknown tuning family `" + family + "`");
  }

  std::ofstream frag(out_path(args, "tuned.config"));
  frag << "# tuned relaxation parameters, family " << family << "\n";
  const std::map<std::string, std::string> moment_number = {
      {"energy", "4"},          {"stress", "5"},      {"energy_flux", "10"},
      {"energy_square", "13"},  {"weighted_tensor", "14"},
      {"third_order", "16"}};
  for (const auto& [name, value] : sol.sigma) {
    if (name == "xi" || name == "a4") {
      frag << name << " = " << fmt(value) << "\n";
    } else {
      auto it = moment_number.find(name);
      frag << "sigma_" << (it == moment_number.end() ? name : it->second)
           << " = " << fmt(value) << "\n";
    }
  }

  CsvWriter csv(out_path(args, "residuals.csv"), cfg, {"name", "value"});
  if (family == "d3q19") {
    auto res = appendix_residuals<double>(
        sol.sigma[0].second, sol.sigma[1].second, sol.sigma[2].second,
        sol.sigma[3].second, sol.sigma[4].second, sol.sigma[5].second);
    for (std::size_t i = 0; i < res.size(); ++i)
      csv.row({"residual_" + std::to_string(i + 1), fmt(res[i])});
  } else {
    for (const auto& [name, value] : sol.sigma) csv.row({name, fmt(value)});
  }
  return 0;
}

// ------------------------------------------------------------ dispersion --

double transport_coefficient(const Config& cfg, const CollisionModel<double>& m) {
  if (cfg.has("transport")) return cfg.get_double("transport");
  double lam = ScalarOps<double>::to_double(m.scheme.lambda);
  double dt = 1.0 / lam;
  auto sigma = [&](int k) { return 1.0 / m.rates[k] - 0.5; };
  if (m.kind == "thermal-d2q5")
    return lam * lam * dt * sigma(1) * (4 + cfg.get_double("alpha")) / 10.0;
  if (m.kind == "thermal-d3q7")
    return lam * lam * dt * sigma(1) * (cfg.get_double("alpha") + 6) / 21.0;
  if (m.kind == "thermal-d1q3")
    return lam * lam * dt * sigma(1) * (cfg.get_double("alpha") + 2) / 6.0;
  if (m.kind == "fluid-d2q9") return lam * lam * dt * sigma(7) / 3.0;
  if (m.kind == "fluid-d3q19") return lam * lam * dt * 2.0 * sigma(5) / 5.0;
  throw std::invalid_argument("no default transport coefficient for `" + m.kind +
                              "`; set the `transport` key");
}

int run_dispersion(const CommonArgs& args) {
  Config cfg = load_config(args);
  cfg.require_known(with_model_keys({"n_list", "direction", "transport", "seed"}));
  auto model = make_model<double>(cfg);
  double coeff = transport_coefficient(cfg, model);
  auto nlist = cfg.get_int_list("n_list");
  auto dir = cfg.get_double_list("direction");
  int dim = model.scheme.dim;
  if ((int)dir.size() != dim)
    throw std::invalid_argument("`direction` must have one entry per space dimension");
  double norm = 0;
  for (double d : dir) norm += d * d;
  norm = std::sqrt(norm);
  double angle = dim >= 2 ? std::atan2(dir[1], dir[0]) : 0.0;

  CsvWriter csv(out_path(args, "dispersion.csv"), cfg,
                {"n", "k", "angle", "gamma_num", "gamma_th", "error"});
  for (long n : nlist) {
    double kmag = 2.0 * M_PI / (double)n;
    std::vector<double> k(dim);
    for (int a = 0; a < dim; ++a) k[a] = kmag * dir[a] / norm;
    double gth = coeff * kmag * kmag;
    auto am = amplification(model, k);
    auto mr = measured_rate(am, gth);
    csv.row({std::to_string(n), fmt(kmag), fmt(angle), fmt(mr.gamma_num), fmt(gth),
             fmt(mr.relative_error)});
  }
  return 0;
}

// --------------------------------------------------------- geometry setup --

const std::vector<std::string> kGeometryKeys = {
    "geometry", "nx", "ny", "nz", "radius", "offset_x", "offset_y", "offset_z",
    "boundary", "boundary_order", "parity_x", "parity_y", "parity_z"};

Geometry make_geometry(const Config& cfg, int dim) {
  std::string kind = cfg.get_string("geometry");
  if (kind == "periodic")
    return make_periodic(dim, (int)cfg.get_int("nx"), (int)cfg.get_int("ny", 1),
                         (int)cfg.get_int("nz", 1));
  if (kind == "disk")
    return make_disk((int)cfg.get_int("nx"), (int)cfg.get_int("ny"),
                     cfg.get_double("radius"), cfg.get_double("offset_x", 0.5),
                     cfg.get_double("offset_y", 0.3));
  if (kind == "sphere")
    return make_sphere((int)cfg.get_int("nx"), (int)cfg.get_int("ny"),
                       (int)cfg.get_int("nz"), cfg.get_double("radius"),
                       cfg.get_double("offset_x", 0.5),
                       cfg.get_double("offset_y", 0.3),
                       cfg.get_double("offset_z", 0.2));
  if (kind == "octant")
    return make_octant(cfg.get_double("radius"),
                       {(int)cfg.get_int("parity_x", 1), (int)cfg.get_int("parity_y", 1),
                        (int)cfg.get_int("parity_z", 1)});
  throw std::invalid_argument("unknown geometry `" + kind + "`");
}

BoundaryRule make_boundary(const Config& cfg) {
  std::string b = cfg.get_string("boundary", "anti_bounce_back");
  BoundaryRule rule;
  if (b == "bounce_back")
    rule.kind = BoundaryRule::Kind::bounce_back;
  else if (b == "anti_bounce_back")
    rule.kind = BoundaryRule::Kind::anti_bounce_back;
  else
    throw std::invalid_argument("unknown boundary rule `" + b + "`");
  rule.order = (int)cfg.get_int("boundary_order", 2);
  if (rule.order != 1 && rule.order != 2)
    throw std::invalid_argument("`boundary_order` must be 1 or 2");
  return rule;
}

void seed_initial(Simulator& sim, const Geometry& g, const CollisionModel<double>& m,
                  const Config& cfg) {
  std::string init = cfg.get_string("initial", "random");
  int nc = m.conserved;
  if (init == "random") {
    std::mt19937_64 rng((std::uint64_t)cfg.get_int("seed", 12345));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> w(nc);
    for (int node = 0; node < g.node_count(); ++node) {
      if (!g.fluid[node]) continue;
      for (int i = 0; i < nc; ++i) w[i] = u(rng);
      sim.set_equilibrium(node, w);
    }
  } else if (init == "plane_wave") {
    std::vector<double> k = {2.0 * M_PI * cfg.get_double("i_x", 1) / g.extent[0],
                             2.0 * M_PI * cfg.get_double("i_y", 0) / std::max(1, g.extent[1]),
                             2.0 * M_PI * cfg.get_double("i_z", 0) / std::max(1, g.extent[2])};
    std::vector<double> w(nc, 0.0);
    int field = (int)cfg.get_int("field", 0);
    for (int z = 0; z < g.extent[2]; ++z)
      for (int y = 0; y < g.extent[1]; ++y)
        for (int x = 0; x < g.extent[0]; ++x) {
          if (!g.is_fluid(x, y, z)) continue;
          w.assign(nc, 0.0);
          w[field] = std::cos(k[0] * x + k[1] * y + k[2] * z);
          sim.set_equilibrium(g.index(x, y, z), w);
        }
  } else if (init == "bessel_mode") {
    int ell = (int)cfg.get_int("ell");
    int n = (int)cfg.get_int("n_index");
    ModeShape mode;
    if (cfg.get_string("mode_kind", "scalar") == "rotational")
      mode = disk_rotational_mode(g, n);
    else if (g.dim == 2)
      mode = disk_scalar_mode(g, ell, n);
    else
      mode = sphere_scalar_mode(g, ell, n);
    if (mode.conserved != nc)
      throw std::invalid_argument("mode seed does not match the model's conserved fields");
    std::vector<double> w(nc);
    for (int node = 0; node < g.node_count(); ++node) {
      if (!g.fluid[node]) continue;
      for (int i = 0; i < nc; ++i) w[i] = mode.w[(std::size_t)node * nc + i];
      sim.set_equilibrium(node, w);
    }
  } else {
    throw std::invalid_argument("unknown initial condition `" + init + "`");
  }
}

// -------------------------------------------------------------- simulate --

int run_simulate(const CommonArgs& args) {
  Config cfg = load_config(args);
  auto keys = with_model_keys({"steps", "stride", "initial", "seed", "field",
                               "i_x", "i_y", "i_z", "ell", "n_index", "mode_kind"});
  keys.insert(keys.end(), kGeometryKeys.begin(), kGeometryKeys.end());
  cfg.require_known(keys);
  auto model = make_model<double>(cfg);
  Geometry g = make_geometry(cfg, model.scheme.dim);
  Simulator sim(model, g, make_boundary(cfg));
  seed_initial(sim, g, model, cfg);

  long steps = cfg.get_int("steps");
  long stride = cfg.get_int("stride", steps);
  std::vector<std::string> cols = {"t", "x", "y", "z"};
  for (int i = 0; i < model.conserved; ++i) cols.push_back("w" + std::to_string(i));
  CsvWriter csv(out_path(args, "snapshots.csv"), cfg, cols);
  auto snapshot = [&](long t) {
    for (int z = 0; z < g.extent[2]; ++z)
      for (int y = 0; y < g.extent[1]; ++y)
        for (int x = 0; x < g.extent[0]; ++x) {
          if (!g.is_fluid(x, y, z)) continue;
          std::vector<std::string> row = {std::to_string(t), std::to_string(x),
                                          std::to_string(y), std::to_string(z)};
          for (int i = 0; i < model.conserved; ++i)
            row.push_back(fmt(sim.conserved_moment(g.index(x, y, z), i)));
          csv.row(row);
        }
  };
  snapshot(0);
  for (long t = 1; t <= steps; ++t) {
    sim.step();
    if (t % stride == 0 || t == steps) snapshot(t);
  }
  return 0;
}

// ----------------------------------------------------------------- eigen --

int run_eigen(const CommonArgs& args) {
  Config cfg = load_config(args);
  auto keys = with_model_keys({"n_wanted", "krylov", "power", "tolerance", "restarts",
                               "start", "seed", "field", "i_x", "i_y", "i_z", "ell",
                               "n_index", "mode_kind", "reference_problem",
                               "reference_ell", "reference_n", "transport"});
  keys.insert(keys.end(), kGeometryKeys.begin(), kGeometryKeys.end());
  cfg.require_known(keys);
  auto model = make_model<double>(cfg);
  Geometry g = make_geometry(cfg, model.scheme.dim);
  Simulator sim(model, g, make_boundary(cfg));
  int J = model.scheme.velocity_count;
  int dim = g.node_count() * J;

  ArnoldiOptions opt;
  opt.krylov_size = (int)cfg.get_int("krylov", 40);
  opt.n_wanted = (int)cfg.get_int("n_wanted", 4);
  opt.power = (int)cfg.get_int("power", 25);
  opt.tolerance = cfg.get_double("tolerance", 1e-10);
  opt.max_restarts = (int)cfg.get_int("restarts", 40);
  opt.seed = (unsigned)cfg.get_int("seed", 12345);
  if (cfg.get_string("start", "random") != "random") {
    Config start_cfg = cfg;
    start_cfg.set("initial", cfg.get_string("start"));
    seed_initial(sim, g, model, start_cfg);
    opt.start.assign(dim, 0.0);
    for (int node = 0; node < g.node_count(); ++node)
      for (int j = 0; j < J; ++j)
        opt.start[(std::size_t)node * J + j] = sim.population(node, j);
  }

  auto apply = [&](std::vector<double>& v) {
    for (int node = 0; node < g.node_count(); ++node)
      for (int j = 0; j < J; ++j) sim.population(node, j) = v[(std::size_t)node * J + j];
    for (int t = 0; t < opt.power; ++t) sim.step();
    for (int node = 0; node < g.node_count(); ++node)
      for (int j = 0; j < J; ++j) v[(std::size_t)node * J + j] = sim.population(node, j);
  };
  auto modes = arnoldi(apply, dim, opt);

  bool have_ref = cfg.has("reference_problem");
  double gth = 0;
  if (have_ref) {
    std::string p = cfg.get_string("reference_problem");
    ModeProblem prob;
    if (p == "heat-disk") prob = ModeProblem::heat_disk;
    else if (p == "heat-sphere") prob = ModeProblem::heat_sphere;
    else if (p == "stokes-disk") prob = ModeProblem::stokes_disk;
    else if (p == "stokes-sphere") prob = ModeProblem::stokes_sphere;
    else throw std::invalid_argument("unknown reference problem `" + p + "`");
    gth = gamma_reference(prob, (int)cfg.get_int("reference_ell"),
                          (int)cfg.get_int("reference_n"), g.radius,
                          transport_coefficient(cfg, model)).gamma;
  }

  CsvWriter csv(out_path(args, "eigenmodes.csv"), cfg,
                {"re_z", "im_z", "gamma_num", "gamma_th", "relative_error",
                 "residual", "converged"});
  for (const auto& r : modes) {
    double gnum = mode_rate(r);
    csv.row({fmt(r.z.real()), fmt(r.z.imag()), fmt(gnum),
             have_ref ? fmt(gth) : std::string(""),
             have_ref ? fmt(std::abs(gnum / gth - 1)) : std::string(""),
             fmt(r.residual), r.converged ? "1" : "0"});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearized multiple-relaxation lattice kinetic scheme workbench"};
  app.require_subcommand(1);
  CommonArgs args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", args.config_path, "configuration file (key = value lines)")
        ->required();
    sub->add_option("--out", args.out_dir, "output directory");
    sub->add_option("--scalar", args.scalar, "scalar mode")
        ->check(CLI::IsMember({"rational", "quadratic", "float"}));
    sub->add_option("--seed", args.seed, "random seed override");
    sub->add_option("--threads", args.threads, "worker thread cap");
  };

  auto* c_expand = app.add_subcommand(
      "expand", "equivalent-equation coefficients of a scheme, as CSV");
  auto* c_tune = app.add_subcommand(
      "tune", "fourth-order relaxation parameters for a scheme family");
  auto* c_disp = app.add_subcommand(
      "dispersion", "plane-wave decay-rate sweep against the diffusive prediction");
  auto* c_sim = app.add_subcommand(
      "simulate", "time-step a lattice and write field snapshots");
  auto* c_eig = app.add_subcommand(
      "eigen", "dominant eigenmodes of the time-step operator");
  for (auto* s : {c_expand, c_tune, c_disp, c_sim, c_eig}) add_common(s);

  CLI11_PARSE(app, argc, argv);
  try {
    if (c_expand->parsed()) return run_expand(args);
    if (c_tune->parsed()) return run_tune(args);
    if (c_disp->parsed()) return run_dispersion(args);
    if (c_sim->parsed()) return run_simulate(args);
    if (c_eig->parsed()) return run_eigen(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
