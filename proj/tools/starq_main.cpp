// Command line front end: membership classification, operator weights,
// extremal functions, distortion envelopes, neighborhoods, Hadamard products,
// integral transforms and the sampling-based verifier.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "starq/json_io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitError = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw starq::Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

starq::OperatorParams load_params(const std::string& path) {
  return starq::operator_params_from_json(load_json(path));
}

starq::ClassParams load_class(const std::string& path) {
  return starq::class_params_from_json(load_json(path));
}

starq::TFunction load_function(const std::string& path) {
  return load_json(path).get<starq::TFunction>();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"membership, geometry and verification tools for operator-defined "
               "classes of analytic functions with negative coefficients"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "seed for randomized check modes (current subcommands are deterministic)");

  std::string params_path, class_path, function_path, f_path, g_path;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--params", params_path, "operator parameters JSON")->required();
  };
  auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", class_path, "class parameters JSON")->required();
  };

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "run the coefficient membership test");
  double classify_tol = 1e-12;
  add_params(classify_cmd);
  add_class(classify_cmd);
  classify_cmd->add_option("--function", function_path, "function JSON")->required();
  classify_cmd->add_option("--tol", classify_tol, "relative tolerance");

  // weights
  auto* weights_cmd = app.add_subcommand("weights", "emit operator weights as CSV");
  int weights_n = 0;
  add_params(weights_cmd);
  weights_cmd->add_option("--n", weights_n, "largest index")->required();

  // extremal
  auto* extremal_cmd = app.add_subcommand("extremal", "extremal function at one index");
  int extremal_n = 0;
  add_params(extremal_cmd);
  add_class(extremal_cmd);
  extremal_cmd->add_option("--n", extremal_n, "coefficient index")->required();

  // distortion
  auto* distortion_cmd = app.add_subcommand("distortion", "growth/distortion envelope");
  double distortion_r = 0.0;
  bool as_stated = false, sweep = false;
  int distortion_trunc = 64;
  add_params(distortion_cmd);
  add_class(distortion_cmd);
  auto* r_opt = distortion_cmd->add_option("--r", distortion_r, "radius in (0, 1)");
  distortion_cmd->add_flag("--as-stated", as_stated, "envelope without the Lambda_2 factor");
  distortion_cmd->add_flag("--sweep", sweep, "CSV sweep over r = 0.05..0.95");
  distortion_cmd->add_option("--trunc", distortion_trunc, "weight truncation (default 64)");

  // neighborhood
  auto* neighborhood_cmd = app.add_subcommand("neighborhood", "neighborhood radii and proximity");
  int neighborhood_trunc = 64;
  add_params(neighborhood_cmd);
  add_class(neighborhood_cmd);
  auto* nf_opt = neighborhood_cmd->add_option("--f", f_path, "first function JSON");
  auto* ng_opt = neighborhood_cmd->add_option("--g", g_path, "second function JSON");
  neighborhood_cmd->add_option("--trunc", neighborhood_trunc, "weight truncation (default 64)");
  nf_opt->needs(ng_opt);
  ng_opt->needs(nf_opt);

  // hadamard
  auto* hadamard_cmd = app.add_subcommand("hadamard", "coefficientwise product and order bounds");
  add_params(hadamard_cmd);
  add_class(hadamard_cmd);
  hadamard_cmd->add_option("--f", f_path, "first function JSON")->required();
  hadamard_cmd->add_option("--g", g_path, "second function JSON")->required();

  // integral
  auto* integral_cmd = app.add_subcommand("integral", "integral transforms");
  std::string kind;
  double int_q = 1.0, int_alpha = 1.0;
  integral_cmd->add_option("--kind", kind, "bernardi | alpha")
      ->required()
      ->check(CLI::IsMember({"bernardi", "alpha"}));
  auto* q_opt = integral_cmd->add_option("--q", int_q, "order of the first kind (q > -1)");
  auto* alpha_opt = integral_cmd->add_option("--alpha", int_alpha, "order of the second kind [0, 2]");
  integral_cmd->add_option("--function", function_path, "function JSON")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "crosscheck the coefficient test against sampling");
  std::vector<double> radii;
  int angles = 64;
  double verify_tol = 1e-9;
  add_params(verify_cmd);
  add_class(verify_cmd);
  verify_cmd->add_option("--function", function_path, "function JSON")->required();
  verify_cmd->add_option("--radii", radii, "sample radii in (0, 1)");
  verify_cmd->add_option("--angles", angles, "angles per circle (default 64)");
  verify_cmd->add_option("--tol", verify_tol, "sufficiency slack (default 1e-9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      const auto p = load_params(params_path);
      const auto cp = load_class(class_path);
      const auto f = load_function(function_path);
      const auto w = starq::operators::lambda_weights(p, std::max(f.trunc(), 2));
      print_json(starq::classify::membership_test(f, w, cp, classify_tol));
      return 0;
    }
    if (*weights_cmd) {
      const auto p = load_params(params_path);
      const auto w = starq::operators::lambda_weights(p, weights_n);
      std::cout << "n,lambda\n";
      for (int n = 2; n <= w.trunc(); ++n) {
        std::cout << n << "," << fmt17(w.lambda(n)) << "\n";
      }
      return 0;
    }
    if (*extremal_cmd) {
      const auto p = load_params(params_path);
      const auto cp = load_class(class_path);
      const auto w = starq::operators::lambda_weights(p, std::max(extremal_n, 2));
      print_json(starq::classify::extremal_function(extremal_n, w, cp));
      return 0;
    }
    if (*distortion_cmd) {
      const auto p = load_params(params_path);
      const auto cp = load_class(class_path);
      const auto w = starq::operators::lambda_weights(p, distortion_trunc);
      if (sweep) {
        std::cout << "r,value_lo,value_hi,deriv_lo,deriv_hi\n";
        for (int i = 1; i <= 19; ++i) {
          const double r = 0.05 * static_cast<double>(i);
          const auto env = starq::geometry::distortion_envelope(r, w, cp, as_stated);
          std::cout << fmt17(env.r) << "," << fmt17(env.value_lo) << "," << fmt17(env.value_hi)
                    << "," << fmt17(env.deriv_lo) << "," << fmt17(env.deriv_hi) << "\n";
        }
        return 0;
      }
      if (r_opt->count() == 0) {
        std::cerr << "error: distortion requires --r unless --sweep is given\n";
        return kExitError;
      }
      print_json(starq::geometry::distortion_envelope(distortion_r, w, cp, as_stated));
      return 0;
    }
    if (*neighborhood_cmd) {
      const auto p = load_params(params_path);
      const auto cp = load_class(class_path);
      const auto w = starq::operators::lambda_weights(p, neighborhood_trunc);
      const double radius = starq::geometry::enclosing_neighborhood_radius(w, cp);
      json out{{"enclosing_radius", radius}};
      double gamma = radius;
      if (nf_opt->count() > 0) {
        const auto f = load_function(f_path);
        const auto g = load_function(g_path);
        gamma = starq::geometry::neighborhood_distance(f, g);
        out["distance"] = gamma;
      }
      out["zeta_gamma"] = gamma;
      out["zeta"] = starq::geometry::neighborhood_zeta(gamma, w, cp);
      print_json(out);
      return 0;
    }
    if (*hadamard_cmd) {
      const auto p = load_params(params_path);
      const auto cp = load_class(class_path);
      const auto f = load_function(f_path);
      const auto g = load_function(g_path);
      const auto product = starq::hadamard(f, g);
      const int trunc = std::max(product.trunc(), 2);
      const auto w = starq::operators::lambda_weights(p, trunc);
      json out{{"product", product}};
      out["order_bound"] = starq::geometry::hadamard_order_bound(w, cp, trunc);
      const auto oracle = starq::geometry::hadamard_order_oracle(w, cp, trunc);
      if (oracle) {
        out["order_bound_oracle"] = *oracle;
      } else {
        out["order_bound_oracle"] = nullptr;
      }
      print_json(out);
      return 0;
    }
    if (*integral_cmd) {
      const auto f = load_function(function_path);
      if (kind == "bernardi") {
        if (q_opt->count() == 0) {
          std::cerr << "error: --kind bernardi requires --q\n";
          return kExitError;
        }
        print_json(starq::operators::bernardi_integral(f, int_q));
      } else {
        if (alpha_opt->count() == 0) {
          std::cerr << "error: --kind alpha requires --alpha\n";
          return kExitError;
        }
        print_json(starq::operators::alpha_integral(f, int_alpha));
      }
      return 0;
    }
    if (*verify_cmd) {
      const auto p = load_params(params_path);
      const auto cp = load_class(class_path);
      const auto f = load_function(function_path);
      const auto w = starq::operators::lambda_weights(p, std::max(f.trunc(), 2));
      auto grid = starq::SampleGrid::defaults();
      if (!radii.empty()) grid = starq::SampleGrid(radii, angles, grid.guard);
      else if (angles != 64) grid = starq::SampleGrid(grid.radii, angles, grid.guard);
      const auto rep = starq::sampling::crosscheck(f, w, cp, grid, verify_tol);
      print_json(rep);
      return rep.verdict == starq::Verdict::kConsistent ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
