#include "plscape/cli.hpp"

#include "plscape/analysis.hpp"
#include "plscape/benchgen.hpp"
#include "plscape/errors.hpp"
#include "plscape/io.hpp"
#include "plscape/reconstruct.hpp"
#include "plscape/tropical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace plscape::cli {

namespace fs = std::filesystem;

namespace {

Rational option_rational(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(name + ": " + e.what());
  }
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    write_text_file(path, contents);
  }
}

class Printer {
 public:
  explicit Printer(std::optional<int> decimal_digits) : digits_(decimal_digits) {}

  std::string operator()(const Rational& x) const { return digits_ ? to_decimal(x, *digits_) : to_string(x); }
  std::string operator()(double x) const {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits_.value_or(17), x);
    return buffer;
  }

 private:
  std::optional<int> digits_;
};

std::vector<Rational> read_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_weights(in);
}

DiagramFamily read_family(const std::vector<std::string>& paths) {
  DiagramFamily family;
  family.reserve(paths.size());
  for (const auto& p : paths) family.push_back(read_diagram_file(p));
  return family;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact persistence landscapes: construction, inversion, kernels and reconstruction", "plscape"};
  app.require_subcommand(1);

  std::string decimal_text;
  app.add_option("--decimal", decimal_text,
                 "Print scalar results as decimals with this many significant digits (default 15)")
      ->expected(0, 1);

  std::string output;

  // landscape
  auto* landscape_cmd = app.add_subcommand("landscape", "Diagram file -> landscape file");
  std::string landscape_in;
  landscape_cmd->add_option("diagram", landscape_in, "Input diagram file")->required();
  landscape_cmd->add_option("-o,--output", output, "Output landscape file (default: stdout)");

  // invert
  auto* invert_cmd = app.add_subcommand("invert", "Landscape file -> diagram file");
  std::string invert_in;
  invert_cmd->add_option("landscape", invert_in, "Input landscape file")->required();
  invert_cmd->add_option("-o,--output", output, "Output diagram file (default: stdout)");

  // distance
  auto* distance_cmd = app.add_subcommand("distance", "Distance between two landscape files");
  std::vector<std::string> distance_in;
  std::string p_text = "inf";
  distance_cmd->add_option("landscapes", distance_in, "Two landscape files")->required()->expected(2);
  distance_cmd->add_option("--p", p_text, "1, 2, ... or inf")->capture_default_str();

  // bottleneck
  auto* bottleneck_cmd = app.add_subcommand("bottleneck", "Bottleneck distance between two diagram files");
  std::vector<std::string> bottleneck_in;
  bottleneck_cmd->add_option("diagrams", bottleneck_in, "Two diagram files")->required()->expected(2);

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "Landscape kernel between two diagram files");
  std::vector<std::string> kernel_in;
  std::optional<double> nu;
  std::string weights_path;
  kernel_cmd->add_option("diagrams", kernel_in, "Two diagram files")->required()->expected(2);
  auto* kernel_nu = kernel_cmd->add_option("--nu", nu, "Poisson-weighted kernel with parameter nu > 0");
  kernel_cmd->add_option("--weights", weights_path, "File of level weights w_1, w_2, ...")->excludes(kernel_nu);

  // gram
  auto* gram_cmd = app.add_subcommand("gram", "Manifest of diagram files -> Gram matrix CSV");
  std::string manifest_path;
  bool exact = false;
  gram_cmd->add_option("manifest", manifest_path, "One diagram path per line")->required();
  auto* gram_nu = gram_cmd->add_option("--nu", nu, "Poisson-weighted kernel with parameter nu > 0");
  gram_cmd->add_option("--weights", weights_path, "File of level weights")->excludes(gram_nu);
  gram_cmd->add_flag("--exact", exact, "Write exact p/q entries (plain or explicit-weight kernels)");
  gram_cmd->add_option("-o,--output", output, "Output CSV file (default: stdout)");

  // average
  auto* average_cmd = app.add_subcommand("average", "Diagram files -> average landscape file");
  std::vector<std::string> average_in;
  average_cmd->add_option("diagrams", average_in, "Diagram files")->required();
  average_cmd->add_option("-o,--output", output, "Output landscape file (default: stdout)");

  // reconstruct
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Average landscape file -> component diagram files + manifest");
  std::string reconstruct_in;
  std::string out_dir = ".";
  reconstruct_cmd->add_option("landscape", reconstruct_in, "Average landscape file")->required();
  reconstruct_cmd->add_option("-o,--output-dir", out_dir, "Directory for component_<i>.dgm and manifest.json")
      ->capture_default_str();

  // check
  auto* check_cmd = app.add_subcommand("check", "Genericity, connectivity and independence report");
  std::vector<std::string> check_in;
  check_cmd->add_option("diagrams", check_in, "Diagram files of the family")->required();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate test diagrams");
  gen_cmd->require_subcommand(1);
  std::uint64_t seed = 0;
  auto* gen_counter = gen_cmd->add_subcommand("counterexample", "Pair with sup landscape distance 1, bottleneck 2n+1");
  int counter_n = 4;
  std::string prefix = "counterexample";
  gen_counter->add_option("--n", counter_n, "Size parameter n >= 1")->capture_default_str();
  gen_counter->add_option("-o,--output", prefix, "Writes <prefix>_1.dgm and <prefix>_2.dgm")->capture_default_str();

  auto* gen_random = gen_cmd->add_subcommand("random", "Random diagram on a rational grid");
  std::size_t count = 10;
  std::string lo_text = "0";
  std::string hi_text = "1";
  gen_random->add_option("--count", count, "Number of points")->capture_default_str();
  gen_random->add_option("--lo", lo_text, "Lower coordinate bound")->capture_default_str();
  gen_random->add_option("--hi", hi_text, "Upper coordinate bound")->capture_default_str();
  gen_random->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen_random->add_option("-o,--output", output, "Output diagram file (default: stdout)");

  auto* gen_family = gen_cmd->add_subcommand("family", "Connected, arithmetically independent family");
  std::size_t family_n = 3;
  gen_family->add_option("--n", family_n, "Number of diagrams")->capture_default_str();
  gen_family->add_option("--count", count, "Random points per diagram")->capture_default_str();
  gen_family->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen_family->add_option("-o,--output-dir", out_dir, "Writes family_<i>.dgm here")->capture_default_str();

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "Sample grids as CSV");
  grid_cmd->require_subcommand(1);
  auto* grid_landscape = grid_cmd->add_subcommand("landscape", "Landscape file sampled on a uniform grid");
  std::string grid_in;
  std::size_t kmax = 1;
  std::size_t steps = 10;
  std::string tmin_text;
  std::string tmax_text;
  grid_landscape->add_option("landscape", grid_in, "Landscape file")->required();
  grid_landscape->add_option("--kmax", kmax, "Number of levels")->capture_default_str();
  grid_landscape->add_option("--tmin", tmin_text, "Grid start")->required();
  grid_landscape->add_option("--tmax", tmax_text, "Grid end")->required();
  grid_landscape->add_option("--steps", steps, "Number of intervals")->capture_default_str();
  grid_landscape->add_flag("--exact", exact, "Write exact p/q entries");
  grid_landscape->add_option("-o,--output", output, "Output CSV file (default: stdout)");

  auto* grid_tropical = grid_cmd->add_subcommand("tropical", "Tropical feature grid of a diagram file");
  std::size_t big_k = 1;
  std::size_t m = 1;
  std::string a_text = "0";
  std::string eps_text = "1";
  grid_tropical->add_option("diagram", grid_in, "Diagram file")->required();
  grid_tropical->add_option("--K", big_k, "Number of levels")->capture_default_str();
  grid_tropical->add_option("--a", a_text, "Grid start")->capture_default_str();
  grid_tropical->add_option("--eps", eps_text, "Grid spacing")->capture_default_str();
  grid_tropical->add_option("--m", m, "Grid has 2m + 1 points")->capture_default_str();
  grid_tropical->add_flag("--exact", exact, "Write exact p/q entries");
  grid_tropical->add_option("-o,--output", output, "Output CSV file (default: stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  std::optional<int> decimal;
  if (app.count("--decimal") > 0) {
    try {
      decimal = decimal_text.empty() ? 15 : std::stoi(decimal_text);
    } catch (const std::exception&) {
      err << "error: --decimal expects a digit count\n";
      return kInputError;
    }
    if (*decimal < 1 || *decimal > 40) {
      err << "error: --decimal expects 1..40 digits\n";
      return kInputError;
    }
  }
  const Printer print(decimal);

  try {
    if (*landscape_cmd) {
      emit(output, serialize(landscape_of(read_diagram_file(landscape_in))), out);
    } else if (*invert_cmd) {
      emit(output, serialize(diagram_of(read_landscape_file(invert_in))), out);
    } else if (*distance_cmd) {
      const Landscape a = read_landscape_file(distance_in[0]);
      const Landscape b = read_landscape_file(distance_in[1]);
      if (p_text == "inf") {
        out << print(sup_distance(a, b)) << '\n';
      } else {
        unsigned long p = 0;
        try {
          p = std::stoul(p_text);
        } catch (const std::exception&) {
          throw InputError("--p must be a positive integer or 'inf'");
        }
        if (p == 0) throw InputError("--p must be a positive integer or 'inf'");
        if (p == 1) {
          out << print(l1_distance(a, b)) << '\n';
        } else {
          out << print(p_distance(a, b, static_cast<unsigned>(p))) << '\n';
        }
      }
    } else if (*bottleneck_cmd) {
      out << print(bottleneck_distance(read_diagram_file(bottleneck_in[0]), read_diagram_file(bottleneck_in[1])))
          << '\n';
    } else if (*kernel_cmd) {
      const Landscape a = landscape_of(read_diagram_file(kernel_in[0]));
      const Landscape b = landscape_of(read_diagram_file(kernel_in[1]));
      if (nu) {
        out << print(poisson_kernel(*nu, a, b)) << '\n';
      } else if (!weights_path.empty()) {
        out << print(weighted_inner_product(a, b, read_weights(weights_path))) << '\n';
      } else {
        out << print(inner_product(a, b)) << '\n';
      }
    } else if (*gram_cmd) {
      std::ifstream manifest(manifest_path);
      if (!manifest) throw IoError("cannot open '" + manifest_path + "' for reading");
      DiagramFamily family;
      for (const auto& path : parse_manifest(manifest, fs::path(manifest_path).parent_path())) {
        family.push_back(read_diagram_file(path));
      }
      std::ostringstream csv;
      if (nu) {
        write_csv(csv, gram_matrix(family, PoissonKernel{*nu}));
      } else if (!weights_path.empty()) {
        WeightSpec w{read_weights(weights_path), std::nullopt};
        if (exact) {
          const auto& ws = std::get<std::vector<Rational>>(w.level_weights);
          std::vector<Landscape> ls;
          for (const auto& d : family) ls.push_back(landscape_of(d));
          RationalMatrix g(static_cast<Eigen::Index>(ls.size()), static_cast<Eigen::Index>(ls.size()));
          for (std::size_t i = 0; i < ls.size(); ++i) {
            for (std::size_t j = 0; j < ls.size(); ++j) {
              g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = weighted_inner_product(ls[i], ls[j], ws);
            }
          }
          write_csv(csv, g, true);
        } else {
          write_csv(csv, gram_matrix(family, WeightedKernel{std::move(w)}));
        }
      } else {
        write_csv(csv, gram_matrix_exact(family), exact);
      }
      emit(output, csv.str(), out);
    } else if (*average_cmd) {
      std::vector<Landscape> ls;
      for (const auto& d : read_family(average_in)) ls.push_back(landscape_of(d));
      emit(output, serialize(average_of(ls)), out);
    } else if (*reconstruct_cmd) {
      const Landscape average = read_landscape_file(reconstruct_in);
      fs::create_directories(out_dir);
      nlohmann::json manifest;
      manifest["input"] = reconstruct_in;
      try {
        const auto diagrams = reconstruct_from_average(average);
        manifest["verified"] = true;
        manifest["count"] = diagrams.size();
        manifest["components"] = nlohmann::json::array();
        for (std::size_t i = 0; i < diagrams.size(); ++i) {
          const std::string name = "component_" + std::to_string(i + 1) + ".dgm";
          write_text_file(fs::path(out_dir) / name, serialize(diagrams[i]));
          manifest["components"].push_back({{"index", i + 1},
                                            {"file", name},
                                            {"points", diagrams[i].size()},
                                            {"min_birth", to_string(diagrams[i].min_birth())},
                                            {"max_death", to_string(diagrams[i].max_death())}});
        }
        write_text_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
        out << diagrams.size() << " component(s) written to " << out_dir << '\n';
      } catch (const PreconditionError& e) {
        manifest["verified"] = false;
        manifest["error"] = e.what();
        manifest["components"] = nlohmann::json::array();
        write_text_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
        throw;
      }
    } else if (*check_cmd) {
      const DiagramFamily family = read_family(check_in);
      bool all_connected = true;
      for (std::size_t i = 0; i < family.size(); ++i) {
        const bool generic = is_generic(family[i]);
        const bool connected = is_connected(family[i]);
        const bool crossing = generic && has_connected_bipartite_graph(family[i]);
        all_connected = all_connected && connected && crossing;
        out << check_in[i] << ": points=" << family[i].size() << " generic=" << (generic ? "yes" : "no")
            << " connected=" << (connected ? "yes" : "no")
            << " bipartite-connected=" << (generic ? (crossing ? "yes" : "no") : "n/a") << '\n';
      }
      const auto report = check_arithmetic_independence(family);
      if (report) {
        out << "arithmetically independent: yes\n";
      } else {
        out << "arithmetically independent: no (condition " << report.condition << "): " << report.message << '\n';
      }
      if (!report || !all_connected) return kPreconditionViolated;
    } else if (*gen_counter) {
      const auto [d1, d2] = counterexample_pair(counter_n);
      write_text_file(prefix + "_1.dgm", serialize(d1));
      write_text_file(prefix + "_2.dgm", serialize(d2));
    } else if (*gen_random) {
      emit(output,
           serialize(random_diagram(count, option_rational(lo_text, "--lo"), option_rational(hi_text, "--hi"), seed)),
           out);
    } else if (*gen_family) {
      fs::create_directories(out_dir);
      const auto family = random_independent_family(family_n, count, seed);
      for (std::size_t i = 0; i < family.size(); ++i) {
        write_text_file(fs::path(out_dir) / ("family_" + std::to_string(i + 1) + ".dgm"), serialize(family[i]));
      }
    } else if (*grid_landscape) {
      std::ostringstream csv;
      write_csv(csv,
                sample_grid(read_landscape_file(grid_in), kmax, option_rational(tmin_text, "--tmin"),
                            option_rational(tmax_text, "--tmax"), steps),
                exact);
      emit(output, csv.str(), out);
    } else if (*grid_tropical) {
      std::ostringstream csv;
      write_csv(csv,
                feature_grid(read_diagram_file(grid_in), big_k, option_rational(a_text, "--a"),
                             option_rational(eps_text, "--eps"), m),
                exact);
      emit(output, csv.str(), out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPreconditionViolated;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const fs::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  }
  return kSuccess;
}

}  // namespace plscape::cli
