#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "trochoid/render.hpp"
#include "trochoid/serialize.hpp"
#include "trochoid/server.hpp"
#include "trochoid/trace.hpp"
#include "trochoid/verify.hpp"

namespace trochoid::cli {

namespace {

struct RigFlags {
  std::string a;
  std::string b;
  std::string omega_table;
  std::string omega_pen;
  std::string polarization = "anti";
  double phase_table = 0.0;
  double phase_pen = 0.0;

  void attach(CLI::App& cmd, bool required) {
    auto* a_opt = cmd.add_option("--a", a, "center distance between tablet axes (cm)");
    auto* b_opt = cmd.add_option("--b", b, "pen distance from the tablet-2 axis (cm)");
    auto* big = cmd.add_option("--omega-table", omega_table, "turntable frequency, integer or p/q");
    auto* small = cmd.add_option("--omega-pen", omega_pen, "tablet-2 frequency, integer or p/q");
    if (required) {
      for (auto* opt : {a_opt, b_opt, big, small}) opt->required();
    }
    cmd.add_option("--polarization", polarization, "co or anti")
        ->check(CLI::IsMember({"co", "anti"}))
        ->capture_default_str();
    cmd.add_option("--phase-table", phase_table, "initial turntable angle (rad)")->capture_default_str();
    cmd.add_option("--phase-pen", phase_pen, "initial tablet-2 angle (rad)")->capture_default_str();
  }

  Rig build() const {
    Rig rig;
    rig.a = Rational::parse(a);
    rig.b = Rational::parse(b);
    rig.big_omega = Frequency::parse(omega_table);
    rig.small_omega = Frequency::parse(omega_pen);
    rig.polarization = parse_polarization(polarization);
    rig.phase_table = phase_table;
    rig.phase_pen = phase_pen;
    validate(rig);
    return rig;
  }
};

struct OutputFlags {
  std::string out;
  std::string format = "svg";
  std::size_t samples = kDefaultSamplesPerClosure;

  void attach(CLI::App& cmd) {
    cmd.add_option("--out", out, "output file (stdout when omitted)");
    cmd.add_option("--format", format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}))->capture_default_str();
    cmd.add_option("--samples", samples, "samples per closure period")->capture_default_str();
  }
};

// A usage-level problem found after parsing (bad fraction, bad rig).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << content;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_file(path, content);
  }
}

// CSV plus a metadata sidecar next to it.
void write_csv(const Trace& trace, const std::string& path, std::ostream& out) {
  emit(to_csv(trace), path, out);
  if (!path.empty()) write_file(path + ".json", trace_metadata(trace).dump(2) + "\n");
}

std::vector<Rational> parse_steps(const std::string& text) {
  std::vector<Rational> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    steps.push_back(Rational::parse(item));
  }
  if (steps.empty()) throw UsageError("--steps needs at least one value");
  return steps;
}

std::string numbered_path(const std::string& path, std::size_t index) {
  std::filesystem::path p(path);
  std::string stem = p.stem().string() + "_" + std::to_string(index);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

void print_verify_table(const std::vector<SuiteResult>& results, std::ostream& out) {
  out << std::left << std::setw(20) << "suite" << std::setw(8) << "result" << std::setw(9) << "cases"
      << std::setw(14) << "worst" << "tolerance\n";
  for (const auto& r : results) {
    std::ostringstream worst;
    worst << std::scientific << std::setprecision(3) << r.worst;
    std::ostringstream tol;
    if (r.tolerance > 0.0) {
      tol << std::scientific << std::setprecision(0) << r.tolerance;
    } else {
      tol << "exact";
    }
    out << std::left << std::setw(20) << r.name << std::setw(8) << (r.passed ? "PASS" : "FAIL") << std::setw(9)
        << r.cases << std::setw(14) << worst.str() << tol.str() << "\n";
    if (!r.passed) out << "  first failure: " << r.detail << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"trochoid-mill: two-tablet trochoid machine simulator", "trochoid-mill"};
  app.require_subcommand(1, 1);

  RigFlags rig_flags;
  OutputFlags output;
  std::string frame = "table";

  auto* plot = app.add_subcommand("plot", "sample one closure of a rig and write SVG or CSV");
  rig_flags.attach(*plot, true);
  output.attach(*plot);
  plot->add_option("--frame", frame, "table or lab")->check(CLI::IsMember({"table", "lab"}))->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "print the curve class of a rig as JSON");
  RigFlags classify_flags;
  classify_flags.attach(*classify_cmd, true);

  std::uint64_t seed = 42;
  std::vector<std::string> suites;
  auto* verify_cmd = app.add_subcommand("verify", "run the randomized property suites");
  verify_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--suite", suites, "suite name (repeatable); all when omitted")
      ->check(CLI::IsMember(suite_names()));

  RigFlags family_flags;
  OutputFlags family_output;
  std::string method = "stcp";
  std::string steps_text;
  std::string family_frame = "table";
  auto* family = app.add_subcommand("family", "sweep a sliding perturbation over several steps");
  family_flags.attach(*family, true);
  family_output.attach(*family);
  family->add_option("--method", method, "stcp or stcf")->check(CLI::IsMember({"stcp", "stcf"}))->capture_default_str();
  family->add_option("--steps", steps_text, "comma-separated signed Δa or ΔΩ values")->required();
  family->add_option("--frame", family_frame, "table or lab")->check(CLI::IsMember({"table", "lab"}))->capture_default_str();

  std::string lin_r;
  std::string lin_big_r;
  std::string lin_omega = "1";
  double t_end = 4.0 * std::numbers::pi;
  std::string lin_out;
  std::string lin_format = "svg";
  std::size_t lin_samples = 2048;
  auto* linear = app.add_subcommand("linear", "drive the straight-line rig");
  linear->add_option("--r", lin_r, "gear radius (cm)")->required();
  linear->add_option("--R", lin_big_r, "pen radius (cm)")->required();
  linear->add_option("--omega", lin_omega, "angular frequency, integer or p/q")->capture_default_str();
  linear->add_option("--t-end", t_end, "end time (s)")->capture_default_str();
  linear->add_option("--samples", lin_samples, "number of samples")->capture_default_str();
  linear->add_option("--out", lin_out, "output file (stdout when omitted)");
  linear->add_option("--format", lin_format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}))->capture_default_str();

  RigFlags serve_flags{"12", "2", "3", "15"};
  unsigned short port = kDefaultPort;
  double tick_rate = kDefaultTickRate;
  std::string address = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "start the live control service");
  serve_flags.attach(*serve, false);
  serve->add_option("--port", port, "listen port")->capture_default_str();
  serve->add_option("--address", address, "listen address")->capture_default_str();
  serve->add_option("--tick-rate", tick_rate, "simulated ticks per second")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (plot->parsed()) {
      const Rig rig = [&] {
        try {
          return rig_flags.build();
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      const Trace trace = sample_trace(rig, parse_frame(frame), output.samples);
      if (output.format == "csv") {
        write_csv(trace, output.out, out);
      } else {
        const std::vector<Trace> traces{trace};
        emit(to_svg(traces), output.out, out);
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      Rig rig;
      try {
        rig = classify_flags.build();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      out << to_json(classify(rig)).dump() << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<SuiteResult> results;
      if (suites.empty()) {
        results = run_all_suites(seed);
      } else {
        for (const auto& name : suites) results.push_back(run_suite(name, seed));
      }
      print_verify_table(results, out);
      const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      return all ? 0 : 1;
    }

    if (family->parsed()) {
      FamilySpec spec;
      try {
        spec.base = family_flags.build();
        spec.steps = parse_steps(steps_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      spec.method = parse_slide_method(method);
      const auto traces = sweep_family(spec, parse_frame(family_frame), family_output.samples);
      if (family_output.format == "csv") {
        if (family_output.out.empty()) throw UsageError("family --format csv needs --out");
        for (std::size_t i = 0; i < traces.size(); ++i) write_csv(traces[i], numbered_path(family_output.out, i), out);
      } else {
        emit(to_svg(traces), family_output.out, out);
      }
      if (!family_output.out.empty()) {
        Json summary = Json::array();
        for (std::size_t i = 0; i < traces.size(); ++i) {
          const Rig& rig = std::get<Rig>(traces[i].rig);
          summary.push_back(Json{{"step", spec.steps[i].to_string()}, {"rig", to_json(rig)}, {"class", to_json(classify(rig))}});
        }
        out << summary.dump() << "\n";
      }
      return 0;
    }

    if (linear->parsed()) {
      LinearRig rig;
      try {
        rig = LinearRig{Rational::parse(lin_r), Rational::parse(lin_big_r), Frequency::parse(lin_omega)};
        validate(rig);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const Trace trace = sample_linear(rig, t_end, lin_samples);
      if (lin_format == "csv") {
        write_csv(trace, lin_out, out);
      } else {
        const std::vector<Trace> traces{trace};
        emit(to_svg(traces), lin_out, out);
      }
      if (!lin_out.empty()) {
        Json summary{{"class", to_string(classify_linear(rig))}};
        if (!rig.r.is_zero()) summary["slide_fraction"] = linear_slide_fraction(rig).to_string();
        out << summary.dump() << "\n";
      }
      return 0;
    }

    if (serve->parsed()) {
      ServerOptions options;
      try {
        options.rig = serve_flags.build();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      options.port = port;
      options.address = address;
      options.tick_rate = tick_rate;
      ControlServer server(options);
      server.run();
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace trochoid::cli
