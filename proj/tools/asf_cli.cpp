// Command-line front end for the approximate-Schauder-frame toolkit: load or
// generate functional systems, classify them, expand or complete them to
// (lambda-)tight systems, verify reconstruction, and run seeded randomized
// sweeps against planted ground truth. Reports are byte-deterministic JSON
// (CSV for sweeps on request).

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "asf/asf.hpp"

namespace {

using namespace asf;
using C = std::complex<double>;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

/// Anything wrong with what the user handed us: unknown generator, bad
/// scalar syntax, unreadable file. Mapped to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "example1";
  std::string kind = "example1";
  std::size_t d = 4;
  std::string p_text = "2";
  std::string scalar_text = "real";
  std::string lambda_text = "1";
  std::string variant_text = "A";
  std::string swept = "complete";
  std::uint64_t seed = 1;
  std::size_t trials = 50;
  std::size_t nsys = 0;  // 0 means "pick 2d"
  std::size_t deficiency_rank = 0;
  bool deficiency_given = false;
  std::size_t dmax = 12;
  std::string output;
  std::string format = "json";
  bool prune = true;
  bool kahan = false;
  bool probe = false;
  Tolerances tol;
};

// ============================================================================
// Small parsers
// ============================================================================

std::string strip_spaces(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  return s;
}

Exponent parse_exponent(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity") {
    return Exponent::infinity();
  }
  const char* c = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(c, &end);
  if (end == c || *end != '\0') {
    throw InputError("exponent must be a number >= 1 or \"inf\": got \"" + text + "\"");
  }
  return Exponent(v);
}

/// Scalar syntax: "2", "-0.5", "0.5+0.5i", "1-2i", "3i", "i", "-i".
C parse_scalar(const std::string& text) {
  const std::string s = strip_spaces(text);
  const auto fail = [&]() -> C {
    throw InputError("cannot parse scalar \"" + text + "\" (expected forms: 2, -0.5, 0.5+0.5i, 3i)");
  };
  if (s.empty()) return fail();
  if (s == "i" || s == "+i") return C(0.0, 1.0);
  if (s == "-i") return C(0.0, -1.0);

  const char* c = s.c_str();
  char* end = nullptr;
  const double first = std::strtod(c, &end);
  if (end == c) return fail();
  if (*end == '\0') return C(first, 0.0);
  if (*end == 'i' && *(end + 1) == '\0') return C(0.0, first);

  if (*end != '+' && *end != '-') return fail();
  const std::string rest(end);
  if (rest == "+i") return C(first, 1.0);
  if (rest == "-i") return C(first, -1.0);

  char* end2 = nullptr;
  const double second = std::strtod(end, &end2);
  if (end2 == end) return fail();
  if (*end2 == 'i' && *(end2 + 1) == '\0') return C(first, second);
  return fail();
}

template <Scalar T>
T to_field_scalar(const C& z) {
  if constexpr (is_complex_v<T>) {
    return T(z.real(), z.imag());
  } else {
    if (z.imag() != 0.0) {
      throw InputError("a complex lambda needs a complex system (--scalar complex or a complex input file)");
    }
    return T(z.real());
  }
}

/// FRAMES_DEFAULT_TOL="rank=1e-10,invert=1e-12,residual=1e-8" replaces the
/// built-in defaults; explicit flags still win.
void apply_env_tolerances(Tolerances& tol) {
  const char* env = std::getenv("FRAMES_DEFAULT_TOL");
  if (env == nullptr) return;
  std::stringstream ss{std::string(env)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw InputError("FRAMES_DEFAULT_TOL entries must look like key=value: \"" + item + "\"");
    }
    const std::string key = strip_spaces(item.substr(0, eq));
    const std::string val = strip_spaces(item.substr(eq + 1));
    const char* c = val.c_str();
    char* end = nullptr;
    const double v = std::strtod(c, &end);
    if (end == c || *end != '\0') {
      throw InputError("FRAMES_DEFAULT_TOL value for \"" + key + "\" is not a number: \"" + val + "\"");
    }
    if (key == "rank") {
      tol.rank_tol = v;
    } else if (key == "invert") {
      tol.invert_tol = v;
    } else if (key == "residual") {
      tol.residual_tol = v;
    } else {
      throw InputError("FRAMES_DEFAULT_TOL keys are rank, invert, residual; got \"" + key + "\"");
    }
  }
  tol.validate();
}

// ============================================================================
// Input resolution
// ============================================================================

bool is_generator_name(const std::string& s) {
  return s == "example1" || s == "canonical" || s == "random";
}

io::ScalarKind requested_field(const Options& o, std::optional<json>& parsed) {
  if (is_generator_name(o.input)) {
    if (o.scalar_text == "real") return io::ScalarKind::real_field;
    if (o.scalar_text == "complex") return io::ScalarKind::complex_field;
    throw InputError("--scalar must be real or complex, got \"" + o.scalar_text + "\"");
  }
  std::ifstream in(o.input, std::ios::binary);
  if (!in) {
    throw InputError("cannot read input \"" + o.input +
                     "\" (not a file, and not one of example1, canonical, random)");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  parsed = json::parse(buf.str());  // throws with line/column diagnostics
  return io::scalar_kind_of(*parsed);
}

template <Scalar T>
FunctionalSystem<T> resolve_system(const Options& o,
                                   const std::optional<json>& parsed) {
  if (parsed.has_value()) return io::system_from_json<T>(*parsed);
  const Exponent p = parse_exponent(o.p_text);
  if (o.input == "example1") return example_one_system<T>(o.d, p);
  if (o.input == "canonical") return canonical_system<T>(o.d, p);
  // "random": plain uniform pairs, or a planted-deficiency system when
  // --deficiency-rank is given.
  const std::size_t n = o.nsys > 0 ? o.nsys : 2 * o.d;
  if (o.deficiency_given) {
    const T lambda = to_field_scalar<T>(parse_scalar(o.lambda_text));
    // Generator plumbing runs at default tolerances; the --*-tol flags govern
    // the requested operation, not the construction of its input.
    return deficiency_system<T>(o.d, n, p, o.deficiency_rank, lambda, o.seed,
                                Tolerances{});
  }
  return random_system<T>(o.d, n, p, o.seed);
}

// ============================================================================
// Report plumbing
// ============================================================================

void emit(const Options& o, const std::string& body) {
  if (o.output.empty()) {
    std::cout << body << '\n';
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError("cannot write output file \"" + o.output + "\"");
  out << body << '\n';
}

template <Scalar T>
void write_head(io::JsonBuilder& b, const char* command,
                const FunctionalSystem<T>& sys) {
  b.key("command").value_string(command);
  b.key("dim").value_uint(sys.dim());
  b.key("p");
  io::write_exponent(b, sys.exponent());
  b.key("scalar").value_string(is_complex_v<T> ? "complex" : "real");
  b.key("n_pairs").value_uint(sys.size());
}

void require_json_format(const Options& o) {
  if (o.format != "json") {
    throw InputError("--format csv is available for sweep reports only");
  }
}

// ============================================================================
// Commands
// ============================================================================

template <Scalar T>
int run_classify(const FunctionalSystem<T>& sys, const Options& o) {
  require_json_format(o);
  const Classification<T> cls = classify(sys, o.tol);

  io::JsonBuilder b;
  b.begin_object();
  write_head(b, "classify", sys);
  b.key("bessel_bound").value_real(cls.bessel_bound);
  b.key("bessel_is_estimate").value_bool(cls.bessel_is_estimate);
  b.key("is_asf").value_bool(cls.is_asf);
  b.key("tight_lambda");
  if (cls.tight_lambda.has_value()) {
    io::write_scalar(b, *cls.tight_lambda);
  } else {
    b.value_null();
  }
  b.key("condition_estimate").value_real(cls.condition_estimate);
  b.end_object();
  emit(o, b.str());
  return kExitOk;
}

ExpansionVariant parse_variant(const std::string& text) {
  std::string v = text;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (v == "A") return ExpansionVariant::A;
  if (v == "B") return ExpansionVariant::B;
  if (v == "TIGHT") return ExpansionVariant::tight;
  throw InputError("--variant must be A, B, or TIGHT, got \"" + text + "\"");
}

template <Scalar T>
ExpansionResult<T> run_variant(const FunctionalSystem<T>& sys,
                               ExpansionVariant variant, T lambda,
                               const Options& o) {
  const ReconstructionSystem<T> recon =
      canonical_reconstruction<T>(sys.dim(), sys.exponent(), o.tol);
  const ExpansionOptions eo{o.prune, o.kahan};
  switch (variant) {
    case ExpansionVariant::A:
      return expand_variant_a(sys, recon, o.tol, eo);
    case ExpansionVariant::B:
      return expand_variant_b(sys, recon, o.tol, eo);
    default:
      return expand_tight(sys, recon, lambda, o.tol, eo);
  }
}

template <Scalar T>
int run_expand(const FunctionalSystem<T>& sys, const Options& o) {
  require_json_format(o);
  if (o.probe) {
    const ExpansionOptions eo{o.prune, o.kahan};
    const PSpaceCertificate<T> cert = p_asf_expansion(sys, o.tol, eo);
    io::JsonBuilder b;
    b.begin_object();
    write_head(b, "probe", sys);
    b.key("analysis_norm").value_real(cert.analysis_norm);
    b.key("synthesis_norm").value_real(cert.synthesis_norm);
    b.key("norms_are_estimates").value_bool(cert.norms_are_estimates);
    b.key("factorization_residual").value_real(cert.factorization_residual);
    b.key("certified").value_bool(cert.certified);
    b.key("expansion").value_raw(io::expansion_to_json(cert.expansion));
    b.end_object();
    emit(o, b.str());
    return cert.certified ? kExitOk : kExitVerification;
  }

  const ExpansionVariant variant = parse_variant(o.variant_text);
  const T lambda = to_field_scalar<T>(parse_scalar(o.lambda_text));
  const ExpansionResult<T> result = run_variant(sys, variant, lambda, o);
  emit(o, io::expansion_to_json(result));
  return result.residual <= o.tol.residual_tol ? kExitOk : kExitVerification;
}

template <Scalar T>
int run_complete(const FunctionalSystem<T>& sys, const Options& o) {
  require_json_format(o);
  const T lambda = to_field_scalar<T>(parse_scalar(o.lambda_text));
  const ExpansionOptions eo{o.prune, o.kahan};
  const ExpansionResult<T> result = minimal_tight_completion(sys, lambda, o.tol, eo);
  emit(o, io::expansion_to_json(result));
  return result.residual <= o.tol.residual_tol ? kExitOk : kExitVerification;
}

template <Scalar T>
int run_bound(const FunctionalSystem<T>& sys, const Options& o) {
  require_json_format(o);
  const T lambda = to_field_scalar<T>(parse_scalar(o.lambda_text));
  const std::size_t bound = completion_lower_bound(sys, lambda, o.tol);

  io::JsonBuilder b;
  b.begin_object();
  write_head(b, "bound", sys);
  b.key("lambda");
  io::write_scalar(b, lambda);
  b.key("bound").value_uint(bound);
  b.end_object();
  emit(o, b.str());
  return kExitOk;
}

template <Scalar T>
int run_verify(const FunctionalSystem<T>& sys, const Options& o) {
  require_json_format(o);
  io::JsonBuilder b;
  b.begin_object();
  write_head(b, "verify", sys);
  b.key("trials").value_uint(o.trials);
  b.key("seed").value_uint(o.seed);
  try {
    const ReconstructionReport rep =
        verify_reconstruction(sys, o.trials, o.seed, o.tol);
    b.key("max_assembly_residual").value_real(rep.max_assembly_residual);
    b.key("max_reconstruction_residual").value_real(rep.max_reconstruction_residual);
    b.key("passed").value_bool(rep.passed);
    b.end_object();
    emit(o, b.str());
    return rep.passed ? kExitOk : kExitVerification;
  } catch (const NotAnASF& e) {
    b.key("passed").value_bool(false);
    b.key("error").value_string(e.what());
    b.end_object();
    emit(o, b.str());
    return kExitVerification;
  }
}

template <Scalar T>
int run_example(const Options& o) {
  require_json_format(o);
  std::optional<json> none;
  const FunctionalSystem<T> sys = resolve_system<T>(o, none);
  emit(o, io::system_to_json(sys));
  return kExitOk;
}

// ============================================================================
// Sweep
// ============================================================================

struct SweepRow {
  std::uint64_t seed = 0;
  std::size_t d = 0;
  std::size_t n_sys = 0;
  std::size_t deficiency_rank = 0;
  std::size_t bound = 0;
  std::size_t count_added = 0;
  double residual = 0.0;
  bool tight_ok = false;
};

template <Scalar T>
int run_sweep(const Options& o) {
  if (o.format != "json" && o.format != "csv") {
    throw InputError("--format must be json or csv");
  }
  if (o.trials < 1) throw InputError("--trials must be >= 1");
  if (o.dmax < 2) throw InputError("--dmax must be >= 2");
  if (o.swept != "complete" && o.swept != "expand") {
    throw InputError("--command must be complete or expand, got \"" + o.swept + "\"");
  }

  const Exponent p = parse_exponent(o.p_text);
  const T lambda = to_field_scalar<T>(parse_scalar(o.lambda_text));
  const ExpansionVariant variant = parse_variant(o.variant_text);
  // Variants A and B aim at the identity; complete and TIGHT aim at lambda I.
  const T tight_target = (o.swept == "expand" && variant != ExpansionVariant::tight)
                             ? T(1)
                             : lambda;
  const ExpansionOptions eo{o.prune, o.kahan};

  std::vector<SweepRow> rows;
  rows.reserve(o.trials);
  std::size_t violations = 0;
  std::size_t attained = 0;
  double min_res = 0.0, max_res = 0.0, sum_res = 0.0;

  for (std::size_t t = 0; t < o.trials; ++t) {
    SweepRow row;
    row.seed = o.seed + t;

    // Trial geometry from a dedicated stream so it never collides with the
    // streams the generators consume.
    SeededRng dims(row.seed, 0xC11);
    row.d = 2 + std::size_t(dims.next_u64() % (o.dmax - 1));
    const std::size_t rank_cap = std::min<std::size_t>(row.d, 6);
    row.deficiency_rank = std::size_t(dims.next_u64() % (rank_cap + 1));
    row.n_sys = row.d + std::size_t(dims.next_u64() % (row.d + 1));

    // As in resolve_system: the planted input is generator plumbing and is
    // built at default tolerances.
    const FunctionalSystem<T> sys = deficiency_system<T>(
        row.d, row.n_sys, p, row.deficiency_rank, lambda, row.seed, Tolerances{});
    row.bound = completion_lower_bound(sys, tight_target, o.tol);

    const ExpansionResult<T> result =
        o.swept == "complete"
            ? minimal_tight_completion(sys, lambda, o.tol, eo)
            : run_variant(sys, variant, lambda, o);
    row.count_added = result.count_added;
    row.residual = result.residual;

    const Classification<T> cls = classify(result.expanded, o.tol);
    row.tight_ok = cls.tight_lambda.has_value() &&
                   double(abs_of(*cls.tight_lambda - tight_target)) <= 1e-9;

    if (row.count_added < row.bound || row.residual > o.tol.residual_tol ||
        !row.tight_ok) {
      ++violations;
    }
    if (row.count_added == row.bound) ++attained;
    if (t == 0 || row.residual < min_res) min_res = row.residual;
    if (t == 0 || row.residual > max_res) max_res = row.residual;
    sum_res += row.residual;
    rows.push_back(row);
  }

  const double mean_res = sum_res / double(o.trials);
  const double fraction = double(attained) / double(o.trials);

  if (o.format == "csv") {
    std::string csv;
    csv += "seed,d,n_sys,deficiency_rank,bound,count_added,residual,tight_ok\n";
    for (const SweepRow& r : rows) {
      csv += std::to_string(r.seed) + ',' + std::to_string(r.d) + ',' +
             std::to_string(r.n_sys) + ',' + std::to_string(r.deficiency_rank) +
             ',' + std::to_string(r.bound) + ',' + std::to_string(r.count_added) +
             ',' + io::format_real(r.residual) + ',' +
             (r.tight_ok ? "true" : "false") + '\n';
    }
    csv += "# aggregate min_residual=" + io::format_real(min_res) +
           " max_residual=" + io::format_real(max_res) +
           " mean_residual=" + io::format_real(mean_res) +
           " fraction_attained=" + io::format_real(fraction);
    emit(o, csv);
  } else {
    io::JsonBuilder b;
    b.begin_object();
    b.key("command").value_string("sweep");
    b.key("swept").value_string(o.swept);
    b.key("variant").value_string(to_string(variant));
    b.key("trials").value_uint(o.trials);
    b.key("seed").value_uint(o.seed);
    b.key("dmax").value_uint(o.dmax);
    b.key("p");
    io::write_exponent(b, p);
    b.key("scalar").value_string(is_complex_v<T> ? "complex" : "real");
    b.key("lambda");
    io::write_scalar(b, lambda);
    b.key("rows").begin_array();
    for (const SweepRow& r : rows) {
      b.begin_object();
      b.key("seed").value_uint(r.seed);
      b.key("d").value_uint(r.d);
      b.key("n_sys").value_uint(r.n_sys);
      b.key("deficiency_rank").value_uint(r.deficiency_rank);
      b.key("bound").value_uint(r.bound);
      b.key("count_added").value_uint(r.count_added);
      b.key("residual").value_real(r.residual);
      b.key("tight_ok").value_bool(r.tight_ok);
      b.end_object();
    }
    b.end_array();
    b.key("aggregate").begin_object();
    b.key("min_residual").value_real(min_res);
    b.key("max_residual").value_real(max_res);
    b.key("mean_residual").value_real(mean_res);
    b.key("fraction_attained").value_real(fraction);
    b.end_object();
    b.key("violations").value_uint(violations);
    b.end_object();
    emit(o, b.str());
  }
  return violations == 0 ? kExitOk : kExitVerification;
}

// ============================================================================
// Dispatch
// ============================================================================

template <Scalar T>
int dispatch(const std::string& cmd, const Options& o,
             const std::optional<json>& parsed) {
  if (cmd == "sweep") return run_sweep<T>(o);
  if (cmd == "example") return run_example<T>(o);
  const FunctionalSystem<T> sys = resolve_system<T>(o, parsed);
  if (cmd == "classify") return run_classify(sys, o);
  if (cmd == "expand") return run_expand(sys, o);
  if (cmd == "complete") return run_complete(sys, o);
  if (cmd == "bound") return run_bound(sys, o);
  if (cmd == "verify") return run_verify(sys, o);
  throw InputError("unknown command: " + cmd);
}

const char* kFooter = R"(Generators (for --input or example --kind):
  example1   shift-built system with frame operator diag(0,1,...,1) (--d, --p)
  canonical  coordinate functionals paired with basis vectors (--d, --p)
  random     uniform [-1,1) pairs (--d, --nsys, --seed); with --deficiency-rank r
             it plants a system whose frame operator is lambda I minus a rank-r
             perturbation, so completion counts have a known ground truth

Scalars: --lambda accepts 2, -0.5, 0.5+0.5i, 3i, i. Complex values need
--scalar complex (or a complex input file).

Environment: FRAMES_DEFAULT_TOL="rank=1e-10,invert=1e-12,residual=1e-8"
replaces the default tolerances; explicit flags still win.

Sweep CSV columns: seed,d,n_sys,deficiency_rank,bound,count_added,residual,
tight_ok; one row per trial, ordered by trial index, followed by a trailer
line "# aggregate min_residual=... max_residual=... mean_residual=...
fraction_attained=...". fraction_attained is the fraction of rows with
count_added == bound (1 whenever complete is swept). JSON reports mirror the
same fields and are the canonical format.

Exit codes: 0 success; 1 verification failure (reconstruction check failed,
residual above --residual-tol, sweep row violated a bound or tightness
check, or an uncertified probe); 2 input or usage error.)";

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    apply_env_tolerances(o.tol);
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }

  CLI::App app{"Approximate Schauder frames on finite-dimensional l^p spaces:\n"
               "classify systems, expand or complete them to (lambda-)tight\n"
               "ones, verify reconstruction, and sweep randomized trials."};
  app.footer(kFooter);
  app.require_subcommand(1);

  const auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--input", o.input,
                      "Input system: a JSON file path, or a generator name "
                      "(example1, canonical, random)")
          ->capture_default_str();
    }
    sub->add_option("--d", o.d, "Dimension for generated systems")
        ->capture_default_str();
    sub->add_option("--p", o.p_text, "Exponent: a number >= 1 or inf")
        ->capture_default_str();
    sub->add_option("--scalar", o.scalar_text,
                    "Scalar field for generated systems: real or complex")
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "Seed for generators and trials")
        ->capture_default_str();
    sub->add_option("--nsys", o.nsys,
                    "Pair count for random generators (0 picks 2*d)")
        ->capture_default_str();
    sub->add_option("--deficiency-rank", o.deficiency_rank,
                    "Plant this deficiency rank in the random generator");
    sub->add_option("--rank-tol", o.tol.rank_tol, "Relative rank threshold")
        ->capture_default_str();
    sub->add_option("--invert-tol", o.tol.invert_tol,
                    "Reciprocal condition floor for inversion")
        ->capture_default_str();
    sub->add_option("--residual-tol", o.tol.residual_tol,
                    "Residual ceiling for verification and tightness")
        ->capture_default_str();
    sub->add_option("--output", o.output, "Report file (default: stdout)");
    sub->add_option("--format", o.format, "Report format: json or csv (sweep)")
        ->capture_default_str();
  };
  const auto add_expansion_knobs = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda_text,
                    "Tightness scalar (see footer for syntax)")
        ->capture_default_str();
    sub->add_flag("--prune,!--no-prune", o.prune,
                  "Drop numerically zero added pairs (default on)");
    sub->add_flag("--kahan", o.kahan, "Compensated frame-operator assembly");
  };

  CLI::App* cmd_classify = app.add_subcommand(
      "classify", "Report Bessel bound, invertibility, conditioning, and tightness");
  add_io(cmd_classify, true);

  CLI::App* cmd_expand = app.add_subcommand(
      "expand", "Append deflected pairs so the frame operator becomes I (or lambda I)");
  add_io(cmd_expand, true);
  add_expansion_knobs(cmd_expand);
  cmd_expand->add_option("--variant", o.variant_text,
                         "Expansion construction: A, B, or TIGHT")
      ->capture_default_str();
  cmd_expand->add_flag("--probe", o.probe,
                       "Run the certified p-space expansion instead and report "
                       "analysis/synthesis norms with the factorization residual");

  CLI::App* cmd_complete = app.add_subcommand(
      "complete", "Append the fewest pairs that make the system lambda-tight");
  add_io(cmd_complete, true);
  add_expansion_knobs(cmd_complete);

  CLI::App* cmd_bound = app.add_subcommand(
      "bound", "Report the least number of pairs any lambda-tight expansion adds");
  add_io(cmd_bound, true);
  cmd_bound->add_option("--lambda", o.lambda_text, "Tightness scalar")
      ->capture_default_str();

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Monte Carlo reconstruction check through the inverted frame operator");
  add_io(cmd_verify, true);
  cmd_verify->add_option("--trials", o.trials, "Number of trial vectors")
      ->capture_default_str();

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Seeded randomized trials of complete or expand on planted systems");
  add_io(cmd_sweep, false);
  add_expansion_knobs(cmd_sweep);
  cmd_sweep->add_option("--command", o.swept, "Swept operation: complete or expand")
      ->capture_default_str();
  cmd_sweep->add_option("--variant", o.variant_text,
                        "Expansion construction when sweeping expand")
      ->capture_default_str();
  cmd_sweep->add_option("--trials", o.trials, "Number of trials")
      ->capture_default_str();
  cmd_sweep->add_option("--dmax", o.dmax, "Largest trial dimension (>= 2)")
      ->capture_default_str();

  CLI::App* cmd_example = app.add_subcommand(
      "example", "Emit a generator system as canonical JSON");
  add_io(cmd_example, false);
  cmd_example->add_option("--kind", o.kind,
                          "Generator: example1, canonical, or random")
      ->capture_default_str();
  cmd_example->add_option("--lambda", o.lambda_text,
                          "Tightness scalar for the deficiency generator")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    o.tol.validate();
    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    o.deficiency_given = sub->count("--deficiency-rank") > 0;
    if (cmd == "example") o.input = o.kind;

    std::optional<json> parsed;
    const bool needs_input =
        cmd != "sweep" && cmd != "example";
    io::ScalarKind kind = io::ScalarKind::real_field;
    if (needs_input) {
      kind = requested_field(o, parsed);
    } else {
      if (o.scalar_text == "real") {
        kind = io::ScalarKind::real_field;
      } else if (o.scalar_text == "complex") {
        kind = io::ScalarKind::complex_field;
      } else {
        throw InputError("--scalar must be real or complex, got \"" + o.scalar_text + "\"");
      }
    }
    return kind == io::ScalarKind::real_field
               ? dispatch<double>(cmd, o, parsed)
               : dispatch<C>(cmd, o, parsed);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
