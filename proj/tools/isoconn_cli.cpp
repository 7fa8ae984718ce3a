// isoconn command-line front end. Everything goes through the C API in
// libisoconn; this file only handles arguments, files and output formats.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "isoconn/isoconn.h"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 1729;

struct Failure {
  int exit_code;
  std::string kind;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) { throw Failure{kExitUsage, "UsageError", message}; }

void check(ic_status status) {
  if (status == IC_OK) return;
  const int code = status == IC_ERR_PARSE ? kExitUsage : kExitDomain;
  throw Failure{code, ic_status_name(status), ic_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using MatrixPtr = std::unique_ptr<ic_matrix, Deleter<ic_matrix, ic_matrix_destroy>>;
using ConfigPtr = std::unique_ptr<ic_config, Deleter<ic_config, ic_config_destroy>>;
using SpectrumPtr = std::unique_ptr<ic_spectrum, Deleter<ic_spectrum, ic_spectrum_destroy>>;
using ReportPtr = std::unique_ptr<ic_report, Deleter<ic_report, ic_report_destroy>>;
using FamilyPtr = std::unique_ptr<ic_family, Deleter<ic_family, ic_family_destroy>>;
using MovesPtr = std::unique_ptr<ic_moves, Deleter<ic_moves, ic_moves_destroy>>;
using PathPtr = std::unique_ptr<ic_path, Deleter<ic_path, ic_path_destroy>>;
using IntegrationPtr = std::unique_ptr<ic_integration, Deleter<ic_integration, ic_integration_destroy>>;
using ZonePtr = std::unique_ptr<ic_zone, Deleter<ic_zone, ic_zone_destroy>>;

// Takes ownership of a C string produced by the library.
std::string take(char* s) {
  std::string out(s);
  ic_string_free(s);
  return out;
}

Json take_json(char* s) { return Json::parse(take(s)); }

struct Options {
  std::string input;
  std::vector<std::string> matrices;
  std::string output;
  std::string format = "json";
  std::optional<double> tol;
  std::uint64_t seed = kDefaultSeed;
  std::string precision = "4";

  // subcommand specific
  bool enumerate = false;
  std::size_t limit = 0;
  bool no_dedupe = false;
  std::string perm;
  std::string transform;
  std::optional<double> theta;
  std::string mobile;
  std::string path;
  std::string grid;
  std::optional<double> target;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::size_t scan = 0;

  ic_precision prec() const { return precision == "full" ? IC_PRECISION_FULL : IC_PRECISION_DISPLAY; }
  double round(double v) const {
    if (precision == "full" || !std::isfinite(v)) return v;
    const double r = std::round(v * 1e4) / 1e4;
    return r == 0.0 ? 0.0 : r;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatrixPtr load_matrix(const std::string& path) {
  const std::string text = read_file(path);
  ic_matrix* m = nullptr;
  check(ic_matrix_from_json(text.c_str(), &m));
  return MatrixPtr(m);
}

ConfigPtr load_config(const std::string& path) {
  const std::string text = read_file(path);
  ic_config* c = nullptr;
  check(ic_config_from_json(text.c_str(), &c));
  return ConfigPtr(c);
}

MatrixPtr laplacian_of(const ic_config* c) {
  ic_matrix* m = nullptr;
  check(ic_config_laplacian(c, &m));
  return MatrixPtr(m);
}

std::size_t agent_index(const ic_config* c, const std::string& id) {
  if (id.empty()) usage_error("--mobile is required");
  std::size_t idx = 0;
  check(ic_config_index_of(c, id.c_str(), &idx));
  return idx;
}

std::vector<double> spectrum_values(const ic_spectrum* s) {
  std::vector<double> v(ic_spectrum_order(s));
  check(ic_spectrum_eigenvalues(s, v.data(), v.size()));
  return v;
}

// Either --matrix or --input (configuration) must name the Laplacian source.
MatrixPtr source_matrix(const Options& o) {
  if (!o.matrices.empty() && !o.input.empty()) usage_error("give either --matrix or --input, not both");
  if (!o.matrices.empty()) return load_matrix(o.matrices.front());
  if (!o.input.empty()) return laplacian_of(load_config(o.input).get());
  usage_error("--matrix or --input is required");
}

void write_output(const Options& o, const std::string& content) {
  if (o.output.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const fs::path target(o.output);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) usage_error("cannot write '" + o.output + "'");
    out << content;
    if (!out.flush()) {
      std::error_code ec;
      fs::remove(tmp, ec);
      usage_error("failed writing '" + o.output + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    usage_error("cannot move output into place at '" + o.output + "'");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_number(double v, const Options& o) {
  Json j = o.round(v);
  return j.dump();
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  usage_error("format '" + o.format + "' is not available for this subcommand");
}

std::vector<std::size_t> parse_perm(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      usage_error("--perm expects comma-separated 1-based indices, got '" + text + "'");
    }
  }
  return out;
}

ic_grid parse_grid(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_error("--grid expects x_min,x_max,y_min,y_max,nx,ny");
    }
  }
  if (v.size() != 6 || v[4] < 0 || v[5] < 0 || v[4] != std::floor(v[4]) || v[5] != std::floor(v[5]))
    usage_error("--grid expects x_min,x_max,y_min,y_max,nx,ny");
  return ic_grid{v[0], v[1], v[2], v[3], static_cast<std::size_t>(v[4]), static_cast<std::size_t>(v[5])};
}

// ---- subcommands

std::string cmd_spectrum(const Options& o) {
  require_format(o, {"json", "csv"});
  MatrixPtr m = source_matrix(o);
  ic_spectrum* raw = nullptr;
  check(ic_eigendecompose(m.get(), &raw));
  SpectrumPtr s(raw);
  if (o.format == "json") return dump(take_json([&] {
    char* out = nullptr;
    check(ic_spectrum_to_json(s.get(), o.prec(), &out));
    return out;
  }()));
  const std::vector<double> values = spectrum_values(s.get());
  std::string csv = "index,eigenvalue";
  for (std::size_t r = 0; r < values.size(); ++r) csv += ",v" + std::to_string(r + 1);
  csv += "\n";
  std::vector<double> vec(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    check(ic_spectrum_eigenvector(s.get(), i, vec.data(), vec.size()));
    csv += std::to_string(i + 1) + "," + csv_number(values[i], o);
    for (double x : vec) csv += "," + csv_number(x, o);
    csv += "\n";
  }
  return csv;
}

std::string cmd_connectivity(const Options& o) {
  require_format(o, {"json", "csv"});
  MatrixPtr m = source_matrix(o);
  ic_report* raw = nullptr;
  check(ic_algebraic_connectivity(m.get(), &raw));
  ReportPtr r(raw);
  if (o.format == "csv") {
    const std::size_t n = ic_report_order(r.get());
    std::vector<double> spec(n), fied(n);
    check(ic_report_spectrum(r.get(), spec.data(), n));
    check(ic_report_fiedler(r.get(), fied.data(), n));
    std::string csv = "index,eigenvalue,fiedler\n";
    for (std::size_t i = 0; i < n; ++i)
      csv += std::to_string(i + 1) + "," + csv_number(spec[i], o) + "," + csv_number(fied[i], o) + "\n";
    return csv;
  }
  char* out = nullptr;
  check(ic_report_to_json(r.get(), o.prec(), &out));
  Json j = take_json(out);
  if (!o.input.empty()) {
    ConfigPtr c = load_config(o.input);
    int connected = 0;
    check(ic_config_is_connected(c.get(), &connected));
    j["graph_connected"] = connected != 0;
  }
  return dump(j);
}

std::string cmd_isospectral(const Options& o) {
  require_format(o, {"json"});
  const double tol = o.tol.value_or(1e-9);
  if (o.enumerate) {
    if (o.matrices.size() > 1) usage_error("--enumerate takes a single base matrix");
    MatrixPtr base = source_matrix(o);
    const ic_family_options opts{o.limit, o.no_dedupe ? 0 : 1, 1, o.seed};
    ic_family* raw = nullptr;
    check(ic_permutation_family(base.get(), &opts, &raw));
    FamilyPtr f(raw);
    char* out = nullptr;
    check(ic_family_to_json(f.get(), o.prec(), &out));
    return dump(take_json(out));
  }
  if (o.matrices.size() != 2) usage_error("isospectral compares two --matrix files (or use --enumerate)");
  MatrixPtr a = load_matrix(o.matrices[0]);
  MatrixPtr b = load_matrix(o.matrices[1]);
  int iso = 0;
  check(ic_is_isospectral(a.get(), b.get(), tol, &iso));
  Json j;
  j["isospectral"] = iso != 0;
  j["tol"] = tol;
  for (auto [key, m] : {std::pair{"spectrum_a", a.get()}, std::pair{"spectrum_b", b.get()}}) {
    ic_spectrum* raw = nullptr;
    check(ic_eigendecompose(m, &raw));
    SpectrumPtr s(raw);
    Json values = Json::array();
    for (double v : spectrum_values(s.get())) values.push_back(o.round(v));
    j[key] = values;
  }
  ic_null_space_check ns{};
  const ic_status st = ic_fiedler_null_space_check(a.get(), b.get(), o.tol.value_or(1e-8), &ns);
  if (st == IC_OK) {
    j["fiedler_null_space"] = Json{{"holds", ns.holds != 0}, {"residual", ns.residual},
                                   {"lambda2_a", o.round(ns.lambda2_a)}, {"lambda2_b", o.round(ns.lambda2_b)},
                                   {"lambda2_agree", ns.lambda2_agree != 0}};
  } else {
    j["fiedler_null_space"] = Json{{"error", ic_status_name(st)}, {"message", ic_last_error()}};
  }
  return dump(j);
}

Json verdict_json(const ic_iso_verdict& v) {
  return Json{{"passes", v.passes != 0},           {"orthonormal", v.orthonormal != 0},
              {"fixes_ones", v.fixes_ones != 0},   {"permutation", v.permutation != 0},
              {"identity", v.identity != 0},       {"orthonormality_error", v.orthonormality_error},
              {"fixed_point_error", v.fixed_point_error}};
}

std::string cmd_transform(const Options& o) {
  require_format(o, {"json"});
  const int chosen = !o.perm.empty() + !o.transform.empty() + o.theta.has_value();
  if (chosen != 1) usage_error("transform needs exactly one of --perm, --transform or --theta");

  if (!o.input.empty() && o.matrices.empty()) {
    if (o.perm.empty()) usage_error("a configuration can only be relabeled with --perm");
    ConfigPtr c = load_config(o.input);
    const std::vector<std::size_t> images = parse_perm(o.perm);
    ic_config* raw = nullptr;
    check(ic_config_relabel(c.get(), images.data(), images.size(), &raw));
    ConfigPtr relabeled(raw);
    MatrixPtr l = laplacian_of(relabeled.get());
    char* cj = nullptr;
    check(ic_config_to_json(relabeled.get(), IC_PRECISION_FULL, &cj));
    char* lj = nullptr;
    check(ic_matrix_to_json(l.get(), o.prec(), &lj));
    return dump(Json{{"perm", images}, {"configuration", take_json(cj)}, {"laplacian", take_json(lj)}});
  }

  MatrixPtr l = source_matrix(o);
  MatrixPtr q;
  if (!o.perm.empty()) {
    const std::vector<std::size_t> images = parse_perm(o.perm);
    ic_matrix* raw = nullptr;
    check(ic_permutation_matrix(images.data(), images.size(), &raw));
    q.reset(raw);
  } else if (!o.transform.empty()) {
    q = load_matrix(o.transform);
  } else {
    ic_matrix* raw = nullptr;
    check(ic_ones_axis_rotation(ic_matrix_order(l.get()), *o.theta, &raw));
    q.reset(raw);
  }
  ic_iso_verdict verdict{};
  check(ic_validate_iso_transform(q.get(), o.tol.value_or(1e-9), &verdict));
  char* qj = nullptr;
  check(ic_matrix_to_json(q.get(), o.prec(), &qj));
  Json j{{"transform", take_json(qj)}, {"validation", verdict_json(verdict)}};

  ic_family* raw = nullptr;
  check(ic_similarity_transform(l.get(), q.get(), &raw));
  FamilyPtr f(raw);
  char* fj = nullptr;
  check(ic_family_to_json(f.get(), o.prec(), &fj));
  j["entry"] = take_json(fj).at(0);
  return dump(j);
}

std::string cmd_moves(const Options& o) {
  require_format(o, {"json"});
  if (o.input.empty()) usage_error("--input configuration is required");
  ConfigPtr c = load_config(o.input);
  const std::size_t mobile = agent_index(c.get(), o.mobile);
  ic_moves* raw = nullptr;
  check(ic_mirror_moves(c.get(), mobile, &raw));
  MovesPtr m(raw);
  char* out = nullptr;
  check(ic_moves_to_json(m.get(), o.prec(), &out));
  Json j = take_json(out);
  j["mobile"] = o.mobile;
  return dump(j);
}

std::string cmd_integrate(const Options& o) {
  require_format(o, {"json"});
  if (o.input.empty()) usage_error("--input configuration is required");
  if (o.path.empty()) usage_error("--path is required");
  ConfigPtr c = load_config(o.input);
  const std::string text = read_file(o.path);
  ic_path* praw = nullptr;
  check(ic_path_from_json(text.c_str(), &praw));
  PathPtr p(praw);
  const std::string mobile_id = ic_path_mobile(p.get());
  const std::size_t mobile = agent_index(c.get(), mobile_id);
  std::vector<double> xy(2 * ic_path_waypoint_count(p.get()));
  check(ic_path_waypoints(p.get(), xy.data(), xy.size()));
  ic_integration* raw = nullptr;
  check(ic_integrate_path(c.get(), mobile, xy.data(), xy.size() / 2, ic_path_steps(p.get()), &raw));
  IntegrationPtr r(raw);
  char* out = nullptr;
  check(ic_integration_to_json(r.get(), o.prec(), &out));
  Json j = take_json(out);
  j["mobile"] = mobile_id;
  return dump(j);
}

std::string cmd_zone(const Options& o) {
  require_format(o, {"json", "csv"});
  if (o.input.empty()) usage_error("--input configuration is required");
  if (o.grid.empty()) usage_error("--grid is required");
  const ic_grid grid = parse_grid(o.grid);
  ConfigPtr c = load_config(o.input);
  const std::size_t mobile = agent_index(c.get(), o.mobile);
  ic_zone* raw = nullptr;
  const double* target = o.target ? &*o.target : nullptr;
  check(ic_iso_connectivity_zone(c.get(), mobile, &grid, o.tol.value_or(1e-9), target, &raw));
  ZonePtr z(raw);
  if (o.format == "csv") {
    std::string csv = "x,y,lambda2\n";
    for (std::size_t i = 0; i < ic_zone_accepted_count(z.get()); ++i) {
      double x = 0, y = 0, l2 = 0;
      check(ic_zone_accepted(z.get(), i, &x, &y, &l2));
      csv += csv_number(x, o) + "," + csv_number(y, o) + "," + csv_number(l2, o) + "\n";
    }
    return csv;
  }
  char* out = nullptr;
  check(ic_zone_to_json(z.get(), o.prec(), &out));
  Json j = take_json(out);
  j["mobile"] = o.mobile;
  return dump(j);
}

std::string cmd_parametric(const Options& o) {
  require_format(o, {"json", "csv"});
  if (o.scan > 0) {
    if (o.alpha || o.beta) usage_error("--scan replaces --alpha/--beta");
    Json rows = Json::array();
    std::string csv = "alpha,beta,upper_root_condition,lambda2,numeric_lambda2_is_4,discrepancy\n";
    std::size_t disagreements = 0;
    for (std::size_t i = 1; i <= o.scan; ++i) {
      for (std::size_t k = 1; k <= o.scan; ++k) {
        const double a = 5.0 * static_cast<double>(i) / static_cast<double>(o.scan);
        const double b = 5.0 * static_cast<double>(k) / static_cast<double>(o.scan);
        ic_l4_validity v{};
        check(ic_l4_validity_check(a, b, &v));
        if (v.upper_root_condition != v.numeric_lambda2_is_4) ++disagreements;
        rows.push_back(Json{{"alpha", a}, {"beta", b}, {"upper_root_condition", v.upper_root_condition != 0},
                            {"lambda2", o.round(v.lambda2)}, {"numeric_lambda2_is_4", v.numeric_lambda2_is_4 != 0},
                            {"discrepancy", v.discrepancy != 0}});
        csv += Json(a).dump() + "," + Json(b).dump() + "," + (v.upper_root_condition ? "true" : "false") + "," +
               csv_number(v.lambda2, o) + "," + (v.numeric_lambda2_is_4 ? "true" : "false") + "," +
               (v.discrepancy ? "true" : "false") + "\n";
      }
    }
    if (o.format == "csv") return csv;
    return dump(Json{{"grid", o.scan}, {"disagreements", disagreements}, {"points", rows}});
  }
  if (!o.alpha || !o.beta) usage_error("parametric needs --alpha and --beta (or --scan N)");
  ic_matrix* raw = nullptr;
  check(ic_parametric_l4(*o.alpha, *o.beta, &raw));
  MatrixPtr l(raw);
  double closed[4];
  check(ic_l4_closed_form_spectrum(*o.alpha, *o.beta, closed));
  ic_spectrum* sraw = nullptr;
  check(ic_eigendecompose(l.get(), &sraw));
  SpectrumPtr s(sraw);
  const std::vector<double> numeric = spectrum_values(s.get());
  ic_l4_validity v{};
  check(ic_l4_validity_check(*o.alpha, *o.beta, &v));
  if (o.format == "csv") {
    std::string csv = "index,closed_form,numeric\n";
    for (std::size_t i = 0; i < 4; ++i)
      csv += std::to_string(i + 1) + "," + csv_number(closed[i], o) + "," + csv_number(numeric[i], o) + "\n";
    return csv;
  }
  char* lj = nullptr;
  check(ic_matrix_to_json(l.get(), o.prec(), &lj));
  Json closed_j = Json::array(), numeric_j = Json::array();
  for (double x : closed) closed_j.push_back(o.round(x));
  for (double x : numeric) numeric_j.push_back(o.round(x));
  return dump(Json{{"alpha", *o.alpha},
                   {"beta", *o.beta},
                   {"matrix", take_json(lj)},
                   {"closed_form_spectrum", closed_j},
                   {"numeric_spectrum", numeric_j},
                   {"validity", Json{{"upper_root_condition", v.upper_root_condition != 0},
                                     {"numeric_lambda2_is_4", v.numeric_lambda2_is_4 != 0},
                                     {"discrepancy", v.discrepancy != 0},
                                     {"lambda2", o.round(v.lambda2)},
                                     {"lower_root", o.round(v.lower_root)}}}});
}

std::string cmd_render(const Options& o) {
  require_format(o, {"svg"});
  if (o.input.empty()) usage_error("--input configuration is required");
  ConfigPtr c = load_config(o.input);
  std::vector<double> ghosts;
  if (!o.mobile.empty()) {
    ic_moves* raw = nullptr;
    check(ic_mirror_moves(c.get(), agent_index(c.get(), o.mobile), &raw));
    MovesPtr m(raw);
    for (std::size_t i = 0; i < ic_moves_count(m.get()); ++i) {
      double x = 0, y = 0;
      check(ic_moves_alternative(m.get(), i, &x, &y));
      ghosts.push_back(x);
      ghosts.push_back(y);
    }
  }
  char* out = nullptr;
  check(ic_config_render_svg(c.get(), ghosts.empty() ? nullptr : ghosts.data(), ghosts.size() / 2, &out));
  return take(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral connectivity analysis for planar multi-agent networks", "isoconn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ic_version());

  Options o;
  struct Entry {
    const char* name;
    const char* help;
    std::string (*run)(const Options&);
  };
  const std::vector<Entry> commands = {
      {"spectrum", "Eigenvalues and eigenvectors of a matrix or configuration Laplacian", cmd_spectrum},
      {"connectivity", "Algebraic connectivity and Fiedler vector", cmd_connectivity},
      {"isospectral", "Compare two spectra or enumerate relabeled isospectral Laplacians", cmd_isospectral},
      {"transform", "Apply a similarity transform (permutation, matrix or ones-axis rotation)", cmd_transform},
      {"moves", "Positions of a mobile agent that leave the Laplacian unchanged", cmd_moves},
      {"integrate", "Integrate the lambda2 differential along a path of the mobile agent", cmd_integrate},
      {"zone", "Grid scan for positions of the mobile agent with unchanged lambda2", cmd_zone},
      {"parametric", "The four-agent alpha/beta family: closed form, numerics, validity", cmd_parametric},
      {"render", "SVG drawing of a configuration", cmd_render},
  };

  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const Entry& e : commands) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--input", o.input, "Configuration JSON file");
    sub->add_option("--matrix", o.matrices, "Matrix JSON file (isospectral accepts two)");
    sub->add_option("--output", o.output, "Write here instead of standard output");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for sampled enumeration above order 8");
    sub->add_option("--precision", o.precision, "Number display: 4 decimals or full")
        ->check(CLI::IsMember({"4", "full"}));
    const std::string name = e.name;
    if (name == "isospectral") {
      sub->add_flag("--enumerate", o.enumerate, "List permutation conjugates of the base Laplacian");
      sub->add_option("--limit", o.limit, "Maximum number of family entries (0: all)");
      sub->add_flag("--no-dedupe", o.no_dedupe, "Keep entries whose matrices coincide");
    } else if (name == "transform") {
      sub->add_option("--perm", o.perm, "Comma-separated 1-based permutation images, e.g. 4,3,2,1");
      sub->add_option("--transform", o.transform, "Matrix JSON file holding Q");
      sub->add_option("--theta", o.theta, "Angle of the ones-axis rotation, radians");
    } else if (name == "moves" || name == "zone" || name == "render") {
      sub->add_option("--mobile", o.mobile, "Id of the mobile agent");
    }
    if (name == "integrate") sub->add_option("--path", o.path, "Path JSON file")->required();
    if (name == "zone") {
      sub->add_option("--grid", o.grid, "x_min,x_max,y_min,y_max,nx,ny")->required();
      sub->add_option("--target", o.target, "Target lambda2 (default: current value)");
    }
    if (name == "parametric") {
      sub->add_option("--alpha", o.alpha, "Weight between the mobile agent and agent 1");
      sub->add_option("--beta", o.beta, "Weight between the mobile agent and agent 2");
      sub->add_option("--scan", o.scan, "Tabulate an N x N grid over (0, 5]^2 instead");
    }
    subs.emplace_back(sub, &e);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    if (std::string(entry->name) == "render" && sub->count("--format") == 0) o.format = "svg";
    try {
      write_output(o, entry->run(o));
      return 0;
    } catch (const Failure& f) {
      std::cerr << Json{{"error", f.kind}, {"message", f.message}}.dump() << "\n";
      return f.exit_code;
    } catch (const std::exception& e) {
      std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
      return kExitDomain;
    }
  }
  return kExitUsage;
}
