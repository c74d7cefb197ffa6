// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 a check or verification failed, 2 usage error.

#include "fslr/fslr.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Context = std::unique_ptr<fslr_context, Deleter<fslr_context, fslr_context_free>>;
using Poly = std::unique_ptr<fslr_poly, Deleter<fslr_poly, fslr_poly_free>>;
using Table = std::unique_ptr<fslr_table, Deleter<fslr_table, fslr_table_free>>;
using TableauList = std::unique_ptr<fslr_tableau_list, Deleter<fslr_tableau_list, fslr_tableau_list_free>>;
using Specialization =
    std::unique_ptr<fslr_specialization, Deleter<fslr_specialization, fslr_specialization_free>>;

struct Options {
  std::optional<int> n;
  std::string shape;
  std::string lambda;
  std::string mu;
  std::string format;
  bool check = false;
  std::vector<std::string> specialize;
  std::uint64_t seed = 1;
  int max_boxes = 6;
  int max_size = 4;
  int r = 3;
  int samples = 0;
  std::string suite = "all";
  bool all = false;
  bool lr = false;
  bool render = false;
  std::string direction = "factorial-to-schur";
  std::string method = "det";
  std::optional<int> m;
  int family = 1;
};

void ok_or_throw(fslr_context* ctx, fslr_status status) {
  if (status == FSLR_OK) return;
  const std::string message = fslr_last_error(ctx);
  switch (status) {
    case FSLR_CHECK_FAILED:
    case FSLR_INTERNAL_ERROR:
      throw Failure{kExitCheck, message};
    default:
      throw Failure{kExitUsage, message};
  }
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  fslr_string_free(s);
  return out;
}

nlohmann::json parse_json(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw Failure{kExitUsage, std::string(what) + " is not valid JSON: " + text};
  }
}

std::vector<int> parse_partition(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw Failure{kExitUsage, std::string(what) + " must be a JSON array of integers"};
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Failure{kExitUsage, std::string(what) + " must be a JSON array of integers"};
    parts.push_back(v.get<int>());
  }
  return parts;
}

struct Shape {
  std::vector<int> parts;
  std::vector<std::size_t> lengths;
};

Shape parse_shape(const std::string& text) {
  if (text.empty()) throw Failure{kExitUsage, "--shape is required"};
  const auto j = parse_json(text, "--shape");
  if (!j.is_array()) throw Failure{kExitUsage, "--shape must be a JSON array of partitions"};
  Shape s;
  for (const auto& d : j) {
    const auto parts = parse_partition(d, "each diagram of --shape");
    s.parts.insert(s.parts.end(), parts.begin(), parts.end());
    s.lengths.push_back(parts.size());
  }
  return s;
}

std::optional<std::vector<int>> parse_mu(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_partition(parse_json(text, "--mu"), "--mu");
}

int require_n(const Options& o) {
  if (!o.n) throw Failure{kExitUsage, "--n is required"};
  return *o.n;
}

fslr_format format_of(const std::string& name, fslr_format fallback) {
  if (name.empty()) return fallback;
  if (name == "json") return FSLR_FORMAT_JSON;
  if (name == "latex") return FSLR_FORMAT_LATEX;
  return FSLR_FORMAT_PLAIN;
}

Specialization build_specialization(fslr_context* ctx, const Options& o) {
  fslr_specialization* raw = nullptr;
  ok_or_throw(ctx, fslr_specialization_new(ctx, &raw));
  Specialization spec(raw);
  for (const auto& a : o.specialize) ok_or_throw(ctx, fslr_specialization_add(ctx, spec.get(), a.c_str()));
  return spec;
}

void print_table(fslr_context* ctx, const fslr_table* table, const Options& o) {
  char* text = nullptr;
  ok_or_throw(ctx, fslr_table_to_string(ctx, table, format_of(o.format, FSLR_FORMAT_JSON), &text));
  std::string out = take_string(text);
  if (out.empty() || out.back() != '\n') out += '\n';
  std::cout << out;
}

Table specialized(fslr_context* ctx, Table table, const Options& o) {
  if (o.specialize.empty()) return table;
  const Specialization spec = build_specialization(ctx, o);
  fslr_table* raw = nullptr;
  ok_or_throw(ctx, fslr_specialize_table(ctx, table.get(), spec.get(), &raw));
  return Table(raw);
}

int cmd_expand(fslr_context* ctx, const Options& o) {
  const int n = require_n(o);
  const Shape s = parse_shape(o.shape);
  fslr_table* raw = nullptr;
  ok_or_throw(ctx, fslr_expand(ctx, s.parts.data(), s.lengths.data(), s.lengths.size(), n, &raw));
  Table table(raw);
  bool consistent = true;
  if (o.check) {
    fslr_table* oracle = nullptr;
    ok_or_throw(ctx, fslr_expand_oracle(ctx, s.parts.data(), s.lengths.data(), s.lengths.size(), n, &oracle));
    consistent = fslr_table_equal(table.get(), Table(oracle).get());
  }
  table = specialized(ctx, std::move(table), o);
  print_table(ctx, table.get(), o);
  if (!consistent) throw Failure{kExitCheck, "tableau expansion differs from the alternant oracle"};
  return kExitOk;
}

int cmd_coeff(fslr_context* ctx, const Options& o) {
  const int n = require_n(o);
  const Shape s = parse_shape(o.shape);
  const auto mu = parse_mu(o.mu);
  if (!mu) throw Failure{kExitUsage, "--mu is required"};
  fslr_poly* raw = nullptr;
  ok_or_throw(ctx, fslr_coefficient(ctx, s.parts.data(), s.lengths.data(), s.lengths.size(), n, mu->data(),
                                    mu->size(), &raw));
  Poly value(raw);
  bool consistent = true;
  if (o.check) {
    fslr_poly* oracle = nullptr;
    ok_or_throw(ctx, fslr_coefficient_oracle(ctx, s.parts.data(), s.lengths.data(), s.lengths.size(), n, mu->data(),
                                             mu->size(), &oracle));
    consistent = fslr_poly_equal(value.get(), Poly(oracle).get());
  }
  if (!o.specialize.empty()) {
    const Specialization spec = build_specialization(ctx, o);
    fslr_poly* out = nullptr;
    ok_or_throw(ctx, fslr_specialize_poly(ctx, value.get(), spec.get(), &out));
    value.reset(out);
  }
  char* text = nullptr;
  ok_or_throw(ctx, fslr_poly_to_string(ctx, value.get(), format_of(o.format, FSLR_FORMAT_PLAIN), &text));
  std::cout << take_string(text) << '\n';
  if (!consistent) throw Failure{kExitCheck, "tableau coefficient differs from the alternant oracle"};
  return kExitOk;
}

int cmd_tableaux(fslr_context* ctx, const Options& o) {
  const int n = require_n(o);
  const Shape s = parse_shape(o.shape);
  const auto mu = parse_mu(o.mu);
  if (o.all && o.lr) throw Failure{kExitUsage, "--all and --lr are mutually exclusive"};
  const fslr_tableau_set set = o.all ? FSLR_TABLEAUX_ALL : FSLR_TABLEAUX_LR;
  fslr_tableau_list* raw = nullptr;
  ok_or_throw(ctx, fslr_tableaux(ctx, s.parts.data(), s.lengths.data(), s.lengths.size(), n, set,
                                 mu ? mu->data() : nullptr, mu ? mu->size() : 0, &raw));
  const TableauList list(raw);
  const std::size_t count = fslr_tableau_list_size(list.get());
  for (std::size_t k = 0; k < count; ++k) {
    char* text = nullptr;
    ok_or_throw(ctx, fslr_tableau_list_get(ctx, list.get(), k, o.render ? FSLR_FORMAT_PLAIN : FSLR_FORMAT_JSON, &text));
    std::cout << take_string(text) << (o.render ? "\n\n" : "\n");
  }
  return kExitOk;
}

int cmd_change_basis(fslr_context* ctx, const Options& o) {
  const int n = require_n(o);
  std::vector<int> lambda;
  if (!o.lambda.empty()) {
    lambda = parse_partition(parse_json(o.lambda, "--lambda"), "--lambda");
  } else {
    const Shape s = parse_shape(o.shape);
    if (s.lengths.size() != 1) throw Failure{kExitUsage, "change-basis needs a single partition (--lambda or a one-diagram --shape)"};
    lambda = s.parts;
  }
  const fslr_direction direction =
      o.direction == "schur-to-factorial" ? FSLR_SCHUR_TO_FACTORIAL : FSLR_FACTORIAL_TO_SCHUR;
  const fslr_method method = o.method == "dual"      ? FSLR_METHOD_DUAL
                             : o.method == "tableau" ? FSLR_METHOD_TABLEAU
                                                     : FSLR_METHOD_DET;
  int width = 0;
  if (o.m) {
    const int lambda_1 = lambda.empty() ? 0 : lambda.front();
    if (*o.m < std::max(lambda_1, 0) || *o.m < 1) {
      throw Failure{kExitCheck, "m = " + std::to_string(*o.m) + " is not admissible (needs m >= lambda_1 and m >= 1)"};
    }
    width = *o.m;
  }
  auto compute = [&](fslr_method how) {
    fslr_table* raw = nullptr;
    ok_or_throw(ctx, fslr_change_basis(ctx, lambda.data(), lambda.size(), n, direction, how, width, o.family, &raw));
    return Table(raw);
  };
  Table table = compute(method);
  bool consistent = true;
  if (o.check) {
    for (fslr_method other : {FSLR_METHOD_DET, FSLR_METHOD_DUAL, FSLR_METHOD_TABLEAU}) {
      if (other != method) consistent &= static_cast<bool>(fslr_table_equal(table.get(), compute(other).get()));
    }
  }
  table = specialized(ctx, std::move(table), o);
  print_table(ctx, table.get(), o);
  if (!consistent) throw Failure{kExitCheck, "change-of-basis methods disagree"};
  return kExitOk;
}

int cmd_verify(fslr_context* ctx, const Options& o) {
  fslr_verify_bounds b = fslr_verify_default_bounds();
  b.max_boxes = o.max_boxes;
  b.max_size = o.max_size;
  b.n = o.n.value_or(b.n);
  b.r = o.r;
  b.seed = o.seed;
  b.random_samples = o.samples;
  const fslr_format format = format_of(o.format, FSLR_FORMAT_PLAIN) == FSLR_FORMAT_JSON ? FSLR_FORMAT_JSON
                                                                                         : FSLR_FORMAT_PLAIN;
  char* report = nullptr;
  const fslr_status status = fslr_verify(ctx, o.suite.c_str(), &b, format, &report);
  if (report) {
    std::string text = take_string(report);
    if (text.empty() || text.back() != '\n') text += '\n';
    std::cout << text;
  }
  ok_or_throw(ctx, status);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorial Schur functions and the barred-tableau Littlewood-Richardson rule"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;

  app.add_option("--n", o.n, "Number of x variables");
  app.add_option("--shape", o.shape, "Multishape as a JSON array of partitions, e.g. [[2,1],[1,1]]");
  app.add_option("--mu", o.mu, "Partition as a JSON array, e.g. [2,2]");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "latex", "plain"}));
  app.add_flag("--check", o.check, "Cross-check against an independent computation; exit 1 on mismatch");
  app.add_option("--specialize", o.specialize, "y<i>=0 or y<i>_<j>=<int>; repeatable")->take_all();
  app.add_option("--seed", o.seed, "Seed for randomized verification samples");
  app.add_option("--max-boxes", o.max_boxes, "Largest total box count swept by verify")->check(CLI::NonNegativeNumber);
  app.add_option("--max-size", o.max_size, "Largest |lambda| swept by the basis suite")->check(CLI::NonNegativeNumber);

  auto* expand = app.add_subcommand("expand", "Expand a product of factorial Schur functions in the Schur basis");
  auto* coeff = app.add_subcommand("coeff", "One Littlewood-Richardson coefficient c^mu(y)");
  auto* tableaux = app.add_subcommand("tableaux", "List barred tableaux as JSON lines");
  tableaux->add_flag("--all", o.all, "Every barred tableau of the shape (restricted to content --mu if given)");
  tableaux->add_flag("--lr", o.lr, "Yamanouchi tableaux (of content --mu if given); the default");
  tableaux->add_flag("--render", o.render, "ASCII drawings instead of JSON");
  auto* change = app.add_subcommand("change-basis", "Schur <-> factorial Schur change of basis");
  change->add_option("--lambda", o.lambda, "Partition as a JSON array (alternative to a one-diagram --shape)");
  change->add_option("--direction", o.direction, "factorial-to-schur (c) or schur-to-factorial (d)")
      ->check(CLI::IsMember({"factorial-to-schur", "schur-to-factorial"}));
  change->add_option("--method", o.method, "det, dual or tableau")->check(CLI::IsMember({"det", "dual", "tableau"}));
  change->add_option("--m", o.m, "Rectangle width for the dual and tableau methods");
  change->add_option("--family", o.family, "Index of the y family")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "Run property suites over a bounded envelope");
  verify->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember({"involutions", "cancellation", "lemma3", "theorem", "basis", "remark", "all"}));
  verify->add_option("--r", o.r, "Largest number of diagrams")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", o.samples, "Extra random tableaux for the involution suite")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  fslr_context* raw = nullptr;
  if (fslr_context_new(&raw) != FSLR_OK) {
    std::cerr << "error: could not create a context\n";
    return kExitCheck;
  }
  const Context ctx(raw);
  try {
    if (o.n && *o.n < 1) throw Failure{kExitUsage, "--n must be at least 1"};
    if (*expand) return cmd_expand(ctx.get(), o);
    if (*coeff) return cmd_coeff(ctx.get(), o);
    if (*tableaux) return cmd_tableaux(ctx.get(), o);
    if (*change) return cmd_change_basis(ctx.get(), o);
    if (*verify) return cmd_verify(ctx.get(), o);
  } catch (const Failure& f) {
    if (!f.message.empty()) std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
