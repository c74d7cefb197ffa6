#include "fslr/fslr.h"

#include "fslr/change_basis.hpp"
#include "fslr/coeff_table.hpp"
#include "fslr/lr_rule.hpp"
#include "fslr/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

struct fslr_context {
  fslr::FactorialSchurCache cache;
  std::string last_error;
};

struct fslr_poly {
  fslr::Polynomial value;
};

struct fslr_table {
  fslr::CoeffTable value;
};

struct fslr_tableau_list {
  std::vector<fslr::BarredSkewTableau> items;
};

struct fslr_specialization {
  fslr::YSpecialization value;
};

namespace {

/// Raised inside the API layer to report a specific status code.
struct ApiError {
  fslr_status status;
  std::string message;
};

fslr_status fail(fslr_context* ctx, fslr_status status, const std::string& message) {
  if (ctx) ctx->last_error = message;
  return status;
}

template <typename F>
fslr_status guarded(fslr_context* ctx, F&& body) {
  if (!ctx) return FSLR_NULL_ARGUMENT;
  try {
    const fslr_status status = body();
    if (status == FSLR_OK) ctx->last_error.clear();
    return status;
  } catch (const ApiError& e) {
    return fail(ctx, e.status, e.message);
  } catch (const nlohmann::json::exception& e) {
    return fail(ctx, FSLR_PARSE_ERROR, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ctx, FSLR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, FSLR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ctx, FSLR_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ctx, FSLR_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ctx, FSLR_INTERNAL_ERROR, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw ApiError{FSLR_NULL_ARGUMENT, std::string(what) + " must not be NULL"};
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fslr::Partition read_partition(const int* parts, std::size_t len, const char* what) {
  if (len > 0) require(parts, what);
  return fslr::Partition(std::vector<int>(parts, parts + len));
}

fslr::MultiShape read_shape(const int* parts, const std::size_t* lengths, std::size_t r) {
  if (r > 0) require(lengths, "lengths");
  std::vector<fslr::Partition> diagrams;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (lengths[i] > 0) require(parts, "parts");
    diagrams.push_back(read_partition(parts ? parts + offset : nullptr, lengths[i], "parts"));
    offset += lengths[i];
  }
  return fslr::MultiShape(std::move(diagrams));
}

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

template <typename T, typename Handle>
fslr_status emit(Handle** out, T value) {
  *out = new Handle{std::move(value)};
  return FSLR_OK;
}

}  // namespace

extern "C" {

const char* fslr_version(void) { return "0.1.0"; }

fslr_status fslr_context_new(fslr_context** out) {
  if (!out) return FSLR_NULL_ARGUMENT;
  try {
    *out = new fslr_context();
    return FSLR_OK;
  } catch (...) {
    return FSLR_INTERNAL_ERROR;
  }
}

void fslr_context_free(fslr_context* ctx) { delete ctx; }

const char* fslr_last_error(const fslr_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

void fslr_string_free(char* s) { std::free(s); }

void fslr_poly_free(fslr_poly* p) { delete p; }

fslr_status fslr_poly_to_string(fslr_context* ctx, const fslr_poly* p, fslr_format format, char** out) {
  return guarded(ctx, [&] {
    require(p, "poly");
    require(out, "out");
    switch (format) {
      case FSLR_FORMAT_JSON: *out = copy_string(p->value.to_json().dump()); break;
      case FSLR_FORMAT_LATEX: *out = copy_string(p->value.to_latex()); break;
      case FSLR_FORMAT_PLAIN: *out = copy_string(p->value.to_string()); break;
      default: throw std::invalid_argument("unknown output format");
    }
    return FSLR_OK;
  });
}

fslr_status fslr_poly_from_json(fslr_context* ctx, const char* json, fslr_poly** out) {
  return guarded(ctx, [&] {
    require(json, "json");
    require(out, "out");
    try {
      return emit(out, fslr::Polynomial::from_json(nlohmann::json::parse(json)));
    } catch (const std::invalid_argument& e) {
      throw ApiError{FSLR_PARSE_ERROR, e.what()};
    }
  });
}

int fslr_poly_equal(const fslr_poly* a, const fslr_poly* b) { return a && b && a->value == b->value; }

int fslr_poly_is_zero(const fslr_poly* p) { return p && p->value.is_zero(); }

void fslr_table_free(fslr_table* t) { delete t; }

fslr_status fslr_table_to_string(fslr_context* ctx, const fslr_table* t, fslr_format format, char** out) {
  return guarded(ctx, [&] {
    require(t, "table");
    require(out, "out");
    switch (format) {
      case FSLR_FORMAT_JSON: *out = copy_string(t->value.to_json().dump()); break;
      case FSLR_FORMAT_LATEX: *out = copy_string(t->value.to_latex()); break;
      case FSLR_FORMAT_PLAIN: *out = copy_string(t->value.to_plain()); break;
      default: throw std::invalid_argument("unknown output format");
    }
    return FSLR_OK;
  });
}

fslr_status fslr_table_from_json(fslr_context* ctx, const char* json, fslr_table** out) {
  return guarded(ctx, [&] {
    require(json, "json");
    require(out, "out");
    try {
      return emit(out, fslr::CoeffTable::from_json(nlohmann::json::parse(json)));
    } catch (const std::invalid_argument& e) {
      throw ApiError{FSLR_PARSE_ERROR, e.what()};
    }
  });
}

size_t fslr_table_size(const fslr_table* t) { return t ? t->value.size() : 0; }

fslr_status fslr_table_get(fslr_context* ctx, const fslr_table* t, const int* mu, size_t mu_len, fslr_poly** out) {
  return guarded(ctx, [&] {
    require(t, "table");
    require(out, "out");
    return emit(out, t->value.at(read_partition(mu, mu_len, "mu")));
  });
}

int fslr_table_equal(const fslr_table* a, const fslr_table* b) { return a && b && a->value == b->value; }

fslr_status fslr_specialization_new(fslr_context* ctx, fslr_specialization** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = new fslr_specialization();
    return FSLR_OK;
  });
}

void fslr_specialization_free(fslr_specialization* s) { delete s; }

fslr_status fslr_specialization_add(fslr_context* ctx, fslr_specialization* s, const char* assignment) {
  return guarded(ctx, [&] {
    require(s, "specialization");
    require(assignment, "assignment");
    try {
      s->value.parse_assignment(assignment);
    } catch (const std::invalid_argument& e) {
      throw ApiError{FSLR_PARSE_ERROR, e.what()};
    }
    return FSLR_OK;
  });
}

fslr_status fslr_specialize_table(fslr_context* ctx, const fslr_table* t, const fslr_specialization* s,
                                  fslr_table** out) {
  return guarded(ctx, [&] {
    require(t, "table");
    require(s, "specialization");
    require(out, "out");
    return emit(out, fslr::specialize(t->value, s->value));
  });
}

fslr_status fslr_specialize_poly(fslr_context* ctx, const fslr_poly* p, const fslr_specialization* s,
                                 fslr_poly** out) {
  return guarded(ctx, [&] {
    require(p, "poly");
    require(s, "specialization");
    require(out, "out");
    return emit(out, s->value.apply(p->value));
  });
}

fslr_status fslr_expand(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                        fslr_table** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    require_n(n);
    return emit(out, fslr::lr_expand(read_shape(parts, lengths, r), n));
  });
}

fslr_status fslr_expand_oracle(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                               fslr_table** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    require_n(n);
    return emit(out, fslr::oracle_expand(read_shape(parts, lengths, r), n, &ctx->cache));
  });
}

fslr_status fslr_coefficient(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                             const int* mu, size_t mu_len, fslr_poly** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    require_n(n);
    return emit(out, fslr::lr_coefficient(read_shape(parts, lengths, r), read_partition(mu, mu_len, "mu"), n));
  });
}

fslr_status fslr_coefficient_oracle(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                                    const int* mu, size_t mu_len, fslr_poly** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    require_n(n);
    return emit(out, fslr::oracle_coefficient(read_shape(parts, lengths, r), read_partition(mu, mu_len, "mu"), n,
                                              &ctx->cache));
  });
}

fslr_status fslr_e_coefficient(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                               const int* mu, size_t mu_len, int target_family, fslr_poly** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    require_n(n);
    return emit(out, fslr::e_coefficient(read_shape(parts, lengths, r), read_partition(mu, mu_len, "mu"), n,
                                         target_family));
  });
}

fslr_status fslr_tableaux(fslr_context* ctx, const int* parts, const size_t* lengths, size_t r, int n,
                          fslr_tableau_set set, const int* mu, size_t mu_len, fslr_tableau_list** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    require_n(n);
    const fslr::MultiShape shape = read_shape(parts, lengths, r);
    std::optional<fslr::Partition> content;
    if (mu) content = read_partition(mu, mu_len, "mu");
    fslr_tableau_list list;
    auto keep = [&](const fslr::BarredSkewTableau& t) { list.items.push_back(t); };
    if (set == FSLR_TABLEAUX_LR) {
      fslr::enumerate_yamanouchi(shape, n, content, fslr::BarPolicy::Any, keep);
    } else if (set == FSLR_TABLEAUX_ALL) {
      if (!shape.fits(n)) throw std::invalid_argument("shape " + shape.to_string() + " does not fit n rows");
      const bool possible = !content || content->fits(n);
      const std::vector<int> target = possible && content ? content->padded(n) : std::vector<int>();
      if (possible) {
        fslr::enumerate_barred(shape, n, [&](const fslr::BarredSkewTableau& t) {
          if (!content || fslr::unbarred_content(t) == target) keep(t);
        });
      }
    } else {
      throw std::invalid_argument("unknown tableau set");
    }
    *out = new fslr_tableau_list(std::move(list));
    return FSLR_OK;
  });
}

void fslr_tableau_list_free(fslr_tableau_list* list) { delete list; }

size_t fslr_tableau_list_size(const fslr_tableau_list* list) { return list ? list->items.size() : 0; }

fslr_status fslr_tableau_list_get(fslr_context* ctx, const fslr_tableau_list* list, size_t k, fslr_format format,
                                  char** out) {
  return guarded(ctx, [&] {
    require(list, "list");
    require(out, "out");
    if (k >= list->items.size()) throw std::out_of_range("tableau index out of range");
    const auto& t = list->items[k];
    switch (format) {
      case FSLR_FORMAT_JSON: *out = copy_string(t.to_json().dump()); break;
      case FSLR_FORMAT_PLAIN: *out = copy_string(t.render()); break;
      default: throw std::invalid_argument("tableaux are available as JSON or plain drawings only");
    }
    return FSLR_OK;
  });
}

fslr_status fslr_change_basis(fslr_context* ctx, const int* lambda, size_t lambda_len, int n,
                              fslr_direction direction, fslr_method method, int m, int family, fslr_table** out) {
  return guarded(ctx, [&] {
    require(out, "out");
    require_n(n);
    if (family < 1) throw std::invalid_argument("family must be at least 1");
    fslr::BasisDirection dir;
    switch (direction) {
      case FSLR_SCHUR_TO_FACTORIAL: dir = fslr::BasisDirection::SchurToFactorial; break;
      case FSLR_FACTORIAL_TO_SCHUR: dir = fslr::BasisDirection::FactorialToSchur; break;
      default: throw std::invalid_argument("unknown direction");
    }
    fslr::BasisMethod how;
    switch (method) {
      case FSLR_METHOD_DET: how = fslr::BasisMethod::Determinant; break;
      case FSLR_METHOD_DUAL: how = fslr::BasisMethod::Dual; break;
      case FSLR_METHOD_TABLEAU: how = fslr::BasisMethod::Tableau; break;
      default: throw std::invalid_argument("unknown method");
    }
    const std::optional<int> width = m > 0 ? std::optional<int>(m) : std::nullopt;
    return emit(out, fslr::change_basis(read_partition(lambda, lambda_len, "lambda"), n, dir, how, width, family));
  });
}

fslr_verify_bounds fslr_verify_default_bounds(void) {
  const fslr::VerifyBounds d;
  return {d.max_boxes, d.max_size, d.n, d.r, d.seed, d.random_samples};
}

fslr_status fslr_verify(fslr_context* ctx, const char* suite, const fslr_verify_bounds* bounds, fslr_format format,
                        char** report) {
  return guarded(ctx, [&] {
    require(suite, "suite");
    require(report, "report");
    fslr::VerifyBounds b;
    if (bounds) {
      b = {bounds->max_boxes, bounds->max_size, bounds->n, bounds->r, bounds->seed, bounds->random_samples};
    }
    if (format != FSLR_FORMAT_JSON && format != FSLR_FORMAT_PLAIN) {
      throw std::invalid_argument("verification reports are available as JSON or plain text only");
    }
    const auto results = fslr::run_verify(suite, b, &ctx->cache);
    bool ok = true;
    nlohmann::json j = nlohmann::json::array();
    std::string text;
    for (const auto& r : results) {
      ok &= r.ok();
      j.push_back(r.to_json());
      text += r.to_plain() + "\n";
    }
    *report = copy_string(format == FSLR_FORMAT_JSON ? j.dump() : text);
    if (!ok) {
      ctx->last_error = "verification failed";
      return FSLR_CHECK_FAILED;
    }
    return FSLR_OK;
  });
}

}  // extern "C"
