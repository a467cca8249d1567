// Copyright 2026 The gfx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gfx/gfx.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "service.hpp"

struct gfx_field {
  gfx::Field field;
};

struct gfx_matrix {
  gfx::Matrix matrix;
};

namespace {

thread_local std::string g_last_error;

gfx_status status_of(gfx::Errc c) {
  using gfx::Errc;
  switch (c) {
    case Errc::invalid_argument: return GFX_INVALID_ARGUMENT;
    case Errc::not_prime_power: return GFX_NOT_PRIME_POWER;
    case Errc::unsupported: return GFX_UNSUPPORTED;
    case Errc::division_by_zero: return GFX_DIVISION_BY_ZERO;
    case Errc::index_out_of_range: return GFX_INDEX_OUT_OF_RANGE;
    case Errc::field_mismatch: return GFX_FIELD_MISMATCH;
    case Errc::profile_too_heavy: return GFX_PROFILE_TOO_HEAVY;
    case Errc::not_a_downset: return GFX_NOT_A_DOWNSET;
    case Errc::length_mismatch: return GFX_LENGTH_MISMATCH;
    case Errc::budget_exceeded: return GFX_BUDGET_EXCEEDED;
    case Errc::not_exhaustive: return GFX_NOT_EXHAUSTIVE;
    case Errc::parse_error: return GFX_PARSE;
  }
  return GFX_INTERNAL;
}

gfx_status set_error(gfx_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
gfx_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const gfx::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GFX_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(GFX_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gfx::io::json parse_request(const char* text) {
  if (!text) gfx::fail(gfx::Errc::invalid_argument, "request is null");
  return gfx::io::parse(text);
}

gfx_status null_arg(const char* what) { return set_error(GFX_INVALID_ARGUMENT, std::string(what) + " is null"); }

gfx_status element_op(const gfx_field* f, unsigned a, unsigned b, unsigned* out, gfx::Elem (*op)(const gfx::Field&, gfx::Elem, gfx::Elem)) {
  if (!f || !out) return null_arg("argument");
  return guarded([&] {
    if (!f->field.contains(a) || !f->field.contains(b))
      gfx::fail(gfx::Errc::index_out_of_range, "element index out of range");
    *out = op(f->field, static_cast<gfx::Elem>(a), static_cast<gfx::Elem>(b));
    return GFX_OK;
  });
}

}  // namespace

extern "C" {

const char* gfx_version(void) { return "0.1.0"; }

const char* gfx_status_string(gfx_status s) {
  switch (s) {
    case GFX_OK: return "ok";
    case GFX_INVALID_ARGUMENT: return "invalid argument";
    case GFX_NOT_PRIME_POWER: return "not a prime power";
    case GFX_UNSUPPORTED: return "unsupported";
    case GFX_DIVISION_BY_ZERO: return "division by zero";
    case GFX_INDEX_OUT_OF_RANGE: return "index out of range";
    case GFX_FIELD_MISMATCH: return "field mismatch";
    case GFX_PROFILE_TOO_HEAVY: return "profile too heavy";
    case GFX_NOT_A_DOWNSET: return "not a down-set";
    case GFX_LENGTH_MISMATCH: return "length mismatch";
    case GFX_BUDGET_EXCEEDED: return "budget exceeded";
    case GFX_NOT_EXHAUSTIVE: return "not exhaustive";
    case GFX_PARSE: return "parse error";
    case GFX_VERIFICATION_FAILED: return "verification failed";
    case GFX_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gfx_last_error(void) { return g_last_error.c_str(); }

void gfx_string_free(char* s) { std::free(s); }

gfx_status gfx_field_create(int q, gfx_field** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new gfx_field{gfx::Field::make(q)};
    return GFX_OK;
  });
}

void gfx_field_destroy(gfx_field* f) { delete f; }

int gfx_field_order(const gfx_field* f) { return f ? f->field.order() : 0; }

int gfx_field_characteristic(const gfx_field* f) { return f ? f->field.characteristic() : 0; }

gfx_status gfx_field_add(const gfx_field* f, unsigned a, unsigned b, unsigned* out) {
  return element_op(f, a, b, out, [](const gfx::Field& fl, gfx::Elem x, gfx::Elem y) { return fl.add(x, y); });
}

gfx_status gfx_field_mul(const gfx_field* f, unsigned a, unsigned b, unsigned* out) {
  return element_op(f, a, b, out, [](const gfx::Field& fl, gfx::Elem x, gfx::Elem y) { return fl.mul(x, y); });
}

gfx_status gfx_field_neg(const gfx_field* f, unsigned a, unsigned* out) {
  return element_op(f, a, 0, out, [](const gfx::Field& fl, gfx::Elem x, gfx::Elem) { return fl.neg(x); });
}

gfx_status gfx_field_inv(const gfx_field* f, unsigned a, unsigned* out) {
  return element_op(f, a, 0, out, [](const gfx::Field& fl, gfx::Elem x, gfx::Elem) { return fl.inv(x); });
}

gfx_status gfx_matrix_create(const gfx_field* f, size_t rows, size_t cols, const uint8_t* entries, gfx_matrix** out) {
  if (!f || !out) return null_arg("argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<gfx::Elem> data(rows * cols, 0);
    if (entries) {
      for (std::size_t i = 0; i < data.size(); ++i) {
        if (!f->field.contains(entries[i])) gfx::fail(gfx::Errc::index_out_of_range, "entry is not a field element");
        data[i] = entries[i];
      }
    }
    *out = new gfx_matrix{gfx::Matrix(f->field, rows, cols, std::move(data))};
    return GFX_OK;
  });
}

gfx_status gfx_matrix_from_json(const char* json, gfx_matrix** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new gfx_matrix{gfx::io::matrix_from_json(parse_request(json))};
    return GFX_OK;
  });
}

gfx_status gfx_matrix_to_json(const gfx_matrix* m, char** out) {
  if (!m || !out) return null_arg("argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(gfx::io::matrix_to_json(m->matrix).dump());
    return GFX_OK;
  });
}

void gfx_matrix_destroy(gfx_matrix* m) { delete m; }

size_t gfx_matrix_rows(const gfx_matrix* m) { return m ? m->matrix.rows() : 0; }

size_t gfx_matrix_cols(const gfx_matrix* m) { return m ? m->matrix.cols() : 0; }

int gfx_matrix_order(const gfx_matrix* m) { return m ? m->matrix.field().order() : 0; }

gfx_status gfx_matrix_get(const gfx_matrix* m, size_t row, size_t col, uint8_t* out) {
  if (!m || !out) return null_arg("argument");
  if (row >= m->matrix.rows() || col >= m->matrix.cols()) return set_error(GFX_INDEX_OUT_OF_RANGE, "matrix index out of range");
  g_last_error.clear();
  *out = m->matrix(row, col);
  return GFX_OK;
}

gfx_status gfx_matrix_rank(const gfx_matrix* m, size_t* out) {
  if (!m || !out) return null_arg("argument");
  return guarded([&] {
    *out = gfx::rank(m->matrix);
    return GFX_OK;
  });
}

gfx_status gfx_matrix_arank(const gfx_matrix* m, size_t* out) {
  if (!m || !out) return null_arg("argument");
  return guarded([&] {
    *out = gfx::a_rank(m->matrix);
    return GFX_OK;
  });
}

gfx_status gfx_formula(const char* request, char** result) {
  if (!result) return null_arg("result");
  *result = nullptr;
  return guarded([&] {
    *result = dup_string(gfx::service::formula(parse_request(request)).dump());
    return GFX_OK;
  });
}

gfx_status gfx_construct(const char* request, gfx_matrix** matrix, char** report) {
  if (!matrix || !report) return null_arg("argument");
  *matrix = nullptr;
  *report = nullptr;
  return guarded([&] {
    auto rep = gfx::service::construct(parse_request(request));
    char* text = dup_string(gfx::io::report_to_json(rep).dump());
    *matrix = new (std::nothrow) gfx_matrix{std::move(rep.matrix)};
    if (!*matrix) {
      std::free(text);
      throw std::bad_alloc();
    }
    *report = text;
    return GFX_OK;
  });
}

gfx_status gfx_certify(const gfx_matrix* m, const char* params, char** report) {
  if (!m || !report) return null_arg("argument");
  *report = nullptr;
  return guarded([&] {
    *report = dup_string(gfx::service::certify(m->matrix, parse_request(params)).dump());
    return GFX_OK;
  });
}

gfx_status gfx_oracle(const char* request, char** result) {
  if (!result) return null_arg("result");
  *result = nullptr;
  return guarded([&] {
    *result = dup_string(gfx::service::oracle(parse_request(request)).dump());
    return GFX_OK;
  });
}

gfx_status gfx_oracle_sweep(const char* request, char** csv) {
  if (!csv) return null_arg("csv");
  *csv = nullptr;
  return guarded([&] {
    *csv = dup_string(gfx::service::oracle_sweep(parse_request(request)));
    return GFX_OK;
  });
}

gfx_status gfx_verify(const char* request, char** report) {
  if (!report) return null_arg("report");
  *report = nullptr;
  return guarded([&] {
    const auto req = parse_request(request);
    const auto rep = gfx::service::verify(req);
    const bool all = req.is_object() && req.value("all_checks", false);
    *report = dup_string(gfx::suite_report_to_json(rep, all).dump());
    if (rep.passed()) return GFX_OK;
    return set_error(GFX_VERIFICATION_FAILED, std::to_string(rep.violations()) + " check(s) failed in suite " + rep.suite);
  });
}

gfx_status gfx_tables(const char* request, char** csv) {
  if (!csv) return null_arg("csv");
  *csv = nullptr;
  return guarded([&] {
    *csv = dup_string(gfx::service::tables(parse_request(request)));
    return GFX_OK;
  });
}

}  // extern "C"
