#include "hilbgap/hilbgap.h"

#include <cstring>
#include <new>

#include "hilbgap/paper_check.hpp"
#include "hilbgap/report.hpp"

using namespace hilbgap;

struct hm_monoid {
  MonoidInput input;
};

namespace {

thread_local std::string last_error;

hm_status code_of(Error::Kind k) {
  switch (k) {
    case Error::Kind::InvalidInput:
      return HM_INVALID_INPUT;
    case Error::Kind::NotPositive:
      return HM_NOT_POSITIVE;
    case Error::Kind::NotHomogeneous:
      return HM_NOT_HOMOGENEOUS;
    case Error::Kind::DimensionMismatch:
      return HM_DIMENSION_MISMATCH;
    case Error::Kind::CapExceeded:
      return HM_CAP_EXCEEDED;
    case Error::Kind::Overflow:
      return HM_OVERFLOW;
    case Error::Kind::NotStabilized:
      return HM_NOT_STABILIZED;
    case Error::Kind::Certificate:
      return HM_CERTIFICATE;
  }
  return HM_INTERNAL;
}

template <class F>
hm_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    last_error = e.what();
    return code_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HM_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HM_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ReportOptions to_report_options(const hm_options* o) {
  hm_options defaults;
  hm_options_init(&defaults);
  if (!o) o = &defaults;
  ReportOptions r;
  if (o->degree_bound >= 0) r.analysis.degree_bound = o->degree_bound;
  if (o->window >= 0) r.analysis.window = o->window;
  if (o->margin >= 0) r.analysis.margin = o->margin;
  if (o->degree_limit >= 0) r.analysis.degree_limit = o->degree_limit;
  if (o->point_cap >= 0) r.analysis.slices.point_cap = o->point_cap;
  if (o->cycle_cap >= 0) r.cycle_cap = static_cast<std::size_t>(o->cycle_cap);
  r.certificate_bound = o->certificate_bound;
  r.text = o->text != 0;
  return r;
}

hm_status deliver(const Report& r, char** out) {
  *out = copy_string(r.body);
  if (r.partial) {
    last_error = r.message;
    return HM_CAP_EXCEEDED;
  }
  return HM_OK;
}

}  // namespace

extern "C" {

void hm_options_init(hm_options* o) {
  if (!o) return;
  o->degree_bound = -1;
  o->window = -1;
  o->margin = -1;
  o->degree_limit = -1;
  o->certificate_bound = -1;
  o->point_cap = -1;
  o->cycle_cap = -1;
  o->text = 0;
}

const char* hm_last_error(void) { return last_error.c_str(); }

const char* hm_status_name(hm_status s) {
  switch (s) {
    case HM_OK:
      return "ok";
    case HM_INVALID_INPUT:
      return "invalid input";
    case HM_NOT_POSITIVE:
      return "not positive";
    case HM_NOT_HOMOGENEOUS:
      return "not homogeneous";
    case HM_DIMENSION_MISMATCH:
      return "dimension mismatch";
    case HM_CAP_EXCEEDED:
      return "cap exceeded";
    case HM_OVERFLOW:
      return "overflow";
    case HM_NOT_STABILIZED:
      return "not stabilized";
    case HM_CERTIFICATE:
      return "certificate failure";
    case HM_CHECK_FAILED:
      return "check failed";
    case HM_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

hm_status hm_monoid_from_json(const char* json, hm_monoid** out) {
  return guarded([&] {
    if (!json || !out) throw InvalidInput("null argument");
    *out = new hm_monoid{parse_monoid_input(json)};
    return HM_OK;
  });
}

hm_status hm_monoid_from_family(const char* name, int64_t param, hm_monoid** out) {
  return guarded([&] {
    if (!name || !out) throw InvalidInput("null argument");
    MonoidInput in{make_family(name, param), std::nullopt, std::nullopt};
    if (std::string(name) == "gk") in.graph = gk_graph(param);
    *out = new hm_monoid{std::move(in)};
    return HM_OK;
  });
}

hm_status hm_monoid_from_generators(const int64_t* data, size_t rows, size_t cols, hm_monoid** out) {
  return guarded([&] {
    if (!data || !out || rows == 0 || cols == 0) throw InvalidInput("empty generator matrix");
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m(i, j) = data[i * cols + j];
    *out = new hm_monoid{{AffineMonoid::from_generators(m), std::nullopt, std::nullopt}};
    return HM_OK;
  });
}

hm_status hm_monoid_join(const hm_monoid* a, const hm_monoid* b, hm_monoid** out) {
  return guarded([&] {
    if (!a || !b || !out) throw InvalidInput("null argument");
    *out = new hm_monoid{{join(a->input.monoid, b->input.monoid), std::nullopt, std::nullopt}};
    return HM_OK;
  });
}

void hm_monoid_free(hm_monoid* q) { delete q; }

size_t hm_monoid_dim(const hm_monoid* q) { return q ? q->input.monoid.dim() : 0; }
size_t hm_monoid_ambient_dim(const hm_monoid* q) { return q ? q->input.monoid.ambient_dim() : 0; }
size_t hm_monoid_generator_count(const hm_monoid* q) { return q ? q->input.monoid.generators().rows() : 0; }

hm_status hm_monoid_generators(const hm_monoid* q, int64_t* out, size_t capacity) {
  return guarded([&] {
    if (!q || !out) throw InvalidInput("null argument");
    const IntMatrix& g = q->input.monoid.generators();
    if (capacity < g.rows() * g.cols()) throw DimensionMismatch("output buffer too small");
    for (size_t i = 0; i < g.rows(); ++i)
      for (size_t j = 0; j < g.cols(); ++j) out[i * g.cols() + j] = g(i, j);
    return HM_OK;
  });
}

hm_status hm_monoid_contains(const hm_monoid* q, const int64_t* v, size_t len, int* result) {
  return guarded([&] {
    if (!q || !v || !result) throw InvalidInput("null argument");
    if (len != q->input.monoid.ambient_dim()) throw DimensionMismatch("vector length differs from the ambient dimension");
    *result = q->input.monoid.contains(std::span<const std::int64_t>(v, len)) ? 1 : 0;
    return HM_OK;
  });
}

hm_status hm_monoid_to_json(const hm_monoid* q, int text, char** out) {
  return guarded([&] {
    if (!q || !out) throw InvalidInput("null argument");
    ReportOptions o;
    o.text = text != 0;
    return deliver(family_report(q->input.monoid, o), out);
  });
}

hm_status hm_report(const hm_monoid* q, hm_report_kind kind, const hm_options* options, char** out) {
  return guarded([&] {
    if (!q || !out) throw InvalidInput("null argument");
    ReportKind k;
    switch (kind) {
      case HM_REPORT_HILB:
        k = ReportKind::hilb;
        break;
      case HM_REPORT_NORMALIZE:
        k = ReportKind::normalize;
        break;
      case HM_REPORT_HOLES:
        k = ReportKind::holes;
        break;
      case HM_REPORT_COMPARE:
        k = ReportKind::compare;
        break;
      default:
        throw InvalidInput("unknown report kind");
    }
    return deliver(monoid_report(q->input, k, to_report_options(options)), out);
  });
}

hm_status hm_edge_ring_report(const char* graph_json, const hm_options* options, char** out) {
  return guarded([&] {
    if (!graph_json || !out) throw InvalidInput("null argument");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(graph_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("graph must be a JSON object");
    return deliver(edge_ring_report(parse_graph(j), to_report_options(options)), out);
  });
}

hm_status hm_paper_check(hm_progress_fn progress, void* user, int* failed) {
  return guarded([&] {
    int bad = 0;
    run_paper_checks([&](const CriterionResult& r) {
      if (!r.passed) ++bad;
      if (progress) progress(r.id, r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), r.seconds, user);
    });
    if (failed) *failed = bad;
    if (bad) {
      last_error = std::to_string(bad) + " criteria failed";
      return HM_CHECK_FAILED;
    }
    return HM_OK;
  });
}

void hm_string_free(char* s) { delete[] s; }

}  // extern "C"
