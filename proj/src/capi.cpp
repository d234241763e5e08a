#include <cstring>
#include <sstream>
#include <string>

#include "degen/cohomology.hpp"
#include "degen/degen.h"
#include "degen/io.hpp"
#include "degen/koszul.hpp"
#include "degen/lie3.hpp"
#include "report.hpp"

struct dg_algebra {
  degen::Algebra value;
};
struct dg_witness {
  degen::Witness value;
};
struct dg_deformation {
  degen::DeformationFamily value;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dg_status to_status(degen::ErrorCode code) { return static_cast<dg_status>(static_cast<int>(code) + 1); }

template <class Fn>
dg_status guarded(Fn fn) {
  try {
    fn();
    last_error.clear();
    return DG_OK;
  } catch (const degen::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return DG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw degen::Error(degen::ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

void emit(char** report, const std::string& text) {
  if (report) *report = copy_string(text);
}

bool is_json(dg_format f) { return f == DG_FORMAT_JSON; }

}  // namespace

extern "C" {

const char* dg_last_error(void) { return last_error.c_str(); }

const char* dg_status_name(dg_status status) {
  if (status == DG_OK) return "Ok";
  if (status == DG_ERR_INTERNAL) return "Internal";
  if (status < DG_ERR_PARSE || status > DG_ERR_WITNESS_REJECTED) return "Unknown";
  return degen::error_code_name(static_cast<degen::ErrorCode>(static_cast<int>(status) - 1));
}

void dg_string_free(char* s) { std::free(s); }

dg_status dg_algebra_load(const char* path, dg_algebra** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new dg_algebra{degen::load_algebra(path)};
  });
}

dg_status dg_algebra_parse(const char* text, dg_algebra** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new dg_algebra{degen::parse_algebra(text)};
  });
}

dg_status dg_algebra_serialize(const dg_algebra* a, char** out) {
  return guarded([&] {
    require(a, "algebra");
    require(out, "out");
    *out = copy_string(degen::serialize_algebra(a->value));
  });
}

size_t dg_algebra_dim(const dg_algebra* a) { return a ? a->value.dim() : 0; }

void dg_algebra_free(dg_algebra* a) { delete a; }

dg_status dg_check(const dg_algebra* a, dg_format format, int* passed, char** report) {
  return guarded([&] {
    require(a, "algebra");
    const auto r = degen::check_identities(a->value);
    if (passed) *passed = r.passed ? 1 : 0;
    emit(report, degen::report::identities(a->value, r, is_json(format)));
  });
}

dg_status dg_classify(const dg_algebra* a, dg_format format, char** report) {
  return guarded([&] {
    require(a, "algebra");
    emit(report, degen::report::label(degen::classify3(a->value), is_json(format)));
  });
}

dg_status dg_cohomology(const dg_algebra* a, const char* theory, size_t degree, const int* internal_degree,
                        size_t max_dim, size_t* dim) {
  return guarded([&] {
    require(a, "algebra");
    require(theory, "theory");
    require(dim, "dim");
    degen::CohomologyCaps caps;
    if (max_dim) caps.max_dim = max_dim;
    const std::string t = theory;
    if (t == "lie") {
      if (internal_degree) {
        throw degen::Error(degen::ErrorCode::invalid_argument, "internal degrees apply to hochschild only");
      }
      if (a->value.kind() != degen::AlgebraKind::lie) {
        throw degen::Error(degen::ErrorCode::invalid_argument, "lie cohomology needs a lie algebra");
      }
      *dim = degen::lie_h_dim(a->value, degree, caps);
    } else if (t == "hochschild") {
      if (a->value.kind() == degen::AlgebraKind::lie) {
        throw degen::Error(degen::ErrorCode::invalid_argument, "hochschild cohomology needs an associative algebra");
      }
      *dim = internal_degree ? degen::hochschild_h_dim(a->value, degree, *internal_degree, caps)
                             : degen::hochschild_h_dim(a->value, degree, caps);
    } else {
      throw degen::Error(degen::ErrorCode::invalid_argument, "unknown theory '" + t + "'");
    }
  });
}

dg_status dg_witness_load(const char* path, dg_witness** out, char** from_path, char** to_path) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    degen::WitnessFile f = degen::load_witness(path);
    if (from_path) *from_path = f.from ? copy_string(*f.from) : nullptr;
    if (to_path) *to_path = f.to ? copy_string(*f.to) : nullptr;
    *out = new dg_witness{std::move(f.witness)};
  });
}

dg_witness* dg_witness_scaling(size_t n) { return new dg_witness{degen::Witness::scaling(n)}; }

void dg_witness_free(dg_witness* w) { delete w; }

dg_status dg_verify_witness(const dg_algebra* from, const dg_algebra* to, const dg_witness* g, dg_format format,
                            int* accepted, char** report) {
  return guarded([&] {
    require(from, "from");
    require(to, "to");
    require(g, "witness");
    const auto v = degen::verify_witness(from->value, to->value, g->value);
    if (accepted) *accepted = v.accepted ? 1 : 0;
    emit(report, degen::report::witness(from->value, v, g->value.id, is_json(format)));
  });
}

dg_status dg_witness_to_deformation(const dg_algebra* from, const dg_algebra* to, const dg_witness* g, int order,
                                    dg_deformation** out) {
  return guarded([&] {
    require(from, "from");
    require(to, "to");
    require(g, "witness");
    require(out, "out");
    *out = new dg_deformation{degen::witness_to_deformation(from->value, to->value, g->value, order)};
  });
}

dg_status dg_obstruction_battery(const dg_algebra* from, const dg_algebra* to, dg_format format, int* refuted,
                                 char** report) {
  return guarded([&] {
    require(from, "from");
    require(to, "to");
    const auto r = degen::obstruction_battery(from->value, to->value);
    if (refuted) *refuted = r.refuted() ? 1 : 0;
    emit(report, degen::report::battery(r, is_json(format)));
  });
}

dg_status dg_deformation_load(const char* path, dg_deformation** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new dg_deformation{degen::load_deformation(path)};
  });
}

dg_status dg_deformation_serialize(const dg_deformation* d, char** out) {
  return guarded([&] {
    require(d, "deformation");
    require(out, "out");
    *out = copy_string(degen::serialize_deformation(d->value));
  });
}

void dg_deformation_free(dg_deformation* d) { delete d; }

dg_status dg_verify_deformation(const dg_deformation* d, dg_format format, int* passed, char** report) {
  return guarded([&] {
    require(d, "deformation");
    const auto r = degen::verify_deformation(d->value);
    std::optional<degen::LeadingAnalysis> lead;
    if (!d->value.is_trivial()) lead = degen::leading_analysis(d->value);
    const degen::FiberInvariants fiber = degen::fiber_invariants(d->value);
    if (passed) *passed = r.passed ? 1 : 0;
    emit(report, degen::report::deformation(d->value, r, lead, fiber, is_json(format)));
  });
}

dg_status dg_l2_rigidity(const dg_deformation* d, dg_format format, int* complete, char** report) {
  return guarded([&] {
    require(d, "deformation");
    const auto c = degen::l2_rigidity(d->value);
    if (complete) *complete = c.complete() ? 1 : 0;
    emit(report, degen::report::rigidity(c, is_json(format)));
  });
}

dg_status dg_koszul(const dg_algebra* a, int N, int max_i, int max_j, dg_format format, dg_koszul_verdict* verdict,
                    char** report) {
  return guarded([&] {
    require(a, "algebra");
    if (max_i < 0) throw degen::Error(degen::ErrorCode::invalid_argument, "max_i must be non-negative");
    const degen::GradedAlgebra A(a->value);
    const int d = max_j < 0 ? degen::jump(max_i, N) : max_j;
    const degen::TorTable t = degen::tor_dims(A, max_i, d);
    const degen::KoszulVerdict v = degen::koszul_verdict(t, N);
    if (verdict) *verdict = static_cast<dg_koszul_verdict>(v.kind);
    emit(report, degen::report::koszul(v, t, is_json(format)));
  });
}

dg_status dg_diagram(const char* alphas, dg_format format, size_t* inconclusive, char** report) {
  return guarded([&] {
    std::vector<degen::Rational> list;
    if (alphas && *alphas) {
      std::stringstream ss(alphas);
      std::string item;
      while (std::getline(ss, item, ',')) list.push_back(degen::parse_rational(item));
    }
    const degen::Diagram d = degen::degeneration_diagram(list);
    if (inconclusive) *inconclusive = d.inconclusive_count();
    emit(report, degen::report::diagram(d, is_json(format)));
  });
}

}  // extern "C"
