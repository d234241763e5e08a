#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "degen/degen.h"

namespace {

constexpr int kOk = 0;
constexpr int kCheckedFailure = 2;
constexpr int kUsage = 3;

struct Failed {
  int code;
};

// Errors about the input itself exit 3; mathematical failures exit 2.
int exit_code_for(dg_status s) {
  switch (s) {
    case DG_ERR_PARSE:
    case DG_ERR_IO:
    case DG_ERR_INVALID_ARGUMENT:
    case DG_ERR_DIMENSION_MISMATCH:
    case DG_ERR_CAP_EXCEEDED:
    case DG_ERR_BOUNDS_INSUFFICIENT:
    case DG_ERR_DEGREE_MIXING:
    case DG_ERR_NEGATIVE_VALUATION:
    case DG_ERR_NO_UNIT:
    case DG_ERR_SINGULAR:
      return kUsage;
    default:
      return kCheckedFailure;
  }
}

void ok(dg_status s) {
  if (s == DG_OK) return;
  std::cerr << "degen: " << dg_status_name(s) << ": " << dg_last_error() << "\n";
  throw Failed{exit_code_for(s)};
}

struct CString {
  char* p = nullptr;
  ~CString() { dg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using Algebra = std::unique_ptr<dg_algebra, decltype(&dg_algebra_free)>;
using WitnessPtr = std::unique_ptr<dg_witness, decltype(&dg_witness_free)>;
using Deformation = std::unique_ptr<dg_deformation, decltype(&dg_deformation_free)>;

Algebra load(const std::string& path) {
  dg_algebra* a = nullptr;
  ok(dg_algebra_load(path.c_str(), &a));
  return Algebra(a, dg_algebra_free);
}

void print(const CString& s) { std::cout << s.str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of algebra degenerations, deformations and Koszul properties"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON reports");
  auto format = [&] { return json ? DG_FORMAT_JSON : DG_FORMAT_TEXT; };

  std::string file;

  auto* check = app.add_subcommand("check", "Check the Jacobi or associativity identities");
  check->add_option("file", file, "Algebra file")->required();

  auto* classify = app.add_subcommand("classify", "Classify a 3-dimensional Lie algebra");
  classify->add_option("file", file, "Algebra file")->required();

  auto* cohomology = app.add_subcommand("cohomology", "Dimension of a cohomology group");
  std::string theory = "lie";
  size_t degree = 2;
  std::optional<int> internal_degree;
  size_t max_dim = 0;
  cohomology->add_option("file", file, "Algebra file")->required();
  cohomology->add_option("--theory", theory, "lie or hochschild")->check(CLI::IsMember({"lie", "hochschild"}));
  cohomology->add_option("--degree", degree, "Cohomological degree");
  cohomology->add_option("--internal-degree", internal_degree, "Internal degree (graded hochschild)");
  cohomology->add_option("--max-dim", max_dim, "Raise the hochschild size cap");

  auto* degenerate = app.add_subcommand("degenerate", "Verify a degeneration witness or run the obstruction battery");
  std::string from, to, witness, emit;
  int order = 8;
  degenerate->add_option("--from", from, "Algebra that degenerates");
  degenerate->add_option("--to", to, "Limit algebra");
  degenerate->add_option("--witness", witness, "Witness file");
  degenerate->add_option("--order", order, "Truncation order M of the emitted deformation");
  degenerate->add_option("--emit-deformation", emit, "Write the deformation family to this path");

  auto* koszul = app.add_subcommand("koszul", "Decide N-Koszulity up to bounds");
  int N = 2, max_i = 5, max_j = -1;
  koszul->add_option("file", file, "Graded algebra file")->required();
  koszul->add_option("--N", N, "N")->check(CLI::Range(2, 64));
  koszul->add_option("--max-i", max_i, "Homological bound s")->check(CLI::Range(0, 32));
  koszul->add_option("--max-j", max_j, "Internal degree bound d (default n(s))");

  auto* deform = app.add_subcommand("deform-verify", "Verify a truncated deformation family");
  bool l2 = false;
  deform->add_option("file", file, "Deformation file")->required();
  deform->add_flag("--l2-rigidity", l2, "Also build the L2 rigidity certificate");

  auto* diagram = app.add_subcommand("diagram", "Degeneration diagram of the 3-dimensional Lie algebras");
  std::string alphas;
  diagram->add_option("--alphas", alphas, "Extra L4 parameters, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      Algebra a = load(file);
      int passed = 0;
      CString r;
      ok(dg_check(a.get(), format(), &passed, &r.p));
      print(r);
      return passed ? kOk : kCheckedFailure;
    }
    if (classify->parsed()) {
      Algebra a = load(file);
      if (dg_algebra_dim(a.get()) != 3) {
        std::cerr << "degen: classify needs a 3-dimensional Lie algebra\n";
        return kUsage;
      }
      CString r;
      ok(dg_classify(a.get(), format(), &r.p));
      print(r);
      return kOk;
    }
    if (cohomology->parsed()) {
      Algebra a = load(file);
      size_t dim = 0;
      ok(dg_cohomology(a.get(), theory.c_str(), degree, internal_degree ? &*internal_degree : nullptr, max_dim, &dim));
      if (json) {
        std::cout << "{\n  \"degree\": " << degree << ",\n  \"dim\": " << dim;
        if (internal_degree) std::cout << ",\n  \"internal_degree\": " << *internal_degree;
        std::cout << ",\n  \"theory\": \"" << theory << "\"\n}\n";
      } else {
        std::cout << theory << " H^" << degree;
        if (internal_degree) std::cout << "_(" << *internal_degree << ")";
        std::cout << " = " << dim << "\n";
      }
      return kOk;
    }
    if (degenerate->parsed()) {
      std::optional<WitnessPtr> w;
      if (!witness.empty()) {
        dg_witness* raw = nullptr;
        CString wfrom, wto;
        ok(dg_witness_load(witness.c_str(), &raw, &wfrom.p, &wto.p));
        w.emplace(raw, dg_witness_free);
        if (from.empty()) from = wfrom.str();
        if (to.empty()) to = wto.str();
      }
      if (from.empty() || to.empty()) {
        std::cerr << "degen: degenerate needs --from and --to (or a witness naming them)\n";
        return kUsage;
      }
      Algebra A = load(from), B = load(to);
      if (!w) {
        int refuted = 0;
        CString r;
        ok(dg_obstruction_battery(A.get(), B.get(), format(), &refuted, &r.p));
        print(r);
        return refuted ? kCheckedFailure : kOk;
      }
      int accepted = 0;
      CString r;
      ok(dg_verify_witness(A.get(), B.get(), w->get(), format(), &accepted, &r.p));
      print(r);
      if (!accepted) return kCheckedFailure;
      if (!emit.empty()) {
        dg_deformation* raw = nullptr;
        ok(dg_witness_to_deformation(A.get(), B.get(), w->get(), order, &raw));
        Deformation d(raw, dg_deformation_free);
        CString text;
        ok(dg_deformation_serialize(d.get(), &text.p));
        std::ofstream out(emit, std::ios::binary);
        out << text.str();
        if (!out) {
          std::cerr << "degen: cannot write " << emit << "\n";
          return kUsage;
        }
        if (!json) std::cout << "deformation written to " << emit << " (order " << order << ")\n";
      }
      return kOk;
    }
    if (koszul->parsed()) {
      Algebra a = load(file);
      dg_koszul_verdict v = DG_KOSZUL_UP_TO_BOUNDS;
      CString r;
      ok(dg_koszul(a.get(), N, max_i, max_j, format(), &v, &r.p));
      print(r);
      switch (v) {
        case DG_KOSZUL_UP_TO_BOUNDS: return kOk;
        case DG_KOSZUL_NOT_KOSZUL: return kCheckedFailure;
        case DG_KOSZUL_BOUNDS_INSUFFICIENT: return kUsage;
      }
      return kUsage;
    }
    if (deform->parsed()) {
      dg_deformation* raw = nullptr;
      ok(dg_deformation_load(file.c_str(), &raw));
      Deformation d(raw, dg_deformation_free);
      int passed = 0;
      CString r;
      ok(dg_verify_deformation(d.get(), format(), &passed, &r.p));
      print(r);
      if (!passed) return kCheckedFailure;
      if (l2) {
        int complete = 0;
        CString c;
        ok(dg_l2_rigidity(d.get(), format(), &complete, &c.p));
        print(c);
        return complete ? kOk : kCheckedFailure;
      }
      return kOk;
    }
    if (diagram->parsed()) {
      size_t inconclusive = 0;
      CString r;
      ok(dg_diagram(alphas.c_str(), format(), &inconclusive, &r.p));
      print(r);
      return inconclusive == 0 ? kOk : kCheckedFailure;
    }
  } catch (const Failed& f) {
    return f.code;
  }
  return kUsage;
}
