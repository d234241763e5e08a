#include "degen/io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

namespace degen {

using json = nlohmann::json;

namespace {

class Doc {
 public:
  explicit Doc(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw Error(ErrorCode::parse, source_ + ": field " + path + ": " + msg);
  }

  json parse(std::string_view text) const {
    try {
      return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      size_t line = 1, col = 1;
      for (size_t p = 0; p + 1 < e.byte && p < text.size(); ++p) {
        if (text[p] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      std::string what = e.what();
      if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
      throw Error(ErrorCode::parse, source_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
  }

  void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : obj.items()) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) fail(join(path, key), "unknown field");
    }
  }

  const json& require(const json& obj, const std::string& path, const char* key) const {
    if (!obj.contains(key)) fail(join(path, key), "missing required field");
    return obj.at(key);
  }

  size_t index(const json& v, const std::string& path, size_t bound) const {
    if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
    const auto i = v.get<uint64_t>();
    if (i >= bound) fail(path, "index " + std::to_string(i) + " out of range (dim " + std::to_string(bound) + ")");
    return static_cast<size_t>(i);
  }

  int integer(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
  }

  std::string string(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }

  Rational rational(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "scalars are strings such as \"-3/4\"");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  LaurentPoly laurent(const json& v, const std::string& path) const {
    if (v.is_string()) return LaurentPoly(rational(v, path));
    if (!v.is_object()) fail(path, "expected a scalar string or a {\"t^k\": \"p/q\"} map");
    static const std::regex key_re(R"(t\^(-?[0-9]+))");
    std::map<int, Rational> terms;
    for (const auto& [key, value] : v.items()) {
      std::smatch m;
      if (!std::regex_match(key, m, key_re)) fail(join(path, key), "exponent keys look like \"t^2\" or \"t^-1\"");
      terms[std::stoi(m[1].str())] += rational(value, join(path, key));
    }
    return LaurentPoly(std::move(terms));
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
  static std::string item(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

template <class Fn>
auto with_context(const Doc& doc, const std::string& path, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse) throw;
    throw Error(e.code(), doc.source() + ": field " + path + ": " + e.what());
  }
}

/// Shared reader for algebra and deformation documents: structure constants
/// are Laurent polynomials in t.
StructureTensor<LaurentPoly> read_tensor(const Doc& doc, const json& root, bool with_order) {
  if (with_order) {
    doc.only_fields(root, "", {"kind", "dim", "basis", "degrees", "unit", "entries", "order"});
  } else {
    doc.only_fields(root, "", {"kind", "dim", "basis", "degrees", "unit", "entries"});
  }
  const AlgebraKind kind =
      with_context(doc, "kind", [&] { return parse_kind(doc.string(doc.require(root, "", "kind"), "kind")); });
  const json& dim_v = doc.require(root, "", "dim");
  if (!dim_v.is_number_unsigned() || dim_v.get<uint64_t>() == 0 || dim_v.get<uint64_t>() > 64) {
    doc.fail("dim", "expected an integer between 1 and 64");
  }
  const size_t dim = dim_v.get<size_t>();
  std::vector<std::string> basis;
  if (root.contains("basis")) {
    const json& b = root.at("basis");
    if (!b.is_array() || b.size() != dim) doc.fail("basis", "expected " + std::to_string(dim) + " names");
    std::set<std::string> seen;
    for (size_t i = 0; i < dim; ++i) {
      basis.push_back(doc.string(b[i], Doc::item("basis", i)));
      if (basis.back().empty() || !seen.insert(basis.back()).second) {
        doc.fail(Doc::item("basis", i), "basis names must be non-empty and distinct");
      }
    }
  }
  std::vector<int> degrees;
  if (root.contains("degrees")) {
    const json& d = root.at("degrees");
    if (!d.is_array() || d.size() != dim) doc.fail("degrees", "expected " + std::to_string(dim) + " integers");
    for (size_t i = 0; i < dim; ++i) degrees.push_back(doc.integer(d[i], Doc::item("degrees", i)));
  } else if (kind == AlgebraKind::graded_associative) {
    doc.fail("degrees", "required for graded_associative");
  }
  std::optional<size_t> unit;
  if (root.contains("unit")) unit = doc.index(root.at("unit"), "unit", dim);
  StructureTensor<LaurentPoly> T =
      with_context(doc, "", [&] { return StructureTensor<LaurentPoly>(kind, dim, degrees, unit, basis); });

  const json& entries = doc.require(root, "", "entries");
  if (!entries.is_array()) doc.fail("entries", "expected an array");
  std::set<std::pair<size_t, size_t>> seen;
  for (size_t e = 0; e < entries.size(); ++e) {
    const std::string path = Doc::item("entries", e);
    const json& entry = entries[e];
    doc.only_fields(entry, path, {"i", "j", "coeffs"});
    const size_t i = doc.index(doc.require(entry, path, "i"), path + ".i", dim);
    const size_t j = doc.index(doc.require(entry, path, "j"), path + ".j", dim);
    const std::pair<size_t, size_t> key =
        kind == AlgebraKind::lie ? std::make_pair(std::min(i, j), std::max(i, j)) : std::make_pair(i, j);
    if (!seen.insert(key).second) doc.fail(path, "product of this pair is already given");
    const json& coeffs = doc.require(entry, path, "coeffs");
    if (!coeffs.is_object()) doc.fail(path + ".coeffs", "expected a map from basis index to scalar");
    for (const auto& [k_text, value] : coeffs.items()) {
      const std::string cpath = path + ".coeffs." + k_text;
      size_t k = dim;
      if (!k_text.empty() && k_text.find_first_not_of("0123456789") == std::string::npos && k_text.size() < 6) {
        k = std::stoul(k_text);
      }
      if (k >= dim) doc.fail(cpath, "keys are basis indices 0.." + std::to_string(dim - 1));
      const LaurentPoly c = doc.laurent(value, cpath);
      with_context(doc, cpath, [&] {
        T.set(i, j, k, c);
        return 0;
      });
    }
  }
  with_context(doc, unit ? "unit" : "entries", [&] {
    T.validate();
    return 0;
  });
  return T;
}

json scalar_json(const LaurentPoly& p) {
  if (p.is_zero() || (p.terms().size() == 1 && p.terms().begin()->first == 0)) return to_string(p.coeff(0));
  json m = json::object();
  for (const auto& [e, c] : p.terms()) m["t^" + std::to_string(e)] = to_string(c);
  return m;
}

json tensor_json(const StructureTensor<LaurentPoly>& T) {
  json root;
  root["kind"] = kind_name(T.kind());
  root["dim"] = T.dim();
  root["basis"] = T.basis();
  if (!T.degrees().empty()) root["degrees"] = T.degrees();
  if (T.unit()) root["unit"] = *T.unit();
  json entries = json::array();
  const size_t n = T.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = T.kind() == AlgebraKind::lie ? i + 1 : 0; j < n; ++j) {
      json coeffs = json::object();
      for (size_t k = 0; k < n; ++k)
        if (!T(i, j, k).is_zero()) coeffs[std::to_string(k)] = scalar_json(T(i, j, k));
      if (coeffs.empty()) continue;
      entries.push_back(json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  root["entries"] = entries;
  return root;
}

std::string directory_of(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  return parent.string();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::io, "write failed for " + path);
}

Algebra parse_algebra(std::string_view text, const std::string& source) {
  const Doc doc(source);
  const StructureTensor<LaurentPoly> T = read_tensor(doc, doc.parse(text), false);
  for (size_t i = 0; i < T.dim(); ++i)
    for (size_t j = 0; j < T.dim(); ++j)
      for (size_t k = 0; k < T.dim(); ++k) {
        const auto& terms = T(i, j, k).terms();
        if (!terms.empty() && (terms.size() > 1 || terms.begin()->first != 0)) {
          doc.fail("entries", "structure constant (" + std::to_string(i) + "," + std::to_string(j) + ";" +
                                  std::to_string(k) + ") depends on t; use a deformation file");
        }
      }
  return T.map([](const LaurentPoly& p) { return p.coeff(0); });
}

Algebra load_algebra(const std::string& path) { return parse_algebra(read_file(path), path); }

std::string serialize_algebra(const Algebra& A) {
  return tensor_json(A.map([](const Rational& c) { return LaurentPoly(c); })).dump(2) + "\n";
}

DeformationFamily parse_deformation(std::string_view text, const std::string& source) {
  const Doc doc(source);
  const json root = doc.parse(text);
  const StructureTensor<LaurentPoly> T = read_tensor(doc, root, true);
  const int order = doc.integer(doc.require(root, "", "order"), "order");
  if (order < 1) doc.fail("order", "must be at least 1");
  for (size_t i = 0; i < T.dim(); ++i)
    for (size_t j = 0; j < T.dim(); ++j)
      for (size_t k = 0; k < T.dim(); ++k) {
        const LaurentPoly& p = T(i, j, k);
        if (p.is_zero()) continue;
        if (p.valuation() < 0) {
          throw Error(ErrorCode::negative_valuation, source + ": field entries: negative power of t in (" +
                                                         std::to_string(i) + "," + std::to_string(j) + ";" +
                                                         std::to_string(k) + ")");
        }
        if (p.degree() > order) doc.fail("entries", "power of t beyond order " + std::to_string(order));
      }
  Algebra base = T.map([](const LaurentPoly& p) { return p.coeff(0); });
  std::vector<Algebra> maps;
  for (int d = 1; d <= order; ++d) {
    Algebra F = T.map([d](const LaurentPoly& p) { return p.coeff(d); });
    F.set_unit(std::nullopt);
    maps.push_back(std::move(F));
  }
  return with_context(doc, "", [&] { return DeformationFamily(std::move(base), std::move(maps), order); });
}

DeformationFamily load_deformation(const std::string& path) { return parse_deformation(read_file(path), path); }

std::string serialize_deformation(const DeformationFamily& D) {
  StructureTensor<LaurentPoly> T = D.base().map([](const Rational& c) { return LaurentPoly(c); });
  const size_t n = T.dim();
  for (int d = 1; d <= D.order(); ++d)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
          const Rational& c = D.map(d)(i, j, k);
          if (sgn(c) != 0) T.set_unchecked(i, j, k, T(i, j, k) + LaurentPoly::monomial(c, d));
        }
  json root = tensor_json(T);
  root["order"] = D.order();
  return root.dump(2) + "\n";
}

WitnessFile parse_witness(std::string_view text, const std::string& source, const std::string& base_dir) {
  const Doc doc(source);
  const json root = doc.parse(text);
  doc.only_fields(root, "", {"id", "from", "to", "g", "basis"});
  WitnessFile out;
  if (root.contains("id")) out.witness.id = doc.string(root.at("id"), "id");
  auto resolve = [&](const char* key) -> std::optional<std::string> {
    if (!root.contains(key)) return std::nullopt;
    const std::filesystem::path p(doc.string(root.at(key), key));
    if (p.is_absolute() || base_dir.empty()) return p.string();
    return (std::filesystem::path(base_dir) / p).lexically_normal().string();
  };
  out.from = resolve("from");
  out.to = resolve("to");
  if (root.contains("g") == root.contains("basis")) doc.fail("g", "give exactly one of \"g\" and \"basis\"");
  const char* key = root.contains("g") ? "g" : "basis";
  const json& rows = root.at(key);
  if (!rows.is_array() || rows.empty()) doc.fail(key, "expected a non-empty array of rows");
  const size_t n = rows.size();
  Matrix<RationalFunction> m(n, n);
  for (size_t r = 0; r < n; ++r) {
    const std::string rpath = Doc::item(key, r);
    if (!rows[r].is_array() || rows[r].size() != n) doc.fail(rpath, "matrix must be square");
    for (size_t c = 0; c < n; ++c) {
      const std::string path = Doc::item(rpath, c);
      const json& e = rows[r][c];
      doc.only_fields(e, path, {"num", "den"});
      const LaurentPoly num = doc.laurent(doc.require(e, path, "num"), path + ".num");
      const LaurentPoly den = e.contains("den") ? doc.laurent(e.at("den"), path + ".den") : LaurentPoly(1);
      if (den.is_zero()) doc.fail(path + ".den", "zero denominator");
      m(r, c) = RationalFunction(num, den);
    }
  }
  if (det(m).is_zero()) throw Error(ErrorCode::singular, source + ": field " + key + ": matrix is singular");
  if (std::string(key) == "g") {
    out.witness.g = std::move(m);
  } else {
    out.witness.g = Witness::from_basis(m, out.witness.id).g;
  }
  return out;
}

WitnessFile load_witness(const std::string& path) { return parse_witness(read_file(path), path, directory_of(path)); }

std::string serialize_witness(const Witness& w, const std::optional<std::string>& from,
                              const std::optional<std::string>& to) {
  json root;
  if (!w.id.empty()) root["id"] = w.id;
  if (from) root["from"] = *from;
  if (to) root["to"] = *to;
  json rows = json::array();
  for (size_t r = 0; r < w.g.rows(); ++r) {
    json row = json::array();
    for (size_t c = 0; c < w.g.cols(); ++c) {
      const RationalFunction& f = w.g(r, c);
      json e{{"num", scalar_json(f.num())}};
      if (!(f.den() == LaurentPoly(1))) e["den"] = scalar_json(f.den());
      row.push_back(e);
    }
    rows.push_back(row);
  }
  root["g"] = rows;
  return root.dump(2) + "\n";
}

}  // namespace degen
