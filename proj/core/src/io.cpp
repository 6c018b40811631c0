#include "ainfty/io.hpp"

#include "ainfty/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace ainfty {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based position of the offending character
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw ParseError(where + ": coefficient must be a string \"p/q\" or \"p\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::size_t as_label(const GradedVectorSpace& space, const json& j, const std::string& where) {
  const std::string label = as_string(j, where);
  auto idx = space.index_of(label);
  if (!idx) throw ParseError(where + ": unknown basis label '" + label + "'");
  return *idx;
}

Element parse_terms(const GradedVectorSpace& space, const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of terms");
  Element e(space.total_dim());
  for (const auto& t : j) {
    const std::size_t idx = as_label(space, member(t, "basis", where), where);
    e[idx] += as_rational(member(t, "coeff", where), where);
  }
  return e;
}

int parse_degree_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(key, &used);
    if (used != key.size() || n < 0) throw std::invalid_argument(key);
    return n;
  } catch (const std::exception&) {
    throw ParseError(where + ": degree key '" + key + "' is not a non-negative integer");
  }
}

ordered_json terms_json(const GradedVectorSpace& space, const Element& e) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (sgn(e[i]) != 0) out.push_back({{"basis", space.label(i)}, {"coeff", to_string(e[i])}});
  return out;
}

}  // namespace

DGA parse_dga(std::string_view text, bool validate) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("DGA file: top level must be an object");

  const json& degrees = member(doc, "degrees", "DGA file");
  if (!degrees.is_object() || degrees.empty()) throw ParseError("degrees: expected a non-empty object");
  std::map<int, std::vector<std::string>> by_degree;
  for (const auto& [key, labels] : degrees.items()) {
    const int n = parse_degree_key(key, "degrees");
    if (!labels.is_array()) throw ParseError("degrees." + key + ": expected a list of labels");
    for (const auto& l : labels) by_degree[n].push_back(as_string(l, "degrees." + key));
  }
  const int top = by_degree.rbegin()->first;
  std::vector<std::vector<std::string>> basis(static_cast<std::size_t>(top + 1));
  for (auto& [n, labels] : by_degree) basis[static_cast<std::size_t>(n)] = std::move(labels);

  DGA dga;
  try {
    dga.space = GradedVectorSpace(std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("degrees: ") + e.what());
  }
  const auto& space = dga.space;
  const std::size_t dim = space.total_dim();

  dga.diff = GradedMap::zero(space, 1);
  std::vector<Matrix> blocks;
  for (int n = 0; n <= top; ++n) blocks.emplace_back(space.dim(n + 1), space.dim(n));
  std::vector<bool> seen(dim, false);
  if (doc.contains("differential")) {
    const json& diff = doc.at("differential");
    if (!diff.is_array()) throw ParseError("differential: expected a list");
    for (const auto& entry : diff) {
      const std::size_t from = as_label(space, member(entry, "from", "differential"), "differential.from");
      const std::string where = "differential[" + space.label(from) + "]";
      if (seen[from]) throw ParseError(where + ": listed twice");
      seen[from] = true;
      const Element image = parse_terms(space, member(entry, "to", where), where);
      const int n = space.degree_of(from);
      for (std::size_t i = 0; i < dim; ++i) {
        if (sgn(image[i]) == 0) continue;
        if (space.degree_of(i) != n + 1)
          throw ParseError(where + ": term '" + space.label(i) + "' is not in degree " + std::to_string(n + 1));
        blocks[static_cast<std::size_t>(n)](i - space.offset(n + 1), from - space.offset(n)) = image[i];
      }
    }
  }
  for (int n = 0; n <= top; ++n) dga.diff.set_block(n, std::move(blocks[static_cast<std::size_t>(n)]));

  dga.product = ProductTable(dim);
  if (doc.contains("product")) {
    const json& prod = doc.at("product");
    if (!prod.is_array()) throw ParseError("product: expected a list");
    std::vector<bool> set(dim * dim, false);
    for (const auto& entry : prod) {
      const std::size_t l = as_label(space, member(entry, "left", "product"), "product.left");
      const std::size_t r = as_label(space, member(entry, "right", "product"), "product.right");
      const std::string where = "product[" + space.label(l) + "," + space.label(r) + "]";
      if (set[l * dim + r]) throw ParseError(where + ": listed twice");
      set[l * dim + r] = true;
      dga.product.set(l, r, parse_terms(space, member(entry, "result", where), where));
    }
  }

  if (doc.contains("unit")) {
    const json& u = doc.at("unit");
    if (u.is_string())
      dga.unit = Element::basis(dim, as_label(space, u, "unit"));
    else
      dga.unit = parse_terms(space, u, "unit");
  }

  if (doc.contains("gram")) {
    const json& gram = doc.at("gram");
    if (!gram.is_object()) throw ParseError("gram: expected an object");
    std::vector<Matrix> grams;
    for (int n = 0; n <= top; ++n) grams.push_back(Matrix::identity(space.dim(n)));
    for (const auto& [key, rows] : gram.items()) {
      const int n = parse_degree_key(key, "gram");
      const std::string where = "gram." + key;
      if (n > top) throw ParseError(where + ": degree out of range");
      const std::size_t d = space.dim(n);
      if (!rows.is_array() || rows.size() != d) throw ParseError(where + ": expected " + std::to_string(d) + " rows");
      Matrix g(d, d);
      for (std::size_t i = 0; i < d; ++i) {
        if (!rows[i].is_array() || rows[i].size() != d)
          throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(d) + " entries");
        for (std::size_t j = 0; j < d; ++j) g(i, j) = as_rational(rows[i][j], where);
      }
      grams[static_cast<std::size_t>(n)] = std::move(g);
    }
    dga.form = GradedBilinearForm(std::move(grams));
  } else {
    dga.form = GradedBilinearForm::identity(space);
  }

  if (validate) require_valid(dga);
  return dga;
}

std::string dga_to_json(const DGA& dga) {
  const auto& space = dga.space;
  ordered_json doc;
  ordered_json degrees = ordered_json::object();
  for (int n = 0; n <= space.top(); ++n) degrees[std::to_string(n)] = space.labels(n);
  doc["degrees"] = degrees;

  ordered_json diff = ordered_json::array();
  for (std::size_t i = 0; i < dga.dim(); ++i) {
    const Element di = dga.d(dga.basis(i));
    if (!di.is_zero()) diff.push_back({{"from", space.label(i)}, {"to", terms_json(space, di)}});
  }
  doc["differential"] = diff;

  ordered_json prod = ordered_json::array();
  for (std::size_t i = 0; i < dga.dim(); ++i)
    for (std::size_t j = 0; j < dga.dim(); ++j) {
      if (dga.product.terms(i, j).empty()) continue;
      prod.push_back({{"left", space.label(i)}, {"right", space.label(j)},
                      {"result", terms_json(space, dga.product.get(i, j))}});
    }
  doc["product"] = prod;

  if (dga.unit) {
    const auto deg = homogeneous_degree(space, *dga.unit);
    std::optional<std::size_t> single;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < dga.dim(); ++i)
      if (sgn((*dga.unit)[i]) != 0) {
        ++nonzero;
        if ((*dga.unit)[i] == 1) single = i;
      }
    if (deg && nonzero == 1 && single)
      doc["unit"] = space.label(*single);
    else
      doc["unit"] = terms_json(space, *dga.unit);
  }

  if (!dga.form.is_identity()) {
    ordered_json gram = ordered_json::object();
    for (int n = 0; n <= space.top(); ++n) {
      const Matrix& g = dga.form.gram(n);
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < g.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(to_string(g(i, j)));
        rows.push_back(row);
      }
      gram[std::to_string(n)] = rows;
    }
    doc["gram"] = gram;
  }
  return doc.dump(2) + "\n";
}

SimplicialComplex parse_complex(std::string_view text) {
  const json doc = parse_json(text);
  const json& vertices = member(doc, "vertices", "complex file");
  const json& simplices = member(doc, "simplices", "complex file");
  if (!vertices.is_array() || vertices.empty()) throw ParseError("vertices: expected a non-empty list");
  if (!simplices.is_array()) throw ParseError("simplices: expected a list");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (const auto& v : vertices) {
    const std::string l = as_string(v, "vertices");
    if (!index.emplace(l, labels.size()).second) throw ParseError("vertices: duplicate label '" + l + "'");
    labels.push_back(l);
  }
  std::vector<std::vector<std::size_t>> gens;
  for (const auto& s : simplices) {
    if (!s.is_array() || s.empty()) throw ParseError("simplices: each simplex must be a non-empty list");
    std::vector<std::size_t> simplex;
    for (const auto& v : s) {
      const std::string l = as_string(v, "simplices");
      auto it = index.find(l);
      if (it == index.end()) throw ParseError("simplices: unknown vertex '" + l + "'");
      simplex.push_back(it->second);
    }
    gens.push_back(std::move(simplex));
  }
  try {
    return SimplicialComplex::closure(std::move(labels), gens);
  } catch (const InvalidComplex& e) {
    throw ParseError(std::string("simplices: ") + e.what());
  }
}

std::string complex_to_json(const SimplicialComplex& k) {
  ordered_json doc;
  doc["vertices"] = k.vertices;
  // Maximal simplices only.
  ordered_json simplices = ordered_json::array();
  for (const auto& s : k.simplices) {
    bool maximal = true;
    for (const auto& t : k.simplices)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    ordered_json simplex = ordered_json::array();
    for (auto v : s) simplex.push_back(k.vertices[v]);
    simplices.push_back(simplex);
  }
  doc["simplices"] = simplices;
  return doc.dump(2) + "\n";
}

LieStructure parse_lie(std::string_view text) {
  const json doc = parse_json(text);
  const json& dim = member(doc, "dim", "Lie file");
  if (!dim.is_number_integer() || dim.get<long long>() < 0) throw ParseError("dim: expected a non-negative integer");
  LieStructure g;
  g.dim = dim.get<std::size_t>();
  if (doc.contains("brackets")) {
    const json& br = doc.at("brackets");
    if (!br.is_array()) throw ParseError("brackets: expected a list");
    for (const auto& b : br) {
      auto index = [&](const char* key) {
        const json& v = member(b, key, "brackets");
        if (!v.is_number_integer()) throw ParseError(std::string("brackets.") + key + ": expected an integer");
        const long long x = v.get<long long>();
        if (x < 1 || static_cast<std::size_t>(x) > g.dim)
          throw ParseError(std::string("brackets.") + key + ": index out of range 1.." + std::to_string(g.dim));
        return static_cast<std::size_t>(x - 1);
      };
      const std::size_t i = index("i");
      const std::size_t j = index("j");
      const std::size_t k = index("k");
      if (i >= j) throw ParseError("brackets: entries must have i < j");
      const Rational c = as_rational(member(b, "c", "brackets"), "brackets.c");
      if (!g.brackets.emplace(std::array<std::size_t, 3>{i, j, k}, c).second)
        throw ParseError("brackets: duplicate entry");
    }
  }
  return g;
}

std::string lie_to_json(const LieStructure& g) {
  ordered_json doc;
  doc["dim"] = g.dim;
  ordered_json br = ordered_json::array();
  for (const auto& [key, c] : g.brackets) {
    if (sgn(c) == 0) continue;
    br.push_back({{"i", key[0] + 1}, {"j", key[1] + 1}, {"k", key[2] + 1}, {"c", to_string(c)}});
  }
  doc["brackets"] = br;
  return doc.dump(2) + "\n";
}

FileKind detect_kind(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("top level must be a JSON object");
  if (doc.contains("degrees")) return FileKind::dga;
  if (doc.contains("simplices")) return FileKind::simplicial_complex;
  if (doc.contains("brackets") || doc.contains("dim")) return FileKind::lie_structure;
  throw ParseError("unrecognised file: expected 'degrees', 'simplices' or 'brackets'");
}

DGA load_dga(std::string_view text, bool validate) {
  switch (detect_kind(text)) {
    case FileKind::dga:
      return parse_dga(text, validate);
    case FileKind::simplicial_complex:
      return simplicial_cochain_dga(parse_complex(text));
    case FileKind::lie_structure:
      return chevalley_eilenberg_dga(parse_lie(text), validate);
  }
  throw ParseError("unreachable file kind");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ainfty
