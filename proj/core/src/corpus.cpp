#include "ainfty/corpus.hpp"

#include "ainfty/constructions.hpp"

#include <stdexcept>

namespace ainfty {

namespace {

SimplicialComplex interval() { return SimplicialComplex::closure({"v0", "v1"}, {{0, 1}}); }

SimplicialComplex triangle_boundary() {
  return SimplicialComplex::closure({"v0", "v1", "v2"}, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::closure({"v0", "v1", "v2", "v3"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// 3x3 grid on Z/3 x Z/3, each square cut along its main diagonal.
SimplicialComplex torus_grid() {
  std::vector<std::string> vertices;
  for (int v = 0; v < 9; ++v) vertices.push_back("v" + std::to_string(v));
  auto at = [](std::size_t i, std::size_t j) { return 3 * (i % 3) + (j % 3); };
  std::vector<std::vector<std::size_t>> triangles;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      triangles.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      triangles.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
    }
  return SimplicialComplex::closure(std::move(vertices), triangles);
}

/// Exterior algebra on x, y, z with dz = x ^ y, from the Lie algebra with
/// [e1, e2] = -e3 and the generators renamed.
DGA heisenberg() {
  LieStructure g;
  g.dim = 3;
  g.brackets[{0, 1, 2}] = Rational(-1);
  DGA dga = chevalley_eilenberg_dga(g);
  std::vector<std::vector<std::string>> labels;
  for (int n = 0; n <= dga.space.top(); ++n) {
    labels.emplace_back();
    for (const auto& l : dga.space.labels(n)) {
      if (l == "1") {
        labels.back().push_back(l);
        continue;
      }
      std::string renamed;
      for (char c : l)
        if (c >= '1' && c <= '3') renamed += "xyz"[c - '1'];
      labels.back().push_back(renamed);
    }
  }
  dga.space = GradedVectorSpace(std::move(labels));
  return dga;
}

LieStructure abelian3() {
  LieStructure g;
  g.dim = 3;
  return g;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"interval", FileKind::simplicial_complex, "one edge on two vertices; contractible"},
      {"circle", FileKind::simplicial_complex, "boundary of a triangle"},
      {"sphere2", FileKind::simplicial_complex, "boundary of a tetrahedron"},
      {"torus", FileKind::simplicial_complex, "3x3 grid triangulation: 9 vertices, 27 edges, 18 triangles"},
      {"heisenberg", FileKind::dga, "exterior algebra on x, y, z with dz = x^y (Heisenberg nilmanifold model)"},
      {"abelian3", FileKind::lie_structure, "Chevalley-Eilenberg algebra of the abelian 3-dimensional Lie algebra"},
  };
  return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

std::string corpus_file(std::string_view name) {
  if (name == "interval") return complex_to_json(interval());
  if (name == "circle") return complex_to_json(triangle_boundary());
  if (name == "sphere2") return complex_to_json(tetrahedron_boundary());
  if (name == "torus") return complex_to_json(torus_grid());
  if (name == "heisenberg") return dga_to_json(heisenberg());
  if (name == "abelian3") return lie_to_json(abelian3());
  throw std::out_of_range("unknown corpus entry '" + std::string(name) + "'");
}

DGA corpus_dga(std::string_view name) { return load_dga(corpus_file(name)); }

}  // namespace ainfty
