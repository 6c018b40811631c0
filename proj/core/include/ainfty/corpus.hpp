#pragma once

#include "ainfty/dga.hpp"
#include "ainfty/io.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ainfty {

struct CorpusEntry {
  std::string name;
  FileKind kind;
  std::string description;
};

/// interval, circle, sphere2, torus, heisenberg, abelian3.
const std::vector<CorpusEntry>& corpus();

/// nullptr for an unknown name.
const CorpusEntry* find_corpus_entry(std::string_view name);

/// File text in the entry's own format. Throws std::out_of_range for an
/// unknown name.
std::string corpus_file(std::string_view name);

/// The entry's file, loaded and validated.
DGA corpus_dga(std::string_view name);

}  // namespace ainfty
