#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abdual/core.hpp"

namespace abdual {

struct CorpusEntry {
  std::string name;
  std::string path;
  std::string text;
  AbductiveFramework framework;
  std::optional<Literal> query;
};

// Directory of the bundled example corpus.
std::string default_corpus_dir();

// Entries listed in <dir>/manifest.json, in manifest order.
std::vector<CorpusEntry> load_corpus(const std::string& dir = default_corpus_dir());

std::string read_text_file(const std::string& path);

}  // namespace abdual
