#include "abdual/corpus.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "abdual/parser.hpp"

namespace abdual {

std::string default_corpus_dir() { return ABDUAL_CORPUS_DIR; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  nlohmann::json manifest = nlohmann::json::parse(read_text_file(dir + "/manifest.json"));
  std::vector<CorpusEntry> out;
  for (const auto& e : manifest) {
    CorpusEntry c;
    c.name = e.at("name").get<std::string>();
    c.path = dir + "/" + e.at("file").get<std::string>();
    c.text = read_text_file(c.path);
    c.framework = parse_framework(c.text);
    if (e.contains("query")) c.query = parse_query(e.at("query").get<std::string>());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace abdual
