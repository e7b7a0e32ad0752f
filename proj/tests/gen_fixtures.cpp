// Writes the fixture corpus to tests/fixtures/*.json.  Run once from the
// repository root whenever the corpus changes.

#include <fstream>
#include <iostream>

#include "fixture_corpus.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "tests/fixtures";
  for (const auto& s : trop_fixtures::corpus()) {
    const std::string path = dir + "/" + s.name() + ".json";
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << s.to_json().dump(2) << "\n";
    std::cout << path << "\n";
  }
  return 0;
}
