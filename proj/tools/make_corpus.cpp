#include <filesystem>
#include <iostream>

#include "strictcat/corpus.hpp"
#include "strictcat/serialize.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <directory>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& e : strictcat::corpus::entries()) {
    strictcat::write_text_file(dir / (e.name + ".cat"), strictcat::dump(strictcat::to_json(*e.build())));
  }
  for (const auto& m : strictcat::corpus::monoid_objects()) {
    strictcat::write_text_file(dir / (m.name + ".mongpd"), strictcat::dump(strictcat::to_json(m.build())));
  }
  std::cout << "wrote " << strictcat::corpus::entries().size() << " categories and "
            << strictcat::corpus::monoid_objects().size() << " monoid objects to " << dir.string() << "\n";
}
