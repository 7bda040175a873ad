// Writes the synthetic study corpus: even-numbered curves as point lists,
// odd-numbered ones as chain codes.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "polyapprox/error.hpp"
#include "polyapprox/io.hpp"
#include "polyapprox/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic curve corpus", "make_corpus"};
  std::string out = "data/corpus";
  std::size_t count = 24;
  std::uint64_t seed = polyapprox::kDefaultCorpusSeed;
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--count", count, "Number of curves")->capture_default_str();
  app.add_option("--seed", seed, "Generator seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    std::filesystem::create_directories(out);
    const auto corpus = polyapprox::synthetic_corpus(count, seed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& entry = corpus[i];
      const bool chain = i % 2 == 1;
      const std::filesystem::path path =
          std::filesystem::path(out) / (entry.id + (chain ? ".chn" : ".pts"));
      polyapprox::write_file_atomic(path, chain ? polyapprox::format_chain_file(entry.curve)
                                                : polyapprox::format_point_list(entry.curve.points()));
      std::cout << path.string() << " n=" << entry.curve.size() << '\n';
    }
  } catch (const polyapprox::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
