#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "figureqa/figure.hpp"

namespace testing {

namespace fs = std::filesystem;

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("figureqa_" + tag + "_" + std::to_string(rd()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
}

// Relative path -> file contents for every regular file under root.
inline std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) out[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
  return out;
}

// Hand-built figure of one-point series (bars or pie slices).
inline figureqa::FigureSpec scalar_figure(figureqa::FigureType type, const std::vector<double>& values,
                                          const std::vector<int>& colors) {
  figureqa::FigureSpec spec;
  spec.type = type;
  spec.seed = 12345;
  for (std::size_t i = 0; i < values.size(); ++i)
    spec.series.push_back({colors[i], {static_cast<double>(i)}, {values[i]}, std::nullopt});
  if (figureqa::is_bar(type)) spec.shape = figureqa::ShapeFunction::UniformRandom;
  return spec;
}

inline figureqa::Series curve(int color, std::vector<double> x, std::vector<double> y) {
  return {color, std::move(x), std::move(y), figureqa::ShapeFunction::UniformRandom};
}

}  // namespace testing
