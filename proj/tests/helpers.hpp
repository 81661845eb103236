#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef ONTOKG_DATA_DIR
#define ONTOKG_DATA_DIR "data"
#endif

namespace testing {

inline std::string data_path(const std::string& rel) {
  return (std::filesystem::path(ONTOKG_DATA_DIR) / rel).string();
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ontokg_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace testing
