#pragma once

#include <filesystem>

namespace hhbv {

// $HHBV_DATA_DIR when set, else the source tree's data directory.
std::filesystem::path data_dir();

inline std::filesystem::path data_file(const char* name) { return data_dir() / name; }

}  // namespace hhbv
