#include "hhbv/data.hpp"

#include <cstdlib>

namespace hhbv {

std::filesystem::path data_dir()
{
    if (const char* env = std::getenv("HHBV_DATA_DIR"); env && *env) return env;
    return HHBV_DATA_DIR;
}

}  // namespace hhbv
