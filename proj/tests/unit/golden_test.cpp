#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "golden_cases.h"

namespace atsp::testing {
namespace {

TEST(Golden, SvgMatchesFrozenOutput) {
  const std::filesystem::path dir = ATSP_GOLDEN_DIR;
  const bool update = std::getenv("ATSP_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    const std::string svg = render_golden(c);
    if (update) {
      std::ofstream(dir / c.file, std::ios::binary) << svg;
      continue;
    }
    ASSERT_TRUE(std::filesystem::exists(dir / c.file)) << c.file;
    EXPECT_EQ(svg, read_file(dir / c.file)) << c.file;
  }
}

}  // namespace
}  // namespace atsp::testing
