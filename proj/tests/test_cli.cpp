#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "cli_cases.hpp"

namespace {

// Set GPBC_UPDATE_GOLDEN=1 to rewrite the golden files from the current build.
bool updating() {
  const char* flag = std::getenv("GPBC_UPDATE_GOLDEN");
  return flag != nullptr && std::string(flag) == "1";
}

class CliGolden : public ::testing::TestWithParam<cli::Case> {};

TEST_P(CliGolden, MatchesGoldenFile) {
  const auto& c = GetParam();
  const auto result = cli::run(GPBC_CLI_PATH, c.args);
  EXPECT_EQ(result.exit_code, c.exit_code) << result.output;
  EXPECT_EQ(cli::schema_error(c.schema, result.output), "");
  const std::string golden = std::string(GPBC_GOLDEN_DIR) + "/" + c.name + ".txt";
  if (updating()) {
    std::ofstream(golden, std::ios::binary) << result.output;
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(golden)) << golden;
  EXPECT_EQ(result.output, cli::read_file(golden));
}

TEST_P(CliGolden, ByteStable) {
  const auto& c = GetParam();
  EXPECT_EQ(cli::run(GPBC_CLI_PATH, c.args).output, cli::run(GPBC_CLI_PATH, c.args).output);
}

INSTANTIATE_TEST_SUITE_P(Commands, CliGolden, ::testing::ValuesIn(cli::cases()),
                         [](const auto& info) { return info.param.name; });

TEST(CliTest, OutputFileHonorsOutputDir) {
  const auto dir = std::filesystem::temp_directory_path() / "gpbc_cli_test";
  std::filesystem::create_directories(dir);
  const auto target = dir / "petersen.csv";
  std::filesystem::remove(target);
  const std::string env = "GPBC_OUTPUT_DIR='" + dir.string() + "' ";
  const std::string command = env + "'" + GPBC_CLI_PATH + "' graph --n 5 --k 2 --format csv -o petersen.csv";
  ASSERT_EQ(std::system(command.c_str()), 0);
  EXPECT_EQ(cli::read_file(target.string()), cli::run(GPBC_CLI_PATH, "graph --n 5 --k 2 --format csv").output);
}

}  // namespace
