#include "cicy/dataset.hpp"
#include "cicy/errors.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>

namespace cicy {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_dataset(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected a parse error";
  return 0;
}

std::string error_message(std::string_view text) {
  try {
    parse_dataset(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error";
  return {};
}

TEST(ParseDataset, Quintic) {
  const auto records = parse_dataset("config quintic\ndims 4\nrow 5\nend\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "quintic");
  EXPECT_EQ(records[0].cfg, testing::quintic());
  EXPECT_FALSE(records[0].hodge.has_value());
  EXPECT_TRUE(records[0].assume_favourable);
}

TEST(ParseDataset, Bicubic) {
  const auto records = parse_dataset("config bicubic\ndims 2 2\nrow 3\nrow 3\nend");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].cfg, testing::bicubic());
}

TEST(ParseDataset, CommentsBlankLinesAndHodge) {
  const auto records = parse_dataset(
      "# leading comment\n\n"
      "config a   # trailing\n"
      "dims 4\n"
      "row 5\n"
      "hodge 1 101\n"
      "end\n"
      "\n"
      "config b\n"
      "dims 1 1 1 1\nrow 2\nrow 2\nrow 2\nrow 2\nend\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].name, "a");
  ASSERT_TRUE(records[0].hodge);
  EXPECT_EQ(*records[0].hodge, (HodgePair{1, 101}));
  EXPECT_EQ(records[1].cfg, testing::tetraquadric());
}

TEST(ParseDataset, MissingRow) {
  const std::string text = "config bad\ndims 2 2\nrow 3 1\nend\n";
  EXPECT_NE(error_message(text).find("expected 2 rows"), std::string::npos);
  EXPECT_EQ(error_line(text), 4u);
}

// One factor of dimension 2 with a single row is structurally fine; it only
// fails validation.
TEST(ParseDataset, SingleRowWithTwoColumnsParses) {
  const auto records = parse_dataset("config bad\ndims 2\nrow 3 1\nend\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(validate(records[0].cfg).ok());
}

TEST(ParseDataset, StructuralErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("config\n"), 1u);
  EXPECT_EQ(error_line("config a b\n"), 1u);
  EXPECT_EQ(error_line("dims 4\n"), 1u);
  EXPECT_EQ(error_line("config a\ndims 2 2\nrow 1 2\nrow 3\nend\n"), 4u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow five\nend\n"), 3u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow 5x\nend\n"), 3u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow 5\n"), 3u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow 5\nconfig b\n"), 4u);
  EXPECT_EQ(error_line("config a\nrow 5\nend\n"), 2u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow 5\nrow 5\nend\n"), 4u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow 5\nfoo 1\nend\n"), 4u);
  EXPECT_EQ(error_line("config a\ndims 0\nrow 5\nend\n"), 2u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow -5\nend\n"), 3u);
  EXPECT_EQ(error_line("config a\ndims 4\nrow 5\nhodge 1\nend\n"), 4u);
  EXPECT_EQ(error_line("config a\nend\n"), 2u);
}

TEST(ParseDataset, RejectsAllZeroColumn) {
  EXPECT_NE(error_message("config a\ndims 4\nrow 5 0\nend\n").find("all zero"), std::string::npos);
}

TEST(ParseDataset, BundledCorpus) {
  std::ifstream in(CICY_CORPUS);
  ASSERT_TRUE(in);
  const auto records = parse_dataset(in);
  ASSERT_EQ(records.size(), 4u);
  const auto expected = testing::corpus();
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].cfg, expected[i]);
    EXPECT_TRUE(validate(records[i].cfg).ok()) << records[i].name;
  }
}

TEST(WriteDataset, RoundTripsRandomRecords) {
  std::mt19937 rng(5);
  std::vector<ConfigRecord> records;
  for (int i = 0; i < 50; ++i) {
    ConfigRecord rec{"r" + std::to_string(i), testing::random_valid_config(rng, 6, 7, 4), std::nullopt, true};
    if (i % 3 == 0) rec.hodge = HodgePair{i + 1, 2 * i};
    records.push_back(std::move(rec));
  }
  const auto parsed = parse_dataset(write_dataset(records));
  ASSERT_EQ(parsed.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(parsed[i].name, records[i].name);
    EXPECT_EQ(parsed[i].cfg, records[i].cfg);
    EXPECT_EQ(parsed[i].hodge, records[i].hodge);
  }
}

}  // namespace
}  // namespace cicy
