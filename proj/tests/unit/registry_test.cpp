#include <gtest/gtest.h>

#include "sigmavote/errors.hpp"
#include "sigmavote/registry.hpp"

using namespace sigmavote;

TEST(Registry, KnownNames) {
  for (const auto& name : {"borda", "3-approval", "2-approval", "plurality", "optimal-u", "stv:k=3", "dictator:i=0"}) {
    EXPECT_EQ(make_rule(name).name(), name);
  }
  EXPECT_EQ(make_rule("stv", 4).name(), "stv");
  EXPECT_EQ(make_rule(" borda ").name(), "borda");
}

TEST(Registry, Errors) {
  EXPECT_THROW(make_rule("kemeny"), ConfigError);
  EXPECT_THROW(make_rule("stv"), ConfigError);
  EXPECT_THROW(make_rule("stv:k=0"), ConfigError);
  EXPECT_THROW(make_rule("stv:k=x"), ConfigError);
  EXPECT_THROW(make_rule("dictator:i=-1"), ConfigError);
  EXPECT_THROW(make_rules(" , "), ConfigError);
}

TEST(Registry, ListsAndLabels) {
  auto rules = make_rules("borda, plurality,stv", 3);
  ASSERT_EQ(rules.size(), 3u);
  EXPECT_EQ(rules[1].name(), "plurality");
  EXPECT_EQ(standard_rule_names().size(), 5u);
  EXPECT_EQ(display_label("3-approval"), "3-App");
  EXPECT_EQ(display_label("stv:k=2"), "STV");
  EXPECT_EQ(display_label("custom"), "custom");
}
