#include <gtest/gtest.h>

#include "durfee/document.hpp"
#include "durfee/error.hpp"

using namespace durfee;
using nlohmann::json;

namespace {
KMarkedSymbol of55() {
  return {{{{2}, {2}}, {{3, 3, 2}, {3, 2}}, {{4, 4}, {5}}}, 5, Flavor::Ordinary};
}
}  // namespace

TEST(Document, Fields) {
  const json doc = to_document(of55());
  EXPECT_EQ(doc.at("flavor"), "ordinary");
  EXPECT_EQ(doc.at("d"), 5);
  EXPECT_EQ(doc.at("vectors").size(), 3u);
  EXPECT_EQ(doc.at("vectors")[0].at("alpha"), json::array({2}));
  EXPECT_EQ(doc.at("derived").at("weight"), 55);
  EXPECT_EQ(doc.at("derived").at("ranks"), json::array({-1, 0, 1}));
}

TEST(Document, RoundTripOverCorpora) {
  for (auto f : {Flavor::Ordinary, Flavor::Odd})
    for (int k = 1; k <= 3; ++k)
      for (int n = 0; n <= 12; ++n)
        for (const auto& s : enumerate_kmarked(n, k, f)) {
          const std::string text = render(s);
          const KMarkedSymbol back = from_document(json::parse(text));
          ASSERT_EQ(back, s);
          ASSERT_EQ(render(back), text);
        }
}

TEST(Document, AcceptsWrappedSymbolAndMissingDerived) {
  json doc = to_document(of55());
  EXPECT_EQ(from_document(json{{"symbol", doc}, {"provenance", json::object()}}), of55());
  doc.erase("derived");
  EXPECT_EQ(from_document(doc), of55());
}

TEST(Document, RejectsBadInput) {
  json doc = to_document(of55());
  doc["derived"]["weight"] = 54;
  EXPECT_THROW(from_document(doc), Error);

  doc = to_document(of55());
  doc["vectors"][1]["alpha"] = json::array({2, 3});
  EXPECT_THROW(from_document(doc), Error);

  doc = to_document(of55());
  doc["vectors"][0]["alpha"] = json::array();
  doc.erase("derived");
  EXPECT_THROW(from_document(doc), Error);

  EXPECT_THROW(from_document(json::array()), Error);
  EXPECT_THROW(from_document(json{{"flavor", "ordinary"}, {"d", 1}}), Error);
  EXPECT_THROW(from_document(json{{"flavor", 3}, {"d", 1}, {"vectors", json::array({json{{"alpha", {1}}, {"beta", json::array()}}})}}), Error);
  EXPECT_THROW(from_document(json{{"flavor", "even"}, {"d", 1}, {"vectors", json::array({json{{"alpha", {1}}, {"beta", json::array()}}})}}), Error);
  EXPECT_THROW(from_document(json{{"flavor", "ordinary"}, {"d", "1"}, {"vectors", json::array()}}), Error);
}

TEST(Document, PrettyShowsVectorKFirst) {
  const std::string text = pretty(of55());
  EXPECT_EQ(text,
            "top:    4₃ 4₃ 3₂ 3₂ 2₂ 2₁\n"
            "bottom: 5₃ 3₂ 2₂ 2₁\n"
            "D = 5 (ordinary, weight 55)\n");
  const KMarkedSymbol plain{{{{1, 1, 1}, {}}}, 1, Flavor::Ordinary};
  EXPECT_EQ(pretty(plain), "top:    1 1 1\nbottom:\nD = 1 (ordinary, weight 4)\n");
}
