#include <doctest.h>

#include <algorithm>

#include "colbwt/arrays.hpp"
#include "support/oracles.hpp"
#include "support/toy.hpp"

using namespace colbwt;

TEST_CASE("conjugate array") {
  CHECK(build_ca(std::string_view("GTC")).entries == std::vector<std::size_t>{3, 1, 2});
  CHECK(build_ca(std::string_view("AA")).entries == std::vector<std::size_t>{1, 2});
  CHECK(build_ca(std::string_view("A\x01")).entries == std::vector<std::size_t>{2, 1});
  CHECK(build_ca(std::string_view("ABAB")).entries == std::vector<std::size_t>{1, 3, 2, 4});
}

TEST_CASE("conjugate array matches rotation sort") {
  oracle::Generator gen(21);
  for (int k = 0; k < 500; ++k) {
    const auto s = gen.string(10, 3);
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (std::size_t i = 0; i < s.size(); ++i) rows.emplace_back(oracle::rotate(s, i), i + 1);
    std::sort(rows.begin(), rows.end());
    std::vector<std::size_t> want;
    for (const auto& r : rows) want.push_back(r.second);
    CAPTURE(s);
    CHECK(build_ca(std::string_view(s)).entries == want);
  }
}

TEST_CASE("generalized conjugate array") {
  const auto toy = fixture::toy();
  const auto gca = build_gca(toy, DollarMode::none);
  REQUIRE(gca.entries.size() == 21);
  CHECK(gca.entries[0] == ArrayEntry{5, 3});
  CHECK(gca.entries[1] == ArrayEntry{6, 3});
  CHECK(gca.entries[2] == ArrayEntry{1, 4});

  // CGT, GTC, GT, TCG, TG
  const auto fig = build_gca(StringCollection({"GTC", "GT"}), DollarMode::none);
  CHECK(fig.entries == std::vector<ArrayEntry>{{1, 3}, {1, 1}, {2, 1}, {1, 2}, {2, 2}});

  CHECK(build_gca(StringCollection({"A"}), DollarMode::none).entries.size() == 1);
  CHECK(build_gca(StringCollection({"A"}), DollarMode::shared).entries ==
        std::vector<ArrayEntry>{{1, 2}, {1, 1}});
}

TEST_CASE("generalized suffix array") {
  const auto toy = fixture::toy();
  const auto gsa = build_gsa(toy);
  REQUIRE(gsa.entries.size() == 27);
  const std::vector<ArrayEntry> head{{1, 5}, {2, 3}, {3, 5}, {4, 4}, {5, 6}, {6, 4}};
  CHECK(std::equal(head.begin(), head.end(), gsa.entries.begin()));
  CHECK(gsa.entries[15] == ArrayEntry{6, 1});
  CHECK(build_gsa(StringCollection({"A", "A"})).entries ==
        std::vector<ArrayEntry>{{1, 2}, {2, 2}, {1, 1}, {2, 1}});
  CHECK(build_gsa(toy).entries == gsa.entries);
  CHECK(to_text(std::vector<ArrayEntry>{{1, 5}, {2, 3}}) == "(1,5)\n(2,3)\n");
}

TEST_CASE("suffix array matches naive sort") {
  oracle::Generator gen(22);
  for (int k = 0; k < 500; ++k) {
    const auto c = gen.collection(4, 6, 3);
    const auto cat = concatenate(c, k % 2 == 0, k % 3 == 0);
    std::vector<std::pair<std::vector<Symbol>, std::size_t>> rows;
    for (std::size_t i = 0; i < cat.text.size(); ++i) {
      rows.emplace_back(std::vector<Symbol>(cat.text.begin() + static_cast<long>(i), cat.text.end()), i + 1);
    }
    std::sort(rows.begin(), rows.end());
    std::vector<std::size_t> want;
    for (const auto& r : rows) want.push_back(r.second);
    CHECK(suffix_array(cat.text) == want);
  }
}

TEST_CASE("concatenation layout") {
  const auto cat = concatenate(StringCollection({"AC", "G"}), true, true);
  const Symbol o = cat.byte_offset;
  CHECK(o == 3);
  CHECK(cat.text == std::vector<Symbol>{'A' + o, 'C' + o, 1, 'G' + o, 2, 0});
  CHECK(cat.doc_of == std::vector<std::size_t>{1, 1, 1, 2, 2, 0});
}
