#include <doctest.h>

#include <algorithm>
#include <set>

#include "colbwt/error.hpp"
#include "colbwt/meta.hpp"
#include "support/oracles.hpp"
#include "support/toy.hpp"

using namespace colbwt;

namespace {

const StringCollection kSix({"ACA", "TGA", "ACA", "GAA", "TGA", "TGA"});

}  // namespace

TEST_CASE("input meta-string") {
  CHECK(input_meta(kSix).str() == "acabcc");
  CHECK(input_meta(StringCollection({"GT", "GT", "GT"})).str() == "aaa");
  CHECK(input_meta(StringCollection({"B", "A"})).str() == "ba");
  CHECK(input_meta(kSix).rank_map.size() == 3);
}

TEST_CASE("output meta-strings") {
  CHECK(output_meta(Variant::dol_ebwt, kSix).str() == "aabccc");
  CHECK(output_meta(Variant::mdol_ebwt, kSix).str() == "acabcc");
  CHECK(output_meta(Variant::mdol_bwt, kSix).str() == "acabcc");
  CHECK(output_meta(Variant::concat_bwt, kSix).str() == "ccacab");
  CHECK(output_meta(Variant::adapted_concat_bwt, kSix).str() == "ccacab");
  CHECK_THROWS_AS(output_meta(Variant::ebwt, kSix), Error);
}

TEST_CASE("bwt star") {
  CHECK(bwt_star(meta_from_letters("acabcc")).str() == "ccacab");
  CHECK(bwt_star(meta_from_letters("aaa")).str() == "aaa");
  CHECK(bwt_star(meta_from_letters("abc")).str() == "cab");

  // No permutation of abc maps to bac.
  std::string t = "abc";
  std::set<std::string> image;
  do {
    image.insert(bwt_star(meta_from_letters(t)).str());
  } while (std::next_permutation(t.begin(), t.end()));
  CHECK(image.count("bac") == 0);

  oracle::Generator gen(71);
  for (int k = 0; k < 200; ++k) {
    std::string s;
    for (char c : gen.string(8, 3)) s.push_back(static_cast<char>('a' + (c == 'A' ? 0 : c == 'C' ? 1 : 2)));
    CHECK(bwt_star(meta_from_letters(s)).str() == oracle::meta_bwt_star(s));
  }
}

TEST_CASE("concatenation order is bwt star of the input order") {
  oracle::Generator gen(72);
  for (int k = 0; k < 300; ++k) {
    const auto c = gen.collection(6, 3, 2);
    const auto t = input_meta(c);
    CHECK(output_meta(Variant::concat_bwt, c).str() == bwt_star(t).str());
    CHECK(output_meta(Variant::mdol_ebwt, c).str() == t.str());
    CHECK(output_meta(Variant::concat_bwt, c).symbols.front() == t.symbols.back());
    auto sorted = t.str();
    std::sort(sorted.begin(), sorted.end());
    CHECK(output_meta(Variant::dol_ebwt, c).str() == sorted);
  }
}

TEST_CASE("simulate order") {
  const auto toy = fixture::toy();
  auto lex = simulate_order(Variant::dol_ebwt, toy, dol_ebwt(toy));
  REQUIRE(lex.has_value());
  std::vector<std::string> items;
  for (std::size_t i : *lex) items.push_back(toy[i - 1]);
  CHECK(std::is_sorted(items.begin(), items.end()));

  CHECK(simulate_order(Variant::mdol_ebwt, toy, mdol_ebwt(toy)) == Permutation{1, 2, 3, 4, 5, 6});

  const auto concat = concat_bwt(toy);
  const auto tau = simulate_order(Variant::concat_bwt, toy, concat);
  REQUIRE(tau.has_value());
  CHECK(mdol_ebwt(toy.permuted(*tau)).text == unify_sentinels(adapt_concat(concat).text));

  CHECK_THROWS_AS(simulate_order(Variant::ebwt, toy, ebwt(toy)), Error);
  Transform bogus{Variant::mdol_ebwt, "nonsense", std::nullopt, std::nullopt};
  CHECK_FALSE(simulate_order(Variant::mdol_ebwt, toy, bogus).has_value());
  CHECK_THROWS_AS(simulate_order(Variant::mdol_ebwt, toy, bogus, 3), Error);

  oracle::Generator gen(73);
  for (int k = 0; k < 200; ++k) {
    const auto c = gen.collection(5, 6, 3);
    for (Variant v : {Variant::dol_ebwt, Variant::mdol_bwt, Variant::concat_bwt, Variant::adapted_concat_bwt}) {
      // The dollar-block order must already realize the target.
      const auto target = apply_variant(v, c);
      const auto order = output_order(v, c);
      std::string want = v == Variant::concat_bwt ? adapt_concat(target).text : target.text;
      CHECK(mdol_ebwt(c.permuted(order)).text == unify_sentinels(want));
    }
  }
}
