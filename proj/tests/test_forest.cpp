#include "stokes/error.hpp"
#include "stokes/forest.hpp"
#include "stokes/simplify.hpp"

#include "support/helpers.hpp"

#include <doctest.h>

#include <functional>

using namespace stokes;
using testing::L;
using testing::S;

using Names = std::vector<std::string>;

namespace {

// Children by brute force: step every corpus element.
std::vector<LevelDatum> children_by_scan(const std::vector<LevelDatum>& corpus, const LevelDatum& parent,
                                         std::int64_t bound, Mode mode) {
  std::vector<LevelDatum> out;
  for (const LevelDatum& c : corpus)
    if (ramification(c) <= bound && c != parent && step(c, mode).datum == parent) out.push_back(c);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void walk(const TreeNode& node, const std::function<void(const TreeNode&, const TreeNode*)>& visit,
          const TreeNode* parent = nullptr) {
  visit(node, parent);
  for (const TreeNode& c : node.children) walk(c, visit, &node);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("children of the Painleve I datum") {
  CHECK(S(children(L("{5/2}"), 8, Mode::Infinity)) == Names{"{5/3}", "{3/2,5/4}", "{4/3,5/6}", "{5/4,5/8}"});
  CHECK(S(children(LevelDatum(), 3, Mode::Infinity)) == Names{"{3/2}", "{4/3}"});
  CHECK(children(L("{5/2}"), 2, Mode::Infinity).empty());
  CHECK_THROWS_AS(children(L("{5/2}"), 0, Mode::Infinity), InvalidInput);
}

TEST_CASE("second layer below the Painleve I datum") {
  CHECK(S(children(L("{5/3}"), 16, Mode::Infinity)) == Names{"{3/2,5/6}", "{4/3,5/9}", "{5/4,5/12}", "{6/5,1/3}"});
  CHECK(S(children(L("{3/2,5/4}"), 16, Mode::Infinity)) ==
        Names{"{3/2,3/4,5/8}", "{4/3,1/2,5/12}", "{5/4,3/8,5/16}"});
  CHECK(S(children(L("{4/3,5/6}"), 16, Mode::Infinity)) == Names{"{3/2,2/3,5/12}"});
  CHECK(S(children(L("{5/4,5/8}"), 16, Mode::Infinity)) == Names{"{3/2,5/8,5/16}"});
}

TEST_CASE("children agree with a scan of the corpus") {
  const auto corpus = testing::corpus(12, 4);
  const std::vector<LevelDatum> parents{LevelDatum(), L("{5/2}"), L("{7/2}"), L("{2/3}"), L("{5/3}"), L("{2/5}"),
                                        L("{9/2}"), L("{3/2,1/4}"), L("{7/3}")};
  for (const LevelDatum& p : parents)
    for (Mode mode : {Mode::General, Mode::Infinity}) CHECK(children(p, 12, mode) == children_by_scan(corpus, p, 12, mode));
}

TEST_CASE("tree expansion") {
  TreeNode t1 = expand_tree(L("{5/2}"), 1, 8, Mode::Infinity);
  REQUIRE(t1.children.size() == 4);
  CHECK(tree_size(t1) == 5);
  CHECK(t1.balance == 2);
  CHECK(t1.ram == 2);
  CHECK(t1.truncated);

  TreeNode t2 = expand_tree(L("{5/2}"), 2, 9, Mode::Infinity);
  REQUIRE(S(t2.children[0].datum) == "{5/3}");
  Names under;
  for (const TreeNode& c : t2.children[0].children) under.push_back(S(c.datum));
  CHECK(std::find(under.begin(), under.end(), "{3/2,5/6}") != under.end());
  CHECK(std::find(under.begin(), under.end(), "{4/3,5/9}") != under.end());

  TreeNode leaf = expand_tree(LevelDatum(), 0, 10, Mode::General);
  CHECK(leaf.children.empty());
  CHECK(leaf.truncated);
  CHECK(tree_size(leaf) == 1);
}

TEST_CASE("tree edges, ramification and balance") {
  for (Mode mode : {Mode::General, Mode::Infinity}) {
    for (const char* root : {"{}", "{5/2}", "{2/3}", "{7/3}"}) {
      TreeNode t = expand_tree(L(root), 3, 14, mode);
      const LevelDatum final_root = simplify_fully(t.datum, mode).final_state();
      walk(t, [&](const TreeNode& node, const TreeNode* parent) {
        CHECK(node.ram == ramification(node.datum));
        CHECK(node.balance == balance(node.datum));
        CHECK(simplify_fully(node.datum, mode).final_state() == final_root);
        if (!parent) return;
        CHECK(step(node.datum, mode).datum == parent->datum);
        CHECK(node.ram > parent->ram);
        if (mode == Mode::Infinity) CHECK(node.balance == t.balance);
      });
    }
  }
}

TEST_CASE("DOT and JSON export") {
  TreeNode single = expand_tree(L("{5/2}"), 0, 8, Mode::Infinity);
  std::string dot = export_tree(single, TreeFormat::Dot);
  CHECK(dot.rfind("digraph {", 0) == 0);
  CHECK(count(dot, "label=") == 1);
  CHECK(count(dot, "label=\"{5/2}\\nB=2\"") == 1);
  CHECK(count(dot, "->") == 0);

  std::string fig = export_tree(expand_tree(L("{5/2}"), 1, 8, Mode::Infinity), TreeFormat::Dot);
  CHECK(count(fig, "->") == 4);
  CHECK(count(fig, "-> \"{5/2}\"") == 4);
  CHECK(count(fig, "\"{5/3}\" -> \"{5/2}\"") == 1);
  CHECK(fig == export_tree(expand_tree(L("{5/2}"), 1, 8, Mode::Infinity), TreeFormat::Dot));

  CHECK(count(export_tree(expand_tree(LevelDatum(), 0, 1, Mode::General), TreeFormat::Dot), "label=\"∅\\nB=0\"") == 1);

  auto j = nlohmann::json::parse(export_tree(expand_tree(L("{5/2}"), 1, 8, Mode::Infinity), TreeFormat::Json));
  CHECK(j["datum"] == nlohmann::json::parse("[[5,2]]"));
  CHECK(j["ram"] == 2);
  CHECK(j["balance"] == 2);
  CHECK(j["truncated"] == true);
  CHECK(j["children"].size() == 4);
  CHECK(j["children"][0]["datum"] == nlohmann::json::parse("[[5,3]]"));
}

TEST_CASE("children keep appearing as the bound grows") {
  for (const LevelDatum& d : testing::corpus(6, 3)) {
    for (Mode mode : {Mode::General, Mode::Infinity}) {
      std::int64_t r = static_cast<std::int64_t>(ramification(d));
      std::int64_t b = r + 1;
      std::size_t base = children(d, b, mode).size();
      bool grew = false;
      for (std::int64_t k = 1; k <= 2 * r + 8 && !grew; ++k) grew = children(d, b + k, mode).size() > base;
      CHECK_MESSAGE(grew, S(d));
    }
  }
}
