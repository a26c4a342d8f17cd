#include <catch2/catch_amalgamated.hpp>

#include <cctype>

#include "xigraph/serialize.hpp"
#include "xigraph/tables.hpp"

using namespace xigraph;

namespace {

// Minimal DOT grammar check: graph <id> { (node_stmt | edge_stmt)* }
// with statements of the form id [attrs]; or id -- id [attrs];
bool dot_well_formed(const std::string& s) {
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < s.size() && std::isspace(uint8_t(s[i]))) ++i;
  };
  auto ident = [&]() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(uint8_t(s[i])) || s[i] == '_')) ++i;
    return i > start;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  };
  auto attr_block = [&]() {
    skip_ws();
    if (i >= s.size() || s[i] != '[') return true;  // optional
    ++i;
    bool in_quote = false;
    while (i < s.size()) {
      if (s[i] == '"') in_quote = !in_quote;
      if (s[i] == ']' && !in_quote) {
        ++i;
        return true;
      }
      ++i;
    }
    return false;
  };
  if (!ident()) return false;  // "graph"
  if (!ident()) return false;  // name
  if (!expect('{')) return false;
  for (;;) {
    skip_ws();
    if (i < s.size() && s[i] == '}') {
      ++i;
      skip_ws();
      return i == s.size();
    }
    if (!ident()) return false;
    skip_ws();
    if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '-') {
      i += 2;
      if (!ident()) return false;
    }
    if (!attr_block()) return false;
    if (!expect(';')) return false;
  }
}

}  // namespace

TEST_CASE("json round trip over many computed graphs") {
  int count = 0;
  for (uint32_t n = 1; n <= 13; ++n) {
    RingCtx R(n);
    for (Family f : {Family::full, Family::gamma, Family::gamma1, Family::gamma0, Family::split}) {
      SubgroupSpec spec = family_group(f, R);
      std::vector<Conjugation> conjs = {std_conjugation(R)};
      if (f == Family::full || f == Family::gamma || f == Family::split)
        conjs.push_back(inv_conjugation(R));
      for (const Conjugation& conj : conjs) {
        ModularGraph xi = build_xi(spec, conj);
        GraphDocument doc = make_document(xi, n, family_name(f), "std");
        GraphDocument back = from_json(to_json(doc));
        REQUIRE(back == doc);
        ++count;
      }
    }
  }
  REQUIRE(count >= 100);
}

TEST_CASE("dot output is well formed over the full gold ranges") {
  auto run = [](Family f, bool inv, uint32_t max_n) {
    for (uint32_t n = 1; n <= max_n; ++n) {
      RingCtx R(n);
      ModularGraph xi =
          build_xi(family_group(f, R), inv ? inv_conjugation(R) : std_conjugation(R));
      GraphDocument doc = make_document(xi, n, family_name(f), inv ? "inv" : "std");
      std::string dot = to_dot(doc);
      REQUIRE(dot_well_formed(dot));
      // weight-2 edges drawn doubled
      bool has_w2 = std::any_of(doc.edges.begin(), doc.edges.end(),
                                [](const auto& e) { return e.weight == 2; });
      REQUIRE((dot.find("black:invis:black") != std::string::npos) == has_w2);
    }
  };
  run(Family::gamma0, false, 120);
  run(Family::gamma1, false, 100);
  run(Family::gamma, false, 60);
  run(Family::gamma, true, 60);
  run(Family::split, false, 100);
}

TEST_CASE("text rendering of the gamma1(4) cycle") {
  RingCtx R(4);
  ModularGraph xi = build_xi(family_group(Family::gamma1, R), std_conjugation(R));
  GraphDocument doc = make_document(xi, 4, "gamma1", "std");
  std::string text = to_text(doc);
  CHECK(text.find("1 component") != std::string::npos);
  CHECK(text.find("P-P-P") != std::string::npos);
}
