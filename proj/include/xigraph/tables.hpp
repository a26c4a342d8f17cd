#pragma once

// Table generation for the four curve families (x0, x1, xpm, xsplit) and
// verification against the embedded gold data.  Rows fan out across N on a
// small thread pool and are emitted in ascending N.

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "xigraph/families.hpp"
#include "xigraph/gold.hpp"
#include "xigraph/groups.hpp"
#include "xigraph/modgraph.hpp"
#include "xigraph/xicore.hpp"

namespace xigraph {

struct TableRow {
  uint32_t n = 0;
  uint64_t g = 0;
  uint64_t pi0 = 0;
  uint64_t p = 0;        // p_plus for xpm
  uint64_t p_minus = 0;  // xpm only
  uint64_t e = 0;
};

inline bool is_table_family(const std::string& f) {
  return f == "x0" || f == "x1" || f == "xpm" || f == "xsplit";
}

inline uint32_t default_gold_max(const std::string& family) {
  if (family == "x0") return 120;
  if (family == "x1") return 100;
  if (family == "xpm") return 60;
  if (family == "xsplit") return 100;
  throw std::invalid_argument("unknown table family: " + family);
}

inline Family table_group_family(const std::string& family) {
  if (family == "x0") return Family::gamma0;
  if (family == "x1") return Family::gamma1;
  if (family == "xpm") return Family::gamma;
  if (family == "xsplit") return Family::split;
  throw std::invalid_argument("unknown table family: " + family);
}

struct GraphCounts {
  uint64_t pi0 = 0, p = 0, e = 0;
};

inline GraphCounts count_graph(const ModularGraph& g) {
  GraphCounts c;
  c.pi0 = component_stats(g).size();
  for (const auto& v : g.vertices)
    (v.kind == VertexKind::parabolic ? c.p : c.e) += 1;
  return c;
}

// One table row; for xpm both conjugations are computed.
inline TableRow compute_table_row(const std::string& family, uint32_t n, bool with_genus = true) {
  RingCtx R(n);
  TableRow row;
  row.n = n;
  SubgroupSpec spec = family_group(table_group_family(family), R);
  if (family == "xpm") {
    GraphCounts plus = count_graph(build_xi(spec, std_conjugation(R)));
    GraphCounts minus = count_graph(build_xi(spec, inv_conjugation(R)));
    row.pi0 = plus.pi0;
    row.p = plus.p;
    row.p_minus = minus.p;
    row.e = plus.e;
  } else {
    GraphCounts c = count_graph(build_xi(spec, std_conjugation(R)));
    row.pi0 = c.pi0;
    row.p = c.p;
    row.e = c.e;
  }
  if (with_genus) row.g = genus(spec).g;
  return row;
}

// Rows for minN..maxN, computed in parallel, returned in ascending N.
inline std::vector<TableRow> compute_table(const std::string& family, uint32_t min_n,
                                           uint32_t max_n, bool with_genus = true,
                                           unsigned threads = 0) {
  if (min_n < 1 || max_n < min_n) throw std::invalid_argument("compute_table: bad range");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<TableRow> rows(max_n - min_n + 1);
  std::atomic<uint32_t> next{min_n};
  std::vector<std::string> errors(threads);
  auto worker = [&](unsigned tid) {
    for (;;) {
      uint32_t n = next.fetch_add(1);
      if (n > max_n) return;
      try {
        rows[n - min_n] = compute_table_row(family, n, with_genus);
      } catch (const std::exception& ex) {
        errors[tid] = "N=" + std::to_string(n) + ": " + ex.what();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (!err.empty()) throw std::runtime_error("compute_table(" + family + ") " + err);
  return rows;
}

struct GoldMismatch {
  std::string family;
  uint32_t n = 0;
  std::string column;
  int64_t expected = 0;
  int64_t got = 0;
  std::string str() const {
    return "(" + family + ", N=" + std::to_string(n) + ", " + column +
           ", expected=" + std::to_string(expected) + ", got=" + std::to_string(got) + ")";
  }
};

// Diff computed rows against gold rows; columns compared are the ones the
// gold table carries.
inline std::vector<GoldMismatch> diff_against_gold(const std::string& family,
                                                   const std::vector<GoldRow>& gold,
                                                   const std::vector<TableRow>& rows,
                                                   bool with_genus) {
  std::vector<GoldMismatch> out;
  auto diff = [&](uint32_t n, const std::string& col, int64_t want, int64_t got) {
    if (want != got) out.push_back({family, n, col, want, got});
  };
  for (size_t i = 0; i < rows.size() && i < gold.size(); ++i) {
    const GoldRow& gr = gold[i];
    const TableRow& cr = rows[i];
    if (gr.n != cr.n) throw std::logic_error("gold/computed rows misaligned");
    if (with_genus) diff(gr.n, "g", gr.g, int64_t(cr.g));
    diff(gr.n, "pi0", gr.pi0, int64_t(cr.pi0));
    if (family == "xpm") {
      diff(gr.n, "p_plus", gr.p, int64_t(cr.p));
      diff(gr.n, "p_minus", gr.p_minus, int64_t(cr.p_minus));
    } else {
      diff(gr.n, "p", gr.p, int64_t(cr.p));
    }
    if (gr.e >= 0) diff(gr.n, "e", gr.e, int64_t(cr.e));
  }
  return out;
}

// Recompute and diff against the embedded gold rows.
inline std::vector<GoldMismatch> verify_against_gold(const std::string& family, uint32_t max_n,
                                                     bool with_genus = true, unsigned threads = 0) {
  std::vector<GoldRow> gold = gold_table(family);
  uint32_t hi = std::min<uint32_t>(max_n, uint32_t(gold.size()));
  gold.resize(hi);
  std::vector<TableRow> rows = compute_table(family, 1, hi, with_genus, threads);
  return diff_against_gold(family, gold, rows, with_genus);
}

}  // namespace xigraph
