#pragma once

// Appendix gold tables, transcribed verbatim from the source tables and
// never regenerated programmatically: X0 for N <= 120, X1 for N <= 100,
// X+- for N <= 60, Xsplit for N <= 100.  Columns: g is the genus, pi0 the
// number of real components, p the number of real cusps (p_plus/p_minus for
// the two conjugations of X(N)), e the number of real elliptic points of
// even order where tabulated.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xigraph {

inline constexpr std::string_view kGoldX0Csv = R"csv(family,N,g,pi0,p
x0,1,0,1,1
x0,2,0,1,2
x0,3,0,1,2
x0,4,0,1,3
x0,5,0,1,2
x0,6,0,1,4
x0,7,0,1,2
x0,8,0,1,4
x0,9,0,1,2
x0,10,0,1,4
x0,11,1,1,2
x0,12,0,1,6
x0,13,0,1,2
x0,14,1,1,4
x0,15,1,2,4
x0,16,0,1,4
x0,17,1,1,2
x0,18,0,1,4
x0,19,1,1,2
x0,20,1,1,6
x0,21,1,2,4
x0,22,2,1,4
x0,23,2,1,2
x0,24,1,2,8
x0,25,0,1,2
x0,26,2,1,4
x0,27,1,1,2
x0,28,2,1,6
x0,29,2,1,2
x0,30,3,2,8
x0,31,2,1,2
x0,32,1,1,4
x0,33,3,2,4
x0,34,3,1,4
x0,35,3,2,4
x0,36,1,1,6
x0,37,2,1,2
x0,38,4,1,4
x0,39,3,2,4
x0,40,3,2,8
x0,41,3,1,2
x0,42,5,2,8
x0,43,3,1,2
x0,44,4,1,6
x0,45,3,2,4
x0,46,5,1,4
x0,47,4,1,2
x0,48,3,2,8
x0,49,1,1,2
x0,50,2,1,4
x0,51,5,2,4
x0,52,5,1,6
x0,53,4,1,2
x0,54,4,1,4
x0,55,5,2,4
x0,56,5,2,8
x0,57,5,2,4
x0,58,6,1,4
x0,59,5,1,2
x0,60,7,2,12
x0,61,4,1,2
x0,62,7,1,4
x0,63,5,2,4
x0,64,3,1,4
x0,65,5,2,4
x0,66,9,2,8
x0,67,5,1,2
x0,68,7,1,6
x0,69,7,2,4
x0,70,9,2,8
x0,71,6,1,2
x0,72,5,2,8
x0,73,5,1,2
x0,74,8,1,4
x0,75,5,2,4
x0,76,8,1,6
x0,77,7,2,4
x0,78,11,2,8
x0,79,6,1,2
x0,80,7,2,8
x0,81,4,1,2
x0,82,9,1,4
x0,83,7,1,2
x0,84,11,2,12
x0,85,7,2,4
x0,86,10,1,4
x0,87,9,2,4
x0,88,9,2,8
x0,89,7,1,2
x0,90,11,2,8
x0,91,7,2,4
x0,92,10,1,6
x0,93,9,2,4
x0,94,11,1,4
x0,95,9,2,4
x0,96,9,2,8
x0,97,7,1,2
x0,98,7,1,4
x0,99,9,2,4
x0,100,7,1,6
x0,101,8,1,2
x0,102,15,2,8
x0,103,8,1,2
x0,104,11,2,8
x0,105,13,4,8
x0,106,12,1,4
x0,107,9,1,2
x0,108,10,1,6
x0,109,8,1,2
x0,110,15,2,8
x0,111,11,2,4
x0,112,11,2,8
x0,113,9,1,2
x0,114,17,2,8
x0,115,11,2,4
x0,116,13,1,6
x0,117,11,2,4
x0,118,14,1,4
x0,119,11,2,4
x0,120,17,4,16
)csv";

inline constexpr std::string_view kGoldX1Csv = R"csv(family,N,g,pi0,p
x1,1,0,1,1
x1,2,0,1,2
x1,3,0,1,2
x1,4,0,1,3
x1,5,0,1,4
x1,6,0,1,4
x1,7,0,1,6
x1,8,0,1,6
x1,9,0,1,6
x1,10,0,1,8
x1,11,1,1,10
x1,12,0,1,6
x1,13,2,1,12
x1,14,1,1,12
x1,15,1,1,8
x1,16,2,2,12
x1,17,5,2,16
x1,18,2,1,12
x1,19,7,1,18
x1,20,3,2,12
x1,21,5,1,12
x1,22,6,1,20
x1,23,12,1,22
x1,24,5,2,12
x1,25,12,1,20
x1,26,10,1,24
x1,27,13,1,18
x1,28,10,3,18
x1,29,22,1,28
x1,30,9,1,16
x1,31,26,3,30
x1,32,17,4,24
x1,33,21,2,20
x1,34,21,2,32
x1,35,25,1,24
x1,36,17,3,18
x1,37,40,1,36
x1,38,28,1,36
x1,39,33,1,24
x1,40,25,4,24
x1,41,51,2,40
x1,42,25,1,24
x1,43,57,3,42
x1,44,36,5,30
x1,45,41,1,24
x1,46,45,1,44
x1,47,70,1,46
x1,48,37,4,24
x1,49,69,1,42
x1,50,48,1,40
x1,51,65,2,32
x1,52,55,6,36
x1,53,92,1,52
x1,54,52,1,36
x1,55,81,1,40
x1,56,61,6,36
x1,57,85,2,36
x1,58,78,1,56
x1,59,117,1,58
x1,60,57,4,24
x1,61,126,1,60
x1,62,91,3,60
x1,63,97,3,36
x1,64,93,8,48
x1,65,121,4,48
x1,66,81,2,40
x1,67,155,1,66
x1,68,105,8,48
x1,69,133,1,44
x1,70,97,1,48
x1,71,176,1,70
x1,72,97,6,36
x1,73,187,4,72
x1,74,136,1,72
x1,75,145,1,40
x1,76,136,9,54
x1,77,181,1,60
x1,78,121,1,48
x1,79,222,1,78
x1,80,137,8,48
x1,81,190,1,54
x1,82,171,2,80
x1,83,247,1,82
x1,84,133,6,36
x1,85,225,4,64
x1,86,190,3,84
x1,87,225,1,56
x1,88,181,10,60
x1,89,287,4,88
x1,90,153,1,48
x1,91,265,3,72
x1,92,210,11,66
x1,93,261,3,60
x1,94,231,1,92
x1,95,289,1,72
x1,96,193,8,48
x1,97,345,2,96
x1,98,235,1,84
x1,99,281,2,60
x1,100,231,10,60
)csv";

inline constexpr std::string_view kGoldXpmCsv = R"csv(family,N,g,pi0,p_plus,p_minus
xpm,1,0,1,1,1
xpm,2,0,1,2,1
xpm,3,0,1,2,2
xpm,4,0,1,4,2
xpm,5,0,1,4,4
xpm,6,1,1,6,2
xpm,7,3,1,6,6
xpm,8,5,2,8,4
xpm,9,10,1,6,6
xpm,10,13,2,12,4
xpm,11,26,1,10,10
xpm,12,25,2,8,4
xpm,13,50,1,12,12
xpm,14,49,3,18,6
xpm,15,73,1,8,8
xpm,16,81,4,16,8
xpm,17,133,2,16,16
xpm,18,109,3,18,6
xpm,19,196,1,18,18
xpm,20,169,4,16,8
xpm,21,241,1,12,12
xpm,22,241,5,30,10
xpm,23,375,1,22,22
xpm,24,289,4,16,8
xpm,25,476,1,20,20
xpm,26,421,6,36,12
xpm,27,568,1,18,18
xpm,28,529,6,24,12
xpm,29,806,1,28,28
xpm,30,577,4,24,8
xpm,31,1001,3,30,30
xpm,32,833,8,32,16
xpm,33,1081,2,20,20
xpm,34,1009,8,48,16
xpm,35,1393,1,24,24
xpm,36,1081,6,24,12
xpm,37,1768,1,36,36
xpm,38,1441,9,54,18
xpm,39,1849,1,24,24
xpm,40,1633,8,32,16
xpm,41,2451,2,40,40
xpm,42,1729,6,36,12
xpm,43,2850,3,42,42
xpm,44,2281,10,40,20
xpm,45,2809,1,24,24
xpm,46,2641,11,66,22
xpm,47,3773,1,46,46
xpm,48,2689,8,32,16
xpm,49,4215,1,42,42
xpm,50,3301,10,60,20
xpm,51,4321,2,32,32
xpm,52,3865,12,48,24
xpm,53,5500,1,52,52
xpm,54,3889,9,54,18
xpm,55,5881,1,40,40
xpm,56,4801,12,48,24
xpm,57,6121,2,36,36
xpm,58,5461,14,84,28
xpm,59,7686,1,58,58
xpm,60,5185,8,32,16
)csv";

inline constexpr std::string_view kGoldXsplitCsv = R"csv(family,N,g,pi0,p,e
xsplit,1,0,1,1,1
xsplit,2,0,1,2,1
xsplit,3,0,1,2,2
xsplit,4,0,1,3,2
xsplit,5,0,1,3,3
xsplit,6,0,1,4,2
xsplit,7,0,1,4,2
xsplit,8,1,2,4,2
xsplit,9,1,1,4,2
xsplit,10,1,1,6,3
xsplit,11,2,1,6,2
xsplit,12,3,2,6,4
xsplit,13,2,1,7,3
xsplit,14,3,1,8,2
xsplit,15,4,1,6,6
xsplit,16,9,3,6,2
xsplit,17,7,2,9,3
xsplit,18,7,1,8,2
xsplit,19,9,1,10,2
xsplit,20,10,3,9,6
xsplit,21,9,2,8,4
xsplit,22,10,1,12,2
xsplit,23,15,1,12,2
xsplit,24,17,2,6,4
xsplit,25,22,1,11,3
xsplit,26,15,1,14,3
xsplit,27,28,1,10,2
xsplit,28,21,4,12,4
xsplit,29,26,1,15,3
xsplit,30,16,1,12,6
xsplit,31,30,2,16,2
xsplit,32,49,5,10,2
xsplit,33,25,2,12,4
xsplit,34,28,2,18,3
xsplit,35,27,1,12,6
xsplit,36,43,4,12,4
xsplit,37,45,1,19,3
xsplit,38,36,1,20,2
xsplit,39,36,1,14,6
xsplit,40,49,6,12,6
xsplit,41,57,2,21,3
xsplit,42,33,2,16,4
xsplit,43,63,2,22,2
xsplit,44,55,6,18,4
xsplit,45,55,1,12,6
xsplit,46,55,1,24,2
xsplit,47,77,1,24,2
xsplit,48,81,4,10,4
xsplit,49,94,1,22,2
xsplit,50,77,1,22,3
xsplit,51,64,3,18,6
xsplit,52,78,7,21,6
xsplit,53,100,1,27,3
xsplit,54,100,1,20,2
xsplit,55,70,1,18,6
xsplit,56,97,7,16,4
xsplit,57,81,2,20,4
xsplit,58,91,1,30,3
xsplit,59,126,1,30,2
xsplit,60,79,6,18,12
xsplit,61,135,1,31,3
xsplit,62,105,2,32,2
xsplit,63,109,3,16,4
xsplit,64,225,9,18,2
xsplit,65,99,3,21,9
xsplit,66,85,2,24,4
xsplit,67,165,1,34,2
xsplit,68,136,9,27,6
xsplit,69,121,2,24,4
xsplit,70,91,1,24,6
xsplit,71,187,1,36,2
xsplit,72,193,7,16,4
xsplit,73,198,3,37,3
xsplit,74,153,1,38,3
xsplit,75,168,1,22,6
xsplit,76,171,10,30,4
xsplit,77,137,2,24,4
xsplit,78,120,1,28,6
xsplit,79,233,1,40,2
xsplit,80,217,9,18,6
xsplit,81,325,1,28,2
xsplit,82,190,2,42,3
xsplit,83,260,1,42,2
xsplit,84,153,8,24,8
xsplit,85,172,4,27,9
xsplit,86,210,2,44,2
xsplit,87,196,1,30,6
xsplit,88,241,10,24,4
xsplit,89,301,3,45,3
xsplit,90,181,1,24,6
xsplit,91,192,3,28,6
xsplit,92,253,12,36,4
xsplit,93,225,4,32,4
xsplit,94,253,1,48,2
xsplit,95,216,1,30,6
xsplit,96,353,8,18,4
xsplit,97,360,2,49,3
xsplit,98,309,1,44,2
xsplit,99,271,2,24,4
xsplit,100,348,11,33,6
)csv";

struct GoldRow {
  std::string family;
  uint32_t n = 0;
  int64_t g = -1;
  int64_t pi0 = -1;
  int64_t p = -1;        // p_plus for the xpm table
  int64_t p_minus = -1;  // xpm only
  int64_t e = -1;        // xsplit only
};

inline std::vector<GoldRow> parse_gold(std::string_view csv) {
  std::vector<GoldRow> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  std::getline(in, line);  // header
  bool pm = line.find("p_plus") != std::string::npos;
  bool has_e = line.find(",e") != std::string::npos;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    GoldRow r;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, r.family, ',');
    std::getline(ls, cell, ',');
    r.n = uint32_t(std::stoul(cell));
    std::getline(ls, cell, ',');
    r.g = std::stoll(cell);
    std::getline(ls, cell, ',');
    r.pi0 = std::stoll(cell);
    std::getline(ls, cell, ',');
    r.p = std::stoll(cell);
    if (pm) {
      std::getline(ls, cell, ',');
      r.p_minus = std::stoll(cell);
    } else if (has_e) {
      std::getline(ls, cell, ',');
      r.e = std::stoll(cell);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<GoldRow> gold_table(const std::string& family) {
  if (family == "x0") return parse_gold(kGoldX0Csv);
  if (family == "x1") return parse_gold(kGoldX1Csv);
  if (family == "xpm") return parse_gold(kGoldXpmCsv);
  if (family == "xsplit") return parse_gold(kGoldXsplitCsv);
  throw std::invalid_argument("gold_table: unknown family " + family);
}

}  // namespace xigraph
