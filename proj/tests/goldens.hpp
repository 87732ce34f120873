#pragma once
#include <string>
#include <vector>

namespace goldens {

struct Grid {
  std::string table;
  // Row S holds the values for ell = 1..S.
  std::vector<std::vector<std::string>> rows;
};

// Published grids for 1 <= ell <= S <= 5. The tha-same cell (1, 5) is
// unpublished; it is 1 / (1 + alpha_5), checked separately.
inline const std::vector<Grid>& tables() {
  static const std::vector<Grid> g{
      {"optimal",
       {{"1/2"}, {"1/3", "2/3"}, {"1/4", "1/2", "3/4"}, {"1/5", "2/5", "3/5", "4/5"},
        {"1/6", "1/3", "1/2", "2/3", "5/6"}}},
      {"stl",
       {{"1/2"}, {"1/3", "3/4"}, {"1/4", "3/5", "5/6"}, {"1/5", "1/2", "5/7", "7/8"},
        {"1/6", "3/7", "5/8", "7/9", "9/10"}}},
      {"lr",
       {{"1/2"}, {"1/3", "3/4"}, {"1/4", "5/9", "5/6"}, {"1/5", "7/16", "2/3", "7/8"},
        {"1/6", "9/25", "11/20", "11/15", "9/10"}}},
      {"bv-ejr",
       {{"1/2"}, {"1/2", "1/2"}, {"1/2", "3/5", "1/2"}, {"1/2", "4/7", "3/5", "1/2"},
        {"1/2", "5/9", "5/8", "3/5", "1/2"}}},
      {"av-ejr",
       {{"1/2"}, {"1/2", "2/3"}, {"1/2", "3/5", "3/4"}, {"1/2", "4/7", "2/3", "4/5"},
        {"1/2", "5/9", "5/8", "5/7", "5/6"}}},
      {"tha-same",
       {{"1/2"}, {"1/3", "2/3"}, {"3/11", "1/2", "3/4"}, {"7/31", "3/7", "3/5", "4/5"},
        {"43/223", "7/19", "9/17", "2/3", "5/6"}}},
      {"tho-tactic",
       {{"1/2"}, {"2/5", "3/5"}, {"12/35", "1/2", "23/35"}, {"24/79", "18/41", "23/41", "55/79"},
        {"720/2621", "36/91", "1/2", "55/91", "1901/2621"}}},
      {"tho-same",
       {{"1/2"}, {"2/5", "2/3"}, {"12/35", "4/7", "3/4"}, {"24/79", "24/47", "2/3", "4/5"},
        {"720/2621", "48/103", "36/59", "8/11", "5/6"}}},
      {"tho-wpsc",
       {{"1/2"}, {"2/5", "2/3"}, {"12/35", "4/7", "4/5"}, {"24/79", "24/47", "8/11", "6/7"},
        {"720/2621", "48/103", "48/71", "4/5", "9/10"}}},
      {"borda-tactic",
       {{"1/2"}, {"3/7", "4/7"}, {"11/29", "1/2", "18/29"}, {"25/73", "22/49", "27/49", "48/73"},
        {"137/437", "25/61", "1/2", "36/61", "300/437"}}},
      {"borda-same",
       {{"1/2"}, {"3/7", "2/3"}, {"11/29", "3/5", "3/4"}, {"25/73", "11/20", "9/13", "4/5"},
        {"137/437", "25/49", "11/17", "3/4", "5/6"}}},
  };
  return g;
}

// a_n, b_n, c_n for n = 1..6.
inline const std::vector<std::string> seq_a{"1", "3/2", "23/12", "55/24", "1901/720", "4277/1440"};
inline const std::vector<std::string> seq_b{"1", "1/2", "5/12", "3/8", "251/720", "95/288"};
inline const std::vector<long> seq_c{1, 2, 4, 6, 9, 12};

}  // namespace goldens
