#include "dsrg/fixtures.hpp"

#include "dsrg/error.hpp"

namespace dsrg::fixtures {

// Generators as published. H10 is printed without a
// separator between its two generators; they are split where point 1 recurs.
const std::vector<GeneratorData>& appendix_groups() {
  static const std::vector<GeneratorData> groups = {
    {"H1", 48,
     {
         "(1,2,4)(3,11,13,6,7,14)(5,29,22,16,10,26)(8,18,20,9,17,21)(12,24,35)(15,33,41,37,28,46)"
         "(19,32,44)(23,25,36,40,27,38)(30,42,43)(31,34,45,47,39,48)",
         "(1,3)(2,5)(4,8)(6,12)(7,15)(9,19)(10,23)(11,18)(13,25)(14,26)(16,30)(17,31)(20,33)(22,34)"
         "(24,36)(27,39)(32,45)(35,46)(37,47)(38,44)(41,42)(43,48)"}},
    {"H2", 60,
     {
         "(1,5,16,40,21)(2,8,24,14,37)(3,10,29,28,9)(4,12,26,39,15)(6,18,44,33,54)(7,20,36,49,23)"
         "(11,31,53,58,60)(13,35,34,42,32)(17,41,27,50,43)(19,45,51,57,25)(22,46,55,56,48)"
         "(30,52,38,59,47)",
         "(1,23,40,3,43,34)(2,15,32,6,28,12)(4,37,22,11,57,8)(5,35,46,14,41,58)(7,21,49,19,47,56)"
         "(9,54,30,25,60,17)(10,16,53,27,24,51)(13,39,52,33,20,55)(18,42,50,31,48,59)"
         "(26,29,45,36,44,38)"}},
    {"H3", 60,
     {
         "(1,23,54,6,49,40)(2,32,50,14,57,37)(3,31,27,12,45,43)(4,16,41,9,30,28)(5,22,46,24,26,53)"
         "(7,11,58,21,39,47)(8,10,36,17,19,60)(13,15,20,33,35,52)(18,48,59,44,38,42)"
         "(25,29,51,34,56,55)",
         "(1,56,31,34,16,55)(2,48,15,18,32,42)(3,24,60,46,41,47)(4,38,10,44,23,59)(5,33,53,20,58,37)"
         "(6,39,45,21,30,26)(7,29,22,25,11,51)(8,17,43,27,54,40)(9,57,19,14,49,35)"
         "(12,52,36,50,28,13)"}},
    {"H4", 63,
     {
         "(1,3,8,19,38,33,61)(2,5,12,7,17,34,20,29,50,16,32,25,45,62)"
         "(4,9,21,11,18,36,6,15,30,24,42,55,13,27)(10,23,41,26,35,40,28,48,63,53,37,56,54,44)"
         "(14,39,57,52,43,31,22)(46,47,59,49,60,51,58)",
         "(1,2)(3,6)(5,10,50,61)(7,8)(9,14)(11,24,42,51)(12,19)(16,35)(17,46)(18,31)(20,30)(21,58)"
         "(23,39,63,29)(25,55)(26,32)(27,41)(28,33)(36,47)(37,43)(48,57)(52,56)(53,59)(60,62)"}},
    {"H5", 72,
     {
         "(1,6,47,35,8,23,56,24)(2,13,36,32,4,40,64,41)(3,10,61,46,19,15,54,16)"
         "(5,18,17,65,12,26,30,57)(7,21,51,44,11,28,63,29)(9,31,25,72,20,43,42,68)"
         "(14,53,49,66,27,50,33,59)(22,38,60,71,39,34,45,70)(48,52)(55,58,69,67)",
         "(1,28,42,37,70,44,8,10,45,55,72,41)(2,15,30,52,71,46,4,21,33,67,68,24)"
         "(3,40,25,48,59,32,19,6,60,58,65,29)(5,34,64,12,38,63,20,53,54,9,50,56)"
         "(7,23,17,62,66,35,11,13,49,69,57,16)(14,26,36,22,43,47,39,31,61,27,18,51)",
         "(1,15,51,72,48,12)(2,28,61,65,37,5)(3,23,36,68,62,20)(4,13,64,59,69,39)(6,56,70,67,22,8)"
         "(7,40,47,57,52,9)(10,54,71,55,14,19)(11,21,63,66,58,27)(16,50,60,35,18,30)"
         "(17,24,34,49,32,26)(25,41,38,33,44,43)(29,53,45,46,31,42)"}},
    {"H6", 72,
     {
         "(1,61,53,14,31,33,63,48)(2,41,26,16,59,42,51,20)(3,71,28,21,34,38,49,13)"
         "(4,39,44,40,35,6,52,36)(5,64,11,9,69,22,50,30)(7,25,60,68,17,10,58,23)"
         "(8,72,19,32,47,29,56,27)(12,43,70,57,24,18,67,15)(37,45,65,55,62,46,54,66)",
         "(2,18,3)(4,24,37)(5,10,8)(7,27,45)(9,20,54)(11,33,25)(12,13,46)(14,17,62)(15,29,31)"
         "(16,30,65)(19,22,34)(21,48,55)(23,38,39)(26,44,43)(28,42,47)(32,35,66)(36,70,59)(40,51,56)"
         "(41,58,61)(49,63,50)(52,64,67)(53,60,69)"}},
    {"H7", 72,
     {
         "(1,44,55,3,20,25,48,28)(2,36,64,42,19,51,69,49)(4,37,9,34,13,39,17,38)"
         "(5,53,47,68,14,26,66,71)(6,18,59,10,12,31,40,16)(7,46,29,57,8,56,70,62)"
         "(11,72,67,15,58,23,45,54)(21,41,30,50,61,43,33,27)(22,35,65,24,52,60,32,63)",
         "(1,32,51)(2,43,53)(3,45,30)(4,69,31)(5,52,19)(6,33,60)(7,61,20)(8,16,72)(9,48,66)"
         "(10,68,65)(11,56,26)(12,15,50)(13,17,70)(14,49,58)(18,47,25)(21,71,37)(22,62,46)(23,39,36)"
         "(24,34,35)(27,67,38)(28,63,54)(29,40,44)(41,42,57)(55,59,64)"}},
    {"H8", 72,
     {
         "(1,10,9,12,25,18)(2,49,50,46,41,59)(3,63,11,47,20,69)(4,31,33,60,52,66)(5,56,71,51,38,53)"
         "(6,36,17)(7,35,57,19,27,39)(8,24,54,61,14,40)(15,45,68)(13,26,43,28,67,58)(16,23,55)"
         "(21,65,30,48,37,32)(22,44,42,34,62,72)(29,64,70)",
         "(1,58)(2,67)(3,26)(4,68)(5,45)(6,72)(7,13)(8,15)(9,53)(10,59)(11,28)(12,70)(14,49)(16,43)"
         "(17,30)(18,35)(19,38)(20,51)(21,55)(22,65)(23,44)(24,66)(25,56)(27,47)(29,54)(31,48)"
         "(32,60)(33,39)(34,57)(36,63)(37,41)(40,62)(42,61)(46,71)(50,69)(52,64)",
         "(1,63,36,58,5,45)(2,40,18,59,48,13)(3,54,6,56,21,68)(4,55,25,72,29,26)(7,31,10,35,62,67)"
         "(8,23,9,30,64,28)(11,52,17,53,44,15)(12,70,51,43,16,20)(14,57,22,37,39,66)"
         "(19,42,69,27,60,71)(24,33,41,65,34,49)(32,47,50,61,38,46)"}},
    {"H9", 84,
     {
         "(1,42,52,14,67,78,38,39)(2,28,54,40,18,37,41,23)(3,64,77,82,80,53,33,56)"
         "(4,34,30,15,79,83,61,58)(5,63,74,27,32,72,68,31)(6,13,36,12)(7,11,25,29,10,35,43,45)"
         "(8,51,75,69,50,55,26,49)(9,20,57,84,81,70,62,22)(16,24,46,76,71,73,17,21)"
         "(19,44,59,48,47,60,65,66)",
         "(1,71,8)(2,72,20)(3,10,60)(4,68,23)(5,82,14)(6,63,52)(7,75,24)(9,25,28)(11,16,54)"
         "(12,44,74)(13,42,49)(15,67,77)(17,73,39)(18,78,30)(19,81,27)(21,38,40)(22,65,29)(26,59,36)"
         "(31,58,80)(32,84,57)(33,69,45)(34,41,37)(35,56,43)(46,51,76)(47,79,64)(48,55,83)(50,53,61)"
         "(62,70,66)"}},
    {"H10", 90,
     {
         "(1,52,41,43,40)(2,15,79,34,24)(3,75,64,66,56)(4,63,60,14,31)(5,86,69,76,36)(6,20,13,82,83)"
         "(7,25,73,48,12)(8,39,88,37,45)(9,33,32,62,74)(10,70,51,59,17)(11,80,53,65,67)"
         "(16,61,58,90,55)(18,26,72,21,27)(19,81,28,42,49)(22,71,78,54,68)(23,47,46,85,44)"
         "(29,50,38,87,77)(30,84,57,89,35)",
         "(1,79,84,2,60,78)(3,73,61,7,83,77)(4,41,53)(5,34,50,10,48,68)(6,70,47,12,49,38)"
         "(8,51,23,15,72,36)(9,25,88,17,18,69)(11,26,75,20,40,55)(13,64,28)(14,86,33,24,67,22)"
         "(16,82,80,27,74,85)(19,39,52,31,56,35)(21,32,58)(29,43,71,42,59,89)(30,63,81,45,44,62)"
         "(37,46,57)(54,66,87,65,76,90)"}},
    {"H11", 105,
     {
         "(1,96,45,103,3,68,12,105,32,79)(2,82,50,100,10,42,15,102,53,60)(13,25,77,97,49)"
         "(4,47,28,104,36,56,5,85,64,98)(6,99,22,93,7,87,20,101,11,90)(16,39,88,83,44)"
         "(8,91,38,84,17,69,24,95,29,74)(9,73,40,92,14,70,18,94,26,81)(21,72,89,65,27)"
         "(19,55,57,86,43,41,30,78,71,67)(23,34,61,75,48)(31,46,62,80,37)(33,35,66,76,63)"
         "(51,54,52,58,59)",
         "(1,97)(2,89)(3,88)(4,77)(5,83)(6,76)(7,80)(8,62)(9,63)(10,72)(11,64)(12,65)(13,66)(14,50)"
         "(15,49)(16,52)(17,59)(18,58)(19,104)(20,53)(21,51)(22,54)(23,102)(24,36)(25,37)(26,35)"
         "(27,46)(28,44)(29,45)(30,100)(31,38)(32,40)(33,39)(34,98)(41,105)(42,95)(43,94)(47,92)"
         "(48,91)(55,103)(56,85)(57,84)(60,82)(61,81)(67,99)(68,101)(69,73)(70,74)(71,75)(78,93)"
         "(79,96)"}},
  };
  return groups;
}

const GeneratorData& appendix_group(const std::string& name) {
  for (const auto& g : appendix_groups())
    if (g.name == name) return g;
  throw InputError("unknown appendix group '" + name + "'");
}

PermGroup make_group(const GeneratorData& data) {
  std::vector<Permutation> gens;
  for (const auto& text : data.generators) gens.push_back(Permutation::from_cycles(text, data.degree));
  return PermGroup(data.degree, std::move(gens));
}

const std::vector<UnionData>& appendix_unions() {
  static const std::vector<UnionData> unions = {
      {"H1", {3, 5, 15}, {48, 10, 6, 2, 2}, "appendix, parameter sets (48,10,6,2,2) and (48,13,7,2,4)"},
      {"H1", {2, 5, 12, 19, 23}, {48, 13, 7, 2, 4}, "appendix, parameter sets (48,10,6,2,2) and (48,13,7,2,4)"},
      {"H2", {5, 6, 7, 8, 12, 19, 20, 49}, {60, 13, 5, 2, 3}, "appendix, parameter set (60,13,5,2,3)"},
      {"H3", {3, 5, 12, 17, 36}, {60, 26, 20, 10, 12}, "appendix, parameter set (60,26,20,10,12), first digraph"},
      {"H3", {12, 17, 23, 36}, {60, 26, 20, 10, 12}, "appendix, parameter set (60,26,20,10,12), second digraph"},
      {"H4", {2, 3, 5}, {63, 22, 10, 7, 8}, "appendix, parameter set (63,22,10,7,8)"},
      {"H5", {2, 7, 10, 42}, {72, 19, 11, 2, 6}, "appendix, parameter set (72,19,11,2,6)"},
      {"H6", {7, 21, 40, 57}, {72, 20, 14, 4, 6}, "appendix, parameter sets (72,20,14,4,6) and (72,21,15,6,6)"},
      {"H6", {2, 4, 15, 36}, {72, 21, 15, 6, 6}, "appendix, parameter sets (72,20,14,4,6) and (72,21,15,6,6)"},
      {"H7", {2, 10, 14, 24, 71}, {72, 22, 9, 6, 7}, "appendix, parameter set (72,22,9,6,7), first digraph"},
      {"H7", {2, 10, 24, 45, 72}, {72, 22, 9, 6, 7}, "appendix, parameter set (72,22,9,6,7), second digraph"},
      {"H8", {3, 14, 19, 20, 58}, {72, 26, 10, 8, 10}, "appendix, parameter set (72,26,10,8,10)"},
      {"H9", {3, 5, 6, 7, 8, 9, 19, 26, 29, 40}, {84, 29, 19, 6, 12}, "appendix, DSRG(84,29,19,6,12)"},
      {"H9", {2, 3, 5, 7, 19, 20, 27, 30, 31, 35}, {84, 31, 17, 12, 11}, "appendix, DSRG(84,31,17,12,11)"},
      {"H9", {3, 4, 5, 6, 13, 14, 19, 26, 29, 30, 35, 40, 46}, {84, 39, 27, 18, 18},
       "appendix, DSRG(84,39,27,18,18), first digraph"},
      {"H9", {3, 4, 5, 6, 13, 15, 19, 21, 23, 26, 29, 30, 40}, {84, 39, 27, 18, 18},
       "appendix, DSRG(84,39,27,18,18), second digraph"},
      {"H10", {2, 5, 15, 20, 40}, {90, 28, 16, 10, 8}, "appendix, parameter set (90,28,16,10,8)"},
      {"H11", {2, 4, 10, 22, 26}, {105, 36, 16, 11, 13}, "appendix, parameter set (105,36,16,11,13)"},
  };
  return unions;
}

const std::vector<ConnectionData>& connection_sets() {
  static const std::vector<ConnectionData> sets = {
      {"wreath-s2-z4", "X1", {"002", "011", "012", "032", "033", "100", "101", "102", "103"}, {32, 9, 6, 1, 3}},
      {"wreath-s2-z4",
       "X2",
       {"010", "011", "030", "031", "033", "100", "102", "111", "113", "121", "123", "130", "132"},
       {32, 13, 9, 4, 6}},
      {"wreath-s2-z4",
       "X3",
       {"010", "021", "022", "023", "030", "100", "102", "111", "113", "121", "123", "130", "132"},
       {32, 13, 9, 4, 6}},
      {"wreath-s2-z4",
       "X4",
       {"002", "011", "012", "032", "033", "100", "101", "102", "103", "120", "121", "122", "123"},
       {32, 13, 9, 4, 6}},
      {"wreath-s2-z4",
       "X5",
       {"001", "003", "011", "012", "032", "033", "100", "101", "102", "103", "110", "111", "112", "113"},
       {32, 14, 10, 6, 6}},
      {"wreath-s2-z4",
       "X6",
       {"001", "003", "011", "012", "032", "033", "100", "101", "102", "103", "110", "112", "131", "133"},
       {32, 14, 10, 6, 6}},
      {"meta39", "X1", {"a", "a^5", "a^8", "a^12", "b", "a^2b", "a^4b", "a^3b^2", "a^7b^2", "a^11b^2"}, {39, 10, 6, 1, 3}},
      {"meta39",
       "X2",
       {"a", "a^5", "a^8", "a^12", "b", "a^4b", "a^7b", "a^11b", "a^2b^2", "a^4b^2", "a^8b^2", "a^11b^2"},
       {39, 12, 4, 3, 4}},
      {"meta39",
       "X3",
       {"a", "a^5", "a^8", "a^12", "b", "a^4b", "a^7b", "a^10b", "a^3b^2", "a^4b^2", "a^10b^2", "a^11b^2"},
       {39, 12, 4, 3, 4}},
      {"meta39",
       "X4",
       {"a^2", "a^4", "a^9", "a^11", "b", "a^4b", "a^6b", "a^11b", "a^3b^2", "a^5b^2", "a^9b^2", "a^11b^2"},
       {39, 12, 4, 3, 4}},
      // X5 = X2 + {a^12b, a^3b^2}
      {"meta39",
       "X5",
       {"a", "a^5", "a^8", "a^12", "b", "a^4b", "a^7b", "a^11b", "a^2b^2", "a^4b^2", "a^8b^2", "a^11b^2", "a^12b",
        "a^3b^2"},
       {39, 14, 6, 5, 5}},
      // X6 = X4 + {a^2b, a^7b^2}
      {"meta39",
       "X6",
       {"a^2", "a^4", "a^9", "a^11", "b", "a^4b", "a^6b", "a^11b", "a^3b^2", "a^5b^2", "a^9b^2", "a^11b^2", "a^2b",
        "a^7b^2"},
       {39, 14, 6, 5, 5}},
      {"meta39",
       "X7",
       {"a^2", "a^4", "a^9", "a^11", "a^2b", "a^3b", "a^6b", "a^8b", "a^11b", "a^12b", "b^2", "a^3b^2", "a^4b^2",
        "a^6b^2", "a^7b^2", "a^10b^2"},
       {39, 16, 12, 7, 6}},
      {"meta39",
       "X8",
       {"a^4", "a^5", "a^8", "a^9", "b", "ab", "a^4b", "a^6b", "a^8b", "a^10b", "b^2", "a^2b^2", "a^4b^2", "a^6b^2",
        "a^8b^2", "a^10b^2"},
       {39, 16, 12, 7, 6}},
  };
  return sets;
}

ConnectionData wreath_x2_candidate_erratum() {
  return {"wreath-s2-z4",
          "X2'",
          {"010", "011", "030", "002", "033", "100", "102", "111", "113", "121", "123", "130", "132"},
          {32, 13, 9, 4, 6}};
}

const std::vector<std::vector<Point>>& design_931_blocks() {
  static const std::vector<std::vector<Point>> blocks = {{1, 2, 3}, {1, 4, 7}, {1, 5, 9}, {1, 6, 8},
                                                         {2, 4, 9}, {2, 5, 8}, {2, 6, 7}, {3, 4, 8},
                                                         {3, 5, 7}, {3, 6, 9}, {4, 5, 6}, {7, 8, 9}};
  return blocks;
}

const std::vector<std::string>& design_931_generators() {
  static const std::vector<std::string> gens = {"(1,7,3,2,6,9,4,5)", "(4,6,5)(7,8,9)"};
  return gens;
}

const std::vector<std::vector<Point>>& fano_lines() {
  static const std::vector<std::vector<Point>> lines = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                                        {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  return lines;
}

const std::vector<CatalogueRow>& catalogue_rows() {
  static const std::vector<CatalogueRow> rows = {
      {1, {30, 13, 11, 6, 5}, {1, 2, 4, 6, 8}, 30, 11, 184},
      {2, {36, 13, 7, 4, 5}, {4, 5, 6, 9}, 36, 11, 49},
      {3, {36, 13, 7, 4, 5}, {1, 2, 3, 4, 8, 12, 14, 16}, 36, 20, 28},
      {4, {36, 13, 7, 4, 5}, {1, 2, 3, 4, 8, 12, 14, 17}, 36, 20, 28},
      {5, {36, 13, 7, 4, 5}, {1, 2, 3, 4, 5, 10, 13, 14}, 36, 20, 30},
      {6, {36, 13, 7, 4, 5}, {1, 2, 3, 4, 6, 8, 12, 18}, 36, 20, 40},
      {7, {36, 13, 7, 4, 5}, {1, 2, 3, 4, 6, 8, 13, 16}, 36, 20, 40},
      {8, {36, 13, 11, 2, 6}, {1, 3, 5, 7, 10}, 36, 13, 57},
      {9, {45, 16, 8, 5, 6}, {1, 3, 5, 8}, 45, 10, 18},
      {10, {45, 16, 8, 5, 6}, {2, 3, 5, 8}, 45, 10, 18},
      {11, {50, 16, 10, 3, 6}, {1, 2, 6, 9, 13}, 50, 14, 9},
      {12, {50, 23, 13, 10, 11}, {1, 2, 6, 8, 10, 12}, 50, 14, 17},
      {13, {54, 8, 3, 2, 1}, {1, 6, 8, 12}, 54, 18, 103},
      {14, {54, 16, 12, 6, 4}, {4, 5, 10, 12, 16}, 54, 18, 109},
      {15, {54, 19, 9, 6, 7}, {1, 3, 4, 6, 11, 14, 16}, 54, 18, 111},
      {16, {54, 19, 9, 6, 7}, {1, 3, 4, 6, 11, 14, 17}, 54, 18, 111},
      {17, {54, 20, 16, 6, 8}, {2, 3, 4, 5, 11, 13, 14}, 54, 18, 109},
      {18, {54, 20, 16, 6, 8}, {8, 9, 11, 13, 14}, 54, 18, 109},
      {19, {54, 21, 17, 8, 8}, {1, 2, 3, 4, 5, 10, 12, 16}, 54, 18, 109},
      {20, {54, 21, 17, 8, 8}, {1, 8, 9, 10, 12, 16}, 54, 18, 109},
      {21, {54, 25, 14, 11, 12}, {1, 2, 4, 6, 10, 12, 14, 16}, 54, 18, 106},
      {22, {54, 25, 14, 11, 12}, {1, 2, 4, 6, 10, 12, 15, 17}, 54, 18, 106},
      {23, {54, 25, 14, 11, 12}, {1, 2, 4, 6, 10, 13, 15, 16}, 54, 18, 106},
      {24, {54, 25, 14, 11, 12}, {1, 2, 4, 6, 11, 13, 15, 17}, 54, 18, 106},
      {25, {54, 25, 14, 11, 12}, {1, 2, 6, 8, 10, 12, 14, 16}, 54, 18, 103},
      {26, {54, 25, 14, 11, 12}, {1, 2, 6, 8, 10, 12, 15, 17}, 54, 18, 103},
      {27, {54, 25, 14, 11, 12}, {1, 2, 6, 8, 10, 13, 14, 17}, 54, 18, 103},
      {28, {54, 25, 14, 11, 12}, {1, 2, 6, 8, 11, 13, 14, 16}, 54, 18, 103},
  };
  return rows;
}

namespace {

void mix(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= 0xff;
  h *= 1099511628211ull;
}

}  // namespace

std::uint64_t checksum(const GeneratorData& data) {
  std::uint64_t h = 1469598103934665603ull;
  mix(h, data.name);
  mix(h, std::to_string(data.degree));
  for (const auto& g : data.generators) mix(h, g);
  return h;
}

std::uint64_t checksum(const ConnectionData& data) {
  std::uint64_t h = 1469598103934665603ull;
  mix(h, data.group);
  mix(h, data.name);
  for (const auto& l : data.labels) mix(h, l);
  return h;
}

}  // namespace dsrg::fixtures
