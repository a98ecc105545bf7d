#pragma once

#include <vector>

namespace fixtures {

// Seed basis of the 2048-basis translated system (ray labels, ascending).
inline const std::vector<int> kSeedBasis = {
    1,    127,  128,  136,  177,  414,  586,  788,  866,  911,  1005, 1011,
    1225, 1323, 1324, 1366, 1491, 1510, 1589, 1607, 1704, 1722, 1756, 1821};

// The seed basis translated by rays 2, 3 and 2048, in seed column order.
inline const std::vector<int> kSeedTranslatedBy2 = {
    2,    128,  127,  135,  178,  413,  585,  787,  865,  912,  1006, 1012,
    1226, 1324, 1323, 1365, 1492, 1509, 1590, 1608, 1703, 1721, 1755, 1822};

inline const std::vector<int> kSeedTranslatedBy3 = {
    3,    125,  126,  134,  179,  416,  588,  786,  868,  909,  1007, 1009,
    1227, 1321, 1322, 1368, 1489, 1512, 1591, 1605, 1702, 1724, 1754, 1823};

inline const std::vector<int> kSeedTranslatedBy2048 = {
    2048, 1922, 1921, 1913, 1872, 1635, 1463, 1261, 1183, 1138, 1044, 1038,
    824,  726,  725,  683,  558,  539,  460,  442,  345,  327,  293,  228};

}  // namespace fixtures
