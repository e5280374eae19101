// Published image tables and lower bounds, used as frozen reference values.
#ifndef LOCDIM_TESTS_REFERENCE_TABLES_HPP
#define LOCDIM_TESTS_REFERENCE_TABLES_HPP

#include <array>

namespace reference {

struct ImageRow {
  const char* word;
  double lo;
  double hi;
};

// rho = 0.8, I = [0.3, 0.7], n = 4, in printed order.
inline constexpr std::array<ImageRow, 16> kImages03To07 = {{
    {"0000", .12288, .28672}, {"0001", .22528, .38912}, {"0010", .25088, .41472}, {"0100", .28288, .44672},
    {"1000", .32288, .48672}, {"0011", .35328, .51712}, {"0101", .38528, .54912}, {"0110", .41088, .57472},
    {"1001", .42528, .58912}, {"1010", .45088, .61472}, {"1100", .48288, .64672}, {"0111", .51328, .67712},
    {"1011", .55328, .71712}, {"1101", .58528, .74912}, {"1110", .61088, .77472}, {"1111", .71328, .87712},
}};

// rho = 0.8, I = [0, 1], n = 4, printed to four decimals.
inline constexpr std::array<ImageRow, 16> kImagesUnit = {{
    {"0000", .0000, .4096}, {"0001", .1024, .5120}, {"0010", .1280, .5376}, {"0100", .1600, .5696},
    {"1000", .2000, .6096}, {"0011", .2304, .6400}, {"0101", .2624, .6720}, {"0110", .2880, .6976},
    {"1001", .3024, .7120}, {"1010", .3280, .7376}, {"1100", .3600, .7696}, {"0111", .3904, .8000},
    {"1011", .4304, .8400}, {"1101", .4624, .8720}, {"1110", .4880, .8976}, {"1111", .5904, 1.000},
}};

struct LowerRow {
  double lo;
  double hi;
  double bound;
};

inline constexpr std::array<LowerRow, 7> kLowerBounds = {{
    {0.50, 0.55, 0.792021}, {0.55, 0.60, 0.825663}, {0.60, 0.65, 0.840348}, {0.65, 0.70, 0.824701},
    {0.70, 0.75, 0.750984}, {0.75, 0.80, 0.635012}, {0.80, 0.851, 0.416226},
}};

// sup N_4 = 14/16 at rho = 0.8, as printed.
inline constexpr double kPrintedLowerBound08 = 0.5984102692;

}  // namespace reference

#endif
