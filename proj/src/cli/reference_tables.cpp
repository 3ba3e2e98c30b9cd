#include "saddle/cli/reference_tables.hpp"

namespace saddle::cli {

namespace {

// Values as printed, 8 decimals. ne = 4, 8, 16, 32 coarse squares per side.
constexpr Table1Reference table1[] = {
    {4, 98, 31, 0.01, 1.05196296, -1.01134827, 0.04061469},
    {4, 98, 31, 0.1, 1.26859883, -0.85462817, 0.41397066},
    {4, 98, 31, 1, 7.70326732, -0.28324435, 7.42002296},
    {4, 98, 31, 10, 76.95595469, -0.03142832, 76.92452637},
    {8, 450, 127, 0.01, 1.02820054, -0.98803749, 0.04016306},
    {8, 450, 127, 0.1, 1.24330881, -0.83351936, 0.40978945},
    {8, 450, 127, 1, 7.92507966, -0.27501021, 7.65006945},
    {8, 450, 127, 10, 79.23160501, -0.03050241, 79.20110260},
    {16, 1922, 511, 0.01, 1.02227690, -0.98222993, 0.04004697},
    {16, 1922, 511, 0.1, 1.23699045, -0.82827314, 0.40871731},
    {16, 1922, 511, 1, 7.98122610, -0.27297216, 7.70825394},
    {16, 1922, 511, 10, 79.80743778, -0.03027091, 79.77716688},
    {32, 7938, 2047, 0.01, 1.02079719, -0.98077944, 0.04001776},
    {32, 7938, 2047, 0.1, 1.23541129, -0.82696361, 0.40844768},
    {32, 7938, 2047, 1, 7.99530382, -0.27246396, 7.72283987},
    {32, 7938, 2047, 10, 79.95183045, -0.03021301, 79.92161743},
};

// Values as printed, 6 decimals. ne = 8, 16, 32, 64 squares per side.
constexpr Table2Reference table2[] = {
    {8, 98, 63, 0.01, 0.002968, -0.120235, 0.233826, -0.257780, '-'},
    {8, 98, 63, 0.1, 0.029676, -0.120235, 0.486079, -0.167876, '+'},
    {8, 98, 63, 1, 0.296756, -0.120235, 3.819638, -0.121470, '+'},
    {8, 98, 63, 10, 2.967561, -0.120235, 38.048896, -0.120354, '+'},
    {16, 450, 255, 1e-3, 0.000076, -0.030950, 0.118361, -0.130019, '-'},
    {16, 450, 255, 0.01, 0.000764, -0.030950, 0.138775, -0.114891, '+'},
    {16, 450, 255, 0.1, 0.007637, -0.030950, 0.429370, -0.050061, '+'},
    {16, 450, 255, 1, 0.076367, -0.030950, 3.953115, -0.031047, '+'},
    {32, 1922, 1023, 1e-4, 0.000002, -0.007794, 0.060633, -0.064140, '-'},
    {32, 1922, 1023, 1e-3, 0.000019, -0.007794, 0.062515, -0.062434, '+'},
    {32, 1922, 1023, 0.01, 0.000192, -0.007794, 0.084063, -0.048097, '+'},
    {32, 1922, 1023, 0.1, 0.001923, -0.007794, 0.408153, -0.013340, '+'},
    {32, 1922, 1023, 1, 0.019230, -0.007794, 3.988164, -0.007800, '+'},
    {64, 7938, 4095, 1e-4, 4.816e-07, -0.001952, 0.030950, -0.031527, '-'},
    {64, 7938, 4095, 1e-3, 0.000005, -0.001952, 0.032840, -0.029820, '+'},
    {64, 7938, 4095, 0.01, 0.000048, -0.001952, 0.056839, -0.017847, '+'},
    {64, 7938, 4095, 0.1, 0.000482, -0.001952, 0.402099, -0.003396, '+'},
    {64, 7938, 4095, 1, 0.004816, -0.001952, 3.997034, -0.001952, '+'},
};

}  // namespace

std::span<const Table1Reference> table1_reference() { return table1; }
std::span<const Table2Reference> table2_reference() { return table2; }

}  // namespace saddle::cli
