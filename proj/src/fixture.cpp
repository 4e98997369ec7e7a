#include "wiener/fixture.hpp"

#include <array>

namespace wiener::fixture {

namespace {

// z_1..z_100 in index order. z_11 really does carry five decimals in the
// source table; keep it that way.
constexpr std::array<double, 100> kTable41 = {
    4.0991,  1.6842,  2.9422,  4.5744,  2.0157,
    2.8821,  4.6284,  1.654,   0.9561,  -0.5407,
    1.98941, 4.3462,  3.455,   3.2235,  2.1299,
    1.7554,  3.9263,  2.4328,  2.9972,  2.59,
    2.7068,  2.243,   3.5946,  4.6402,  2.2703,
    2.681,   2.9075,  3.3659,  4.5149,  -1.3528,
    3.4294,  4.0825,  2.3837,  3.3037,  4.7552,
    2.1509,  4.3749,  2.6403,  1.4087,  4.178,
    4.3571,  3.2793,  3.2422,  2.7395,  0.682,
    3.4298,  2.6592,  3.2093,  0.1074,  1.5462,
    1.0896,  2.1108,  2.9175,  2.9352,  3.5531,
    2.2376,  1.6557,  2.0076,  0.8997,  0.1873,
    3.5272,  2.8292,  1.8519,  -0.5223, 0.7602,
    4.3529,  1.1265,  1.3525,  3.7889,  3.2284,
    1.1392,  2.8833,  2.3093,  1.4444,  -0.23,
    1.1718,  1.3588,  1.5024,  2.2622,  3.3423,
    7.0549,  2.5627,  1.5592,  3.8465,  0.8471,
    2.8475,  0.5144,  2.3558,  2.4793,  2.0639,
    1.166,   3.2738,  0.4878,  2.9504,  2.4767,
    3.6022,  1.6005,  3.5125,  2.2026,  3.3646,
};

// Expected noise-scale estimates T_n at n = 5, 10, ..., 100.
constexpr std::array<double, 20> kTable42 = {
    3.182349256, 4.995431962, 4.029170383, 3.30673624,  3.120603594,
    3.924002323, 3.884200678, 3.781846824, 3.715840465, 3.665346353,
    3.463530492, 3.472692797, 3.628477887, 3.621538801, 3.662829637,
    3.554594699, 3.96153126,  3.836441056, 3.774116249, 3.663112062,
};

// Expected drift estimates T*_n at n = 5, 10, ..., 100.
constexpr std::array<double, 20> kTable43 = {
    0.12624,      -1.0209,       -0.6614,      -0.62588,      -0.464312,
    -0.57916,     -0.327594286,  -0.299005,    -0.296888889,  -0.429124,
    -0.47716,     -0.704466667,  -0.851932308, -0.82396,      -0.967797333,
    -1.0413725,   -0.959635294,  -1.011635556, -1.056187368,  -1.01773,
};

} // namespace

std::span<const double> table41() { return kTable41; }
std::span<const double> table42_sigma2() { return kTable42; }
std::span<const double> table43_mu() { return kTable43; }

std::vector<int> sweep_ns() {
    std::vector<int> ns;
    ns.reserve(20);
    for (int n = 5; n <= 100; n += 5) {
        ns.push_back(n);
    }
    return ns;
}

} // namespace wiener::fixture
