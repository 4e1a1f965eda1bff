#pragma once

#include <array>

// Known-good values for the bundled engine-room fixture. The model columns
// and error percentages were cross-checked against an independent
// reimplementation before being frozen here.
namespace fixture_values {

inline constexpr int kPointCount = 20;

inline constexpr std::array<const char*, kPointCount> kLabels{
    "P1",  "P2",  "P3",  "P4",  "P5",  "P6",  "P7",  "P8",  "P9",  "P10",
    "P11", "P12", "P13", "P14", "P15", "P16", "P17", "P18", "P19", "P20"};

inline constexpr std::array<double, kPointCount> kDistances{
    7, 13, 19, 25, 31, 42, 48, 54, 60, 66, 78, 84, 90, 96, 102, 113, 119, 125, 131, 137};

// Per-point means of the five runs, to one decimal.
inline constexpr std::array<double, kPointCount> kMeans{
    -45.2, -53.4, -56.0, -58.6, -60.6, -58.4, -62.4, -65.4, -66.2, -69.0,
    -67.4, -72.0, -76.8, -77.8, -79.0, -76.4, -80.4, -83.0, -85.2, -84.2};

// Log-distance predictions for the fixture radio (erp 20, ref loss 20 at
// 1 m), to two decimals, per exponent.
inline constexpr std::array<double, kPointCount> kLdpl3{
    -25.35, -33.42, -38.36, -41.94, -44.74, -48.70, -50.44, -51.97, -53.35, -54.59,
    -56.76, -57.73, -58.63, -59.47, -60.26, -61.59, -62.27, -62.91, -63.52, -64.10};

inline constexpr std::array<double, kPointCount> kLdpl4{
    -33.80, -44.56, -51.15, -55.92, -59.66, -64.93, -67.25, -69.30, -71.13, -72.78,
    -75.68, -76.97, -78.17, -79.29, -80.34, -82.12, -83.02, -83.88, -84.69, -85.47};

inline constexpr std::array<double, kPointCount> kLdpl5{
    -42.26, -55.70, -63.94, -69.90, -74.57, -81.16, -84.06, -86.62, -88.91, -90.98,
    -94.61, -96.21, -97.71, -99.11, -100.43, -102.65, -103.78, -104.85, -105.86, -106.84};

inline constexpr std::array<double, kPointCount> kLdpl6{
    -50.71, -66.84, -76.73, -83.88, -89.48, -97.40, -100.87, -103.94, -106.69, -109.17,
    -113.53, -115.46, -117.26, -118.94, -120.52, -123.19, -124.53, -125.82, -127.04, -128.20};

// Integer relative-error percentages, measured means vs the n=4 model.
inline constexpr std::array<int, kPointCount> kRealVsLdpl4Pct{
    25, 17, 9, 5, 2, 11, 8, 6, 7, 5, 12, 7, 2, 2, 2, 7, 3, 1, 1, 2};

// Integer relative-error percentages, regression fit vs the n=4 model.
inline constexpr std::array<int, kPointCount> kRegressionVsLdpl4Pct{
    19, 11, 7, 4, 2, 0, 1, 1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 6};

// Continuous least-squares exponent on the fixture (grid-verified).
inline constexpr double kFittedExponent = 3.8987512921502345;

// Logarithmic regression of the fixture means on log10(distance).
inline constexpr double kRegressionIntercept = -16.369338744414378;
inline constexpr double kRegressionSlope = -29.99807122036571;
inline constexpr double kRegressionR2 = 0.9075165680370542;

// Fit statistics at n = 4.
inline constexpr double kRmseAt4 = 5.005373576265759;
inline constexpr double kMaeAt4 = 4.057910540239115;

} // namespace fixture_values
