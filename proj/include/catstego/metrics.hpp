#pragma once

#include <optional>
#include <string>

#include "catstego/grid.hpp"

namespace catstego {

inline constexpr double kPeakIntensity = 255.0;

struct MetricsReport {
  double mse = 0.0;
  /// Decibels; empty when the images are identical (infinite PSNR).
  std::optional<double> psnr;
  double bit_preservation = 1.0;
};

double mse(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / mse). std::nullopt signals identical images.
std::optional<double> psnr(const GrayImage& a, const GrayImage& b);

/// PSNR for a known MSE; std::nullopt when mse == 0.
std::optional<double> psnr_from_mse(double mse);

/// Fraction of the 8 * N^2 cover bits left unchanged.
double bit_preservation_ratio(const GrayImage& cover, const GrayImage& stego);

/// Fraction of cells on which two binary images agree.
double bit_agreement(const BinaryImage& a, const BinaryImage& b);

MetricsReport measure(const GrayImage& cover, const GrayImage& stego);

/// `metric,value` rows with a header line. Infinite PSNR prints as "inf".
std::string to_csv(const MetricsReport& report);

}  // namespace catstego
