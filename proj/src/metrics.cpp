#include "catstego/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "catstego/kernels.hpp"

namespace catstego {

double mse(const GrayImage& a, const GrayImage& b) {
  require_same_side(a, b, "mse");
  if (a.empty()) throw std::invalid_argument("mse: empty images");
  const auto ssd = kernels::active().sum_squared_diff(a.cells().data(), b.cells().data(), a.area());
  return static_cast<double>(ssd) / static_cast<double>(a.area());
}

std::optional<double> psnr_from_mse(double m) {
  if (m <= 0.0) return std::nullopt;
  return 10.0 * std::log10(kPeakIntensity * kPeakIntensity / m);
}

std::optional<double> psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

double bit_preservation_ratio(const GrayImage& cover, const GrayImage& stego) {
  require_same_side(cover, stego, "bit_preservation_ratio");
  if (cover.empty()) throw std::invalid_argument("bit_preservation_ratio: empty images");
  const auto flipped =
      kernels::active().count_differing_bits(cover.cells().data(), stego.cells().data(), cover.area());
  const double total = 8.0 * static_cast<double>(cover.area());
  return (total - static_cast<double>(flipped)) / total;
}

double bit_agreement(const BinaryImage& a, const BinaryImage& b) {
  require_same_side(a, b, "bit_agreement");
  if (a.empty()) throw std::invalid_argument("bit_agreement: empty images");
  const auto same = kernels::active().count_equal(a.cells().data(), b.cells().data(), a.area());
  return static_cast<double>(same) / static_cast<double>(a.area());
}

MetricsReport measure(const GrayImage& cover, const GrayImage& stego) {
  MetricsReport r;
  r.mse = mse(cover, stego);
  r.psnr = psnr_from_mse(r.mse);
  r.bit_preservation = bit_preservation_ratio(cover, stego);
  return r;
}

std::string to_csv(const MetricsReport& report) {
  char buf[64];
  std::string out = "metric,value\n";
  std::snprintf(buf, sizeof buf, "%.6f", report.mse);
  out += std::string("mse,") + buf + "\n";
  if (report.psnr) {
    std::snprintf(buf, sizeof buf, "%.4f", *report.psnr);
    out += std::string("psnr,") + buf + "\n";
  } else {
    out += "psnr,inf\n";
  }
  std::snprintf(buf, sizeof buf, "%.6f", report.bit_preservation);
  out += std::string("bit_preservation,") + buf + "\n";
  return out;
}

}  // namespace catstego
