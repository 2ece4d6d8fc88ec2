#include "catstego/bitplane.hpp"

#include <string>

#include "catstego/kernels.hpp"

namespace catstego {

std::vector<PlaneIndex> to_planes(std::span<const std::uint8_t> indices) {
  std::vector<PlaneIndex> out;
  out.reserve(indices.size());
  for (auto i : indices) out.emplace_back(i);
  return out;
}

BinaryImage get_plane(const GrayImage& img, PlaneIndex p) {
  BinaryImage out(img.side());
  kernels::active().extract_bit(img.cells().data(), out.mutable_cells().data(), img.area(), p.value());
  return out;
}

GrayImage set_plane(const GrayImage& img, PlaneIndex p, const BinaryImage& bits) {
  require_same_side(img, bits, "set_plane");
  GrayImage out = img;
  kernels::active().insert_bit(out.mutable_cells().data(), bits.cells().data(), out.area(), p.value());
  return out;
}

GrayImage embed(const GrayImage& cover, std::span<const BinaryImage> messages, const ScrambleSchedule& sched,
                std::span<const PlaneIndex> planes) {
  if (messages.size() != planes.size()) {
    throw std::invalid_argument("embed: " + std::to_string(messages.size()) + " messages for " +
                                std::to_string(planes.size()) + " planes");
  }
  unsigned used = 0;
  for (auto p : planes) {
    if (used & p.weight()) throw std::invalid_argument("embed: duplicate plane " + std::to_string(p.value()));
    used |= p.weight();
  }
  if (!messages.empty() && cover.side() != sched.side()) {
    throw std::invalid_argument("embed: cover side " + std::to_string(cover.side()) + " does not match key side " +
                                std::to_string(sched.side()));
  }
  for (const auto& m : messages) require_same_side(cover, m, "embed");

  GrayImage stego = cover;
  for (std::size_t k = 0; k < messages.size(); ++k) {
    const BinaryImage scrambled = schedule_scramble(messages[k], sched);
    kernels::active().insert_bit(stego.mutable_cells().data(), scrambled.cells().data(), stego.area(),
                                 planes[k].value());
  }
  return stego;
}

std::vector<BinaryImage> extract_raw(const GrayImage& stego, std::span<const PlaneIndex> planes) {
  std::vector<BinaryImage> out;
  out.reserve(planes.size());
  for (auto p : planes) out.push_back(get_plane(stego, p));
  return out;
}

std::vector<BinaryImage> extract(const GrayImage& stego, const ScrambleSchedule& sched,
                                 std::span<const PlaneIndex> planes) {
  auto raw = extract_raw(stego, planes);
  for (auto& plane : raw) plane = schedule_unscramble(plane, sched);
  return raw;
}

std::size_t payload_capacity(std::size_t side) noexcept {
  const std::size_t bits = side * side;
  return bits < 32 ? 0 : (bits - 32) / 8;
}

BinaryImage pack_payload(std::span<const std::uint8_t> bytes, std::size_t side) {
  const std::size_t needed = 32 + 8 * bytes.size();
  if (side == 0 || needed > side * side || bytes.size() > UINT32_MAX) {
    throw CapacityError("payload of " + std::to_string(bytes.size()) + " bytes does not fit a " +
                        std::to_string(side) + "x" + std::to_string(side) + " plane (max " +
                        std::to_string(payload_capacity(side)) + " bytes)");
  }
  BinaryImage out(side);
  auto cells = out.mutable_cells();
  const auto len = static_cast<std::uint32_t>(bytes.size());
  for (std::size_t k = 0; k < 32; ++k) cells[k] = (len >> (31 - k)) & 1u;
  for (std::size_t b = 0; b < bytes.size(); ++b) {
    for (std::size_t k = 0; k < 8; ++k) cells[32 + 8 * b + k] = (bytes[b] >> (7 - k)) & 1u;
  }
  return out;
}

std::vector<std::uint8_t> unpack_payload(const BinaryImage& bits) {
  const auto cells = bits.cells();
  if (cells.size() < 32) throw std::invalid_argument("unpack_payload: plane too small for a length header");
  std::uint32_t len = 0;
  for (std::size_t k = 0; k < 32; ++k) len = (len << 1) | cells[k];
  if (32 + 8 * static_cast<std::uint64_t>(len) > cells.size()) {
    throw std::invalid_argument("unpack_payload: header claims " + std::to_string(len) +
                                " bytes but the plane holds at most " + std::to_string(payload_capacity(bits.side())));
  }
  std::vector<std::uint8_t> out(len);
  for (std::size_t b = 0; b < len; ++b) {
    std::uint8_t v = 0;
    for (std::size_t k = 0; k < 8; ++k) v = static_cast<std::uint8_t>((v << 1) | cells[32 + 8 * b + k]);
    out[b] = v;
  }
  return out;
}

}  // namespace catstego
