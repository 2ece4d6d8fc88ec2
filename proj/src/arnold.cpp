#include "catstego/arnold.hpp"

#include <stdexcept>

namespace catstego {

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::Classic:
      return "CLASSIC";
    case Family::RowFirst:
      return "ROWFIRST";
    case Family::ColFirst:
      return "COLFIRST";
  }
  return "UNKNOWN";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "CLASSIC") return Family::Classic;
  if (name == "ROWFIRST") return Family::RowFirst;
  if (name == "COLFIRST") return Family::ColFirst;
  return std::nullopt;
}

TransformSpec::TransformSpec(Family family, std::uint32_t i) : family_(family), i_(i) {
  if (family_ == Family::Classic) {
    i_ = 1;
  } else if (i_ == 0) {
    throw std::invalid_argument("transform parameter i must be >= 1 for " + std::string(family_name(family_)));
  }
}

ArnoldMatrix matrix_for(const TransformSpec& spec) noexcept {
  const std::int64_t i = spec.parameter();
  switch (spec.family()) {
    case Family::Classic:
      return {2, 1, 1, 1};
    case Family::RowFirst:
      return {i, i + 1, 1, 1};
    case Family::ColFirst:
      return {i + 1, i, 1, 1};
  }
  return {};
}

namespace modmat {

namespace {
std::int64_t floormod(std::int64_t v, std::int64_t n) noexcept {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}
}  // namespace

ArnoldMatrix reduce(const ArnoldMatrix& m, std::uint64_t n) noexcept {
  const auto sn = static_cast<std::int64_t>(n);
  return {floormod(m.a, sn), floormod(m.b, sn), floormod(m.c, sn), floormod(m.d, sn)};
}

// Inputs are reduced, so every product stays below n^2 <= 2^30.
ArnoldMatrix mul(const ArnoldMatrix& l, const ArnoldMatrix& r, std::uint64_t n) noexcept {
  const auto sn = static_cast<std::int64_t>(n);
  return {(l.a * r.a + l.b * r.c) % sn, (l.a * r.b + l.b * r.d) % sn,
          (l.c * r.a + l.d * r.c) % sn, (l.c * r.b + l.d * r.d) % sn};
}

ArnoldMatrix pow(ArnoldMatrix m, std::uint64_t e, std::uint64_t n) noexcept {
  m = reduce(m, n);
  ArnoldMatrix acc = reduce(ArnoldMatrix{}, n);
  while (e > 0) {
    if (e & 1) acc = mul(acc, m, n);
    m = mul(m, m, n);
    e >>= 1;
  }
  return acc;
}

ArnoldMatrix inverse(const ArnoldMatrix& m, std::uint64_t n) {
  const std::int64_t det = m.det();
  if (det != 1 && det != -1) {
    throw std::invalid_argument("matrix is not unimodular (det = " + std::to_string(det) + ")");
  }
  return reduce({det * m.d, -det * m.b, -det * m.c, det * m.a}, n);
}

bool is_identity(const ArnoldMatrix& m, std::uint64_t n) noexcept {
  return reduce(m, n) == reduce(ArnoldMatrix{}, n);
}

}  // namespace modmat

std::vector<std::uint32_t> scatter_table(const ArnoldMatrix& m, std::size_t side) {
  const ArnoldMatrix r = modmat::reduce(m, side);
  const auto n = static_cast<std::int64_t>(side);
  std::vector<std::uint32_t> dest(side * side);
  // Walk y incrementally instead of multiplying per cell.
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t tx = (r.a * x) % n;
    std::int64_t ty = (r.c * x) % n;
    std::uint32_t* row = dest.data() + x * n;
    for (std::int64_t y = 0; y < n; ++y) {
      row[y] = static_cast<std::uint32_t>(tx * n + ty);
      tx += r.b;
      if (tx >= n) tx -= n;
      ty += r.d;
      if (ty >= n) ty -= n;
    }
  }
  return dest;
}

template <class Tag>
SquareGrid<Tag> apply_matrix(const SquareGrid<Tag>& grid, const ArnoldMatrix& m) {
  if (grid.empty()) throw std::invalid_argument("cannot transform an empty grid");
  const auto dest = scatter_table(m, grid.side());
  const auto src = grid.cells();
  std::vector<std::uint8_t> out(src.size());
  for (std::size_t k = 0; k < src.size(); ++k) out[dest[k]] = src[k];
  return SquareGrid<Tag>(grid.side(), std::move(out));
}

template <class Tag>
SquareGrid<Tag> scramble(const SquareGrid<Tag>& grid, const TransformSpec& spec, std::uint64_t t) {
  const ArnoldMatrix m = matrix_for(spec);
  const std::uint64_t n = grid.side();
  t %= period(m, n);
  if (t == 0) return grid;
  return apply_matrix(grid, modmat::pow(m, t, n));
}

template <class Tag>
SquareGrid<Tag> unscramble(const SquareGrid<Tag>& grid, const TransformSpec& spec, std::uint64_t t) {
  const ArnoldMatrix m = matrix_for(spec);
  const std::uint64_t n = grid.side();
  t %= period(m, n);
  if (t == 0) return grid;
  return apply_matrix(grid, modmat::pow(modmat::inverse(m, n), t, n));
}

std::uint64_t period(const ArnoldMatrix& m, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("period: side must be >= 1");
  const ArnoldMatrix base = modmat::reduce(m, n);
  const std::int64_t det = m.det();
  if (det != 1 && det != -1) throw std::invalid_argument("period: matrix is not unimodular");
  ArnoldMatrix cur = base;
  std::uint64_t p = 1;
  while (!modmat::is_identity(cur, n)) {
    cur = modmat::mul(cur, base, n);
    ++p;
  }
  return p;
}

std::uint64_t period(const TransformSpec& spec, std::uint64_t n) { return period(matrix_for(spec), n); }

std::vector<PeriodRow> period_sweep(Family family, std::uint32_t lo, std::uint32_t hi, std::uint64_t n) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("period_sweep: need 1 <= lo <= hi");
  std::vector<PeriodRow> rows;
  rows.reserve(hi - lo + 1);
  for (std::uint64_t i = lo; i <= hi; ++i) {
    const auto ii = static_cast<std::uint32_t>(i);
    rows.push_back({ii, period(TransformSpec(family, ii), n)});
  }
  return rows;
}

template GrayImage apply_matrix(const GrayImage&, const ArnoldMatrix&);
template BinaryImage apply_matrix(const BinaryImage&, const ArnoldMatrix&);
template GrayImage scramble(const GrayImage&, const TransformSpec&, std::uint64_t);
template BinaryImage scramble(const BinaryImage&, const TransformSpec&, std::uint64_t);
template GrayImage unscramble(const GrayImage&, const TransformSpec&, std::uint64_t);
template BinaryImage unscramble(const BinaryImage&, const TransformSpec&, std::uint64_t);

}  // namespace catstego
