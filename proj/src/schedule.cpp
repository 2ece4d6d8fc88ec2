#include "catstego/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>

namespace catstego {

namespace {

void validate_order(const std::vector<std::size_t>& order, std::size_t m) {
  if (order.size() != m) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) + " entries for " +
                                std::to_string(m) + " stages");
  }
  std::vector<bool> seen(m, false);
  for (auto idx : order) {
    if (idx >= m || seen[idx]) throw std::invalid_argument("order is not a permutation of the stage indices");
    seen[idx] = true;
  }
}

std::vector<std::size_t> identity_order(std::size_t m) {
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

ScrambleSchedule::ScrambleSchedule(std::size_t side, std::vector<Stage> stages, std::vector<std::size_t> order)
    : side_(side), stages_(std::move(stages)), order_(std::move(order)) {
  if (side_ == 0) throw std::invalid_argument("schedule side must be >= 1");
  if (stages_.empty()) throw std::invalid_argument("schedule needs at least one stage");
  validate_order(order_, stages_.size());
}

ScrambleSchedule::ScrambleSchedule(std::size_t side, std::vector<Stage> stages)
    : ScrambleSchedule(side, stages, identity_order(stages.size())) {}

ScrambleSchedule ScrambleSchedule::with_order(std::vector<std::size_t> order) const {
  return ScrambleSchedule(side_, stages_, std::move(order));
}

template <class Tag>
SquareGrid<Tag> schedule_scramble(const SquareGrid<Tag>& msg, const ScrambleSchedule& sched) {
  if (msg.side() != sched.side()) {
    throw std::invalid_argument("schedule_scramble: message side " + std::to_string(msg.side()) +
                                " does not match key side " + std::to_string(sched.side()));
  }
  SquareGrid<Tag> out = msg;
  for (auto idx : sched.order()) {
    const Stage& s = sched.stages()[idx];
    out = scramble(out, s.spec, s.iterations);
  }
  return out;
}

template <class Tag>
SquareGrid<Tag> schedule_unscramble(const SquareGrid<Tag>& scrambled, const ScrambleSchedule& sched) {
  if (scrambled.side() != sched.side()) {
    throw std::invalid_argument("schedule_unscramble: image side " + std::to_string(scrambled.side()) +
                                " does not match key side " + std::to_string(sched.side()));
  }
  SquareGrid<Tag> out = scrambled;
  const auto& order = sched.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Stage& s = sched.stages()[*it];
    out = unscramble(out, s.spec, s.iterations);
  }
  return out;
}

namespace {

ArnoldMatrix composite_for_order(const ScrambleSchedule& sched, const std::vector<std::size_t>& order) {
  const std::uint64_t n = sched.side();
  ArnoldMatrix acc = modmat::reduce(ArnoldMatrix{}, n);
  for (auto idx : order) {
    const Stage& s = sched.stages()[idx];
    acc = modmat::mul(modmat::pow(matrix_for(s.spec), s.iterations, n), acc, n);
  }
  return acc;
}

}  // namespace

ArnoldMatrix composite_matrix(const ScrambleSchedule& sched) { return composite_for_order(sched, sched.order()); }

// Kernel size of (x - y) mod n from its Smith normal form diag(d1, d2):
// d1 = gcd of the entries, d1 * d2 = |det|, and the kernel of diag(d1, d2)
// mod n has gcd(d1, n) * gcd(d2, n) elements.
std::uint64_t coinciding_positions(const ArnoldMatrix& x, const ArnoldMatrix& y, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("coinciding_positions: side must be >= 1");
  const ArnoldMatrix rx = modmat::reduce(x, n), ry = modmat::reduce(y, n);
  const ArnoldMatrix d{rx.a - ry.a, rx.b - ry.b, rx.c - ry.c, rx.d - ry.d};
  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t d1 = std::gcd(std::gcd(d.a, d.b), std::gcd(d.c, d.d));
  if (d1 == 0) return n * n;
  const std::int64_t d2 = std::abs(d.det()) / d1;
  return static_cast<std::uint64_t>(std::gcd(d1, sn)) * static_cast<std::uint64_t>(std::gcd(d2, sn));
}

double max_order_collision(const ScrambleSchedule& sched) {
  const std::size_t m = sched.stages().size();
  if (m > 8) throw std::invalid_argument("max_order_collision: too many stages to enumerate orders");
  const std::uint64_t n = sched.side();
  const ArnoldMatrix truth = composite_matrix(sched);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::uint64_t worst = 0;
  do {
    if (order == sched.order()) continue;
    worst = std::max(worst, coinciding_positions(truth, composite_for_order(sched, order), n));
  } while (std::next_permutation(order.begin(), order.end()));
  return static_cast<double>(worst) / static_cast<double>(n * n);
}

template GrayImage schedule_scramble(const GrayImage&, const ScrambleSchedule&);
template BinaryImage schedule_scramble(const BinaryImage&, const ScrambleSchedule&);
template GrayImage schedule_unscramble(const GrayImage&, const ScrambleSchedule&);
template BinaryImage schedule_unscramble(const BinaryImage&, const ScrambleSchedule&);

std::string serialize_key(const KeyFile& key) {
  const auto& s = key.schedule;
  std::string out;
  out += "N " + std::to_string(s.side()) + "\n";
  out += "M " + std::to_string(s.stages().size()) + "\n";
  for (const auto& st : s.stages()) {
    out += "STAGE ";
    out += family_name(st.spec.family());
    out += " " + std::to_string(st.spec.parameter()) + " " + std::to_string(st.iterations) + "\n";
  }
  out += "ORDER";
  for (auto idx : s.order()) out += " " + std::to_string(idx);
  out += "\nPLANES";
  for (auto p : key.planes) out += " " + std::to_string(p);
  out += "\n";
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t' || s[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t' && s[k] != '\r') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tokens = split_ws(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw KeyParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                                  std::string(tok) + "'");
  }
  return v;
}

const Line& expect(const std::vector<Line>& lines, std::size_t idx, std::string_view keyword,
                   std::size_t last_line) {
  if (idx >= lines.size()) {
    throw KeyParseError(last_line + 1, "missing " + std::string(keyword) + " line");
  }
  const Line& l = lines[idx];
  if (l.tokens.front() != keyword) {
    throw KeyParseError(l.number, "expected " + std::string(keyword) + ", got '" + std::string(l.tokens.front()) +
                                      "'");
  }
  return l;
}

}  // namespace

KeyFile parse_key(std::string_view text) {
  const auto lines = significant_lines(text);
  const std::size_t last_line = lines.empty() ? 0 : lines.back().number;
  std::size_t idx = 0;

  const Line& n_line = expect(lines, idx++, "N", last_line);
  if (n_line.tokens.size() != 2) throw KeyParseError(n_line.number, "N takes exactly one value");
  const auto side = parse_uint(n_line.tokens[1], n_line.number, "N");
  if (side == 0 || side > (1u << 15)) throw KeyParseError(n_line.number, "N must be in [1, 32768]");

  const Line& m_line = expect(lines, idx++, "M", n_line.number);
  if (m_line.tokens.size() != 2) throw KeyParseError(m_line.number, "M takes exactly one value");
  const auto m = parse_uint(m_line.tokens[1], m_line.number, "M");
  if (m == 0) throw KeyParseError(m_line.number, "M must be >= 1 (empty stage list)");
  if (m > 4096) throw KeyParseError(m_line.number, "M is unreasonably large");

  std::vector<Stage> stages;
  std::size_t prev = m_line.number;
  for (std::uint64_t k = 0; k < m; ++k) {
    const Line& s = expect(lines, idx++, "STAGE", prev);
    prev = s.number;
    if (s.tokens.size() != 4) throw KeyParseError(s.number, "STAGE needs <family> <i> <t>");
    const auto fam = parse_family(s.tokens[1]);
    if (!fam) throw KeyParseError(s.number, "unknown family tag '" + std::string(s.tokens[1]) + "'");
    const auto i = parse_uint(s.tokens[2], s.number, "i");
    const auto t = parse_uint(s.tokens[3], s.number, "t");
    if (i > UINT32_MAX) throw KeyParseError(s.number, "i out of range");
    if (*fam == Family::Classic && i != 1) {
      throw KeyParseError(s.number, "CLASSIC stages must carry i = 1");
    }
    try {
      stages.push_back({TransformSpec(*fam, static_cast<std::uint32_t>(i)), t});
    } catch (const std::invalid_argument& e) {
      throw KeyParseError(s.number, e.what());
    }
  }

  const Line& o_line = expect(lines, idx++, "ORDER", prev);
  std::vector<std::size_t> order;
  for (std::size_t k = 1; k < o_line.tokens.size(); ++k) {
    order.push_back(parse_uint(o_line.tokens[k], o_line.number, "ORDER entry"));
  }
  {
    std::set<std::size_t> uniq(order.begin(), order.end());
    if (order.size() != m || uniq.size() != m || (!uniq.empty() && *uniq.rbegin() >= m)) {
      throw KeyParseError(o_line.number, "ORDER is not a permutation of 0.." + std::to_string(m - 1));
    }
  }

  const Line& p_line = expect(lines, idx++, "PLANES", o_line.number);
  std::vector<std::uint8_t> planes;
  std::set<std::uint64_t> seen;
  for (std::size_t k = 1; k < p_line.tokens.size(); ++k) {
    const auto p = parse_uint(p_line.tokens[k], p_line.number, "plane index");
    if (p > 7) throw KeyParseError(p_line.number, "plane index " + std::to_string(p) + " outside [0,7]");
    if (!seen.insert(p).second) throw KeyParseError(p_line.number, "duplicate plane index " + std::to_string(p));
    planes.push_back(static_cast<std::uint8_t>(p));
  }

  if (idx < lines.size()) throw KeyParseError(lines[idx].number, "unexpected trailing content");

  return KeyFile{ScrambleSchedule(side, std::move(stages), std::move(order)), std::move(planes)};
}

}  // namespace catstego
