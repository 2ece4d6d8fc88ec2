#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string_view>

#include "catstego/bitplane.hpp"
#include "catstego/imageio.hpp"
#include "catstego/metrics.hpp"

namespace catstego::cli {

namespace {

KeyFile load_key(const path& p) {
  const auto bytes = io::read_file(p);
  return parse_key(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

// Uniform draw in [0, bound) without the libstdc++/libc++ distribution
// differences, so a seed means the same key everywhere.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

template <class Fn>
int guarded(std::ostream& err, const char* verb, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "catstego " << verb << ": " << e.what() << "\n";
    return 1;
  }
}

void check_distinct_outputs(const std::vector<path>& outs) {
  std::set<path> seen;
  for (const auto& o : outs) {
    if (!seen.insert(o.lexically_normal()).second) {
      throw std::invalid_argument("output path given twice: " + o.string());
    }
  }
}

}  // namespace

int cmd_embed(const EmbedArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, "embed", [&] {
    const KeyFile key = load_key(a.key);
    const GrayImage cover = io::read_gray(a.cover);

    std::vector<BinaryImage> messages;
    for (const auto& m : a.messages) messages.push_back(io::read_binary(m));
    if (a.pack) messages.push_back(pack_payload(io::read_file(*a.pack), cover.side()));

    if (messages.size() != key.planes.size()) {
      throw std::invalid_argument("key lists " + std::to_string(key.planes.size()) + " planes but " +
                                  std::to_string(messages.size()) + " messages were given");
    }
    for (std::size_t k = 0; k < messages.size(); ++k) {
      if (messages[k].side() != cover.side()) {
        throw std::invalid_argument("message " + std::to_string(k) + " is " + std::to_string(messages[k].side()) +
                                    " wide but the cover is " + std::to_string(cover.side()));
      }
    }
    if (key.schedule.side() != cover.side()) {
      throw std::invalid_argument("key side " + std::to_string(key.schedule.side()) + " does not match cover side " +
                                  std::to_string(cover.side()));
    }

    const auto planes = to_planes(key.planes);
    const GrayImage stego = embed(cover, messages, key.schedule, planes);
    io::write_gray(a.out, stego);
    out << to_csv(measure(cover, stego));
    return 0;
  });
}

int cmd_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, "extract", [&] {
    const KeyFile key = load_key(a.key);
    const GrayImage stego = io::read_gray(a.stego);
    const std::size_t wanted = a.outs.size() + (a.unpack ? 1 : 0);
    if (wanted != key.planes.size()) {
      throw std::invalid_argument("key lists " + std::to_string(key.planes.size()) + " planes but " +
                                  std::to_string(wanted) + " outputs were given");
    }
    if (key.schedule.side() != stego.side()) {
      throw std::invalid_argument("key side " + std::to_string(key.schedule.side()) + " does not match stego side " +
                                  std::to_string(stego.side()));
    }
    std::vector<path> all_outs = a.outs;
    if (a.unpack) all_outs.push_back(*a.unpack);
    check_distinct_outputs(all_outs);

    const auto planes = to_planes(key.planes);
    const auto messages = a.raw ? extract_raw(stego, planes) : extract(stego, key.schedule, planes);

    std::vector<std::uint8_t> payload;
    if (a.unpack) payload = unpack_payload(messages.back());

    for (std::size_t k = 0; k < a.outs.size(); ++k) io::write_binary(a.outs[k], messages[k]);
    if (a.unpack) io::write_file_atomic(*a.unpack, payload);
    out << "extracted " << messages.size() << " plane(s)\n";
    return 0;
  });
}

int cmd_scramble(const ScrambleArgs& a, bool inverse, std::ostream& out, std::ostream& err) {
  return guarded(err, inverse ? "unscramble" : "scramble", [&] {
    const KeyFile key = load_key(a.key);
    const auto kind = io::sniff(a.in);
    if (kind == io::NetpbmKind::Gray) {
      const GrayImage img = io::read_gray(a.in);
      io::write_gray(a.out, inverse ? schedule_unscramble(img, key.schedule) : schedule_scramble(img, key.schedule));
    } else {
      const BinaryImage img = io::read_binary(a.in);
      io::write_binary(a.out, inverse ? schedule_unscramble(img, key.schedule) : schedule_scramble(img, key.schedule));
    }
    out << (inverse ? "unscrambled " : "scrambled ") << a.in.string() << " -> " << a.out.string() << "\n";
    return 0;
  });
}

int cmd_period(Family family, std::uint32_t i, std::uint64_t side, std::ostream& out, std::ostream& err) {
  return guarded(err, "period", [&] {
    if (side == 0) throw std::invalid_argument("side must be >= 1");
    out << period(TransformSpec(family, family == Family::Classic ? 1 : i), side) << "\n";
    return 0;
  });
}

std::string sweep_csv(const std::vector<PeriodRow>& rows) {
  std::ostringstream s;
  s << "i,period\n";
  for (const auto& r : rows) s << r.i << "," << r.period << "\n";
  return s.str();
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, "sweep", [&] {
    if (a.side == 0) throw std::invalid_argument("side must be >= 1");
    const auto csv = sweep_csv(period_sweep(a.family, a.from, a.to, a.side));
    if (a.csv) {
      io::write_file_atomic(*a.csv, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
    } else {
      out << csv;
    }
    return 0;
  });
}

int cmd_planes(const path& image, const path& out_dir, std::ostream& out, std::ostream& err) {
  return guarded(err, "planes", [&] {
    const GrayImage img = io::read_gray(image);
    std::filesystem::create_directories(out_dir);
    for (unsigned p = 0; p < 8; ++p) {
      io::write_binary(out_dir / ("plane_" + std::to_string(p) + ".pbm"), get_plane(img, PlaneIndex(p)));
    }
    out << "wrote 8 planes to " << out_dir.string() << "\n";
    return 0;
  });
}

int cmd_metrics(const path& a, const path& b, std::ostream& out, std::ostream& err) {
  return guarded(err, "metrics", [&] {
    out << to_csv(measure(io::read_gray(a), io::read_gray(b)));
    return 0;
  });
}

KeyFile generate_key(const KeygenArgs& a) {
  if (a.side == 0 || a.side > (1u << 15)) throw std::invalid_argument("side must be in [1, 32768]");
  if (a.stages == 0) throw std::invalid_argument("need at least one stage");
  if (a.max_parameter == 0) throw std::invalid_argument("max parameter must be >= 1");
  if (a.stages > 2ull * a.max_parameter) {
    throw std::invalid_argument("cannot draw " + std::to_string(a.stages) + " distinct transforms with i <= " +
                                std::to_string(a.max_parameter));
  }
  std::set<std::uint8_t> uniq;
  for (auto p : a.planes) {
    if (p > 7) throw std::invalid_argument("plane index " + std::to_string(p) + " outside [0,7]");
    if (!uniq.insert(p).second) throw std::invalid_argument("duplicate plane " + std::to_string(p));
  }

  std::mt19937_64 rng(a.seed);
  for (unsigned attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Stage> stages;
    while (stages.size() < a.stages) {
      const Family fam = draw_below(rng, 2) == 0 ? Family::RowFirst : Family::ColFirst;
      const auto i = static_cast<std::uint32_t>(1 + draw_below(rng, a.max_parameter));
      const TransformSpec spec(fam, i);
      if (std::any_of(stages.begin(), stages.end(), [&](const Stage& s) { return s.spec == spec; })) continue;
      const std::uint64_t p = period(spec, a.side);
      const std::uint64_t t = p > 1 ? 1 + draw_below(rng, p - 1) : 0;
      stages.push_back({spec, t});
    }
    std::vector<std::size_t> order(stages.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[draw_below(rng, k)]);

    ScrambleSchedule sched(a.side, std::move(stages), std::move(order));
    // Stages whose powers (nearly) commute make the order worthless as key material.
    if (sched.stages().size() < 2 || sched.stages().size() > 8 || a.max_order_collision >= 1.0 ||
        max_order_collision(sched) <= a.max_order_collision) {
      return KeyFile{std::move(sched), a.planes};
    }
  }
  throw std::runtime_error("could not draw an order-sensitive key; raise --max-collision or change the side");
}

int cmd_keygen(const KeygenArgs& a, std::ostream& out, std::ostream& err) {
  return guarded(err, "keygen", [&] {
    const auto text = serialize_key(generate_key(a));
    if (a.out) {
      io::write_file_atomic(*a.out, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    } else {
      out << text;
    }
    return 0;
  });
}

}  // namespace catstego::cli
