#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "catstego/bitplane.hpp"
#include "catstego/imageio.hpp"
#include "catstego/metrics.hpp"
#include "commands.hpp"
#include "support/fixtures.hpp"

#ifndef CATSTEGO_CLI_PATH
#error "CATSTEGO_CLI_PATH must point at the built catstego binary"
#endif

namespace catstego::cli {
namespace {

void write_text(const path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

std::string read_text(const path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& args, const path& stdout_file) {
  const std::string cmd = std::string(CATSTEGO_CLI_PATH) + " " + args + " > " + stdout_file.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

TEST(CmdPeriod, GoldenValues) {
  std::ostringstream out, err;
  EXPECT_EQ(cmd_period(Family::Classic, 1, 3, out, err), 0);
  EXPECT_EQ(cmd_period(Family::RowFirst, 3, 3, out, err), 0);
  std::ostringstream five_col, five_classic;
  EXPECT_EQ(cmd_period(Family::ColFirst, 1, 5, five_col, err), 0);
  EXPECT_EQ(cmd_period(Family::Classic, 1, 5, five_classic, err), 0);
  EXPECT_EQ(out.str(), "4\n8\n");
  EXPECT_EQ(five_col.str(), five_classic.str());
  EXPECT_NE(cmd_period(Family::Classic, 1, 0, out, err), 0);
}

TEST(CmdSweep, CsvTable) {
  std::ostringstream out, err;
  SweepArgs a;
  a.family = Family::RowFirst;
  a.from = 3;
  a.to = 3;
  a.side = 3;
  EXPECT_EQ(cmd_sweep(a, out, err), 0);
  EXPECT_EQ(out.str(), "i,period\n3,8\n");
}

TEST(CmdKeygen, DeterministicAndValid) {
  KeygenArgs a;
  a.side = 128;
  a.stages = 3;
  a.seed = 1234;
  a.planes = {0, 1, 2};
  const auto k1 = generate_key(a);
  const auto k2 = generate_key(a);
  EXPECT_EQ(k1, k2);
  EXPECT_EQ(parse_key(serialize_key(k1)), k1);
  for (const auto& s : k1.schedule.stages()) {
    EXPECT_NE(s.spec.family(), Family::Classic);
    const auto p = period(s.spec, 128);
    EXPECT_GE(s.iterations, 1u);
    EXPECT_LT(s.iterations, p);
  }
  EXPECT_LE(max_order_collision(k1.schedule), 1.0 / 16);
  a.seed = 1235;
  EXPECT_NE(generate_key(a), k1);
  a.planes = {0, 0};
  EXPECT_THROW(generate_key(a), std::invalid_argument);
  a.planes = {0};
  a.stages = 41;
  EXPECT_THROW(generate_key(a), std::invalid_argument);
}

class CliFiles : public ::testing::Test {
 protected:
  testing::TempDir dir{"cli"};
  std::ostringstream out, err;

  void SetUp() override {
    io::write_gray(dir / "cover.pgm", testing::natural_gray(64, 1));
    for (int k = 0; k < 3; ++k) {
      io::write_binary(dir / ("m" + std::to_string(k) + ".pbm"), testing::natural_message(64, 10 + k));
    }
    KeygenArgs kg;
    kg.side = 64;
    kg.stages = 2;
    kg.seed = 77;
    kg.planes = {0, 1, 2};
    kg.out = dir / "key.txt";
    ASSERT_EQ(cmd_keygen(kg, out, err), 0) << err.str();
  }

  EmbedArgs embed_args() {
    EmbedArgs a;
    a.cover = dir / "cover.pgm";
    a.messages = {dir / "m0.pbm", dir / "m1.pbm", dir / "m2.pbm"};
    a.key = dir / "key.txt";
    a.out = dir / "stego.pgm";
    return a;
  }
};

TEST_F(CliFiles, EmbedThenExtractIsBitExact) {
  ASSERT_EQ(cmd_embed(embed_args(), out, err), 0) << err.str();
  EXPECT_NE(out.str().find("psnr,"), std::string::npos);

  ExtractArgs x;
  x.stego = dir / "stego.pgm";
  x.key = dir / "key.txt";
  x.outs = {dir / "r0.pbm", dir / "r1.pbm", dir / "r2.pbm"};
  ASSERT_EQ(cmd_extract(x, out, err), 0) << err.str();
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(io::read_binary(x.outs[k]), io::read_binary(dir / ("m" + std::to_string(k) + ".pbm")));
  }
}

TEST_F(CliFiles, RawExtractShowsScrambledPlanes) {
  ASSERT_EQ(cmd_embed(embed_args(), out, err), 0) << err.str();
  ExtractArgs x;
  x.stego = dir / "stego.pgm";
  x.key = dir / "key.txt";
  x.outs = {dir / "r0.pbm", dir / "r1.pbm", dir / "r2.pbm"};
  x.raw = true;
  ASSERT_EQ(cmd_extract(x, out, err), 0) << err.str();
  const auto key = parse_key(read_text(dir / "key.txt"));
  const auto m0 = io::read_binary(dir / "m0.pbm");
  EXPECT_EQ(io::read_binary(x.outs[0]), schedule_scramble(m0, key.schedule));
  EXPECT_NE(io::read_binary(x.outs[0]), m0);
}

TEST_F(CliFiles, SideMismatchWritesNothing) {
  io::write_binary(dir / "small.pbm", BinaryImage(32));
  auto a = embed_args();
  a.messages[1] = dir / "small.pbm";
  EXPECT_NE(cmd_embed(a, out, err), 0);
  EXPECT_FALSE(std::filesystem::exists(a.out));
  EXPECT_NE(err.str().find("message 1"), std::string::npos) << err.str();
}

TEST_F(CliFiles, MessageCountMustMatchPlanes) {
  auto a = embed_args();
  a.messages.pop_back();
  EXPECT_NE(cmd_embed(a, out, err), 0);
  EXPECT_FALSE(std::filesystem::exists(a.out));
}

TEST_F(CliFiles, PackedPayloadRoundTrip) {
  std::string payload = "attack at dawn\n";
  for (int k = 0; k < 40; ++k) payload += static_cast<char>(k * 37);
  write_text(dir / "payload.bin", payload);
  auto a = embed_args();
  a.messages.pop_back();
  a.pack = dir / "payload.bin";
  ASSERT_EQ(cmd_embed(a, out, err), 0) << err.str();

  ExtractArgs x;
  x.stego = dir / "stego.pgm";
  x.key = dir / "key.txt";
  x.outs = {dir / "r0.pbm", dir / "r1.pbm"};
  x.unpack = dir / "payload.out";
  ASSERT_EQ(cmd_extract(x, out, err), 0) << err.str();
  EXPECT_EQ(read_text(dir / "payload.out"), payload);
}

TEST_F(CliFiles, OversizedPayloadRejected) {
  write_text(dir / "big.bin", std::string(payload_capacity(64) + 1, 'x'));
  auto a = embed_args();
  a.messages.pop_back();
  a.pack = dir / "big.bin";
  EXPECT_NE(cmd_embed(a, out, err), 0);
  EXPECT_NE(err.str().find("max"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(a.out));
}

TEST_F(CliFiles, WrongOrderKeyGivesNoise) {
  ASSERT_EQ(cmd_embed(embed_args(), out, err), 0) << err.str();
  auto key = parse_key(read_text(dir / "key.txt"));
  auto order = key.schedule.order();
  std::reverse(order.begin(), order.end());
  const KeyFile wrong{key.schedule.with_order(order), key.planes};
  write_text(dir / "wrong.txt", serialize_key(wrong));

  ExtractArgs x;
  x.stego = dir / "stego.pgm";
  x.key = dir / "wrong.txt";
  x.outs = {dir / "r0.pbm", dir / "r1.pbm", dir / "r2.pbm"};
  ASSERT_EQ(cmd_extract(x, out, err), 0) << err.str();
  const double agree = bit_agreement(io::read_binary(x.outs[0]), io::read_binary(dir / "m0.pbm"));
  EXPECT_GT(agree, 0.35);
  EXPECT_LT(agree, 0.65);
}

TEST_F(CliFiles, ScrambleUnscrambleBothFormats) {
  ScrambleArgs s{dir / "m0.pbm", dir / "key.txt", dir / "s.pbm"};
  ASSERT_EQ(cmd_scramble(s, false, out, err), 0) << err.str();
  ScrambleArgs u{dir / "s.pbm", dir / "key.txt", dir / "u.pbm"};
  ASSERT_EQ(cmd_scramble(u, true, out, err), 0) << err.str();
  EXPECT_EQ(io::read_binary(dir / "u.pbm"), io::read_binary(dir / "m0.pbm"));

  ScrambleArgs sg{dir / "cover.pgm", dir / "key.txt", dir / "s.pgm"};
  ASSERT_EQ(cmd_scramble(sg, false, out, err), 0) << err.str();
  ScrambleArgs ug{dir / "s.pgm", dir / "key.txt", dir / "u.pgm"};
  ASSERT_EQ(cmd_scramble(ug, true, out, err), 0) << err.str();
  EXPECT_EQ(io::read_gray(dir / "u.pgm"), io::read_gray(dir / "cover.pgm"));
}

TEST_F(CliFiles, PlanesWritesEight) {
  ASSERT_EQ(cmd_planes(dir / "cover.pgm", dir / "planes", out, err), 0) << err.str();
  const auto cover = io::read_gray(dir / "cover.pgm");
  for (unsigned p = 0; p < 8; ++p) {
    EXPECT_EQ(io::read_binary(dir / "planes" / ("plane_" + std::to_string(p) + ".pbm")),
              get_plane(cover, PlaneIndex(p)));
  }
}

TEST_F(CliFiles, MetricsCsv) {
  std::ostringstream same;
  ASSERT_EQ(cmd_metrics(dir / "cover.pgm", dir / "cover.pgm", same, err), 0);
  EXPECT_NE(same.str().find("psnr,inf"), std::string::npos);
  EXPECT_NE(cmd_metrics(dir / "cover.pgm", dir / "missing.pgm", same, err), 0);
}

TEST_F(CliFiles, MalformedKeyReportsLine) {
  write_text(dir / "bad.txt", "N 64\nM 1\nSTAGE WHIRL 1 1\nORDER 0\nPLANES 0\n");
  auto a = embed_args();
  a.messages = {dir / "m0.pbm"};
  a.key = dir / "bad.txt";
  EXPECT_NE(cmd_embed(a, out, err), 0);
  EXPECT_NE(err.str().find("line 3"), std::string::npos) << err.str();
}

// --- the real binary -------------------------------------------------------

TEST_F(CliFiles, BinaryEndToEnd) {
  const auto log = dir / "log.txt";
  const std::string d = dir.path().string();
  ASSERT_EQ(run("embed --cover " + d + "/cover.pgm --message " + d + "/m0.pbm --message " + d + "/m1.pbm --message " +
                    d + "/m2.pbm --key " + d + "/key.txt --out " + d + "/stego.pgm",
                log),
            0)
      << read_text(log);
  EXPECT_NE(read_text(log).find("metric,value"), std::string::npos);
  ASSERT_EQ(run("extract --stego " + d + "/stego.pgm --key " + d + "/key.txt --out " + d + "/r0.pbm --out " + d +
                    "/r1.pbm --out " + d + "/r2.pbm",
                log),
            0)
      << read_text(log);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(read_text(dir / ("r" + std::to_string(k) + ".pbm")), read_text(dir / ("m" + std::to_string(k) + ".pbm")));
  }

  ASSERT_EQ(run("period --family ROWFIRST --i 3 --n 3", log), 0);
  EXPECT_EQ(read_text(log), "8\n");
  ASSERT_EQ(run("keygen --n 64 --m 2 --seed 77 --planes 0,1,2", log), 0);
  EXPECT_EQ(read_text(log), read_text(dir / "key.txt"));
  EXPECT_NE(run("period --family SPIRAL --n 3", log), 0);
  EXPECT_NE(run("embed --cover " + d + "/missing.pgm --key " + d + "/key.txt --out " + d + "/x.pgm", log), 0);
  EXPECT_FALSE(std::filesystem::exists(dir / "x.pgm"));
}

}  // namespace
}  // namespace catstego::cli
