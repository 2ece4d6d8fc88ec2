#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

const std::map<std::string, catstego::Family> kFamilies{
    {"CLASSIC", catstego::Family::Classic},
    {"ROWFIRST", catstego::Family::RowFirst},
    {"COLFIRST", catstego::Family::ColFirst},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace catstego;
  CLI::App app{"catstego: Arnold cat map scrambling with bit-plane steganography"};
  app.require_subcommand(1);
  int status = 0;

  cli::EmbedArgs embed;
  auto* sc_embed = app.add_subcommand("embed", "Scramble messages with a key and hide them in a cover");
  sc_embed->add_option("--cover", embed.cover, "P5 cover image")->required()->check(CLI::ExistingFile);
  sc_embed->add_option("--message", embed.messages, "P4 message, one per key plane (repeatable)")
      ->check(CLI::ExistingFile);
  sc_embed->add_option("--pack", embed.pack, "Arbitrary file packed into the last key plane")
      ->check(CLI::ExistingFile);
  sc_embed->add_option("--key", embed.key, "Key file")->required()->check(CLI::ExistingFile);
  sc_embed->add_option("--out", embed.out, "Stego image to write (P5)")->required();
  sc_embed->callback([&] { status = cli::cmd_embed(embed, std::cout, std::cerr); });

  cli::ExtractArgs extract;
  auto* sc_extract = app.add_subcommand("extract", "Recover messages from a stego image");
  sc_extract->add_option("--stego", extract.stego, "P5 stego image")->required()->check(CLI::ExistingFile);
  sc_extract->add_option("--key", extract.key, "Key file")->required()->check(CLI::ExistingFile);
  sc_extract->add_option("--out", extract.outs, "P4 output, one per key plane (repeatable)");
  sc_extract->add_option("--unpack", extract.unpack, "Decode the last key plane as a packed payload");
  sc_extract->add_flag("--raw", extract.raw, "Write the stored planes without unscrambling");
  sc_extract->callback([&] { status = cli::cmd_extract(extract, std::cout, std::cerr); });

  cli::ScrambleArgs scr;
  auto* sc_scramble = app.add_subcommand("scramble", "Apply a key's schedule to a P4/P5 image");
  auto* sc_unscramble = app.add_subcommand("unscramble", "Invert a key's schedule on a P4/P5 image");
  for (auto* sc : {sc_scramble, sc_unscramble}) {
    sc->add_option("--in", scr.in, "Input image")->required()->check(CLI::ExistingFile);
    sc->add_option("--key", scr.key, "Key file")->required()->check(CLI::ExistingFile);
    sc->add_option("--out", scr.out, "Output image")->required();
  }
  sc_scramble->callback([&] { status = cli::cmd_scramble(scr, false, std::cout, std::cerr); });
  sc_unscramble->callback([&] { status = cli::cmd_scramble(scr, true, std::cout, std::cerr); });

  Family period_family = Family::Classic;
  std::uint32_t period_i = 1;
  std::uint64_t period_n = 0;
  auto* sc_period = app.add_subcommand("period", "Period of one transform at side N");
  sc_period->add_option("--family", period_family, "CLASSIC, ROWFIRST or COLFIRST")
      ->required()
      ->transform(CLI::CheckedTransformer(kFamilies));
  sc_period->add_option("--i", period_i, "Family parameter")->check(CLI::PositiveNumber);
  sc_period->add_option("--n", period_n, "Grid side")->required()->check(CLI::PositiveNumber);
  sc_period->callback([&] { status = cli::cmd_period(period_family, period_i, period_n, std::cout, std::cerr); });

  cli::SweepArgs sweep;
  auto* sc_sweep = app.add_subcommand("sweep", "Period table over a range of i");
  sc_sweep->add_option("--family", sweep.family, "ROWFIRST or COLFIRST")
      ->required()
      ->transform(CLI::CheckedTransformer(kFamilies));
  sc_sweep->add_option("--from", sweep.from, "First i")->check(CLI::PositiveNumber);
  sc_sweep->add_option("--to", sweep.to, "Last i")->check(CLI::PositiveNumber);
  sc_sweep->add_option("--n", sweep.side, "Grid side")->check(CLI::PositiveNumber);
  sc_sweep->add_option("--csv", sweep.csv, "Write the table here instead of stdout");
  sc_sweep->callback([&] { status = cli::cmd_sweep(sweep, std::cout, std::cerr); });

  std::filesystem::path planes_in, planes_dir;
  auto* sc_planes = app.add_subcommand("planes", "Write the 8 bit planes of a P5 image as P4 files");
  sc_planes->add_option("--image", planes_in, "P5 image")->required()->check(CLI::ExistingFile);
  sc_planes->add_option("--out-dir", planes_dir, "Directory for plane_0.pbm .. plane_7.pbm")->required();
  sc_planes->callback([&] { status = cli::cmd_planes(planes_in, planes_dir, std::cout, std::cerr); });

  std::filesystem::path metrics_a, metrics_b;
  auto* sc_metrics = app.add_subcommand("metrics", "MSE, PSNR and bit preservation between two P5 images");
  sc_metrics->add_option("--a", metrics_a, "Reference (cover)")->required()->check(CLI::ExistingFile);
  sc_metrics->add_option("--b", metrics_b, "Test (stego)")->required()->check(CLI::ExistingFile);
  sc_metrics->callback([&] { status = cli::cmd_metrics(metrics_a, metrics_b, std::cout, std::cerr); });

  cli::KeygenArgs keygen;
  std::vector<unsigned> keygen_planes{0};
  auto* sc_keygen = app.add_subcommand("keygen", "Write a random key from an explicit seed");
  sc_keygen->add_option("--n", keygen.side, "Grid side")->required()->check(CLI::Range(1, 32768));
  sc_keygen->add_option("--m", keygen.stages, "Number of stages")->check(CLI::PositiveNumber);
  sc_keygen->add_option("--seed", keygen.seed, "RNG seed")->required();
  sc_keygen->add_option("--planes", keygen_planes, "Target planes, 0 = LSB")->delimiter(',')->check(CLI::Range(0, 7));
  sc_keygen->add_option("--max-i", keygen.max_parameter, "Largest family parameter")->check(CLI::PositiveNumber);
  sc_keygen
      ->add_option("--max-collision", keygen.max_order_collision,
                   "Reject keys where another stage order agrees on more than this fraction of pixels")
      ->check(CLI::Range(0.0, 1.0));
  sc_keygen->add_option("--out", keygen.out, "Key file to write (stdout if omitted)");
  sc_keygen->callback([&] {
    keygen.planes.assign(keygen_planes.begin(), keygen_planes.end());
    status = cli::cmd_keygen(keygen, std::cout, std::cerr);
  });

  CLI11_PARSE(app, argc, argv);
  return status;
}
