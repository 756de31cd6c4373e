// Command-line front end: gen-key, embed, recover, verify, attack, metrics,
// demo-paper. Machine-readable results go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 watermark absent, 2 usage or file-format error,
// 3 precondition violation, 4 I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmi/rmi.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAbsent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(rmi::ErrorKind kind) {
  using rmi::ErrorKind;
  switch (kind) {
    case ErrorKind::MalformedHeader:
    case ErrorKind::TruncatedPayload:
    case ErrorKind::TrailingData:
    case ErrorKind::MalformedPayload:
    case ErrorKind::ValueOutOfRange:
    case ErrorKind::BadMagic:
    case ErrorKind::MalformedDimensions:
    case ErrorKind::UnknownMode:
    case ErrorKind::MalformedSeed:
    case ErrorKind::MalformedEntry:
    case ErrorKind::EntryOutOfRange:
    case ErrorKind::WrongEntryCount:
    case ErrorKind::InvalidSpec:
      return kExitUsage;
    case ErrorKind::ZeroDimension:
    case ErrorKind::LengthMismatch:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::BlockOutOfBounds:
    case ErrorKind::PixelTooBright:
    case ErrorKind::NegativePixel:
    case ErrorKind::InvalidThreshold:
    case ErrorKind::EmptyInput:
    case ErrorKind::RectOutOfBounds:
      return kExitPrecondition;
  }
  return kExitPrecondition;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("read failed on " + path);
  return bytes;
}

void write_file(const std::string& path, const std::uint8_t* data,
                std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(size));
  out.flush();
  if (!out) throw IoError("write failed on " + path);
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  write_file(path, bytes.data(), bytes.size());
}

void write_file(const std::string& path, const std::string& text) {
  write_file(path, reinterpret_cast<const std::uint8_t*>(text.data()),
             text.size());
}

rmi::GrayImage load_image(const std::string& path) {
  return rmi::load_pgm(read_file(path));
}

rmi::RmiKey load_key(const std::string& path) {
  const auto bytes = read_file(path);
  return rmi::parse_key(
      std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

struct GenKeyArgs {
  int width = 0;
  int height = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool expand_explicit = false;
};

int run_gen_key(const GenKeyArgs& args) {
  rmi::RmiKey key = rmi::generate_key(args.width, args.height, args.seed);
  if (args.expand_explicit) {
    const auto entries = key.entries();
    key = rmi::key_from_matrix(std::vector<int>(entries.begin(), entries.end()),
                               key.width(), key.height());
  }
  write_file(args.out, rmi::serialize_key(key));
  return kExitOk;
}

struct EmbedArgs {
  std::string host;
  std::string key;
  std::string out;
};

int run_embed(const EmbedArgs& args) {
  const auto host = load_image(args.host);
  const auto key = load_key(args.key);
  const auto watermarked = rmi::embed(host, key);
  write_file(args.out, rmi::save_pgm(watermarked, rmi::PgmVariant::Binary));
  return kExitOk;
}

struct RecoverArgs {
  std::string watermarked;
  std::string key;
  std::string out;
};

int run_recover(const RecoverArgs& args) {
  const auto watermarked = load_image(args.watermarked);
  const auto key = load_key(args.key);
  const auto original = rmi::recover_original(watermarked, key);
  write_file(args.out, rmi::save_pgm(original, rmi::PgmVariant::Binary));
  return kExitOk;
}

struct VerifyArgs {
  std::string watermarked;
  std::string original;
  std::string key;
  double threshold = 0.8;
};

int run_verify(const VerifyArgs& args) {
  const auto watermarked = load_image(args.watermarked);
  const auto original = load_image(args.original);
  const auto key = load_key(args.key);
  const auto report = rmi::verify(watermarked, original, key, args.threshold);
  std::printf("match_ratio=%.6f\nncc=%.6f\ndecision=%s\n", report.match_ratio,
              report.ncc,
              report.decision == rmi::Decision::Present ? "present" : "absent");
  return report.decision == rmi::Decision::Present ? kExitOk : kExitAbsent;
}

struct AttackArgs {
  std::string in;
  std::string out;
  rmi::AttackKind kind = rmi::AttackKind::Identity;
  int amplitude = 0;
  double density = 0.0;
  std::vector<int> rect;
  int fill = 0;
  int levels = 256;
  std::uint64_t seed = 0;
};

// The flags given must match the chosen kind; anything extraneous or
// missing is a usage error.
void check_attack_flags(const CLI::App& cmd, rmi::AttackKind kind) {
  using rmi::AttackKind;
  const std::map<std::string, std::vector<AttackKind>> allowed = {
      {"--amplitude", {AttackKind::UniformNoise}},
      {"--density", {AttackKind::SaltPepper}},
      {"--rect", {AttackKind::CropFill}},
      {"--fill", {AttackKind::CropFill}},
      {"--levels", {AttackKind::Quantize}},
      {"--seed", {AttackKind::UniformNoise, AttackKind::SaltPepper}},
  };
  for (const auto& [flag, kinds] : allowed) {
    const bool given = cmd.count(flag) > 0;
    const bool applies =
        std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
    if (given && !applies) {
      throw CLI::ValidationError(flag + " does not apply to this attack kind");
    }
  }
  if (kind == rmi::AttackKind::CropFill && cmd.count("--rect") == 0) {
    throw CLI::ValidationError("--kind crop_fill requires --rect");
  }
}

int run_attack(const AttackArgs& args) {
  const auto image = load_image(args.in);
  rmi::AttackSpec spec;
  spec.kind = args.kind;
  spec.amplitude = args.amplitude;
  spec.density = args.density;
  if (!args.rect.empty()) {
    spec.rect = rmi::Rect{args.rect[0], args.rect[1], args.rect[2], args.rect[3]};
  }
  spec.fill = static_cast<std::uint8_t>(args.fill);
  spec.levels = args.levels;
  spec.seed = args.seed;
  const auto attacked = rmi::apply_attack(image, spec);
  write_file(args.out, rmi::save_pgm(attacked, rmi::PgmVariant::Binary));
  return kExitOk;
}

struct MetricsArgs {
  std::string a;
  std::string b;
};

int run_metrics(const MetricsArgs& args) {
  const auto a = load_image(args.a);
  const auto b = load_image(args.b);
  std::fputs(rmi::format_metrics(rmi::compare_images(a, b)).c_str(), stdout);
  return kExitOk;
}

int run_demo_paper() {
  return rmi::run_worked_example(std::cout, rmi::worked_example()) ? kExitOk
                                                                   : kExitAbsent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive random-matrix watermarking for grayscale PGM images"};
  app.require_subcommand(1);

  GenKeyArgs gen_args;
  auto* gen = app.add_subcommand("gen-key", "Generate a key file from a seed");
  gen->add_option("--width", gen_args.width, "Key width in entries")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--height", gen_args.height, "Key height in entries")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.seed, "64-bit generator seed")->required();
  gen->add_option("--out", gen_args.out, "Output key file path")->required();
  gen->add_flag("--explicit", gen_args.expand_explicit,
                "Write the expanded entry matrix instead of the seed");

  EmbedArgs embed_args;
  auto* embed = app.add_subcommand("embed", "Embed a key into a host image");
  embed->add_option("--host", embed_args.host, "Host PGM path")->required();
  embed->add_option("--key", embed_args.key, "Key file path")->required();
  embed->add_option("--out", embed_args.out, "Watermarked PGM path")->required();

  RecoverArgs recover_args;
  auto* recover =
      app.add_subcommand("recover", "Recover the original image with the key");
  recover->add_option("--watermarked", recover_args.watermarked,
                      "Watermarked PGM path")
      ->required();
  recover->add_option("--key", recover_args.key, "Key file path")->required();
  recover->add_option("--out", recover_args.out, "Recovered PGM path")
      ->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check a watermarked image against the original and key");
  verify->add_option("--watermarked", verify_args.watermarked,
                     "Watermarked PGM path")
      ->required();
  verify->add_option("--original", verify_args.original, "Original PGM path")
      ->required();
  verify->add_option("--key", verify_args.key, "Key file path")->required();
  verify->add_option("--threshold", verify_args.threshold,
                     "Match-ratio decision threshold")
      ->check(CLI::Range(0.0, 1.0));

  AttackArgs attack_args;
  auto* attack = app.add_subcommand("attack", "Corrupt an image");
  attack->add_option("--in", attack_args.in, "Input PGM path")->required();
  attack->add_option("--out", attack_args.out, "Output PGM path")->required();
  attack
      ->add_option("--kind", attack_args.kind,
                   "identity|uniform_noise|salt_pepper|crop_fill|quantize")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, rmi::AttackKind>{
              {"identity", rmi::AttackKind::Identity},
              {"uniform_noise", rmi::AttackKind::UniformNoise},
              {"salt_pepper", rmi::AttackKind::SaltPepper},
              {"crop_fill", rmi::AttackKind::CropFill},
              {"quantize", rmi::AttackKind::Quantize}}));
  attack->add_option("--amplitude", attack_args.amplitude,
                     "uniform_noise: max absolute perturbation")
      ->check(CLI::NonNegativeNumber);
  attack->add_option("--density", attack_args.density,
                     "salt_pepper: corruption probability")
      ->check(CLI::Range(0.0, 1.0));
  attack->add_option("--rect", attack_args.rect, "crop_fill: x,y,w,h")
      ->delimiter(',')
      ->expected(4);
  attack->add_option("--fill", attack_args.fill, "crop_fill: replacement value")
      ->check(CLI::Range(0, 255));
  attack->add_option("--levels", attack_args.levels, "quantize: level count")
      ->check(CLI::Range(2, 256));
  attack->add_option("--seed", attack_args.seed, "Noise stream seed");

  MetricsArgs metrics_args;
  auto* metrics =
      app.add_subcommand("metrics", "Print MSE/PSNR/NCC for two images");
  metrics->add_option("--a", metrics_args.a, "First PGM path")->required();
  metrics->add_option("--b", metrics_args.b, "Second PGM path")->required();

  auto* demo = app.add_subcommand(
      "demo-paper", "Reproduce the built-in 8x8 worked example");

  try {
    app.parse(argc, argv);
    if (attack->parsed()) check_attack_flags(*attack, attack_args.kind);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen_key(gen_args);
    if (embed->parsed()) return run_embed(embed_args);
    if (recover->parsed()) return run_recover(recover_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (attack->parsed()) return run_attack(attack_args);
    if (metrics->parsed()) return run_metrics(metrics_args);
    if (demo->parsed()) return run_demo_paper();
  } catch (const rmi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
