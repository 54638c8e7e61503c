#include "cli.hpp"

#include "inru/analysis/algebraic.hpp"
#include "inru/analysis/experiments.hpp"
#include "inru/analysis/sbox.hpp"
#include "inru/anf.hpp"
#include "inru/cipher.hpp"
#include "inru/hex.hpp"
#include "inru/modes.hpp"
#include "inru/quasigroup.hpp"
#include "inru/random.hpp"
#include "inru/stats/battery.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace inru::cli {

namespace {

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("error reading '" + path + "'");
  }
  return data;
}

// Writes next to the target and renames into place, so a failed run never
// leaves a partial file behind.
void write_file_atomically(const std::string& path, const std::string& data)
{
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw IoError("cannot open '" + tmp.string() + "' for writing");
    }
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    f.flush();
    if (!f) {
      f.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("error writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

int default_jobs()
{
  if (const char* env = std::getenv("INRU_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) {
      return static_cast<int>(v);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Reports go to --out when given, else to the output stream.
void emit(const std::string& out_path, const std::string& text, std::ostream& out)
{
  if (out_path.empty()) {
    out << text;
  } else {
    write_file_atomically(out_path, text);
  }
}

struct KeyOptions
{
  std::string key;
  std::string iv = std::string(16, '0');
  int rounds = k_rounds;

  void add_to(CLI::App* cmd, bool key_required)
  {
    auto* opt = cmd->add_option("--key", key, "master key, 32 hex digits");
    if (key_required) {
      opt->required();
    } else {
      key = std::string(32, '0');
      opt->capture_default_str();
    }
    cmd->add_option("--iv", iv, "key-schedule diversifier, 16 hex digits")->capture_default_str();
    cmd->add_option("--rounds", rounds, "number of rounds (1..16)")
      ->check(CLI::Range(1, k_rounds))
      ->capture_default_str();
  }

  BlockCipher cipher() const
  {
    return BlockCipher(MasterKey::from_hex(lower(key)), Diversifier::from_hex(lower(iv)), rounds);
  }
};

struct ModeOptions
{
  std::string mode = "cbc";
  std::string nonce;
  std::string padding = "pkcs7";

  void add_to(CLI::App* cmd)
  {
    cmd->add_option("--mode", mode, "cbc, cfb, ofb or ctr")->capture_default_str();
    cmd->add_option("--nonce", nonce,
                    "mode IV (16 hex digits) or CTR nonce (8 hex digits); default zero");
    cmd->add_option("--padding", padding, "CBC padding: pkcs7 or none")->capture_default_str();
  }

  modes::ModeConfig config() const
  {
    modes::ModeConfig cfg;
    cfg.mode = modes::parse_mode(lower(mode));
    if (padding == "pkcs7") {
      cfg.padding = modes::Padding::pkcs7;
    } else if (padding == "none") {
      cfg.padding = modes::Padding::none;
    } else {
      throw UsageError("unknown padding '" + padding + "'");
    }
    if (cfg.mode == modes::Mode::ctr) {
      const auto n = parse_hex_nibbles(lower(nonce.empty() ? std::string(8, '0') : nonce), 8);
      for (auto v : n) {
        cfg.nonce = cfg.nonce << 4 | v;
      }
    } else {
      cfg.iv = Block::from_hex(lower(nonce.empty() ? std::string(16, '0') : nonce));
    }
    return cfg;
  }
};

// ---------------------------------------------------------------- commands

int cmd_crypt(bool encrypt,
              const KeyOptions& k,
              const ModeOptions& m,
              const std::string& input,
              const std::string& out_path,
              std::ostream& out)
{
  const BlockCipher cipher = k.cipher();
  const modes::ModeConfig cfg = m.config();
  const std::string data = read_file(input);
  const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(data.data()),
                                            data.size());
  const std::vector<std::uint8_t> result =
    encrypt ? modes::mode_encrypt(cfg, cipher, bytes) : modes::mode_decrypt(cfg, cipher, bytes);
  write_file_atomically(out_path, std::string(result.begin(), result.end()));
  const std::size_t blocks = (std::max(data.size(), result.size()) + 7) / 8;
  out << (encrypt ? "encrypted " : "decrypted ") << blocks << " blocks (" << modes::mode_name(cfg.mode)
      << ", " << data.size() << " -> " << result.size() << " bytes)\n";
  return exit_ok;
}

int cmd_keyschedule(const KeyOptions& k, const std::string& out_path, std::ostream& out)
{
  const MasterKey key = MasterKey::from_hex(lower(k.key));
  const Diversifier iv = Diversifier::from_hex(lower(k.iv));
  const MixedKeyState mixed = key_mixing(key, iv);
  const RoundKeys rk = round_key_generation(mixed);
  std::ostringstream text;
  text << "mixed " << mixed.to_hex() << '\n';
  for (std::size_t i = 0; i < rk.keys.size(); i++) {
    text << "rk" << i << (i < 10 ? "  " : " ") << rk[i].to_hex() << '\n';
  }
  emit(out_path, text.str(), out);
  return exit_ok;
}

std::string random_hex(std::mt19937_64& rng, std::size_t digits)
{
  static constexpr char hex[] = "0123456789abcdef";
  std::string s;
  while (s.size() < digits) {
    std::uint64_t v = rng();
    for (int i = 0; i < 16 && s.size() < digits; i++) {
      s += hex[v & 0xf];
      v >>= 4;
    }
  }
  return s;
}

int cmd_vectors_generate(std::uint64_t count,
                         std::uint64_t seed,
                         int rounds,
                         const std::string& out_path,
                         std::ostream& out)
{
  std::ostringstream text;
  text << "# known-answer vectors, " << rounds << " rounds, seed " << seed << '\n';
  text << "# fields: key (32 hex), iv = key-schedule diversifier (16 hex), pt, ct\n";
  if (rounds != k_rounds) {
    text << "rounds=" << rounds << '\n';
  }
  auto rng = make_rng(seed, 0);
  for (std::uint64_t i = 0; i < count; i++) {
    const std::string key = random_hex(rng, 32);
    const std::string iv = random_hex(rng, 16);
    const Block pt(rng());
    const BlockCipher cipher(MasterKey::from_hex(key), Diversifier::from_hex(iv), rounds);
    text << "key=" << key << " iv=" << iv << " pt=" << pt.to_hex()
         << " ct=" << cipher.encrypt(pt).to_hex() << '\n';
  }
  emit(out_path, text.str(), out);
  return exit_ok;
}

int cmd_vectors_verify(const std::string& path, int rounds, std::ostream& out, std::ostream& err)
{
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  while (std::getline(in, line)) {
    line_no++;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (line.rfind("rounds=", 0) == 0) {
      try {
        rounds = std::stoi(line.substr(7));
      } catch (const std::exception&) {
        rounds = 0;
      }
      if (rounds < 1 || rounds > k_rounds) {
        throw DataError("line " + std::to_string(line_no) + ": bad round count");
      }
      continue;
    }
    std::istringstream fields(line);
    std::string field;
    std::string key, iv, pt, ct;
    while (fields >> field) {
      const auto eq = field.find('=');
      const std::string name = field.substr(0, eq);
      const std::string value = eq == std::string::npos ? "" : lower(field.substr(eq + 1));
      if (name == "key") {
        key = value;
      } else if (name == "iv") {
        iv = value;
      } else if (name == "pt") {
        pt = value;
      } else if (name == "ct") {
        ct = value;
      }
    }
    checked++;
    try {
      if (key.empty() || pt.empty() || ct.empty()) {
        throw HexError("missing field");
      }
      const BlockCipher cipher(MasterKey::from_hex(key),
                               Diversifier::from_hex(iv.empty() ? std::string(16, '0') : iv), rounds);
      const std::string got = cipher.encrypt(Block::from_hex(pt)).to_hex();
      if (got != lower(Block::from_hex(ct).to_hex())) {
        failures++;
        err << "line " << line_no << ": ct mismatch, file " << ct << ", computed " << got << '\n';
      }
    } catch (const HexError& e) {
      failures++;
      err << "line " << line_no << ": malformed vector (" << e.what() << ")\n";
    }
  }
  out << "verified " << checked << " vectors, " << failures << " failures\n";
  return failures == 0 && checked > 0 ? exit_ok : exit_data;
}

int cmd_table(bool ddt,
              const std::string& sbox,
              int leader,
              const std::string& out_path,
              std::ostream& out)
{
  const auto& q = qg::Quasigroup::inru();
  analysis::SboxView view;
  std::string title;
  if (sbox == "wide") {
    view = analysis::SboxView::wide(q);
    title = "8x4 Sbox (l, x) -> l * x, input l << 4 | x";
  } else if (sbox == "row") {
    view = analysis::SboxView::row(q, static_cast<qg::Element>(leader));
    title = "4x4 row Sbox x -> " + std::to_string(leader) + " * x";
  } else {
    throw UsageError("--sbox must be wide or row");
  }
  emit(out_path,
       ddt ? analysis::render_ddt(analysis::build_ddt(view), title)
           : analysis::render_lat(analysis::build_lat(view), title),
       out);
  return exit_ok;
}

std::string describe_degrees(const qg::Quasigroup& q)
{
  int lo = 1000;
  int hi = 0;
  for (unsigned mask = 1; mask < q.order(); mask++) {
    const int d = qg::algebraic_degree(q, mask);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  const std::string count = std::to_string(q.order() - 1);
  if (lo == hi) {
    return std::to_string(lo) + " (all " + count + " nonzero components)";
  }
  return std::to_string(lo) + ".." + std::to_string(hi) + " (over " + count + " nonzero components)";
}

int cmd_qg_check(const std::string& square_path, const std::string& out_path, std::ostream& out)
{
  qg::Quasigroup q = qg::Quasigroup::inru();
  if (!square_path.empty()) {
    try {
      q = qg::parse_square(read_file(square_path));
    } catch (const qg::LatinSquareError& e) {
      throw DataError(std::string("latin=false: ") + e.what());
    }
  }
  std::ostringstream text;
  const auto medial = qg::is_medial(q);
  text << "order=" << q.order() << '\n';
  text << "latin=" << (qg::check_latin(q) ? "true" : "false") << '\n';
  text << "subquasigroup=" << (qg::has_proper_subquasigroup(q) ? "true" : "false") << '\n';
  text << "medial=" << (medial.medial ? "true" : "false");
  if (medial.witness) {
    const auto& w = *medial.witness;
    text << " (witness x=" << int(w[0]) << " y=" << int(w[1]) << " u=" << int(w[2])
         << " v=" << int(w[3]) << ')';
  }
  text << '\n';
  text << "simple=" << (qg::is_simple(q) ? "true" : "false") << '\n';
  const std::size_t n = q.order();
  if (n >= 2 && (n & (n - 1)) == 0) {
    text << "degree=" << describe_degrees(q) << '\n';
    text << "left_division_degree="
         << describe_degrees(qg::conjugate(q, qg::Conjugate::left_division)) << '\n';
  }
  emit(out_path, text.str(), out);
  return exit_ok;
}

int cmd_algsys(int rounds, bool size_only, const std::string& out_path, std::ostream& out)
{
  const analysis::SystemSize size = analysis::count_system_size(rounds);
  std::ostringstream summary;
  summary << "rounds " << size.rounds << '\n'
          << "equations " << size.equations << " (" << size.nonlinear_equations << " nonlinear, "
          << size.linear_equations << " linear)\n"
          << "variables " << size.variables << " (" << size.unknowns << " unknown)\n"
          << "variables after linear elimination " << size.variables_after_elimination << '\n';
  if (size_only) {
    emit(out_path, summary.str(), out);
    return exit_ok;
  }
  const std::string system = analysis::emit_algebraic_system(rounds).render();
  if (out_path.empty()) {
    out << system;
  } else {
    write_file_atomically(out_path, system);
    out << summary.str();
  }
  return exit_ok;
}

int cmd_nist(const std::string& mode,
             const std::string& input,
             const stats::ExperimentSpec& base,
             const std::string& format,
             const std::string& out_path,
             std::ostream& out)
{
  std::vector<modes::Mode> mode_list;
  if (mode == "all") {
    mode_list = {modes::Mode::cbc, modes::Mode::cfb, modes::Mode::ofb, modes::Mode::ctr};
  } else {
    mode_list = {modes::parse_mode(mode)};
  }
  std::vector<modes::Fill> fills;
  if (input == "zeros" || input == "both") {
    fills.push_back(modes::Fill::zeros);
  }
  if (input == "ones" || input == "both") {
    fills.push_back(modes::Fill::ones);
  }
  if (fills.empty()) {
    throw UsageError("--input must be zeros, ones or both");
  }
  if (format != "table" && format != "records") {
    throw UsageError("--format must be table or records");
  }
  std::vector<stats::ExperimentReport> reports;
  for (auto fill : fills) {
    for (auto m : mode_list) {
      stats::ExperimentSpec spec = base;
      spec.mode = m;
      spec.input = fill;
      reports.push_back(stats::nist_experiment(spec));
    }
  }
  emit(out_path, format == "table" ? stats::render_table(reports) : stats::render_records(reports),
       out);
  return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"INRU block cipher: encryption, key schedule, test vectors and analyses"};
  app.name(args.empty() ? "inru" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);

  std::string out_path;
  int jobs = default_jobs();
  std::uint64_t seed = 1;
  std::function<int()> action;

  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (written atomically)");
  };
  const auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads (default: INRU_JOBS or CPU count)")
      ->check(CLI::Range(1, 1024));
  };
  const auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "experiment seed")->capture_default_str();
  };

  // encrypt / decrypt
  KeyOptions crypt_key;
  ModeOptions crypt_mode;
  std::string crypt_input;
  for (bool enc : {true, false}) {
    auto* cmd = app.add_subcommand(enc ? "encrypt" : "decrypt",
                                   enc ? "encrypt a file under a block cipher mode"
                                       : "decrypt a file under a block cipher mode");
    crypt_key.add_to(cmd, true);
    crypt_mode.add_to(cmd);
    cmd->add_option("input", crypt_input, "input file")->required();
    cmd->add_option("--out", out_path, "output file")->required();
    cmd->callback([&, enc] {
      action = [&, enc] { return cmd_crypt(enc, crypt_key, crypt_mode, crypt_input, out_path, out); };
    });
  }

  // keyschedule
  KeyOptions ks_key;
  auto* ks = app.add_subcommand("keyschedule", "print the mixed key state and the 17 round keys");
  ks_key.add_to(ks, false);
  add_out(ks);
  ks->callback([&] { action = [&] { return cmd_keyschedule(ks_key, out_path, out); }; });

  // vectors
  auto* vectors = app.add_subcommand("vectors", "generate or verify known-answer vectors");
  vectors->require_subcommand(1);
  std::uint64_t vec_count = 100;
  int vec_rounds = k_rounds;
  std::string vec_file;
  auto* gen = vectors->add_subcommand("generate", "write seeded random vectors");
  gen->add_option("--count", vec_count, "number of vectors")->capture_default_str();
  gen->add_option("--rounds", vec_rounds, "rounds")->check(CLI::Range(1, k_rounds));
  add_seed(gen);
  add_out(gen);
  gen->callback([&] {
    action = [&] { return cmd_vectors_generate(vec_count, seed, vec_rounds, out_path, out); };
  });
  auto* verify = vectors->add_subcommand("verify", "re-encrypt every vector of a file");
  verify->add_option("file", vec_file, "vector file")->required();
  verify->add_option("--rounds", vec_rounds, "rounds (a rounds= line in the file overrides)")
    ->check(CLI::Range(1, k_rounds));
  verify->callback([&] { action = [&] { return cmd_vectors_verify(vec_file, vec_rounds, out, err); }; });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run an analysis instrument");
  analyze->require_subcommand(1);

  std::string sbox = "wide";
  int leader = 0;
  for (bool ddt : {true, false}) {
    auto* cmd = analyze->add_subcommand(ddt ? "ddt" : "lat",
                                        ddt ? "difference distribution table"
                                            : "linear approximation table (signed bias)");
    cmd->add_option("--sbox", sbox, "wide (8x4) or row (4x4)")->capture_default_str();
    cmd->add_option("--leader", leader, "leader of the row Sbox")->check(CLI::Range(0, 15));
    add_out(cmd);
    cmd->callback([&, ddt] { action = [&, ddt] { return cmd_table(ddt, sbox, leader, out_path, out); }; });
  }

  int dp_rounds = 2;
  std::string dp_delta = "0000000000000001";
  std::uint64_t dp_trials = 1000;
  auto* dp = analyze->add_subcommand("diff-prop", "difference propagation through reduced rounds");
  dp->add_option("--rounds", dp_rounds, "rounds")->check(CLI::Range(1, k_rounds))->capture_default_str();
  dp->add_option("--delta", dp_delta, "plaintext difference, 16 hex digits")->capture_default_str();
  dp->add_option("--trials", dp_trials, "pairs")->check(CLI::PositiveNumber)->capture_default_str();
  add_seed(dp);
  add_jobs(dp);
  add_out(dp);
  dp->callback([&] {
    action = [&] {
      const auto r = analysis::diff_propagation_experiment(dp_rounds, Block::from_hex(lower(dp_delta)),
                                                           dp_trials, seed, jobs);
      emit(out_path, analysis::render_diff_propagation(r), out);
      return exit_ok;
    };
  });

  std::uint64_t av_trials = 10000;
  int av_keys = 6;
  int av_rounds = k_rounds;
  for (bool sac : {false, true}) {
    auto* cmd = analyze->add_subcommand(sac ? "sac" : "avalanche",
                                        sac ? "strict avalanche matrix" : "plaintext avalanche");
    cmd->add_option("--trials", av_trials, "plaintexts per key")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
    cmd->add_option("--keys", av_keys, "random keys")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--rounds", av_rounds, "rounds")->check(CLI::Range(1, k_rounds));
    add_seed(cmd);
    add_jobs(cmd);
    add_out(cmd);
    cmd->callback([&, sac] {
      action = [&, sac] {
        emit(out_path,
             sac ? analysis::render_sac(analysis::sac_matrix(av_trials, av_keys, seed, jobs, av_rounds))
                 : analysis::render_avalanche(
                     analysis::avalanche_plaintext(av_trials, av_keys, seed, jobs, av_rounds)),
             out);
        return exit_ok;
      };
    });
  }

  std::uint64_t ka_trials = 1000;
  auto* ka = analyze->add_subcommand("key-avalanche", "master-key bit dependence");
  ka->add_option("--trials", ka_trials, "random keys")->check(CLI::PositiveNumber)->capture_default_str();
  add_seed(ka);
  add_jobs(ka);
  add_out(ka);
  ka->callback([&] {
    action = [&] {
      emit(out_path, analysis::render_key_avalanche(analysis::avalanche_key(ka_trials, seed, jobs)), out);
      return exit_ok;
    };
  });

  std::string nist_mode = "all";
  std::string nist_input = "both";
  std::string nist_format = "table";
  stats::ExperimentSpec nist_spec;
  auto* nist = analyze->add_subcommand("nist", "statistical battery on mode outputs");
  nist->add_option("--mode", nist_mode, "cbc, cfb, ofb, ctr or all")->capture_default_str();
  nist->add_option("--input", nist_input, "zeros, ones or both")->capture_default_str();
  nist->add_option("--keys", nist_spec.keys, "sequences (one random key each)")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  nist->add_option("--bits", nist_spec.bits_per_sequence, "bits per sequence")
    ->check(CLI::PositiveNumber)
    ->capture_default_str();
  nist->add_option("--alpha", nist_spec.alpha, "significance level")
    ->check(CLI::Range(1e-9, 0.5))
    ->capture_default_str();
  nist->add_option("--format", nist_format, "table or records")->capture_default_str();
  add_seed(nist);
  add_jobs(nist);
  add_out(nist);
  nist->callback([&] {
    action = [&] {
      nist_spec.seed = seed;
      nist_spec.jobs = jobs;
      return cmd_nist(lower(nist_mode), nist_input, nist_spec, nist_format, out_path, out);
    };
  });

  int alg_rounds = 2;
  bool alg_size_only = false;
  auto* alg = analyze->add_subcommand("algsys", "emit the Boolean equation system");
  alg->add_option("--rounds", alg_rounds, "rounds")->check(CLI::Range(1, k_rounds))->capture_default_str();
  alg->add_flag("--size-only", alg_size_only, "print only the equation and variable counts");
  add_out(alg);
  alg->callback([&] { action = [&] { return cmd_algsys(alg_rounds, alg_size_only, out_path, out); }; });

  std::string square_path;
  auto* qgc = analyze->add_subcommand("qg-check", "structure checks on the quasigroup");
  qgc->add_option("--square", square_path, "square file (default: the cipher's square)");
  add_out(qgc);
  qgc->callback([&] { action = [&] { return cmd_qg_check(square_path, out_path, out); }; });

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return exit_usage;
  }
  if (!action) {
    err << app.get_name() << ": no command given\n";
    return exit_usage;
  }

  try {
    return action();
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return exit_io;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return exit_data;
  } catch (const modes::ModeError& e) {
    err << "data error: " << e.what() << '\n';
    return exit_data;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  }
}

} // namespace inru::cli
