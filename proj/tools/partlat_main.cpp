// partlat: partition-lattice generating sets, counting tables, closure
// experiments, and the challenge-response authentication protocol.
//
// Exit codes: 0 success / verification VALID, 1 verification FAIL or
// runtime failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "partlat/auth.hpp"
#include "partlat/combinatorics.hpp"
#include "partlat/genset.hpp"
#include "partlat/power.hpp"
#include "partlat/wire.hpp"
#include "partlat/zadori.hpp"

namespace {

using namespace partlat;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string indices_text(const std::vector<long long>& indices) {
  if (indices.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i]);
  }
  return out;
}

void print_check(const CheckRecord& rec) {
  std::cout << "CHECK " << rec.name << " " << indices_text(rec.indices) << " "
            << (rec.pass ? "PASS" : "FAIL");
  if (!rec.pass && !rec.detail.empty()) std::cout << "  # " << rec.detail;
  std::cout << "\n";
}

int report_certificate(const Certificate& cert) {
  std::cout << "CHECKS " << cert.checks_run << "\n"
            << (cert.valid ? "VALID" : "INVALID") << "\n";
  return cert.valid ? kExitOk : kExitFail;
}

int report_closure(const ClosureResult& res) {
  std::cout << "closure_size " << res.closure_size << "\n"
            << "atoms_covered " << res.atoms_covered << "\n"
            << "completed " << (res.completed ? "yes" : "no") << "\n"
            << "limit_hit " << (res.limit_hit ? "yes" : "no") << "\n"
            << "GENERATING " << (res.generating ? "yes" : "no") << "\n";
  if (res.generating) return kExitOk;
  return res.limit_hit ? kExitFail : kExitFail;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content))
    throw std::runtime_error("cannot write " + path);
}

// "HOST:PORT" with the last ':' separating the port.
std::pair<std::string, int> parse_endpoint(const std::string& text) {
  std::size_t pos = text.rfind(':');
  if (pos == std::string::npos || pos + 1 == text.size())
    throw CLI::ValidationError("endpoint must be HOST:PORT");
  int port = 0;
  try {
    std::size_t used = 0;
    port = std::stoi(text.substr(pos + 1), &used);
    if (used != text.size() - pos - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw CLI::ValidationError("bad port in '" + text + "'");
  }
  return {text.substr(0, pos), port};
}

int status_to_exit(SessionStatus status) {
  return status == SessionStatus::Ok ? kExitOk : kExitFail;
}

const char* status_name(SessionStatus status) {
  switch (status) {
    case SessionStatus::Pending: return "PENDING";
    case SessionStatus::Ok: return "OK";
    case SessionStatus::Fail: return "FAIL";
    case SessionStatus::Aborted: return "ABORTED";
    case SessionStatus::ProtocolError: return "PROTOCOL-ERROR";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition-lattice generating sets and authentication tool"};
  app.require_subcommand(1);

  // ---- tables ----
  int tables_max_n = 12;
  std::string tables_format = "text";
  auto* tables = app.add_subcommand(
      "tables", "Counting tables: n, maxS(n), m(n), mhat(n)");
  tables->add_option("--max-n", tables_max_n, "Largest n to print")
      ->check(CLI::Range(5, 100000));
  tables->add_option("--format", tables_format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  // ---- zadori ----
  int zadori_n = 5;
  std::string zadori_verify;
  bool zadori_emit_config = false;
  auto* zadori = app.add_subcommand(
      "zadori", "Four-partition generating quadruple of Part(n)");
  zadori->add_option("--n", zadori_n, "Base set size (>= 5)")
      ->required()
      ->check(CLI::Range(5, 20000));
  zadori->add_option("--verify", zadori_verify,
                     "certificate (term tables) or closure (oracle)")
      ->check(CLI::IsMember({"certificate", "closure"}));
  zadori->add_flag("--emit-config", zadori_emit_config,
                   "Also print the vertex map");

  // ---- gen4 ----
  int gen4_n = 7;
  long long gen4_t = -1;
  int gen4_theorem = 1;
  std::string gen4_verify;
  bool gen4_emit = false;
  bool gen4_allow_large = false;
  auto* gen4 = app.add_subcommand(
      "gen4", "Four-element generating families of the power Part(n)^t");
  gen4->add_option("--n", gen4_n, "Base set size (>= 5)")
      ->required()
      ->check(CLI::Range(5, 20000));
  gen4->add_option("--t", gen4_t, "Exponent (default: certified maximum)");
  gen4->add_option("--theorem", gen4_theorem,
                   "1: plain four-generation, 2: order type 1+1+2")
      ->check(CLI::IsMember({1, 2}));
  gen4->add_option("--verify", gen4_verify, "certificate, closure, or both")
      ->check(CLI::IsMember({"certificate", "closure", "both"}));
  gen4->add_flag("--emit", gen4_emit, "Print the four generator tuples");
  gen4->add_flag("--allow-large", gen4_allow_large,
                 "Permit full-exponent builds past the memory guard");

  // ---- closure ----
  std::string closure_shape, closure_gens;
  std::size_t closure_limit = 5'000'000;
  bool closure_full = false;
  auto* closure_cmd = app.add_subcommand(
      "closure", "Sublattice closure of tuples read from a file");
  closure_cmd->add_option("--shape", closure_shape, "Lattice shape P<n>^<t>")
      ->required();
  closure_cmd
      ->add_option("--gens", closure_gens,
                   "File with one tuple text per line")
      ->required();
  closure_cmd->add_option("--limit", closure_limit, "Closure size cap");
  closure_cmd->add_flag("--full", closure_full,
                        "Run to the fixpoint (no atom-cover early exit)");

  // ---- sample ----
  int sample_n = 4, sample_size = 8;
  long long sample_samples = 1000;
  std::uint64_t sample_seed = 0;
  bool sample_csv = false;
  auto* sample = app.add_subcommand(
      "sample", "Fraction of random subsets of Part(n) that generate it");
  sample->add_option("--n", sample_n, "Base set size")->required();
  sample->add_option("--size", sample_size, "Subset size")->required();
  sample->add_option("--samples", sample_samples, "Number of subsets")
      ->required();
  sample->add_option("--seed", sample_seed, "PRNG seed")->required();
  sample->add_flag("--csv", sample_csv, "One CSV row instead of text");

  // ---- distance ----
  std::string dist_shape, dist_a, dist_b;
  auto* dist = app.add_subcommand(
      "distance", "Graded-lattice distance between two tuples");
  dist->add_option("--shape", dist_shape, "Lattice shape P<n>^<t>")
      ->required();
  dist->add_option("--a", dist_a, "First tuple text")->required();
  dist->add_option("--b", dist_b, "Second tuple text")->required();

  // ---- term random ----
  auto* term_cmd = app.add_subcommand("term", "Lattice term utilities");
  term_cmd->require_subcommand(1);
  int term_p = 8, term_steps = 1000;
  std::uint64_t term_seed = 0;
  std::string term_policy = "uniform";
  auto* term_random =
      term_cmd->add_subcommand("random", "Grow a random term and print it");
  term_random->add_option("--p", term_p, "Arity")->check(CLI::Range(2, 1000));
  term_random->add_option("--steps", term_steps, "Growth steps")
      ->check(CLI::Range(0, 10'000'000));
  term_random->add_option("--seed", term_seed, "PRNG seed")->required();
  term_random->add_option("--policy", term_policy, "uniform or depth")
      ->check(CLI::IsMember({"uniform", "depth"}));

  // ---- auth ----
  auto* auth = app.add_subcommand("auth", "Challenge-response authentication");
  auth->require_subcommand(1);

  std::string kg_shape, kg_out, kg_mode = "auto";
  int kg_p = 8;
  std::uint64_t kg_seed = 0;
  auto* keygen = auth->add_subcommand("keygen", "Create a shared secret file");
  keygen->add_option("--shape", kg_shape, "Lattice shape P<n>^<t>")
      ->required();
  keygen->add_option("--p", kg_p, "Secret length (>= 4)")->required();
  keygen->add_option("--seed", kg_seed, "PRNG seed")->required();
  keygen->add_option("--out", kg_out, "Output file")->required();
  keygen
      ->add_option("--mode", kg_mode,
                   "zadori (t = 1), theorem1 (powers), or auto")
      ->check(CLI::IsMember({"auto", "zadori", "theorem1"}));

  std::string serve_listen, serve_secret;
  std::uint64_t serve_seed = 0;
  int serve_steps = 1000, serve_retries = 3;
  bool serve_transcript = false;
  auto* serve = auth->add_subcommand(
      "serve", "Verifier: accept one connection and run a session");
  serve->add_option("--listen", serve_listen, "HOST:PORT")->required();
  serve->add_option("--secret", serve_secret, "Secret file")->required();
  serve->add_option("--seed", serve_seed, "Challenge seed");
  serve->add_option("--steps", serve_steps, "Term growth steps");
  serve->add_option("--max-retries", serve_retries, "Retry budget");
  serve->add_flag("--transcript", serve_transcript, "Dump the transcript");

  std::string prove_connect, prove_secret;
  int prove_q = 8, prove_retries = 3;
  long long prove_min_distance = 3;
  bool prove_strict = false, prove_transcript = false;
  auto* prove =
      auth->add_subcommand("prove", "Prover: connect and run a session");
  prove->add_option("--connect", prove_connect, "HOST:PORT")->required();
  prove->add_option("--secret", prove_secret, "Secret file")->required();
  prove->add_option("--q", prove_q, "Number of challenge terms");
  prove->add_option("--max-retries", prove_retries, "Retry budget");
  prove->add_option("--min-distance", prove_min_distance,
                    "Quality distance threshold");
  prove->add_flag("--strict", prove_strict,
                  "Abort instead of answering a weak challenge");
  prove->add_flag("--transcript", prove_transcript, "Dump the transcript");

  std::string commit_secret, commit_out;
  std::uint64_t commit_seed = 0;
  int commit_q = 8, commit_steps = 1000;
  auto* commit_cmd =
      auth->add_subcommand("commit", "Publish a challenge-response record");
  commit_cmd->add_option("--secret", commit_secret, "Secret file")->required();
  commit_cmd->add_option("--seed", commit_seed, "Challenge seed")->required();
  commit_cmd->add_option("--q", commit_q, "Number of terms");
  commit_cmd->add_option("--steps", commit_steps, "Term growth steps");
  commit_cmd->add_option("--out", commit_out, "Output file (default stdout)");

  std::string vc_commit, vc_secret;
  auto* verify_cmd = auth->add_subcommand(
      "verify", "Check a commitment against a revealed secret");
  verify_cmd->add_option("--commit", vc_commit, "Commitment file")->required();
  verify_cmd->add_option("--secret", vc_secret, "Revealed secret file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tables) {
      std::cout << render_tables(tables_max_n, tables_format == "csv"
                                                   ? TableFormat::Csv
                                                   : TableFormat::Text);
      return kExitOk;
    }

    if (*zadori) {
      auto cfg = build_config(zadori_n);
      for (const auto& part : config_quadruple(cfg))
        std::cout << part.to_canonical() << "\n";
      if (zadori_emit_config) {
        std::cout << "k " << cfg.k << "\n";
        for (int i = 0; i <= cfg.k; ++i)
          std::cout << "a" << i << " " << cfg.a(i) << "\n";
        for (int i = 0; i < cfg.k; ++i)
          std::cout << "b" << i << " " << cfg.b(i) << "\n";
        if (cfg.even) std::cout << "c " << cfg.c() << "\n";
      }
      if (zadori_verify == "certificate") {
        Certificate cert = verify_ladder(zadori_n);
        for (const auto& rec : cert.failures) print_check(rec);
        return report_certificate(cert);
      }
      if (zadori_verify == "closure") {
        std::vector<PartitionTuple> gens;
        for (const auto& part : config_quadruple(cfg)) gens.emplace_back(part);
        return report_closure(closure(gens));
      }
      return kExitOk;
    }

    if (*gen4) {
      PowerGenerators gen =
          gen4_theorem == 1
              ? build_four_generators(gen4_n, gen4_t, gen4_allow_large)
              : build_ordertype_generators(gen4_n);
      if (gen4_theorem == 2 && gen4_t >= 0 &&
          gen4_t != gen.shape.t)
        throw std::invalid_argument(
            "--t is not selectable for the order-type construction");
      std::cout << "shape " << gen.shape.to_string() << "\n";
      auto tuples = generator_tuples(gen);
      if (gen4_emit)
        for (const auto& tuple : tuples) std::cout << tuple.to_text() << "\n";
      int rc = kExitOk;
      if (gen4_verify == "certificate" || gen4_verify == "both") {
        Certificate cert = verify_generators(gen, print_check);
        rc = report_certificate(cert);
        if (rc != kExitOk) return rc;
      }
      if (gen4_verify == "closure" || gen4_verify == "both") {
        rc = report_closure(closure(tuples));
      }
      return rc;
    }

    if (*closure_cmd) {
      LatticeShape shape = LatticeShape::parse(closure_shape);
      std::vector<PartitionTuple> gens;
      std::istringstream in(read_file(closure_gens));
      std::string line;
      while (std::getline(in, line))
        if (!line.empty())
          gens.push_back(PartitionTuple::from_text(line, shape));
      return report_closure(closure(
          gens, {.limit = closure_limit, .early_exit = !closure_full}));
    }

    if (*sample) {
      ExperimentReport rep = sample_generating_fraction(
          sample_n, sample_size, sample_samples, sample_seed);
      if (sample_csv) {
        std::cout << "n,size,samples,found,fraction,seed\n"
                  << rep.n << "," << rep.subset_size << "," << rep.samples
                  << "," << rep.found << "," << rep.fraction << ","
                  << rep.seed << "\n";
      } else {
        std::cout << "n " << rep.n << "\nsize " << rep.subset_size
                  << "\nsamples " << rep.samples << "\nfound " << rep.found
                  << "\nfraction " << rep.fraction << "\nseed " << rep.seed
                  << "\n";
      }
      return kExitOk;
    }

    if (*dist) {
      LatticeShape shape = LatticeShape::parse(dist_shape);
      std::cout << distance(PartitionTuple::from_text(dist_a, shape),
                            PartitionTuple::from_text(dist_b, shape))
                << "\n";
      return kExitOk;
    }

    if (*term_random) {
      Rng rng(term_seed);
      auto result = random_term(term_p, term_steps, rng,
                                term_policy == "depth"
                                    ? LeafPolicy::DepthWeighted
                                    : LeafPolicy::Uniform);
      std::cout << serialize_term(result.term) << "\n";
      return kExitOk;
    }

    if (*keygen) {
      LatticeShape shape = LatticeShape::parse(kg_shape);
      SecretMode mode;
      if (kg_mode == "zadori") mode = SecretMode::PermuteZadori;
      else if (kg_mode == "theorem1") mode = SecretMode::PermuteTheorem1;
      else mode = shape.t == 1 ? SecretMode::PermuteZadori
                               : SecretMode::PermuteTheorem1;
      Secret secret = make_secret(shape, kg_p, kg_seed, mode);
      write_file(kg_out, secret_to_text(secret));
      std::cout << "wrote " << kg_out << "\n";
      return kExitOk;
    }

    if (*serve) {
      Secret secret = secret_from_text(read_file(serve_secret));
      auto [host, port] = parse_endpoint(serve_listen);
      VerifierConfig cfg;
      cfg.steps = serve_steps;
      cfg.seed = serve_seed;
      cfg.max_retries = serve_retries;
      VerifierSession session(std::move(secret), cfg);
      int fd = listen_once(host, port);
      FdLineStream stream(fd, fd, true);
      SessionStatus status = run_verifier(stream, session);
      if (serve_transcript)
        for (const auto& line : session.transcript())
          std::cout << line << "\n";
      std::cout << "SESSION " << status_name(status) << "\n";
      return status_to_exit(status);
    }

    if (*prove) {
      Secret secret = secret_from_text(read_file(prove_secret));
      auto [host, port] = parse_endpoint(prove_connect);
      ProverConfig cfg;
      cfg.q = prove_q;
      cfg.max_retries = prove_retries;
      cfg.min_distance = prove_min_distance;
      cfg.abort_on_poor_quality = prove_strict;
      ProverSession session(std::move(secret), cfg);
      int fd = connect_to(host, port);
      FdLineStream stream(fd, fd, true);
      SessionStatus status = run_prover(stream, session);
      if (prove_transcript)
        for (const auto& line : session.transcript())
          std::cout << line << "\n";
      std::cout << "SESSION " << status_name(status) << "\n";
      return status_to_exit(status);
    }

    if (*commit_cmd) {
      Secret secret = secret_from_text(read_file(commit_secret));
      Challenge ch =
          make_challenge(secret.p(), commit_q, commit_steps, commit_seed);
      std::string text = commitment_to_text(commit(secret, ch));
      if (commit_out.empty()) std::cout << text;
      else {
        write_file(commit_out, text);
        std::cout << "wrote " << commit_out << "\n";
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      Commitment record = commitment_from_text(read_file(vc_commit));
      Secret secret = secret_from_text(read_file(vc_secret));
      bool ok = verify_commit(record, secret);
      std::cout << (ok ? "OK" : "FAIL") << "\n";
      return ok ? kExitOk : kExitFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
