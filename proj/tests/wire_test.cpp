#include <doctest.h>

#include <thread>
#include <vector>

#include <unistd.h>

#include "partlat/wire.hpp"

using namespace partlat;

namespace {

Secret test_secret(std::uint64_t seed = 7) {
  return make_secret({5, 1}, 4, seed, SecretMode::PermuteZadori);
}

ProverConfig honest_prover() {
  ProverConfig cfg;
  cfg.q = 3;
  cfg.max_retries = 2;
  return cfg;
}

VerifierConfig test_verifier(std::uint64_t seed = 99) {
  VerifierConfig cfg;
  cfg.steps = 60;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("honest local session verifies with a reproducible transcript") {
  std::vector<std::string> prover_log, verifier_log;
  for (int run = 0; run < 2; ++run) {
    ProverSession prover(test_secret(), honest_prover());
    VerifierSession verifier(test_secret(), test_verifier());
    LocalRun result = run_local(prover, verifier);
    CHECK(result.prover == SessionStatus::Ok);
    CHECK(result.verifier == SessionStatus::Ok);
    REQUIRE_FALSE(prover.transcript().empty());
    CHECK(prover.transcript()[0] == "> HELLO 1 P5^1 4 3");
    if (run == 0) {
      prover_log = prover.transcript();
      verifier_log = verifier.transcript();
    } else {
      CHECK(prover.transcript() == prover_log);
      CHECK(verifier.transcript() == verifier_log);
    }
  }
}

TEST_CASE("a corrupted response fails verification") {
  ProverConfig cfg = honest_prover();
  cfg.mutate_response = true;
  ProverSession prover(test_secret(), cfg);
  VerifierSession verifier(test_secret(), test_verifier());
  LocalRun result = run_local(prover, verifier);
  CHECK(result.prover == SessionStatus::Fail);
  CHECK(result.verifier == SessionStatus::Fail);
}

TEST_CASE("a prover with the wrong secret fails verification") {
  // Enough terms that some response value depends on the secret: values that
  // collapse to bottom or top are the same for every secret.
  ProverConfig cfg = honest_prover();
  cfg.q = 8;
  cfg.max_retries = 0;  // answer the first challenge, which is known to
                        // separate the two secrets under this seed
  ProverSession prover(test_secret(8), cfg);
  VerifierSession verifier(test_secret(7), test_verifier());
  LocalRun result = run_local(prover, verifier);
  CHECK(result.prover == SessionStatus::Fail);
  CHECK(result.verifier == SessionStatus::Fail);
}

TEST_CASE("parameter mismatch is a protocol error") {
  ProverSession prover(test_secret(), honest_prover());
  VerifierSession verifier(make_secret({6, 1}, 4, 7, SecretMode::PermuteZadori),
                           test_verifier());
  LocalRun result = run_local(prover, verifier);
  CHECK(result.verifier == SessionStatus::ProtocolError);
  CHECK(result.prover == SessionStatus::Fail);  // receives RESULT 0 FAIL
}

TEST_CASE("malformed input is a protocol error") {
  VerifierSession verifier(test_secret(), test_verifier());
  auto out = verifier.on_line("EHLO what");
  REQUIRE(out.size() == 1);
  CHECK(out[0] == "RESULT 0 FAIL");
  CHECK(verifier.status() == SessionStatus::ProtocolError);
  CHECK(verifier.on_line("HELLO 1 P5^1 4 3").empty());  // session is over

  ProverSession prover(test_secret(), honest_prover());
  prover.start();
  CHECK(prover.on_line("CHALLENGE notanumber x1").empty());
  CHECK(prover.status() == SessionStatus::ProtocolError);
}

TEST_CASE("strict prover aborts when no challenge meets the quality bar") {
  ProverConfig cfg;
  cfg.q = 2;
  cfg.max_retries = 1;
  cfg.min_distance = 1000;  // unsatisfiable
  cfg.abort_on_poor_quality = true;
  ProverSession prover(test_secret(), cfg);
  VerifierSession verifier(test_secret(), test_verifier());
  LocalRun result = run_local(prover, verifier);
  CHECK(result.prover == SessionStatus::Aborted);
  CHECK(result.verifier == SessionStatus::Pending);  // never hears back
}

TEST_CASE("verifier aborts after its retry budget") {
  ProverConfig pcfg;
  pcfg.q = 2;
  pcfg.max_retries = 10;
  pcfg.min_distance = 1000;  // keep asking for retries
  pcfg.abort_on_poor_quality = true;
  VerifierConfig vcfg = test_verifier();
  vcfg.max_retries = 1;
  ProverSession prover(test_secret(), pcfg);
  VerifierSession verifier(test_secret(), vcfg);
  LocalRun result = run_local(prover, verifier);
  CHECK(result.verifier == SessionStatus::Aborted);
  CHECK(result.prover == SessionStatus::Fail);  // told RESULT ... FAIL
}

TEST_CASE("lenient prover answers a weak challenge after retries") {
  ProverConfig cfg;
  cfg.q = 2;
  cfg.max_retries = 1;
  cfg.min_distance = 1000;  // every challenge fails the quality check
  cfg.abort_on_poor_quality = false;
  ProverSession prover(test_secret(), cfg);
  VerifierSession verifier(test_secret(), test_verifier());
  LocalRun result = run_local(prover, verifier);
  CHECK(result.prover == SessionStatus::Ok);
  CHECK(result.verifier == SessionStatus::Ok);
  // The transcript shows the retry followed by the answered challenge.
  bool saw_retry = false;
  for (const auto& line : prover.transcript())
    saw_retry |= line.rfind("> RETRY ", 0) == 0;
  CHECK(saw_retry);
}

TEST_CASE("sessions run over byte streams") {
  int to_verifier[2], to_prover[2];
  REQUIRE(::pipe(to_verifier) == 0);
  REQUIRE(::pipe(to_prover) == 0);
  FdLineStream prover_stream(to_prover[0], to_verifier[1], true);
  FdLineStream verifier_stream(to_verifier[0], to_prover[1], true);

  VerifierSession verifier(test_secret(), test_verifier());
  SessionStatus verifier_status = SessionStatus::Pending;
  std::thread server([&] {
    verifier_status = run_verifier(verifier_stream, verifier);
  });

  ProverSession prover(test_secret(), honest_prover());
  SessionStatus prover_status = run_prover(prover_stream, prover);
  server.join();
  CHECK(prover_status == SessionStatus::Ok);
  CHECK(verifier_status == SessionStatus::Ok);
}
