#ifndef PARTLAT_WIRE_HPP
#define PARTLAT_WIRE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "partlat/auth.hpp"

namespace partlat {

/// Newline-delimited message grammar (UTF-8, one message per line):
///   HELLO <version> <shape> <p> <q>
///   CHALLENGE <id> <term1>/<...>/<termq>
///   RETRY <id>
///   RESPONSE <id> <tuple1>/<...>/<tupleq>
///   RESULT <id> OK|FAIL
inline constexpr const char* kWireVersion = "1";

enum class SessionStatus {
  Pending,        // session still in progress
  Ok,             // RESULT OK
  Fail,           // RESULT FAIL (response mismatch)
  Aborted,        // retry budget exhausted
  ProtocolError,  // malformed or unexpected message, or parameter mismatch
};

struct VerifierConfig {
  int steps = 1000;
  std::uint64_t seed = 0;
  int max_retries = 3;  // RETRYs beyond this abort the session
  int max_q = 64;       // refuse absurd challenge counts from HELLO
  LeafPolicy policy = LeafPolicy::Uniform;
};

struct ProverConfig {
  int q = 8;
  /// Ask for a fresh challenge while the quality check fails, at most this
  /// many times.
  int max_retries = 3;
  long long min_distance = 3;
  /// When retries are exhausted and the challenge still fails the quality
  /// check: abort the session (distinct Aborted status) if set, otherwise
  /// answer the weak challenge anyway. Off by default because random term
  /// values concentrate heavily on bottom/top, so for realistic q a fully
  /// clean challenge is rare and strict aborting would kill most sessions.
  bool abort_on_poor_quality = false;
  /// Test hook: corrupt one coordinate of the first response tuple.
  bool mutate_response = false;
};

/// Both sessions are pure state machines: feed one received line, get the
/// lines to send. Transports (in-memory, socket, stdio) just shuttle lines.
/// Every line sent or received is appended to the transcript with a "> " /
/// "< " direction prefix, so equal-seed runs are byte-comparable.
class VerifierSession {
 public:
  VerifierSession(Secret secret, VerifierConfig config);

  std::vector<std::string> on_line(const std::string& line);
  bool done() const { return status_ != SessionStatus::Pending; }
  SessionStatus status() const { return status_; }
  const std::vector<std::string>& transcript() const { return transcript_; }

 private:
  std::vector<std::string> send(std::vector<std::string> lines);
  std::vector<std::string> fail_protocol(const std::string& reason);
  std::string issue_challenge();

  Secret secret_;
  VerifierConfig config_;
  SessionStatus status_ = SessionStatus::Pending;
  bool hello_seen_ = false;
  int q_ = 0;
  int attempt_ = 0;
  Challenge current_;
  std::vector<std::string> transcript_;
  std::string error_;
};

class ProverSession {
 public:
  ProverSession(Secret secret, ProverConfig config);

  /// The opening HELLO; call once before pumping lines.
  std::vector<std::string> start();
  std::vector<std::string> on_line(const std::string& line);
  bool done() const { return status_ != SessionStatus::Pending; }
  SessionStatus status() const { return status_; }
  const std::vector<std::string>& transcript() const { return transcript_; }

 private:
  std::vector<std::string> send(std::vector<std::string> lines);

  Secret secret_;
  ProverConfig config_;
  SessionStatus status_ = SessionStatus::Pending;
  int retries_used_ = 0;
  std::vector<std::string> transcript_;
};

struct LocalRun {
  SessionStatus prover = SessionStatus::Pending;
  SessionStatus verifier = SessionStatus::Pending;
};

/// Shuttles messages between the two state machines until both stop.
LocalRun run_local(ProverSession& prover, VerifierSession& verifier);

/// Blocking line transport.
class LineStream {
 public:
  virtual ~LineStream() = default;
  virtual bool read_line(std::string& line) = 0;  // false on EOF
  virtual bool write_line(const std::string& line) = 0;
};

/// Buffered line I/O over file descriptors (socket, pipe, stdio). Takes
/// ownership of the descriptors when owns = true (dup stdio if needed).
class FdLineStream : public LineStream {
 public:
  FdLineStream(int read_fd, int write_fd, bool owns);
  ~FdLineStream() override;
  bool read_line(std::string& line) override;
  bool write_line(const std::string& line) override;

 private:
  int read_fd_, write_fd_;
  bool owns_;
  std::string buffer_;
};

/// Binds, listens, accepts exactly one connection; returns the connected
/// descriptor. Throws std::runtime_error on socket errors.
int listen_once(const std::string& host, int port);
int connect_to(const std::string& host, int port);

SessionStatus run_prover(LineStream& stream, ProverSession& session);
SessionStatus run_verifier(LineStream& stream, VerifierSession& session);

}  // namespace partlat

#endif
