#include "partlat/wire.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <deque>
#include <stdexcept>
#include <utility>

namespace partlat {

namespace {

struct Message {
  std::string verb;
  std::string arg;   // second token, if any
  std::string rest;  // everything after the second token
};

Message parse_message(const std::string& line) {
  Message msg;
  std::size_t a = line.find(' ');
  if (a == std::string::npos) {
    msg.verb = line;
    return msg;
  }
  msg.verb = line.substr(0, a);
  std::size_t b = line.find(' ', a + 1);
  if (b == std::string::npos) {
    msg.arg = line.substr(a + 1);
    return msg;
  }
  msg.arg = line.substr(a + 1, b - a - 1);
  msg.rest = line.substr(b + 1);
  return msg;
}

bool parse_u64(const std::string& text, std::uint64_t& out) {
  if (text.empty()) return false;
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    if (value > (UINT64_MAX - (c - '0')) / 10) return false;
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = value;
  return true;
}

}  // namespace

VerifierSession::VerifierSession(Secret secret, VerifierConfig config)
    : secret_(std::move(secret)), config_(config) {}

std::vector<std::string> VerifierSession::send(
    std::vector<std::string> lines) {
  for (const auto& l : lines) transcript_.push_back("> " + l);
  return lines;
}

std::vector<std::string> VerifierSession::fail_protocol(
    const std::string& reason) {
  status_ = SessionStatus::ProtocolError;
  error_ = reason;
  return send({"RESULT 0 FAIL"});
}

std::string VerifierSession::issue_challenge() {
  std::uint64_t attempt_seed =
      Rng::substream(config_.seed, static_cast<std::uint64_t>(attempt_))
          .next();
  current_ = make_challenge(secret_.p(), q_, config_.steps, attempt_seed,
                            config_.policy);
  ++attempt_;
  return "CHALLENGE " + std::to_string(current_.id) + " " +
         terms_to_text(current_);
}

std::vector<std::string> VerifierSession::on_line(const std::string& line) {
  if (done()) return {};
  transcript_.push_back("< " + line);
  Message msg = parse_message(line);

  if (!hello_seen_) {
    if (msg.verb != "HELLO") return fail_protocol("expected HELLO");
    if (msg.arg != kWireVersion) return fail_protocol("unsupported version");
    std::string shape_text, p_text, q_text;
    std::size_t a = msg.rest.find(' ');
    std::size_t b = a == std::string::npos ? a : msg.rest.find(' ', a + 1);
    if (a == std::string::npos || b == std::string::npos)
      return fail_protocol("malformed HELLO");
    shape_text = msg.rest.substr(0, a);
    p_text = msg.rest.substr(a + 1, b - a - 1);
    q_text = msg.rest.substr(b + 1);
    LatticeShape shape;
    try {
      shape = LatticeShape::parse(shape_text);
    } catch (const std::invalid_argument&) {
      return fail_protocol("bad shape");
    }
    std::uint64_t p = 0, q = 0;
    if (!parse_u64(p_text, p) || !parse_u64(q_text, q))
      return fail_protocol("bad HELLO numbers");
    if (!(shape == secret_.shape) ||
        p != static_cast<std::uint64_t>(secret_.p()))
      return fail_protocol("shape or length mismatch");
    if (q < 1 || q > static_cast<std::uint64_t>(config_.max_q))
      return fail_protocol("challenge count out of range");
    hello_seen_ = true;
    q_ = static_cast<int>(q);
    return send({issue_challenge()});
  }

  std::uint64_t id = 0;
  if (!parse_u64(msg.arg, id) || id != current_.id)
    return fail_protocol("bad or stale message id");

  if (msg.verb == "RETRY") {
    if (attempt_ > config_.max_retries) {
      status_ = SessionStatus::Aborted;
      return send({"RESULT " + std::to_string(id) + " FAIL"});
    }
    return send({issue_challenge()});
  }
  if (msg.verb == "RESPONSE") {
    Response resp;
    resp.id = id;
    try {
      resp.r = tuples_from_text(msg.rest, secret_.shape);
    } catch (const std::invalid_argument&) {
      return fail_protocol("unparseable response");
    }
    bool ok = verify_response(secret_, current_, resp);
    status_ = ok ? SessionStatus::Ok : SessionStatus::Fail;
    return send(
        {"RESULT " + std::to_string(id) + (ok ? " OK" : " FAIL")});
  }
  return fail_protocol("unexpected message " + msg.verb);
}

ProverSession::ProverSession(Secret secret, ProverConfig config)
    : secret_(std::move(secret)), config_(config) {}

std::vector<std::string> ProverSession::send(std::vector<std::string> lines) {
  for (const auto& l : lines) transcript_.push_back("> " + l);
  return lines;
}

std::vector<std::string> ProverSession::start() {
  return send({std::string("HELLO ") + kWireVersion + " " +
               secret_.shape.to_string() + " " + std::to_string(secret_.p()) +
               " " + std::to_string(config_.q)});
}

std::vector<std::string> ProverSession::on_line(const std::string& line) {
  if (done()) return {};
  transcript_.push_back("< " + line);
  Message msg = parse_message(line);

  if (msg.verb == "CHALLENGE") {
    std::uint64_t id = 0;
    if (!parse_u64(msg.arg, id)) {
      status_ = SessionStatus::ProtocolError;
      return {};
    }
    Challenge ch;
    ch.id = id;
    ch.arity = secret_.p();
    try {
      ch.w = terms_from_text(msg.rest, ch.arity);
    } catch (const std::invalid_argument&) {
      status_ = SessionStatus::ProtocolError;
      return {};
    }
    auto quality = quality_check(secret_, ch, config_.min_distance);
    if (!quality.pass) {
      if (retries_used_ < config_.max_retries) {
        ++retries_used_;
        return send({"RETRY " + std::to_string(id)});
      }
      if (config_.abort_on_poor_quality) {
        status_ = SessionStatus::Aborted;
        return {};
      }
      // Retries exhausted: answer the weak challenge rather than kill the
      // session (see ProverConfig::abort_on_poor_quality).
    }
    Response resp = respond(secret_, ch);
    if (config_.mutate_response && !resp.r.empty()) {
      auto coords = resp.r[0].coords();
      const Partition top = Partition::top(secret_.shape.n);
      coords[0] = coords[0] == top ? Partition::bottom(secret_.shape.n) : top;
      resp.r[0] = PartitionTuple(secret_.shape, std::move(coords));
    }
    return send(
        {"RESPONSE " + std::to_string(id) + " " + tuples_to_text(resp.r)});
  }
  if (msg.verb == "RESULT") {
    status_ = msg.rest == "OK" ? SessionStatus::Ok : SessionStatus::Fail;
    return {};
  }
  status_ = SessionStatus::ProtocolError;
  return {};
}

LocalRun run_local(ProverSession& prover, VerifierSession& verifier) {
  std::deque<std::string> to_verifier, to_prover;
  for (auto& l : prover.start()) to_verifier.push_back(std::move(l));
  while (true) {
    if (!to_verifier.empty()) {
      std::string line = std::move(to_verifier.front());
      to_verifier.pop_front();
      for (auto& l : verifier.on_line(line)) to_prover.push_back(std::move(l));
    } else if (!to_prover.empty()) {
      std::string line = std::move(to_prover.front());
      to_prover.pop_front();
      for (auto& l : prover.on_line(line)) to_verifier.push_back(std::move(l));
    } else {
      break;
    }
  }
  return {prover.status(), verifier.status()};
}

FdLineStream::FdLineStream(int read_fd, int write_fd, bool owns)
    : read_fd_(read_fd), write_fd_(write_fd), owns_(owns) {}

FdLineStream::~FdLineStream() {
  if (owns_) {
    ::close(read_fd_);
    if (write_fd_ != read_fd_) ::close(write_fd_);
  }
}

bool FdLineStream::read_line(std::string& line) {
  while (true) {
    std::size_t pos = buffer_.find('\n');
    if (pos != std::string::npos) {
      line = buffer_.substr(0, pos);
      buffer_.erase(0, pos + 1);
      return true;
    }
    char chunk[4096];
    ssize_t got = ::read(read_fd_, chunk, sizeof chunk);
    if (got <= 0) return false;
    buffer_.append(chunk, static_cast<std::size_t>(got));
  }
}

bool FdLineStream::write_line(const std::string& line) {
  std::string out = line + "\n";
  std::size_t sent = 0;
  while (sent < out.size()) {
    ssize_t n = ::write(write_fd_, out.data() + sent, out.size() - sent);
    if (n <= 0) return false;
    sent += static_cast<std::size_t>(n);
  }
  return true;
}

namespace {

int resolve_and(const std::string& host, int port,
                int (*act)(int, const sockaddr*, socklen_t)) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.c_str(), std::to_string(port).c_str(), &hints, &res) !=
          0 ||
      res == nullptr)
    throw std::runtime_error("cannot resolve " + host);
  int fd = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
  if (fd < 0) {
    freeaddrinfo(res);
    throw std::runtime_error("cannot create socket");
  }
  int one = 1;
  ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  int rc = act(fd, res->ai_addr, res->ai_addrlen);
  freeaddrinfo(res);
  if (rc != 0) {
    ::close(fd);
    throw std::runtime_error("cannot reach " + host + ":" +
                             std::to_string(port));
  }
  return fd;
}

}  // namespace

int listen_once(const std::string& host, int port) {
  int fd = resolve_and(host, port, ::bind);
  if (::listen(fd, 1) != 0) {
    ::close(fd);
    throw std::runtime_error("listen failed");
  }
  int conn = ::accept(fd, nullptr, nullptr);
  ::close(fd);
  if (conn < 0) throw std::runtime_error("accept failed");
  return conn;
}

int connect_to(const std::string& host, int port) {
  return resolve_and(host, port, ::connect);
}

SessionStatus run_prover(LineStream& stream, ProverSession& session) {
  for (const auto& l : session.start())
    if (!stream.write_line(l)) return SessionStatus::ProtocolError;
  std::string line;
  while (!session.done()) {
    if (!stream.read_line(line)) break;
    for (const auto& l : session.on_line(line))
      if (!stream.write_line(l)) return SessionStatus::ProtocolError;
  }
  return session.done() ? session.status() : SessionStatus::ProtocolError;
}

SessionStatus run_verifier(LineStream& stream, VerifierSession& session) {
  std::string line;
  while (!session.done()) {
    if (!stream.read_line(line)) break;
    for (const auto& l : session.on_line(line))
      if (!stream.write_line(l)) return SessionStatus::ProtocolError;
  }
  return session.done() ? session.status() : SessionStatus::ProtocolError;
}

}  // namespace partlat
