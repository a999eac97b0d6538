#include "partlat/auth.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "partlat/genset.hpp"
#include "partlat/power.hpp"
#include "partlat/zadori.hpp"

namespace partlat {

namespace {

// Full certificates materialize per-node values; past this size we trust
// the deterministic construction instead of re-verifying it.
constexpr int kVerifyMaxN = 64;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      return out;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(pi[i], pi[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return pi;
}

}  // namespace

Partition apply_permutation(const Partition& p, std::span<const int> pi) {
  const int n = p.size();
  if (static_cast<int>(pi.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint16_t> raw(n);
  for (int e = 1; e <= n; ++e)
    raw[pi[e - 1]] = static_cast<std::uint16_t>(p.block_of(e));
  return Partition::from_block_ids(std::move(raw));
}

Secret make_secret(const LatticeShape& shape, int p, std::uint64_t seed,
                   SecretMode mode) {
  if (p < 4)
    throw std::invalid_argument("secret needs at least four entries");
  const int n = shape.n, t = shape.t;

  std::vector<PartitionTuple> quad;
  if (mode == SecretMode::PermuteZadori) {
    if (t != 1)
      throw std::invalid_argument("the single-lattice mode needs t = 1");
    auto parts = config_quadruple(build_config(n));
    if (n <= kVerifyMaxN && !verify_ladder(n).valid)
      throw std::logic_error("ladder certificate unexpectedly failed");
    for (const auto& part : parts) quad.emplace_back(part);
  } else {
    auto gen = build_four_generators(n, t);
    if (n <= kVerifyMaxN && !verify_generators(gen).valid)
      throw std::logic_error("power certificate unexpectedly failed");
    quad = generator_tuples(gen);
  }

  Rng rng = Rng::substream(seed, 0);
  std::vector<std::vector<int>> pis(t);
  for (int j = 0; j < t; ++j) pis[j] = random_permutation(n, rng);

  Secret secret;
  secret.shape = shape;
  for (const auto& tuple : quad) {
    std::vector<Partition> coords(t);
    for (int j = 0; j < t; ++j)
      coords[j] = apply_permutation(tuple.coord(j), pis[j]);
    secret.s.emplace_back(shape, std::move(coords));
  }
  for (int extra = 4; extra < p; ++extra) {
    std::vector<Partition> coords(t);
    for (int j = 0; j < t; ++j) coords[j] = random_partition(n, rng);
    secret.s.emplace_back(shape, std::move(coords));
  }
  return secret;
}

SecretCheck check_secret(const Secret& secret, std::size_t closure_limit) {
  if (secret.p() < 4) return SecretCheck::Failed;
  std::vector<PartitionTuple> quad(secret.s.begin(), secret.s.begin() + 4);
  auto res = closure(quad, {.limit = closure_limit, .early_exit = true});
  if (res.generating) return SecretCheck::Verified;
  if (res.completed) return SecretCheck::Failed;
  return SecretCheck::Skipped;
}

std::string secret_to_text(const Secret& secret) {
  std::ostringstream out;
  out << secret.shape.to_string() << "\n" << secret.p() << "\n";
  for (const auto& tuple : secret.s) out << tuple.to_text() << "\n";
  return out.str();
}

Secret secret_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("secret text: missing shape line");
  Secret secret;
  secret.shape = LatticeShape::parse(line);
  if (!std::getline(in, line))
    throw std::invalid_argument("secret text: missing entry count");
  int p = 0;
  try {
    std::size_t used = 0;
    p = std::stoi(line, &used);
    if (used != line.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("secret text: bad entry count '" + line + "'");
  }
  if (p < 4)
    throw std::invalid_argument("secret needs at least four entries");
  for (int i = 0; i < p; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("secret text: expected " +
                                  std::to_string(p) + " tuples, got " +
                                  std::to_string(i));
    secret.s.push_back(PartitionTuple::from_text(line, secret.shape));
  }
  while (std::getline(in, line))
    if (!line.empty())
      throw std::invalid_argument("secret text: trailing content");
  return secret;
}

Challenge make_challenge(int p, int q, int steps, std::uint64_t seed,
                         LeafPolicy policy) {
  if (p < 1 || q < 1 || steps < 0)
    throw std::invalid_argument("challenge needs p >= 1, q >= 1, steps >= 0");
  Challenge ch;
  ch.arity = p;
  ch.steps = steps;
  Rng idr = Rng::substream(seed, 0);
  ch.id = idr.next();
  for (int i = 0; i < q; ++i) {
    Rng r = Rng::substream(seed, static_cast<std::uint64_t>(i) + 1);
    ch.w.push_back(random_term(p, steps, r, policy).term);
  }
  return ch;
}

Response respond(const Secret& secret, const Challenge& challenge) {
  if (challenge.arity != secret.p())
    throw std::invalid_argument("challenge arity " +
                                std::to_string(challenge.arity) +
                                " does not match secret length " +
                                std::to_string(secret.p()));
  Response resp;
  resp.id = challenge.id;
  std::span<const PartitionTuple> args(secret.s);
  for (const Term& term : challenge.w) {
    if (term.arity() != challenge.arity)
      throw std::invalid_argument("challenge term arity mismatch");
    resp.r.push_back(eval(term, args));
  }
  return resp;
}

bool verify_response(const Secret& secret, const Challenge& challenge,
                     const Response& response) {
  if (response.id != challenge.id) return false;
  if (response.r.size() != challenge.w.size()) return false;
  return respond(secret, challenge).r == response.r;
}

QualityReport quality_check(const Secret& secret, const Challenge& challenge,
                            long long min_distance) {
  QualityReport rep;
  auto flag = [&](std::string msg) {
    rep.pass = false;
    rep.flags.push_back(std::move(msg));
  };
  auto resp = respond(secret, challenge);
  const auto bot = PartitionTuple::bottom(secret.shape);
  const auto top = PartitionTuple::top(secret.shape);
  for (std::size_t i = 0; i < resp.r.size(); ++i) {
    const auto& ri = resp.r[i];
    const std::string label = "response " + std::to_string(i + 1);
    if (ri == bot) flag(label + " is bottom");
    if (ri == top) flag(label + " is top");
    if (!(ri == bot) && distance(ri, bot) < min_distance)
      flag(label + " too close to bottom");
    if (!(ri == top) && distance(ri, top) < min_distance)
      flag(label + " too close to top");
    for (std::size_t j = 0; j < i; ++j)
      if (distance(ri, resp.r[j]) < min_distance)
        flag(label + " too close to response " + std::to_string(j + 1));
    for (int j = 0; j < secret.p(); ++j)
      if (distance(ri, secret.s[j]) < min_distance)
        flag(label + " too close to secret entry " + std::to_string(j + 1));
  }
  return rep;
}

std::vector<std::uint8_t> derive_vernam_key(const Response& response) {
  std::string text = tuples_to_text(response.r);
  return {text.begin(), text.end()};
}

std::vector<std::uint8_t> xor_apply(std::span<const std::uint8_t> key,
                                    std::span<const std::uint8_t> message) {
  if (message.size() > key.size())
    throw std::invalid_argument("message longer than the one-time key; "
                                "keys must not be cycled");
  std::vector<std::uint8_t> out(message.size());
  for (std::size_t i = 0; i < message.size(); ++i)
    out[i] = static_cast<std::uint8_t>(key[i] ^ message[i]);
  return out;
}

Commitment commit(const Secret& secret, const Challenge& challenge) {
  Commitment record;
  record.shape = secret.shape;
  record.p = secret.p();
  record.challenge = challenge;
  record.response = respond(secret, challenge);
  return record;
}

bool verify_commit(const Commitment& record, const Secret& revealed) {
  if (!(revealed.shape == record.shape) || revealed.p() != record.p)
    return false;
  return verify_response(revealed, record.challenge, record.response);
}

std::string commitment_to_text(const Commitment& record) {
  std::ostringstream out;
  out << "COMMIT " << record.challenge.id << " "
      << record.shape.to_string() << " " << record.p << " "
      << record.challenge.w.size() << " " << record.challenge.steps << "\n"
      << terms_to_text(record.challenge) << "\n"
      << tuples_to_text(record.response.r) << "\n";
  return out.str();
}

Commitment commitment_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  in >> word;
  if (word != "COMMIT")
    throw std::invalid_argument("commitment text must start with COMMIT");
  Commitment record;
  std::string shape_text;
  std::uint64_t id = 0;
  std::size_t q = 0;
  if (!(in >> id >> shape_text >> record.p >> q >> record.challenge.steps))
    throw std::invalid_argument("commitment header is malformed");
  record.shape = LatticeShape::parse(shape_text);
  record.challenge.id = id;
  record.challenge.arity = record.p;
  record.response.id = id;
  std::string line;
  std::getline(in, line);  // rest of the header line
  if (!std::getline(in, line))
    throw std::invalid_argument("commitment text: missing terms");
  record.challenge.w = terms_from_text(line, record.p);
  if (record.challenge.w.size() != q)
    throw std::invalid_argument("commitment text: term count mismatch");
  if (!std::getline(in, line))
    throw std::invalid_argument("commitment text: missing response");
  record.response.r = tuples_from_text(line, record.shape);
  if (record.response.r.size() != q)
    throw std::invalid_argument("commitment text: tuple count mismatch");
  return record;
}

std::string terms_to_text(const Challenge& challenge) {
  std::string out;
  for (std::size_t i = 0; i < challenge.w.size(); ++i) {
    if (i) out += '/';
    out += serialize_term(challenge.w[i]);
  }
  return out;
}

std::vector<Term> terms_from_text(std::string_view text, int arity) {
  std::vector<Term> out;
  for (const std::string& part : split(text, '/'))
    out.push_back(parse_term(part, arity));
  return out;
}

std::string tuples_to_text(std::span<const PartitionTuple> tuples) {
  std::string out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) out += '/';
    out += tuples[i].to_text();
  }
  return out;
}

std::vector<PartitionTuple> tuples_from_text(std::string_view text,
                                             const LatticeShape& shape) {
  std::vector<PartitionTuple> out;
  for (const std::string& part : split(text, '/'))
    out.push_back(PartitionTuple::from_text(part, shape));
  return out;
}

}  // namespace partlat
