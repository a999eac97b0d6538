#ifndef PARTLAT_AUTH_HPP
#define PARTLAT_AUTH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partlat/term.hpp"
#include "partlat/tuple.hpp"

namespace partlat {

/// Shared authentication code: p tuples of Part(n)^t whose first four
/// entries form a generating quadruple (so term values over the secret
/// range over the whole lattice).
struct Secret {
  LatticeShape shape;
  std::vector<PartitionTuple> s;

  int p() const { return static_cast<int>(s.size()); }
};

enum class SecretMode {
  /// Random base-set relabeling of the single-lattice ladder quadruple
  /// (shape t = 1).
  PermuteZadori,
  /// Independent per-coordinate relabelings of a four-element power
  /// generating family (shape t <= the certified exponent).
  PermuteTheorem1,
};

/// Applies the relabeling pi (0-based image table of {1..n}) to a
/// partition: elements u, v are together afterwards iff their preimages
/// were.
Partition apply_permutation(const Partition& p, std::span<const int> pi);

/// Builds a fresh generating quadruple, machine-verifies it, applies
/// independent per-coordinate random relabelings (lattice automorphisms, so
/// generation is preserved), and appends p - 4 uniform random tuples.
/// Deterministic per seed.
Secret make_secret(const LatticeShape& shape, int p, std::uint64_t seed,
                   SecretMode mode);

enum class SecretCheck { Verified, Failed, Skipped };

/// Closure-oracle verdict on the first four entries; Skipped when the
/// closure outgrows the limit before the verdict is decided.
SecretCheck check_secret(const Secret& secret,
                         std::size_t closure_limit = 200'000);

/// "<shape>\n<p>\n" followed by p tuple-text lines.
std::string secret_to_text(const Secret& secret);
Secret secret_from_text(std::string_view text);

struct Challenge {
  std::uint64_t id = 0;
  int arity = 0;  // must match the secret's p
  int steps = 0;
  std::vector<Term> w;
};

/// q independent random terms of the given arity and size. The challenge id
/// and every term derive from disjoint substreams of the seed.
Challenge make_challenge(int p, int q, int steps, std::uint64_t seed,
                         LeafPolicy policy = LeafPolicy::Uniform);

struct Response {
  std::uint64_t id = 0;
  std::vector<PartitionTuple> r;
};

/// r_i = w_i(s).
Response respond(const Secret& secret, const Challenge& challenge);

/// Exact comparison of the recomputed response (id, length, every tuple).
bool verify_response(const Secret& secret, const Challenge& challenge,
                     const Response& response);

struct QualityReport {
  bool pass = true;
  std::vector<std::string> flags;
};

/// Flags degenerate challenges: any response value equal to bottom or top,
/// any pair of response values closer than min_distance, any response value
/// closer than min_distance to a secret entry or to bottom/top. Distances
/// are coordinate-wise graded-lattice distances.
QualityReport quality_check(const Secret& secret, const Challenge& challenge,
                            long long min_distance = 3);

/// Key = UTF-8 octets of the canonical response serialization (tuple texts
/// joined by '/'). Injective on responses.
std::vector<std::uint8_t> derive_vernam_key(const Response& response);

/// Bytewise XOR; an involution. Messages longer than the key are refused --
/// a one-time key must not be cycled.
std::vector<std::uint8_t> xor_apply(std::span<const std::uint8_t> key,
                                    std::span<const std::uint8_t> message);

/// A commitment publishes the challenge together with its response; the
/// reveal is checked by recomputation.
struct Commitment {
  LatticeShape shape;
  int p = 0;
  Challenge challenge;
  Response response;
};

Commitment commit(const Secret& secret, const Challenge& challenge);
bool verify_commit(const Commitment& record, const Secret& revealed);

std::string commitment_to_text(const Commitment& record);
Commitment commitment_from_text(std::string_view text);

/// Wire payload helpers: terms joined by '/', tuples joined by '/'.
std::string terms_to_text(const Challenge& challenge);
std::vector<Term> terms_from_text(std::string_view text, int arity);
std::string tuples_to_text(std::span<const PartitionTuple> tuples);
std::vector<PartitionTuple> tuples_from_text(std::string_view text,
                                             const LatticeShape& shape);

}  // namespace partlat

#endif
