#pragma once

#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mg/word.hpp"
#include "mg/zlin.hpp"

namespace mg {

// Thrown when a configurable resource cap is hit (as opposed to a
// mathematical or input failure).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word-problem oracle: a triviality decider for a group marked by an
// ambient alphabet. Logically immutable; the memo table is a thread-safe
// cache.
class Oracle {
 public:
  enum class Kind { free_group, abelian, product, substitution, graph_of_groups, dehn };

  virtual ~Oracle() = default;

  int alphabet() const { return alphabet_; }
  Kind kind() const { return kind_; }

  // Decides whether w represents the identity.
  bool trivial(const Word& w) const;

  // Canonical element encoding: two words get the same key iff they represent
  // the same element. Not all oracles provide one.
  virtual std::optional<std::string> element_key(const Word&) const { return std::nullopt; }
  bool has_element_keys() const { return has_keys_; }

  // Introspection used by constructions over abelian ambient groups.
  virtual const struct AbelianData* abelian_data() const { return nullptr; }

 protected:
  Oracle(int alphabet, Kind kind, bool memoize)
      : alphabet_(alphabet), kind_(kind), memoize_(memoize) {
    if (alphabet < 0) throw InputError("negative alphabet size");
  }
  virtual bool decide(const Word& w) const = 0;
  bool has_keys_ = false;

 private:
  int alphabet_;
  Kind kind_;
  bool memoize_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, bool, WordHash> memo_;
};

using OraclePtr = std::shared_ptr<const Oracle>;

// Finitely generated abelian group Z^rank modulo the row lattice of
// `rows` (each row is a relator as an exponent vector).
struct AbelianData {
  int rank = 0;
  std::vector<std::vector<long long>> rows;
};

// Exponent vector of w over an alphabet of size n.
ZRow exponent_vector(const Word& w, int n);

OraclePtr make_free_oracle(int m);
OraclePtr make_abelian_oracle(AbelianData data);
OraclePtr make_product_oracle(OraclePtr left, OraclePtr right);
OraclePtr make_substitution_oracle(OraclePtr base, std::vector<Word> images);

// Accessors for the product/substitution structure (null if not that kind).
struct ProductParts {
  OraclePtr left, right;
};
std::optional<ProductParts> product_parts(const OraclePtr& o);

struct SubstitutionParts {
  OraclePtr base;
  std::vector<Word> images;
};
std::optional<SubstitutionParts> substitution_parts(const OraclePtr& o);

}  // namespace mg
