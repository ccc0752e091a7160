#include "mg/dehn.hpp"

#include <algorithm>
#include <set>

namespace mg {

namespace {

std::vector<std::vector<Let>> symmetrize(std::span<const Word> relators) {
  std::set<std::vector<Let>> out;
  for (const Word& r : relators) {
    for (const Word& w : {r, r.inverse()}) {
      const auto& c = w.letters();
      for (std::size_t s = 0; s < c.size(); ++s) {
        std::vector<Let> rot;
        rot.reserve(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) rot.push_back(c[(s + i) % c.size()]);
        out.insert(std::move(rot));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::size_t lcp(const std::vector<Let>& a, const std::vector<Let>& b) {
  std::size_t n = std::min(a.size(), b.size()), i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

class DehnOracle final : public Oracle {
 public:
  DehnOracle(std::vector<Word> relators, std::vector<std::vector<Let>> sym, int alphabet)
      : Oracle(alphabet, Kind::dehn, true), relators_(std::move(relators)), sym_(std::move(sym)) {}

  const std::vector<Word>& relators() const { return relators_; }

 protected:
  bool decide(const Word& w) const override {
    std::vector<Let> cur(w.letters());
    bool shortened = true;
    while (shortened && !cur.empty()) {
      shortened = false;
      for (std::size_t i = 0; i < cur.size() && !shortened; ++i) {
        for (const auto& r : sym_) {
          std::size_t m = 0;
          while (m < r.size() && i + m < cur.size() && cur[i + m] == r[m]) ++m;
          if (2 * m <= r.size()) continue;
          // replace the matched piece by the inverse of the relator remainder
          std::vector<Let> next(cur.begin(), cur.begin() + i);
          for (std::size_t j = r.size(); j > m; --j) next.push_back(-r[j - 1]);
          next.insert(next.end(), cur.begin() + i + m, cur.end());
          cur = reduce(next).letters();
          shortened = true;
          break;
        }
      }
    }
    return cur.empty();
  }

 private:
  std::vector<Word> relators_;
  std::vector<std::vector<Let>> sym_;
};

}  // namespace

PieceReport small_cancellation_check(std::span<const Word> relators, long lambda_num, long lambda_den) {
  if (relators.empty()) throw InputError("empty relator set");
  PieceReport rep;
  rep.min_relator = relators[0].size();
  for (const Word& r : relators) {
    if (r.empty()) throw InputError("trivial relator");
    if (cyclically_reduce(r).core != r) throw InputError("relator not cyclically reduced: " + r.str());
    auto rp = primitive_root(r);
    if (rp.power > 1)
      throw InputError("relator is a proper power: " + r.str() + " = (" + rp.root.str() + ")^" +
                       std::to_string(rp.power));
    rep.min_relator = std::min(rep.min_relator, r.size());
  }
  auto sym = symmetrize(relators);
  rep.symmetrized_size = sym.size();
  for (std::size_t i = 0; i < sym.size(); ++i)
    for (std::size_t j = i + 1; j < sym.size(); ++j)
      rep.max_piece = std::max(rep.max_piece, lcp(sym[i], sym[j]));
  rep.ok = static_cast<long long>(rep.max_piece) * lambda_den <
           static_cast<long long>(lambda_num) * static_cast<long long>(rep.min_relator);
  return rep;
}

OraclePtr make_dehn_oracle(int alphabet, std::vector<Word> relators, long lambda_num, long lambda_den) {
  if (lambda_num * 6 > lambda_den)
    throw InputError("Dehn's algorithm needs lambda <= 1/6");
  auto rep = small_cancellation_check(relators, lambda_num, lambda_den);
  if (!rep.ok)
    throw InputError("relator set fails C'(" + std::to_string(lambda_num) + "/" +
                     std::to_string(lambda_den) + "): max piece " + std::to_string(rep.max_piece) +
                     ", min relator length " + std::to_string(rep.min_relator));
  for (const Word& r : relators) alphabet = std::max(alphabet, r.max_index());
  auto sym = symmetrize(relators);
  return std::make_shared<DehnOracle>(std::move(relators), std::move(sym), alphabet);
}

std::optional<std::vector<Word>> dehn_oracle_relators(const OraclePtr& o) {
  if (auto p = std::dynamic_pointer_cast<const DehnOracle>(o)) return p->relators();
  return std::nullopt;
}

}  // namespace mg
