#include "mg/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace mg {

bool Oracle::trivial(const Word& w) const {
  if (w.empty()) return true;
  if (w.max_index() > alphabet_) throw InputError("word letter outside the oracle alphabet");
  if (!memoize_) return decide(w);
  {
    std::shared_lock lk(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  bool r = decide(w);
  if (w.size() <= 24) {
    std::unique_lock lk(mu_);
    if (memo_.size() < (1u << 22)) memo_.emplace(w, r);
  }
  return r;
}

ZRow exponent_vector(const Word& w, int n) {
  ZRow v(n, 0);
  for (Let l : w.letters()) {
    int i = std::abs(l) - 1;
    if (i >= n) throw InputError("letter outside alphabet in exponent_vector");
    v[i] += (l > 0) ? 1 : -1;
  }
  return v;
}

namespace {

std::string serialize_row(const ZRow& v) {
  std::ostringstream os;
  for (const auto& x : v) os << x << ',';
  return os.str();
}

std::string serialize_word(const Word& w) {
  std::string s;
  for (Let l : w.letters()) {
    s += std::to_string(l);
    s += ' ';
  }
  return s;
}

class FreeOracle final : public Oracle {
 public:
  explicit FreeOracle(int m) : Oracle(m, Kind::free_group, false) { has_keys_ = true; }
  std::optional<std::string> element_key(const Word& w) const override { return serialize_word(w); }

 protected:
  bool decide(const Word& w) const override { return w.empty(); }
};

class AbelianOracle final : public Oracle {
 public:
  explicit AbelianOracle(AbelianData data)
      : Oracle(data.rank, Kind::abelian, false), data_(std::move(data)) {
    ZMat rows;
    for (const auto& r : data_.rows) {
      if (static_cast<int>(r.size()) != data_.rank) throw InputError("abelian relator row of wrong length");
      rows.push_back(ZRow(r.begin(), r.end()));
    }
    hnf_ = hnf_rows(std::move(rows));
    has_keys_ = true;
  }

  std::optional<std::string> element_key(const Word& w) const override {
    return serialize_row(reduce_by_hnf(hnf_, exponent_vector(w, alphabet())));
  }

  const AbelianData* abelian_data() const override { return &data_; }
  const ZMat& lattice_hnf() const { return hnf_; }

 protected:
  bool decide(const Word& w) const override {
    return in_row_lattice(hnf_, exponent_vector(w, alphabet()));
  }

 private:
  AbelianData data_;
  ZMat hnf_;
};

class ProductOracle final : public Oracle {
 public:
  ProductOracle(OraclePtr l, OraclePtr r)
      : Oracle(l->alphabet() + r->alphabet(), Kind::product, false),
        left_(std::move(l)),
        right_(std::move(r)) {
    has_keys_ = left_->has_element_keys() && right_->has_element_keys();
  }

  std::optional<std::string> element_key(const Word& w) const override {
    if (!has_keys_) return std::nullopt;
    auto [a, b] = split(w);
    auto ka = left_->element_key(a), kb = right_->element_key(b);
    if (!ka || !kb) return std::nullopt;
    return *ka + "|" + *kb;
  }

  OraclePtr left() const { return left_; }
  OraclePtr right() const { return right_; }

 protected:
  bool decide(const Word& w) const override {
    auto [a, b] = split(w);
    return left_->trivial(a) && right_->trivial(b);
  }

 private:
  std::pair<Word, Word> split(const Word& w) const {
    const int m = left_->alphabet();
    std::vector<Let> a, b;
    for (Let l : w.letters()) {
      if (std::abs(l) <= m)
        a.push_back(l);
      else
        b.push_back(l > 0 ? l - m : l + m);
    }
    return {Word(std::span<const Let>(a)), Word(std::span<const Let>(b))};
  }

  OraclePtr left_, right_;
};

class SubstitutionOracle final : public Oracle {
 public:
  SubstitutionOracle(OraclePtr base, std::vector<Word> images)
      : Oracle(static_cast<int>(images.size()), Kind::substitution, false),
        base_(std::move(base)),
        images_(std::move(images)) {
    for (const auto& im : images_)
      if (im.max_index() > base_->alphabet()) throw InputError("substitution image outside base alphabet");
    has_keys_ = base_->has_element_keys();
  }

  std::optional<std::string> element_key(const Word& w) const override {
    return base_->element_key(substitute(w, images_));
  }

  OraclePtr base() const { return base_; }
  const std::vector<Word>& images() const { return images_; }

 protected:
  bool decide(const Word& w) const override { return base_->trivial(substitute(w, images_)); }

 private:
  OraclePtr base_;
  std::vector<Word> images_;
};

}  // namespace

OraclePtr make_free_oracle(int m) { return std::make_shared<FreeOracle>(m); }

OraclePtr make_abelian_oracle(AbelianData data) { return std::make_shared<AbelianOracle>(std::move(data)); }

OraclePtr make_product_oracle(OraclePtr left, OraclePtr right) {
  return std::make_shared<ProductOracle>(std::move(left), std::move(right));
}

OraclePtr make_substitution_oracle(OraclePtr base, std::vector<Word> images) {
  // flatten chained substitutions so composites stay one level deep
  if (auto parts = substitution_parts(base)) {
    std::vector<Word> composed;
    composed.reserve(images.size());
    for (const auto& w : images) composed.push_back(substitute(w, parts->images));
    return std::make_shared<SubstitutionOracle>(parts->base, std::move(composed));
  }
  return std::make_shared<SubstitutionOracle>(std::move(base), std::move(images));
}

std::optional<ProductParts> product_parts(const OraclePtr& o) {
  if (auto p = std::dynamic_pointer_cast<const ProductOracle>(o)) return ProductParts{p->left(), p->right()};
  return std::nullopt;
}

std::optional<SubstitutionParts> substitution_parts(const OraclePtr& o) {
  if (auto p = std::dynamic_pointer_cast<const SubstitutionOracle>(o))
    return SubstitutionParts{p->base(), p->images()};
  return std::nullopt;
}

}  // namespace mg
