#include "mg/word.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mg {

namespace {

void push_reduce(std::vector<Let>& out, Let v) {
  if (!out.empty() && out.back() == -v)
    out.pop_back();
  else
    out.push_back(v);
}

}  // namespace

Word reduce(std::span<const Let> raw) {
  std::vector<Let> out;
  out.reserve(raw.size());
  for (Let v : raw) {
    if (v == 0) throw std::invalid_argument("letter index 0");
    push_reduce(out, v);
  }
  return concat_reduced_unchecked(std::move(out));
}

Word::Word(std::span<const Let> raw) { *this = reduce(raw); }
Word::Word(std::initializer_list<Let> raw) { *this = reduce(std::span<const Let>(raw.begin(), raw.size())); }

Word Word::letter(Let v) {
  if (v == 0) throw std::invalid_argument("letter index 0");
  Word w;
  w.ls_.push_back(v);
  return w;
}

Word concat_reduced_unchecked(std::vector<Let> ls) {
  Word w;
  w.ls_ = std::move(ls);
  return w;
}

Word Word::inverse() const {
  std::vector<Let> out;
  out.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) out.push_back(-*it);
  return concat_reduced_unchecked(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Let> out = ls_;
  out.reserve(ls_.size() + rhs.ls_.size());
  for (Let v : rhs.ls_) push_reduce(out, v);
  return concat_reduced_unchecked(std::move(out));
}

Word Word::pow(long long e) const {
  if (e == 0 || empty()) return Word();
  const Word base = e > 0 ? *this : inverse();
  long long k = std::llabs(e);
  // w^k for reduced w: peel the cyclic conjugator once, repeat the core.
  CyclicForm cf = cyclically_reduce(base);
  std::vector<Let> out = cf.conjugator.ls_;
  for (long long i = 0; i < k; ++i)
    for (Let v : cf.core.ls_) out.push_back(v);
  for (auto it = cf.conjugator.ls_.rbegin(); it != cf.conjugator.ls_.rend(); ++it) out.push_back(-*it);
  return reduce(out);
}

int Word::max_index() const {
  int m = 0;
  for (Let v : ls_) m = std::max(m, std::abs(v));
  return m;
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < ls_.size(); ++i) {
    if (i) s += ' ';
    s += 'x' + std::to_string(std::abs(ls_[i]));
    if (ls_[i] < 0) s += "^-1";
  }
  return s;
}

Word product(std::span<const std::pair<Word, long long>> factors) {
  Word acc;
  for (const auto& [w, e] : factors) acc = acc * w.pow(e);
  return acc;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

CyclicForm cyclically_reduce(const Word& w) {
  std::size_t i = 0, j = w.size();
  const auto& ls = w.letters();
  while (j - i >= 2 && ls[i] == -ls[j - 1]) {
    ++i;
    --j;
  }
  CyclicForm cf;
  cf.conjugator = concat_reduced_unchecked(std::vector<Let>(ls.begin(), ls.begin() + i));
  cf.core = concat_reduced_unchecked(std::vector<Let>(ls.begin() + i, ls.begin() + j));
  return cf;
}

RootPower primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root of the trivial word");
  CyclicForm cf = cyclically_reduce(w);
  const auto& c = cf.core.letters();
  const std::size_t n = c.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = (c[i] == c[i - d]);
    if (periodic) {
      Word p = concat_reduced_unchecked(std::vector<Let>(c.begin(), c.begin() + d));
      RootPower rp;
      rp.root = cf.conjugator * p * cf.conjugator.inverse();
      rp.power = static_cast<long long>(n / d);
      return rp;
    }
  }
  return {w, 1};  // unreachable: d = n always periodic
}

bool conjugate_in_free(const Word& u, const Word& w) {
  Word cu = cyclically_reduce(u).core;
  Word cw = cyclically_reduce(w).core;
  if (cu.size() != cw.size()) return false;
  if (cu.empty()) return true;
  const auto& a = cu.letters();
  const auto& b = cw.letters();
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = (b[(s + i) % n] == a[i]);
    if (ok) return true;
  }
  return false;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word substitute(const Word& w, std::span<const Word> images) {
  std::vector<Let> out;
  for (Let v : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(std::abs(v)) - 1;
    if (i >= images.size()) throw std::invalid_argument("substitute: letter outside image tuple");
    const Word& im = images[i];
    if (v > 0)
      for (Let x : im.letters()) push_reduce(out, x);
    else
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) push_reduce(out, -*it);
  }
  return concat_reduced_unchecked(std::move(out));
}

namespace {

void rec_words(int n, int len, std::vector<Let>& cur, const std::function<void(const Word&)>& fn) {
  if (static_cast<int>(cur.size()) == len) {
    fn(concat_reduced_unchecked(cur));
    return;
  }
  for (int r = 0; r < 2 * n; ++r) {
    Let v = (r % 2 == 0) ? (r / 2 + 1) : -(r / 2 + 1);
    if (!cur.empty() && cur.back() == -v) continue;
    cur.push_back(v);
    rec_words(n, len, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void reduced_words_of_length(int n, int len, const std::function<void(const Word&)>& fn) {
  std::vector<Let> cur;
  cur.reserve(len);
  rec_words(n, len, cur, fn);
}

}  // namespace mg
