#include "mg/metric.hpp"

#include <atomic>
#include <future>

namespace mg {

Agreement agreement_radius(const MarkedGroup& a, const MarkedGroup& b, int rmax, const EnumOpts& opts) {
  if (a.arity() != b.arity()) throw InputError("agreement_radius needs equal marking arities");
  unsigned long long seen = 0;
  for (int len = 1; len <= rmax + 1; ++len) {
    Agreement found;
    bool done = false;
    reduced_words_of_length(a.arity(), len, [&](const Word& w) {
      if (done) return;
      if (++seen > opts.word_cap) throw CapExceeded("relation enumeration cap exceeded");
      if (relation_test(a, w) != relation_test(b, w)) {
        found.exact = true;
        found.v = len - 1;
        found.witness = w;
        done = true;
      }
    });
    if (done) return found;
  }
  Agreement ag;
  ag.exact = false;
  ag.v = rmax;
  return ag;
}

std::vector<std::pair<long long, Agreement>> converge_check(
    const std::function<MarkedGroup(long long)>& family, const MarkedGroup& limit,
    std::span<const long long> indices, int rmax, int threads) {
  std::vector<std::pair<long long, Agreement>> out(indices.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < indices.size(); ++k)
      out[k] = {indices[k], agreement_radius(family(indices[k]), limit, rmax)};
    return out;
  }
  std::vector<std::future<void>> jobs;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < threads; ++t)
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k = next.fetch_add(1); k < indices.size(); k = next.fetch_add(1))
        out[k] = {indices[k], agreement_radius(family(indices[k]), limit, rmax)};
    }));
  for (auto& j : jobs) j.get();
  return out;
}

namespace {

// Membership flags of the ball vertices in the subgroup generated by t,
// by exhausting subgroup words of length <= bound. A false flag means
// "not found within the bound", not a certified non-membership.
std::vector<char> trace_flags(const MarkedGroup& m, const std::vector<Word>& t, const Ball& b,
                              int bound) {
  std::vector<char> flags(b.verts.size(), 0);
  flags[0] = 1;
  const int p = static_cast<int>(t.size());
  std::size_t matched = 1;
  for (int len = 1; len <= bound && matched < flags.size(); ++len) {
    reduced_words_of_length(p, len, [&](const Word& sw) {
      Word val = substitute(sw, t);  // word over the marking letters
      for (std::size_t i = 0; i < b.verts.size(); ++i) {
        if (flags[i]) continue;
        if (relation_test(m, val * b.verts[i].inverse())) {
          flags[i] = 1;
          ++matched;
          break;
        }
      }
    });
  }
  return flags;
}

}  // namespace

HausdorffAgreement hausdorff_agreement(const SubgroupPair& a, const SubgroupPair& b, int rmax,
                                       int trace_word_bound, const BallOpts& opts) {
  if (a.group.arity() != b.group.arity()) throw InputError("hausdorff_agreement needs equal arities");
  HausdorffAgreement out;
  out.trace_word_bound = trace_word_bound;
  for (int r = 1; r <= rmax; ++r) {
    Ball ba = ball(a.group, r, opts);
    Ball bb = ball(b.group, r, opts);
    if (ba.serialize() != bb.serialize()) {
      out.agreement.exact = true;
      out.agreement.v = r - 1;
      return out;
    }
    auto fa = trace_flags(a.group, a.subgroup, ba, trace_word_bound);
    auto fb = trace_flags(b.group, b.subgroup, bb, trace_word_bound);
    if (fa != fb) {
      out.agreement.exact = true;
      out.agreement.v = r - 1;
      // the losing vertex is merely unmatched within the word bound, so the
      // verdict is relative to it
      out.bound_sensitive = true;
      return out;
    }
  }
  out.agreement.exact = false;
  out.agreement.v = rmax;
  return out;
}

}  // namespace mg
