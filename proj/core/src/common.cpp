#include "dclr/common.hpp"

#include <array>
#include <cstdio>
#include <mutex>

namespace dclr {

namespace events {

namespace {
std::array<std::atomic<std::uint64_t>, kKindCount> g_counts{};
std::array<std::atomic<bool>, kKindCount> g_printed{};
std::mutex g_print_mutex;

const char* kind_name(Kind k) {
  switch (k) {
    case kWeightedPoolZeroWeights: return "weighted_pool_zero_weights";
    case kRetrievalEmpty: return "retrieval_empty";
    case kPriorWeightsUniformFallback: return "prior_weights_uniform_fallback";
    case kShortVideoFewerClips: return "short_video_fewer_clips";
    case kRecallKClamped: return "recall_k_clamped";
    default: return "unknown";
  }
}
}  // namespace

std::uint64_t count(Kind k) { return g_counts[k].load(); }

void record(Kind k, const std::string& detail) {
  g_counts[k].fetch_add(1);
  bool expected = false;
  if (g_printed[k].compare_exchange_strong(expected, true)) {
    std::lock_guard<std::mutex> lock(g_print_mutex);
    std::fprintf(stderr, "[warn] %s: %s (further events of this kind counted silently)\n",
                 kind_name(k), detail.c_str());
  }
}

void reset_all() {
  for (auto& c : g_counts) c.store(0);
  for (auto& p : g_printed) p.store(false);
}

}  // namespace events

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace dclr
