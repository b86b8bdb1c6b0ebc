#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "matroid_id/cert/certify.hpp"

namespace matroid_id::campaign {

enum class Mode { Exact, SZ };

struct Options {
  Mode mode = Mode::Exact;
  Rational epsilon = parse_rational("1e-10");
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_size;
  SizeSampling sizes = SizeSampling::Walk;
};

// splitmix64 finaliser.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-case seed from the master seed and the canonical case text (FNV-1a),
// so results do not depend on scheduling.
inline std::uint64_t case_seed(std::uint64_t master, const CaseDescriptor& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_string(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return mix64(master ^ mix64(h));
}

struct Outcome {
  CaseDescriptor id;
  SearchResult result;
  std::size_t left_dim = 0, right_dim = 0;
  std::string error;  // nonempty if the case could not be run
};

inline Outcome run_case(const CaseDescriptor& id, const Options& opt) {
  Outcome out{id, {}, 0, 0, {}};
  try {
    ExactModel m1(build_parameterization(id.kind, id.left));
    ExactModel m2(build_parameterization(id.kind, id.right));
    if (m1.param.coordinates != m2.param.coordinates) throw DataError("the two models use different coordinates");
    out.left_dim = model_dimension(m1.jacobian);
    out.right_dim = model_dimension(m2.jacobian);
    SearchOptions o;
    o.trials = opt.trials;
    o.seed = case_seed(opt.seed, id);
    o.same_dim = out.left_dim == out.right_dim;
    o.max_size = opt.max_size;
    o.sizes = opt.sizes;
    if (opt.mode == Mode::Exact) {
      out.result = certify_exact(m1, m2, o);
    } else {
      const PolyMatrix J1 = phylo::jacobian(m1.param), J2 = phylo::jacobian(m2.param);
      const SZConfig cfg = SZConfig::make(certification_alpha(J1, J2, o), opt.epsilon);
      out.result = certify_sz(J1, J2, cfg, o);
    }
    if (out.result.certificate) {
      Certificate& c = *out.result.certificate;
      c.case_id = id;
      for (std::size_t j : c.subset) c.labels.push_back(m1.param.coordinates[j]);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// Runs every case on `jobs` workers. `deliver` is called from the calling
// thread only, in case order, as soon as each prefix of results is complete.
inline void run_all(const std::vector<CaseDescriptor>& cases, const Options& opt, unsigned jobs,
                    const std::function<void(std::size_t, const Outcome&)>& deliver) {
  jobs = std::max(1u, jobs);
  std::vector<std::optional<Outcome>> done(cases.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      Outcome o = run_case(cases[i], opt);
      {
        std::lock_guard lock(mu);
        done[i] = std::move(o);
      }
      cv.notify_one();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return done[i].has_value(); });
    Outcome o = std::move(*done[i]);
    done[i].reset();
    lock.unlock();
    deliver(i, o);
  }
}

}  // namespace matroid_id::campaign
