#include "gcs/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace gcs {

bool CheckList::add(const std::string& label, double residual, double tol) {
  const bool ok = residual <= tol;  // NaN fails
  checks_.push_back({label, residual, tol, ok, false});
  above_.push_back(false);
  if (!ok && first_failure_.empty()) first_failure_ = label;
  return ok;
}

bool CheckList::add_above(const std::string& label, double residual, double threshold) {
  const bool ok = residual > threshold;
  checks_.push_back({label, residual, threshold, ok, false});
  above_.push_back(true);
  if (!ok && first_failure_.empty()) first_failure_ = label;
  return ok;
}

void CheckList::add(const NamedCheck& c) {
  checks_.push_back(c);
  above_.push_back(false);
  if (!c.informational && !c.pass && first_failure_.empty()) first_failure_ = c.label;
}

void CheckList::merge(const CheckList& other, const std::string& prefix) {
  for (std::size_t k = 0; k < other.checks_.size(); ++k) {
    NamedCheck c = other.checks_[k];
    c.label = prefix + c.label;
    checks_.push_back(c);
    above_.push_back(other.above_[k]);
    if (!c.informational && !c.pass && first_failure_.empty()) first_failure_ = c.label;
  }
}

double CheckList::max_residual() const {
  double m = 0;
  for (std::size_t k = 0; k < checks_.size(); ++k)
    if (!above_[k] && !checks_[k].informational) m = std::max(m, checks_[k].residual);
  return m;
}

Json CheckList::to_json() const {
  Json arr = Json::array();
  for (std::size_t k = 0; k < checks_.size(); ++k) {
    const auto& c = checks_[k];
    Json j;
    j["label"] = c.label;
    j["residual"] = c.residual;
    j[above_[k] ? "must_exceed" : "tol"] = c.tol;
    j["pass"] = c.pass;
    if (c.informational) j["informational"] = true;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::size_t thread_count() {
  if (const char* env = std::getenv("GCS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::size_t(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex m;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(m);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("timing");
    for (auto it = j.begin(); it != j.end(); ++it) *it = strip_timing(*it);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace gcs
