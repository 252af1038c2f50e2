#include "collatz/scan.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace collatz {

namespace {
using u64 = std::uint64_t;
using nlohmann::json;

struct WindowPlan {
  Nat start;
  Nat end;
};

std::vector<WindowPlan> plan_windows(const Nat& lo, const Nat& hi,
                                     u64 window) {
  if (lo.is_zero()) throw std::domain_error("scan: range must start at >= 1");
  if (hi < lo) throw std::domain_error("scan: lo must not exceed hi");
  if (window == 0) throw std::domain_error("scan: window must be >= 1");
  std::vector<WindowPlan> plan;
  Nat k = (lo - 1).divmod_u64(window).first;
  Nat win_start = k * window + 1;
  while (win_start <= hi) {
    Nat win_end = win_start + (window - 1);
    plan.push_back(WindowPlan{win_start, win_end});
    win_start = std::move(win_end);
    win_start += 1;
    if (plan.size() > 10'000'000)
      throw std::domain_error("scan: too many windows for one run");
  }
  return plan;
}

json window_record(const WindowScan& ws) {
  json forms = json::array();
  for (const auto& f : ws.forms) {
    forms.push_back(
        json::array({f.offset.to_decimal(), f.even_steps, f.stopping_time}));
  }
  json unresolved = json::array();
  for (const auto& u : ws.unresolved) unresolved.push_back(u.to_decimal());
  json rec = {{"window_start", ws.window_start.to_decimal()},
              {"principal_count", ws.forms.size()},
              {"forms", std::move(forms)}};
  if (!unresolved.empty()) rec["unresolved"] = std::move(unresolved);
  return rec;
}

WindowScan record_to_window(const json& rec, u64 window) {
  WindowScan ws;
  ws.window_start = Nat::from_decimal(rec.at("window_start").get<std::string>());
  ws.window_end = ws.window_start + (window - 1);
  for (const auto& entry : rec.at("forms")) {
    PrincipalForm f;
    f.offset = Nat::from_decimal(entry.at(0).get<std::string>());
    f.even_steps = entry.at(1).get<u64>();
    f.stopping_time = entry.at(2).get<u64>();
    f.base = Nat::pow2(f.even_steps);
    ws.forms.push_back(std::move(f));
  }
  if (rec.contains("unresolved")) {
    for (const auto& u : rec.at("unresolved"))
      ws.unresolved.push_back(Nat::from_decimal(u.get<std::string>()));
  }
  if (rec.at("principal_count").get<u64>() != ws.forms.size())
    throw CheckpointMismatch("checkpoint record count disagrees with forms");
  return ws;
}

struct CheckpointState {
  bool has_header = false;
  std::map<std::string, json> completed;  // keyed by window_start (decimal)
};

CheckpointState load_checkpoint(const std::string& path,
                                const ScanOptions& opts) {
  CheckpointState state;
  std::ifstream in(path);
  if (!in) return state;  // nothing to resume
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded())
      throw CheckpointMismatch("checkpoint contains a malformed record");
    if (!state.has_header) {
      if (rec.value("lo", "") != opts.lo.to_decimal() ||
          rec.value("hi", "") != opts.hi.to_decimal() ||
          rec.value("window", u64{0}) != opts.window) {
        throw CheckpointMismatch(
            "checkpoint header does not match the requested scan");
      }
      state.has_header = true;
      continue;
    }
    std::string key = rec.at("window_start").get<std::string>();
    state.completed[key] = std::move(rec);
  }
  return state;
}
}  // namespace

ScanResult run_scan(const ScanOptions& opts) {
  const auto plan = plan_windows(opts.lo, opts.hi, opts.window);

  CheckpointState state;
  if (!opts.checkpoint_path.empty() && opts.resume)
    state = load_checkpoint(opts.checkpoint_path, opts);
  auto& completed = state.completed;

  std::ofstream ckpt;
  if (!opts.checkpoint_path.empty()) {
    // Resume appends; a fresh scan truncates and writes a new header.
    ckpt.open(opts.checkpoint_path,
              opts.resume ? std::ios::app : std::ios::trunc);
    if (!ckpt)
      throw std::runtime_error("cannot open checkpoint file: " +
                               opts.checkpoint_path);
    if (!state.has_header) {
      json header = {{"lo", opts.lo.to_decimal()},
                     {"hi", opts.hi.to_decimal()},
                     {"window", opts.window}};
      ckpt << header.dump() << '\n' << std::flush;
    }
  }

  std::vector<WindowScan> results(plan.size());
  std::vector<char> done(plan.size(), 0);
  std::vector<char> from_checkpoint(plan.size(), 0);

  // Windows already in the checkpoint are replayed, not recomputed.
  for (std::size_t i = 0; i < plan.size(); ++i) {
    auto it = completed.find(plan[i].start.to_decimal());
    if (it != completed.end()) {
      results[i] = record_to_window(it->second, opts.window);
      done[i] = 1;
      from_checkpoint[i] = 1;
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= plan.size()) return;
      if (from_checkpoint[i]) continue;
      WindowScan ws = scan_window(plan[i].start, plan[i].end, opts.lo,
                                  opts.hi, opts.step_cap);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(ws);
        done[i] = 1;
      }
      cv.notify_one();
    }
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

  // Single writer: flush checkpoint records for the contiguous prefix of
  // completed windows, in window order.
  {
    std::unique_lock<std::mutex> lock(mu);
    std::size_t flushed = 0;
    while (flushed < plan.size()) {
      cv.wait(lock, [&] { return done[flushed] != 0; });
      while (flushed < plan.size() && done[flushed]) {
        if (ckpt.is_open() && !from_checkpoint[flushed])
          ckpt << window_record(results[flushed]).dump() << '\n' << std::flush;
        ++flushed;
      }
    }
  }
  for (auto& t : pool) t.join();

  ScanResult out;
  for (auto& ws : results) {
    out.windows.push_back(ScanWindowStats{ws.window_start, ws.window_end,
                                          static_cast<u64>(ws.forms.size())});
    for (auto& f : ws.forms) out.forms.push_back(std::move(f));
    for (auto& u : ws.unresolved) out.unresolved.push_back(std::move(u));
  }
  return out;
}

ScanStats compute_scan_stats(const std::vector<ScanWindowStats>& windows) {
  ScanStats st;
  st.window_count = windows.size();
  if (windows.empty()) return st;
  u64 total = 0;
  st.min = windows.front().principal_count;
  st.max = windows.front().principal_count;
  for (const auto& w : windows) {
    total += w.principal_count;
    st.min = std::min(st.min, w.principal_count);
    st.max = std::max(st.max, w.principal_count);
  }
  st.mean = static_cast<double>(total) / static_cast<double>(windows.size());
  double sq = 0.0;
  for (const auto& w : windows) {
    double d = static_cast<double>(w.principal_count) - st.mean;
    sq += d * d;
  }
  st.stddev_population =
      std::sqrt(sq / static_cast<double>(windows.size()));
  st.stddev_sample =
      windows.size() > 1
          ? std::sqrt(sq / static_cast<double>(windows.size() - 1))
          : 0.0;
  return st;
}

std::string windows_csv(const std::vector<ScanWindowStats>& windows) {
  std::string out = "window_start,window_end,principal_count\n";
  for (const auto& w : windows) {
    out += w.window_start.to_decimal();
    out += ',';
    out += w.window_end.to_decimal();
    out += ',';
    out += std::to_string(w.principal_count);
    out += '\n';
  }
  return out;
}

std::string forms_csv(const std::vector<PrincipalForm>& forms) {
  std::string out = "offset,E,stopping_time\n";
  for (const auto& f : forms) {
    out += f.offset.to_decimal();
    out += ',';
    out += std::to_string(f.even_steps);
    out += ',';
    out += std::to_string(f.stopping_time);
    out += '\n';
  }
  return out;
}

}  // namespace collatz
