#include "parity/analysis.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace parity {

double asymptotic_cancellation(double r3) {
  if (r3 < 0.0 || r3 > 1.0)
    throw std::invalid_argument("triangle ratio must lie in [0, 1]");
  // Per interior boundary, both sides are closed with matching directions
  // with probability (1 - r3/2)(1 - 3*r3/4): a closed left side needs a
  // square or one of two triangle orientations (weight 1 - r3/2), while the
  // right side must additionally match the left direction, which rules out
  // one more triangle orientation (weight 1 - 3*r3/4). Each such boundary
  // shares 2 of the naive 5(1-r3) + 3*r3 gates per cell.
  return 2.0 * (1.0 - r3 / 2.0) * (1.0 - 3.0 * r3 / 4.0) / (5.0 - 2.0 * r3);
}

int squares_cancelled(int n_cols, int n_rows) {
  return 2 * (n_rows - 1) * (n_cols - 2);
}

int squares_cancelled_reported(int n_cols, int n_rows) {
  return 2 * (n_rows - 1) * (n_cols - 1);
}

int staircase_cancelled(int n_logical) {
  return (n_logical - 2) * (n_logical - 3);
}

int staircase_cancelled_reported(int n_logical) {
  return 2 * (n_logical - 2) * (n_logical - 3);
}

int squares_cnot_rz_reported(int n) {
  int nc = (n - 1) * (n - 1);
  return 4 * nc + (n - 1);
}

Layout gen_adversarial(int n_constraints, double angle) {
  if (n_constraints < 3 || n_constraints % 3 != 0) {
    throw std::invalid_argument(
        "adversarial layout needs a positive multiple of 3 constraints");
  }
  int k = n_constraints / 3;
  Layout l(3 * k + 1, 2);
  for (int c = 1; c <= 3 * k; ++c) {
    switch (c % 3) {
      case 1:
        l.cell(c, 1) = Plaquette::triangle(Corner::SW, angle);
        break;
      case 2:
        l.cell(c, 1) = Plaquette::triangle(Corner::NE, angle);
        break;
      default:
        l.cell(c, 1) = Plaquette::square(angle);
        break;
    }
  }
  return l;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t sample_seed(std::uint64_t seed, int n, double r3, int index) {
  std::uint64_t s = mix_seed(seed);
  s = mix_seed(s ^ static_cast<std::uint64_t>(n));
  s = mix_seed(s ^ std::bit_cast<std::uint64_t>(r3));
  return mix_seed(s ^ static_cast<std::uint64_t>(index));
}

struct Stats {
  double mean = 0.0, stddev = 0.0;
};

Stats stats(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  return {mean, std::sqrt(var / xs.size())};
}

}  // namespace

std::vector<BenchPoint> run_bench(const BenchConfig& config) {
  struct Task {
    int point;
    int n, d, index;
    double r3;
  };
  std::vector<BenchPoint> points;
  std::vector<Task> tasks;
  for (int n : config.sizes) {
    for (double r3 : config.r3s) {
      for (int d : config.ds) {
        int point = static_cast<int>(points.size());
        points.push_back({n, r3, d, config.samples});
        for (int i = 0; i < config.samples; ++i)
          tasks.push_back({point, n, d, i, r3});
      }
    }
  }

  std::vector<CompileReport> reports(tasks.size());
  auto work = [&](const Task& t) {
    Layout l = gen_random(t.n, t.n, t.r3,
                          sample_seed(config.seed, t.n, t.r3, t.index));
    CompileOptions opt;
    opt.d = t.d;
    reports[t.point * config.samples + t.index] = compile(l, opt).report;
  };

  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (const Task& t : tasks) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
          work(tasks[i]);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<double> depths, counts, cancels;
    for (int i = 0; i < config.samples; ++i) {
      const CompileReport& r = reports[p * config.samples + i];
      depths.push_back(r.depth);
      counts.push_back(r.two_qubit_count);
      cancels.push_back(r.cancellation_rate);
    }
    Stats sd = stats(depths), sc = stats(counts), sr = stats(cancels);
    points[p].depth_mean = sd.mean;
    points[p].depth_std = sd.stddev;
    points[p].count_mean = sc.mean;
    points[p].count_std = sc.stddev;
    points[p].cancel_mean = sr.mean;
    points[p].cancel_std = sr.stddev;
  }
  return points;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchPoint>& points) {
  os << "n,r3,d,samples,depth_mean,depth_std,count_mean,count_std,"
        "cancel_mean,cancel_std\n";
  for (const BenchPoint& p : points) {
    os << p.n << ',' << p.r3 << ',' << p.d << ',' << p.samples << ','
       << p.depth_mean << ',' << p.depth_std << ',' << p.count_mean << ','
       << p.count_std << ',' << p.cancel_mean << ',' << p.cancel_std << '\n';
  }
}

}  // namespace parity
