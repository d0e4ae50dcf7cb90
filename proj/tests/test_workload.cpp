#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cloudletsim/errors.hpp"
#include "cloudletsim/rng.hpp"
#include "cloudletsim/workload.hpp"

using namespace cloudletsim;

namespace {

TraceTable trace_from(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in, "test");
}

}  // namespace

TEST_CASE("trace rows parse directly") {
  const TraceTable t = trace_from(
      "avatar_id,slot,u_cpu,u_mem,u_disk\n"
      "0,0,0.5,0.5,0.2\n");
  CHECK(t.num_avatars() == 1);
  CHECK(t.at(0, 0).u_cpu == 0.5);
  CHECK(t.at(0, 0).u_mem == 0.5);
  CHECK(t.at(0, 0).u_disk == 0.2);
}

TEST_CASE("short traces wrap cyclically") {
  std::string text = "avatar_id,slot,u_cpu,u_mem,u_disk\n";
  for (int s = 0; s < 10; ++s)
    text += "0," + std::to_string(s) + ",0." + std::to_string(s) + ",0.5,0.5\n";
  const TraceTable t = trace_from(text);
  CHECK(t.at(0, 25).u_cpu == t.at(0, 5).u_cpu);
  CHECK(t.at(0, 25).u_cpu == 0.5);
  // avatar ids wrap by table size as well
  CHECK(t.at(3, 2).u_cpu == t.at(0, 2).u_cpu);
}

TEST_CASE("trace validation errors") {
  CHECK_THROWS_AS(trace_from(""), TraceError);
  CHECK_THROWS_AS(trace_from("avatar_id,slot,u_cpu,u_mem,u_disk\n"), TraceError);
  CHECK_THROWS_AS(trace_from("bogus header\n0,0,0.1,0.1,0.1\n"), TraceError);
  // utilization outside [0,1]
  CHECK_THROWS_AS(
      trace_from("avatar_id,slot,u_cpu,u_mem,u_disk\n0,0,1.5,0.1,0.1\n"),
      TraceError);
  CHECK_THROWS_AS(load_trace("/nonexistent/trace.csv"), TraceError);
}

TEST_CASE("malformed rows report their line number") {
  try {
    trace_from("avatar_id,slot,u_cpu,u_mem,u_disk\n0,0,0.1,0.1,0.1\n0,1,oops,0.1,0.1\n");
    CHECK(false);
  } catch (const TraceError& e) {
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
}

TEST_CASE("bandwidth utilization: degenerate and exact cases") {
  Rng rng(1);
  CHECK(sample_bandwidth_util(rng, 0.0, 0.0, 500.0) == 0.0);
  // mu = 350 Mbps on a 500 Mbps port
  CHECK(sample_bandwidth_util(rng, 350.0, 0.0, 500.0) == doctest::Approx(0.7));
}

TEST_CASE("bandwidth demand obeys the law of large numbers") {
  Rng rng(7);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i)
    sum += sample_bandwidth_util(rng, 250.0, 10.0, 500.0) * 500.0;
  const double mean = sum / n;
  CHECK(mean >= 248.0);
  CHECK(mean <= 252.0);
}

TEST_CASE("bandwidth utilization is always a fraction") {
  Rng rng(8);
  for (int i = 0; i < 10000; ++i) {
    const double u = sample_bandwidth_util(rng, 350.0, 200.0, 500.0);
    CHECK(u >= 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("dirty rate sampling") {
  Rng rng(9);
  CHECK(sample_dirty_rate(rng, 0.0) == 0.0);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double d = sample_dirty_rate(rng, 10000.0);
    CHECK(d >= 0.0);
    CHECK(d <= 10000.0);
    sum += d;
  }
  const double mean = sum / n;
  CHECK(mean >= 4900.0);
  CHECK(mean <= 5100.0);
}

TEST_CASE("dirty rate unit conversion") {
  CHECK(dirty_rate_bits_per_s(0.0, 32768.0, 300.0) == 0.0);
  CHECK(dirty_rate_bits_per_s(10000.0, 32768.0, 300.0) ==
        doctest::Approx(1.0922666667e6).epsilon(1e-9));
  // halving the slot doubles the rate
  CHECK(dirty_rate_bits_per_s(123.0, 32768.0, 150.0) ==
        doctest::Approx(2.0 * dirty_rate_bits_per_s(123.0, 32768.0, 300.0))
            .epsilon(1e-15));
}

TEST_CASE("workload model emits identically shaped records for both sources") {
  WorkloadParams params;
  Rng setup_a(11), setup_b(11);
  const WorkloadModel synthetic(params, 4, setup_a);
  const WorkloadModel traced(params, 4, setup_b,
                             trace_from("avatar_id,slot,u_cpu,u_mem,u_disk\n"
                                        "0,0,0.25,0.5,0.75\n"
                                        "1,0,0.1,0.2,0.3\n"));
  Rng draw_a(12), draw_b(12);
  const AvatarWorkload s = synthetic.sample(2, 5, draw_a);
  const AvatarWorkload t = traced.sample(2, 5, draw_b);
  // trace supplies cpu/mem/disk; bandwidth and dirtying stay synthetic
  CHECK(t.u_cpu == 0.25);
  CHECK(t.u_mem == 0.5);
  CHECK(t.u_disk == 0.75);
  CHECK(t.bw_mu_mbps == s.bw_mu_mbps);
  for (const AvatarWorkload& w : {s, t}) {
    CHECK(w.u_cpu >= 0.0);
    CHECK(w.u_cpu <= 1.0);
    CHECK(w.u_mem >= 0.0);
    CHECK(w.u_mem <= 1.0);
    CHECK(w.u_disk >= 0.0);
    CHECK(w.u_disk <= 1.0);
    CHECK(w.u_net >= 0.0);
    CHECK(w.u_net <= 1.0);
    CHECK(w.dirty_rate_pages_per_slot >= 0.0);
    CHECK(w.dirty_rate_pages_per_slot <= params.dirty_max_pages);
  }
}

TEST_CASE("workload sequences are reproducible under a fixed seed") {
  WorkloadParams params;
  Rng setup_a(3), setup_b(3);
  const WorkloadModel a(params, 8, setup_a);
  const WorkloadModel b(params, 8, setup_b);
  Rng draw_a(4), draw_b(4);
  for (int t = 0; t < 50; ++t) {
    for (int i = 0; i < 8; ++i) {
      const AvatarWorkload wa = a.sample(i, t, draw_a);
      const AvatarWorkload wb = b.sample(i, t, draw_b);
      CHECK(wa.u_mem == wb.u_mem);
      CHECK(wa.u_net == wb.u_net);
      CHECK(wa.dirty_rate_pages_per_slot == wb.dirty_rate_pages_per_slot);
    }
  }
}

TEST_CASE("fixed dirty mode keeps each avatar's rate constant across slots") {
  WorkloadParams params;
  params.dirty_rate_mode = DirtyRateMode::kFixed;
  Rng setup(5);
  const WorkloadModel model(params, 3, setup);
  Rng draw(6);
  const double d0 = model.sample(1, 0, draw).dirty_rate_pages_per_slot;
  for (int t = 1; t < 20; ++t)
    CHECK(model.sample(1, t, draw).dirty_rate_pages_per_slot == d0);
}

TEST_CASE("per-avatar bandwidth parameters sit in the configured ranges") {
  WorkloadParams params;
  Rng setup(21);
  const WorkloadModel model(params, 200, setup);
  for (int i = 0; i < 200; ++i) {
    CHECK(model.bw_mu_mbps(i) >= 0.0);
    CHECK(model.bw_mu_mbps(i) <= 350.0);
    CHECK(model.bw_sigma(i) >= 0.0);
    CHECK(model.bw_sigma(i) <= 10.0);  // sqrt of variance in [0, 100]
  }
}
