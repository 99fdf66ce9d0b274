// Compares the OpenMP kernels against the serial reference paths and checks
// they produce identical results.  Build and run manually:
//   cmake --build build && ./build/bench/bench_parallel [--quick]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "cartanlab/ball.hpp"
#include "cartanlab/properness.hpp"
#include "cartanlab/sampling.hpp"

using namespace cartanlab;

namespace {

double now_ms() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
               .count() /
           1000.0;
}

template <class Fn>
double timed(Fn&& fn) {
    const double t0 = now_ms();
    fn();
    return now_ms() - t0;
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-44s %9.1f ms %9.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

template <class Elem>
bool same_ball(const Ball<Elem>& a, const Ball<Elem>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.entries()[i].key != b.entries()[i].key || !(a.entries()[i].word == b.entries()[i].word)) return false;
    }
    return true;
}

bool same_rows(const std::vector<ReportRow>& a, const std::vector<ReportRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].key != b[i].key || a[i].mu_text != b[i].mu_text || a[i].norm != b[i].norm ||
            a[i].margin != b[i].margin || !(a[i].label == b[i].label)) {
            return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const int sanov_radius = quick ? 7 : 8;
    const int pair_radius = quick ? 3 : 4;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-44s %12s %12s %7s\n", "kernel", "serial", "openmp", "speedup");

    const auto sanov = sanov_generator_set(FieldDescriptor::padic(2));
    const EnumConfig cfg_serial{sanov_radius, 2000000, false};
    const EnumConfig cfg_parallel{sanov_radius, 2000000, true};

    Ball<MatrixQ> ball_s = generate_ball_serial(sanov, cfg_serial);
    Ball<MatrixQ> ball_p = ball_s;
    {
        const double ts = timed([&] { ball_s = generate_ball_serial(sanov, cfg_serial); });
        const double tp = timed([&] { ball_p = generate_ball(sanov, cfg_parallel); });
        report(("free-ball enumeration, radius " + std::to_string(sanov_radius)).c_str(), ts, tp,
               same_ball(ball_s, ball_p));
    }

    {
        std::vector<long long> ns;
        for (long long n = 1; n <= 10; ++n) ns.push_back(n);
        const auto pairs = torsion_pair_group(2, standard_torsion_pairs(ns));
        const EnumConfig pc_serial{pair_radius, 2000000, false};
        const EnumConfig pc_parallel{pair_radius, 2000000, true};
        Ball<PairElem<LaurentPoly>> bs = generate_ball_serial(pairs, pc_serial);
        Ball<PairElem<LaurentPoly>> bp = bs;
        const double ts = timed([&] { bs = generate_ball_serial(pairs, pc_serial); });
        const double tp = timed([&] { bp = generate_ball(pairs, pc_parallel); });
        report(("pair-ball enumeration, radius " + std::to_string(pair_radius)).c_str(), ts, tp, same_ball(bs, bp));

        const Scenario s = Scenario::double_rank_one();
        std::vector<ReportRow> rs, rp;
        const double ms = timed([&] { rs = make_report_rows(bs, pairs.field, s, false); });
        const double mp = timed([&] { rp = make_report_rows(bs, pairs.field, s, true); });
        report("pair mu map (laurent smith reduction)", ms, mp, same_rows(rs, rp));
    }

    {
        const Scenario s = Scenario::sl_mod_sl(2);
        std::vector<ReportRow> rs, rp;
        const auto padic = FieldDescriptor::padic(2);
        const double ms = timed([&] { rs = make_report_rows(ball_s, padic, s, false); });
        const double mp = timed([&] { rp = make_report_rows(ball_s, padic, s, true); });
        report("mu map over the free ball (padic smith)", ms, mp, same_rows(rs, rp));
    }

    {
        const Scenario s = Scenario::sl_mod_sl(2);
        std::vector<ReportRow> rs, rp;
        const auto real = FieldDescriptor::real();
        const double ms = timed([&] { rs = make_report_rows(ball_s, real, s, false); });
        const double mp = timed([&] { rp = make_report_rows(ball_s, real, s, true); });
        report("mu map over the free ball (jacobi)", ms, mp, same_rows(rs, rp));
    }

    return 0;
}
