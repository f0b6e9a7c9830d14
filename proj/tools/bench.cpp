#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "jamllr/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Times the serial reference kernel against the OpenMP one on the same
// workload and checks that both produce identical statistics.

int main(int argc, char** argv) {
    using namespace jamllr;

    CLI::App app{"serial vs OpenMP harness benchmark"};
    std::uint64_t trials = 2000;
    double sinr_db = 0.0;
    int threads = 0;
    app.add_option("--trials", trials, "frames to simulate");
    app.add_option("--sinr", sinr_db, "jammer SINR in dB");
    app.add_option("--threads", threads, "OpenMP threads for the parallel run (0 = all)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ExperimentConfig cfg;
        cfg.code = CodeKind::rlc;
        cfg.strategy = LlrStrategy::anchored;
        cfg.trials = trials;
        cfg.target_block_errors = 0;
        cfg.max_queries = 100000;
        cfg.master_seed = 7;
        cfg.validate();

        LinearCode code = build_code(cfg);

        SweepRow serial = run_bler_point_serial(cfg, code, sinr_db);
        std::printf("serial:   %8llu trials  %.3f s  %.1f frames/s  bler=%.4g\n",
                    static_cast<unsigned long long>(serial.trials), serial.wall_seconds,
                    serial.trials / serial.wall_seconds, serial.bler);

        cfg.threads = threads;
        SweepRow parallel = run_bler_point(cfg, code, sinr_db);
        int used = 1;
#ifdef _OPENMP
        used = threads > 0 ? threads : omp_get_max_threads();
#endif
        std::printf("openmp:   %8llu trials  %.3f s  %.1f frames/s  bler=%.4g  (%d threads)\n",
                    static_cast<unsigned long long>(parallel.trials), parallel.wall_seconds,
                    parallel.trials / parallel.wall_seconds, parallel.bler, used);
        std::printf("speedup:  %.2fx\n", serial.wall_seconds / parallel.wall_seconds);

        bool same = serial.trials == parallel.trials &&
                    serial.block_errors == parallel.block_errors && serial.bler == parallel.bler &&
                    serial.mean_queries == parallel.mean_queries &&
                    serial.abandonment_rate == parallel.abandonment_rate;
        std::printf("results identical: %s\n", same ? "yes" : "NO");
        return same ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
