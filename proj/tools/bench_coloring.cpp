// Benchmark: serial reference kernel vs the OpenMP kernel on the same
// enumeration plans.  Counts must agree exactly; the speedup column is the
// point of the exercise.
//
//   bench_coloring [--p 3] [--reps 3] [--threads N]

#include <chrono>
#include <cstring>
#include <iostream>

#include "skewrack/coloring.hpp"
#include "skewrack/constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace skewrack;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Case {
    std::string name;
    FramedBraid braid;
};

} // namespace

int main(int argc, char** argv) {
    int p = 3, reps = 3, threads = 0;
    for (int i = 1; i < argc; ++i) {
        auto next = [&](const char* what) {
            if (i + 1 >= argc) { std::cerr << "missing value for " << what << "\n"; exit(2); }
            return std::atoi(argv[++i]);
        };
        if (!std::strcmp(argv[i], "--p")) p = next("--p");
        else if (!std::strcmp(argv[i], "--reps")) reps = next("--reps");
        else if (!std::strcmp(argv[i], "--threads")) threads = next("--threads");
        else { std::cerr << "usage: bench_coloring [--p P] [--reps R] [--threads N]\n"; return 2; }
    }
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
    std::cerr << "openmp threads: " << (threads > 0 ? threads : omp_get_max_threads()) << "\n";
#else
    std::cerr << "built without OpenMP; parallel column degenerates to serial\n";
#endif

    FiniteGroup K = build_sl2p(p);
    SkewRack X = product_rack(K, identity_hom(K));
    std::cerr << "rack: product of SL2(F_" << p << "), |X| = " << X.size() << "\n";

    std::vector<Case> cases = {
        {"torus(2,3) framing +1", build_torus2(3, +1)},
        {"torus(2,3) framing -1", build_torus2(3, -1)},
        {"torus(2,5) framing +1", build_torus2(5, +1)},
    };

    std::cout << "case,count,serial_s,parallel_s,speedup\n";
    for (const auto& c : cases) {
        ScanOptions ser;
        ser.parallel = false;
        double ts = 0, tp = 0;
        long long ns = 0, np = 0;
        for (int r = 0; r < reps; ++r) {
            auto t0 = Clock::now();
            ns = count_colorings_serial(X, c.braid, ser);
            ts += seconds_since(t0);
            t0 = Clock::now();
            np = count_colorings(X, c.braid);
            tp += seconds_since(t0);
        }
        if (ns != np) {
            std::cerr << "MISMATCH on " << c.name << ": serial " << ns << " parallel " << np
                      << "\n";
            return 1;
        }
        ts /= reps;
        tp /= reps;
        std::cout << c.name << "," << ns << "," << ts << "," << tp << "," << (ts / tp) << "\n";
    }
    return 0;
}
