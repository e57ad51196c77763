// Compares the serial census kernel against the OpenMP one and checks that
// both produce byte-identical reports.

#include "chaingroup/report.hpp"

#include <cstdlib>
#include <iostream>

#include <omp.h>

using namespace chaingroup;

int main(int argc, char **argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : census_limit();
    const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
    if (max_n < 1 || max_n > census_limit()) {
        std::cerr << "usage: bench_census [max_n <= " << census_limit() << "] [threads]\n";
        return 2;
    }

    std::cout << "n\tforests\tserial_s\tparallel_s(x" << threads << ")\tspeedup\tidentical\n";
    for (int n = std::max(1, max_n - 2); n <= max_n; ++n) {
        double t0 = omp_get_wtime();
        const CensusReport serial = run_census_serial(n);
        double t1 = omp_get_wtime();
        const CensusReport parallel = run_census(n, threads);
        double t2 = omp_get_wtime();

        const ReportMeta meta{kDefaultSeed, census_limit()};
        const bool identical =
            render_census(serial, OutputFormat::Json, meta) == render_census(parallel, OutputFormat::Json, meta);
        const double serial_s = t1 - t0;
        const double parallel_s = t2 - t1;
        std::cout << n << '\t' << serial.total << '\t' << serial_s << '\t' << parallel_s << '\t'
                  << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << '\t' << (identical ? "yes" : "NO")
                  << '\n';
        if (!identical) {
            std::cerr << "serial and parallel census reports differ at n=" << n << '\n';
            return 1;
        }
    }
    return 0;
}
