// Benchmark: serial reference vs OpenMP census kernels, with a result
// equality check so the two paths cannot drift apart.

#include <cstdio>
#include <string>

#include "toric/atlas.hpp"

using namespace toric;

namespace {

bool same_report(const CensusReport& a, const CensusReport& b) {
    if (a.rows.size() != b.rows.size() || a.records.size() != b.records.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i].total != b.rows[i].total || a.rows[i].connected != b.rows[i].connected ||
            a.rows[i].fano != b.rows[i].fano ||
            a.rows[i].connected_fano != b.rows[i].connected_fano)
            return false;
    }
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        if (!(a.records[i].form == b.records[i].form) ||
            a.records[i].fano_by_criterion != b.records[i].fano_by_criterion ||
            a.records[i].wall_numbers != b.records[i].wall_numbers)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int size = 5;
    if (argc > 1) size = std::stoi(argv[1]);

    std::printf("census up to ground size %d\n", size);
#ifdef _OPENMP
    std::printf("OpenMP enabled (max threads %d)\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both runs are serial\n");
#endif

    CensusReport serial = classify_fano(size, RunMode::serial);
    std::printf("  classify serial   %8.3f s  (%zu records)\n", serial.seconds,
                serial.records.size());
    CensusReport parallel = classify_fano(size, RunMode::parallel);
    std::printf("  classify parallel %8.3f s  speedup %.2fx\n", parallel.seconds,
                parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0);
    if (!same_report(serial, parallel)) {
        std::printf("MISMATCH between serial and parallel census\n");
        return 1;
    }

    CensusReport t2_serial = verify_realization(size, RunMode::serial);
    std::printf("  realization serial   %8.3f s  (%zu records)\n", t2_serial.seconds,
                t2_serial.records.size());
    CensusReport t2_parallel = verify_realization(size, RunMode::parallel);
    std::printf("  realization parallel %8.3f s  speedup %.2fx\n", t2_parallel.seconds,
                t2_parallel.seconds > 0 ? t2_serial.seconds / t2_parallel.seconds : 0.0);
    if (!same_report(t2_serial, t2_parallel)) {
        std::printf("MISMATCH between serial and parallel realization runs\n");
        return 1;
    }

    std::printf("serial and parallel reports identical\n");
    return 0;
}
