#pragma once

namespace fracineq {

/// Selects the OpenMP kernel or its serial reference. Both paths produce
/// bit-identical results; the serial one exists for testing and benchmarking.
enum class Execution { Serial, Parallel };

/// Thread count for parallel kernels: FRACINEQ_THREADS if set and positive,
/// otherwise the OpenMP default.
int worker_threads();

} // namespace fracineq
