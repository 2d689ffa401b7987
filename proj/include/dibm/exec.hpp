#pragma once

namespace dibm {

/// Selects between the OpenMP kernel and the serial reference loop.
/// Serial results are bitwise reproducible; parallel results agree with them
/// up to floating-point summation order.
enum class Exec { Serial, Parallel };

/// Number of threads the parallel kernels will use (1 without OpenMP).
int max_threads();

} // namespace dibm
