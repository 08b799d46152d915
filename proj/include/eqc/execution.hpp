#pragma once

namespace eqc {

/// Selects the OpenMP kernels or a single-threaded run of the same code.
enum class Execution { Serial, Parallel };

}  // namespace eqc
