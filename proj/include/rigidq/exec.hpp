#pragma once

namespace rigidq {

// Execution policy for the data-parallel kernels. `serial` is the reference
// path; `parallel` distributes the outer loop with OpenMP and must produce
// identical results.
enum class Exec { serial, parallel };

// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace rigidq
