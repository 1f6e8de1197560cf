#pragma once

namespace discrim {

/// Worker count used by the OpenMP kernels (1 when built without OpenMP).
[[nodiscard]] int thread_count();
void set_thread_count(int threads);

/// Applies a DISCRIM_THREADS cap from the environment, if set and valid.
void apply_thread_env();

}  // namespace discrim
