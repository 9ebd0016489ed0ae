#pragma once

#include <cstddef>

namespace tdesign {

/// Execution policy for the verifier kernels.  Both variants fill one output
/// slot per work item, so results are bit-identical; `serial` is the
/// reference the parallel kernel is tested against.
enum class Exec { serial, openmp };

template <typename Body>
void for_each_index(std::size_t count, Exec exec, const Body& body) {
    if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace tdesign
