#pragma once

// Data-parallel loops of the verification oracle. Every kernel has a plain
// serial version, kept as the reference the OpenMP version is tested against.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "schubert/exactla.hpp"

namespace schubert {

enum class Exec { Serial, Parallel };

namespace kernels {

using KeySet = std::unordered_set<std::string>;

namespace serial {

/// Keys of transform(P) for the enumerated P with keep(P).
template <class Keep, class Transform>
KeySet collect(const GrassmannianEnumerator& g, Keep keep, Transform transform) {
    KeySet out;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        const Subspace p = g.at(i);
        if (keep(p)) out.insert(transform(p).key());
    }
    return out;
}

/// Number of indices in [0, n) with pred(i).
template <class Pred>
std::uint64_t count(std::uint64_t n, Pred pred) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) ++hits;
    return hits;
}

/// Smallest index in [0, n) with pred(i), if any.
template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, Pred pred) {
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

}  // namespace serial

namespace parallel {

template <class Keep, class Transform>
KeySet collect(const GrassmannianEnumerator& g, Keep keep, Transform transform) {
    KeySet out;
    const auto n = static_cast<std::int64_t>(g.size());
#pragma omp parallel
    {
        std::vector<std::string> local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const Subspace p = g.at(static_cast<std::uint64_t>(i));
            if (keep(p)) local.push_back(transform(p).key());
        }
#pragma omp critical(schubert_collect_merge)
        out.insert(local.begin(), local.end());
    }
    return out;
}

template <class Pred>
std::uint64_t count(std::uint64_t n, Pred pred) {
    std::uint64_t hits = 0;
    const auto len = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits)
    for (std::int64_t i = 0; i < len; ++i)
        if (pred(static_cast<std::uint64_t>(i))) ++hits;
    return hits;
}

template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t n, Pred pred) {
    std::uint64_t first = n;
    const auto len = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first)
    for (std::int64_t i = 0; i < len; ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        if (u < first && pred(u)) first = u;
    }
    if (first == n) return std::nullopt;
    return first;
}

}  // namespace parallel

template <class Keep, class Transform>
KeySet collect(Exec exec, const GrassmannianEnumerator& g, Keep keep, Transform transform) {
    return exec == Exec::Serial ? serial::collect(g, keep, transform)
                                : parallel::collect(g, keep, transform);
}

template <class Pred>
std::uint64_t count(Exec exec, std::uint64_t n, Pred pred) {
    return exec == Exec::Serial ? serial::count(n, pred) : parallel::count(n, pred);
}

template <class Pred>
std::optional<std::uint64_t> find_first(Exec exec, std::uint64_t n, Pred pred) {
    return exec == Exec::Serial ? serial::find_first(n, pred) : parallel::find_first(n, pred);
}

}  // namespace kernels

/// Worker threads the parallel kernels will use.
inline int kernel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace schubert
