#pragma once

#include <cstdint>
#include <functional>

namespace periodviz {

// Worker count resolution: explicit request > PERIODVIZ_THREADS > hardware.
// Always at least 1.
unsigned resolve_thread_count(unsigned requested);

// Splits [begin, end) into at most `threads` contiguous chunks and runs
// `body(chunk_index, lo, hi)` on each, joining before returning. Callers keep
// determinism by writing results into positions derived from the element
// index, never from the chunk or thread identity. Runs inline when the range
// is small or a single thread is requested.
void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body);

}  // namespace periodviz
