#pragma once

namespace ermult {

// Kernel execution mode.  The serial path is the reference implementation;
// the parallel path uses OpenMP worksharing and must produce identical
// results regardless of schedule (tests compare the two).  Without OpenMP
// support the parallel mode falls back to serial.
enum class ExecMode { serial, parallel };

int hardware_threads();

}  // namespace ermult
