#pragma once

namespace webgram {

// Selects the OpenMP kernel or the single-threaded path of the same routine.
enum class Exec { serial, parallel };

}  // namespace webgram
